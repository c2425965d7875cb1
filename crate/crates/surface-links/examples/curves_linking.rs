//! Transverse curves in the thickened surface: generalized linking numbers,
//! the asymmetry identity, and the pairing behind the Goeritz matrix.

use surface_links::census::census;
use surface_links::curves::{lk_pair, projection_intersection, realize, ChainSpec, CurveDiagram};
use surface_links::gl::{goeritz, pairing, spine, Color};

fn main() -> surface_links::Result<()> {
    let map = census(4)
        .into_iter()
        .find(|m| {
            m.genus().unwrap() == 1
                && m.is_alternating()
                && spine(m, Color::Black).map(|s| s.beta1 >= 2).unwrap_or(false)
        })
        .expect("the 4-crossing census has alternating genus-1 diagrams");
    let black = spine(&map, Color::Black)?;
    println!("spine: {} faces, beta1 {}", black.faces.len(), black.beta1);

    // corner parity of the black class at each crossing
    let fs = map.checkerboard_coloring()?;
    let col = fs.coloring.as_ref().expect("coloring present");
    let mut face_of = vec![usize::MAX; map.n_darts()];
    for (i, f) in fs.faces.iter().enumerate() {
        for &d in f {
            face_of[d] = i;
        }
    }
    let bc = col[black.faces[0]];
    let cls_at: Vec<u8> = (0..map.n_crossings())
        .map(|c| if col[map.corner_face(c, 0, &face_of)] == bc { 0 } else { 1 })
        .collect();

    // two basis cycles, the second floated off as its positive pushoff
    let (za, zb) = (&black.cycle_basis[0], &black.cycle_basis[1]);
    let curves = realize(
        &map,
        &fs,
        &cls_at,
        &[
            ChainSpec { weights: &za.weights, transfer: false },
            ChainSpec { weights: &zb.weights, transfer: true },
        ],
    )?;
    let upper = CurveDiagram {
        components: curves[1].components.iter().step_by(2).cloned().collect(),
    };
    let (ab, ba) = lk_pair(&curves[0], &upper)?;
    let inter = projection_intersection(&curves[0], &upper)?;
    println!("lk(a,b) {ab}, lk(b,a) {ba}, intersection {inter}");
    println!("asymmetry identity holds: {}", ab - ba == inter);

    // the symmetrized pairing reproduces the Goeritz matrix
    let form = goeritz(&map, Color::Black)?;
    let mut all = true;
    for (i, zi) in black.cycle_basis.iter().enumerate() {
        for (j, zj) in black.cycle_basis.iter().enumerate() {
            let p = pairing(&map, Color::Black, zi, zj)?;
            all &= form.matrix[i][j] == p.into();
        }
    }
    println!("pairing reproduces the Goeritz matrix: {all}");
    Ok(())
}
