//! Goeritz forms of the two checkerboard surfaces: exact matrices,
//! signatures, slopes, definiteness, and the identities tying them to the
//! genus of the surface.

use num_rational::BigRational;
use surface_links::census::census;
use surface_links::gauss::{gauss_to_surface, parse_gauss};
use surface_links::gl::{
    classical_goeritz, goeritz, is_definite, sigma_invariant, spine, Color,
};
use surface_links::linalg::det;

fn show(map: &surface_links::CombMap, name: &str) -> surface_links::Result<()> {
    println!("{name}: genus {}, alternating {}", map.genus()?, map.is_alternating());
    for color in [Color::Black, Color::White] {
        let form = goeritz(map, color)?;
        println!(
            "  {color:?}: beta1 {}, sigma {}, slope {}, det {}, {:?}",
            form.beta1,
            form.sigma,
            form.slope,
            det(&form.matrix),
            is_definite(&form),
        );
        for row in &form.matrix {
            println!("    {row:?}");
        }
    }
    let (sb, sw) = (sigma_invariant(map, Color::Black)?, sigma_invariant(map, Color::White)?);
    let two_g = BigRational::from_integer((2 * map.genus()? as i64).into());
    println!("  sigma invariants: B {sb}, W {sw}; difference = 2g: {}", &sb - &sw == two_g);
    Ok(())
}

fn main() -> surface_links::Result<()> {
    let trefoil = gauss_to_surface(&parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")?)?;
    show(&trefoil, "trefoil")?;
    // on the sphere the form over one color is the classical Goeritz matrix
    // of the other color's faces
    let classic = classical_goeritz(&trefoil, Color::White)?;
    let form = goeritz(&trefoil, Color::Black)?;
    println!(
        "classical white-face matrix {:?} matches the black form: {}",
        classic,
        det(&classic) == det(&form.matrix)
    );

    // a genus-1 alternating diagram: both forms definite, opposite signs
    let genus1 = census(4)
        .into_iter()
        .find(|m| {
            m.genus().unwrap() == 1
                && m.is_alternating()
                && spine(m, Color::Black).map(|s| s.beta1 >= 2).unwrap_or(false)
        })
        .expect("the 4-crossing census has alternating genus-1 diagrams");
    show(&genus1, "alternating genus-1 diagram")?;
    Ok(())
}
