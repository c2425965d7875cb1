//! Checkerboard spines and the generalized Goeritz pairing: exact integer
//! forms, signatures, slopes and definiteness of the two checkerboard
//! surfaces of a colorable diagram.
//!
//! Conventions. The two color classes of a checkerboard coloring are
//! labeled so that `Black` is the class whose form has the larger
//! signature when the diagram is fully alternating (the positive-definite
//! side, with zero forms sorting as larger than negative ones), and the
//! class containing face 0 otherwise. At a crossing, a class occupies
//! either the corner pair {0,2} (type `+1`) or {1,3} (type `-1`); the form
//! of a class on a cycle basis `z_i` is `G[i][j] = sum_c type(c) *
//! z_i[c] * z_j[c]`. The slope of a checkerboard surface is the framing
//! `lk(L, L^)` of the link against its pushoff into the surface, which per
//! crossing contributes `+2` at a positive crossing of type `+1` and `-2`
//! at a negative crossing of type `-1`; the signature invariant of a
//! surface is `sigma(G) - slope/2`, an exact rational.

use crate::curves::{self, ChainSpec};
use crate::diagram::{CombMap, FaceStructure};
use crate::linalg;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

/// The two checkerboard colors. See the module notes for how the classes
/// of a coloring are assigned to the labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// A spine edge: the band at `crossing` joins the class's faces at the
/// corner pair `{cls, cls+2}`, oriented from corner `cls` to `cls+2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpineEdge {
    pub crossing: usize,
    pub from_face: usize,
    pub to_face: usize,
    pub cls: u8,
}

/// A cycle in a spine: a chain over the spine edges (indexed by crossing)
/// with zero boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineCurve {
    pub weights: Vec<i64>,
}

/// The spine of one checkerboard surface: its faces as vertices, one edge
/// per crossing, and a deterministic fundamental cycle basis of a spanning
/// forest. Free loops add an isolated vertex to each color, affecting
/// neither the basis nor the form; they are not listed.
#[derive(Debug, Clone)]
pub struct Spine {
    pub color: Color,
    pub faces: Vec<usize>,
    pub edges: Vec<SpineEdge>,
    pub components: usize,
    pub beta1: usize,
    pub cycle_basis: Vec<SpineCurve>,
}

/// The Goeritz form of one checkerboard surface on its cycle basis.
#[derive(Debug, Clone)]
pub struct GoeritzForm {
    pub color: Color,
    pub matrix: Vec<Vec<BigInt>>,
    pub basis: Vec<SpineCurve>,
    pub beta1: usize,
    pub sigma: i64,
    pub slope: i64,
}

/// Sign type of a symmetric form, judged from `sigma` and `beta1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    Positive,
    Negative,
    Indefinite,
    Zero,
}

/// Classify a form: zero iff empty, positive iff `sigma == beta1 > 0`,
/// negative iff `sigma == -beta1 < 0`.
pub fn is_definite(form: &GoeritzForm) -> Definiteness {
    definiteness(form.sigma, form.beta1)
}

fn definiteness(sigma: i64, beta1: usize) -> Definiteness {
    let b = beta1 as i64;
    if b == 0 {
        Definiteness::Zero
    } else if sigma == b {
        Definiteness::Positive
    } else if sigma == -b {
        Definiteness::Negative
    } else {
        Definiteness::Indefinite
    }
}

/// Everything derived from one checkerboard coloring of a map.
pub(crate) struct Checkerboards {
    pub faces: FaceStructure,
    /// Corner parity of class `k` at each crossing: the class occupies
    /// corners `{p, p+2}`.
    pub parity: [Vec<u8>; 2],
    pub signs: Vec<i8>,
    pub raw: [RawForm; 2],
    pub b_class: u8,
}

pub(crate) struct RawForm {
    pub faces: Vec<usize>,
    pub edges: Vec<SpineEdge>,
    pub components: usize,
    pub beta1: usize,
    pub basis: Vec<SpineCurve>,
    pub matrix: Vec<Vec<BigInt>>,
    pub sigma: i64,
    pub slope: i64,
}

impl Checkerboards {
    pub fn class_of(&self, color: Color) -> usize {
        match color {
            Color::Black => self.b_class as usize,
            Color::White => 1 - self.b_class as usize,
        }
    }
}

pub(crate) fn checkerboards(map: &CombMap) -> Result<Checkerboards> {
    let n = map.n_crossings();
    let faces = map.checkerboard_coloring()?;
    let mut face_of = vec![usize::MAX; map.n_darts()];
    for (i, f) in faces.faces.iter().enumerate() {
        for &d in f {
            face_of[d] = i;
        }
    }
    let col = faces.coloring.clone().expect("coloring present");
    let mut parity0 = Vec::with_capacity(n);
    for c in 0..n {
        let f = map.corner_face(c, 0, &face_of);
        parity0.push(if col[f] == 0 { 0u8 } else { 1 });
    }
    let parity1: Vec<u8> = parity0.iter().map(|p| 1 - p).collect();
    let parity = [parity0, parity1];
    let signs = crossing_signs(map)?;
    let raw = [
        raw_form(map, &faces, &face_of, &col, &parity, &signs, 0),
        raw_form(map, &faces, &face_of, &col, &parity, &signs, 1),
    ];
    let b_class = if map.is_alternating() && raw[1].sigma > raw[0].sigma { 1 } else { 0 };
    Ok(Checkerboards { faces, parity, signs, raw, b_class })
}

fn crossing_signs(map: &CombMap) -> Result<Vec<i8>> {
    let oriented;
    let m = if map.is_oriented() {
        map
    } else {
        oriented = map.clone().orient_default()?;
        &oriented
    };
    (0..m.n_crossings()).map(|c| m.crossing_sign(c)).collect()
}

fn raw_form(
    map: &CombMap,
    faces: &FaceStructure,
    face_of: &[usize],
    col: &[u8],
    parity: &[Vec<u8>; 2],
    signs: &[i8],
    class: usize,
) -> RawForm {
    let n = map.n_crossings();
    let class_faces: Vec<usize> =
        (0..faces.faces.len()).filter(|&f| col[f] == class as u8).collect();
    let mut edges = Vec::with_capacity(n);
    for c in 0..n {
        let k = parity[class][c];
        edges.push(SpineEdge {
            crossing: c,
            from_face: map.corner_face(c, k, face_of),
            to_face: map.corner_face(c, k + 2, face_of),
            cls: k,
        });
    }

    // BFS spanning forest over the class faces, edges tried in crossing
    // order; fundamental cycles of the non-tree edges form the basis
    let mut adj: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
    for &f in &class_faces {
        adj.insert(f, Vec::new());
    }
    for (ei, e) in edges.iter().enumerate() {
        adj.get_mut(&e.from_face).expect("spine endpoint in class").push(ei);
        if e.to_face != e.from_face {
            adj.get_mut(&e.to_face).expect("spine endpoint in class").push(ei);
        }
    }
    let mut parent: std::collections::BTreeMap<usize, Option<(usize, i64)>> =
        std::collections::BTreeMap::new();
    let mut in_tree = vec![false; edges.len()];
    let mut components = 0;
    for &root in &class_faces {
        if parent.contains_key(&root) {
            continue;
        }
        components += 1;
        parent.insert(root, None);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            for &ei in &adj[&f] {
                let e = &edges[ei];
                let (other, dir) = if e.from_face == f {
                    (e.to_face, 1)
                } else {
                    (e.from_face, -1)
                };
                if !parent.contains_key(&other) {
                    // dir: traversing the edge child -> parent is `-dir`
                    parent.insert(other, Some((ei, dir)));
                    in_tree[ei] = true;
                    queue.push_back(other);
                }
            }
        }
    }

    // depth for path climbing
    let mut depth: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    fn depth_of(
        f: usize,
        parent: &std::collections::BTreeMap<usize, Option<(usize, i64)>>,
        edges: &[SpineEdge],
        depth: &mut std::collections::BTreeMap<usize, usize>,
    ) -> usize {
        if let Some(&d) = depth.get(&f) {
            return d;
        }
        let d = match parent[&f] {
            None => 0,
            // dir > 0 means the edge is oriented parent -> child
            Some((ei, dir)) => {
                let e = &edges[ei];
                let p = if dir > 0 { e.from_face } else { e.to_face };
                depth_of(p, parent, edges, depth) + 1
            }
        };
        depth.insert(f, d);
        d
    }

    let mut basis = Vec::new();
    for (ei, e) in edges.iter().enumerate() {
        if in_tree[ei] {
            continue;
        }
        let mut w = vec![0i64; n];
        w[e.crossing] += 1;
        // walk from to_face and from_face up to their meeting point; the
        // cycle runs e then to_face -> from_face through the forest
        let mut a = e.to_face;
        let mut b = e.from_face;
        let mut da = depth_of(a, &parent, &edges, &mut depth);
        let mut db = depth_of(b, &parent, &edges, &mut depth);
        loop {
            if a == b {
                break;
            }
            if da >= db {
                let (pei, dir) = parent[&a].expect("non-root has a parent");
                // the cycle travels a -> parent(a), against the edge if dir > 0
                w[edges[pei].crossing] -= dir;
                a = if dir > 0 { edges[pei].from_face } else { edges[pei].to_face };
                da -= 1;
            } else {
                let (pei, dir) = parent[&b].expect("non-root has a parent");
                // the cycle travels parent(b) -> b, along the edge if dir > 0
                w[edges[pei].crossing] += dir;
                b = if dir > 0 { edges[pei].from_face } else { edges[pei].to_face };
                db -= 1;
            }
        }
        basis.push(SpineCurve { weights: w });
    }

    let beta1 = edges.len() + components - class_faces.len();
    debug_assert_eq!(basis.len(), beta1);

    let tau: Vec<i64> =
        (0..n).map(|c| if parity[class][c] == 0 { 1 } else { -1 }).collect();
    let matrix: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|zi| {
            basis
                .iter()
                .map(|zj| {
                    let v: i64 = (0..n).map(|c| tau[c] * zi.weights[c] * zj.weights[c]).sum();
                    BigInt::from(v)
                })
                .collect()
        })
        .collect();
    let sigma = linalg::inertia(&matrix).signature();
    let slope = (0..n)
        .map(|c| match (parity[class][c], signs[c]) {
            (0, 1) => 2i64,
            (1, -1) => -2,
            _ => 0,
        })
        .sum();
    RawForm { faces: class_faces, edges, components, beta1, basis, matrix, sigma, slope }
}

/// The spine of the `color` checkerboard surface.
pub fn spine(map: &CombMap, color: Color) -> Result<Spine> {
    let cb = checkerboards(map)?;
    let r = &cb.raw[cb.class_of(color)];
    Ok(Spine {
        color,
        faces: r.faces.clone(),
        edges: r.edges.clone(),
        components: r.components,
        beta1: r.beta1,
        cycle_basis: r.basis.clone(),
    })
}

/// The Goeritz form of the `color` checkerboard surface on the spine's
/// fundamental cycle basis, with its exact signature and slope.
pub fn goeritz(map: &CombMap, color: Color) -> Result<GoeritzForm> {
    let cb = checkerboards(map)?;
    Ok(form_of(&cb, color))
}

pub(crate) fn form_of(cb: &Checkerboards, color: Color) -> GoeritzForm {
    let r = &cb.raw[cb.class_of(color)];
    GoeritzForm {
        color,
        matrix: r.matrix.clone(),
        basis: r.basis.clone(),
        beta1: r.beta1,
        sigma: r.sigma,
        slope: r.slope,
    }
}

/// Evaluate the pairing of two cycles in the `color` surface by realizing
/// the transfer pushoff of each against a base copy of the other and
/// averaging the two linking numbers.
pub fn pairing(map: &CombMap, color: Color, a: &SpineCurve, b: &SpineCurve) -> Result<i64> {
    let cb = checkerboards(map)?;
    let class = cb.class_of(color);
    for z in [a, b] {
        validate_cycle(&cb, class, z)?;
    }
    let cls_at = &cb.parity[class];
    let one = curves::realize(
        map,
        &cb.faces,
        cls_at,
        &[
            ChainSpec { weights: &a.weights, transfer: true },
            ChainSpec { weights: &b.weights, transfer: false },
        ],
    )?;
    let l1 = curves::lk(&one[0], &one[1])?;
    let two = curves::realize(
        map,
        &cb.faces,
        cls_at,
        &[
            ChainSpec { weights: &b.weights, transfer: true },
            ChainSpec { weights: &a.weights, transfer: false },
        ],
    )?;
    let l2 = curves::lk(&two[0], &two[1])?;
    if (l1 + l2) % 2 != 0 {
        return Err(Error::Structural(format!(
            "transfer linking numbers {l1}, {l2} have odd sum"
        )));
    }
    Ok((l1 + l2) / 2)
}

fn validate_cycle(cb: &Checkerboards, class: usize, z: &SpineCurve) -> Result<()> {
    let edges = &cb.raw[class].edges;
    if z.weights.len() != edges.len() {
        return Err(Error::Structural("cycle length != crossing count".into()));
    }
    let mut boundary: std::collections::BTreeMap<usize, i64> = std::collections::BTreeMap::new();
    for (e, &w) in edges.iter().zip(&z.weights) {
        *boundary.entry(e.to_face).or_default() += w;
        *boundary.entry(e.from_face).or_default() -= w;
    }
    if boundary.values().any(|&v| v != 0) {
        return Err(Error::Structural("chain has nonzero boundary".into()));
    }
    Ok(())
}

/// True iff the two checkerboard forms are definite of opposite signs
/// (zero forms counting for either side).
pub fn alternating_by_definiteness(map: &CombMap) -> Result<bool> {
    let cb = checkerboards(map)?;
    let d = [
        definiteness(cb.raw[0].sigma, cb.raw[0].beta1),
        definiteness(cb.raw[1].sigma, cb.raw[1].beta1),
    ];
    Ok(!d.contains(&Definiteness::Indefinite)
        && d != [Definiteness::Positive; 2]
        && d != [Definiteness::Negative; 2])
}

/// The signature invariant `sigma(F) - slope(F)/2` of the `color` surface,
/// as an exact rational.
pub fn sigma_invariant(map: &CombMap, color: Color) -> Result<BigRational> {
    let f = goeritz(map, color)?;
    Ok(BigRational::new(BigInt::from(2 * f.sigma - f.slope), BigInt::from(2)))
}

/// Boundary intersection count of the two checkerboard surfaces,
/// `i(dB, dW) = sum_c 2 type(c, Black)`; equals `slope(B) - slope(W)`.
pub fn boundary_intersection(map: &CombMap) -> Result<i64> {
    let cb = checkerboards(map)?;
    let b = cb.b_class as usize;
    Ok((0..cb.signs.len()).map(|c| if cb.parity[b][c] == 0 { 2 } else { -2 }).sum())
}

/// Classical Goeritz matrix of a diagram over the faces of `color`
/// (dropping the least face): off-diagonal entries are minus the sum of
/// crossing types between the two faces, diagonals complete the rows to
/// zero. For planar diagrams it represents the form of the opposite
/// color's surface, integrally congruent to `goeritz(map, color.opposite())`.
pub fn classical_goeritz(map: &CombMap, color: Color) -> Result<Vec<Vec<BigInt>>> {
    let cb = checkerboards(map)?;
    let class = cb.class_of(color);
    let r = &cb.raw[class];
    let idx: std::collections::BTreeMap<usize, usize> =
        r.faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let nf = r.faces.len();
    let mut a = vec![vec![0i64; nf]; nf];
    for e in &r.edges {
        let (i, j) = (idx[&e.from_face], idx[&e.to_face]);
        if i == j {
            continue;
        }
        // crossing type with respect to the opposite class
        let eta = if e.cls == 0 { -1 } else { 1 };
        a[i][j] -= eta;
        a[j][i] -= eta;
    }
    for i in 0..nf {
        let row: i64 = (0..nf).filter(|&j| j != i).map(|j| a[i][j]).sum();
        a[i][i] = -row;
    }
    Ok((1..nf)
        .map(|i| (1..nf).map(|j| BigInt::from(a[i][j])).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures;
    use num_traits::Zero;

    fn int_matrix(m: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
        m.iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn trefoil_forms() {
        let t = fixtures::trefoil();
        let b = goeritz(&t, Color::Black).unwrap();
        let w = goeritz(&t, Color::White).unwrap();
        assert_eq!(int_matrix(&b.matrix), vec![vec![3]]);
        assert_eq!((b.beta1, b.sigma, b.slope), (1, 1, 6));
        assert_eq!(int_matrix(&w.matrix), vec![vec![-2, -1], vec![-1, -2]]);
        assert_eq!((w.beta1, w.sigma, w.slope), (2, -2, 0));
        assert_eq!(linalg::det(&w.matrix), BigInt::from(3));
        assert_eq!(is_definite(&b), Definiteness::Positive);
        assert_eq!(is_definite(&w), Definiteness::Negative);
        assert!(alternating_by_definiteness(&t).unwrap());

        // both signature invariants equal the classical signature -2
        let minus_two = BigRational::from_integer((-2).into());
        assert_eq!(sigma_invariant(&t, Color::Black).unwrap(), minus_two);
        assert_eq!(sigma_invariant(&t, Color::White).unwrap(), minus_two);
        assert_eq!(boundary_intersection(&t).unwrap(), b.slope - w.slope);

        let sb = spine(&t, Color::Black).unwrap();
        assert_eq!((sb.faces.len(), sb.edges.len(), sb.components, sb.beta1), (3, 3, 1, 1));
        let sw = spine(&t, Color::White).unwrap();
        assert_eq!((sw.faces.len(), sw.beta1), (2, 2));
        for z in sw.cycle_basis.iter().chain(&sb.cycle_basis) {
            let s: i64 = z.weights.iter().map(|w| w.abs()).sum();
            assert!(s > 0);
        }
    }

    #[test]
    fn pairing_matches_matrix() {
        for map in [fixtures::trefoil(), fixtures::alternating_genus1(), fixtures::kink()] {
            for color in [Color::Black, Color::White] {
                let f = goeritz(&map, color).unwrap();
                for (i, zi) in f.basis.iter().enumerate() {
                    for (j, zj) in f.basis.iter().enumerate() {
                        let p = pairing(&map, color, zi, zj).unwrap();
                        assert_eq!(BigInt::from(p), f.matrix[i][j], "{color:?} entry {i}{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_is_bilinear() {
        let t = fixtures::trefoil();
        let f = goeritz(&t, Color::White).unwrap();
        let [z1, z2] = [&f.basis[0], &f.basis[1]];
        let sum = SpineCurve {
            weights: z1.weights.iter().zip(&z2.weights).map(|(a, b)| a + b).collect(),
        };
        let p = pairing(&t, Color::White, &sum, z1).unwrap();
        let expect = &f.matrix[0][0] + &f.matrix[1][0];
        assert_eq!(BigInt::from(p), expect);
        // the empty cycle pairs to zero with everything
        let zero = SpineCurve { weights: vec![0; 3] };
        assert_eq!(pairing(&t, Color::White, &zero, z1).unwrap(), 0);
        assert_eq!(pairing(&t, Color::White, &zero, &zero).unwrap(), 0);
        // non-cycles are rejected
        let bad = SpineCurve { weights: vec![1, 0, 0] };
        assert!(pairing(&t, Color::White, &bad, z1).is_err());
    }

    #[test]
    fn alternating_genus1_identities() {
        let m = fixtures::alternating_genus1();
        assert!(m.is_alternating());
        let b = goeritz(&m, Color::Black).unwrap();
        let w = goeritz(&m, Color::White).unwrap();
        assert_eq!((b.beta1, b.sigma, b.slope), (2, 2, 4));
        assert_eq!((w.beta1, w.sigma, w.slope), (3, -3, -2));
        assert_eq!(is_definite(&b), Definiteness::Positive);
        assert_eq!(is_definite(&w), Definiteness::Negative);
        // signature invariants differ by twice the genus
        let sb = sigma_invariant(&m, Color::Black).unwrap();
        let sw = sigma_invariant(&m, Color::White).unwrap();
        let diff = &sb - &sw;
        assert_eq!(diff, BigRational::from_integer(2.into()));
        // slope identity for a fully alternating diagram with connected
        // checkerboards
        let g = m.genus().unwrap() as i64;
        assert_eq!(
            b.slope - w.slope,
            2 * (b.beta1 as i64 + w.beta1 as i64 - 2 * g)
        );
        assert_eq!(boundary_intersection(&m).unwrap(), b.slope - w.slope);
    }

    #[test]
    fn kink_zero_form() {
        let k = fixtures::kink(); // negative kink
        let b = goeritz(&k, Color::Black).unwrap();
        let w = goeritz(&k, Color::White).unwrap();
        assert_eq!((b.beta1, b.sigma), (0, 0));
        assert_eq!(is_definite(&b), Definiteness::Zero);
        assert_eq!(int_matrix(&w.matrix), vec![vec![-1]]);
        assert_eq!(is_definite(&w), Definiteness::Negative);
        assert!(alternating_by_definiteness(&k).unwrap());
        let km = k.mirror();
        let wm = goeritz(&km, Color::Black).unwrap();
        assert_eq!(int_matrix(&wm.matrix), vec![vec![1]]);
        assert_eq!(is_definite(&wm), Definiteness::Positive);
        // sigma invariants: both colors give 0 for an unknot diagram
        for map in [&k, &km] {
            for color in [Color::Black, Color::White] {
                assert!(sigma_invariant(map, color).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn mixed_type_diagram_is_indefinite() {
        // O1+ U1+ U2- O2-: colorable but not alternating; one class sees
        // both crossing types
        let m = crate::gauss::gauss_to_surface(&crate::gauss::parse_gauss("O1+ U1+ U2- O2-").unwrap())
            .unwrap();
        assert!(!m.is_alternating());
        assert!(!alternating_by_definiteness(&m).unwrap());
        let forms = [goeritz(&m, Color::Black).unwrap(), goeritz(&m, Color::White).unwrap()];
        assert!(forms
            .iter()
            .any(|f| is_definite(f) == Definiteness::Indefinite));
        // pairing still matches the matrix on the indefinite side
        let f = forms.iter().find(|f| is_definite(f) == Definiteness::Indefinite).unwrap();
        for (i, zi) in f.basis.iter().enumerate() {
            for (j, zj) in f.basis.iter().enumerate() {
                let p = pairing(&m, f.color, zi, zj).unwrap();
                assert_eq!(BigInt::from(p), f.matrix[i][j]);
            }
        }
    }

    #[test]
    fn not_colorable_errors() {
        for m in [fixtures::virtual_trefoil(), fixtures::torus_clasp()] {
            assert!(matches!(goeritz(&m, Color::Black), Err(Error::NotColorable)));
            assert!(matches!(spine(&m, Color::White), Err(Error::NotColorable)));
            assert!(matches!(alternating_by_definiteness(&m), Err(Error::NotColorable)));
        }
    }

    #[test]
    fn trivial_and_empty_forms() {
        for map in [CombMap::trivial(1), CombMap::trivial(3), CombMap::empty()] {
            for color in [Color::Black, Color::White] {
                let f = goeritz(&map, color).unwrap();
                assert_eq!((f.beta1, f.sigma, f.slope), (0, 0, 0));
                assert_eq!(is_definite(&f), Definiteness::Zero);
            }
            assert!(alternating_by_definiteness(&map).unwrap());
        }
    }

    #[test]
    fn classical_goeritz_congruence() {
        let t = fixtures::trefoil();
        // over the white (two-face) class: equals the black form [3]
        let over_w = classical_goeritz(&t, Color::White).unwrap();
        assert_eq!(int_matrix(&over_w), vec![vec![3]]);
        // over the black class: 2x2 of determinant 3 and signature -2,
        // congruent to the white form
        let over_b = classical_goeritz(&t, Color::Black).unwrap();
        let w = goeritz(&t, Color::White).unwrap();
        assert_eq!(over_b.len(), w.beta1);
        assert_eq!(linalg::det(&over_b), linalg::det(&w.matrix));
        assert_eq!(linalg::inertia(&over_b).signature(), w.sigma);
    }

    /// On the small census, the closed-form matrices agree with the
    /// realized pairing, the classical Goeritz data matches on planar
    /// diagrams, and the alternation and slope identities hold.
    #[test]
    fn census_gl_properties() {
        let mut colorable = 0;
        for map in crate::census::census(3) {
            let cb = match checkerboards(&map) {
                Ok(cb) => cb,
                Err(Error::NotColorable) => continue,
                Err(e) => panic!("unexpected error: {e}"),
            };
            colorable += 1;
            let b = form_of(&cb, Color::Black);
            let w = form_of(&cb, Color::White);
            // alternation agreement
            assert_eq!(
                alternating_by_definiteness(&map).unwrap(),
                map.is_alternating(),
                "definiteness test disagrees with alternation"
            );
            // boundary intersection identity
            assert_eq!(boundary_intersection(&map).unwrap(), b.slope - w.slope);
            // planar classical congruence, checked through det/sigma/rank
            if map.genus().unwrap() == 0 && map.pieces().len() <= 1 {
                for (color, form) in [(Color::White, &b), (Color::Black, &w)] {
                    let cg = classical_goeritz(&map, color).unwrap();
                    assert_eq!(cg.len(), form.beta1, "classical dimension");
                    assert_eq!(linalg::det(&cg), linalg::det(&form.matrix));
                    assert_eq!(linalg::inertia(&cg).signature(), form.sigma);
                }
            }
            // alternating identities
            if map.is_alternating() {
                let sb = BigRational::new((2 * b.sigma - b.slope).into(), 2.into());
                let sw = BigRational::new((2 * w.sigma - w.slope).into(), 2.into());
                let g = map.genus().unwrap() as i64;
                assert_eq!(&sb - &sw, BigRational::from_integer((2 * g).into()));
                if cb.raw[0].components == 1 && cb.raw[1].components == 1 {
                    assert_eq!(
                        b.slope - w.slope,
                        2 * (b.beta1 as i64 + w.beta1 as i64 - 2 * g)
                    );
                }
            }
            // realized pairing matches the closed form (first entries)
            for (i, zi) in b.basis.iter().enumerate().take(2) {
                for (j, zj) in b.basis.iter().enumerate().take(2) {
                    let p = pairing(&map, Color::Black, zi, zj).unwrap();
                    assert_eq!(BigInt::from(p), b.matrix[i][j]);
                }
            }
        }
        assert!(colorable > 50, "census should contain many colorable maps");
    }
}
