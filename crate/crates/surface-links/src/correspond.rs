//! Correspondence between cellular surface diagrams and virtual diagrams:
//! planar projection with virtual crossings, classical Gauss codes of
//! virtual diagrams, lasso regions, and devirtualization.

use crate::diagram::{rot, CombMap, DartId};
use crate::gauss::{gauss_to_surface, GaussCode, Token};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// A diagram on the sphere, some of whose crossings are virtual: plain
/// intersections of strands introduced by projection rather than genuine
/// over/under data. Slot parity at virtual crossings is meaningless and
/// every consumer ignores it.
#[derive(Debug, Clone)]
pub struct VirtualDiagram {
    pub map: CombMap,
    pub virtual_ids: BTreeSet<usize>,
}

impl VirtualDiagram {
    pub fn new(map: CombMap, virtual_ids: BTreeSet<usize>) -> Result<Self> {
        let v = VirtualDiagram { map, virtual_ids };
        v.validate()?;
        Ok(v)
    }

    pub fn validate(&self) -> Result<()> {
        self.map.validate()?;
        if self.map.genus()? != 0 {
            return Err(Error::Structural("virtual diagrams live on the sphere".into()));
        }
        if let Some(&c) = self.virtual_ids.iter().next_back() {
            if c >= self.map.n_crossings() {
                return Err(Error::Structural(format!("virtual crossing {c} out of range")));
            }
        }
        Ok(())
    }

    pub fn is_virtual(&self, c: usize) -> bool {
        self.virtual_ids.contains(&c)
    }

    pub fn n_classical(&self) -> usize {
        self.map.n_crossings() - self.virtual_ids.len()
    }

    pub fn n_virtual(&self) -> usize {
        self.virtual_ids.len()
    }
}

/// Project a surface diagram to the sphere. Each piece is cut along a disk
/// neighborhood of a spanning tree (which holds all its crossings intact),
/// and the remaining edges are redrawn outside that disk as chords of a
/// convex region; interleaved chords meet once, and those meetings become
/// the virtual crossings. Planar pieces have no interleaved chords, so
/// classical diagrams come back unchanged. Strand traversal, crossing ids,
/// signs, and orientation all survive, hence so does the Gauss code.
pub fn surface_to_virtual(map: &CombMap) -> Result<VirtualDiagram> {
    map.validate()?;
    // Chord endpoints are perturbed between attempts so that no three
    // chords pass through a common point.
    for attempt in 0..64 {
        if let Some(v) = project(map, attempt)? {
            return Ok(v);
        }
    }
    Err(Error::Structural("no generic chord layout found".into()))
}

type Pt = (BigRational, BigRational);

fn cross(a: &Pt, b: &Pt) -> BigRational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn sub(a: &Pt, b: &Pt) -> Pt {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn edge_key(map: &CombMap, d: DartId) -> (DartId, DartId) {
    let e = map.m(d);
    (d.min(e), d.max(e))
}

fn spanning_tree(map: &CombMap, piece: &[usize]) -> BTreeSet<(DartId, DartId)> {
    let mut tree = BTreeSet::new();
    let mut visited = BTreeSet::from([piece[0]]);
    let mut stack = vec![piece[0]];
    while let Some(c) = stack.pop() {
        for d in 4 * c..4 * c + 4 {
            let c2 = map.m(d) / 4;
            if visited.insert(c2) {
                tree.insert(edge_key(map, d));
                stack.push(c2);
            }
        }
    }
    tree
}

/// Boundary walk of the tree neighborhood; the recorded darts are the
/// attachment ports of the non-tree edges, in counterclockwise order as
/// seen from inside the disk.
fn contour(map: &CombMap, piece: &[usize], tree: &BTreeSet<(DartId, DartId)>) -> Result<Vec<DartId>> {
    let start = 4 * piece[0];
    let mut ports = Vec::new();
    let mut d = start;
    for _ in 0..4 * piece.len() {
        if tree.contains(&edge_key(map, d)) {
            d = rot(map.m(d));
        } else {
            ports.push(d);
            d = rot(d);
        }
        if d == start {
            return Ok(ports);
        }
    }
    Err(Error::Structural("spanning-tree neighborhood is not a disk".into()))
}

fn project(map: &CombMap, attempt: i64) -> Result<Option<VirtualDiagram>> {
    let n = map.n_crossings();
    let mut edges: Vec<(DartId, DartId)> = Vec::new();
    // per chord: its lower dart and the (in, out) dart pair at each virtual
    // crossing along it, for orientation transport
    let mut chains: Vec<(DartId, Vec<(DartId, DartId)>)> = Vec::new();
    let mut next_vid = n;
    for piece in map.pieces() {
        let tree = spanning_tree(map, &piece);
        edges.extend(tree.iter().copied());
        let ports = contour(map, &piece, &tree)?;
        let q = ports.len() as i64;
        let modulus = 2 * q + 1;
        // The chords live in the outer region, which sees the disk boundary
        // reversed; place the ports on the parabola y = x^2 so that chords
        // cross exactly when their endpoints interleave.
        let mut x: BTreeMap<DartId, BigRational> = BTreeMap::new();
        for (r, &p) in ports.iter().rev().enumerate() {
            let r = r as i64;
            let jitter = (attempt * (r * r + r + 1)).rem_euclid(modulus);
            x.insert(p, BigRational::new(BigInt::from(r * modulus + jitter), BigInt::from(modulus)));
        }
        let chords: Vec<(DartId, DartId)> = piece
            .iter()
            .flat_map(|&c| 4 * c..4 * c + 4)
            .filter(|&d| d < map.m(d))
            .map(|d| (d, map.m(d)))
            .filter(|k| !tree.contains(k))
            .collect();
        let point = |d: DartId| -> Pt {
            let t = &x[&d];
            (t.clone(), t * t)
        };
        let span = |i: usize| {
            let (a, b) = (&x[&chords[i].0], &x[&chords[i].1]);
            if a <= b { (a, b) } else { (b, a) }
        };
        // intersection events along each chord, measured from its lower dart
        let mut events: Vec<Vec<(BigRational, DartId, DartId)>> = vec![Vec::new(); chords.len()];
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                let (l1, h1) = span(i);
                let (l2, h2) = span(j);
                if !((l1 < l2 && l2 < h1 && h1 < h2) || (l2 < l1 && l1 < h2 && h2 < h1)) {
                    continue;
                }
                let (a, b) = (point(chords[i].0), point(chords[i].1));
                let (c, e) = (point(chords[j].0), point(chords[j].1));
                let u = sub(&b, &a);
                let v = sub(&e, &c);
                let w = sub(&c, &a);
                // interleaved chords of a convex region are never parallel
                let den = cross(&u, &v);
                let s = cross(&w, &v) / &den;
                let t = cross(&w, &u) / &den;
                let vid = next_vid;
                next_vid += 1;
                events[i].push((s, 4 * vid, 4 * vid + 2));
                // the sign of den says which way chord j sweeps past chord i,
                // i.e. which of the remaining two slots its inward dart takes
                let (jin, jout) = if den.is_positive() {
                    (4 * vid + 1, 4 * vid + 3)
                } else {
                    (4 * vid + 3, 4 * vid + 1)
                };
                events[j].push((t, jin, jout));
            }
        }
        for (ci, evs) in events.iter_mut().enumerate() {
            evs.sort_by(|p, q| p.0.cmp(&q.0));
            if evs.windows(2).any(|w| w[0].0 == w[1].0) {
                // three chords through one point; perturb and retry
                return Ok(None);
            }
            let (d, e) = chords[ci];
            let mut cur = d;
            let mut hops = Vec::new();
            for (_, vin, vout) in evs.iter() {
                edges.push((cur, *vin));
                hops.push((*vin, *vout));
                cur = *vout;
            }
            edges.push((cur, e));
            if !hops.is_empty() {
                chains.push((d, hops));
            }
        }
    }
    let total = next_vid;
    let mut w = CombMap::new(total, &edges, map.free_loops())?;
    if let Some(fw) = map.orientation_vec() {
        let mut fw2 = vec![false; 4 * total];
        fw2[..4 * n].copy_from_slice(fw);
        for (start, hops) in &chains {
            let mut cur = *start;
            for &(vin, vout) in hops {
                fw2[vin] = !fw2[cur];
                fw2[vout] = fw2[cur];
                cur = vout;
            }
        }
        w.set_orientation_unchecked(fw2);
    }
    VirtualDiagram::new(w, (n..total).collect()).map(Some)
}

/// Gauss code of the classical crossings read along the strands; virtual
/// crossings are passed through silently. Labels are classical crossing
/// ids plus one.
pub fn gauss_of(v: &VirtualDiagram) -> Result<GaussCode> {
    let oriented;
    let map = if v.map.is_oriented() {
        &v.map
    } else {
        oriented = v.map.clone().orient_default()?;
        &oriented
    };
    let mut components = Vec::new();
    for orbit in map.components() {
        let mut comp = Vec::new();
        for &d in &orbit {
            let (c, s) = (d / 4, d % 4);
            if v.virtual_ids.contains(&c) {
                continue;
            }
            comp.push(Token { over: s % 2 == 0, label: c as u64 + 1, sign: map.crossing_sign(c)? });
        }
        components.push(comp);
    }
    components.extend(std::iter::repeat(Vec::new()).take(map.free_loops()));
    let code = GaussCode { components };
    code.validate()?;
    Ok(code)
}

/// The cellular surface diagram determined by the classical crossing data
/// alone: read the Gauss code off the virtual diagram and realize it.
pub fn devirtualize(v: &VirtualDiagram) -> Result<CombMap> {
    gauss_to_surface(&gauss_of(v)?)
}

/// A disk region assembled from whole faces. It contains every classical
/// crossing (each has a corner in the region) and avoids every virtual
/// crossing; `boundary_edges` are the edges with exactly one side inside.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Lasso {
    pub faces: Vec<usize>,
    pub boundary_edges: Vec<(DartId, DartId)>,
}

/// Search for a lasso. Candidate regions are unions of faces having no
/// virtual corner; a union qualifies when it covers every classical
/// crossing, is connected across shared edges, has Euler characteristic 1,
/// and meets each crossing in a contiguous fan of corners. The search is
/// exhaustive when few faces are admissible and greedy beyond that, so a
/// `None` from a large diagram is not a proof that no lasso exists; a
/// lasso may also exist that is not a union of faces.
pub fn find_lasso(v: &VirtualDiagram) -> Option<Lasso> {
    let map = &v.map;
    let n = map.n_crossings();
    let (fs, face_of) = map.face_index();
    let nf = fs.faces.len();
    let mut corner_faces = vec![[0usize; 4]; n];
    for (c, faces) in corner_faces.iter_mut().enumerate() {
        for k in 0..4u8 {
            faces[k as usize] = map.corner_face(c, k, &face_of);
        }
    }
    let mut touches_virtual = vec![false; nf];
    for &c in &v.virtual_ids {
        for &f in &corner_faces[c] {
            touches_virtual[f] = true;
        }
    }
    let admissible: Vec<usize> = (0..nf).filter(|&f| !touches_virtual[f]).collect();
    let classical: Vec<usize> = (0..n).filter(|c| !v.virtual_ids.contains(c)).collect();
    let all_edges = map.edges();

    let check = |fset: &BTreeSet<usize>| -> bool {
        if classical.iter().any(|&c| !corner_faces[c].iter().any(|f| fset.contains(f))) {
            return false;
        }
        // no pinches: the region's corners at each crossing are contiguous
        for faces in &corner_faces {
            let b: Vec<bool> = faces.iter().map(|f| fset.contains(f)).collect();
            if (0..4).filter(|&k| b[k] != b[(k + 1) % 4]).count() > 2 {
                return false;
            }
        }
        // one disk: connected and of Euler characteristic 1
        let verts = (0..n)
            .filter(|&c| corner_faces[c].iter().any(|f| fset.contains(f)))
            .count();
        let edges_in = all_edges
            .iter()
            .filter(|&&(d, e)| fset.contains(&face_of[d]) || fset.contains(&face_of[e]))
            .count();
        if verts + fset.len() != edges_in + 1 {
            return false;
        }
        let first = *fset.iter().next().unwrap();
        let mut reach = BTreeSet::from([first]);
        let mut frontier = vec![first];
        while let Some(f) = frontier.pop() {
            for &(d, e) in &all_edges {
                let (f1, f2) = (face_of[d], face_of[e]);
                if !(fset.contains(&f1) && fset.contains(&f2)) {
                    continue;
                }
                for (a, b) in [(f1, f2), (f2, f1)] {
                    if a == f && reach.insert(b) {
                        frontier.push(b);
                    }
                }
            }
        }
        reach.len() == fset.len()
    };
    let build = |fset: &BTreeSet<usize>| -> Lasso {
        Lasso {
            faces: fset.iter().copied().collect(),
            boundary_edges: all_edges
                .iter()
                .copied()
                .filter(|&(d, e)| fset.contains(&face_of[d]) != fset.contains(&face_of[e]))
                .collect(),
        }
    };

    const EXACT_LIMIT: usize = 18;
    if admissible.len() <= EXACT_LIMIT {
        for mask in (1u32..1u32 << admissible.len()).rev() {
            let fset: BTreeSet<usize> = admissible
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask >> b & 1 == 1)
                .map(|(_, &f)| f)
                .collect();
            if check(&fset) {
                return Some(build(&fset));
            }
        }
        None
    } else {
        let full: BTreeSet<usize> = admissible.iter().copied().collect();
        let mut candidates = vec![full.clone()];
        for &f in &admissible {
            let mut c = full.clone();
            c.remove(&f);
            candidates.push(c);
        }
        candidates.into_iter().find(|c| !c.is_empty() && check(c)).map(|c| build(&c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census;
    use crate::diagram::fixtures::*;
    use crate::gauss::canonical_gauss;
    use crate::iso::canonical_form;

    #[test]
    fn planar_diagrams_project_to_themselves() {
        let t = trefoil();
        let v = surface_to_virtual(&t).unwrap();
        assert_eq!(v.n_virtual(), 0);
        assert_eq!(v.map.edges(), t.edges());
        assert_eq!(gauss_of(&v).unwrap().to_string(), "O1+ U2+ O3+ U1+ O2+ U3+");
    }

    #[test]
    fn virtual_trefoil_projects_with_one_virtual_crossing() {
        let v = surface_to_virtual(&virtual_trefoil()).unwrap();
        assert_eq!(v.virtual_ids, BTreeSet::from([2]));
        assert_eq!(v.map.genus().unwrap(), 0);
        assert_eq!(v.map.edges(), vec![(0, 7), (1, 6), (2, 8), (3, 11), (4, 10), (5, 9)]);
        assert_eq!(gauss_of(&v).unwrap().to_string(), "O1+ O2+ U1+ U2+");
    }

    #[test]
    fn clasp_projects_with_one_virtual_crossing() {
        let v = surface_to_virtual(&torus_clasp()).unwrap();
        assert_eq!((v.n_classical(), v.n_virtual()), (1, 1));
        assert_eq!(v.map.genus().unwrap(), 0);
        assert_eq!(gauss_of(&v).unwrap().to_string(), "O1+ / U1+");
    }

    #[test]
    fn census_round_trips_through_the_projection() {
        for n in 0..=3 {
            for m in census(n) {
                let code = GaussCode::of_map(&m).unwrap();
                let cellular = gauss_to_surface(&code).unwrap();
                let v = surface_to_virtual(&cellular).unwrap();
                assert_eq!(v.map.genus().unwrap(), 0);
                let back = gauss_of(&v).unwrap();
                assert_eq!(canonical_gauss(&back), canonical_gauss(&code));
                let again = devirtualize(&v).unwrap();
                assert_eq!(canonical_form(&again), canonical_form(&cellular));
            }
        }
    }

    #[test]
    fn free_loops_survive_projection() {
        let v = surface_to_virtual(&CombMap::trivial(2)).unwrap();
        assert_eq!(v.map.free_loops(), 2);
        assert_eq!(gauss_of(&v).unwrap().to_string(), "* / *");
    }

    #[test]
    fn lasso_of_a_planar_diagram_is_everything_but_one_face() {
        let v = surface_to_virtual(&trefoil()).unwrap();
        let l = find_lasso(&v).unwrap();
        assert_eq!(l.faces.len(), 4);
        assert_eq!(l.boundary_edges.len(), 3);
    }

    #[test]
    fn lasso_of_the_virtual_trefoil_projection() {
        let v = surface_to_virtual(&virtual_trefoil()).unwrap();
        let l = find_lasso(&v).unwrap();
        assert_eq!(l.faces.len(), 1);
        assert_eq!(l.boundary_edges, vec![(0, 7), (1, 6)]);
    }

    #[test]
    fn adversarial_virtualization_has_no_lasso() {
        let v0 = surface_to_virtual(&virtual_trefoil()).unwrap();
        let v = VirtualDiagram::new(v0.map.clone(), BTreeSet::from([1, 2])).unwrap();
        assert!(find_lasso(&v).is_none());
    }
}
