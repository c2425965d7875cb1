//! Structural classification: connectivity, cellularity, splitness, weak
//! primeness and primeness.
//!
//! Both primeness notions are decided by scanning for embedded separating
//! circles that meet the diagram in two generic points. Such a circle cuts
//! the pair (surface, diagram) into two capped summands; because each cut
//! edge ends at a crossing on its own side, both summands carry a crossing,
//! so any such circle is a nontrivial connect-sum decomposition. A diagram
//! is prime when no such circle exists and weakly prime when none with a
//! disk summand exists.

use crate::diagram::{CombMap, DartId};
use crate::gauss::{gauss_to_surface, GaussCode};
use crate::moves::{removable_nugatory, Dsu};
use crate::Result;
use serde::Serialize;
use std::collections::BTreeMap;

/// How a diagram sits on its surface; produced by [`classify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureReport {
    /// the diagram, free loops included, has at most one piece
    pub connected: bool,
    /// the declared genus equals the rotation-system genus
    pub cellular: bool,
    /// no separating two-point circle cuts off a disk with crossings on
    /// both sides
    pub weakly_prime: bool,
    /// no separating two-point circle gives a nontrivial decomposition
    pub prime: bool,
    /// crossings removable by untwisting a nugatory circle
    pub removable_nugatory: Vec<usize>,
    /// graph components plus free loops
    pub split_components: usize,
}

/// Classify a diagram on its rotation-system surface.
pub fn classify(map: &CombMap) -> Result<StructureReport> {
    map.validate()?;
    let split_components = map.pieces().len() + map.free_loops();
    let connected = split_components <= 1;
    let rotation = map.genus()?;
    let cellular = map.declared_genus().is_none_or(|g| g == rotation);
    let removable_nugatory = removable_nugatory(map)?;
    let (weakly_prime, prime) = if connected {
        primeness(map)?
    } else {
        // a split diagram is composite, except for the trivial
        // two-component sphere diagram: neither side carries a crossing,
        // so no separating circle is a nontrivial decomposition
        (false, map.n_crossings() == 0 && map.free_loops() == 2)
    };
    Ok(StructureReport {
        connected,
        cellular,
        weakly_prime,
        prime,
        removable_nugatory,
        split_components,
    })
}

/// Classify the cellular diagram realizing a Gauss code.
pub fn classify_virtual(code: &GaussCode) -> Result<StructureReport> {
    classify(&gauss_to_surface(code)?)
}

fn edge_key(map: &CombMap, d: DartId) -> (DartId, DartId) {
    let e = map.m(d);
    (d.min(e), d.max(e))
}

/// Scan every embedded separating circle meeting the diagram in two generic
/// points on distinct edges. A circle crossing edges `ex`, `ey` is encoded
/// by darts `(x, y)` on the same face with `m(x)`, `m(y)` sharing the
/// return face; its sides collect the half-edges `{x, m(y)}` and
/// `{m(x), y}`. Returns `(weakly_prime, prime)` for a connected map.
fn primeness(map: &CombMap) -> Result<(bool, bool)> {
    let n = map.n_crossings();
    if n == 0 {
        return Ok((true, true));
    }
    let (fs, face_of) = map.face_index();
    let mut pos = vec![0usize; 4 * n];
    let mut flen = vec![0usize; fs.faces.len()];
    for (i, f) in fs.faces.iter().enumerate() {
        flen[i] = f.len();
        for (p, &d) in f.iter().enumerate() {
            pos[d] = p;
        }
    }
    let all_edges = map.edges();
    let mut prime = true;
    for x in 0..4 * n {
        for y in x + 1..4 * n {
            if y == map.m(x)
                || face_of[x] != face_of[y]
                || face_of[map.m(x)] != face_of[map.m(y)]
            {
                continue;
            }
            if face_of[x] == face_of[map.m(x)] {
                // both arcs run through one face: they embed disjointly
                // exactly when the endpoint pairs do not interleave
                let len = flen[face_of[x]];
                let t = |p: usize| (p + len - pos[x]) % len;
                let bound = t(pos[y]);
                if (t(pos[map.m(x)]) < bound) != (t(pos[map.m(y)]) < bound) {
                    continue;
                }
            }
            let (ex, ey) = (edge_key(map, x), edge_key(map, y));
            let mut dsu = Dsu::new(n);
            for &(d, e) in &all_edges {
                if (d, e) != ex && (d, e) != ey {
                    dsu.union(d / 4, e / 4);
                }
            }
            let side_a = [dsu.find(x / 4), dsu.find(map.m(y) / 4)];
            let side_b = [dsu.find(map.m(x) / 4), dsu.find(y / 4)];
            if side_a.contains(&side_b[0]) || side_a.contains(&side_b[1]) {
                continue; // the circle does not separate the surface
            }
            prime = false;
            let ga = side_genus(map, &mut dsu, side_a, (x, map.m(y)), ex, ey)?;
            let gb = side_genus(map, &mut dsu, side_b, (map.m(x), y), ex, ey)?;
            if ga == 0 || gb == 0 {
                return Ok((false, false));
            }
        }
    }
    Ok((true, prime))
}

/// Genus of one side of a separating two-point circle after capping with a
/// disk; the side's dangling half-edges are rejoined through the cap.
fn side_genus(
    map: &CombMap,
    dsu: &mut Dsu,
    roots: [usize; 2],
    dangling: (DartId, DartId),
    ex: (DartId, DartId),
    ey: (DartId, DartId),
) -> Result<usize> {
    let mut newid = BTreeMap::new();
    for c in 0..map.n_crossings() {
        if roots.contains(&dsu.find(c)) {
            newid.insert(c, newid.len());
        }
    }
    let nd = |d: DartId| 4 * newid[&(d / 4)] + d % 4;
    let mut edges = Vec::new();
    for (d, e) in map.edges() {
        if (d, e) != ex && (d, e) != ey && newid.contains_key(&(d / 4)) {
            edges.push((nd(d), nd(e)));
        }
    }
    edges.push((nd(dangling.0), nd(dangling.1)));
    CombMap::new(newid.len(), &edges, 0)?.genus()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census;
    use crate::diagram::fixtures::*;
    use crate::gauss::{connect_sum, parse_gauss};

    #[test]
    fn trefoil_is_prime() {
        let r = classify(&trefoil()).unwrap();
        assert!(r.connected && r.cellular && r.weakly_prime && r.prime);
        assert!(r.removable_nugatory.is_empty());
        assert_eq!(r.split_components, 1);
    }

    #[test]
    fn virtual_trefoil_is_prime_on_the_torus() {
        let r = classify(&virtual_trefoil()).unwrap();
        assert!(r.connected && r.cellular && r.weakly_prime && r.prime);
        assert!(r.removable_nugatory.is_empty());
    }

    #[test]
    fn connect_sum_is_not_weakly_prime() {
        let t = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        let sum = connect_sum(&t, &t, (0, 0), (0, 0)).unwrap();
        let map = gauss_to_surface(&sum).unwrap();
        assert_eq!(map.n_crossings(), 6);
        assert_eq!(map.genus().unwrap(), 0);
        let r = classify(&map).unwrap();
        assert!(r.connected && !r.weakly_prime && !r.prime);
    }

    #[test]
    fn disjoint_union_splits() {
        let t = trefoil().forget_orientation();
        let mut edges = t.edges();
        for (d, e) in t.edges() {
            edges.push((d + 12, e + 12));
        }
        let map = CombMap::new(6, &edges, 0).unwrap();
        let r = classify(&map).unwrap();
        assert!(!r.connected && !r.weakly_prime && !r.prime);
        assert_eq!(r.split_components, 2);
    }

    #[test]
    fn trivial_two_component_exception() {
        let two = classify(&CombMap::trivial(2)).unwrap();
        assert!(!two.connected && !two.weakly_prime && two.prime);
        assert_eq!(two.split_components, 2);
        let one = classify(&CombMap::trivial(1)).unwrap();
        assert!(one.connected && one.weakly_prime && one.prime);
    }

    #[test]
    fn twist_chains_are_composite() {
        let r = classify(&CombMap::pretzel(&[3]).unwrap()).unwrap();
        assert!(r.connected && !r.weakly_prime && !r.prime);
        assert_eq!(r.removable_nugatory, vec![0, 1, 2]);
        let p = classify(&CombMap::pretzel(&[2, 2, 1, 1]).unwrap()).unwrap();
        assert!(p.weakly_prime && p.prime);
        assert!(p.removable_nugatory.is_empty());
    }

    #[test]
    fn virtual_classification_matches_surface() {
        let prime = classify_virtual(&parse_gauss("O1+ O2+ U1+ U2+").unwrap()).unwrap();
        assert!(prime.connected && prime.prime);
        let split = classify_virtual(&parse_gauss("O1+ U1+ / O2+ U2+").unwrap()).unwrap();
        assert!(!split.connected);
        assert_eq!(split.split_components, 2);
    }

    #[test]
    fn report_serializes_with_wire_names() {
        let v = serde_json::to_value(classify(&trefoil()).unwrap()).unwrap();
        for key in
            ["connected", "cellular", "weaklyPrime", "prime", "removableNugatory", "splitComponents"]
        {
            assert!(v.get(key).is_some(), "missing key {key}");
        }
    }

    #[test]
    fn census_structure_invariants() {
        for n in 0..=4 {
            for map in census::census(n) {
                let r = classify(&map).unwrap();
                assert!(r.connected && r.cellular);
                if r.prime {
                    assert!(r.weakly_prime);
                }
                if r.weakly_prime && map.n_crossings() != 1 {
                    assert!(
                        r.removable_nugatory.is_empty(),
                        "weakly prime map with removable nugatory crossing: {:?}",
                        map.edges()
                    );
                }
            }
        }
    }
}
