//! Flype orbits and flype equivalence.

use super::flype::{apply_flype, find_flypes, FlypeSite};
use super::{hex, MoveKind, MoveRecord};
use crate::diagram::CombMap;
use crate::{iso, Error, Result};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Closure of a diagram under flypes, up to relabeling isomorphism.
#[derive(Clone, Debug)]
pub struct FlypeOrbit {
    /// Members in canonical-form order.
    pub members: Vec<CombMap>,
    /// True when the search stopped at the bound.
    pub truncated: bool,
}

/// Outcome of a bounded flype-equivalence search.
#[derive(Clone, Debug)]
pub enum FlypeEquiv {
    /// A flype sequence carrying the first diagram to the second.
    Equivalent(Vec<MoveRecord>),
    /// The diagrams differ: an invariant separates them, or the whole
    /// (unbounded) orbit was searched without meeting the target.
    Distinct,
    /// The orbit was truncated at the bound before the target appeared.
    Unknown { explored: usize },
}

fn expand(map: &CombMap) -> Result<Vec<(Vec<u8>, CombMap, FlypeSite)>> {
    let mut out = Vec::new();
    for site in find_flypes(map) {
        if site.degenerate {
            continue;
        }
        let img = apply_flype(map, &site)?;
        let key = iso::canonical_form(&img);
        out.push((key, img, site));
    }
    Ok(out)
}

/// Breadth-first flype closure, deterministic, truncated at `bound` members.
pub fn flype_orbit(map: &CombMap, bound: usize) -> Result<FlypeOrbit> {
    let bound = bound.max(1);
    let mut seen = BTreeMap::new();
    seen.insert(iso::canonical_form(map), map.clone());
    let mut layer = vec![map.clone()];
    let mut truncated = false;
    while !layer.is_empty() {
        let expansions: Vec<_> = layer.par_iter().map(expand).collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (key, img, _) in expansions.into_iter().flatten() {
            if seen.contains_key(&key) {
                continue;
            }
            if seen.len() >= bound {
                truncated = true;
                continue;
            }
            seen.insert(key, img.clone());
            next.push(img);
        }
        layer = next;
    }
    Ok(FlypeOrbit { members: seen.into_values().collect(), truncated })
}

/// Decide whether flypes carry `a` to `b`, searching `a`'s orbit up to
/// `bound` members. On success the witness records each flype with the
/// canonical forms before and after.
pub fn flype_equivalent(a: &CombMap, b: &CombMap, bound: usize) -> Result<FlypeEquiv> {
    if a.is_oriented() != b.is_oriented() {
        return Err(Error::Structural(
            "cannot compare an oriented diagram with an unoriented one".into(),
        ));
    }
    if a.n_crossings() != b.n_crossings()
        || a.free_loops() != b.free_loops()
        || a.num_components() != b.num_components()
        || a.genus()? != b.genus()?
        || (a.is_oriented() && a.writhe()? != b.writhe()?)
    {
        return Ok(FlypeEquiv::Distinct);
    }
    let bound = bound.max(1);
    let start = iso::canonical_form(a);
    let target = iso::canonical_form(b);
    if start == target {
        return Ok(FlypeEquiv::Equivalent(Vec::new()));
    }
    // key -> (map, parent key and the site applied there)
    let mut seen: BTreeMap<Vec<u8>, (CombMap, Option<(Vec<u8>, FlypeSite)>)> = BTreeMap::new();
    seen.insert(start.clone(), (a.clone(), None));
    let mut layer = vec![(start, a.clone())];
    let mut truncated = false;
    while !layer.is_empty() {
        let expansions: Vec<_> = layer
            .par_iter()
            .map(|(key, map)| expand(map).map(|v| (key.clone(), v)))
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (parent, items) in expansions {
            for (key, img, site) in items {
                if seen.contains_key(&key) {
                    continue;
                }
                if seen.len() >= bound {
                    truncated = true;
                    continue;
                }
                let found = key == target;
                seen.insert(key.clone(), (img.clone(), Some((parent.clone(), site))));
                if found {
                    return Ok(FlypeEquiv::Equivalent(witness(&seen, key)));
                }
                next.push((key, img));
            }
        }
        layer = next;
    }
    Ok(if truncated { FlypeEquiv::Unknown { explored: seen.len() } } else { FlypeEquiv::Distinct })
}

fn witness(
    seen: &BTreeMap<Vec<u8>, (CombMap, Option<(Vec<u8>, FlypeSite)>)>,
    end: Vec<u8>,
) -> Vec<MoveRecord> {
    let mut path = Vec::new();
    let mut cur = end;
    while let Some((parent, site)) = &seen[&cur].1 {
        path.push(MoveRecord {
            kind: MoveKind::Flype,
            site: serde_json::to_value(site).expect("site serialization cannot fail"),
            before: hex(parent),
            after: hex(&cur),
        });
        cur = parent.clone();
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;

    #[test]
    fn trefoil_orbit_is_a_point() {
        let orbit = flype_orbit(&trefoil(), 100).unwrap();
        assert_eq!(orbit.members.len(), 1);
        assert!(!orbit.truncated);
    }

    #[test]
    fn pretzel_orbit_finds_both_arrangements() {
        let p = CombMap::pretzel(&[2, 2, 1, 1]).unwrap();
        let orbit = flype_orbit(&p, 100).unwrap();
        assert!(!orbit.truncated);
        assert_eq!(orbit.members.len(), 2);
        let keys: Vec<_> = orbit.members.iter().map(iso::canonical_form).collect();
        assert!(keys.contains(&iso::canonical_form(&CombMap::pretzel(&[2, 1, 2, 1]).unwrap())));
        for m in &orbit.members {
            assert_eq!(m.n_crossings(), 6);
            assert_eq!(m.genus().unwrap(), 0);
            assert!(m.is_alternating());
        }
    }

    #[test]
    fn orbit_truncation_is_reported() {
        let p = CombMap::pretzel(&[2, 2, 1, 1]).unwrap();
        let orbit = flype_orbit(&p, 1).unwrap();
        assert_eq!(orbit.members.len(), 1);
        assert!(orbit.truncated);
    }

    #[test]
    fn equivalent_to_itself_with_empty_witness() {
        match flype_equivalent(&trefoil(), &trefoil(), 10).unwrap() {
            FlypeEquiv::Equivalent(path) => assert!(path.is_empty()),
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn pretzel_pair_is_equivalent_with_witness() {
        let a = CombMap::pretzel(&[2, 2, 1, 1]).unwrap();
        let b = CombMap::pretzel(&[2, 1, 2, 1]).unwrap();
        match flype_equivalent(&a, &b, 10_000).unwrap() {
            FlypeEquiv::Equivalent(path) => {
                assert_eq!(path.len(), 1);
                assert_eq!(path[0].kind, MoveKind::Flype);
                assert_eq!(path[0].before, super::hex(&iso::canonical_form(&a)));
                assert_eq!(path[0].after, super::hex(&iso::canonical_form(&b)));
                let json = serde_json::to_string(&path).unwrap();
                assert!(json.contains("\"Flype\""));
            }
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn invariants_short_circuit_distinct_pairs() {
        // genus and writhe differ; no search happens
        match flype_equivalent(&trefoil(), &alternating_genus1(), 10_000).unwrap() {
            FlypeEquiv::Distinct => {}
            other => panic!("expected distinct, got {other:?}"),
        }
    }

    #[test]
    fn exhausted_orbit_reports_distinct() {
        // trefoil shape vs. triple-curl unknot shape: equal crossing count,
        // genus and component count, so the screen passes and the search
        // must exhaust the orbit
        let a = CombMap::pretzel(&[1, 1, 1]).unwrap();
        let b = CombMap::pretzel(&[3]).unwrap();
        assert_eq!(a.genus().unwrap(), b.genus().unwrap());
        match flype_equivalent(&a, &b, 10_000).unwrap() {
            FlypeEquiv::Distinct => {}
            other => panic!("expected distinct, got {other:?}"),
        }
    }
}
