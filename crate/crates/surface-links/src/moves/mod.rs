//! Diagram rewriting: Reidemeister moves, flypes, nugatory crossings and
//! flype-orbit search.
//!
//! Every move is a local surgery on the dart matching. The shared helpers
//! here splice strands back together after a surgery ([`rewire`]) and erase
//! crossings by joining their slots pairwise ([`smooth_crossings`]); the
//! concrete moves live in the submodules.

mod flype;
mod nugatory;
mod orbit;
mod reide;

pub use flype::{apply_flype, find_flypes, FlypeSite};
pub(crate) use flype::Dsu;
pub use nugatory::removable_nugatory;
pub use orbit::{flype_equivalent, flype_orbit, FlypeEquiv, FlypeOrbit};
pub use reide::{reidemeister, RSite};

use crate::diagram::{CombMap, DartId};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Kind of an elementary move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    R1,
    R2,
    R3,
    Flype,
    NugatoryRemoval,
}

/// One applied move: the site and canonical forms (hex) before and after.
#[derive(Clone, Debug, Serialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub site: serde_json::Value,
    pub before: String,
    pub after: String,
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Endpoint of a surgery row: a concrete dart of the new map, or the loose
/// end of the strand that occupied a severed old dart.
pub(crate) enum End {
    Dart(DartId),
    Stub(DartId),
}

/// Rebuild a matching after a local surgery.
///
/// `relabel[d]` renames surviving old darts; old edges with neither end in
/// `severed` are copied through it. Each row joins two endpoints into a new
/// edge. An [`End::Stub(d)`] stands for the strand that occupied old dart
/// `d`: it resolves to the far end `m(d)` of its old edge, unless some row
/// re-plugs that far end too (a dual stub), in which case the rows merge
/// into one longer strand. All-stub row cycles close into free loops.
pub(crate) fn rewire(
    map: &CombMap,
    new_n: usize,
    relabel: &[DartId],
    severed: &BTreeSet<DartId>,
    rows: &[(End, End)],
    free_loops: usize,
) -> Result<CombMap> {
    let mut m = vec![usize::MAX; 4 * new_n];
    let mut join = |x: DartId, y: DartId| -> Result<()> {
        if x >= 4 * new_n || y >= 4 * new_n || m[x] != usize::MAX || m[y] != usize::MAX {
            return Err(Error::Structural(format!("conflicting surgery rows at {x}, {y}")));
        }
        m[x] = y;
        m[y] = x;
        Ok(())
    };
    for (d, e) in map.edges() {
        if !severed.contains(&d) && !severed.contains(&e) {
            join(relabel[d], relabel[e])?;
        }
    }
    let mut stub_at: BTreeMap<DartId, (usize, usize)> = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        for (side, end) in [&row.0, &row.1].into_iter().enumerate() {
            if let End::Stub(d) = end {
                if !severed.contains(d) || stub_at.insert(*d, (i, side)).is_some() {
                    return Err(Error::Structural(format!("bad stub at dart {d}")));
                }
            }
        }
    }
    let mut used = vec![false; rows.len()];
    let mut loops = 0usize;
    for r0 in 0..rows.len() {
        if used[r0] {
            continue;
        }
        used[r0] = true;
        let mut ends: Vec<DartId> = Vec::new();
        let mut closed = false;
        'side: for side0 in 0..2 {
            let (mut ri, mut si) = (r0, side0);
            loop {
                let end = if si == 0 { &rows[ri].0 } else { &rows[ri].1 };
                match end {
                    End::Dart(v) => {
                        ends.push(*v);
                        break;
                    }
                    End::Stub(d) => {
                        let e = map.m(*d);
                        let Some(&(r2, s2)) = stub_at.get(&e) else {
                            ends.push(relabel[e]);
                            break;
                        };
                        if used[r2] {
                            if r2 != r0 {
                                return Err(Error::Structural("tangled surgery rows".into()));
                            }
                            closed = true;
                            break 'side;
                        }
                        used[r2] = true;
                        (ri, si) = (r2, 1 - s2);
                    }
                }
            }
        }
        if closed {
            loops += 1;
        } else {
            join(ends[0], ends[1])?;
        }
    }
    CombMap::from_matching(new_n, m, free_loops + loops)
}

/// Erase crossings, joining each one's slots as prescribed by `matchings`
/// (two disjoint slot pairs per crossing). Strands are walked through the
/// erased crossings; wires that never reach a surviving crossing become
/// free loops. Returns the new map and the crossing relabeling. Orientation
/// survives iff every matching joins opposite slots.
pub(crate) fn smooth_crossings(
    map: &CombMap,
    matchings: &BTreeMap<usize, [(u8, u8); 2]>,
) -> Result<(CombMap, Vec<usize>)> {
    let n = map.n_crossings();
    for (&c, pairs) in matchings {
        let mut slots: Vec<u8> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        slots.sort_unstable();
        if c >= n || slots != [0, 1, 2, 3] {
            return Err(Error::InvalidSite(format!("bad smoothing of crossing {c}")));
        }
    }
    let mut relabel = vec![usize::MAX; n];
    let mut new_n = 0;
    for (c, r) in relabel.iter_mut().enumerate() {
        if !matchings.contains_key(&c) {
            *r = new_n;
            new_n += 1;
        }
    }
    let partner = |d: DartId| -> DartId {
        let pairs = matchings[&(d / 4)];
        let k = (d % 4) as u8;
        let kk = match pairs {
            [(a, b), _] if a == k => b,
            [(a, b), _] if b == k => a,
            [_, (a, b)] if a == k => b,
            [_, (a, _)] if a == k => unreachable!(),
            [_, (a, _)] => a,
        };
        4 * (d / 4) + kk as usize
    };
    let newdart = |d: DartId| 4 * relabel[d / 4] + d % 4;
    let mut m = vec![usize::MAX; 4 * new_n];
    let mut visited = vec![false; 4 * n];
    for d in 0..4 * n {
        if relabel[d / 4] == usize::MAX || m[newdart(d)] != usize::MAX {
            continue;
        }
        let mut w = map.m(d);
        while relabel[w / 4] == usize::MAX {
            visited[w] = true;
            let p = partner(w);
            visited[p] = true;
            w = map.m(p);
        }
        m[newdart(d)] = newdart(w);
        m[newdart(w)] = newdart(d);
    }
    let mut loops = 0;
    for d0 in 0..4 * n {
        if relabel[d0 / 4] != usize::MAX || visited[d0] {
            continue;
        }
        let mut w = d0;
        loop {
            visited[w] = true;
            let p = partner(w);
            visited[p] = true;
            w = map.m(p);
            if w == d0 {
                break;
            }
        }
        loops += 1;
    }
    let mut out = CombMap::from_matching(new_n, m, map.free_loops() + loops)?;
    if let Some(fw) = map.orientation_vec() {
        let straight = matchings.values().all(|ps| ps.iter().all(|&(a, b)| a % 2 == b % 2));
        if straight {
            let mut fw2 = vec![false; 4 * new_n];
            for d in 0..4 * n {
                if relabel[d / 4] != usize::MAX {
                    fw2[newdart(d)] = fw[d];
                }
            }
            out.set_orientation_unchecked(fw2);
            out.validate()?;
        }
    }
    Ok((out, relabel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;

    #[test]
    fn smooth_middle_crossing_of_trefoil() {
        let t = trefoil();
        let mut ms = BTreeMap::new();
        ms.insert(1usize, [(0, 2), (1, 3)]);
        let (sm, rl) = smooth_crossings(&t, &ms).unwrap();
        assert_eq!(sm.n_crossings(), 2);
        assert_eq!(rl, vec![0, usize::MAX, 1]);
        assert!(sm.is_oriented());
        assert_eq!(sm.num_components(), 1);
        assert_eq!(sm.free_loops(), 0);
        // letting two strands pass through each other is not an isotopy:
        // the surface absorbs the lost crossing (this is the virtual trefoil)
        assert_eq!(sm.genus().unwrap(), 1);
    }

    #[test]
    fn smooth_all_crossings_traces_shadow_curve() {
        let t = trefoil();
        let mut ms = BTreeMap::new();
        for c in 0..3 {
            ms.insert(c, [(0, 2), (1, 3)]);
        }
        let (sm, _) = smooth_crossings(&t, &ms).unwrap();
        assert_eq!(sm.n_crossings(), 0);
        // the trefoil shadow is one immersed circle
        assert_eq!(sm.free_loops(), 1);
    }

    #[test]
    fn bent_smoothing_splits_kink_and_drops_orientation() {
        let k = kink();
        let mut ms = BTreeMap::new();
        ms.insert(0usize, [(2, 3), (0, 1)]);
        let (sm, _) = smooth_crossings(&k, &ms).unwrap();
        assert_eq!(sm.n_crossings(), 0);
        // curl circle and tail circle come apart
        assert_eq!(sm.free_loops(), 2);
        assert!(!sm.is_oriented());
    }

    #[test]
    fn rewire_rejects_conflicts() {
        let t = trefoil();
        let relabel: Vec<usize> = (0..12).collect();
        let severed = BTreeSet::from([0usize, 11]);
        // joins dart 0 twice
        let rows =
            [(End::Dart(0), End::Dart(11)), (End::Dart(0), End::Dart(11))];
        assert!(rewire(&t, 3, &relabel, &severed, &rows, 0).is_err());
    }
}
