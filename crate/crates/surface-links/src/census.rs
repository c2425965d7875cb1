//! Exhaustive census of connected diagrams with a given crossing count.
//!
//! Diagrams are enumerated as perfect matchings on the `4n` darts with two
//! symmetry reductions: untouched crossings are entered in index order, and
//! the first dart matched on a fresh crossing sits in slot 0 or 1. These
//! are exactly the constraints satisfied by the breadth-first relabeling
//! behind `canonical_form`, so each isomorphism class representative is
//! generated, and a generated matching is kept iff no breadth-first start
//! produces a strictly smaller code than its own labeling (orderly
//! generation — no dedup table). Results are deterministic regardless of
//! thread count; set `SURFACE_LINKS_THREADS` to bound the worker pool.

use crate::diagram::CombMap;
use crate::iso::canonical_form;
use rayon::prelude::*;
use std::sync::Mutex;

const UNMATCHED: usize = usize::MAX;

/// All connected unoriented diagrams with exactly `n` crossings, up to
/// isomorphism (orientation-preserving, no mirror), sorted by canonical
/// form. `n = 0` yields the crossingless unknot.
pub fn census(n: usize) -> Vec<CombMap> {
    let out = Mutex::new(Vec::new());
    census_scan(n, |m| out.lock().unwrap().push(m.clone()));
    let mut v = out.into_inner().unwrap();
    v.sort_by_cached_key(canonical_form);
    v
}

/// Stream every census class representative to `f`, in parallel and in no
/// particular order. Equivalent to iterating `census(n)` but without
/// materializing the result.
pub fn census_scan<F: Fn(&CombMap) + Sync>(n: usize, f: F) {
    if n == 0 {
        f(&CombMap::trivial(1));
        return;
    }
    let run = || {
        // split the search tree a few levels deep, then finish each task
        // sequentially in parallel
        let mut tasks = vec![vec![UNMATCHED; 4 * n]];
        for _ in 0..3.min(2 * n - 1) {
            let mut next = Vec::new();
            for m in &tasks {
                expand(n, m, &mut |child| next.push(child.to_vec()));
            }
            tasks = next;
        }
        tasks.par_iter().for_each(|task| complete(n, &mut task.clone(), &f));
    };
    match pool() {
        Some(p) => p.install(run),
        None => run(),
    }
}

fn pool() -> Option<rayon::ThreadPool> {
    let k: usize = std::env::var("SURFACE_LINKS_THREADS").ok()?.parse().ok()?;
    rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build().ok()
}

/// Apply every admissible match for the lowest unmatched dart and call
/// `visit` on each child state (restoring the state afterwards).
fn expand(n: usize, m: &[usize], visit: &mut impl FnMut(&[usize])) {
    let mut m = m.to_vec();
    let Some(d) = m.iter().position(|&x| x == UNMATCHED) else {
        visit(&m);
        return;
    };
    let touched = |m: &[usize], c: usize| (4 * c..4 * c + 4).any(|x| m[x] != UNMATCHED);
    if d > 0 && !touched(&m, d / 4) {
        // crossings below d/4 are fully matched among themselves, so every
        // completion is disconnected
        return;
    }
    // the lowest untouched crossing other than d's own
    let fresh = (d / 4 + 1..n).find(|&c| !touched(&m, c));
    for e in d + 1..4 * n {
        if m[e] != UNMATCHED {
            continue;
        }
        let c = e / 4;
        if c != d / 4 && !touched(&m, c) && (Some(c) != fresh || e % 4 > 1) {
            continue;
        }
        m[d] = e;
        m[e] = d;
        visit(&m);
        m[d] = UNMATCHED;
        m[e] = UNMATCHED;
    }
}

fn complete<F: Fn(&CombMap) + Sync>(n: usize, m: &mut Vec<usize>, f: &F) {
    if !m.contains(&UNMATCHED) {
        if connected(n, m) && is_canonical(n, m) {
            let map = CombMap::from_matching(n, m.clone(), 0)
                .expect("enumerated matching is involutive");
            f(&map);
        }
        return;
    }
    expand(n, m, &mut |child| complete(n, &mut child.to_vec(), f));
}

fn connected(n: usize, m: &[usize]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(c) = stack.pop() {
        for s in 0..4 {
            let c2 = m[4 * c + s] / 4;
            if !seen[c2] {
                seen[c2] = true;
                count += 1;
                stack.push(c2);
            }
        }
    }
    count == n
}

/// A generated matching already satisfies the breadth-first labeling
/// constraints, so its own code equals the start `(0, 0)`; it is the class
/// representative iff no other start beats it.
fn is_canonical(n: usize, m: &[usize]) -> bool {
    let mut idx = vec![usize::MAX; n];
    let mut off = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for c0 in 0..n {
        for off0 in [0usize, 2] {
            if c0 == 0 && off0 == 0 {
                continue;
            }
            idx.fill(usize::MAX);
            order.clear();
            idx[c0] = 0;
            off[c0] = off0;
            order.push(c0);
            let mut q = 0;
            let mut i = 0;
            'rows: while i < order.len() {
                let c = order[i];
                for t in 0..4 {
                    let e = m[4 * c + (t + off[c]) % 4];
                    let c2 = e / 4;
                    if idx[c2] == usize::MAX {
                        idx[c2] = order.len();
                        off[c2] = e % 4 & !1;
                        order.push(c2);
                    }
                    let val = 4 * idx[c2] + (e % 4 + 4 - off[c2]) % 4;
                    if val != m[q] {
                        if val < m[q] {
                            return false;
                        }
                        break 'rows;
                    }
                    q += 1;
                }
                i += 1;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures;
    use crate::iso::{isomorphic, IsoFlags};

    #[test]
    fn tiny_counts() {
        assert_eq!(census(0).len(), 1);
        assert_eq!(census(0)[0], CombMap::trivial(1));
        let one = census(1);
        assert_eq!(one.len(), 3);
        for target in [fixtures::kink().forget_orientation(), fixtures::torus_clasp()] {
            assert!(one.iter().any(|m| isomorphic(m, &target, IsoFlags::default()).is_some()));
        }
        let mirror_kink = fixtures::kink().forget_orientation().mirror();
        assert!(one.iter().any(|m| isomorphic(m, &mirror_kink, IsoFlags::default()).is_some()));
    }

    #[test]
    fn census_members_are_connected_and_distinct() {
        for n in 0..=3 {
            let maps = census(n);
            let mut keys: Vec<_> = maps.iter().map(canonical_form).collect();
            keys.dedup();
            assert_eq!(keys.len(), maps.len(), "duplicates at n={n}");
            assert!(keys.windows(2).all(|w| w[0] < w[1]), "unsorted at n={n}");
            for m in &maps {
                assert_eq!(m.n_crossings(), n);
                assert_eq!(m.pieces().len().max(1), 1);
                assert_eq!(m.free_loops(), if n == 0 { 1 } else { 0 });
            }
        }
    }

    #[test]
    fn matches_exhaustive_dedup() {
        // brute-force reference: enumerate all matchings without symmetry
        // reductions and dedup by canonical form
        for n in 1..=3 {
            let mut forms = std::collections::BTreeSet::new();
            let mut m = vec![UNMATCHED; 4 * n];
            fn rec(m: &mut Vec<usize>, forms: &mut std::collections::BTreeSet<Vec<u8>>, n: usize) {
                let Some(d) = m.iter().position(|&x| x == UNMATCHED) else {
                    if connected(n, m) {
                        let map = CombMap::from_matching(n, m.clone(), 0).unwrap();
                        forms.insert(canonical_form(&map));
                    }
                    return;
                };
                for e in d + 1..4 * n {
                    if m[e] == UNMATCHED {
                        m[d] = e;
                        m[e] = d;
                        rec(m, forms, n);
                        m[d] = UNMATCHED;
                        m[e] = UNMATCHED;
                    }
                }
            }
            rec(&mut m, &mut forms, n);
            let fast: Vec<_> = census(n).iter().map(canonical_form).collect();
            assert_eq!(fast, forms.into_iter().collect::<Vec<_>>(), "mismatch at n={n}");
        }
    }

    #[test]
    fn census_contains_known_diagrams() {
        let three = census(3);
        let trefoil = fixtures::trefoil().forget_orientation();
        assert!(three.iter().any(|m| isomorphic(m, &trefoil, IsoFlags::default()).is_some()));
        let vt = fixtures::virtual_trefoil().forget_orientation();
        let two = census(2);
        assert!(two.iter().any(|m| isomorphic(m, &vt, IsoFlags::default()).is_some()));
    }

    #[test]
    fn thread_env_is_deterministic() {
        let base: Vec<_> = census(2).iter().map(canonical_form).collect();
        std::env::set_var("SURFACE_LINKS_THREADS", "1");
        let single: Vec<_> = census(2).iter().map(canonical_form).collect();
        std::env::remove_var("SURFACE_LINKS_THREADS");
        assert_eq!(base, single);
    }
}
