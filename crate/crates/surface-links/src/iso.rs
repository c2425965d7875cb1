//! Diagram isomorphism and canonical forms.
//!
//! An isomorphism maps darts by `4c+s -> 4*pi(c) + (eps*s + k_c mod 4)`:
//! `pi` is a crossing bijection, `eps = -1` reflects the surface
//! orientation, and the per-crossing offsets `k_c` share a global parity —
//! odd parity swaps over/under everywhere (a global mirror). The default
//! flag set forbids both reflection and mirroring. Maps carrying component
//! orientations are compared strictly; if either side is unoriented the
//! comparison ignores orientations.

use crate::diagram::{CombMap, DartId};
use std::collections::BTreeMap;

/// Which global transformations the isomorphism search may use.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IsoFlags {
    /// Allow reversing the surface orientation.
    pub allow_reflect: bool,
    /// Allow swapping over/under at every crossing.
    pub allow_mirror: bool,
}

impl IsoFlags {
    pub fn all() -> Self {
        IsoFlags { allow_reflect: true, allow_mirror: true }
    }
}

/// A witness isomorphism between two maps.
#[derive(Debug, Clone)]
pub struct DiagramIso {
    /// Image of each crossing.
    pub crossing_map: Vec<usize>,
    /// Image of each dart.
    pub dart_map: Vec<DartId>,
    /// Surface orientation reversed.
    pub reflect: bool,
    /// Over/under swapped globally.
    pub mirror: bool,
}

impl DiagramIso {
    /// Check that the witness intertwines the edge involutions.
    pub fn verify(&self, a: &CombMap, b: &CombMap) -> bool {
        if self.dart_map.len() != a.n_darts() {
            return false;
        }
        let mut seen = vec![false; b.n_darts()];
        for d in 0..a.n_darts() {
            let e = self.dart_map[d];
            if e >= b.n_darts() || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        (0..a.n_darts()).all(|d| self.dart_map[a.m(d)] == b.m(self.dart_map[d]))
    }
}

fn effective_genus(m: &CombMap) -> usize {
    m.declared_genus().unwrap_or_else(|| m.genus().unwrap_or(usize::MAX))
}

/// Decide isomorphism under `flags`, returning a witness; deterministic.
pub fn isomorphic(a: &CombMap, b: &CombMap, flags: IsoFlags) -> Option<DiagramIso> {
    if a.n_crossings() != b.n_crossings()
        || a.free_loops() != b.free_loops()
        || effective_genus(a) != effective_genus(b)
    {
        return None;
    }
    let strict = a.is_oriented() && b.is_oriented();
    let mut combos = vec![(1i8, 0u8)];
    if flags.allow_mirror {
        combos.push((1, 1));
    }
    if flags.allow_reflect {
        combos.push((-1, 0));
        if flags.allow_mirror {
            combos.push((-1, 1));
        }
    }
    let pa = Pieces::of(a);
    let pb = Pieces::of(b);
    if pa.maps.len() != pb.maps.len() {
        return None;
    }
    for (eps, p) in combos {
        if let Some(dart_map) = match_pieces(a, b, &pa, &pb, eps, p, strict) {
            let crossing_map = (0..a.n_crossings()).map(|c| dart_map[4 * c] / 4).collect();
            return Some(DiagramIso { crossing_map, dart_map, reflect: eps < 0, mirror: p == 1 });
        }
    }
    None
}

struct Pieces {
    /// Standalone sub-map per connected piece.
    maps: Vec<CombMap>,
    /// Global crossing ids per piece, ascending.
    crossings: Vec<Vec<usize>>,
}

impl Pieces {
    fn of(m: &CombMap) -> Self {
        let crossings = m.pieces();
        let maps = crossings.iter().map(|p| extract_piece(m, p)).collect();
        Pieces { maps, crossings }
    }
}

fn extract_piece(m: &CombMap, piece: &[usize]) -> CombMap {
    let mut local = BTreeMap::new();
    for (i, &c) in piece.iter().enumerate() {
        local.insert(c, i);
    }
    let tr = |d: DartId| 4 * local[&(d / 4)] + d % 4;
    let mut edges = Vec::new();
    for &c in piece {
        for s in 0..4 {
            let d = 4 * c + s;
            let e = m.m(d);
            if d < e {
                edges.push((tr(d), tr(e)));
            }
        }
    }
    let mut sub = CombMap::new(piece.len(), &edges, 0).expect("piece extraction");
    if let Some(fw) = m.orientation_vec() {
        let mut v = vec![false; 4 * piece.len()];
        for &c in piece {
            for s in 0..4 {
                v[tr(4 * c + s)] = fw[4 * c + s];
            }
        }
        sub.set_orientation_unchecked(v);
    }
    sub
}

/// Backtracking bijection between pieces under a fixed (eps, parity).
fn match_pieces(
    a: &CombMap,
    b: &CombMap,
    pa: &Pieces,
    pb: &Pieces,
    eps: i8,
    p: u8,
    strict: bool,
) -> Option<Vec<DartId>> {
    let k = pa.maps.len();
    let mut used = vec![false; k];
    let mut assignment: Vec<(usize, Vec<DartId>)> = Vec::with_capacity(k);
    fn rec(
        i: usize,
        pa: &Pieces,
        pb: &Pieces,
        used: &mut [bool],
        assignment: &mut Vec<(usize, Vec<DartId>)>,
        eps: i8,
        p: u8,
        strict: bool,
    ) -> bool {
        if i == pa.maps.len() {
            return true;
        }
        for j in 0..pb.maps.len() {
            if used[j] || pa.maps[i].n_crossings() != pb.maps[j].n_crossings() {
                continue;
            }
            if let Some(dm) = connected_iso(&pa.maps[i], &pb.maps[j], eps, p, strict) {
                used[j] = true;
                assignment.push((j, dm));
                if rec(i + 1, pa, pb, used, assignment, eps, p, strict) {
                    return true;
                }
                assignment.pop();
                used[j] = false;
            }
        }
        false
    }
    if !rec(0, pa, pb, &mut used, &mut assignment, eps, p, strict) {
        return None;
    }
    let mut dart_map = vec![0; a.n_darts()];
    for (i, (j, dm)) in assignment.iter().enumerate() {
        for (ld, &le) in dm.iter().enumerate() {
            let gd = 4 * pa.crossings[i][ld / 4] + ld % 4;
            let ge = 4 * pb.crossings[*j][le / 4] + le % 4;
            dart_map[gd] = ge;
        }
    }
    let _ = b;
    Some(dart_map)
}

/// Isomorphism search between connected maps with fixed (eps, parity):
/// propagate a seed dart image across crossings and edges.
fn connected_iso(a: &CombMap, b: &CombMap, eps: i8, p: u8, strict: bool) -> Option<Vec<DartId>> {
    let n = a.n_crossings();
    if n == 0 {
        return Some(Vec::new());
    }
    'seed: for e0 in (0..b.n_darts()).filter(|e| (e % 4) as u8 % 2 == p) {
        // psi(4c+s) = 4*pi(c) + (eps*s + k_c); seed: psi(dart 0) = e0
        let mut pi = vec![usize::MAX; n];
        let mut kk = vec![0i32; n];
        let mut img_used = vec![false; n];
        pi[0] = e0 / 4;
        kk[0] = (e0 % 4) as i32;
        img_used[e0 / 4] = true;
        let psi = |c: usize, s: usize, pi: &[usize], kk: &[i32]| -> DartId {
            let t = (eps as i32 * s as i32 + kk[c]).rem_euclid(4) as usize;
            4 * pi[c] + t
        };
        let mut stack = vec![0usize];
        let mut visited = vec![false; n];
        visited[0] = true;
        while let Some(c) = stack.pop() {
            for s in 0..4 {
                let d = 4 * c + s;
                let e = b.m(psi(c, s, &pi, &kk));
                let d2 = a.m(d);
                let (c2, s2) = (d2 / 4, d2 % 4);
                if !visited[c2] {
                    // force pi, k at c2 from psi(d2) = e
                    let cand_pi = e / 4;
                    let cand_k = ((e % 4) as i32 - eps as i32 * s2 as i32).rem_euclid(4);
                    if cand_k as u8 % 2 != p || (img_used[cand_pi] && pi[c2] != cand_pi) {
                        continue 'seed;
                    }
                    if img_used[cand_pi] {
                        continue 'seed;
                    }
                    pi[c2] = cand_pi;
                    kk[c2] = cand_k;
                    img_used[cand_pi] = true;
                    visited[c2] = true;
                    stack.push(c2);
                } else if psi(c2, s2, &pi, &kk) != e {
                    continue 'seed;
                }
            }
        }
        // a is connected so everything is assigned; collect and check
        let mut dm = vec![0; a.n_darts()];
        for c in 0..n {
            for s in 0..4 {
                dm[4 * c + s] = psi(c, s, &pi, &kk);
            }
        }
        if strict {
            let fa = a.orientation_vec().unwrap();
            let fb = b.orientation_vec().unwrap();
            if (0..a.n_darts()).any(|d| fa[d] != fb[dm[d]]) {
                continue 'seed;
            }
        }
        return Some(dm);
    }
    None
}

/// Canonical byte string: equal strings exactly for maps isomorphic under
/// the default flags (orientation-preserving, no mirror). Used for orbit
/// and census deduplication.
pub fn canonical_form(m: &CombMap) -> Vec<u8> {
    let pieces = m.pieces();
    let mut codes: Vec<Vec<u8>> =
        pieces.iter().map(|p| piece_canonical(&extract_piece(m, p))).collect();
    codes.sort();
    let mut out = b"SLD1".to_vec();
    out.push(m.is_oriented() as u8);
    out.extend((effective_genus(m) as u32).to_be_bytes());
    out.extend((m.free_loops() as u32).to_be_bytes());
    out.extend((codes.len() as u32).to_be_bytes());
    for c in codes {
        out.extend((c.len() as u32).to_be_bytes());
        out.extend(c);
    }
    out
}

/// Least BFS code over all starts and even rotations of a connected map.
fn piece_canonical(m: &CombMap) -> Vec<u8> {
    let n = m.n_crossings();
    let fw = m.orientation_vec();
    let mut best: Option<Vec<u8>> = None;
    for c0 in 0..n {
        for off0 in [0usize, 2] {
            let mut idx = vec![usize::MAX; n];
            let mut off = vec![0usize; n];
            let mut order = Vec::with_capacity(n);
            idx[c0] = 0;
            off[c0] = off0;
            order.push(c0);
            let mut code = Vec::with_capacity(20 * n + 4);
            let mut i = 0;
            while i < order.len() {
                let c = order[i];
                for t in 0..4 {
                    let d = 4 * c + (t + off[c]) % 4;
                    let e = m.m(d);
                    let c2 = e / 4;
                    if idx[c2] == usize::MAX {
                        idx[c2] = order.len();
                        off[c2] = (e % 4) & !1;
                        order.push(c2);
                    }
                    let t2 = (e % 4 + 4 - off[c2]) % 4;
                    code.extend_from_slice(&(idx[c2] as u32).to_be_bytes());
                    code.push(t2 as u8);
                }
                i += 1;
            }
            if let Some(v) = fw {
                for &c in &order {
                    for t in 0..4 {
                        code.push(v[4 * c + (t + off[c]) % 4] as u8);
                    }
                }
            }
            if best.as_ref().map_or(true, |b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;

    #[test]
    fn identity_and_relabel() {
        let t = trefoil();
        let id = isomorphic(&t, &t, IsoFlags::default()).unwrap();
        assert!(id.verify(&t, &t));
        let r = t.relabel(&[2, 0, 1]);
        let w = isomorphic(&t, &r, IsoFlags::default()).unwrap();
        assert!(w.verify(&t, &r));
        assert_eq!(canonical_form(&t), canonical_form(&r));
    }

    #[test]
    fn mirror_detection() {
        let t = trefoil().forget_orientation();
        let m = t.mirror();
        assert!(isomorphic(&t, &m, IsoFlags::default()).is_none());
        let w = isomorphic(&t, &m, IsoFlags { allow_mirror: true, ..Default::default() }).unwrap();
        assert!(w.mirror);
        assert!(w.verify(&t, &m));
        assert_ne!(canonical_form(&t), canonical_form(&m));
    }

    #[test]
    fn kink_vs_mirror_kink() {
        let k = kink().forget_orientation();
        let mk = k.mirror();
        assert!(isomorphic(&k, &mk, IsoFlags::default()).is_none());
        assert!(isomorphic(&k, &mk, IsoFlags { allow_mirror: true, ..Default::default() })
            .is_some());
        assert!(isomorphic(&k, &mk, IsoFlags { allow_reflect: true, ..Default::default() })
            .is_some());
    }

    #[test]
    fn different_maps() {
        let t = trefoil().forget_orientation();
        let v = virtual_trefoil().forget_orientation();
        assert!(isomorphic(&t, &v, IsoFlags::all()).is_none());
        assert_ne!(canonical_form(&t), canonical_form(&v));
    }

    #[test]
    fn empty_sentinel() {
        let e = crate::CombMap::empty();
        let s = canonical_form(&e);
        assert_eq!(s, canonical_form(&crate::CombMap::empty()));
        assert_ne!(s, canonical_form(&crate::CombMap::trivial(1)));
    }

    #[test]
    fn reflection_detection() {
        let t = trefoil().forget_orientation();
        let r = t.reflect();
        // the trefoil diagram is isomorphic to its reflection only when
        // reflections are allowed (reflecting also mirrors the over/under
        // pattern seen along faces, but slots keep their parity)
        let got = isomorphic(&t, &r, IsoFlags { allow_reflect: true, ..Default::default() });
        assert!(got.is_some());
        assert!(got.unwrap().verify(&t, &r));
    }

    #[test]
    fn disconnected_matching() {
        let t = trefoil().forget_orientation();
        let v = virtual_trefoil().forget_orientation();
        let join = |a: &crate::CombMap, b: &crate::CombMap| {
            let mut edges = a.edges();
            let off = a.n_darts();
            edges.extend(b.edges().iter().map(|&(x, y)| (x + off, y + off)));
            crate::CombMap::new(a.n_crossings() + b.n_crossings(), &edges, 0).unwrap()
        };
        let tv = join(&t, &v);
        let vt = join(&v, &t);
        let w = isomorphic(&tv, &vt, IsoFlags::default()).unwrap();
        assert!(w.verify(&tv, &vt));
        assert_eq!(canonical_form(&tv), canonical_form(&vt));
        let tt = join(&t, &t);
        assert!(isomorphic(&tv, &tt, IsoFlags::all()).is_none());
    }
}
