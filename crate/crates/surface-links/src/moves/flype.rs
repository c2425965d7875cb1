//! Flype detection and application.
//!
//! A flype site is a crossing `c` together with a tangle `T` hanging off one
//! pair of adjacent `c`-slots: cutting the two edges at that pair and two
//! more edges must detach `T` from everything else, and `T` together with
//! `c` must fit in a disk on the surface. Applying the flype rotates the
//! tangle half a turn and moves `c` to its far side.

use super::{rewire, End};
use crate::diagram::{CombMap, DartId};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;

/// Slot relabeling of a flipped tangle crossing: the half-turn reverses the
/// rotation order and swaps over/under, which exchanges slots 0<->1 and 2<->3.
const FLIP: [usize; 4] = [1, 0, 3, 2];

fn flip(d: DartId) -> DartId {
    4 * (d / 4) + FLIP[d % 4]
}

fn ekey(map: &CombMap, d: DartId) -> (DartId, DartId) {
    let e = map.m(d);
    (d.min(e), d.max(e))
}

/// A flype site. Darts `4c+side` and `4c+side+1` run from the pivot
/// crossing into the tangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlypeSite {
    /// Pivot crossing that moves through the tangle.
    pub crossing: usize,
    /// Slot `0..4`: the tangle hangs off slots `side` and `side+1`.
    pub side: u8,
    /// Tangle-side darts of the four cut edges, in the order
    /// `[m(4c+side), m(4c+side+1), far-north, far-south]`.
    pub tangle_darts: [DartId; 4],
    /// Sorted crossings inside the tangle.
    pub tangle: Vec<usize>,
    /// True when the tangle is empty and the flype is the identity.
    pub degenerate: bool,
}

pub(crate) struct Dsu(Vec<usize>);

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let p = self.0[c];
            self.0[c] = r;
            c = p;
        }
        r
    }
    pub(crate) fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        self.0[rx] = ry;
    }
}

/// Crossing components after deleting the four cut edges.
fn components_without(map: &CombMap, cut: &BTreeSet<(DartId, DartId)>) -> Dsu {
    let mut dsu = Dsu::new(map.n_crossings());
    for (d, e) in map.edges() {
        if !cut.contains(&(d, e)) {
            dsu.union(d / 4, e / 4);
        }
    }
    dsu
}

/// Does the tangle plus the pivot crossing close into a sphere when a
/// fifth crossing caps off its four boundary strands? This is exactly the
/// condition that the flype region is a disk on the surface.
fn disk_closure(map: &CombMap, c: usize, s: usize, tangle: &[usize], qn: DartId, qs: DartId) -> bool {
    let t = tangle.len();
    let mut id = vec![usize::MAX; map.n_crossings()];
    for (i, &cr) in tangle.iter().enumerate() {
        id[cr] = i;
    }
    id[c] = t;
    let x = t + 1;
    let nd = |d: DartId| 4 * id[d / 4] + d % 4;
    let (u, v) = (4 * c + (s + 2) % 4, 4 * c + (s + 3) % 4);
    let skip: BTreeSet<(DartId, DartId)> =
        [ekey(map, qn), ekey(map, qs), ekey(map, u), ekey(map, v)].into();
    let mut edges = Vec::new();
    for (d, e) in map.edges() {
        if id[d / 4] != usize::MAX && id[e / 4] != usize::MAX && !skip.contains(&(d, e)) {
            edges.push((nd(d), nd(e)));
        }
    }
    // cap in reversed cyclic order: the boundary seen from outside the disk
    edges.push((nd(u), 4 * x));
    edges.push((nd(v), 4 * x + 3));
    edges.push((nd(qs), 4 * x + 2));
    edges.push((nd(qn), 4 * x + 1));
    let Ok(closure) = CombMap::new(t + 2, &edges, 0) else {
        return false;
    };
    closure.pieces().len() == 1 && closure.genus().map_or(false, |g| g == 0)
}

/// All flype sites of the map, degenerate ones included, in deterministic
/// order: by pivot crossing, side, then cut-edge enumeration.
pub fn find_flypes(map: &CombMap) -> Vec<FlypeSite> {
    let n = map.n_crossings();
    let edges = map.edges();
    let mut sites = Vec::new();
    for c in 0..n {
        for s in 0..4usize {
            let a = 4 * c + s;
            let b = 4 * c + (s + 1) % 4;
            sites.push(FlypeSite {
                crossing: c,
                side: s as u8,
                tangle_darts: [map.m(a), map.m(b), map.m(b), map.m(a)],
                tangle: Vec::new(),
                degenerate: true,
            });
            if map.m(a) / 4 == c || map.m(b) / 4 == c {
                continue;
            }
            let (ka, kb) = (ekey(map, a), ekey(map, b));
            for (i, &e1) in edges.iter().enumerate() {
                if e1 == ka || e1 == kb {
                    continue;
                }
                for &e2 in &edges[i + 1..] {
                    if e2 == ka || e2 == kb {
                        continue;
                    }
                    let cut: BTreeSet<(DartId, DartId)> = [ka, kb, e1, e2].into();
                    let mut dsu = components_without(map, &cut);
                    let ct = dsu.find(map.m(a) / 4);
                    if dsu.find(c) == ct || dsu.find(map.m(b) / 4) != ct {
                        continue;
                    }
                    let q1 = match (dsu.find(e1.0 / 4) == ct, dsu.find(e1.1 / 4) == ct) {
                        (true, false) => e1.0,
                        (false, true) => e1.1,
                        _ => continue,
                    };
                    let q2 = match (dsu.find(e2.0 / 4) == ct, dsu.find(e2.1 / 4) == ct) {
                        (true, false) => e2.0,
                        (false, true) => e2.1,
                        _ => continue,
                    };
                    let tangle: Vec<usize> = (0..n).filter(|&cr| dsu.find(cr) == ct).collect();
                    for (qn, qs) in [(q1, q2), (q2, q1)] {
                        if disk_closure(map, c, s, &tangle, qn, qs) {
                            sites.push(FlypeSite {
                                crossing: c,
                                side: s as u8,
                                tangle_darts: [map.m(a), map.m(b), qn, qs],
                                tangle: tangle.clone(),
                                degenerate: false,
                            });
                        }
                    }
                }
            }
        }
    }
    sites
}

/// Apply a flype: rotate the tangle half a turn in place (slot relabeling
/// [`FLIP`] on its crossings) and move the pivot crossing to the far cut.
/// Crossing ids, signs, genus, writhe and orientation are preserved.
pub fn apply_flype(map: &CombMap, site: &FlypeSite) -> Result<CombMap> {
    let n = map.n_crossings();
    let c = site.crossing;
    let s = site.side as usize;
    if c >= n || site.side > 3 {
        return Err(Error::InvalidSite(format!("no crossing {c} / side {}", site.side)));
    }
    if site.degenerate {
        return Ok(map.clone());
    }
    let a = 4 * c + s;
    let b = 4 * c + (s + 1) % 4;
    let u = 4 * c + (s + 2) % 4;
    let v = 4 * c + (s + 3) % 4;
    let [pws, pwn, qn, qs] = site.tangle_darts;
    if pws != map.m(a) || pwn != map.m(b) {
        return Err(Error::InvalidSite("tangle darts do not match the pivot edges".into()));
    }
    let cut: BTreeSet<(DartId, DartId)> =
        [ekey(map, a), ekey(map, b), ekey(map, qn), ekey(map, qs)].into();
    if cut.len() != 4 {
        return Err(Error::InvalidSite("cut edges are not distinct".into()));
    }
    let mut dsu = components_without(map, &cut);
    let ct = dsu.find(pws / 4);
    let inside: Vec<usize> = (0..n).filter(|&cr| dsu.find(cr) == ct).collect();
    if dsu.find(c) == ct
        || dsu.find(pwn / 4) != ct
        || dsu.find(qn / 4) != ct
        || dsu.find(qs / 4) != ct
        || dsu.find(map.m(qn) / 4) == ct
        || dsu.find(map.m(qs) / 4) == ct
        || inside != site.tangle
    {
        return Err(Error::InvalidSite("cut does not detach the stated tangle".into()));
    }

    let tset: BTreeSet<usize> = site.tangle.iter().copied().collect();
    let relabel: Vec<DartId> =
        (0..4 * n).map(|d| if tset.contains(&(d / 4)) { flip(d) } else { d }).collect();
    let severed: BTreeSet<DartId> = [
        a,
        pws,
        b,
        pwn,
        u,
        map.m(u),
        v,
        map.m(v),
        qn,
        map.m(qn),
        qs,
        map.m(qs),
    ]
    .into();
    let rows = [
        (End::Dart(a), End::Stub(qs)),
        (End::Dart(b), End::Stub(qn)),
        (End::Dart(u), End::Dart(flip(qs))),
        (End::Dart(v), End::Dart(flip(qn))),
        (End::Dart(flip(pws)), End::Stub(u)),
        (End::Dart(flip(pwn)), End::Stub(v)),
    ];
    let mut out = rewire(map, n, &relabel, &severed, &rows, map.free_loops())?;
    if let Some(fw) = map.orientation_vec() {
        let mut fw2 = vec![false; 4 * n];
        for d in 0..4 * n {
            fw2[relabel[d]] = fw[d];
        }
        // the pivot's own flags are stale; each of its edges has exactly one
        // forward end, and the far ends are already settled
        for k in 0..4 {
            let d = 4 * c + k;
            fw2[d] = !fw2[out.m(d)];
        }
        out.set_orientation_unchecked(fw2);
        out.validate()?;
    }
    match map.declared_genus() {
        Some(g) => out.with_declared_genus(g),
        None => Ok(out),
    }
}
