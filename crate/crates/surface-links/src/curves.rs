//! Transverse multicurve diagrams in the thickened surface of a map, and
//! generalized linking numbers.
//!
//! A curve component is a closed sequence of steps:
//!
//! - `Pass`: through the band at a crossing between opposite corners
//!   (`cls` 0 joins corners 0 and 2, `cls` 1 joins 1 and 3) at a rational
//!   `lane` in (0,1). Two passes through one band always cross exactly
//!   once; the band is embedded so that lane height decreases with the
//!   lane for `cls` 0 and increases for `cls` 1, which resolves over/under.
//! - `Strand`: along a link strand through a crossing (entering at
//!   `entry_slot`); strands pass over everything in the band iff the slot
//!   is even (the over passage).
//! - `Chord`: across the interior of a face between two boundary points,
//!   floating at a rational `level`; chords of one face cross iff their
//!   endpoints interleave along the boundary walk, and over/under follows
//!   the level (ties need a resolver).
//!
//! Boundary points are `(walk position, lane)`: a corner of a face sits
//! after one step of its boundary walk, and within a corner the lanes are
//! met in increasing order.
//!
//! `realize` produces disjoint realizations of spine chains (weights over
//! the crossings of one checkerboard color), optionally doubled into the
//! transfer pushoff pair at levels ±1 flanking the chain's lanes.

use crate::diagram::{CombMap, FaceStructure};
use crate::{Error, Result};
use num_rational::Rational64;

pub type Lane = Rational64;

fn lane(n: i64, d: i64) -> Lane {
    Rational64::new(n, d)
}

/// One step of a curve component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// Through the band at `crossing` between corners `cls` and `cls + 2`;
    /// `dir = +1` runs from corner `cls` to `cls + 2`.
    Pass { crossing: usize, cls: u8, dir: i8, lane: Lane },
    /// Along the link strand entering the crossing at `entry_slot`.
    Strand { crossing: usize, entry_slot: u8 },
    /// Across `face` from boundary point `from` to `to` at height `level`.
    Chord { face: usize, from: (usize, Lane), to: (usize, Lane), level: Lane },
}

/// A multicurve: a set of closed, oriented components.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CurveDiagram {
    pub components: Vec<Vec<Step>>,
}

impl CurveDiagram {
    fn steps(&self) -> impl Iterator<Item = &Step> {
        self.components.iter().flatten()
    }
}

/// A transverse double point between two multicurves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveCrossing {
    /// The first multicurve passes over.
    pub first_over: bool,
    /// Local intersection sign det(tangent of first, tangent of second).
    pub sign: i64,
}

/// All transverse crossings between `a` and `b`. `tie` resolves over/under
/// where heights coincide (returning true puts `a` on top); without a
/// resolver such configurations are an error.
pub fn crossings_between(
    a: &CurveDiagram,
    b: &CurveDiagram,
    mut tie: Option<&mut dyn FnMut() -> bool>,
) -> Result<Vec<CurveCrossing>> {
    let mut out = Vec::new();
    for sa in a.steps() {
        for sb in b.steps() {
            if let Some(x) = step_crossing(sa, sb, &mut tie)? {
                out.push(x);
            }
        }
    }
    Ok(out)
}

fn step_crossing(
    sa: &Step,
    sb: &Step,
    tie: &mut Option<&mut dyn FnMut() -> bool>,
) -> Result<Option<CurveCrossing>> {
    use Step::*;
    match (sa, sb) {
        (
            Pass { crossing: ca, cls: ka, dir: da, lane: la },
            Pass { crossing: cb, cls: kb, dir: db, lane: lb },
        ) if ca == cb => {
            if ka == kb {
                if la == lb {
                    return Err(Error::AmbiguousCrossing(format!(
                        "coincident passes in band {ca}"
                    )));
                }
                let sign = (*da as i64) * (*db as i64) * if lb > la { 1 } else { -1 };
                // lane height: cls 0 decreases with the lane, cls 1 increases
                let first_over = if *ka == 0 { la < lb } else { la > lb };
                Ok(Some(CurveCrossing { first_over, sign }))
            } else {
                let ta = pass_tangent(*ka, *da, *la);
                let tb = pass_tangent(*kb, *db, *lb);
                let d = det(ta, tb);
                let ha = pass_height(*ka, *la);
                let hb = pass_height(*kb, *lb);
                let first_over = if ha != hb { ha > hb } else { *ka == 0 };
                Ok(Some(CurveCrossing { first_over, sign: sgn(d) }))
            }
        }
        (Pass { crossing: ca, cls, dir, lane: l }, Strand { crossing: cb, entry_slot })
            if ca == cb =>
        {
            let d = det(pass_tangent(*cls, *dir, *l), strand_tangent(*entry_slot));
            Ok(Some(CurveCrossing { first_over: entry_slot % 2 == 1, sign: sgn(d) }))
        }
        (Strand { crossing: ca, entry_slot }, Pass { crossing: cb, cls, dir, lane: l })
            if ca == cb =>
        {
            let d = det(strand_tangent(*entry_slot), pass_tangent(*cls, *dir, *l));
            Ok(Some(CurveCrossing { first_over: entry_slot % 2 == 0, sign: sgn(d) }))
        }
        (Strand { crossing: ca, entry_slot: ea }, Strand { crossing: cb, entry_slot: eb })
            if ca == cb =>
        {
            if ea % 2 == eb % 2 {
                return Err(Error::AmbiguousCrossing(format!(
                    "coincident strand passages at crossing {ca}"
                )));
            }
            let d = det(strand_tangent(*ea), strand_tangent(*eb));
            Ok(Some(CurveCrossing { first_over: ea % 2 == 0, sign: sgn(d) }))
        }
        (
            Chord { face: fa, from: pa, to: qa, level: va },
            Chord { face: fb, from: pb, to: qb, level: vb },
        ) if fa == fb => {
            for (x, y) in [(pa, pb), (pa, qb), (qa, pb), (qa, qb)] {
                if x == y {
                    return Err(Error::AmbiguousCrossing(format!(
                        "chords share a boundary point in face {fa}"
                    )));
                }
            }
            let pb_in = in_arc(pb, pa, qa);
            let qb_in = in_arc(qb, pa, qa);
            if pb_in == qb_in {
                return Ok(None);
            }
            // walking the boundary from `pa`: meeting `pb` first gives the
            // pattern (pa, pb, qa, qb), sign -1; meeting `qb` first gives
            // (pa, qb, qa, pb), sign +1
            let sign = if pb_in { -1 } else { 1 };
            let first_over = if va != vb {
                va > vb
            } else {
                match tie {
                    Some(f) => f(),
                    None => {
                        return Err(Error::AmbiguousCrossing(format!(
                            "chords at equal level in face {fa}"
                        )))
                    }
                }
            };
            Ok(Some(CurveCrossing { first_over, sign }))
        }
        _ => Ok(None),
    }
}

/// Strictly inside the boundary arc from `p` to `q` (walk order).
fn in_arc(x: &(usize, Lane), p: &(usize, Lane), q: &(usize, Lane)) -> bool {
    if p < q {
        p < x && x < q
    } else {
        x > p || x < q
    }
}

fn sgn(r: Rational64) -> i64 {
    match r.cmp(&Rational64::from_integer(0)) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
    }
}

fn det(a: (Rational64, Rational64), b: (Rational64, Rational64)) -> Rational64 {
    a.0 * b.1 - a.1 * b.0
}

/// Tangent of a band pass at its lane, in the crossing's local frame.
fn pass_tangent(cls: u8, dir: i8, l: Lane) -> (Rational64, Rational64) {
    let four_l = Rational64::from_integer(4) * l - Rational64::from_integer(2);
    let (x, y) = if cls == 0 {
        (four_l, Rational64::from_integer(-2))
    } else {
        (Rational64::from_integer(2), four_l)
    };
    let d = Rational64::from_integer(dir as i64);
    (x * d, y * d)
}

/// Height of a pass at the band's crossing point cluster.
fn pass_height(cls: u8, l: Lane) -> Rational64 {
    let one = Rational64::from_integer(1);
    let two = Rational64::from_integer(2);
    if cls == 0 {
        one - two * l
    } else {
        two * l - one
    }
}

/// Tangent of the strand entering at `slot` (toward the exit quadrant).
fn strand_tangent(slot: u8) -> (Rational64, Rational64) {
    let t = [(-1, -1), (1, -1), (1, 1), (-1, 1)][slot as usize % 4];
    (Rational64::from_integer(t.0), Rational64::from_integer(t.1))
}

/// Generalized linking number: signed count of crossings where `a` passes
/// over `b`.
pub fn lk(a: &CurveDiagram, b: &CurveDiagram) -> Result<i64> {
    Ok(lk_pair(a, b)?.0)
}

/// `(lk(a,b), lk(b,a))` from one crossing enumeration.
pub fn lk_pair(a: &CurveDiagram, b: &CurveDiagram) -> Result<(i64, i64)> {
    Ok(lks(&crossings_between(a, b, None)?))
}

/// As `lk_pair`, resolving equal-height chord crossings through `tie`.
pub fn lk_pair_with(
    a: &CurveDiagram,
    b: &CurveDiagram,
    tie: &mut dyn FnMut() -> bool,
) -> Result<(i64, i64)> {
    Ok(lks(&crossings_between(a, b, Some(tie))?))
}

fn lks(crossings: &[CurveCrossing]) -> (i64, i64) {
    let ab = crossings.iter().filter(|x| x.first_over).map(|x| x.sign).sum();
    let ba = crossings.iter().filter(|x| !x.first_over).map(|x| -x.sign).sum();
    (ab, ba)
}

/// Algebraic intersection number of the projections: the sum of crossing
/// signs, independent of over/under data.
pub fn projection_intersection(a: &CurveDiagram, b: &CurveDiagram) -> Result<i64> {
    let mut any = || true;
    Ok(crossings_between(a, b, Some(&mut any))?.iter().map(|x| x.sign).sum())
}

/// A chain over the bands of one checkerboard color: `weights[c]` passes
/// run through the band at crossing `c` (sign = direction), realized as
/// `transfer = false` base curves at level 0 or as the transfer pushoff
/// double at levels ±1.
#[derive(Debug, Clone, Copy)]
pub struct ChainSpec<'a> {
    pub weights: &'a [i64],
    pub transfer: bool,
}

/// Realize the chains simultaneously and disjointly: passes of all chains
/// through one band take distinct lanes, pushoff copies flank their
/// chain's lanes, and chords are matched without crossings inside each
/// face. `cls_at[c]` is the corner parity of the color at crossing `c`.
pub fn realize(
    map: &CombMap,
    faces: &FaceStructure,
    cls_at: &[u8],
    specs: &[ChainSpec],
) -> Result<Vec<CurveDiagram>> {
    let n = map.n_crossings();
    for s in specs {
        if s.weights.len() != n {
            return Err(Error::Structural("chain length != crossing count".into()));
        }
    }
    if cls_at.len() != n {
        return Err(Error::Structural("class parity length != crossing count".into()));
    }
    // corner id (dart id of the corner) -> (face, walk position)
    let mut corner_pos = vec![(usize::MAX, usize::MAX); map.n_darts()];
    for (f, walk) in faces.faces.iter().enumerate() {
        for (i, &d) in walk.iter().enumerate() {
            corner_pos[map.m(d)] = (f, i);
        }
    }

    // one unit per pass, positioned within its band
    struct Unit {
        spec: usize,
        crossing: usize,
        dir: i8,
        pos: Lane,
        delta: Lane,
    }
    let mut units: Vec<Unit> = Vec::new();
    for c in 0..n {
        let mut local = Vec::new();
        for (si, s) in specs.iter().enumerate() {
            let w = s.weights[c];
            for _ in 0..w.unsigned_abs() {
                local.push((si, if w > 0 { 1i8 } else { -1 }));
            }
        }
        let k = local.len() as i64;
        for (u, (si, dir)) in local.into_iter().enumerate() {
            units.push(Unit {
                spec: si,
                crossing: c,
                dir,
                pos: lane(u as i64 + 1, k + 1),
                delta: lane(1, 3 * (k + 1)),
            });
        }
    }

    // entry/exit corners of a unit's pass
    let ends = |u: &Unit| -> (usize, usize) {
        let k = cls_at[u.crossing] as usize;
        let (a, b) = (4 * u.crossing + k, 4 * u.crossing + k + 2);
        if u.dir > 0 {
            (a, b)
        } else {
            (b, a)
        }
    };

    // per spec: non-crossing chord matching inside each face, on the key
    // order (walk position, lane); chords run from a pass exit to a pass
    // entry
    let mut successor = vec![usize::MAX; units.len()];
    for si in 0..specs.len() {
        use std::collections::BTreeMap;
        let mut by_face: BTreeMap<usize, Vec<(usize, Lane, bool, usize)>> = BTreeMap::new();
        for (ui, u) in units.iter().enumerate() {
            if u.spec != si {
                continue;
            }
            let (entry, exit) = ends(u);
            let (fx, px) = corner_pos[exit];
            by_face.entry(fx).or_default().push((px, u.pos, true, ui));
            let (fe, pe) = corner_pos[entry];
            by_face.entry(fe).or_default().push((pe, u.pos, false, ui));
        }
        for (f, mut pts) in by_face {
            pts.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
            let starts = pts.iter().filter(|p| p.2).count();
            if 2 * starts != pts.len() {
                return Err(Error::Structural(format!(
                    "chain has boundary in face {f}: not a cycle"
                )));
            }
            let mut live: Vec<usize> = (0..pts.len()).collect();
            while !live.is_empty() {
                let mut matched = None;
                for i in 0..live.len() {
                    let x = &pts[live[i]];
                    let y = &pts[live[(i + 1) % live.len()]];
                    if x.2 != y.2 {
                        let (from, to) = if x.2 { (x.3, y.3) } else { (y.3, x.3) };
                        successor[from] = to;
                        matched = Some(if i + 1 < live.len() { (i, i + 1) } else { (0, i) });
                        break;
                    }
                }
                let (hi, lo) = match matched {
                    Some((i, j)) => (i.max(j), i.min(j)),
                    None => return Err(Error::Structural("unmatchable chain endpoints".into())),
                };
                live.remove(hi);
                live.remove(lo);
            }
        }
    }

    // trace units into closed components, then emit per-spec curves
    let mut out: Vec<CurveDiagram> = vec![CurveDiagram::default(); specs.len()];
    let mut seen = vec![false; units.len()];
    for start in 0..units.len() {
        if seen[start] {
            continue;
        }
        let mut order = Vec::new();
        let mut ui = start;
        loop {
            seen[ui] = true;
            order.push(ui);
            ui = successor[ui];
            if ui == start {
                break;
            }
        }
        let si = units[start].spec;
        let emit = |shift: i64, level: i64| -> Vec<Step> {
            let mut steps = Vec::with_capacity(2 * order.len());
            for (j, &ui) in order.iter().enumerate() {
                let u = &units[ui];
                let l = u.pos + Rational64::from_integer(shift) * u.delta;
                steps.push(Step::Pass {
                    crossing: u.crossing,
                    cls: cls_at[u.crossing],
                    dir: u.dir,
                    lane: l,
                });
                let v = &units[order[(j + 1) % order.len()]];
                let (_, exit) = ends(u);
                let (entry_next, _) = ends(v);
                let (f, px) = corner_pos[exit];
                let (f2, pe) = corner_pos[entry_next];
                debug_assert_eq!(f, f2);
                let lv = v.pos + Rational64::from_integer(shift) * v.delta;
                steps.push(Step::Chord {
                    face: f,
                    from: (px, l),
                    to: (pe, lv),
                    level: Rational64::from_integer(level),
                });
            }
            steps
        };
        if specs[si].transfer {
            out[si].components.push(emit(-1, 1));
            out[si].components.push(emit(1, -1));
        } else {
            out[si].components.push(emit(0, 0));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures;

    /// Meridian and longitude on the torus: the two strands of the
    /// one-crossing clasp diagram cross exactly once, the over strand on
    /// top, and the linking asymmetry equals their intersection number.
    #[test]
    fn meridian_longitude() {
        let alpha = CurveDiagram {
            components: vec![vec![Step::Strand { crossing: 0, entry_slot: 0 }]],
        };
        let beta = CurveDiagram {
            components: vec![vec![Step::Strand { crossing: 0, entry_slot: 1 }]],
        };
        let (ab, ba) = lk_pair(&alpha, &beta).unwrap();
        assert_eq!((ab, ba), (1, 0));
        assert_eq!(ab - ba, projection_intersection(&alpha, &beta).unwrap());
        assert_eq!(projection_intersection(&alpha, &beta).unwrap(), 1);
        // reversing beta flips the intersection number
        let beta_rev = CurveDiagram {
            components: vec![vec![Step::Strand { crossing: 0, entry_slot: 3 }]],
        };
        assert_eq!(projection_intersection(&alpha, &beta_rev).unwrap(), -1);
    }

    /// Two parallel contractible circles at distinct heights are unlinked.
    #[test]
    fn parallel_circles() {
        let circle = |p: usize, q: usize, level: i64| CurveDiagram {
            components: vec![vec![
                Step::Chord {
                    face: 0,
                    from: (p, lane(1, 2)),
                    to: (q, lane(1, 2)),
                    level: Rational64::from_integer(level),
                },
                Step::Chord {
                    face: 0,
                    from: (q, lane(1, 2)),
                    to: (p, lane(1, 2)),
                    level: Rational64::from_integer(level),
                },
            ]],
        };
        // nested: no crossings at all
        let a = circle(0, 1, 1);
        let b = circle(2, 3, 0);
        assert_eq!(lk_pair(&a, &b).unwrap(), (0, 0));
        // overlapping: four crossings, all with the higher circle on top,
        // algebraically cancelling
        let c = circle(0, 2, 1);
        let d = circle(1, 3, 0);
        let x = crossings_between(&c, &d, None).unwrap();
        assert_eq!(x.len(), 4);
        assert!(x.iter().all(|y| y.first_over));
        assert_eq!(lk_pair(&c, &d).unwrap(), (0, 0));
        assert_eq!(projection_intersection(&c, &d).unwrap(), 0);
    }

    /// A Hopf-style pair in a ball: equal levels with a resolver that puts
    /// each curve over once reproduces linking number +-1.
    #[test]
    fn hopf_pair() {
        let circle = |p: usize, q: usize| CurveDiagram {
            components: vec![vec![
                Step::Chord { face: 0, from: (p, lane(1, 2)), to: (q, lane(1, 2)), level: lane(0, 1) },
                Step::Chord { face: 0, from: (q, lane(1, 2)), to: (p, lane(1, 2)), level: lane(0, 1) },
            ]],
        };
        let a = circle(0, 2);
        let b = circle(1, 3);
        // without a resolver the equal levels are ambiguous
        assert!(lk_pair(&a, &b).is_err());
        // resolve the four chord crossings (signs -1, +1, +1, -1 in
        // enumeration order) into a Hopf-like pattern
        let mut script = [true, false, true, true].into_iter();
        let mut resolver = move || script.next().unwrap();
        let (ab, ba) = lk_pair_with(&a, &b, &mut resolver).unwrap();
        assert_eq!((ab, ba), (-1, -1), "symmetric like a classical linking number");
        assert_eq!(ab - ba, projection_intersection(&a, &b).unwrap());
    }

    /// Same-band passes cross once with lane-order over/under.
    #[test]
    fn band_passes() {
        let pass = |cls: u8, dir: i8, l: Lane| CurveDiagram {
            components: vec![vec![Step::Pass { crossing: 0, cls, dir, lane: l }]],
        };
        let a = pass(0, 1, lane(1, 3));
        let b = pass(0, 1, lane(2, 3));
        let x = crossings_between(&a, &b, None).unwrap();
        assert_eq!(x.len(), 1);
        assert!(x[0].first_over, "class 0: smaller lane rides higher");
        assert_eq!(x[0].sign, 1);
        let c = pass(1, 1, lane(1, 3));
        let d = pass(1, 1, lane(2, 3));
        let y = crossings_between(&c, &d, None).unwrap();
        assert!(!y[0].first_over, "class 1: larger lane rides higher");
        // coincident lanes are rejected
        assert!(crossings_between(&a, &pass(0, -1, lane(1, 3)), None).is_err());
        // cross-class passes always intersect once
        let z = crossings_between(&a, &c, None).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z[0].sign, 1);
    }

    /// Realized spine chains of the trefoil: one pass per band, chords
    /// closing through the faces; the transfer double flanks the base.
    #[test]
    fn realize_trefoil_chain() {
        let map = fixtures::trefoil();
        let (faces, face_of) = map.face_index();
        let _ = face_of;
        // the three-face color occupies corners {0,2} at every crossing
        let cls = vec![0u8; 3];
        let w = vec![1i64, 1, 1];
        let specs = [ChainSpec { weights: &w, transfer: false }];
        let curves = realize(&map, &faces, &cls, &specs).unwrap();
        assert_eq!(curves.len(), 1);
        assert_eq!(curves[0].components.len(), 1);
        assert_eq!(curves[0].components[0].len(), 6, "three passes, three chords");
        let doubled = realize(
            &map,
            &faces,
            &cls,
            &[ChainSpec { weights: &w, transfer: true }],
        )
        .unwrap();
        assert_eq!(doubled[0].components.len(), 2);
        // zero chain realizes to nothing
        let zero = vec![0i64; 3];
        let empty = realize(&map, &faces, &cls, &[ChainSpec { weights: &zero, transfer: false }])
            .unwrap();
        assert!(empty[0].components.is_empty());
    }

    /// A non-cycle chain is rejected.
    #[test]
    fn rejects_boundary_chain() {
        let map = fixtures::trefoil();
        let (faces, _) = map.face_index();
        let cls = vec![0u8; 3];
        let w = vec![1i64, 0, 0];
        assert!(realize(&map, &faces, &cls, &[ChainSpec { weights: &w, transfer: false }])
            .is_err());
    }
}
