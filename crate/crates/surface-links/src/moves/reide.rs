//! Classical Reidemeister moves performed on the surface.

use super::{rewire, smooth_crossings, End};
use crate::diagram::{rot, rot2, rot3, CombMap, DartId};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Site of a Reidemeister move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RSite {
    /// Insert a curl on the edge at `dart`; the curl face sits between the
    /// new crossing's slots `slot` and `slot+1`.
    R1Insert { dart: DartId, slot: u8 },
    /// Curl a free loop into a one-crossing diagram piece.
    R1Loop { slot: u8 },
    /// Untwist the curl at `crossing`.
    R1Remove { crossing: usize },
    /// Push the strand at `over` across the strand at `under`; the darts
    /// must lie on a common face. The created two-sided face contains dart
    /// `4(n+1)` of the resulting map.
    R2Insert { over: DartId, under: DartId },
    /// Pull apart the parallel two-sided face containing `dart`.
    R2Remove { dart: DartId },
    /// Slide a strand across the three-sided face containing `dart`.
    R3 { dart: DartId },
}

/// Apply a Reidemeister move. R1/R2 change the crossing count by one/two,
/// R3 keeps it; component count, genus and orientation are preserved.
pub fn reidemeister(map: &CombMap, site: &RSite) -> Result<CombMap> {
    match *site {
        RSite::R1Insert { dart, slot } => r1_insert(map, dart, slot),
        RSite::R1Loop { slot } => r1_loop(map, slot),
        RSite::R1Remove { crossing } => r1_remove(map, crossing),
        RSite::R2Insert { over, under } => r2_insert(map, over, under),
        RSite::R2Remove { dart } => r2_remove(map, dart),
        RSite::R3 { dart } => r3(map, dart),
    }
}

fn check_dart(map: &CombMap, d: DartId) -> Result<()> {
    if d >= map.n_darts() {
        return Err(Error::InvalidSite(format!("no dart {d}")));
    }
    Ok(())
}

fn check_slot(slot: u8) -> Result<usize> {
    if slot > 3 {
        return Err(Error::InvalidSite(format!("no slot {slot}")));
    }
    Ok(slot as usize)
}

fn r1_insert(map: &CombMap, e: DartId, slot: u8) -> Result<CombMap> {
    check_dart(map, e)?;
    let k = check_slot(slot)?;
    let n = map.n_crossings();
    let z = |j: usize| 4 * n + (k + j) % 4;
    let relabel: Vec<DartId> = (0..4 * n).collect();
    let severed = BTreeSet::from([e, map.m(e)]);
    let rows = [
        (End::Dart(e), End::Dart(z(2))),
        (End::Dart(map.m(e)), End::Dart(z(3))),
        (End::Dart(z(0)), End::Dart(z(1))),
    ];
    let mut out = rewire(map, n + 1, &relabel, &severed, &rows, map.free_loops())?;
    if let Some(fw) = map.orientation_vec() {
        let mut fw2 = fw.clone();
        fw2.resize(4 * (n + 1), false);
        if fw[map.m(e)] {
            // strand runs toward m(e): in at z(2), around the curl, in at z(1)
            fw2[z(2)] = true;
            fw2[z(1)] = true;
        } else {
            fw2[z(3)] = true;
            fw2[z(0)] = true;
        }
        out.set_orientation_unchecked(fw2);
        out.validate()?;
    }
    Ok(out)
}

fn r1_loop(map: &CombMap, slot: u8) -> Result<CombMap> {
    let k = check_slot(slot)?;
    if map.free_loops() == 0 {
        return Err(Error::InvalidSite("no free loop to curl".into()));
    }
    let n = map.n_crossings();
    let z = |j: usize| 4 * n + (k + j) % 4;
    let relabel: Vec<DartId> = (0..4 * n).collect();
    let rows = [
        (End::Dart(z(0)), End::Dart(z(1))),
        (End::Dart(z(2)), End::Dart(z(3))),
    ];
    let mut out = rewire(map, n + 1, &relabel, &BTreeSet::new(), &rows, map.free_loops() - 1)?;
    if let Some(fw) = map.orientation_vec() {
        let mut fw2 = fw.clone();
        fw2.resize(4 * (n + 1), false);
        fw2[z(0)] = true;
        fw2[z(3)] = true;
        out.set_orientation_unchecked(fw2);
        out.validate()?;
    }
    Ok(out)
}

fn r1_remove(map: &CombMap, c: usize) -> Result<CombMap> {
    if c >= map.n_crossings() {
        return Err(Error::InvalidSite(format!("no crossing {c}")));
    }
    if !(0..4).any(|k| map.m(4 * c + k) == 4 * c + (k + 1) % 4) {
        return Err(Error::InvalidSite(format!("crossing {c} carries no curl")));
    }
    let matchings = BTreeMap::from([(c, [(0, 2), (1, 3)])]);
    smooth_crossings(map, &matchings).map(|(m, _)| m)
}

fn r2_insert(map: &CombMap, da: DartId, db: DartId) -> Result<CombMap> {
    check_dart(map, da)?;
    check_dart(map, db)?;
    if da == db {
        return Err(Error::InvalidSite("over and under strands coincide".into()));
    }
    let (_, face_of) = map.face_index();
    if face_of[da] != face_of[db] {
        return Err(Error::InvalidSite("strands do not border a common face".into()));
    }
    let n = map.n_crossings();
    let ze = |j: usize| 4 * n + j;
    let zw = |j: usize| 4 * (n + 1) + j;
    let relabel: Vec<DartId> = (0..4 * n).collect();
    let severed = BTreeSet::from([da, map.m(da), db, map.m(db)]);
    let mut rows = vec![
        (End::Dart(da), End::Dart(ze(2))),
        (End::Dart(ze(0)), End::Dart(zw(0))),
        (End::Dart(zw(3)), End::Dart(ze(1))),
    ];
    if db == map.m(da) {
        rows.push((End::Dart(zw(2)), End::Dart(zw(1))));
        rows.push((End::Dart(ze(3)), End::Dart(db)));
    } else {
        rows.push((End::Dart(zw(2)), End::Dart(map.m(da))));
        rows.push((End::Dart(db), End::Dart(zw(1))));
        rows.push((End::Dart(ze(3)), End::Dart(map.m(db))));
    }
    let mut out = rewire(map, n + 2, &relabel, &severed, &rows, map.free_loops())?;
    if let Some(fw) = map.orientation_vec() {
        let mut fw2 = fw.clone();
        fw2.resize(4 * (n + 2), false);
        if db == map.m(da) {
            for d in if fw[map.m(da)] {
                [ze(2), zw(0), zw(1), ze(1)]
            } else {
                [ze(3), zw(3), zw(2), ze(0)]
            } {
                fw2[d] = true;
            }
        } else {
            for d in if fw[map.m(da)] { [ze(2), zw(0)] } else { [zw(2), ze(0)] } {
                fw2[d] = true;
            }
            for d in if fw[map.m(db)] { [zw(1), ze(1)] } else { [ze(3), zw(3)] } {
                fw2[d] = true;
            }
        }
        out.set_orientation_unchecked(fw2);
        out.validate()?;
    }
    Ok(out)
}

fn r2_remove(map: &CombMap, dart: DartId) -> Result<CombMap> {
    check_dart(map, dart)?;
    let (fs, face_of) = map.face_index();
    let face = &fs.faces[face_of[dart]];
    if face.len() != 2 {
        return Err(Error::InvalidSite("face is not two-sided".into()));
    }
    let (x, y) = (face[0], face[1]);
    if x / 4 == y / 4 {
        return Err(Error::InvalidSite("bigon sits at a single crossing".into()));
    }
    if x % 2 != map.m(x) % 2 {
        return Err(Error::InvalidSite("clasp bigon cannot be pulled apart".into()));
    }
    let straight = [(0, 2), (1, 3)];
    let matchings = BTreeMap::from([(x / 4, straight), (y / 4, straight)]);
    smooth_crossings(map, &matchings).map(|(m, _)| m)
}

fn r3(map: &CombMap, dart: DartId) -> Result<CombMap> {
    check_dart(map, dart)?;
    let (fs, face_of) = map.face_index();
    let face = &fs.faces[face_of[dart]];
    if face.len() != 3 {
        return Err(Error::InvalidSite("face is not three-sided".into()));
    }
    let (x, y, z) = (face[0], face[1], face[2]);
    if x / 4 == y / 4 || y / 4 == z / 4 || x / 4 == z / 4 {
        return Err(Error::InvalidSite("triangle revisits a crossing".into()));
    }
    // a slideable triangle has one all-over edge, one all-under edge and
    // one mixed edge
    let mut kinds: Vec<(usize, usize)> = [x, y, z].iter().map(|&w| (w % 2, map.m(w) % 2)).collect();
    kinds.sort_unstable();
    if kinds != [(0, 0), (0, 1), (1, 1)] && kinds != [(0, 0), (1, 0), (1, 1)] {
        return Err(Error::InvalidSite("triangle strands do not form a slide pattern".into()));
    }
    let n = map.n_crossings();
    let relabel: Vec<DartId> = (0..4 * n).collect();
    let mut severed = BTreeSet::new();
    for w in [x, y, z] {
        for k in 0..4 {
            severed.insert(4 * (w / 4) + k);
        }
    }
    let mut rows = Vec::with_capacity(9);
    for (w, w2) in [(x, y), (y, z), (z, x)] {
        rows.push((End::Dart(rot(w2)), End::Dart(rot2(w))));
        rows.push((End::Dart(w), End::Stub(rot(w2))));
        rows.push((End::Dart(rot3(w2)), End::Stub(rot2(w))));
    }
    let mut out = rewire(map, n, &relabel, &severed, &rows, map.free_loops())?;
    if let Some(fw) = map.orientation_vec() {
        out.set_orientation_unchecked(fw.clone());
        out.validate()?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;
    use crate::iso;

    /// Trefoil with crossing 0 switched: planar, not alternating, and its
    /// face (1, 8, 4) is a slideable triangle.
    fn switched_trefoil() -> CombMap {
        CombMap::new(3, &[(3, 5), (7, 8), (10, 2), (0, 4), (6, 9), (11, 1)], 0)
            .unwrap()
            .orient(&[0])
            .unwrap()
    }

    #[test]
    fn r1_insert_remove_roundtrip() {
        let t = trefoil();
        let key = iso::canonical_form(&t);
        for slot in 0..4 {
            let big = reidemeister(&t, &RSite::R1Insert { dart: 0, slot }).unwrap();
            assert_eq!(big.n_crossings(), 4);
            assert_eq!(big.genus().unwrap(), 0);
            assert_eq!((big.writhe().unwrap() - t.writhe().unwrap()).abs(), 1);
            let back = reidemeister(&big, &RSite::R1Remove { crossing: 3 }).unwrap();
            assert_eq!(iso::canonical_form(&back), key);
        }
    }

    #[test]
    fn r1_curl_slots_give_both_signs() {
        let t = trefoil();
        let mut writhes = BTreeSet::new();
        for slot in 0..4 {
            let big = reidemeister(&t, &RSite::R1Insert { dart: 0, slot }).unwrap();
            writhes.insert(big.writhe().unwrap());
        }
        assert_eq!(writhes, BTreeSet::from([2, 4]));
    }

    #[test]
    fn r1_loop_consumes_a_free_loop() {
        let m = CombMap::trivial(1);
        let out = reidemeister(&m, &RSite::R1Loop { slot: 0 }).unwrap();
        assert_eq!((out.n_crossings(), out.free_loops()), (1, 0));
        assert_eq!(out.genus().unwrap(), 0);
        let kinked = iso::canonical_form(&kink().forget_orientation());
        assert_eq!(iso::canonical_form(&out), kinked);
        assert!(reidemeister(&out, &RSite::R1Loop { slot: 0 }).is_err());
    }

    #[test]
    fn r2_insert_remove_roundtrip() {
        let t = trefoil();
        let key = iso::canonical_form(&t);
        // darts 0 and 8 border the face (0, 8, 4)
        let big = reidemeister(&t, &RSite::R2Insert { over: 0, under: 8 }).unwrap();
        assert_eq!(big.n_crossings(), 5);
        assert_eq!(big.genus().unwrap(), 0);
        assert_eq!(big.writhe().unwrap(), t.writhe().unwrap());
        let back = reidemeister(&big, &RSite::R2Remove { dart: 16 }).unwrap();
        assert_eq!(back.edges(), t.edges());
        assert_eq!(iso::canonical_form(&back), key);
    }

    #[test]
    fn r2_same_edge_roundtrip() {
        let vt = virtual_trefoil();
        // edge (2, 4) borders the big face on both sides
        let big = reidemeister(&vt, &RSite::R2Insert { over: 2, under: 4 }).unwrap();
        assert_eq!(big.n_crossings(), 4);
        assert_eq!(big.genus().unwrap(), 1);
        let back = reidemeister(&big, &RSite::R2Remove { dart: 12 }).unwrap();
        assert_eq!(back.edges(), vt.edges());
    }

    #[test]
    fn r2_insert_rejects_separated_strands() {
        let t = trefoil();
        assert!(reidemeister(&t, &RSite::R2Insert { over: 0, under: 1 }).is_err());
        assert!(reidemeister(&t, &RSite::R2Insert { over: 0, under: 0 }).is_err());
    }

    #[test]
    fn r2_remove_rejects_clasp() {
        // planar Hopf link: both bigons are clasps
        let hopf = CombMap::new(2, &[(2, 5), (7, 0), (3, 4), (6, 1)], 0).unwrap();
        let err = reidemeister(&hopf, &RSite::R2Remove { dart: 0 });
        assert!(err.is_err());
    }

    #[test]
    fn r3_slides_and_slides_back() {
        let m = switched_trefoil();
        assert_eq!(m.genus().unwrap(), 0);
        assert!(!m.is_alternating());
        let mid = reidemeister(&m, &RSite::R3 { dart: 1 }).unwrap();
        assert_eq!(mid.n_crossings(), 3);
        assert_eq!(mid.genus().unwrap(), 0);
        assert_eq!(mid.writhe().unwrap(), m.writhe().unwrap());
        assert_ne!(mid.edges(), m.edges());
        // the slid strand bounds the opposite triangle (rot2 of the old one)
        let back = reidemeister(&mid, &RSite::R3 { dart: 3 }).unwrap();
        assert_eq!(back.edges(), m.edges());
        assert_eq!(back.orientation_vec(), m.orientation_vec());
    }

    #[test]
    fn r3_works_on_the_mirror() {
        let m = switched_trefoil().mirror();
        let (fs, _) = m.face_index();
        let mut hits = 0;
        for face in &fs.faces {
            if face.len() != 3 {
                continue;
            }
            if let Ok(mid) = reidemeister(&m, &RSite::R3 { dart: face[0] }) {
                hits += 1;
                let back = reidemeister(&mid, &RSite::R3 { dart: rot2(face[0]) }).unwrap();
                assert_eq!(back.edges(), m.edges());
            }
        }
        assert!(hits >= 1, "mirrored slide pattern must still be found");
    }

    #[test]
    fn r3_rejects_alternating_triangle() {
        let t = trefoil();
        // face (0, 8, 4) is a triangle, but every edge is mixed
        assert!(reidemeister(&t, &RSite::R3 { dart: 0 }).is_err());
    }

    #[test]
    fn moves_preserve_component_count() {
        let t = trefoil();
        for site in [
            RSite::R1Insert { dart: 5, slot: 2 },
            RSite::R2Insert { over: 0, under: 8 },
        ] {
            assert_eq!(reidemeister(&t, &site).unwrap().num_components(), 1);
        }
    }
}
