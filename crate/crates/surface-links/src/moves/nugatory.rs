//! Removable nugatory crossings.
//!
//! A crossing is nugatory when two opposite corners meet the same face: a
//! circle can then cross the diagram at that crossing alone. It is
//! removable only if that circle separates the surface and one side of the
//! cut is a flat (genus-0) piece, so the lobe can be untwisted away.

use super::smooth_crossings;
use crate::diagram::CombMap;
use crate::Result;
use std::collections::BTreeMap;

fn piece_genus(piece: &[usize], face_of: &[usize]) -> usize {
    let v = piece.len();
    let mut pf: Vec<usize> =
        piece.iter().flat_map(|&c| &face_of[4 * c..4 * c + 4]).copied().collect();
    pf.sort_unstable();
    pf.dedup();
    // chi = v - 2v + f
    (2 + v - pf.len()) / 2
}

/// Crossings whose nugatory circle separates off a flat lobe, in increasing
/// order. Splitting the map along the circle (a bent smoothing) must keep
/// the total genus — a non-separating circle loses a handle — and leave at
/// least one lobe on a sphere.
pub fn removable_nugatory(map: &CombMap) -> Result<Vec<usize>> {
    let n = map.n_crossings();
    let (_, face_of) = map.face_index();
    let g = map.genus()?;
    let mut out = Vec::new();
    'crossings: for c in 0..n {
        for k in 0..2usize {
            let fk = map.corner_face(c, k as u8, &face_of);
            let f2 = map.corner_face(c, (k + 2) as u8, &face_of);
            if fk != f2 {
                continue;
            }
            let lobe1 = map.m(4 * c + (k + 1) % 4);
            let lobe2 = map.m(4 * c + (k + 3) % 4);
            let pairs = [
                (((k + 1) % 4) as u8, ((k + 2) % 4) as u8),
                (((k + 3) % 4) as u8, (k % 4) as u8),
            ];
            let matchings = BTreeMap::from([(c, pairs)]);
            let (sm, relabel) = smooth_crossings(map, &matchings)?;
            if sm.genus()? != g {
                continue;
            }
            let empty1 = lobe1 == 4 * c + (k + 2) % 4;
            let empty2 = lobe2 == 4 * c + k;
            if empty1 || empty2 {
                out.push(c);
                continue 'crossings;
            }
            if lobe1 / 4 == c || lobe2 / 4 == c {
                continue;
            }
            let (_, sm_face_of) = sm.face_index();
            let pieces = sm.pieces();
            let at = |cr: usize| pieces.iter().position(|p| p.contains(&relabel[cr / 4]));
            let (p1, p2) = (at(lobe1).unwrap(), at(lobe2).unwrap());
            if p1 != p2
                && (piece_genus(&pieces[p1], &sm_face_of) == 0
                    || piece_genus(&pieces[p2], &sm_face_of) == 0)
            {
                out.push(c);
                continue 'crossings;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;
    use crate::moves::{reidemeister, RSite};

    #[test]
    fn kink_is_removable() {
        assert_eq!(removable_nugatory(&kink()).unwrap(), vec![0]);
    }

    #[test]
    fn trefoil_has_none() {
        assert_eq!(removable_nugatory(&trefoil()).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn kinked_trefoil_detects_the_kink() {
        let t = trefoil();
        let big = reidemeister(&t, &RSite::R1Insert { dart: 7, slot: 1 }).unwrap();
        assert_eq!(removable_nugatory(&big).unwrap(), vec![3]);
    }

    #[test]
    fn essential_curl_is_not_removable() {
        // one crossing on the torus; its circle is essential
        assert_eq!(removable_nugatory(&torus_clasp()).unwrap(), Vec::<usize>::new());
        assert_eq!(removable_nugatory(&virtual_trefoil()).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn curl_detected_on_every_slot() {
        let t = trefoil();
        for slot in 0..4 {
            let big = reidemeister(&t, &RSite::R1Insert { dart: 0, slot }).unwrap();
            assert_eq!(removable_nugatory(&big).unwrap(), vec![3], "slot {slot}");
        }
    }
}
