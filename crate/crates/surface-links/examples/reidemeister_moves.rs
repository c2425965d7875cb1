//! Reidemeister moves on the surface: insert/remove round-trips and a
//! triangle slide, all preserving genus and components.

use surface_links::iso::canonical_form;
use surface_links::moves::{reidemeister, RSite};
use surface_links::CombMap;

fn main() -> surface_links::Result<()> {
    // trefoil with crossing 0 switched: planar but not alternating, so a
    // triangle admits the slide
    let map = CombMap::new(3, &[(3, 5), (7, 8), (10, 2), (0, 4), (6, 9), (11, 1)], 0)?
        .orient(&[0])?;
    println!("start: {} crossings, genus {}, writhe {}", map.n_crossings(), map.genus()?, map.writhe()?);

    let key = canonical_form(&map);

    let curled = reidemeister(&map, &RSite::R1Insert { dart: 0, slot: 1 })?;
    let uncurled = reidemeister(&curled, &RSite::R1Remove { crossing: 3 })?;
    println!(
        "R1 insert -> {} crossings, writhe {}; remove restores: {}",
        curled.n_crossings(),
        curled.writhe()?,
        canonical_form(&uncurled) == key
    );

    // darts 1 and 8 border the triangle (1, 8, 4)
    let pushed = reidemeister(&map, &RSite::R2Insert { over: 1, under: 8 })?;
    let pulled = reidemeister(&pushed, &RSite::R2Remove { dart: 16 })?;
    println!(
        "R2 insert -> {} crossings; remove restores: {}",
        pushed.n_crossings(),
        canonical_form(&pulled) == key
    );

    let slid = reidemeister(&map, &RSite::R3 { dart: 1 })?;
    let back = reidemeister(&slid, &RSite::R3 { dart: 3 })?;
    println!(
        "R3 slide keeps {} crossings, genus {}, writhe {}; sliding back restores: {}",
        slid.n_crossings(),
        slid.genus()?,
        slid.writhe()?,
        back.edges() == map.edges()
    );
    Ok(())
}
