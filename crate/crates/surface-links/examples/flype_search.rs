//! Flypes: site enumeration, application, orbit closure, and deciding when
//! two alternating diagrams are joined by a flype sequence.

use surface_links::iso::canonical_form;
use surface_links::moves::{apply_flype, find_flypes, flype_equivalent, flype_orbit, FlypeEquiv};
use surface_links::CombMap;

fn verdict(v: &FlypeEquiv) -> String {
    match v {
        FlypeEquiv::Equivalent(path) => format!("equivalent in {} flypes", path.len()),
        FlypeEquiv::Distinct => "distinct orbits".into(),
        FlypeEquiv::Unknown { explored } => format!("undecided after {explored} diagrams"),
    }
}

fn main() -> surface_links::Result<()> {
    let base = CombMap::pretzel(&[2, 2, 1, 1])?;
    let sites = find_flypes(&base);
    let proper = sites.iter().filter(|s| !s.degenerate).count();
    println!("pretzel(2,2,1,1): {} flype sites ({} proper)", sites.len(), proper);

    let key = canonical_form(&base);
    let image = sites
        .iter()
        .filter(|s| !s.degenerate)
        .map(|s| apply_flype(&base, s))
        .collect::<surface_links::Result<Vec<_>>>()?
        .into_iter()
        .find(|img| canonical_form(img) != key)
        .expect("some flype moves the diagram");
    println!(
        "a moving flype keeps {} crossings and genus {}",
        image.n_crossings(),
        image.genus()?
    );

    let orbit = flype_orbit(&base, 10_000)?;
    println!("orbit: {} diagrams (truncated: {})", orbit.members.len(), orbit.truncated);

    // moving the single-crossing columns is a flype, so these two
    // arrangements present the same link
    let shuffled = CombMap::pretzel(&[2, 1, 2, 1])?;
    println!("(2,2,1,1) vs (2,1,2,1): {}", verdict(&flype_equivalent(&base, &shuffled, 10_000)?));

    // without movable columns the arrangements are genuinely different links
    let rigid_a = CombMap::pretzel(&[3, 3, 2, 2])?;
    let rigid_b = CombMap::pretzel(&[3, 2, 3, 2])?;
    println!("(3,3,2,2) vs (3,2,3,2): {}", verdict(&flype_equivalent(&rigid_a, &rigid_b, 10_000)?));
    Ok(())
}
