//! The cellular/virtual correspondence: project a surface diagram to the
//! plane with virtual crossings, find a lasso, and rebuild the surface.

use surface_links::gauss::{gauss_to_surface, parse_gauss};
use surface_links::{devirtualize, find_lasso, gauss_of, surface_to_virtual};

fn main() -> surface_links::Result<()> {
    let cellular = gauss_to_surface(&parse_gauss("O1+ O2+ U1+ U2+")?)?;
    println!("cellular diagram: {} crossings on genus {}", cellular.n_crossings(), cellular.genus()?);

    let v = surface_to_virtual(&cellular)?;
    println!(
        "projected: {} classical + {} virtual crossings on genus {}",
        v.n_classical(),
        v.n_virtual(),
        v.map.genus()?
    );
    println!("virtual crossing ids: {:?}", v.virtual_ids);
    println!("code (virtual crossings skipped): {}", gauss_of(&v)?);

    match find_lasso(&v) {
        Some(lasso) => println!(
            "lasso: faces {:?}, crossed by {} edges",
            lasso.faces,
            lasso.boundary_edges.len()
        ),
        None => println!("no lasso found"),
    }

    let back = devirtualize(&v)?;
    println!("devirtualized: genus {} again", back.genus()?);

    // planar diagrams are their own projection
    let trefoil = gauss_to_surface(&parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")?)?;
    let flat = surface_to_virtual(&trefoil)?;
    println!(
        "planar trefoil: {} virtual crossings, edges unchanged: {}",
        flat.n_virtual(),
        flat.map.edges() == trefoil.edges()
    );
    Ok(())
}
