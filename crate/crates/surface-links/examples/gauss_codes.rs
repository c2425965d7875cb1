//! Gauss codes: parsing, realization on a surface, reading the code back,
//! canonical forms and connect sums.

use surface_links::gauss::{canonical_gauss, connect_sum, gauss_to_surface, parse_gauss};
use surface_links::iso::canonical_form;
use surface_links::GaussCode;

fn main() -> surface_links::Result<()> {
    let trefoil = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")?;
    let map = gauss_to_surface(&trefoil)?;
    println!("trefoil: {} crossings, genus {}, writhe {}", map.n_crossings(), map.genus()?, map.writhe()?);

    let back = GaussCode::of_map(&map)?;
    println!("read back: {back}");
    println!("canonical codes match: {}", canonical_gauss(&back) == canonical_gauss(&trefoil));

    // a code needing genus 1: the virtual trefoil
    let vt = parse_gauss("O1+ O2+ U1+ U2+")?;
    println!("virtual trefoil genus: {}", gauss_to_surface(&vt)?.genus()?);

    // splice sites matter: two self connect sums of the virtual trefoil
    let sum_a = connect_sum(&vt, &vt, (0, 0), (0, 0))?;
    let sum_b = connect_sum(&vt, &vt, (0, 1), (0, 0))?;
    println!("sum at site 0: {sum_a}");
    println!("sum at site 1: {sum_b}");
    let (ma, mb) = (gauss_to_surface(&sum_a)?, gauss_to_surface(&sum_b)?);
    println!(
        "summands isomorphic: {} (both genus {})",
        canonical_form(&ma) == canonical_form(&mb),
        ma.genus()?
    );
    Ok(())
}
