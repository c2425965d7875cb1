//! Full analysis of a Gauss code: structure, genus, checkerboard forms and
//! the exact identities, as text and as JSON.

fn main() -> surface_links::Result<()> {
    let code = surface_links::gauss::parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")?;
    let report = surface_links::analyze_gauss(&code)?;
    print!("{}", report.to_text());
    println!();
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(())
}
