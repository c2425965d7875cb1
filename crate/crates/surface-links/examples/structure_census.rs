//! Census sweep with structural classification: how many small diagrams
//! are colorable, alternating, weakly prime, prime.

use surface_links::census::census;
use surface_links::gauss::{connect_sum, gauss_to_surface, parse_gauss};
use surface_links::structure::classify;

fn main() -> surface_links::Result<()> {
    println!("{:>2} {:>8} {:>9} {:>11} {:>12} {:>6}", "n", "classes", "colorable", "alternating", "weakly prime", "prime");
    for n in 0..=4usize {
        let maps = census(n);
        let mut colorable = 0;
        let mut alternating = 0;
        let mut weakly_prime = 0;
        let mut prime = 0;
        for m in &maps {
            colorable += usize::from(m.checkerboard_coloring().is_ok());
            alternating += usize::from(m.is_alternating());
            let s = classify(m)?;
            weakly_prime += usize::from(s.weakly_prime);
            prime += usize::from(s.prime);
        }
        println!(
            "{n:>2} {:>8} {colorable:>9} {alternating:>11} {weakly_prime:>12} {prime:>6}",
            maps.len()
        );
    }

    // a connect sum is never prime
    let trefoil = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")?;
    let granny = gauss_to_surface(&connect_sum(&trefoil, &trefoil, (0, 0), (0, 0))?)?;
    let s = classify(&granny)?;
    println!(
        "trefoil # trefoil: connected {}, weakly prime {}, prime {}",
        s.connected, s.weakly_prime, s.prime
    );
    Ok(())
}
