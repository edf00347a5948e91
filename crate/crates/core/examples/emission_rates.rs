// Spontaneous graviton emission rates and the two ways of computing them.
//
//     cargo run --example emission_rates

use gravibounce::bouncer::scales;
use gravibounce::constants::default_constants;
use gravibounce::emission::{omega, rate_general, rate_prefactor, rate_reduced};
use gravibounce::quadrupole::element_closed;

fn main() -> gravibounce::Result<()> {
    let c = default_constants();
    let s = scales(&c);
    let pre = rate_prefactor(&s, &c);
    println!("prefactor = {:.3e} 1/s", pre.value());
    println!("  (m/M_Pl)^2 = {:.3e}", pre.coupling);
    println!();
    println!("{:>3} {:>3} {:>12} {:>14} {:>14} {:>8}", "k", "n", "omega", "reduced", "general", "ratio");
    for (k, n) in [(2, 1), (3, 1), (3, 2), (4, 3), (10, 9), (10, 1)] {
        let w = omega(k, n, &s, &c)?;
        let reduced = rate_reduced(k, n, &s, &c)?;
        let general = rate_general(element_closed(k, n, &s)?.q_moment, w, &c)?;
        println!(
            "{:>3} {:>3} {:>12.4e} {:>14.4e} {:>14.4e} {:>8.4}",
            k, n, w, reduced, general, general / reduced
        );
    }
    Ok(())
}
