// Characteristic scales and the lowest neutron levels above a mirror.
//
//     cargo run --example energy_levels

use gravibounce::bouncer::{eigenstate, scales};
use gravibounce::constants::{default_constants, ELECTRONVOLT};

fn main() -> gravibounce::Result<()> {
    let constants = default_constants();
    let s = scales(&constants);
    let pev = |joules: f64| joules / ELECTRONVOLT * 1e12;

    println!("z0 = {:.3} um", s.z0 * 1e6);
    println!("E0 = {:.3} peV", pev(s.e0));
    println!();
    println!("{:>3} {:>10} {:>12} {:>16} {:>14}", "n", "lambda", "E [peV]", "C [m^-1/2]", "turning [um]");
    for n in 1..=8 {
        let st = eigenstate(n, &s)?;
        println!(
            "{:>3} {:>10.6} {:>12.6} {:>16.6e} {:>14.3}",
            n,
            st.lambda,
            pev(st.energy),
            st.norm_const,
            st.lambda * s.z0 * 1e6
        );
    }
    Ok(())
}
