// Plot-ready samples of the four lowest wavefunctions, as CSV on stdout.
//
//     cargo run --example wavefunctions > psi.csv

use gravibounce::bouncer::{eigenstate, scales, wavefunction};
use gravibounce::constants::default_constants;

fn main() -> gravibounce::Result<()> {
    let s = scales(&default_constants());
    let states = (1..=4).map(|n| eigenstate(n, &s)).collect::<gravibounce::Result<Vec<_>>>()?;

    println!("z_um,psi1,psi2,psi3,psi4");
    for i in 0..=120 {
        let z = i as f64 * 0.5e-6;
        let values: Vec<String> =
            states.iter().map(|st| format!("{:.6e}", wavefunction(st, &s, z))).collect();
        println!("{:.1},{}", z * 1e6, values.join(","));
    }
    Ok(())
}
