// Total decay rate of each excited state, summed over lower final states.
//
//     cargo run --example lifetimes

use gravibounce::bouncer::scales;
use gravibounce::constants::default_constants;
use gravibounce::emission::{lifetime, DEFAULT_VALIDITY_THRESHOLD};

fn main() -> gravibounce::Result<()> {
    let c = default_constants();
    let s = scales(&c);
    const YEAR: f64 = 365.25 * 86_400.0;
    println!("{:>3} {:>14} {:>10} {:>14}", "n", "Gamma [1/s]", "dominant", "tau [yr]");
    for n in 1..=10 {
        let life = lifetime(n, &s, &c, DEFAULT_VALIDITY_THRESHOLD)?;
        let dominant = life.dominant_final_state().map_or("-".to_string(), |d| d.to_string());
        println!(
            "{:>3} {:>14.4e} {:>10} {:>14.3e}",
            n,
            life.total_rate,
            dominant,
            life.mean_lifetime() / YEAR
        );
    }
    Ok(())
}
