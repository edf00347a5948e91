// Where does the quadrupole approximation stop holding?
//
//     cargo run --release --example quadrupole_validity

use gravibounce::bouncer::scales;
use gravibounce::constants::default_constants;
use gravibounce::emission::{quadrupole_validity, validity_crossover, DEFAULT_VALIDITY_THRESHOLD};

fn main() -> gravibounce::Result<()> {
    let c = default_constants();
    let s = scales(&c);
    for k in [2, 10, 100, 1_000, 10_000, 100_000, 1_000_000] {
        let v = quadrupole_validity(k, &s, &c, DEFAULT_VALIDITY_THRESHOLD)?;
        println!("k = {k:>8}: omega z / c = {:.3e}  valid = {}", v.ratio, v.valid);
    }
    let at_threshold = validity_crossover(&s, &c, DEFAULT_VALIDITY_THRESHOLD)?;
    let at_unity = validity_crossover(&s, &c, 1.0)?;
    println!("first k with ratio >= {DEFAULT_VALIDITY_THRESHOLD}: {at_threshold}");
    println!("first k with ratio >= 1: {at_unity}");
    Ok(())
}
