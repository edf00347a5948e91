// Loading constants from a file and watching the scales respond.
//
//     cargo run --example custom_constants

use gravibounce::bouncer::scales;
use gravibounce::constants::{default_constants, parse_constants};
use gravibounce::emission::rate_reduced;

fn main() -> gravibounce::Result<()> {
    let base = default_constants();
    // Standard gravity instead of 9.81, and half of it.
    for text in ["", "g = 9.80665", "g = 4.905\n# half of 9.81"] {
        let c = parse_constants(text)?;
        let s = scales(&c);
        println!(
            "g = {:<8} z0 = {:.4} um  z0/z0_default = {:.6}  Gamma_21 = {:.4e} 1/s",
            c.gravity(),
            s.z0 * 1e6,
            s.z0 / scales(&base).z0,
            rate_reduced(2, 1, &s, &c)?
        );
    }
    println!();
    print!("{}", base.to_config_string());
    Ok(())
}
