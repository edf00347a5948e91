// Quadrupole matrix elements <k|z^2|n>/z0^2: closed form against quadrature.
//
//     cargo run --release --example matrix_elements

use gravibounce::bouncer::scales;
use gravibounce::constants::default_constants;
use gravibounce::quadrupole::{element_closed, element_quadrature};

fn main() -> gravibounce::Result<()> {
    let s = scales(&default_constants());
    println!("{:>3} {:>3} {:>16} {:>16} {:>10}", "k", "n", "closed", "quadrature", "rel_diff");
    for k in 1..=4 {
        let diag = element_quadrature(k, k, &s)?;
        println!("{:>3} {:>3} {:>16} {:>16.9e} {:>10}", k, k, "-", diag.dimensionless, "-");
        for n in k + 1..=6 {
            let closed = element_closed(k, n, &s)?;
            let quad = element_quadrature(k, n, &s)?;
            let rel = (closed.dimensionless - quad.dimensionless).abs() / closed.dimensionless.abs();
            println!(
                "{:>3} {:>3} {:>16.9e} {:>16.9e} {:>10.1e}",
                k, n, closed.dimensionless, quad.dimensionless, rel
            );
        }
    }
    let q = element_closed(1, 2, &s)?;
    println!("Q_12 = {:.4e} kg m^2", q.q_moment);
    Ok(())
}
