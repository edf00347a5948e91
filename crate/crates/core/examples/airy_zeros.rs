// Refined Airy zeros next to their Bohr–Sommerfeld estimates.
//
//     cargo run --example airy_zeros

use gravibounce::airy::{airy_ai, airy_zero, bs_zero};

fn main() -> gravibounce::Result<()> {
    println!("{:>4} {:>18} {:>18} {:>12} {:>10}", "n", "lambda", "lambda_bs", "rel_error", "|Ai(-l)|");
    for n in [1, 2, 3, 4, 5, 10, 20, 50, 100, 1000] {
        let zero = airy_zero(n)?;
        let bs = bs_zero(n)?;
        println!(
            "{:>4} {:>18.14} {:>18.14} {:>12.3e} {:>10.1e}",
            n,
            zero.lambda,
            bs,
            (bs - zero.lambda).abs() / zero.lambda,
            airy_ai(-zero.lambda)?.abs()
        );
    }
    let gap = airy_zero(2)?.lambda - airy_zero(1)?.lambda;
    println!("lambda_2 - lambda_1 = {gap:.5}");
    Ok(())
}
