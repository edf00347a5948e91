//! Cross-method checks of the Airy evaluator against representations it does
//! not use internally.

use gravibounce::airy::{airy, airy_ai, airy_ai_prime, maclaurin};
use std::f64::consts::PI;

/// `K_ν(ζ) e^ζ = ∫₀^∞ exp(−ζ (cosh t − 1)) cosh(ν t) dt` by the trapezoid rule,
/// which converges geometrically for this doubly-exponential integrand.
fn scaled_bessel_k(nu: f64, zeta: f64) -> f64 {
    let h = 0.01;
    let mut sum = 0.5;
    let mut t: f64 = h;
    loop {
        let term = (-zeta * (t.cosh() - 1.0)).exp() * (nu * t).cosh();
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
        t += h;
    }
    sum * h
}

/// Ai and Ai' for x > 0 through `K_{1/3}` and `K_{2/3}`.
fn airy_via_bessel(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let decay = (-zeta).exp();
    let ai = (x / 3.0).sqrt() / PI * scaled_bessel_k(1.0 / 3.0, zeta) * decay;
    let aip = -x / (PI * 3f64.sqrt()) * scaled_bessel_k(2.0 / 3.0, zeta) * decay;
    (ai, aip)
}

#[test]
fn positive_axis_matches_bessel_representation() {
    for &x in &[0.5, 1.0, 2.5, 4.0, 6.0, 8.7, 9.0, 9.3, 10.0, 15.0, 40.0, 90.0] {
        let (ai, aip) = airy_via_bessel(x);
        let v = airy(x).unwrap();
        assert!(((v.ai - ai) / ai).abs() < 1e-12, "Ai({x}): {} vs {ai}", v.ai);
        assert!(((v.ai_prime - aip) / aip).abs() < 1e-12, "Ai'({x})");
    }
}

#[test]
fn negative_axis_matches_maclaurin() {
    for i in 0..=50 {
        let x = -0.1 * i as f64;
        let s = maclaurin(x);
        let v = airy(x).unwrap();
        assert!((v.ai - s.ai).abs() < 1e-12, "x={x}");
        assert!((v.ai_prime - s.ai_prime).abs() < 1e-12, "x={x}");
    }
}

#[test]
fn origin_values() {
    assert!((airy_ai(0.0).unwrap() - 0.355028053887817).abs() < 1e-15);
    assert!((airy_ai_prime(0.0).unwrap() + 0.258819403792807).abs() < 1e-15);
    assert!(airy_ai(-2.338107410459767).unwrap().abs() < 1e-14);
}

#[test]
fn airy_equation_residual() {
    // Ai'' from a five-point central difference of Ai' on 200 points of [-30, 10].
    let h = 1e-3;
    for i in 0..200 {
        let x = -30.0 + 40.0 * i as f64 / 199.0;
        let d = |dx: f64| airy_ai_prime(x + dx).unwrap();
        let second = (-d(2.0 * h) + 8.0 * d(h) - 8.0 * d(-h) + d(-2.0 * h)) / (12.0 * h);
        let residual = second - x * airy_ai(x).unwrap();
        assert!(residual.abs() <= 1e-9, "x={x}: {residual:e}");
    }
}

#[test]
fn far_negative_axis_is_bounded_and_smooth() {
    // Ai(-z)² + Ai'(-z)²/z = 1/(π √z) up to O(1/ζ) corrections.
    for i in 0..2000 {
        let z = 10.0 + i as f64 * 0.4955;
        let v = airy(-z).unwrap();
        let envelope = (v.ai * v.ai + (v.ai_prime / z.sqrt()).powi(2)).sqrt();
        let expected = 1.0 / (PI.sqrt() * z.powf(0.25));
        let zeta = 2.0 / 3.0 * z.powf(1.5);
        assert!((envelope / expected - 1.0).abs() < 0.2 / zeta, "z={z}");
    }
}
