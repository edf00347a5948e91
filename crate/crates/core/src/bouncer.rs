//! Stationary states of a mass above a perfect mirror in a uniform field.
//!
//! With `z0 = (ħ²/(2m²g))^(1/3)` and `E0 = m g z0` the states are
//! `ψn(z) = Cn Ai(z/z0 − λn) θ(z)` with energies `En = E0 λn`, where `−λn` is
//! the n-th zero of Ai. The normaliser `Cn = 1/(√z0 |Ai'(−λn)|)` follows from
//! `∫₀^∞ Ai²(x − λn) dx = Ai'(−λn)²`.

use crate::airy::{self, airy_zero};
use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::quadrature::{integrate, Integral, Tolerance};

/// Characteristic length `z0` (m) and energy `e0` (J), plus the bouncer mass
/// they were built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BouncerScales {
    pub z0: f64,
    pub e0: f64,
    pub mass: f64,
}

pub fn scales(constants: &PhysicalConstants) -> BouncerScales {
    let m = constants.mass();
    let hbar = constants.hbar();
    let z0 = (hbar * hbar / (2.0 * m * m * constants.gravity())).cbrt();
    BouncerScales { z0, e0: m * constants.gravity() * z0, mass: m }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenState {
    pub n: u64,
    pub lambda: f64,
    /// J
    pub energy: f64,
    /// m^(-1/2)
    pub norm_const: f64,
    /// |Ai'(−λn)|, the normaliser in dimensionless units.
    ai_prime_abs: f64,
}

impl EigenState {
    /// `ψ` in units of `z0^(-1/2)` at dimensionless height `x = z/z0`.
    pub fn reduced(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        airy::eval(x - self.lambda).ai / self.ai_prime_abs
    }

    /// Classical turning point `z0 λn` in units of `z0`.
    pub fn turning_point(&self) -> f64 {
        self.lambda
    }
}

pub fn eigenstate(n: u64, scales: &BouncerScales) -> Result<EigenState> {
    if n == 0 {
        return Err(Error::Index("bouncer states are numbered from 1".into()));
    }
    let lambda = airy_zero(n)?.lambda;
    let ai_prime_abs = airy::eval(-lambda).ai_prime.abs();
    Ok(EigenState {
        n,
        lambda,
        energy: scales.e0 * lambda,
        norm_const: 1.0 / (scales.z0.sqrt() * ai_prime_abs),
        ai_prime_abs,
    })
}

/// `Cn Ai(z/z0 − λn)` for `z > 0`, zero at and below the mirror.
pub fn wavefunction(state: &EigenState, scales: &BouncerScales, z: f64) -> f64 {
    if z <= 0.0 {
        return 0.0;
    }
    state.norm_const * airy::eval(z / scales.z0 - state.lambda).ai
}

/// Past `λmax + 15` the Airy tails are below 1e-16 of the peak.
pub const TAIL_MARGIN: f64 = 15.0;

/// Breakpoints on `[0, max(λ) + TAIL_MARGIN]`, spaced so that each panel holds
/// about a third of the local Airy wavelength `2π/√(λ − x)`, and at most one
/// unit in the decaying tail.
pub(crate) fn breakpoints(lambda_max: f64) -> Vec<f64> {
    let upper = lambda_max + TAIL_MARGIN;
    let mut points = vec![0.0];
    let mut x = 0.0;
    while x < upper {
        let width = (2.0 / (lambda_max - x).max(1.0).sqrt()).min(1.0);
        x = (x + width).min(upper);
        if upper - x < 0.1 * width {
            x = upper;
        }
        points.push(x);
    }
    points
}

/// `∫₀^∞ ψk(x) xᵖ ψn(x) dx` in units of `z0ᵖ`, by adaptive quadrature.
pub fn overlap(a: &EigenState, b: &EigenState, power: i32, tol: Tolerance) -> Result<Integral> {
    integrate(
        |x| a.reduced(x) * b.reduced(x) * x.powi(power),
        &breakpoints(a.lambda.max(b.lambda)),
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{default_constants, ELECTRONVOLT};

    fn pev(joules: f64) -> f64 {
        joules / ELECTRONVOLT * 1e12
    }

    #[test]
    fn default_scales() {
        let s = scales(&default_constants());
        assert!((s.z0 * 1e6 - 5.87).abs() / 5.87 < 0.005);
        assert!((pev(s.e0) - 0.60).abs() / 0.60 < 0.01);
        let c = default_constants();
        let expected = (c.hbar().powi(2) / (2.0 * c.mass().powi(2) * c.gravity())).powf(1.0 / 3.0);
        assert!((s.z0 - expected).abs() < 1e-12 * expected);
        assert!((s.e0 - c.mass() * c.gravity() * s.z0).abs() < 1e-12 * s.e0);
    }

    #[test]
    fn mass_scaling() {
        let c = default_constants();
        let heavy = scales(&c.with_mass(8.0 * c.mass()).unwrap());
        let ratio = scales(&c).z0 / heavy.z0;
        assert!((ratio - 4.0).abs() < 1e-12);
    }

    #[test]
    fn gravity_scaling() {
        let c = default_constants();
        let base = scales(&c);
        let doubled = scales(&c.with_gravity(2.0 * c.gravity()).unwrap());
        assert!((doubled.e0 / base.e0 - 2f64.powf(2.0 / 3.0)).abs() < 1e-12);
        assert!((base.z0 / doubled.z0 - 2f64.cbrt()).abs() < 1e-12);
        let half = scales(&c.with_gravity(0.5 * c.gravity()).unwrap());
        assert!((half.z0 / base.z0 - 2f64.cbrt()).abs() < 1e-12);
    }

    #[test]
    fn ground_state_energy() {
        let s = scales(&default_constants());
        let st = eigenstate(1, &s).unwrap();
        assert_eq!(st.energy, s.e0 * st.lambda);
        assert!((pev(st.energy) - 1.41).abs() < 0.005);
        assert!(st.norm_const > 0.0);
    }

    #[test]
    fn mirror_boundary() {
        let s = scales(&default_constants());
        for n in [1, 2, 7, 40] {
            let st = eigenstate(n, &s).unwrap();
            assert_eq!(wavefunction(&st, &s, 0.0), 0.0);
            assert_eq!(wavefunction(&st, &s, -1e-6), 0.0);
            // Just above the mirror the amplitude is O(z) and Ai(−λn) ≈ 0.
            let tiny = wavefunction(&st, &s, 1e-300);
            assert!(tiny.abs() <= 1e-12 * st.norm_const);
        }
    }

    #[test]
    fn turning_point_amplitude() {
        let s = scales(&default_constants());
        let st = eigenstate(3, &s).unwrap();
        let psi = wavefunction(&st, &s, s.z0 * st.lambda);
        assert!((psi / st.norm_const - 0.355_028_053_887_817).abs() < 1e-14);
    }

    #[test]
    fn index_zero_rejected() {
        let s = scales(&default_constants());
        assert!(matches!(eigenstate(0, &s), Err(Error::Index(_))));
    }

    #[test]
    fn ground_state_normalized() {
        let s = scales(&default_constants());
        let st = eigenstate(1, &s).unwrap();
        let norm = overlap(&st, &st, 0, Tolerance::default()).unwrap();
        assert!((norm.value - 1.0).abs() < 1e-8);
    }

    #[test]
    fn schrodinger_residual() {
        // (−ħ²/2m) ψ'' + m g z ψ − E ψ, divided by E0, is −ψ_xx + (x − λ) ψ in
        // reduced units.
        let s = scales(&default_constants());
        let h = 2e-4;
        for n in 1..=5 {
            let st = eigenstate(n, &s).unwrap();
            let upper = st.lambda + 4.0;
            let samples: Vec<f64> = (1..=100).map(|i| upper * i as f64 / 101.0).collect();
            let psi_max = samples.iter().map(|&x| st.reduced(x).abs()).fold(0.0, f64::max);
            for &x in &samples {
                let second = (st.reduced(x + h) - 2.0 * st.reduced(x) + st.reduced(x - h)) / (h * h);
                let residual = -second + (x - st.lambda) * st.reduced(x);
                assert!(residual.abs() <= 1e-6 * psi_max, "n={n} x={x} r={residual}");
            }
        }
    }
}
