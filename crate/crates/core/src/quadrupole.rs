//! Matrix elements `⟨k|ẑ²|n⟩` and quadrupole moments `Q_kn = m ⟨k|ẑ²|n⟩`.
//!
//! Off-diagonal elements have the closed form
//! `⟨k|ẑ²|n⟩ = 24 (−1)^(k−n+1) z0² / (λk − λn)⁴`; [`element_quadrature`]
//! integrates the same quantity numerically and also covers the diagonal.

use crate::airy::airy_zero;
use crate::bouncer::{eigenstate, overlap, BouncerScales};
use crate::error::{Error, Result};
use crate::quadrature::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadrupoleElement {
    pub k: u64,
    pub n: u64,
    /// `⟨k|ẑ²|n⟩ / z0²`
    pub dimensionless: f64,
    /// m²
    pub physical: f64,
    /// kg·m²
    pub q_moment: f64,
}

impl QuadrupoleElement {
    fn new(k: u64, n: u64, dimensionless: f64, scales: &BouncerScales) -> Self {
        let physical = dimensionless * scales.z0 * scales.z0;
        Self { k, n, dimensionless, physical, q_moment: scales.mass * physical }
    }
}

/// `(−1)^(k−n+1)`
pub fn parity_sign(k: u64, n: u64) -> f64 {
    if k.abs_diff(n) % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

fn check_index(i: u64) -> Result<()> {
    if i == 0 {
        return Err(Error::Index("bouncer states are numbered from 1".into()));
    }
    Ok(())
}

pub fn element_closed(k: u64, n: u64, scales: &BouncerScales) -> Result<QuadrupoleElement> {
    check_index(k)?;
    check_index(n)?;
    if k == n {
        return Err(Error::Domain(format!(
            "closed form diverges on the diagonal ({k},{k}); use element_quadrature"
        )));
    }
    let gap = airy_zero(k)?.lambda - airy_zero(n)?.lambda;
    let value = 24.0 * parity_sign(k, n) / gap.powi(4);
    Ok(QuadrupoleElement::new(k, n, value, scales))
}

/// Largest index accepted by [`element_quadrature`].
pub const QUADRATURE_MAX_INDEX: u64 = 200;

/// Numerical `∫₀^∞ ψk z² ψn dz` over `[0, z0 (max(λk, λn) + 15)]`.
pub fn element_quadrature(k: u64, n: u64, scales: &BouncerScales) -> Result<QuadrupoleElement> {
    for i in [k, n] {
        check_index(i)?;
        if i > QUADRATURE_MAX_INDEX {
            return Err(Error::Index(format!(
                "quadrature matrix elements are limited to indices ≤ {QUADRATURE_MAX_INDEX}, got {i}"
            )));
        }
    }
    let a = eigenstate(k, scales)?;
    let b = eigenstate(n, scales)?;
    let integral = overlap(&a, &b, 2, Tolerance::default())?;
    Ok(QuadrupoleElement::new(k, n, integral.value, scales))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bouncer::scales;
    use crate::constants::default_constants;

    fn s() -> BouncerScales {
        scales(&default_constants())
    }

    #[test]
    fn lowest_pair() {
        let e = element_closed(1, 2, &s()).unwrap();
        // 24 / 1.7498420336712⁴
        assert!((e.dimensionless - 2.559_857_929_846_27).abs() < 1e-12);
        let q = element_quadrature(1, 2, &s()).unwrap();
        assert!((q.dimensionless - e.dimensionless).abs() < 1e-6 * e.dimensionless);
    }

    #[test]
    fn sign_and_symmetry() {
        let sc = s();
        assert!(element_closed(1, 3, &sc).unwrap().dimensionless < 0.0);
        assert!(element_closed(1, 4, &sc).unwrap().dimensionless > 0.0);
        assert_eq!(
            element_closed(2, 1, &sc).unwrap().dimensionless,
            element_closed(1, 2, &sc).unwrap().dimensionless
        );
        let q13 = element_quadrature(1, 3, &sc).unwrap();
        assert!(q13.dimensionless < 0.0);
    }

    #[test]
    fn diagonal_rejected_by_closed_form() {
        assert!(matches!(element_closed(3, 3, &s()), Err(Error::Domain(_))));
        assert!(element_closed(0, 3, &s()).is_err());
        assert!(element_quadrature(1, 201, &s()).is_err());
    }

    #[test]
    fn diagonal_by_quadrature() {
        let q = element_quadrature(3, 3, &s()).unwrap();
        let lambda3 = airy_zero(3).unwrap().lambda;
        assert!(q.dimensionless > 0.0);
        let ratio = q.dimensionless / (lambda3 * lambda3);
        assert!(ratio > 0.1 && ratio < 1.0, "ratio {ratio}");
    }

    #[test]
    fn units() {
        let sc = s();
        let e = element_closed(2, 5, &sc).unwrap();
        assert!((e.physical - e.dimensionless * sc.z0 * sc.z0).abs() <= 1e-15 * e.physical.abs());
        let back = e.q_moment / (sc.mass * sc.z0 * sc.z0);
        assert!((back - e.dimensionless).abs() <= 1e-12 * e.dimensionless.abs());
    }
}
