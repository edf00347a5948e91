//! Spontaneous graviton emission rates for downward transitions `k → n`.
//!
//! Two routes are provided. [`rate_general`] evaluates the quadrupole formula
//! `Γ = (4/15) ω⁵ Q² / (M_Pl² c⁴)` from any quadrupole moment and frequency.
//! [`rate_reduced`] evaluates the published reduced expression
//! `Γ = (512/5) (λk − λn)⁻³ (m/M_Pl)² E0⁵ z0⁴ c / (ħc)⁵`.
//!
//! Substituting the closed-form matrix element into the general formula gives
//! the coefficient `(4/15)·24² = 2304/15`, not `512/5`; the two routes differ
//! by exactly 3/2. Both are kept as written and [`ROUTE_RATIO`] records the gap.

use crate::airy::{airy_zero, refine_zero};
use crate::bouncer::BouncerScales;
use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

pub const GENERAL_COEFFICIENT: f64 = 4.0 / 15.0;
pub const REDUCED_COEFFICIENT: f64 = 512.0 / 5.0;
/// `rate_general / rate_reduced` when fed closed-form matrix elements.
pub const ROUTE_RATIO: f64 = GENERAL_COEFFICIENT * 576.0 / REDUCED_COEFFICIENT;

/// Threshold on `ω z / c` used to read "much less than one".
pub const DEFAULT_VALIDITY_THRESHOLD: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionRate {
    pub k: u64,
    pub n: u64,
    /// rad/s
    pub omega: f64,
    /// s⁻¹
    pub gamma: f64,
    pub quadrupole_ratio: f64,
    pub valid: bool,
}

fn check_index(i: u64) -> Result<()> {
    if i == 0 {
        return Err(Error::Index("bouncer states are numbered from 1".into()));
    }
    Ok(())
}

/// `(Ek − En)/ħ`; negative for upward pairs.
pub fn omega(k: u64, n: u64, scales: &BouncerScales, constants: &PhysicalConstants) -> Result<f64> {
    check_index(k)?;
    check_index(n)?;
    if k == n {
        return Err(Error::Domain(format!("transition {k} → {n} has zero frequency")));
    }
    let gap = airy_zero(k)?.lambda - airy_zero(n)?.lambda;
    Ok(gap * scales.e0 / constants.hbar())
}

pub fn rate_general(q_moment: f64, omega: f64, constants: &PhysicalConstants) -> Result<f64> {
    if omega.is_nan() || omega <= 0.0 {
        return Err(Error::Domain(format!(
            "spontaneous emission needs a positive frequency, got {omega}"
        )));
    }
    let mp = constants.planck_mass();
    let c = constants.c();
    Ok(GENERAL_COEFFICIENT * omega.powi(5) * q_moment * q_moment / (mp * mp * c.powi(4)))
}

/// The reduced-rate prefactor split into its factors, so that the mass
/// coupling can be varied independently of the bouncer scales.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePrefactor {
    pub numeric: f64,
    /// `(m/M_Pl)²`
    pub coupling: f64,
    /// `E0⁵ z0⁴ c / (ħc)⁵`, in s⁻¹
    pub scale: f64,
}

impl RatePrefactor {
    /// s⁻¹
    pub fn value(&self) -> f64 {
        self.numeric * self.coupling * self.scale
    }
}

pub fn rate_prefactor(scales: &BouncerScales, constants: &PhysicalConstants) -> RatePrefactor {
    let ratio = scales.mass / constants.planck_mass();
    let hbar_c = constants.hbar() * constants.c();
    RatePrefactor {
        numeric: REDUCED_COEFFICIENT,
        coupling: ratio * ratio,
        scale: scales.e0.powi(5) * scales.z0.powi(4) * constants.c() / hbar_c.powi(5),
    }
}

pub fn rate_reduced(
    k: u64,
    n: u64,
    scales: &BouncerScales,
    constants: &PhysicalConstants,
) -> Result<f64> {
    check_index(n)?;
    if k <= n {
        return Err(Error::Domain(format!(
            "only downward transitions radiate spontaneously, got {k} → {n}"
        )));
    }
    let gap = airy_zero(k)?.lambda - airy_zero(n)?.lambda;
    Ok(rate_prefactor(scales, constants).value() / gap.powi(3))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Validity {
    /// `ω_k1 z0 λk / c`
    pub ratio: f64,
    pub valid: bool,
}

fn validity_ratio(lambda_k: f64, lambda_1: f64, scales: &BouncerScales, constants: &PhysicalConstants) -> f64 {
    let omega = (lambda_k - lambda_1) * scales.e0 / constants.hbar();
    omega * scales.z0 * lambda_k / constants.c()
}

/// Quadrupole-approximation check for state `k`. The size of the state is
/// taken as its classical turning point `z0 λk` and the frequency as the
/// largest downward one, `ω_k1`.
pub fn quadrupole_validity(
    k: u64,
    scales: &BouncerScales,
    constants: &PhysicalConstants,
    threshold: f64,
) -> Result<Validity> {
    check_index(k)?;
    let ratio = validity_ratio(airy_zero(k)?.lambda, airy_zero(1)?.lambda, scales, constants);
    Ok(Validity { ratio, valid: ratio < threshold })
}

/// Smallest `k` whose validity ratio reaches `level`. The ratio grows like
/// `λk²`, so the search doubles `k` and then bisects; zeros are refined
/// without touching the shared cache.
pub fn validity_crossover(scales: &BouncerScales, constants: &PhysicalConstants, level: f64) -> Result<u64> {
    if !(level > 0.0 && level.is_finite()) {
        return Err(Error::Domain(format!("crossover level must be positive and finite, got {level}")));
    }
    let lambda_1 = airy_zero(1)?.lambda;
    let ratio = |k: u64| -> Result<f64> { Ok(validity_ratio(refine_zero(k)?, lambda_1, scales, constants)) };

    let mut hi = 1u64;
    while ratio(hi)? < level {
        if hi >= 1 << 50 {
            return Err(Error::Domain(format!("validity ratio never reaches {level}")));
        }
        hi *= 2;
    }
    let mut lo = hi / 2; // ratio(lo) < level, or lo == 0
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ratio(mid)? >= level {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Full description of the downward transition `k → n`, using the reduced rate.
pub fn transition(
    k: u64,
    n: u64,
    scales: &BouncerScales,
    constants: &PhysicalConstants,
    threshold: f64,
) -> Result<TransitionRate> {
    let gamma = rate_reduced(k, n, scales, constants)?;
    let validity = quadrupole_validity(k, scales, constants, threshold)?;
    Ok(TransitionRate {
        k,
        n,
        omega: omega(k, n, scales, constants)?,
        gamma,
        quadrupole_ratio: validity.ratio,
        valid: validity.valid,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Lifetime {
    pub n: u64,
    /// s⁻¹
    pub total_rate: f64,
    /// Channels `n → n'` ordered by `n'` ascending.
    pub partials: Vec<TransitionRate>,
}

impl Lifetime {
    /// Final state of the fastest channel.
    pub fn dominant_final_state(&self) -> Option<u64> {
        self.partials
            .iter()
            .max_by(|a, b| a.gamma.total_cmp(&b.gamma))
            .map(|t| t.n)
    }

    /// Mean lifetime in seconds; infinite for the ground state.
    pub fn mean_lifetime(&self) -> f64 {
        1.0 / self.total_rate
    }
}

pub fn lifetime(
    n: u64,
    scales: &BouncerScales,
    constants: &PhysicalConstants,
    threshold: f64,
) -> Result<Lifetime> {
    check_index(n)?;
    let partials = (1..n)
        .map(|lower| transition(n, lower, scales, constants, threshold))
        .collect::<Result<Vec<_>>>()?;
    let total_rate = partials.iter().fold(0.0, |acc, t| acc + t.gamma);
    Ok(Lifetime { n, total_rate, partials })
}
