//! The Airy function Ai and its derivative on the real line, and the negative
//! zeros of Ai.
//!
//! Evaluation uses three regimes:
//!
//! * `|x| <= 9`: a table of (Ai, Ai') on nodes spaced 0.25 apart, with a local
//!   Taylor expansion of the Airy equation `y'' = x y` around the nearest node.
//!   Nodes left of the origin are generated by stepping out of the exact values
//!   at zero; nodes right of the origin by stepping inward from the decaying
//!   asymptotic expansion at x = 9, which keeps both sweeps stable.
//! * `x > 9`: the exponentially decaying asymptotic expansion.
//! * `x < -9`: the oscillatory asymptotic expansion.
//!
//! Both asymptotic series are cut at the smallest term; at |x| = 9 that term is
//! already below 1e-16 relative.

use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_4, PI};
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

/// Ai(0) = 3^(-2/3) / Γ(2/3).
pub const AI_ZERO: f64 = 0.355_028_053_887_817_24;
/// Ai'(0) = -3^(-1/3) / Γ(1/3).
pub const AI_PRIME_ZERO: f64 = -0.258_819_403_792_806_8;

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;

const ASYMPTOTIC_CUTOFF: f64 = 9.0;
const NODE_SPACING: f64 = 0.25;
const NODE_COUNT: usize = 73;
const ORIGIN_NODE: usize = 36;

const NEWTON_TOL: f64 = 1e-13;
const NEWTON_MAX_ITER: usize = 50;

/// Ai and Ai' at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryValue {
    pub ai: f64,
    pub ai_prime: f64,
}

pub fn airy_ai(x: f64) -> Result<f64> {
    airy(x).map(|v| v.ai)
}

pub fn airy_ai_prime(x: f64) -> Result<f64> {
    airy(x).map(|v| v.ai_prime)
}

/// Ai and Ai' together; cheaper than two separate calls.
pub fn airy(x: f64) -> Result<AiryValue> {
    if !x.is_finite() {
        return Err(Error::NonFinite(x));
    }
    Ok(eval(x))
}

/// Unchecked evaluation for finite `x`. Non-finite input gives NaN or a limit.
pub(crate) fn eval(x: f64) -> AiryValue {
    if x > ASYMPTOTIC_CUTOFF {
        decaying_asymptotic(x)
    } else if x < -ASYMPTOTIC_CUTOFF {
        oscillatory_asymptotic(-x)
    } else if x.is_nan() {
        AiryValue { ai: f64::NAN, ai_prime: f64::NAN }
    } else {
        let table = node_table();
        let idx = ((x + ASYMPTOTIC_CUTOFF) / NODE_SPACING).round() as usize;
        let idx = idx.min(NODE_COUNT - 1);
        let x0 = node_position(idx);
        let node = table[idx];
        taylor_step(x0, node, x - x0)
    }
}

fn node_position(idx: usize) -> f64 {
    -ASYMPTOTIC_CUTOFF + NODE_SPACING * idx as f64
}

fn node_table() -> &'static [AiryValue; NODE_COUNT] {
    static TABLE: OnceLock<[AiryValue; NODE_COUNT]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [AiryValue { ai: 0.0, ai_prime: 0.0 }; NODE_COUNT];
        table[ORIGIN_NODE] = AiryValue { ai: AI_ZERO, ai_prime: AI_PRIME_ZERO };
        for idx in (0..ORIGIN_NODE).rev() {
            table[idx] = taylor_step(node_position(idx + 1), table[idx + 1], -NODE_SPACING);
        }
        table[NODE_COUNT - 1] = decaying_asymptotic(ASYMPTOTIC_CUTOFF);
        for idx in (ORIGIN_NODE + 1..NODE_COUNT - 1).rev() {
            table[idx] = taylor_step(node_position(idx + 1), table[idx + 1], -NODE_SPACING);
        }
        table
    })
}

/// Advances (y, y') of `y'' = x y` from `x0` by `t` using the Taylor series
/// around `x0`. The coefficients obey `(j+2)(j+1) a[j+2] = x0 a[j] + a[j-1]`.
pub fn taylor_step(x0: f64, start: AiryValue, t: f64) -> AiryValue {
    const MAX_TERMS: usize = 80;
    let mut a = [0.0f64; MAX_TERMS];
    a[0] = start.ai;
    a[1] = start.ai_prime;
    a[2] = 0.5 * x0 * a[0];

    let mut y = a[0] + a[1] * t;
    let mut dy = a[1];
    let mut t_pow = t; // t^(j-1)
    let mut quiet = 0;
    for j in 2..MAX_TERMS {
        if j >= 3 {
            a[j] = (x0 * a[j - 2] + a[j - 3]) / (j * (j - 1)) as f64;
        }
        let d_term = j as f64 * a[j] * t_pow;
        t_pow *= t;
        let term = a[j] * t_pow;
        y += term;
        dy += d_term;
        let scale = y.abs().max(dy.abs()) * f64::EPSILON * 0.25;
        if term.abs() <= scale && d_term.abs() <= scale {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    AiryValue { ai: y, ai_prime: dy }
}

/// Coefficients `u_k` of the Airy asymptotic expansions, paired with `v_k`.
fn asymptotic_coefficients() -> &'static [(f64, f64)] {
    static COEFFS: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut out = Vec::with_capacity(64);
        let mut u = 1.0f64;
        out.push((1.0, 1.0));
        for k in 1..64 {
            let kf = k as f64;
            u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
                / (216.0 * kf * (2.0 * kf - 1.0));
            let v = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u;
            out.push((u, v));
        }
        out
    })
}

/// Sums `Σ (-1)^k c_k ζ^-k` over the selected coefficient, stopping at the
/// smallest term. With `stride = 2` and `offset` 0 or 1 it produces the even and
/// odd alternating sub-series used by the oscillatory expansion.
fn truncated_series(zeta: f64, pick: fn(&(f64, f64)) -> f64, offset: usize, stride: usize) -> f64 {
    let coeffs = asymptotic_coefficients();
    let inv = 1.0 / zeta;
    let step = if stride == 1 { inv } else { inv * inv };
    let mut power = if offset == 0 { 1.0 } else { inv };
    let mut sum = 0.0;
    let mut prev = f64::INFINITY;
    let mut sign = 1.0;
    let mut k = offset;
    while k < coeffs.len() {
        let term = pick(&coeffs[k]) * power;
        if term.abs() >= prev {
            break;
        }
        sum += sign * term;
        if term.abs() <= f64::EPSILON * 0.25 * sum.abs() {
            break;
        }
        prev = term.abs();
        sign = -sign;
        power *= step;
        k += stride;
    }
    sum
}

fn decaying_asymptotic(x: f64) -> AiryValue {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let quarter = x.sqrt().sqrt();
    let decay = (-zeta).exp() * 0.5 * FRAC_1_SQRT_PI;
    let su = truncated_series(zeta, |c| c.0, 0, 1);
    let sv = truncated_series(zeta, |c| c.1, 0, 1);
    AiryValue { ai: decay / quarter * su, ai_prime: -decay * quarter * sv }
}

/// Ai(-z) and Ai'(-z) for large positive `z`.
fn oscillatory_asymptotic(z: f64) -> AiryValue {
    let zeta = 2.0 / 3.0 * z * z.sqrt();
    let quarter = z.sqrt().sqrt();
    let (sin, cos) = (zeta - FRAC_PI_4).sin_cos();
    let pu = truncated_series(zeta, |c| c.0, 0, 2);
    let qu = truncated_series(zeta, |c| c.0, 1, 2);
    let pv = truncated_series(zeta, |c| c.1, 0, 2);
    let qv = truncated_series(zeta, |c| c.1, 1, 2);
    AiryValue {
        ai: FRAC_1_SQRT_PI / quarter * (cos * pu + sin * qu),
        ai_prime: FRAC_1_SQRT_PI * quarter * (sin * pv - cos * qv),
    }
}

/// Maclaurin series `Ai(x) = Ai(0) f(x) + Ai'(0) g(x)`. Accurate for small
/// `|x|`; cancellation grows like `exp(4/3 |x|^(3/2))` so it is only used as a
/// reference evaluator.
pub fn maclaurin(x: f64) -> AiryValue {
    let x3 = x * x * x;
    let (mut f, mut g) = (1.0, x);
    let (mut fp, mut gp) = (0.0, 1.0);
    let (mut tf, mut tg) = (1.0, x);
    let (mut tfp, mut tgp) = (0.5 * x * x, 1.0);
    fp += tfp;
    for k in 1..200 {
        let kf = k as f64;
        tf *= x3 / ((3.0 * kf - 1.0) * (3.0 * kf));
        tg *= x3 / ((3.0 * kf) * (3.0 * kf + 1.0));
        if k >= 2 {
            tfp *= x3 / ((3.0 * kf - 1.0) * (3.0 * kf - 3.0));
            fp += tfp;
        }
        tgp *= x3 / ((3.0 * kf) * (3.0 * kf - 2.0));
        f += tf;
        g += tg;
        gp += tgp;
        let tiny = f64::EPSILON * 1e-3;
        if tf.abs() <= tiny * f.abs()
            && tg.abs() <= tiny * g.abs().max(f64::MIN_POSITIVE)
            && tfp.abs() <= tiny * fp.abs().max(f64::MIN_POSITIVE)
            && tgp.abs() <= tiny * gp.abs()
        {
            break;
        }
    }
    AiryValue {
        ai: AI_ZERO * f + AI_PRIME_ZERO * g,
        ai_prime: AI_ZERO * fp + AI_PRIME_ZERO * gp,
    }
}

/// The n-th negative zero of Ai is `-lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryZero {
    pub n: u64,
    pub lambda: f64,
}

/// Bohr–Sommerfeld estimate `(3π(4n-1)/8)^(2/3)` of the n-th zero magnitude.
pub fn bs_zero(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Index("Airy zeros are numbered from 1".into()));
    }
    Ok(bs_unchecked(n))
}

fn bs_unchecked(n: u64) -> f64 {
    (3.0 * PI * (4.0 * n as f64 - 1.0) / 8.0).powf(2.0 / 3.0)
}

/// Interval between the midpoints of adjacent Bohr–Sommerfeld estimates. It
/// holds exactly one zero.
pub fn zero_bracket(n: u64) -> Result<(f64, f64)> {
    let here = bs_zero(n)?;
    let next = bs_unchecked(n + 1);
    let lo = if n == 1 { here - 0.5 * (next - here) } else { 0.5 * (bs_unchecked(n - 1) + here) };
    Ok((lo, 0.5 * (here + next)))
}

/// Magnitude of the n-th negative zero of Ai, cached in a process-wide table.
pub fn airy_zero(n: u64) -> Result<AiryZero> {
    ZeroCache::shared().get(n)
}

/// Newton iteration on `Ai(-λ)` seeded by the Bohr–Sommerfeld estimate, with a
/// bisection fallback if an iterate leaves the bracket. Uncached.
pub fn refine_zero(n: u64) -> Result<f64> {
    let (lo, hi) = zero_bracket(n)?;
    let mut lambda = bs_unchecked(n);
    for _ in 0..NEWTON_MAX_ITER {
        let v = eval(-lambda);
        if v.ai == 0.0 {
            return Ok(lambda);
        }
        // d/dλ Ai(-λ) = -Ai'(-λ)
        let step = -v.ai / v.ai_prime;
        let next = lambda - step;
        if !(next > lo && next < hi) {
            return bisect(n, lo, hi);
        }
        lambda = next;
        if step.abs() <= NEWTON_TOL * lambda.max(1.0) {
            return Ok(lambda);
        }
    }
    Err(Error::ZeroConvergence { n, last: lambda })
}

fn bisect(n: u64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let f_lo = eval(-lo).ai;
    if f_lo * eval(-hi).ai > 0.0 {
        return Err(Error::ZeroConvergence { n, last: 0.5 * (lo + hi) });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = eval(-mid).ai;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= NEWTON_TOL * lo.max(1.0) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Thread-safe memo of refined zeros. Values are inserted only once fully
/// computed, so readers never see a partial result.
#[derive(Debug, Default)]
pub struct ZeroCache {
    zeros: RwLock<HashMap<u64, f64>>,
}

impl ZeroCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn shared() -> &'static ZeroCache {
        static SHARED: OnceLock<ZeroCache> = OnceLock::new();
        SHARED.get_or_init(ZeroCache::new)
    }

    pub fn get(&self, n: u64) -> Result<AiryZero> {
        if let Some(&lambda) = self.zeros.read().unwrap().get(&n) {
            return Ok(AiryZero { n, lambda });
        }
        let lambda = refine_zero(n)?;
        self.zeros.write().unwrap().insert(n, lambda);
        Ok(AiryZero { n, lambda })
    }

    /// Zeros 1..=count in order.
    pub fn first(&self, count: u64) -> Result<Vec<AiryZero>> {
        (1..=count).map(|n| self.get(n)).collect()
    }

    pub fn len(&self) -> usize {
        self.zeros.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
