//! Tanh-sinh quadrature on (0, 1).
//!
//! Integrands receive both `x` and `1 − x`, each computed directly from the
//! substitution, so singularities at either endpoint keep full precision.

use super::{EvalResult, Method};
use crate::error::{domain, EulerError, Result};
use crate::specfun;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;

const MAX_LEVEL: u32 = 10;

/// Integrals served by [`quadrature`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Integrand {
    /// ∫₀¹ x^{a−1} ln^m(1−x) dx
    LogPowMoment { m: u32, a: f64 },
    /// ∫₀¹ x^{a−1} Li_m(x) dx
    PolylogMoment { m: u32, a: f64 },
    /// ∫₀¹ x^{a−1} ln(1−x) Li₂(x) dx
    LogTimesLi2 { a: f64 },
    /// ∫₀^x H_m(t, a) t^{n+b−1} dt
    LemmaMoment { m: u32, n: u32, a: f64, b: f64, x: f64 },
    /// ∫₀^x Li_m(t) t^{n+b−1} dt
    LemmaMomentZero { m: u32, n: u32, b: f64, x: f64 },
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct QuadOutcome {
    pub value: f64,
    pub err: f64,
    pub evals: u64,
}

/// ∫₀¹ f(x, 1−x) dx by level-doubling tanh-sinh.
pub(crate) fn tanh_sinh01(f: impl Fn(f64, f64) -> f64, tol: f64) -> Result<QuadOutcome> {
    let mut evals = 0u64;
    let mut abs_sum = 0.0;
    // Weighted contribution of the node pair at ±t (or the centre when t = 0).
    let pair = |t: f64, evals: &mut u64, abs_sum: &mut f64| -> Result<Option<f64>> {
        let u = FRAC_PI_2 * t.sinh();
        let e = (-2.0 * u).exp();
        let small = e / (1.0 + e);
        if small < 1e-300 {
            return Ok(None);
        }
        let big = 1.0 / (1.0 + e);
        let w = std::f64::consts::PI * t.cosh() * e / ((1.0 + e) * (1.0 + e));
        let mut s = w * f(big, small);
        *evals += 1;
        *abs_sum += s.abs();
        if t > 0.0 {
            let v = w * f(small, big);
            *evals += 1;
            *abs_sum += v.abs();
            s += v;
        }
        if !s.is_finite() {
            return Err(EulerError::Convergence(format!("non-finite integrand near t = {t}")));
        }
        Ok(Some(s))
    };

    let mut h = 1.0;
    let mut sum = 0.0;
    let mut k = 0u32;
    while let Some(v) = pair(k as f64 * h, &mut evals, &mut abs_sum)? {
        sum += v;
        k += 1;
    }
    let mut estimate = h * sum;
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        let mut k = 1u32;
        while let Some(v) = pair(k as f64 * h, &mut evals, &mut abs_sum)? {
            sum += v;
            k += 2;
        }
        let next = h * sum;
        let diff = (next - estimate).abs();
        estimate = next;
        let round = 1e-15 * h * abs_sum;
        if level >= 3 && diff <= tol.max(round) {
            return Ok(QuadOutcome { value: estimate, err: diff + round, evals });
        }
    }
    Err(EulerError::Convergence(format!(
        "tanh-sinh did not reach tolerance {tol:e} (estimate {estimate})"
    )))
}

fn check_shift(a: f64) -> Result<()> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain(format!("quadrature needs a > 0, got {a}")));
    }
    Ok(())
}

fn check_order(m: u32) -> Result<()> {
    if m == 0 || m > 6 {
        return Err(domain(format!("quadrature order must be in 1..=6, got {m}")));
    }
    Ok(())
}

fn li_with_complement(m: u32, x: f64, omx: f64) -> f64 {
    let r = if x <= 0.5 { specfun::polylog(m, x) } else { specfun::polylog_complement(m, omx) };
    r.unwrap_or(f64::NAN)
}

/// Evaluates one of the catalogued integrals.
pub fn quadrature(integrand: Integrand, tol: f64) -> Result<EvalResult> {
    if !(tol >= 1e-13) {
        return Err(domain(format!("quadrature tolerance must be >= 1e-13, got {tol}")));
    }
    let out = match integrand {
        Integrand::LogPowMoment { m, a } => {
            check_shift(a)?;
            check_order(m)?;
            tanh_sinh01(|x, omx| x.powf(a - 1.0) * omx.ln().powi(m as i32), tol)?
        }
        Integrand::PolylogMoment { m, a } => {
            check_shift(a)?;
            check_order(m)?;
            tanh_sinh01(|x, omx| x.powf(a - 1.0) * li_with_complement(m, x, omx), tol)?
        }
        Integrand::LogTimesLi2 { a } => {
            check_shift(a)?;
            tanh_sinh01(|x, omx| x.powf(a - 1.0) * omx.ln() * li_with_complement(2, x, omx), tol)?
        }
        Integrand::LemmaMoment { m, n, a, b, x } => {
            check_order(m)?;
            check_upper(x, n, b)?;
            crate::specfun::ShiftParam::new(a)?;
            let e = f64::from(n) + b - 1.0;
            let q = tanh_sinh01(
                |v, _| {
                    let t = x * v;
                    specfun::h_func(m, a, t).unwrap_or(f64::NAN) * t.powf(e)
                },
                tol / x,
            )?;
            QuadOutcome { value: x * q.value, err: x * q.err, evals: q.evals }
        }
        Integrand::LemmaMomentZero { m, n, b, x } => {
            check_order(m)?;
            check_upper(x, n, b)?;
            let e = f64::from(n) + b - 1.0;
            let q = tanh_sinh01(
                |v, _| {
                    let t = x * v;
                    specfun::polylog(m, t).unwrap_or(f64::NAN) * t.powf(e)
                },
                tol / x,
            )?;
            QuadOutcome { value: x * q.value, err: x * q.err, evals: q.evals }
        }
    };
    Ok(EvalResult { value: out.value, abs_error_estimate: out.err, method: Method::Quadrature, work: out.evals })
}

fn check_upper(x: f64, n: u32, b: f64) -> Result<()> {
    if !(x > 0.0 && x < 1.0) {
        return Err(domain(format!("lemma quadrature needs 0 < x < 1, got {x}")));
    }
    if !(f64::from(n) + b > 0.0) {
        return Err(domain(format!("lemma quadrature needs n + b > 0, got {}", f64::from(n) + b)));
    }
    Ok(())
}
