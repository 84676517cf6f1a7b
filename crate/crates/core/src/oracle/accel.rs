//! Acceleration of sign-alternating series Σ (−1)^{n−1} |t_n|.

use super::{AccelMode, EvalResult, Method, SeriesConfig};
use crate::error::{EulerError, Result};
use crate::specfun::cvz_sum;

const CVZ_TERMS: usize = 48;
const AVERAGING_TERMS: usize = 64;

/// Euler–van Wijngaarden style iterated averaging of the partial sums.
pub(crate) fn averaged_partial_sums(mags: &[f64]) -> f64 {
    let mut partial = Vec::with_capacity(mags.len());
    let mut s = 0.0;
    for (i, m) in mags.iter().enumerate() {
        s += if i % 2 == 0 { *m } else { -*m };
        partial.push(s);
    }
    while partial.len() > 1 {
        for i in 0..partial.len() - 1 {
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        }
        partial.pop();
    }
    partial[0]
}

/// Σ_{n≥1} (−1)^{n−1} |t_n| from the magnitudes `term(n)`.
///
/// Two independent accelerators (CVZ at two orders and iterated averaging
/// of partial sums) must agree; their spread is the error estimate.
pub fn accelerated_alternating(term: impl Fn(u64) -> f64, config: &SeriesConfig) -> Result<EvalResult> {
    let n = AVERAGING_TERMS.max(CVZ_TERMS);
    let mags: Vec<f64> = (1..=n as u64).map(|k| term(k).abs()).collect();
    if mags.iter().any(|m| !m.is_finite()) {
        return Err(EulerError::Convergence("non-finite alternating term".into()));
    }
    let lead = mags[0].max(f64::MIN_POSITIVE);
    let averaged = averaged_partial_sums(&mags);
    let (value, err) = match config.accel {
        AccelMode::AlternatingCVZ => {
            let hi = cvz_sum(CVZ_TERMS, |k| mags[k]);
            let lo = cvz_sum(CVZ_TERMS / 2, |k| mags[k]);
            let spread = (hi - lo).abs().max((hi - averaged).abs());
            (hi, spread + 8.0 * f64::EPSILON * (hi.abs() + lead))
        }
        AccelMode::None => {
            let half = averaged_partial_sums(&mags[..AVERAGING_TERMS / 2]);
            (averaged, (averaged - half).abs() + 8.0 * f64::EPSILON * lead)
        }
    };
    if err > config.target_tol {
        return Err(EulerError::Convergence(format!(
            "alternating accelerators disagree by {err:e} (target {:e})",
            config.target_tol
        )));
    }
    Ok(EvalResult { value, abs_error_estimate: err, method: Method::Accelerated, work: n as u64 })
}
