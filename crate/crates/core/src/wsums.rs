//! Euler sums over reciprocal binomial coefficients,
//! W = Σ_{n≥1} f(n) / ((n+a)^p · binom(n+k+b, k)),
//! reduced to window and power sums by partial fractions.

use crate::alt_sums::{alt_sum_H1_bilinear, alt_sum_H1_bilinear_printed, alt_sum_H1_power, alt_sum_Hm_window};
use crate::error::{domain, EulerError, Result};
use crate::harmonic::{harmonic_num, param_harmonic, shifted_harmonic};
use crate::linear_sums::{
    at_least, positive, sum_H1_bilinear, sum_H1_bilinear_printed, sum_H1_power, sum_Hm_window, y2, y3,
};
use crate::specfun::{is_integer, zeta_int};

/// Largest k accepted by the closed-form W evaluators.
pub const MAX_K: u32 = 30;

/// Beyond this k the alternating binomial weights cost noticeable digits.
pub const WARN_K: u32 = 20;

/// Largest k accepted by [`pf_coeffs`].
pub const MAX_PF_K: u32 = 60;

fn binomial(n: u32, r: u32) -> f64 {
    if r > n {
        return 0.0;
    }
    let r = r.min(n - r);
    let mut c: u128 = 1;
    for i in 0..r {
        c = c * u128::from(n - i) / u128::from(i + 1);
    }
    c as f64
}

fn sign(j: u32) -> f64 {
    if j % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// A_r = (−1)^{r+1} r C(k, r) with 1/binom(n+k+a, k) = Σ_r A_r/(n+a+r).
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PartialFractionCoeffs {
    pub k: u32,
    pub coeffs: Vec<f64>,
}

impl PartialFractionCoeffs {
    /// Σ_r A_r/(n+a+r).
    pub fn reconstruct(&self, n: f64, a: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c / (n + a + i as f64 + 1.0))
            .sum()
    }
}

pub fn pf_coeffs(k: u32) -> Result<PartialFractionCoeffs> {
    if !(1..=MAX_PF_K).contains(&k) {
        return Err(domain(format!("pf_coeffs needs 1 <= k <= {MAX_PF_K}, got {k}")));
    }
    let coeffs = (1..=k).map(|r| sign(r + 1) * f64::from(r) * binomial(k, r)).collect();
    Ok(PartialFractionCoeffs { k, coeffs })
}

/// Weights w_r = k(−1)^{r+1} r C(k−1, r), r = 1..k−1, with
/// 1/binom(n+k+a, k) = Σ_r w_r / ((n+a+1)(n+a+r+1)).
pub fn pf_coeffs_window(k: u32) -> Result<Vec<f64>> {
    if !(2..=MAX_PF_K).contains(&k) {
        return Err(domain(format!("pf_coeffs_window needs 2 <= k <= {MAX_PF_K}, got {k}")));
    }
    Ok((1..k)
        .map(|r| f64::from(k) * sign(r + 1) * f64::from(r) * binomial(k - 1, r))
        .collect())
}

/// A precision note for large binomial depths, if any.
pub fn precision_warning(k: u32) -> Option<String> {
    (k > WARN_K).then(|| {
        format!("binomial depth k={k} > {WARN_K}: alternating partial-fraction weights may cost several digits")
    })
}

fn check_k(k: u32, min: u32) -> Result<()> {
    at_least("k", k, min)?;
    if k > MAX_K {
        return Err(domain(format!("closed-form W sums support k <= {MAX_K}, got {k}")));
    }
    Ok(())
}

fn check_resonance(a: f64, b: f64, k: u32) -> Result<()> {
    for r in 1..=k {
        let d = a - b - f64::from(r);
        if d.abs() <= 1e-12 * a.abs().max(1.0) {
            return Err(EulerError::Resonance { a, b, r });
        }
    }
    Ok(())
}

/// Σ_r A_r Σ f(n)/((n+a)^p (n+b+r)) given the bilinear and power kernels.
fn power_binomial(
    a: f64,
    b: f64,
    k: u32,
    p: u32,
    bilinear: impl Fn(f64, f64) -> Result<f64>,
    power: impl Fn(f64, u32) -> Result<f64>,
) -> Result<f64> {
    check_k(k, 1)?;
    at_least("p", p, 1)?;
    if p + k <= 1 {
        return Err(domain("W sums need p + k > 1"));
    }
    check_resonance(a, b, k)?;
    let pf = pf_coeffs(k)?;
    let powers: Vec<f64> = (2..=p).map(|j| power(a, j)).collect::<Result<_>>()?;
    let mut v = 0.0;
    for (i, coef) in pf.coeffs.iter().enumerate() {
        let c = b + i as f64 + 1.0;
        let d = a - c;
        let mut t = bilinear(a, c)? / d.powi(p as i32 - 1);
        for (j, pw) in (2..=p).zip(&powers) {
            t -= pw / d.powi((p + 1 - j) as i32);
        }
        v += coef * t;
    }
    Ok(v)
}

/// Σ H_n / ((n+a)^p binom(n+k+b, k)).
pub fn w_1_p(a: f64, b: f64, k: u32, p: u32) -> Result<f64> {
    positive("a", a)?;
    positive("b", b)?;
    power_binomial(a, b, k, p, sum_H1_bilinear, sum_H1_power)
}

/// [`w_1_p`] assembled from the printed bilinear form.
pub fn w_1_p_printed(a: f64, b: f64, k: u32, p: u32) -> Result<f64> {
    positive("a", a)?;
    positive("b", b)?;
    power_binomial(a, b, k, p, sum_H1_bilinear_printed, sum_H1_power)
}

/// Σ H_n^{(m)} / binom(n+k+b, k), b > −1.
pub fn w_m_0(b: f64, k: u32, m: u32) -> Result<f64> {
    binomial_shift(b)?;
    check_k(k, 2)?;
    let w = pf_coeffs_window(k)?;
    let mut v = 0.0;
    for (i, wr) in w.iter().enumerate() {
        v += wr * sum_Hm_window(b + 1.0, i as u32 + 1, m)?;
    }
    Ok(v)
}

/// Σ H_n^{(m)} / ((n+a) binom(n+k+a, k)).
pub fn w_m_1(a: f64, k: u32, m: u32) -> Result<f64> {
    positive("a", a)?;
    check_k(k, 1)?;
    let pf = pf_coeffs(k)?;
    let mut v = 0.0;
    for (i, c) in pf.coeffs.iter().enumerate() {
        v += c * sum_Hm_window(a, i as u32 + 1, m)?;
    }
    Ok(v)
}

fn binomial_shift(b: f64) -> Result<()> {
    if !(b > -1.0) || !b.is_finite() {
        return Err(domain(format!("binomial shift must be > -1, got {b}")));
    }
    Ok(())
}

/// r · Σ H_n²/((n+a)(n+a+r)) with H_a supplied separately.
fn h1sq_kernel(a: f64, r: u32, ha: f64) -> Result<f64> {
    let rr = u64::from(r);
    let mut v = zeta_int(2) * param_harmonic(rr, 1, a - 1.0)? - ha * param_harmonic(rr, 2, a - 1.0)?;
    let mut h = 0.0;
    for i in 1..r {
        let x = f64::from(i) + a;
        h += 1.0 / x;
        v -= h / (x * x);
    }
    for j in 0..r {
        let x = a + f64::from(j);
        v += y2(x)? / x;
    }
    Ok(v)
}

fn w_11_0_with(b: f64, k: u32, ha: f64) -> Result<f64> {
    check_k(k, 2)?;
    let mut v = 0.0;
    for r in 1..k {
        v += sign(r + 1) * binomial(k - 1, r) * h1sq_kernel(b + 1.0, r, ha)?;
    }
    Ok(f64::from(k) * v)
}

/// Σ H_n² / binom(n+k+b, k), b ≥ 0.
pub fn w_11_0(b: f64, k: u32) -> Result<f64> {
    if !(b >= 0.0) || !b.is_finite() {
        return Err(domain(format!("b must be >= 0, got {b}")));
    }
    w_11_0_with(b, k, shifted_harmonic(b + 1.0, 1)?)
}

/// [`w_11_0`] with H_b in place of H_{b+1}, as printed.
pub fn w_11_0_printed(b: f64, k: u32) -> Result<f64> {
    if !(b >= 0.0) || !b.is_finite() {
        return Err(domain(format!("b must be >= 0, got {b}")));
    }
    w_11_0_with(b, k, shifted_harmonic(b, 1)?)
}

/// Σ H_n² / ((n+a) binom(n+k+a, k)).
pub fn w_111(a: f64, k: u32) -> Result<f64> {
    positive("a", a)?;
    check_k(k, 1)?;
    let ha = shifted_harmonic(a, 1)?;
    let mut v = 0.0;
    for r in 1..=k {
        v += sign(r + 1) * binomial(k, r) * h1sq_kernel(a, r, ha)?;
    }
    Ok(v)
}

/// Σ H̄_n / ((n+a)^p binom(n+k+b, k)).
pub fn w_alt_1_p(a: f64, b: f64, k: u32, p: u32) -> Result<f64> {
    positive("a", a)?;
    positive("b", b)?;
    power_binomial(a, b, k, p, alt_sum_H1_bilinear, alt_sum_H1_power)
}

/// [`w_alt_1_p`] assembled from the printed alternating bilinear form.
pub fn w_alt_1_p_printed(a: f64, b: f64, k: u32, p: u32) -> Result<f64> {
    positive("a", a)?;
    positive("b", b)?;
    power_binomial(a, b, k, p, alt_sum_H1_bilinear_printed, alt_sum_H1_power)
}

fn integer_at_least(a: f64, min: f64) -> Result<()> {
    if !(a >= min) || !is_integer(a) {
        return Err(domain(format!("a must be an integer >= {min}, got {a}")));
    }
    Ok(())
}

/// Σ H̄_n^{(m)} / binom(n+k+a, k) for integer a ≥ 0.
pub fn w_alt_m_0(a: f64, k: u32, m: u32) -> Result<f64> {
    integer_at_least(a, 0.0)?;
    check_k(k, 2)?;
    let w = pf_coeffs_window(k)?;
    let mut v = 0.0;
    for (i, wr) in w.iter().enumerate() {
        v += wr * alt_sum_Hm_window(a + 1.0, i as u32 + 1, m)?;
    }
    Ok(v)
}

/// Σ H̄_n^{(m)} / ((n+a) binom(n+k+a, k)) for integer a ≥ 1.
pub fn w_alt_m_1(a: f64, k: u32, m: u32) -> Result<f64> {
    integer_at_least(a, 1.0)?;
    check_k(k, 1)?;
    let pf = pf_coeffs(k)?;
    let mut v = 0.0;
    for (i, c) in pf.coeffs.iter().enumerate() {
        v += c * alt_sum_Hm_window(a, i as u32 + 1, m)?;
    }
    Ok(v)
}

/// The two classical reciprocal-binomial sums with a = b = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ClassicalKind {
    /// Σ H_n² / binom(n+k, k), k ≥ 2
    OneOneZero,
    /// Σ H_n² / (n binom(n+k, k))
    OneOneOne,
}

/// The classical closed forms for [`ClassicalKind`].
pub fn classical_w(k: u32, kind: ClassicalKind) -> Result<f64> {
    match kind {
        ClassicalKind::OneOneZero => {
            check_k(k, 2)?;
            let kf = f64::from(k);
            let km1 = kf - 1.0;
            Ok(kf / km1 * (zeta_int(2) - harmonic_num(u64::from(k - 1), 2) + 2.0 / (km1 * km1)))
        }
        ClassicalKind::OneOneOne => {
            check_k(k, 1)?;
            let mut v = 0.0;
            let mut nested = 0.0;
            for r in 1..=k {
                let rf = f64::from(r);
                let hr = harmonic_num(u64::from(r), 1);
                let inner = 3.0 * zeta_int(3) + y3(rf)? / 3.0 - y2(rf)? / rf - nested
                    + zeta_int(2) * harmonic_num(u64::from(r - 1), 1);
                v += sign(r + 1) * binomial(k, r) * inner;
                nested += hr / (rf * rf);
            }
            Ok(v)
        }
    }
}
