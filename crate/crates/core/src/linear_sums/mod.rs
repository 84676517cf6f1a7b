//! Closed forms for non-alternating Euler sums: power and window
//! denominators, quadratic and cubic numerators.
//!
//! Window sums have the shape Σ_{n≥1} f(n) / ((n+a)(n+a+k)).

pub mod gf;

use crate::error::{domain, Result};
use crate::harmonic::{harmonic_num, param_harmonic, shifted_harmonic, y_moments_from};
use crate::specfun::{hurwitz_zeta, is_integer, zeta_int};

pub use gf::{gf_eval, gf_rhs, GfKind, GfParams, GfValue};

/// Shift and window parameters of a window sum.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct WindowSumParams {
    pub a: f64,
    pub k: u32,
    pub m: u32,
}

impl WindowSumParams {
    pub fn new(a: f64, k: u32, m: u32) -> Result<Self> {
        positive("a", a)?;
        at_least("k", k, 1)?;
        at_least("m", m, 1)?;
        Ok(Self { a, k, m })
    }
}

pub(crate) fn positive(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0) || !v.is_finite() {
        return Err(domain(format!("{name} must be > 0, got {v}")));
    }
    Ok(())
}

pub(crate) fn at_least(name: &str, v: u32, min: u32) -> Result<()> {
    if v < min {
        return Err(domain(format!("{name} must be >= {min}, got {v}")));
    }
    Ok(())
}

fn sign(j: u32) -> f64 {
    if j % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Y_2(α) = H_α² + H_α^{(2)}.
pub(crate) fn y2(alpha: f64) -> Result<f64> {
    let h = [0.0, shifted_harmonic(alpha, 1)?, shifted_harmonic(alpha, 2)?];
    Ok(y_moments_from(&h)[2])
}

/// Y_3(α) = H_α³ + 3H_α H_α^{(2)} + 2H_α^{(3)}.
pub(crate) fn y3(alpha: f64) -> Result<f64> {
    let h = [
        0.0,
        shifted_harmonic(alpha, 1)?,
        shifted_harmonic(alpha, 2)?,
        shifted_harmonic(alpha, 3)?,
    ];
    Ok(y_moments_from(&h)[3])
}

/// Σ_{i=1}^{k−1} H_i(a)/(i+a)^m.
fn nested_window(a: f64, k: u32, m: u32) -> f64 {
    let mut h = 0.0;
    let mut s = 0.0;
    for i in 1..k {
        let x = f64::from(i) + a;
        h += 1.0 / x;
        s += h / x.powi(m as i32);
    }
    s
}

/// Σ 1/(n(n+a)^s) = H_a/a^s − Σ_{j=2}^s ζ(j,a+1)/a^{s+1−j}.
pub fn sum_recip_shift(a: f64, s: u32) -> Result<f64> {
    positive("a", a)?;
    at_least("s", s, 1)?;
    let mut v = shifted_harmonic(a, 1)? / a.powi(s as i32);
    for j in 2..=s {
        v -= hurwitz_zeta(j, a + 1.0)? / a.powi((s + 1 - j) as i32);
    }
    Ok(v)
}

/// Σ H_n/(n+a)^s.
pub fn sum_H1_power(a: f64, s: u32) -> Result<f64> {
    positive("a", a)?;
    at_least("s", s, 2)?;
    let z = |j: u32| hurwitz_zeta(j, a + 1.0);
    let mut v = 0.5 * f64::from(s) * z(s + 1)?;
    for j in 1..=s.saturating_sub(2) {
        v -= 0.5 * z(s - j)? * z(j + 1)?;
    }
    v += z(s)? * shifted_harmonic(a, 1)?;
    Ok(v + sum_recip_shift(a, s)?)
}

/// Σ 1/(n^m(n+a)) = ∫₀¹ x^{a−1} Li_m(x) dx.
pub fn polylog_moment(m: u32, a: f64) -> Result<f64> {
    positive("a", a)?;
    at_least("m", m, 1)?;
    let mut v = 0.0;
    for l in 1..m {
        v += sign(l - 1) * zeta_int(m + 1 - l) / a.powi(l as i32);
    }
    Ok(v + sign(m - 1) * shifted_harmonic(a, 1)? / a.powi(m as i32))
}

fn bilinear_parts(a: f64, b: f64) -> Result<(f64, f64, f64)> {
    positive("a", a)?;
    positive("b", b)?;
    if a == b {
        return Err(domain("bilinear sum needs a != b"));
    }
    let (ha, hb) = (shifted_harmonic(a, 1)?, shifted_harmonic(b, 1)?);
    let d = b - a;
    let first = (ha / a - hb / b) / d;
    let zeta_part = (hurwitz_zeta(2, a + 1.0)? - hurwitz_zeta(2, b + 1.0)?) / (2.0 * d);
    Ok((first, (hb * hb - ha * ha) / (2.0 * d), zeta_part))
}

/// Σ H_n/((n+a)(n+b)), a ≠ b.
pub fn sum_H1_bilinear(a: f64, b: f64) -> Result<f64> {
    let (first, squares, zeta_part) = bilinear_parts(a, b)?;
    Ok(first + squares + zeta_part)
}

/// The bilinear sum with the sign of the squared-harmonic term flipped,
/// as it appears in print. Kept for errata reporting.
pub fn sum_H1_bilinear_printed(a: f64, b: f64) -> Result<f64> {
    let (first, squares, zeta_part) = bilinear_parts(a, b)?;
    Ok(first - squares + zeta_part)
}

/// Σ H_n^{(m)}/((n+a)(n+a+k)).
pub fn sum_Hm_window(a: f64, k: u32, m: u32) -> Result<f64> {
    WindowSumParams::new(a, k, m)?;
    let hk = |j: u32| param_harmonic(u64::from(k - 1), j, a);
    let mut v = polylog_moment(m, a)?;
    for j in 1..m {
        v += sign(j - 1) * zeta_int(m + 1 - j) * hk(j)?;
    }
    v += sign(m - 1) * (shifted_harmonic(a, 1)? * hk(m)? + nested_window(a, k, m));
    Ok(v / f64::from(k))
}

fn nested_integer(k: u32, m: u32) -> f64 {
    let mut h = 0.0;
    let mut s = 0.0;
    for i in 1..k {
        let x = f64::from(i);
        h += 1.0 / x;
        s += h / x.powi(m as i32);
    }
    s
}

/// Σ H_n^{(m)}/(n(n+k)) for integer k ≥ 1.
pub fn sum_Hm_window_origin(k: u32, m: u32) -> Result<f64> {
    at_least("k", k, 1)?;
    at_least("m", m, 1)?;
    let mut v = zeta_int(m + 1);
    for j in 1..m {
        v += sign(j - 1) * zeta_int(m + 1 - j) * harmonic_num(u64::from(k - 1), j);
    }
    v += sign(m - 1) * nested_integer(k, m);
    Ok(v / f64::from(k))
}

/// Σ H_n^{(m)}/((n+r)(n+k)) for integers r, k ≥ 1, r ≠ k.
pub fn sum_Hm_window_between(r: u32, k: u32, m: u32) -> Result<f64> {
    at_least("r", r, 1)?;
    at_least("k", k, 1)?;
    at_least("m", m, 1)?;
    if r == k {
        return Err(domain("window sum needs r != k"));
    }
    let (r, k) = (r.min(k), r.max(k));
    let mut v = 0.0;
    for j in 1..m {
        let d = harmonic_num(u64::from(k - 1), j) - harmonic_num(u64::from(r - 1), j);
        v += sign(j - 1) * zeta_int(m + 1 - j) * d;
    }
    v += sign(m - 1) * (nested_integer(k, m) - nested_integer(r, m));
    Ok(v / f64::from(k - r))
}

/// The m = 1 window sum read from the printed specialization with its
/// superscript taken as 1. Kept for errata reporting.
pub fn sum_H1_window_printed(a: f64, k: u32) -> Result<f64> {
    WindowSumParams::new(a, k, 1)?;
    let kk = u64::from(k);
    let hk = param_harmonic(kk, 1, a)?;
    let hk2 = param_harmonic(kk, 2, a)?;
    let v = shifted_harmonic(a, 1)? * param_harmonic(kk, 1, a - 1.0)? - hk / (f64::from(k) + a)
        + 0.5 * (hk * hk + hk2);
    Ok(v / f64::from(k))
}

/// Σ H_n^{(2)}/((n+a)(n+a+k)) in the form with H_k(a−1) factors.
pub fn sum_H2_window(a: f64, k: u32) -> Result<f64> {
    WindowSumParams::new(a, k, 2)?;
    let kk = u64::from(k);
    let v = zeta_int(2) * param_harmonic(kk, 1, a - 1.0)?
        - shifted_harmonic(a, 1)? * param_harmonic(kk, 2, a - 1.0)?
        - nested_window(a, k, 2);
    Ok(v / f64::from(k))
}

/// Σ (H_n² − H_n^{(2)})/((n+a)(n+a+k)) = (1/k) Σ_{j=1}^k Y_2(a+j−1)/(a+j−1).
pub fn sum_sq_diff_window(a: f64, k: u32) -> Result<f64> {
    WindowSumParams::new(a, k, 1)?;
    let mut v = 0.0;
    for j in 0..k {
        let x = a + f64::from(j);
        v += y2(x)? / x;
    }
    Ok(v / f64::from(k))
}

/// Σ H_n²/((n+a)(n+a+k)).
pub fn sum_H1sq_window(a: f64, k: u32) -> Result<f64> {
    Ok(sum_H2_window(a, k)? + sum_sq_diff_window(a, k)?)
}

/// Σ (H_n³ − 3H_n H_n^{(2)} + 2H_n^{(3)})/((n+a)(n+a+k)) = (1/k) Σ_j Y_3(a+j−1)/(a+j−1).
pub fn sum_cubic_stirling_window(a: f64, k: u32) -> Result<f64> {
    WindowSumParams::new(a, k, 1)?;
    let mut v = 0.0;
    for j in 0..k {
        let x = a + f64::from(j);
        v += y3(x)? / x;
    }
    Ok(v / f64::from(k))
}

/// Σ_{n≥1} H_{n+c}/n² for real c ≥ 0.
///
/// Sums the correction (H_{n+c} − H_n)/n² on top of Σ H_n/n² = 2ζ(3), with
/// an asymptotic tail from H_{x+c} − H_x ~ c/x − c(c+1)/(2x²) + c(c+1)(c+½)/(3x³).
pub fn sum_shiftedH_over_nsq(c: f64) -> Result<f64> {
    if !(c >= 0.0) || !c.is_finite() {
        return Err(domain(format!("sum_shiftedH_over_nsq needs c >= 0, got {c}")));
    }
    if c == 0.0 {
        return Ok(2.0 * zeta_int(3));
    }
    const N: u64 = 20_000;
    if is_integer(c) && c <= 64.0 {
        // H_{n+c} − H_n = Σ_{j=1}^c 1/(n+j); each piece is Σ 1/(n²(n+j)).
        let mut v = 2.0 * zeta_int(3);
        for j in 1..=c as u32 {
            v += polylog_moment(2, f64::from(j))?;
        }
        return Ok(v);
    }
    let mut d = shifted_harmonic(c, 1)?;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for n in 1..=N {
        let x = n as f64;
        d += 1.0 / (x + c) - 1.0 / x;
        let t = d / (x * x);
        let y = t - comp;
        let z = sum + y;
        comp = (z - sum) - y;
        sum = z;
    }
    let q = N as f64 + 1.0;
    let tail = c * hurwitz_zeta(3, q)? - 0.5 * c * (c + 1.0) * hurwitz_zeta(4, q)?
        + c * (c + 1.0) * (c + 0.5) / 3.0 * hurwitz_zeta(5, q)?;
    Ok(2.0 * zeta_int(3) + sum + tail)
}

/// Σ H_n/(n²(n+a)).
pub fn sum_H1_over_nsq_shift(a: f64) -> Result<f64> {
    positive("a", a)?;
    let ha = shifted_harmonic(a, 1)?;
    Ok(2.0 * zeta_int(3) / a - zeta_int(2) / (a * a) + ha / a.powi(3) - y2(a)? / (2.0 * a * a))
}

/// Σ H_n H_n^{(2)}/((n+a)(n+a+k)).
pub fn sum_H1H2_window(a: f64, k: u32) -> Result<f64> {
    WindowSumParams::new(a, k, 1)?;
    let mut v = 0.0;
    for i in 0..k {
        let x = a + f64::from(i);
        v += sum_shiftedH_over_nsq(x)? / x - y2(x)? / (2.0 * x * x) + shifted_harmonic(x, 1)? / x.powi(3);
    }
    v -= zeta_int(2) * param_harmonic(u64::from(k), 2, a - 1.0)?;
    Ok(v / f64::from(k))
}

/// Σ H_n³/((n+a)(n+a+k)).
pub fn sum_H1cubed_window(a: f64, k: u32) -> Result<f64> {
    WindowSumParams::new(a, k, 1)?;
    let km1 = u64::from(k - 1);
    let ha = shifted_harmonic(a, 1)?;
    let (z2, z3) = (zeta_int(2), zeta_int(3));
    let mut v = 0.0;
    for i in 0..k {
        let x = a + f64::from(i);
        v += y3(x)? / x + 3.0 * sum_shiftedH_over_nsq(x)? / x - 1.5 * y2(x)? / (x * x);
        if i >= 1 {
            v += 3.0 * shifted_harmonic(x, 1)? / x.powi(3);
        }
    }
    v -= z2 * param_harmonic(km1, 2, a)?;
    v -= 2.0 * nested_window(a, k, 3);
    v -= 2.0 * z3 * param_harmonic(km1, 1, a)?;
    v -= 2.0 * ha * param_harmonic(km1, 3, a)?;
    v += -2.0 * z3 / a - z2 / (a * a) + ha / a.powi(3);
    Ok(v / f64::from(k))
}
