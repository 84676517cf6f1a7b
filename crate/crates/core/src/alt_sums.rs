//! Closed forms for Euler sums with alternating harmonic numbers
//! H̄_n^{(m)} = Σ_{j≤n} (−1)^{j−1} j^{−m}.

use crate::error::{domain, Result};
use crate::harmonic::{alt_harmonic_num, harmonic_num, param_harmonic, shifted_harmonic};
use crate::linear_sums::{at_least, positive};
use crate::specfun::{alt_hurwitz_zeta, alt_zeta, hurwitz_zeta, is_integer};
use std::f64::consts::LN_2;

fn sign(j: u32) -> f64 {
    if j % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn zbar(s: u32) -> f64 {
    alt_zeta(s).expect("order >= 1")
}

/// Σ (−1)^{n−1}/(n^m(n+a)).
pub fn alt_polylog_moment(m: u32, a: f64) -> Result<f64> {
    positive("a", a)?;
    at_least("m", m, 1)?;
    let mut v = 0.0;
    for l in 1..m {
        v += sign(l - 1) * zbar(m + 1 - l) / a.powi(l as i32);
    }
    Ok(v + sign(m - 1) * (LN_2 - alt_hurwitz_zeta(1, a)?) / a.powi(m as i32))
}

/// Σ (−1)^{n−1}/(n(n+a)^s) for a ≥ 0.
fn alt_recip_shift(a: f64, s: u32) -> Result<f64> {
    if a == 0.0 {
        return Ok(zbar(s + 1));
    }
    let mut v = LN_2 / a.powi(s as i32);
    for j in 1..=s {
        v -= alt_hurwitz_zeta(j, a)? / a.powi((s + 1 - j) as i32);
    }
    Ok(v)
}

fn alt_bilinear_parts(a: f64, b: f64) -> Result<(f64, f64, f64, f64)> {
    positive("a", a)?;
    positive("b", b)?;
    if a == b {
        return Err(domain("bilinear sum needs a != b"));
    }
    let rational = (alt_polylog_moment(1, a)? - alt_polylog_moment(1, b)?) / (b - a);
    let log_part = LN_2 * (shifted_harmonic(b, 1)? - shifted_harmonic(a, 1)?) / (b - a);
    let (za, zb) = (alt_hurwitz_zeta(1, a)?, alt_hurwitz_zeta(1, b)?);
    let zeta_part = (hurwitz_zeta(2, a + 1.0)? - hurwitz_zeta(2, b + 1.0)?) / (2.0 * (a - b));
    Ok((rational + log_part + zeta_part, za, zb, 2.0 * (a - b)))
}

/// Σ H̄_n/((n+a)(n+b)), a ≠ b.
pub fn alt_sum_H1_bilinear(a: f64, b: f64) -> Result<f64> {
    let (base, za, zb, den) = alt_bilinear_parts(a, b)?;
    Ok(base + (zb * zb - za * za) / den)
}

/// The alternating bilinear sum with the extra half on one squared term,
/// as it appears in print. Kept for errata reporting.
pub fn alt_sum_H1_bilinear_printed(a: f64, b: f64) -> Result<f64> {
    let (base, za, zb, den) = alt_bilinear_parts(a, b)?;
    Ok(base + (zb * zb - 0.5 * za * za) / den)
}

/// Σ H̄_n/(n+a)^s for a ≥ 0, s ≥ 2.
pub fn alt_sum_H1_power(a: f64, s: u32) -> Result<f64> {
    if !(a >= 0.0) || !a.is_finite() {
        return Err(domain(format!("a must be >= 0, got {a}")));
    }
    at_least("s", s, 2)?;
    let zb = |j: u32| alt_hurwitz_zeta(j, a);
    let mut v = 0.0;
    for j in 1..=s - 2 {
        v += 0.5 * zb(s - j)? * zb(j + 1)?;
    }
    v += -0.5 * f64::from(s) * hurwitz_zeta(s + 1, a + 1.0)? + hurwitz_zeta(s, a + 1.0)? * LN_2;
    v += zb(s)? * zb(1)?;
    Ok(v + alt_recip_shift(a, s)?)
}

fn integer_shift(a: f64) -> Result<u32> {
    if !(a >= 0.0) || !is_integer(a) || a > 1e6 {
        return Err(domain(format!(
            "alternating window sums need an integer a >= 0, got {a}"
        )));
    }
    Ok(a as u32)
}

/// Σ H̄_n^{(m)}/((n+a)(n+a+k)) for integer a ≥ 0.
pub fn alt_sum_Hm_window(a: f64, k: u32, m: u32) -> Result<f64> {
    integer_shift(a)?;
    at_least("k", k, 1)?;
    at_least("m", m, 1)?;
    let km1 = u64::from(k - 1);
    let mut v = if a == 0.0 { zbar(m + 1) } else { alt_polylog_moment(m, a)? };
    v += sign(m - 1) * LN_2 * param_harmonic(km1, m, a)?;
    let mut alt_sum = 0.0;
    let mut nested = 0.0;
    let mut inner = 0.0;
    for i in 1..k {
        let x = f64::from(i) + a;
        let t = sign(i - 1) / x.powi(m as i32);
        inner += sign(i - 1) / x;
        alt_sum += t;
        nested += t * inner;
    }
    v += sign(m - 1) * alt_hurwitz_zeta(1, a)? * alt_sum + sign(m) * nested;
    for j in 1..m {
        v += sign(j - 1) * zbar(m + 1 - j) * param_harmonic(km1, j, a)?;
    }
    Ok(v / f64::from(k))
}

/// Σ_{i=lo}^{hi−1} (−1)^{i−1} H̄_i / i^m.
fn alt_nested(lo: u32, hi: u32, m: u32) -> f64 {
    (lo.max(1)..hi)
        .map(|i| sign(i - 1) * alt_harmonic_num(u64::from(i), 1) / f64::from(i).powi(m as i32))
        .sum()
}

/// Σ H̄_n^{(m)}/(n(n+k)).
pub fn alt_sum_Hm_window_origin(k: u32, m: u32) -> Result<f64> {
    at_least("k", k, 1)?;
    at_least("m", m, 1)?;
    let km1 = u64::from(k - 1);
    let mut v = zbar(m + 1);
    for j in 1..m {
        v += sign(j - 1) * zbar(m + 1 - j) * harmonic_num(km1, j);
    }
    v += sign(m - 1) * LN_2 * (harmonic_num(km1, m) + alt_harmonic_num(km1, m));
    v += sign(m) * alt_nested(1, k, m);
    Ok(v / f64::from(k))
}

/// Σ H̄_n^{(m)}/((n+r)(n+k)) for integers r, k ≥ 1, r ≠ k.
pub fn alt_sum_Hm_window_between(r: u32, k: u32, m: u32) -> Result<f64> {
    at_least("r", r, 1)?;
    at_least("k", k, 1)?;
    at_least("m", m, 1)?;
    if r == k {
        return Err(domain("window sum needs r != k"));
    }
    let (r, k) = (r.min(k), r.max(k));
    let (k1, r1) = (u64::from(k - 1), u64::from(r - 1));
    let mut v = 0.0;
    for j in 1..m {
        v += sign(j - 1) * zbar(m + 1 - j) * (harmonic_num(k1, j) - harmonic_num(r1, j));
    }
    let diff = harmonic_num(k1, m) - harmonic_num(r1, m) + alt_harmonic_num(k1, m) - alt_harmonic_num(r1, m);
    v += sign(m - 1) * LN_2 * diff;
    v += sign(m) * alt_nested(r, k, m);
    Ok(v / f64::from(k - r))
}
