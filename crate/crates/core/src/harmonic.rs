//! Harmonic numbers (classical, alternating, parametric, shifted), the
//! generalized binomial coefficient, unsigned Stirling numbers of the first
//! kind and the log-power moments `Y_m(a)`.

use crate::error::{domain, EulerError, Result};
use crate::specfun::{self, is_integer, is_nonpos_integer, EULER_GAMMA};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::sync::OnceLock;

/// Largest `n` served by [`stirling1`].
pub const STIRLING_MAX_N: usize = 64;

/// Largest order accepted by [`y_moment`].
pub const Y_MOMENT_MAX_M: u32 = 8;

/// Order `s` of a harmonic number `H_n^{(s)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarmonicOrder(u32);

impl HarmonicOrder {
    pub fn new(s: u32) -> Result<Self> {
        if s == 0 {
            return Err(domain("harmonic order must be >= 1"));
        }
        Ok(Self(s))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// H_n^{(s)} = Σ_{j=1}^n j^{-s}.
pub fn harmonic_num(n: u64, s: u32) -> f64 {
    let si = s as i32;
    (1..=n).rev().map(|j| (j as f64).powi(-si)).sum()
}

/// H̄_n^{(s)} = Σ_{j=1}^n (−1)^{j−1} j^{-s}.
pub fn alt_harmonic_num(n: u64, s: u32) -> f64 {
    let si = s as i32;
    (1..=n)
        .rev()
        .map(|j| {
            let t = (j as f64).powi(-si);
            if j % 2 == 1 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// H_n^{(s)}(a) = Σ_{j=1}^n (j+a)^{-s}.
pub fn param_harmonic(n: u64, s: u32, a: f64) -> Result<f64> {
    if !a.is_finite() {
        return Err(domain(format!("shift {a} is not finite")));
    }
    if is_integer(a) && a < 0.0 && (-a) as u64 <= n {
        return Err(EulerError::Pole(format!("j + a = 0 at j = {}", -a)));
    }
    let si = s as i32;
    Ok((1..=n).rev().map(|j| (j as f64 + a).powi(-si)).sum())
}

/// Shifted harmonic number H_α^{(m)} for real α > −1.
pub fn shifted_harmonic(alpha: f64, m: u32) -> Result<f64> {
    if !(alpha > -1.0) || !alpha.is_finite() {
        return Err(domain(format!("shifted_harmonic needs alpha > -1, got {alpha}")));
    }
    match m {
        0 => Err(domain("shifted_harmonic order must be >= 1")),
        1 => Ok(specfun::digamma(alpha + 1.0)? + EULER_GAMMA),
        _ => Ok(specfun::zeta_int(m) - specfun::hurwitz_unchecked(m, alpha + 1.0)),
    }
}

/// Generalized binomial coefficient Γ(a+1) / (Γ(b+1) Γ(a−b+1)).
pub fn gen_binomial(a: f64, b: f64) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() {
        return Err(domain("gen_binomial arguments must be finite"));
    }
    if is_integer(a) && a >= 0.0 && is_integer(b) && (b > a || b < 0.0) {
        return Ok(0.0);
    }
    if is_integer(b) && b >= 0.0 {
        let n = b as u64;
        let mut p = 1.0;
        for i in 0..n {
            p *= (a - i as f64) / (i as f64 + 1.0);
        }
        return Ok(p);
    }
    if is_nonpos_integer(a + 1.0) {
        return Err(EulerError::Pole(format!("Γ(a+1) at a = {a}")));
    }
    if is_nonpos_integer(b + 1.0) || is_nonpos_integer(a - b + 1.0) {
        return Ok(0.0);
    }
    let num = specfun::gamma_fn(a + 1.0)?;
    let den = specfun::gamma_fn(b + 1.0)? * specfun::gamma_fn(a - b + 1.0)?;
    Ok(num / den)
}

/// Row `n` of the unsigned Stirling numbers of the first kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingRow {
    pub n: usize,
    pub values: Vec<BigUint>,
}

fn stirling_table() -> &'static [StirlingRow] {
    static TABLE: OnceLock<Vec<StirlingRow>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<StirlingRow> = Vec::with_capacity(STIRLING_MAX_N + 1);
        rows.push(StirlingRow { n: 0, values: vec![BigUint::one()] });
        for n in 0..STIRLING_MAX_N {
            let prev = &rows[n].values;
            let mut next = vec![BigUint::zero(); n + 2];
            for k in 1..=n + 1 {
                let mut v = prev[k - 1].clone();
                if k <= n {
                    v += &prev[k] * BigUint::from(n);
                }
                next[k] = v;
            }
            rows.push(StirlingRow { n: n + 1, values: next });
        }
        rows
    })
}

/// Full row `n` of unsigned Stirling numbers, `n ≤ 64`.
pub fn stirling_row(n: usize) -> Result<&'static StirlingRow> {
    stirling_table()
        .get(n)
        .ok_or_else(|| domain(format!("stirling row {n} beyond {STIRLING_MAX_N}")))
}

/// Unsigned Stirling number of the first kind s(n, k), `0 ≤ k ≤ n ≤ 64`.
pub fn stirling1(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Err(domain(format!("stirling1 needs k <= n, got k={k}, n={n}")));
    }
    Ok(stirling_row(n)?.values[k].clone())
}

/// Y_m(a) from the recurrence Y_m = (m−1)! Σ_{i<m} Y_i H_a^{(m−i)} / i!.
pub fn y_moment(m: u32, a: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain(format!("y_moment needs a > 0, got {a}")));
    }
    if m > Y_MOMENT_MAX_M {
        return Err(domain(format!("y_moment supports m <= {Y_MOMENT_MAX_M}, got {m}")));
    }
    let mut h = vec![0.0; m as usize + 1];
    for (j, slot) in h.iter_mut().enumerate().skip(1) {
        *slot = shifted_harmonic(a, j as u32)?;
    }
    Ok(y_moments_from(&h)[m as usize])
}

/// Y_0..Y_m given h[j] = H_a^{(j)} for j = 1..=m.
pub(crate) fn y_moments_from(h: &[f64]) -> Vec<f64> {
    let m = h.len() - 1;
    let mut y = vec![1.0; m + 1];
    let mut fact = vec![1.0; m + 1];
    for i in 1..=m {
        fact[i] = fact[i - 1] * i as f64;
    }
    for mm in 1..=m {
        let s: f64 = (0..mm).map(|i| y[i] * h[mm - i] / fact[i]).sum();
        y[mm] = fact[mm - 1] * s;
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_and_alternating() {
        assert_eq!(harmonic_num(0, 1), 0.0);
        assert!((harmonic_num(4, 1) - 25.0 / 12.0).abs() < 1e-15);
        assert!((harmonic_num(3, 2) - 49.0 / 36.0).abs() < 1e-15);
        assert_eq!(alt_harmonic_num(1, 1), 1.0);
        assert_eq!(alt_harmonic_num(2, 1), 0.5);
        assert!((alt_harmonic_num(4, 2) - (1.0 - 0.25 + 1.0 / 9.0 - 1.0 / 16.0)).abs() < 1e-15);
    }

    #[test]
    fn parametric() {
        assert!((param_harmonic(3, 1, 0.0).unwrap() - 11.0 / 6.0).abs() < 1e-15);
        assert!((param_harmonic(2, 2, 0.5).unwrap() - (1.0 / 2.25 + 1.0 / 6.25)).abs() < 1e-15);
        assert_eq!(param_harmonic(0, 1, 7.0).unwrap(), 0.0);
        assert!(matches!(param_harmonic(3, 1, -2.0), Err(EulerError::Pole(_))));
        assert!(param_harmonic(1, 1, -2.0).is_ok());
    }

    #[test]
    fn shifted() {
        assert!((shifted_harmonic(3.0, 1).unwrap() - 11.0 / 6.0).abs() < 1e-14);
        let ln2 = std::f64::consts::LN_2;
        assert!((shifted_harmonic(0.5, 1).unwrap() - (2.0 - 2.0 * ln2)).abs() < 1e-14);
        let pi2 = std::f64::consts::PI.powi(2);
        assert!((shifted_harmonic(0.5, 2).unwrap() - (4.0 - pi2 / 3.0)).abs() < 1e-14);
        assert!(shifted_harmonic(-1.0, 1).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(gen_binomial(7.3, 0.0).unwrap(), 1.0);
        assert_eq!(gen_binomial(5.0, 2.0).unwrap(), 10.0);
        assert!((gen_binomial(2.5, 2.0).unwrap() - 1.875).abs() < 1e-15);
        assert!((gen_binomial(2.5, 1.5).unwrap() - 2.5).abs() < 1e-13);
        assert!((gen_binomial(-0.5, 3.0).unwrap() + 0.3125).abs() < 1e-15);
        assert_eq!(gen_binomial(3.0, 5.0).unwrap(), 0.0);
        assert_eq!(gen_binomial(3.0, -1.0).unwrap(), 0.0);
        assert!(matches!(gen_binomial(-2.0, 0.5), Err(EulerError::Pole(_))));
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling1(3, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(stirling1(4, 2).unwrap(), BigUint::from(11u32));
        assert_eq!(stirling1(5, 5).unwrap(), BigUint::one());
        assert_eq!(stirling1(0, 0).unwrap(), BigUint::one());
        assert!(stirling1(3, 4).is_err());
        assert!(stirling1(65, 1).is_err());
        // s(64, 1) = 63! exceeds u64.
        let f63: BigUint = (1u32..=63).map(BigUint::from).product();
        assert_eq!(stirling1(64, 1).unwrap(), f63);
    }

    #[test]
    fn y_moment_examples() {
        assert_eq!(y_moment(0, 2.7).unwrap(), 1.0);
        assert!((y_moment(1, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((y_moment(2, 1.0).unwrap() - 2.0).abs() < 1e-14);
        assert!((y_moment(3, 1.0).unwrap() - 6.0).abs() < 1e-13);
        assert!(y_moment(2, 0.0).is_err());
        assert!(y_moment(9, 1.0).is_err());
    }
}
