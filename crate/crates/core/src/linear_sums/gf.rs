//! Generating-function and integral identities.
//!
//! [`gf_rhs`] evaluates the right-hand side of each identity. The left-hand
//! sides (direct power series or quadrature) live in
//! [`crate::oracle::gf_lhs`]; [`gf_eval`] compares the two.

use crate::error::{domain, Result};
use crate::oracle::{gf_lhs, power_series_sum, SeriesConfig};
use crate::specfun::{h_func, hurwitz_zeta, param_polylog, polylog, zeta_int, ShiftParam};
use serde::{Deserialize, Serialize};

/// Which identity to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GfKind {
    /// Σ H_n H_n^{(m)} x^n
    HnHm,
    /// Σ H_n H_n^{(2)} x^n
    HnH2,
    /// Σ (H_n² − H_n^{(2)}) x^n = ln²(1−x)/(1−x)
    SqDiff,
    /// Σ y^n/n^m Σ_{k≤n} x^k/k^p + (x ↔ y, m ↔ p) = Li_p(x)Li_m(y) + Li_{p+m}(xy)
    NestedReflect,
    /// Σ x^n T_n(x)/(n+a)^s with T_n(x) = Σ_{j<n} x^{n−j}/j, s ≥ 2
    NestedDiagonal,
    /// Σ [y^n T_n(x) + x^n T_n(y)]/(n+a)^s
    NestedPair,
    /// ∫₀^x H_m(t, a) t^{n+b−1} dt
    MomentIdent,
    /// ∫₀^x Li_m(t) t^{n+b−1} dt
    MomentIdentZero,
}

/// Parameters of a [`GfKind`]; each kind reads only the fields it needs.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct GfParams {
    pub x: f64,
    pub y: f64,
    pub a: f64,
    pub b: f64,
    pub m: u32,
    pub s: u32,
    pub n: u32,
    pub p: u32,
}

/// Result of [`gf_eval`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum GfValue {
    /// Closed-form value (for kinds with an elementary right side).
    Value(f64),
    /// |LHS − RHS|.
    Residual(f64),
}

fn open_unit(name: &str, v: f64) -> Result<()> {
    if !(v > -1.0 && v < 1.0) {
        return Err(domain(format!("{name} must lie in (-1, 1), got {v}")));
    }
    Ok(())
}

fn order(name: &str, v: u32, min: u32) -> Result<()> {
    if v < min {
        return Err(domain(format!("{name} must be >= {min}, got {v}")));
    }
    Ok(())
}

/// Checks the preconditions of `kind`.
pub fn validate(kind: GfKind, p: &GfParams) -> Result<()> {
    match kind {
        GfKind::HnHm => {
            open_unit("x", p.x)?;
            order("m", p.m, 2)
        }
        GfKind::HnH2 | GfKind::SqDiff => open_unit("x", p.x),
        GfKind::NestedReflect => {
            open_unit("x", p.x)?;
            open_unit("y", p.y)?;
            order("m", p.m, 1)?;
            order("p", p.p, 1)
        }
        GfKind::NestedDiagonal | GfKind::NestedPair => {
            open_unit("x", p.x)?;
            if kind == GfKind::NestedPair {
                open_unit("y", p.y)?;
            }
            ShiftParam::new(p.a)?;
            if !(p.a > -1.0) {
                return Err(domain(format!("a must be > -1, got {}", p.a)));
            }
            order("s", p.s, if kind == GfKind::NestedDiagonal { 2 } else { 1 })
        }
        GfKind::MomentIdent | GfKind::MomentIdentZero => {
            if !(p.x > 0.0 && p.x < 1.0) {
                return Err(domain(format!("x must lie in (0, 1), got {}", p.x)));
            }
            if !(p.m >= 1 && p.m <= 6) {
                return Err(domain(format!("m must be in 1..=6, got {}", p.m)));
            }
            order("n", p.n, 1)?;
            if !(f64::from(p.n) + p.b > 0.0) {
                return Err(domain("n + b must be > 0"));
            }
            ShiftParam::new(p.b)?;
            if kind == GfKind::MomentIdent {
                if !(p.a > -1.0) || !p.a.is_finite() {
                    return Err(domain(format!("a must be > -1, got {}", p.a)));
                }
                ShiftParam::new(p.a)?;
                ShiftParam::new(p.a + p.b)?;
            }
            Ok(())
        }
    }
}

fn li(s: u32, x: f64) -> Result<f64> {
    polylog(s, x)
}

/// Σ_{n≥1} H_n x^n / n^m by direct summation.
fn harmonic_polylog(m: u32, x: f64) -> Result<f64> {
    let mut h = 0.0;
    let mut xn = 1.0;
    let terms = (1u64..).map(|n| {
        let nf = n as f64;
        h += 1.0 / nf;
        xn *= x;
        h * xn / nf.powi(m as i32)
    });
    Ok(power_series_sum(terms, x.abs(), &series_config())?.value)
}

fn series_config() -> SeriesConfig {
    SeriesConfig { target_tol: 1e-12, ..SeriesConfig::default() }
}

/// Right-hand side of the identity.
pub fn gf_rhs(kind: GfKind, p: &GfParams) -> Result<f64> {
    validate(kind, p)?;
    let (x, y, a) = (p.x, p.y, p.a);
    match kind {
        GfKind::SqDiff => {
            let l = (-x).ln_1p();
            Ok(l * l / (1.0 - x))
        }
        GfKind::HnH2 => {
            let v = 2.0 * li(3, x)? - (-x).ln_1p() * li(2, x)? - harmonic_polylog(2, x)?;
            Ok(v / (1.0 - x))
        }
        GfKind::HnHm => {
            let m = p.m;
            // Σ_k x^k/k · ζ(m, k)
            let mut xk = 1.0;
            let inner = (1u64..).map(|k| {
                xk *= x;
                let kf = k as f64;
                xk / kf * hurwitz_zeta(m, kf).unwrap_or(f64::NAN)
            });
            let inner = power_series_sum(inner, x.abs(), &series_config())?.value;
            let v = harmonic_polylog(m, x)? - inner - zeta_int(m) * (-x).ln_1p();
            Ok(v / (1.0 - x))
        }
        GfKind::NestedReflect => Ok(li(p.p, x)? * li(p.m, y)? + li(p.p + p.m, x * y)?),
        GfKind::NestedDiagonal => {
            let s = p.s;
            let l = |j: u32, z: f64| param_polylog(j, a, z);
            let mut v = 0.5 * f64::from(s) * l(s + 1, x * x)? + l(s, x * x)? * li(1, x)? - l(s, x)? * l(1, x)?;
            for j in 2..s {
                v -= 0.5 * l(j, x)? * l(s + 1 - j, x)?;
            }
            Ok(v)
        }
        GfKind::NestedPair => {
            let s = p.s;
            let l = |j: u32, z: f64| param_polylog(j, a, z);
            let mut v = f64::from(s) * l(s + 1, x * y)?;
            for j in 1..=s {
                v -= l(j, x)? * l(s + 1 - j, y)?;
            }
            Ok(v + l(s, x * y)? * (li(1, x)? + li(1, y)?))
        }
        GfKind::MomentIdent => {
            let (m, b) = (p.m, p.b);
            let nb = f64::from(p.n) + b;
            let xnb = x.powf(nb);
            let mut v = 0.0;
            for k in 1..m {
                let sg = if k % 2 == 1 { 1.0 } else { -1.0 };
                v += sg * xnb / nb.powi(k as i32) * h_func(m + 1 - k, a, x)?;
            }
            let mut brace = xnb * h_func(1, a, x)? - h_func(1, a + b, x)?;
            for k in 1..=p.n {
                let e = f64::from(k) + a + b;
                brace += x.powf(e) / e;
            }
            let sg = if m % 2 == 1 { 1.0 } else { -1.0 };
            Ok(v + sg / nb.powi(m as i32) * brace)
        }
        GfKind::MomentIdentZero => {
            let (m, b) = (p.m, p.b);
            let nb = f64::from(p.n) + b;
            let xnb = x.powf(nb);
            let mut v = 0.0;
            for i in 1..m {
                let sg = if i % 2 == 1 { 1.0 } else { -1.0 };
                v += sg * xnb / nb.powi(i as i32) * li(m + 1 - i, x)?;
            }
            let mut brace = xnb * li(1, x)? - h_func(1, b, x)?;
            for j in 1..=p.n {
                let e = f64::from(j) + b;
                brace += x.powf(e) / e;
            }
            let sg = if m % 2 == 1 { 1.0 } else { -1.0 };
            Ok(v + sg / nb.powi(m as i32) * brace)
        }
    }
}

/// The closed value for [`GfKind::SqDiff`], otherwise |LHS − RHS| with the
/// left side from the oracle engines.
pub fn gf_eval(kind: GfKind, p: &GfParams) -> Result<GfValue> {
    let rhs = gf_rhs(kind, p)?;
    if kind == GfKind::SqDiff {
        return Ok(GfValue::Value(rhs));
    }
    let lhs = gf_lhs(kind, p, &series_config())?;
    Ok(GfValue::Residual((lhs.value - rhs).abs()))
}
