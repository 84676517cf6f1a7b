//! The identity catalog: each entry pairs a closed form with an independent
//! oracle for the same quantity.

use super::quadrature::{quadrature, Integrand};
use super::series::{EulerSeries, HVar};
use super::{gf_lhs, EvalResult, SeriesConfig, Variant};
use crate::alt_sums::*;
use crate::error::{domain, Result};
use crate::harmonic::y_moment;
use crate::linear_sums::*;
use crate::wsums::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Named numeric parameters of a case.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(pub BTreeMap<String, f64>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, v: f64) -> Self {
        self.0.insert(name.to_string(), v);
        self
    }

    pub fn set(&mut self, name: &str, v: f64) {
        self.0.insert(name.to_string(), v);
    }

    pub fn get_real(&self, name: &str) -> Result<f64> {
        self.0
            .get(name)
            .copied()
            .ok_or_else(|| domain(format!("missing parameter {name}")))
    }

    /// A nonnegative integer parameter.
    pub fn get_int(&self, name: &str) -> Result<u32> {
        let v = self.get_real(name)?;
        if !(v >= 0.0) || v.fract() != 0.0 || v > f64::from(u32::MAX) {
            return Err(domain(format!("parameter {name} must be a nonnegative integer, got {v}")));
        }
        Ok(v as u32)
    }
}

impl fmt::Display for Params {
    /// `a=1;k=2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.0 {
            if !first {
                f.write_str(";")?;
            }
            first = false;
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Static description of a catalog identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityDef {
    pub id: &'static str,
    pub summary: &'static str,
    pub params: &'static [&'static str],
    /// A distinct as-printed closed form exists.
    pub has_printed: bool,
    /// Tolerances for this identity are widened tenfold.
    pub cubic: bool,
}

const fn def(id: &'static str, summary: &'static str, params: &'static [&'static str]) -> IdentityDef {
    IdentityDef { id, summary, params, has_printed: false, cubic: false }
}

const fn printed(mut d: IdentityDef) -> IdentityDef {
    d.has_printed = true;
    d
}

const fn cubic(mut d: IdentityDef) -> IdentityDef {
    d.cubic = true;
    d
}

static DEFS: &[IdentityDef] = &[
    def("eq1.19", "∫₀^x H_m(t,a) t^{n+b−1} dt", &["x", "a", "b", "m", "n"]),
    def("eq1.23", "∫₀^x Li_m(t) t^{n+b−1} dt", &["x", "b", "m", "n"]),
    def("eq1.24", "Σ [y^n T_n(x) + x^n T_n(y)]/(n+a)^s", &["x", "y", "a", "s"]),
    def("eq1.25", "Σ x^n T_n(x)/(n+a)^s, s ≥ 2", &["x", "a", "s"]),
    def("eq1.27", "Σ H_n/(n+a)^s", &["a", "s"]),
    def("eq1.28", "Σ 1/(n(n+a)^s)", &["a", "s"]),
    def("eq1.29", "Σ H_n H_n^{(2)} x^n", &["x"]),
    def("eq1.30", "Σ H_n H_n^{(m)} x^n", &["x", "m"]),
    def("eq1.31", "Σ y^n/n^m Σ_{k≤n} x^k/k^p + (x↔y, m↔p)", &["x", "y", "m", "p"]),
    def("eq2.2", "∫₀¹ x^{a−1} ln^m(1−x) dx = (−1)^m Y_m(a)/a", &["a", "m"]),
    printed(def("eq2.9", "Σ H_n/((n+a)(n+b))", &["a", "b"])),
    def("eq2.13", "Σ H_n^{(m)}/((n+a)(n+a+k))", &["a", "k", "m"]),
    def("eq2.14", "Σ 1/(n^m(n+a))", &["a", "m"]),
    def("eq2.18", "Σ H_n^{(m)}/(n(n+k))", &["k", "m"]),
    def("eq2.19", "Σ H_n^{(m)}/((n+r)(n+k))", &["r", "k", "m"]),
    printed(def("eq2.20", "Σ H_n/((n+a)(n+a+k))", &["a", "k"])),
    def("eq2.21", "Σ H_n^{(2)}/((n+a)(n+a+k))", &["a", "k"]),
    def("eq2.22", "Σ H_n²/((n+a)(n+a+k))", &["a", "k"]),
    def("eq2.25", "Σ (H_n² − H_n^{(2)}) x^n", &["x"]),
    def("eq2.27", "Σ (H_n² − H_n^{(2)})/((n+a)(n+a+k))", &["a", "k"]),
    def("eq2.28", "Σ H_n H_n^{(2)}/((n+a)(n+a+k))", &["a", "k"]),
    cubic(def("eq2.29", "Σ H_n³/((n+a)(n+a+k))", &["a", "k"])),
    def("eq2.34", "Σ H_n/(n²(n+a))", &["a"]),
    cubic(def("eq2.36", "Σ (H_n³ − 3H_n H_n^{(2)} + 2H_n^{(3)})/((n+a)(n+a+k))", &["a", "k"])),
    def("eq2.37", "Σ H_n^{(3)}/((n+a)(n+a+k))", &["a", "k"]),
    printed(def("eq3.9", "Σ H_n/((n+a)^p binom(n+k+b,k))", &["a", "b", "k", "p"])),
    def("eq3.11", "Σ H_n^{(m)}/binom(n+k+b,k)", &["b", "k", "m"]),
    def("eq3.13", "Σ H_n^{(m)}/((n+a) binom(n+k+a,k))", &["a", "k", "m"]),
    printed(def("eq3.15", "Σ H_n²/binom(n+k+b,k)", &["b", "k"])),
    def("eq3.16", "Σ H_n²/((n+a) binom(n+k+a,k))", &["a", "k"]),
    def("classical-w110", "Σ H_n²/binom(n+k,k)", &["k"]),
    def("classical-w111", "Σ H_n²/(n binom(n+k,k))", &["k"]),
    printed(def("eq4.2", "Σ H̄_n/((n+a)(n+b))", &["a", "b"])),
    def("eq4.3", "Σ H̄_n/(n+a)^s", &["a", "s"]),
    printed(def("eq4.5", "Σ H̄_n/((n+a)^p binom(n+k+b,k))", &["a", "b", "k", "p"])),
    def("eq4.7", "Σ H̄_n^{(m)}/((n+a)(n+a+k)), integer a", &["a", "k", "m"]),
    def("eq4.10", "Σ H̄_n^{(m)}/(n(n+k))", &["k", "m"]),
    def("eq4.11", "Σ H̄_n^{(m)}/((n+r)(n+k))", &["r", "k", "m"]),
    def("eq4.12", "Σ H̄_n^{(m)}/binom(n+k+a,k), integer a", &["a", "k", "m"]),
    def("eq4.13", "Σ H̄_n^{(m)}/((n+a) binom(n+k+a,k)), integer a", &["a", "k", "m"]),
];

/// Lookup and evaluation over the identity catalog.
pub struct Catalog;

fn gf_kind(id: &str) -> Option<GfKind> {
    Some(match id {
        "eq1.19" => GfKind::MomentIdent,
        "eq1.23" => GfKind::MomentIdentZero,
        "eq1.24" => GfKind::NestedPair,
        "eq1.25" => GfKind::NestedDiagonal,
        "eq1.29" => GfKind::HnH2,
        "eq1.30" => GfKind::HnHm,
        "eq1.31" => GfKind::NestedReflect,
        "eq2.25" => GfKind::SqDiff,
        _ => return None,
    })
}

fn gf_params(p: &Params) -> GfParams {
    let r = |n: &str| p.0.get(n).copied().unwrap_or(0.0);
    let i = |n: &str| p.get_int(n).unwrap_or(0);
    GfParams { x: r("x"), y: r("y"), a: r("a"), b: r("b"), m: i("m"), s: i("s"), n: i("n"), p: i("p") }
}

const H1: HVar = HVar::H(1);
const H2: HVar = HVar::H(2);
const H3: HVar = HVar::H(3);

fn window(numerator: &[(f64, &[HVar])], a: f64, k: u32) -> EulerSeries {
    EulerSeries::new().numerator(numerator).pole(a, 1).pole(a + f64::from(k), 1)
}

fn int_param(p: &Params, name: &str, min: u32) -> Result<u32> {
    let v = p.get_int(name)?;
    if v < min {
        return Err(domain(format!("{name} must be >= {min}, got {v}")));
    }
    Ok(v)
}

impl Catalog {
    pub fn all() -> &'static [IdentityDef] {
        DEFS
    }

    pub fn get(id: &str) -> Option<&'static IdentityDef> {
        DEFS.iter().find(|d| d.id == id)
    }

    pub fn ids() -> impl Iterator<Item = &'static str> {
        DEFS.iter().map(|d| d.id)
    }

    fn lookup(id: &str) -> Result<&'static IdentityDef> {
        Self::get(id).ok_or_else(|| domain(format!("unknown identity {id}")))
    }

    /// Closed-form value of `id` at `p`.
    pub fn closed_form(id: &str, p: &Params, variant: Variant) -> Result<f64> {
        let def = Self::lookup(id)?;
        if variant == Variant::AsPrinted && id == "eq2.20" {
            return Err(domain(
                "eq2.20 as printed carries a stray superscript and has no unambiguous reading",
            ));
        }
        let printed = variant == Variant::AsPrinted && def.has_printed;
        if let Some(kind) = gf_kind(id) {
            return gf_rhs(kind, &gf_params(p));
        }
        let r = |n: &str| p.get_real(n);
        let i = |n: &str, min: u32| int_param(p, n, min);
        match id {
            "eq1.27" => sum_H1_power(r("a")?, i("s", 2)?),
            "eq1.28" => sum_recip_shift(r("a")?, i("s", 1)?),
            "eq2.2" => {
                let a = r("a")?;
                Ok(y_moment(i("m", 1)?, a)? / a)
            }
            "eq2.9" if printed => sum_H1_bilinear_printed(r("a")?, r("b")?),
            "eq2.9" => sum_H1_bilinear(r("a")?, r("b")?),
            "eq2.13" => sum_Hm_window(r("a")?, i("k", 1)?, i("m", 1)?),
            "eq2.14" => polylog_moment(i("m", 1)?, r("a")?),
            "eq2.18" => sum_Hm_window_origin(i("k", 1)?, i("m", 1)?),
            "eq2.19" => sum_Hm_window_between(i("r", 1)?, i("k", 1)?, i("m", 1)?),
            "eq2.20" => sum_Hm_window(r("a")?, i("k", 1)?, 1),
            "eq2.21" => sum_H2_window(r("a")?, i("k", 1)?),
            "eq2.22" => sum_H1sq_window(r("a")?, i("k", 1)?),
            "eq2.27" => sum_sq_diff_window(r("a")?, i("k", 1)?),
            "eq2.28" => sum_H1H2_window(r("a")?, i("k", 1)?),
            "eq2.29" => sum_H1cubed_window(r("a")?, i("k", 1)?),
            "eq2.34" => sum_H1_over_nsq_shift(r("a")?),
            "eq2.36" => sum_cubic_stirling_window(r("a")?, i("k", 1)?),
            "eq2.37" => sum_Hm_window(r("a")?, i("k", 1)?, 3),
            "eq3.9" if printed => w_1_p_printed(r("a")?, r("b")?, i("k", 1)?, i("p", 1)?),
            "eq3.9" => w_1_p(r("a")?, r("b")?, i("k", 1)?, i("p", 1)?),
            "eq3.11" => w_m_0(r("b")?, i("k", 2)?, i("m", 1)?),
            "eq3.13" => w_m_1(r("a")?, i("k", 1)?, i("m", 1)?),
            "eq3.15" if printed => w_11_0_printed(r("b")?, i("k", 2)?),
            "eq3.15" => w_11_0(r("b")?, i("k", 2)?),
            "eq3.16" => w_111(r("a")?, i("k", 1)?),
            "classical-w110" => classical_w(i("k", 2)?, ClassicalKind::OneOneZero),
            "classical-w111" => classical_w(i("k", 1)?, ClassicalKind::OneOneOne),
            "eq4.2" if printed => alt_sum_H1_bilinear_printed(r("a")?, r("b")?),
            "eq4.2" => alt_sum_H1_bilinear(r("a")?, r("b")?),
            "eq4.3" => alt_sum_H1_power(r("a")?, i("s", 2)?),
            "eq4.5" if printed => w_alt_1_p_printed(r("a")?, r("b")?, i("k", 1)?, i("p", 1)?),
            "eq4.5" => w_alt_1_p(r("a")?, r("b")?, i("k", 1)?, i("p", 1)?),
            "eq4.7" => alt_sum_Hm_window(r("a")?, i("k", 1)?, i("m", 1)?),
            "eq4.10" => alt_sum_Hm_window_origin(i("k", 1)?, i("m", 1)?),
            "eq4.11" => alt_sum_Hm_window_between(i("r", 1)?, i("k", 1)?, i("m", 1)?),
            "eq4.12" => w_alt_m_0(r("a")?, i("k", 2)?, i("m", 1)?),
            "eq4.13" => w_alt_m_1(r("a")?, i("k", 1)?, i("m", 1)?),
            _ => Err(domain(format!("no closed form registered for {id}"))),
        }
    }

    /// Independent numerical value of the left-hand side of `id` at `p`.
    ///
    /// Only the preconditions that keep the series or integral well defined
    /// are enforced here; closed-form restrictions are not.
    pub fn oracle(id: &str, p: &Params, config: &SeriesConfig) -> Result<EvalResult> {
        Self::lookup(id)?;
        if let Some(kind) = gf_kind(id) {
            return gf_lhs(kind, &gf_params(p), config);
        }
        let r = |n: &str| p.get_real(n);
        let i = |n: &str, min: u32| int_param(p, n, min);
        let positive = |n: &str| -> Result<f64> {
            let v = r(n)?;
            if !(v > 0.0) || !v.is_finite() {
                return Err(domain(format!("{n} must be > 0, got {v}")));
            }
            Ok(v)
        };
        let quad_tol = (config.target_tol / 10.0).max(1e-13);
        let series = match id {
            "eq1.27" => EulerSeries::new().over(H1).pole(positive("a")?, i("s", 2)?),
            "eq1.28" => EulerSeries::new().pole(0.0, 1).pole(positive("a")?, i("s", 1)?),
            "eq2.2" => {
                let m = i("m", 1)?;
                let q = quadrature(Integrand::LogPowMoment { m, a: positive("a")? }, quad_tol)?;
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                return Ok(EvalResult { value: sign * q.value, ..q });
            }
            "eq2.9" => EulerSeries::new().over(H1).pole(positive("a")?, 1).pole(positive("b")?, 1),
            "eq2.13" => window(&[(1.0, &[HVar::H(i("m", 1)?)])], positive("a")?, i("k", 1)?),
            "eq2.14" => {
                let m = i("m", 1)?;
                return quadrature(Integrand::PolylogMoment { m, a: positive("a")? }, quad_tol);
            }
            "eq2.18" => window(&[(1.0, &[HVar::H(i("m", 1)?)])], 0.0, i("k", 1)?),
            "eq2.19" => {
                let (rr, k) = (i("r", 1)?, i("k", 1)?);
                EulerSeries::new().over(HVar::H(i("m", 1)?)).pole(f64::from(rr), 1).pole(f64::from(k), 1)
            }
            "eq2.20" => window(&[(1.0, &[H1])], positive("a")?, i("k", 1)?),
            "eq2.21" => window(&[(1.0, &[H2])], positive("a")?, i("k", 1)?),
            "eq2.22" => window(&[(1.0, &[H1, H1])], positive("a")?, i("k", 1)?),
            "eq2.27" => window(&[(1.0, &[H1, H1]), (-1.0, &[H2])], positive("a")?, i("k", 1)?),
            "eq2.28" => window(&[(1.0, &[H1, H2])], positive("a")?, i("k", 1)?),
            "eq2.29" => window(&[(1.0, &[H1, H1, H1])], positive("a")?, i("k", 1)?),
            "eq2.34" => EulerSeries::new().over(H1).pole(0.0, 2).pole(positive("a")?, 1),
            "eq2.36" => window(
                &[(1.0, &[H1, H1, H1]), (-3.0, &[H1, H2]), (2.0, &[H3])],
                positive("a")?,
                i("k", 1)?,
            ),
            "eq2.37" => window(&[(1.0, &[H3])], positive("a")?, i("k", 1)?),
            "eq3.9" => EulerSeries::new()
                .over(H1)
                .pole(positive("a")?, i("p", 1)?)
                .binomial(i("k", 1)?, r("b")?),
            "eq3.11" => EulerSeries::new().over(HVar::H(i("m", 1)?)).binomial(i("k", 1)?, r("b")?),
            "eq3.13" => {
                let a = positive("a")?;
                EulerSeries::new().over(HVar::H(i("m", 1)?)).pole(a, 1).binomial(i("k", 1)?, a)
            }
            "eq3.15" => EulerSeries::new().numerator(&[(1.0, &[H1, H1])]).binomial(i("k", 1)?, r("b")?),
            "eq3.16" => {
                let a = positive("a")?;
                EulerSeries::new().numerator(&[(1.0, &[H1, H1])]).pole(a, 1).binomial(i("k", 1)?, a)
            }
            "classical-w110" => EulerSeries::new().numerator(&[(1.0, &[H1, H1])]).binomial(i("k", 1)?, 0.0),
            "classical-w111" => EulerSeries::new()
                .numerator(&[(1.0, &[H1, H1])])
                .pole(0.0, 1)
                .binomial(i("k", 1)?, 0.0),
            "eq4.2" => EulerSeries::new().over(HVar::Hbar(1)).pole(positive("a")?, 1).pole(positive("b")?, 1),
            "eq4.3" => {
                let a = r("a")?;
                if !(a >= 0.0) {
                    return Err(domain(format!("a must be >= 0, got {a}")));
                }
                EulerSeries::new().over(HVar::Hbar(1)).pole(a, i("s", 2)?)
            }
            "eq4.5" => EulerSeries::new()
                .over(HVar::Hbar(1))
                .pole(positive("a")?, i("p", 1)?)
                .binomial(i("k", 1)?, r("b")?),
            "eq4.7" => {
                let a = r("a")?;
                if !(a >= 0.0) {
                    return Err(domain(format!("a must be >= 0, got {a}")));
                }
                window(&[(1.0, &[HVar::Hbar(i("m", 1)?)])], a, i("k", 1)?)
            }
            "eq4.10" => window(&[(1.0, &[HVar::Hbar(i("m", 1)?)])], 0.0, i("k", 1)?),
            "eq4.11" => {
                let (rr, k) = (i("r", 1)?, i("k", 1)?);
                EulerSeries::new().over(HVar::Hbar(i("m", 1)?)).pole(f64::from(rr), 1).pole(f64::from(k), 1)
            }
            "eq4.12" => EulerSeries::new().over(HVar::Hbar(i("m", 1)?)).binomial(i("k", 1)?, r("a")?),
            "eq4.13" => {
                let a = positive("a")?;
                EulerSeries::new().over(HVar::Hbar(i("m", 1)?)).pole(a, 1).binomial(i("k", 1)?, a)
            }
            _ => return Err(domain(format!("no oracle registered for {id}"))),
        };
        series.sum(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_identity_has_both_sides() {
        for d in Catalog::all() {
            assert!(Catalog::get(d.id).is_some());
            let p = Params::new();
            // Missing parameters are reported, never an unregistered id.
            for res in [
                Catalog::closed_form(d.id, &p, Variant::Corrected).err(),
                Catalog::oracle(d.id, &p, &SeriesConfig::default()).err(),
            ]
            .into_iter()
            .flatten()
            {
                assert!(!res.to_string().contains("registered"), "{}: {res}", d.id);
            }
        }
    }

    #[test]
    fn params_helpers() {
        let p = Params::new().with("a", 1.5).with("k", 2.0);
        assert_eq!(p.get_int("k").unwrap(), 2);
        assert!(p.get_int("a").is_err());
        assert!(p.get_real("m").is_err());
        assert_eq!(p.to_string(), "a=1.5;k=2");
    }

    #[test]
    fn telescoping_case() {
        let p = Params::new().with("a", 1.0).with("s", 1.0);
        assert!((Catalog::closed_form("eq1.28", &p, Variant::Corrected).unwrap() - 1.0).abs() < 1e-15);
    }
}
