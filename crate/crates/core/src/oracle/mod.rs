//! Independent ground-truth engines and the verification driver.
//!
//! The engines never call the closed forms: series are summed term by term
//! from running harmonic numbers, tails come from smooth asymptotic
//! surrogates, and integrals use double-exponential quadrature.

pub mod accel;
pub mod catalog;
pub mod gfseries;
pub mod grid;
pub mod quadrature;
pub mod series;
pub mod verify;

use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};

pub use accel::accelerated_alternating;
pub use gfseries::gf_lhs;
pub use grid::{builtin_suite, gf_suite};
pub use catalog::{Catalog, IdentityDef, Params};
pub use quadrature::{quadrature, Integrand};
pub use series::{power_series_sum, truncated_series, EulerSeries, Growth, HVar, TailModel};
pub use verify::{grid_verify, verify_identity, IdentityCase, Status, Variant, VerificationRecord};

/// How the discarded tail of a truncated series is modelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TailMode {
    None,
    EulerMaclaurin,
    LogPowerIntegral,
}

/// Acceleration applied to sign-alternating series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AccelMode {
    None,
    AlternatingCVZ,
}

/// Oracle configuration shared by all engines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    pub max_terms: u64,
    pub tail_mode: TailMode,
    pub accel: AccelMode,
    pub target_tol: f64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            max_terms: 1_000_000,
            tail_mode: TailMode::EulerMaclaurin,
            accel: AccelMode::AlternatingCVZ,
            target_tol: 1e-9,
        }
    }
}

impl SeriesConfig {
    pub fn new(max_terms: u64, tail_mode: TailMode, accel: AccelMode, target_tol: f64) -> Result<Self> {
        let c = Self { max_terms, tail_mode, accel, target_tol };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 10 {
            return Err(domain(format!("max_terms must be >= 10, got {}", self.max_terms)));
        }
        if !(self.target_tol > 0.0) {
            return Err(domain(format!("target_tol must be > 0, got {}", self.target_tol)));
        }
        Ok(())
    }

    pub fn with_max_terms(mut self, n: u64) -> Self {
        self.max_terms = n;
        self
    }
}

/// Which engine produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    ClosedForm,
    Truncated,
    Accelerated,
    Quadrature,
}

/// A value with an absolute error estimate and a work counter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub method: Method,
    pub work: u64,
}

impl EvalResult {
    pub fn closed(value: f64) -> Self {
        Self { value, abs_error_estimate: 0.0, method: Method::ClosedForm, work: 0 }
    }

    /// Linear combination Σ c_i r_i with summed error bounds.
    pub fn combine(parts: &[(f64, EvalResult)]) -> Self {
        let mut value = 0.0;
        let mut err = 0.0;
        let mut work = 0;
        let mut method = Method::Truncated;
        for (i, (c, r)) in parts.iter().enumerate() {
            value += c * r.value;
            err += c.abs() * r.abs_error_estimate;
            work += r.work;
            if i == 0 {
                method = r.method;
            }
        }
        Self { value, abs_error_estimate: err, method, work }
    }
}

/// Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    #[inline]
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
