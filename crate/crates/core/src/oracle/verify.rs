//! Closed form versus oracle for catalog cases.

use super::catalog::{Catalog, Params};
use super::SeriesConfig;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which reading of a closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Variant {
    #[default]
    Corrected,
    AsPrinted,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Corrected => "corrected",
            Variant::AsPrinted => "as-printed",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Confirmed,
    Refuted,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "CONFIRMED",
            Status::Refuted => "REFUTED",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// One identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCase {
    #[serde(rename = "identity")]
    pub identity_id: String,
    pub params: Params,
    pub tol: f64,
    #[serde(default)]
    pub variant: Variant,
}

impl IdentityCase {
    pub fn new(id: &str, params: Params, tol: f64, variant: Variant) -> Self {
        Self { identity_id: id.to_string(), params, tol, variant }
    }

    /// The tolerance actually applied: tenfold for the cubic sums.
    pub fn effective_tol(&self) -> f64 {
        match Catalog::get(&self.identity_id) {
            Some(d) if d.cubic => 10.0 * self.tol,
            _ => self.tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub case: IdentityCase,
    pub closed_value: f64,
    pub oracle_value: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub oracle_error_bound: f64,
    pub status: Status,
    /// Why a case is inconclusive, when known.
    pub note: Option<String>,
}

fn inconclusive(case: &IdentityCase, closed: f64, oracle: f64, bound: f64, note: String) -> VerificationRecord {
    VerificationRecord {
        case: case.clone(),
        closed_value: closed,
        oracle_value: oracle,
        abs_residual: f64::NAN,
        rel_residual: f64::NAN,
        oracle_error_bound: bound,
        status: Status::Inconclusive,
        note: Some(note),
    }
}

/// Evaluates closed form and oracle independently and classifies the case.
///
/// The oracle runs with a target of a tenth of the case tolerance (or the
/// configured target, if tighter). Never fails: errors become INCONCLUSIVE.
pub fn verify_identity(case: &IdentityCase, config: &SeriesConfig) -> VerificationRecord {
    let tol = case.effective_tol();
    if Catalog::get(&case.identity_id).is_none() {
        return inconclusive(case, f64::NAN, f64::NAN, f64::NAN, format!("unknown identity {}", case.identity_id));
    }
    if !(tol > 0.0) {
        return inconclusive(case, f64::NAN, f64::NAN, f64::NAN, format!("tolerance must be > 0, got {tol}"));
    }
    let closed = match Catalog::closed_form(&case.identity_id, &case.params, case.variant) {
        Ok(v) => v,
        Err(e) => return inconclusive(case, f64::NAN, f64::NAN, f64::NAN, e.to_string()),
    };
    let oracle_config = SeriesConfig { target_tol: config.target_tol.min(tol / 10.0), ..*config };
    let oracle = match Catalog::oracle(&case.identity_id, &case.params, &oracle_config) {
        Ok(r) => r,
        Err(e) => return inconclusive(case, closed, f64::NAN, f64::NAN, format!("oracle: {e}")),
    };
    let abs = (closed - oracle.value).abs();
    let rel = abs / oracle.value.abs();
    let bound = oracle.abs_error_estimate;
    let confirmed = rel <= tol || (oracle.value.abs() < 1.0 && abs <= tol);
    let (status, note) = if confirmed {
        (Status::Confirmed, None)
    } else if bound / oracle.value.abs().max(1.0) <= tol / 10.0 && closed.is_finite() {
        (Status::Refuted, None)
    } else {
        (Status::Inconclusive, Some(format!("oracle bound {bound:e} too loose to refute")))
    };
    VerificationRecord {
        case: case.clone(),
        closed_value: closed,
        oracle_value: oracle.value,
        abs_residual: abs,
        rel_residual: rel,
        oracle_error_bound: bound,
        status,
        note,
    }
}

/// Verifies every case (in parallel) and returns records in input order.
pub fn grid_verify(suite: &[IdentityCase], config: &SeriesConfig) -> Vec<VerificationRecord> {
    suite.par_iter().map(|c| verify_identity(c, config)).collect()
}
