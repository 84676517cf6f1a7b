//! Machine-readable verification reports.

use crate::oracle::{IdentityCase, Params, SeriesConfig, Status, Variant, VerificationRecord};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// One flat report row. Non-finite numbers serialize as `null`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub identity: String,
    pub variant: Variant,
    pub params: Params,
    pub closed: Option<f64>,
    pub oracle: Option<f64>,
    pub abs_residual: Option<f64>,
    pub rel_residual: Option<f64>,
    pub status: Status,
    pub oracle_error_bound: Option<f64>,
    pub tol: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

impl From<&VerificationRecord> for ReportRow {
    fn from(r: &VerificationRecord) -> Self {
        Self {
            identity: r.case.identity_id.clone(),
            variant: r.case.variant,
            params: r.case.params.clone(),
            closed: finite(r.closed_value),
            oracle: finite(r.oracle_value),
            abs_residual: finite(r.abs_residual),
            rel_residual: finite(r.rel_residual),
            status: r.status,
            oracle_error_bound: finite(r.oracle_error_bound),
            tol: r.case.tol,
            note: r.note.clone(),
        }
    }
}

impl ReportRow {
    /// The case this row was produced from.
    pub fn case(&self) -> IdentityCase {
        IdentityCase::new(&self.identity, self.params.clone(), self.tol, self.variant)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub confirmed: usize,
    pub refuted: usize,
    pub inconclusive: usize,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub config: SeriesConfig,
    pub records: Vec<ReportRow>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(config: SeriesConfig, records: &[VerificationRecord], wall_time_ms: u64) -> Self {
        let count = |s: Status| records.iter().filter(|r| r.status == s).count();
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            config,
            records: records.iter().map(ReportRow::from).collect(),
            summary: Summary {
                confirmed: count(Status::Confirmed),
                refuted: count(Status::Refuted),
                inconclusive: count(Status::Inconclusive),
                wall_time_ms,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::verify_identity;

    #[test]
    fn counts_match_records() {
        let cfg = SeriesConfig::default();
        let cases = [
            IdentityCase::new("eq2.9", Params::new().with("a", 1.0).with("b", 2.0), 1e-8, Variant::Corrected),
            IdentityCase::new("eq2.9", Params::new().with("a", 1.0).with("b", 2.0), 1e-8, Variant::AsPrinted),
            IdentityCase::new("eq2.9", Params::new().with("a", 1.0), 1e-8, Variant::Corrected),
        ];
        let recs: Vec<_> = cases.iter().map(|c| verify_identity(c, &cfg)).collect();
        let doc = ReportDocument::new(cfg, &recs, 0);
        let s = doc.summary;
        assert_eq!((s.confirmed, s.refuted, s.inconclusive), (1, 1, 1));
        assert_eq!(doc.records[2].closed, None);
        assert_eq!(doc.records[1].case(), cases[1]);
    }
}
