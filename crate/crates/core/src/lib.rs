//! Closed-form evaluation of Euler-type sums with harmonic numbers, and the
//! independent numerical oracles used to verify them.

#[allow(non_snake_case)]
pub mod alt_sums;
pub mod errata;
pub mod error;
pub mod harmonic;
#[allow(non_snake_case)]
pub mod linear_sums;
pub mod oracle;
pub mod report;
pub mod specfun;
pub mod wsums;

pub use error::{EulerError, Result};
pub use specfun::ShiftParam;
pub use oracle::{EvalResult, IdentityCase, Params, SeriesConfig, Status, Variant, VerificationRecord};
pub use report::ReportDocument;
