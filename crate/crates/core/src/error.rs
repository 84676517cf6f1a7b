use thiserror::Error;

/// Errors raised by closed forms and oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EulerError {
    /// An argument hit a pole of a gamma-type function.
    #[error("pole: {0}")]
    Pole(String),
    /// An argument lies outside the supported domain.
    #[error("domain: {0}")]
    Domain(String),
    /// A numerical engine could not meet its tolerance.
    #[error("convergence: {0}")]
    Convergence(String),
    /// Partial-fraction collision `a = b + r`.
    #[error("resonance a=b+r (a={a}, b={b}, r={r})")]
    Resonance { a: f64, b: f64, r: u32 },
}

pub type Result<T> = std::result::Result<T, EulerError>;

pub(crate) fn domain(msg: impl Into<String>) -> EulerError {
    EulerError::Domain(msg.into())
}
