//! Certified evaluation of the explicit-constant pipelines behind bounds for
//! ζ(1+it), 1/ζ(1+it) and ζ'/ζ near the 1-line: directed-rounding interval
//! arithmetic, van der Corput derivative-test constants, desk-scale zeta
//! evaluation, the three constant chains, and a constrained parameter search.

pub mod optimizer;
pub mod prop;
pub mod rigor;
pub mod thm1;
pub mod thm2;
pub mod vdc;
pub mod zeta_eval;

use rigor::CertOutcome;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition `{name}` failed: {outcome}")]
    Precondition { name: String, outcome: CertOutcome },

    #[error("certification step `{name}` not proven: {outcome}")]
    Unproven { name: String, outcome: CertOutcome },

    #[error("oracle misuse: {0}")]
    OracleMisuse(String),

    #[error("target accuracy {requested:.3e} unreachable; achievable ~{achievable:.3e}")]
    Unachievable { requested: f64, achievable: f64 },

    #[error("no feasible point found in budget; constraint violations: {histogram:?}")]
    NoFeasiblePoint { histogram: Vec<(String, usize)> },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain { op, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
