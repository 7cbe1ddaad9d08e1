use thiserror::Error;

use crate::report::CheckReport;

/// Errors raised by constructors and enumerations.
///
/// Axiom failures are never errors: checkers return a [`CheckReport`] and
/// only constructors that *require* a passing report wrap it in
/// [`Error::PrerequisiteFailed`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("no primitive {n}-th root of unity in F_{p} ({n} does not divide {p} - 1)")]
    NoSuchRoot { n: u64, p: u64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("element is not invertible")]
    NotInvertible,

    #[error("zero has no multiplicative inverse")]
    DivisionByZero,

    #[error("prerequisite check `{}` failed", .0.name)]
    PrerequisiteFailed(Box<CheckReport>),

    #[error("pair does not satisfy the compatibility relation")]
    IncompatiblePair,

    #[error("not a group action: {0}")]
    NotAnAction(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn prerequisite(report: CheckReport) -> Self {
        Error::PrerequisiteFailed(Box::new(report))
    }

    pub(crate) fn budget(needed: u128, budget: u64) -> Self {
        Error::BudgetExceeded { needed, budget }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
