use thiserror::Error;

use crate::semigroup::ValidationReport;
use crate::space::{AmalgamationFailure, TriangleViolation};

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed or inconsistent input (bad tables, unknown vertices, size caps).
    #[error("invalid input: {0}")]
    Input(String),

    #[error("semigroup axioms violated: {0}")]
    Axioms(Box<ValidationReport>),

    #[error("operation is not associative: ({0} + {1}) + {2} != {0} + ({1} + {2})")]
    NotAssociative(String, String, String),

    #[error("semigroup has no maximum element")]
    NoMaximum,

    #[error("no infimum exists for {0}")]
    MissingInfimum(String),

    #[error("triangle inequality violated: {0}")]
    Triangle(Box<TriangleViolation>),

    #[error("amalgamation failed: {0}")]
    Amalgamation(Box<AmalgamationFailure>),

    #[error("no valid extension found after {0} attempts")]
    Exhausted(usize),
}

impl Error {
    /// True for outcomes that are mathematical findings about the input
    /// rather than malformed input.
    pub fn is_finding(&self) -> bool {
        matches!(
            self,
            Error::Axioms(_) | Error::NotAssociative(..) | Error::Triangle(_) | Error::Amalgamation(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
