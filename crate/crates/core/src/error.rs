use thiserror::Error;

use crate::transform::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("operands are expressed in different bases")]
    BasisMismatch,

    #[error("coefficients are not canonical (max residual {:.3e})", .0.max_residual())]
    NotCanonical(Box<ValidationReport>),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("matrix is not hermitian (residual {0:.3e})")]
    NotHermitian(f64),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
