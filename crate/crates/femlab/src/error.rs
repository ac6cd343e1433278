use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FemError {
    #[error("conjugate gradients did not converge in {iterations} iterations (relative residual {relative_residual:e})")]
    NoConvergence { iterations: usize, relative_residual: f64 },
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, FemError>;
