use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials have different variable counts ({left} vs {right})")]
    VarCountMismatch { left: usize, right: usize },
    #[error("expected {expected} coordinates, got {got}")]
    PointLength { expected: usize, got: usize },
    #[error("variable index {var} out of range for a polynomial in {nvars} variables")]
    VarOutOfRange { var: usize, nvars: usize },
    #[error("affine map has zero scale")]
    SingularAffineMap,
    #[error("interval endpoints coincide")]
    DegenerateInterval,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("index {name} out of range")]
    IndexOutOfRange { name: &'static str },
    #[error("expected a univariate polynomial of degree at most 3")]
    NotCubic,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("face restriction left a nonzero trace for entry {0}")]
    NonzeroFaceTrace(String),
}
