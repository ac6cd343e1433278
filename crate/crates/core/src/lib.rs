//! Exact construction and verification of cubic serendipity bases on the
//! square and the cube.
//!
//! The crate is organised bottom-up:
//!
//! * [`ratpoly`]: exact rational polynomials in up to three variables.
//! * [`cubic1d`]: the univariate cubic Bernstein-like and Hermite bases.
//! * [`serendipity`]: index sets, the closed-form serendipity bases and tensor bases.
//! * [`coeffsolver`]: exact derivation of the serendipity-to-tensor coefficient matrices.
//! * [`dofcheck`]: vertex/edge degrees of freedom and unisolvence.
//! * [`verify`]: the complete battery of exact identity checks.

pub mod coeffsolver;
pub mod cubic1d;
pub mod dofcheck;
mod error;
pub mod exact;
pub mod ratpoly;
pub mod serendipity;
pub mod verify;

pub use error::{Error, Result};
pub use ratpoly::{frac, rat, AffineMap1D, Monomial, MultiPoly, Rational};
