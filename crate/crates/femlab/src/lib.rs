//! Floating-point finite element laboratory for the cubic serendipity and
//! tensor-product elements: uniform meshes, assembly, conjugate gradients and
//! convergence studies for the Poisson problem.

pub mod assemble;
pub mod convergence;
pub mod element;
mod error;
pub mod mesh;
pub mod poly;
pub mod quadrature;
pub mod solver;
pub mod sparse;

pub use assemble::{assemble_poisson, l2_distance, Discretization};
pub use convergence::{run_convergence, ConvergenceReport, ConvergenceRow};
pub use element::{BasisKind, ReferenceElement};
pub use error::{FemError, Result};
pub use mesh::{GlobalDofMap, UniformMesh};
pub use solver::{solve_cg, CgOptions};
