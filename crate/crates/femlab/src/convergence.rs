//! h-refinement studies with the manufactured solution `Π sin(π x_i)`.

use std::fmt::Write as _;

use crate::assemble::{manufactured_grad, manufactured_source, manufactured_u, Discretization};
use crate::element::BasisKind;
use crate::error::{FemError, Result};
use crate::mesh::UniformMesh;
use crate::solver::CgOptions;

pub const CSV_HEADER: &str = "N,h,dofs,l2_error,h1_error,l2_rate,h1_rate";

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub h: f64,
    pub dofs: usize,
    pub l2_error: f64,
    pub h1_error: f64,
    pub l2_rate: Option<f64>,
    pub h1_rate: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceReport {
    pub dim: usize,
    pub kind: BasisKind,
    pub rows: Vec<ConvergenceRow>,
}

/// `log(e_prev / e) / log(h_prev / h)`.
pub fn observed_rate(e_prev: f64, e: f64, h_prev: f64, h: f64) -> f64 {
    (e_prev / e).ln() / (h_prev / h).ln()
}

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

impl ConvergenceReport {
    pub fn final_h1_rate(&self) -> Option<f64> {
        self.rows.last().and_then(|r| r.h1_rate)
    }

    /// CSV with 17 significant digits; rates are empty on the first row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let rate = |x: Option<f64>| x.map(fmt17).unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.n,
                fmt17(r.h),
                r.dofs,
                fmt17(r.l2_error),
                fmt17(r.h1_error),
                rate(r.l2_rate),
                rate(r.h1_rate)
            )
            .expect("writing to a String");
        }
        out
    }
}

/// Solves on each level and measures errors against the manufactured solution.
pub fn run_convergence(
    dim: usize,
    kind: BasisKind,
    levels: &[usize],
    opts: CgOptions,
) -> Result<ConvergenceReport> {
    if levels.is_empty() || levels.windows(2).any(|w| w[0] >= w[1]) || levels[0] == 0 {
        return Err(FemError::Invalid("levels must be positive and strictly ascending".into()));
    }
    if dim != 2 && dim != 3 {
        return Err(FemError::Invalid(format!("dimension {dim} is not 2 or 3")));
    }
    let u = manufactured_u(dim);
    let grad = manufactured_grad(dim);
    let f = manufactured_source(dim);
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(levels.len());
    for &n in levels {
        let disc = Discretization::new(kind, UniformMesh::new(dim, n));
        let coeffs = disc.solve_poisson(&f, opts)?;
        let (l2_error, h1_error) = disc.errors(&coeffs, &u, &grad);
        let h = disc.mesh.h();
        let (l2_rate, h1_rate) = match rows.last() {
            Some(p) => (
                Some(observed_rate(p.l2_error, l2_error, p.h, h)),
                Some(observed_rate(p.h1_error, h1_error, p.h, h)),
            ),
            None => (None, None),
        };
        rows.push(ConvergenceRow { n, h, dofs: disc.num_dofs(), l2_error, h1_error, l2_rate, h1_rate });
    }
    Ok(ConvergenceReport { dim, kind, rows })
}
