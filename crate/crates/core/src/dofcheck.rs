//! Degrees of freedom of the cubic serendipity space on `[-1,1]^n`: point
//! values at vertices and the moments `∫_e u dt`, `∫_e u t dt` along edges.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact;
use crate::ratpoly::{rat, MultiPoly, Rational};
use crate::serendipity::{classify_index, Domain, Edge, IndexClass, LabeledBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MomentWeight {
    One,
    /// The edge parameter `t`, which increases with the free coordinate.
    T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DofFunctional {
    VertexEval { vertex: Vec<i64> },
    EdgeMoment { edge: Edge, weight: MomentWeight },
}

impl fmt::Display for DofFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DofFunctional::VertexEval { vertex } => write!(f, "u{vertex:?}"),
            DofFunctional::EdgeMoment { edge, weight } => {
                let w = match weight {
                    MomentWeight::One => "1",
                    MomentWeight::T => "t",
                };
                write!(f, "int[{:?}->{:?}] u*{w}", edge.start(), edge.end())
            }
        }
    }
}

/// Vertices of `{-1,1}^n` in lexicographic order.
pub fn cube_vertices(n: usize) -> Vec<Vec<i64>> {
    (0..1usize << n)
        .map(|mask| {
            (0..n)
                .map(|k| if mask >> (n - 1 - k) & 1 == 1 { 1 } else { -1 })
                .collect()
        })
        .collect()
}

/// All functionals for the `n`-cube: vertex values (lexicographic), then for
/// each edge (see [`Edge::all`]) the weight-1 moment followed by the weight-t moment.
pub fn dofs_for_cube(n: usize) -> Vec<DofFunctional> {
    let mut out: Vec<DofFunctional> = cube_vertices(n)
        .into_iter()
        .map(|vertex| DofFunctional::VertexEval { vertex })
        .collect();
    for edge in Edge::all(n) {
        for weight in [MomentWeight::One, MomentWeight::T] {
            out.push(DofFunctional::EdgeMoment { edge: edge.clone(), weight });
        }
    }
    out
}

pub fn apply_dof(f: &DofFunctional, p: &MultiPoly) -> Result<Rational> {
    match f {
        DofFunctional::VertexEval { vertex } => {
            let point: Vec<Rational> = vertex.iter().map(|&v| rat(v)).collect();
            p.eval(&point)
        }
        DofFunctional::EdgeMoment { edge, weight } => {
            if edge.fixed.len() + 1 != p.nvars() {
                return Err(Error::PointLength { expected: p.nvars(), got: edge.fixed.len() + 1 });
            }
            let mut trace = edge.trace(p)?;
            if *weight == MomentWeight::T {
                trace = &trace * &MultiPoly::var(1, 0);
            }
            trace.integrate_box(&[(rat(-1), rat(1))])
        }
    }
}

/// Functional-by-basis matrix: `entries[i][j] = dof_i(basis_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DofMatrix {
    pub rows: Vec<DofFunctional>,
    pub entries: Vec<Vec<Rational>>,
}

impl DofMatrix {
    pub fn determinant(&self) -> Result<Rational> {
        exact::determinant(&self.entries)
    }
}

pub fn unisolvence_matrix(basis: &LabeledBasis) -> Result<DofMatrix> {
    if basis.domain != Domain::Sym {
        return Err(Error::Shape("degrees of freedom are defined on [-1,1]^n".into()));
    }
    let rows = dofs_for_cube(basis.dim);
    let entries = rows
        .iter()
        .map(|f| basis.polys().map(|p| apply_dof(f, p)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(DofMatrix { rows, entries })
}

/// A vertex-indexed entry is 1 at its own vertex and 0 at the others; an
/// edge-indexed entry vanishes at every vertex. Other entries are ignored.
pub fn vertex_kronecker(basis: &LabeledBasis) -> bool {
    let vertices = cube_vertices(basis.dim);
    basis.entries.iter().all(|(idx, p)| {
        let own: Option<Vec<i64>> = match classify_index(idx) {
            IndexClass::Vertex => {
                Some(idx.digits().iter().map(|&d| if d == 1 { -1 } else { 1 }).collect())
            }
            IndexClass::Edge => None,
            _ => return true,
        };
        vertices.iter().all(|v| {
            let point: Vec<Rational> = v.iter().map(|&c| rat(c)).collect();
            let value = match p.eval(&point) {
                Ok(value) => value,
                Err(_) => return false,
            };
            if own.as_ref() == Some(v) {
                value.is_one()
            } else {
                value.is_zero()
            }
        })
    })
}
