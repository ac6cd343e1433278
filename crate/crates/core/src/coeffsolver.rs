//! Exact derivation of the matrices expressing each serendipity basis in its
//! tensor-product counterpart on `[0,1]^n`.
//!
//! For every tensor label `ijk` the column of coefficients `c^{ℓmn}_{ijk}`
//! (`ℓmn` running over vertex and edge labels) is the unique solution of
//!
//! ```text
//! w_r(i) w_s(j) w_t(k) = sum_{ℓmn} w_r(ℓ) w_s(m) w_t(n) c^{ℓmn}_{ijk}
//! ```
//!
//! for every exponent tuple `(r,s,t)` of superlinear degree at most 3, where
//! `w_r` are the univariate reproduction weights (binomials for the
//! Bernstein-like family, `ε` for Hermite).

use rayon::prelude::*;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact;
use crate::ratpoly::{MultiPoly, Rational};
use crate::serendipity::{
    self, classify_index, Domain, IndexClass, LabeledBasis, PointIndex, Style,
};

/// Rows labelled by serendipity (vertex + edge) indices, columns by all
/// tensor indices. Left block is the identity, right block the correction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix {
    pub dim: usize,
    pub style: Style,
    pub rows: Vec<PointIndex>,
    pub cols: Vec<PointIndex>,
    pub entries: Vec<Vec<Rational>>,
}

impl CoeffMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// The columns past the vertex/edge block (the `D`, or `F ∪ M`, labels).
    pub fn right_block(&self) -> Vec<Vec<Rational>> {
        let n = self.nrows();
        self.entries.iter().map(|row| row[n..].to_vec()).collect()
    }

    pub fn left_block_is_identity(&self) -> bool {
        let n = self.nrows();
        self.entries.iter().enumerate().all(|(i, row)| {
            row[..n]
                .iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }

    pub fn entry(&self, row: &PointIndex, col: &PointIndex) -> Option<&Rational> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.cols.iter().position(|c| c == col)?;
        Some(&self.entries[i][j])
    }

    /// Plain-text dump: one row per line, exact fractions separated by single spaces.
    pub fn to_text(&self) -> String {
        dump_rows(&self.entries)
    }
}

/// Shared exact matrix text format.
pub fn dump_rows(rows: &[Vec<Rational>]) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// A square exact linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinSystem {
    pub lhs: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
}

/// Solves the system exactly with fraction-free elimination.
pub fn solve_fraction_free(sys: &LinSystem) -> Result<Vec<Rational>> {
    exact::solve(&sys.lhs, &sys.rhs)
}

/// Exponent tuples of the constraint equations, in serendipity-span order.
pub fn constraint_exponents(dim: usize) -> Vec<Vec<u32>> {
    serendipity::monomial_span_s3(dim)
        .into_iter()
        .map(|m| m.exponents().to_vec())
        .collect()
}

/// Constraint matrix: one row per exponent tuple, one column per serendipity label.
pub fn constraint_matrix(dim: usize, style: Style, order: &[Vec<u32>]) -> Vec<Vec<Rational>> {
    let labels = serendipity::serendipity_indices(dim);
    order
        .iter()
        .map(|exps| {
            labels
                .iter()
                .map(|l| serendipity::reproduction_weight(style, exps, l))
                .collect()
        })
        .collect()
}

/// The system whose solution is column `col` of the coefficient matrix.
pub fn column_system(dim: usize, style: Style, order: &[Vec<u32>], col: &PointIndex) -> LinSystem {
    LinSystem {
        lhs: constraint_matrix(dim, style, order),
        rhs: order
            .iter()
            .map(|exps| serendipity::reproduction_weight(style, exps, col))
            .collect(),
    }
}

/// Builds the coefficient matrix, solving one exact system per tensor label.
pub fn build_with_order(dim: usize, style: Style, order: &[Vec<u32>]) -> Result<CoeffMatrix> {
    let rows = serendipity::serendipity_indices(dim);
    let cols = serendipity::tensor_indices(dim);
    if order.len() != rows.len() {
        return Err(Error::Shape(format!(
            "{} constraint equations for {} unknowns",
            order.len(),
            rows.len()
        )));
    }
    let columns: Vec<Vec<Rational>> = cols
        .par_iter()
        .map(|col| solve_fraction_free(&column_system(dim, style, order, col)))
        .collect::<Result<_>>()?;
    let entries = (0..rows.len())
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    Ok(CoeffMatrix { dim, style, rows, cols, entries })
}

pub fn build(dim: usize, style: Style) -> Result<CoeffMatrix> {
    build_with_order(dim, style, &constraint_exponents(dim))
}

/// 12 x 16, Bernstein-style on the square.
pub fn build_b() -> Result<CoeffMatrix> {
    build(2, Style::Bernstein)
}

/// 12 x 16, Hermite-style on the square.
pub fn build_h() -> Result<CoeffMatrix> {
    build(2, Style::Hermite)
}

/// 32 x 64, Bernstein-style on the cube.
pub fn build_u() -> Result<CoeffMatrix> {
    build(3, Style::Bernstein)
}

/// 32 x 64, Hermite-style on the cube.
pub fn build_w() -> Result<CoeffMatrix> {
    build(3, Style::Hermite)
}

/// A failed constraint equation: exponents and tensor column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintViolation {
    pub exponents: Vec<u32>,
    pub column: PointIndex,
}

/// Checks every constraint equation by direct substitution of the matrix
/// entries; returns the first equation that fails.
pub fn first_constraint_violation(m: &CoeffMatrix) -> Option<ConstraintViolation> {
    for exps in constraint_exponents(m.dim) {
        for (j, col) in m.cols.iter().enumerate() {
            let lhs = serendipity::reproduction_weight(m.style, &exps, col);
            let rhs: Rational = m
                .rows
                .iter()
                .enumerate()
                .map(|(i, row)| serendipity::reproduction_weight(m.style, &exps, row) * &m.entries[i][j])
                .sum();
            if lhs != rhs {
                return Some(ConstraintViolation { exponents: exps, column: *col });
            }
        }
    }
    None
}

/// True when every nonzero entry outside the identity block lies in a column
/// labelled by an interior (2D) or face/interior (3D) point.
pub fn corrections_confined_to_interior(m: &CoeffMatrix) -> bool {
    m.entries.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, v)| {
            match classify_index(&m.cols[j]) {
                IndexClass::Face | IndexClass::Interior => true,
                _ if i == j => v.is_one(),
                _ => v.is_zero(),
            }
        })
    })
}

/// Row-by-row combination of the tensor basis with the coefficient matrix.
pub fn synthesize_basis(coeffs: &CoeffMatrix, tensor: &LabeledBasis) -> Result<LabeledBasis> {
    if tensor.dim != coeffs.dim || tensor.domain != Domain::Unit {
        return Err(Error::Shape("tensor basis must live on [0,1]^n of matching dimension".into()));
    }
    if tensor.indices().ne(coeffs.cols.iter()) {
        return Err(Error::Shape("tensor basis ordering differs from matrix columns".into()));
    }
    let entries = coeffs
        .rows
        .iter()
        .zip(&coeffs.entries)
        .map(|(idx, row)| {
            let p = row
                .iter()
                .zip(tensor.polys())
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, p)| p.scale(c))
                .fold(MultiPoly::zero(coeffs.dim), |acc, p| &acc + &p);
            (*idx, p)
        })
        .collect();
    Ok(LabeledBasis { dim: coeffs.dim, style: coeffs.style, domain: Domain::Unit, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{frac, rat};
    use crate::serendipity::{tensor_basis, theta2, theta3, to_unit, xi2};

    fn ints(rows: &[Vec<Rational>]) -> Vec<Vec<i64>> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        assert!(v.is_integer());
                        i64::try_from(v.to_integer()).unwrap()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn solver_examples() {
        let sys = LinSystem {
            lhs: vec![vec![rat(1), rat(2)], vec![rat(3), rat(4)]],
            rhs: vec![rat(5), rat(6)],
        };
        assert_eq!(solve_fraction_free(&sys).unwrap(), vec![rat(-4), frac(9, 2)]);
        let singular = LinSystem {
            lhs: vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]],
            rhs: vec![rat(0), rat(1)],
        };
        assert_eq!(solve_fraction_free(&singular), Err(Error::Singular));
    }

    #[test]
    fn b_rows() {
        let b = build_b().unwrap();
        assert!(b.left_block_is_identity());
        let right = ints(&b.right_block());
        assert_eq!(right[0], vec![-4, -2, -2, -1]);
        assert_eq!(right[8], vec![2, 1, 0, 0]);
    }

    #[test]
    fn h_rows() {
        let h = build_h().unwrap();
        assert!(h.left_block_is_identity());
        let right = ints(&h.right_block());
        assert_eq!(right[0], vec![-1, 1, 1, -1]);
        assert_eq!(right[4], vec![-1, 0, 1, 0]);
        assert!(right.iter().flatten().all(|v| (-1..=1).contains(v)));
    }

    #[test]
    fn column_system_recovers_b_prime_column() {
        let order = constraint_exponents(2);
        let col: PointIndex = "22".parse().unwrap();
        let x = solve_fraction_free(&column_system(2, Style::Bernstein, &order, &col)).unwrap();
        let expected: Vec<Rational> =
            [-4, -2, -2, -1, 2, 0, 1, 0, 2, 0, 1, 0].iter().map(|&v| rat(v)).collect();
        assert_eq!(x, expected);
    }

    #[test]
    fn synthesis_matches_closed_forms_2d() {
        let b = build_b().unwrap();
        let tensor = tensor_basis(2, Style::Bernstein, Domain::Unit);
        let synth = synthesize_basis(&b, &tensor).unwrap();
        assert_eq!(synth, to_unit(&xi2()));
        let expected = MultiPoly::parse(2, "(1-x)^3(1-y)^3").unwrap();
        let beta = |l: &str| tensor.by_label(l).clone();
        let xi11 = &(&(&(&beta("11") - &beta("22").scale(&rat(4))) - &beta("23").scale(&rat(2)))
            - &beta("32").scale(&rat(2)))
            - &beta("33");
        assert_eq!(synth.by_label("11"), &xi11);
        assert_eq!(beta("11"), expected);

        let h = build_h().unwrap();
        let psi = tensor_basis(2, Style::Hermite, Domain::Unit);
        let synth = synthesize_basis(&h, &psi).unwrap();
        assert_eq!(synth, to_unit(&theta2()));
        let p = |l: &str| psi.by_label(l).clone();
        let theta11 = &(&(&(&p("11") - &p("22")) + &p("23")) + &p("32")) - &p("33");
        assert_eq!(synth.by_label("11"), &theta11);
    }

    #[test]
    fn synthesis_rejects_wrong_domain() {
        let b = build_b().unwrap();
        let tensor = tensor_basis(2, Style::Bernstein, Domain::Sym);
        assert!(synthesize_basis(&b, &tensor).is_err());
    }

    #[test]
    fn constraints_hold_by_substitution() {
        for m in [build_b().unwrap(), build_h().unwrap()] {
            assert_eq!(first_constraint_violation(&m), None);
            assert!(corrections_confined_to_interior(&m));
        }
        let mut broken = build_b().unwrap();
        broken.entries[3][14] += rat(1);
        assert!(first_constraint_violation(&broken).is_some());
    }

    #[test]
    fn row_order_does_not_matter() {
        let mut order = constraint_exponents(2);
        order.reverse();
        order.swap(0, 5);
        assert_eq!(build_with_order(2, Style::Bernstein, &order).unwrap(), build_b().unwrap());
        assert_eq!(build_with_order(2, Style::Hermite, &order).unwrap(), build_h().unwrap());
    }

    /// Coefficient of `psi_idx` in `u` on `[0,1]^n`: per axis, digit 1 takes
    /// the value at 0, 2 the derivative at 0, 3 minus the derivative at 1 and
    /// 4 the value at 1.
    fn hermite_coordinate(u: &MultiPoly, idx: &PointIndex) -> Rational {
        let mut p = u.clone();
        let mut sign = rat(1);
        for (axis, &d) in idx.digits().iter().enumerate().rev() {
            if d == 2 || d == 3 {
                p = p.partial(axis).unwrap();
            }
            if d == 3 {
                sign = -sign;
            }
            let at = if d <= 2 { rat(0) } else { rat(1) };
            p = p.restrict(axis, &at).unwrap();
        }
        sign * p.coeff(&crate::ratpoly::Monomial::one(0))
    }

    #[test]
    fn hermite_matrices_match_functional_extraction() {
        for (m, basis) in [(build_h().unwrap(), to_unit(&theta2())), (build_w().unwrap(), to_unit(&theta3()))] {
            for (i, row) in m.rows.iter().enumerate() {
                let u = basis.get(row).unwrap();
                for (j, col) in m.cols.iter().enumerate() {
                    assert_eq!(m.entries[i][j], hermite_coordinate(u, col), "{row} {col}");
                }
            }
        }
        // The vertex rows of W carry +-2 on interior columns.
        let w = build_w().unwrap();
        let r: PointIndex = "111".parse().unwrap();
        let c: PointIndex = "222".parse().unwrap();
        assert_eq!(w.entry(&r, &c), Some(&rat(2)));
    }

    #[test]
    fn dump_format() {
        let text = build_b().unwrap().to_text();
        let first = text.lines().next().unwrap();
        assert!(first.ends_with("-4 -2 -2 -1"));
        assert_eq!(first.split(' ').count(), 16);
        assert_eq!(text.lines().count(), 12);
    }
}
