//! Fraction-free (Bareiss) elimination over exact rationals.
//!
//! Rows are first scaled to integers by the lcm of their denominators, then
//! eliminated with exact integer divisions, so intermediate entries stay
//! integral and bounded by minors of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratpoly::Rational;

/// Scales a rational row to integers; returns the row and the scale factor used.
fn integer_row(row: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let lcm = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints = row
        .iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect();
    (ints, lcm)
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// Column of the pivot for each eliminated row.
    pivots: Vec<usize>,
    swaps: usize,
}

/// Bareiss elimination of the first `ncols` columns; trailing columns ride along.
fn eliminate(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let nrows = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in (c + 1)..width {
                let v = &row[j] * &pivot_row[c] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        // Columns before `c` in the lower rows are already zero; rows skipped by
        // a missing pivot keep the Bareiss invariant since no division happened.
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { rows: a, pivots, swaps }
}

/// Exact determinant of a square rational matrix.
pub fn determinant(m: &[Vec<Rational>]) -> Result<Rational> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Shape("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let (ints, s) = integer_row(row);
            scale *= s;
            ints
        })
        .collect();
    let e = eliminate(rows, n);
    if e.pivots.len() < n || e.pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return Ok(Rational::zero());
    }
    let mut det = e.rows[n - 1][n - 1].clone();
    if e.swaps % 2 == 1 {
        det = -det;
    }
    Ok(Rational::new(det, scale))
}

/// Exact rank of a rational matrix.
pub fn rank(m: &[Vec<Rational>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let rows = m.iter().map(|row| integer_row(row).0).collect();
    eliminate(rows, ncols).pivots.len()
}

/// Solves `lhs * X = rhs` for several right-hand sides at once.
///
/// `rhs[k]` is the k-th right-hand side vector; the result is indexed the same way.
pub fn solve_many(lhs: &[Vec<Rational>], rhs: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = lhs.len();
    if lhs.iter().any(|row| row.len() != n) {
        return Err(Error::Shape("system matrix is not square".into()));
    }
    if rhs.iter().any(|b| b.len() != n) {
        return Err(Error::Shape("right-hand side length differs from system size".into()));
    }
    let k = rhs.len();
    let aug: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = lhs[i].clone();
            row.extend(rhs.iter().map(|b| b[i].clone()));
            integer_row(&row).0
        })
        .collect();
    let e = eliminate(aug, n);
    if e.pivots.len() < n {
        return Err(Error::Singular);
    }
    let u = e.rows;
    let mut out = vec![vec![Rational::zero(); n]; k];
    for (col, x) in out.iter_mut().enumerate() {
        for i in (0..n).rev() {
            let mut acc = Rational::from_integer(u[i][n + col].clone());
            for j in (i + 1)..n {
                if !u[i][j].is_zero() {
                    acc -= Rational::from_integer(u[i][j].clone()) * &x[j];
                }
            }
            x[i] = acc / Rational::from_integer(u[i][i].clone());
        }
    }
    Ok(out)
}

/// Solves a single square system exactly.
pub fn solve(lhs: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    Ok(solve_many(lhs, &[rhs.to_vec()])?.pop().expect("one right-hand side"))
}

/// `m * v` exactly.
pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
