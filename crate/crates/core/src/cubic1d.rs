//! Univariate cubic bases: the Bernstein-like family `[β]` and the Hermite
//! family `[ψ]`, the change of basis between them, and the tables of
//! coefficients that reproduce monomials.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratpoly::{rat, AffineMap1D, MultiPoly, Rational};

/// Which univariate cubic family a [`Basis1D`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind1D {
    /// `(1-x)^3, (1-x)^2 x, (1-x) x^2, x^3`. The classical Bernstein basis is
    /// this with the middle two functions multiplied by 3.
    BernsteinLike,
    /// `1-3x^2+2x^3, x-2x^2+x^3, x^2-x^3, 3x^2-2x^3`.
    Hermite,
}

/// Four cubic polynomials in one variable on the interval `domain`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis1D {
    pub functions: [MultiPoly; 4],
    pub kind: Kind1D,
    pub domain: (Rational, Rational),
    /// Functions 2 and 3 carry the interval-width factor that keeps their
    /// coefficients equal to endpoint derivatives.
    pub derivative_scaled: bool,
}

impl Basis1D {
    /// `sum_i coeffs[i] * functions[i]`.
    pub fn combine(&self, coeffs: &[Rational; 4]) -> MultiPoly {
        self.functions
            .iter()
            .zip(coeffs)
            .map(|(f, c)| f.scale(c))
            .sum()
    }
}

fn unit_interval() -> (Rational, Rational) {
    (Rational::zero(), Rational::one())
}

fn univariate(src: &str) -> MultiPoly {
    MultiPoly::parse(1, src).expect("built-in basis expression")
}

pub fn bernstein_like() -> Basis1D {
    Basis1D {
        functions: ["(1-x)^3", "(1-x)^2 x", "(1-x) x^2", "x^3"].map(univariate),
        kind: Kind1D::BernsteinLike,
        domain: unit_interval(),
        derivative_scaled: false,
    }
}

pub fn hermite() -> Basis1D {
    Basis1D {
        functions: ["1 - 3x^2 + 2x^3", "x - 2x^2 + x^3", "x^2 - x^3", "3x^2 - 2x^3"]
            .map(univariate),
        kind: Kind1D::Hermite,
        domain: unit_interval(),
        derivative_scaled: false,
    }
}

/// Univariate basis of the requested kind on `[0,1]`.
pub fn basis(kind: Kind1D) -> Basis1D {
    match kind {
        Kind1D::BernsteinLike => bernstein_like(),
        Kind1D::Hermite => hermite(),
    }
}

/// Exact 4x4 rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix4(pub [[Rational; 4]; 4]);

impl Matrix4 {
    pub fn from_ints(rows: [[i64; 4]; 4]) -> Self {
        Matrix4(rows.map(|r| r.map(rat)))
    }

    pub fn identity() -> Self {
        Matrix4::from_ints([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.0[row][col]
    }

    pub fn mul(&self, other: &Matrix4) -> Matrix4 {
        Matrix4(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..4).map(|k| &self.0[i][k] * &other.0[k][j]).sum())
        }))
    }

    /// Applies the matrix to a column of four polynomials.
    pub fn apply(&self, polys: &[MultiPoly; 4]) -> [MultiPoly; 4] {
        std::array::from_fn(|i| (0..4).map(|k| polys[k].scale(&self.0[i][k])).sum())
    }
}

/// The matrix `V` with `[β] = V [ψ]`, and its inverse.
pub fn matrix_v() -> (Matrix4, Matrix4) {
    let v = Matrix4::from_ints([[1, -3, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, -3, 1]]);
    let v_inv = Matrix4::from_ints([[1, 3, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 3, 1]]);
    (v, v_inv)
}

/// `C(n, k)`, zero whenever `k < 0` or `k > n` (including negative `n`).
pub fn binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Weight of `β_i` in the expansion of `x^r`: `C(3-r, 4-i)`. `i` is 1-based.
pub fn bernstein_weight(r: u32, i: u8) -> Rational {
    rat(binomial(3 - r as i64, 4 - i as i64))
}

/// `ε_{r,i} = sum_a C(3-r, 4-a) v_{ai}`: weight of `ψ_i` in the expansion of `x^r`.
///
/// `r` ranges over `0..=3` and `i` over `1..=4`.
pub fn eps(r: u32, i: u8) -> Result<Rational> {
    if r > 3 {
        return Err(Error::IndexOutOfRange { name: "r" });
    }
    if !(1..=4).contains(&i) {
        return Err(Error::IndexOutOfRange { name: "i" });
    }
    let (v, _) = matrix_v();
    Ok((1..=4u8)
        .map(|a| bernstein_weight(r, a) * v.entry(a as usize - 1, i as usize - 1))
        .sum())
}

/// All sixteen `ε_{r,i}`, indexed `[r][i-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsTable(pub [[Rational; 4]; 4]);

impl EpsTable {
    pub fn new() -> Self {
        EpsTable(std::array::from_fn(|r| {
            std::array::from_fn(|i| eps(r as u32, i as u8 + 1).expect("in range"))
        }))
    }

    pub fn get(&self, r: u32, i: u8) -> &Rational {
        &self.0[r as usize][i as usize - 1]
    }
}

impl Default for EpsTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Weight of function `i` (1-based) of a basis of `kind` in the expansion of `x^r` on `[0,1]`.
pub fn reproduction_weight(kind: Kind1D, r: u32, i: u8) -> Rational {
    match kind {
        Kind1D::BernsteinLike => bernstein_weight(r, i),
        Kind1D::Hermite => eps(r, i).expect("reproduction index in range"),
    }
}

/// The combination of `basis` that should equal `x^r`.
pub fn reproduce_monomial(basis: &Basis1D, r: u32) -> Result<MultiPoly> {
    if r > 3 {
        return Err(Error::IndexOutOfRange { name: "r" });
    }
    let coeffs = std::array::from_fn(|i| reproduction_weight(basis.kind, r, i as u8 + 1));
    Ok(basis.combine(&coeffs))
}

/// Moves `basis` from its current interval onto `[a, b]`.
///
/// With `derivative_preserving` set, Hermite functions 2 and 3 are also
/// multiplied by the ratio of the new width to the old one.
pub fn scale_to_interval(
    basis: &Basis1D,
    a: &Rational,
    b: &Rational,
    derivative_preserving: bool,
) -> Result<Basis1D> {
    if a == b {
        return Err(Error::DegenerateInterval);
    }
    let (c, d) = &basis.domain;
    let to_old = AffineMap1D::between(a, b, c, d)?;
    let mut functions = basis.functions.clone();
    for f in functions.iter_mut() {
        *f = f.substitute_affine(0, &to_old)?;
    }
    let rescale = derivative_preserving && basis.kind == Kind1D::Hermite;
    if rescale {
        let ratio = (b - a) / (d - c);
        functions[1] = functions[1].scale(&ratio);
        functions[2] = functions[2].scale(&ratio);
    }
    Ok(Basis1D {
        functions,
        kind: basis.kind,
        domain: (a.clone(), b.clone()),
        derivative_scaled: rescale,
    })
}

/// Coefficients of `u` in the Hermite basis moved to `[a, b]` by plain
/// substitution: `(u(a), (b-a) u'(a), -(b-a) u'(b), u(b))`.
pub fn hermite_interpolate(u: &MultiPoly, a: &Rational, b: &Rational) -> Result<[Rational; 4]> {
    if u.nvars() != 1 || u.total_degree().unwrap_or(0) > 3 {
        return Err(Error::NotCubic);
    }
    if a == b {
        return Err(Error::DegenerateInterval);
    }
    let du = u.partial(0)?;
    let width = b - a;
    let at = |p: &MultiPoly, x: &Rational| p.eval(std::slice::from_ref(x));
    Ok([
        at(u, a)?,
        &width * at(&du, a)?,
        -(&width * at(&du, b)?),
        at(u, b)?,
    ])
}
