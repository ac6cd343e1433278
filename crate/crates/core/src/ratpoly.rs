//! Exact multivariate polynomials with rational coefficients in up to three
//! variables.
//!
//! Everything symbolic in this crate is built on [`MultiPoly`]. Coefficients are
//! [`Rational`] (arbitrary precision), so every identity is checked without
//! rounding.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number; always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Maximum number of variables a polynomial may have.
pub const MAX_VARS: usize = 3;

const VAR_NAMES: [char; MAX_VARS] = ['x', 'y', 'z'];

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den` as a [`Rational`].
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A monomial `x^a y^b z^c`, stored as a dense exponent tuple.
///
/// Ordering is graded: lower total degree first, and within a degree the
/// lexicographically larger exponent tuple first (`x` before `y` before `z`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: [u32; MAX_VARS],
    nvars: u8,
}

impl Monomial {
    /// Panics if more than [`MAX_VARS`] exponents are given.
    pub fn new(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables supported");
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial { exps: e, nvars: exps.len() as u8 }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(&vec![0; nvars])
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps[..self.nvars()]
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents().iter().sum()
    }

    /// Total degree ignoring variables that appear to the first power.
    pub fn superlinear_degree(&self) -> u32 {
        let linear = self.exponents().iter().filter(|&&e| e == 1).count() as u32;
        self.total_degree() - linear
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e += o;
        }
        Monomial { exps, nvars: self.nvars }
    }

    fn without(&self, var: usize) -> Monomial {
        let mut exps: Vec<u32> = self.exponents().to_vec();
        exps.remove(var);
        Monomial::new(&exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.exponents().cmp(self.exponents()))
            .then_with(|| self.nvars.cmp(&other.nvars))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", VAR_NAMES[i])?;
            } else {
                write!(f, "{}^{}", VAR_NAMES[i], e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Invertible affine map `x -> scale * x + shift` on a single variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap1D {
    scale: Rational,
    shift: Rational,
}

impl AffineMap1D {
    pub fn new(scale: Rational, shift: Rational) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::SingularAffineMap);
        }
        Ok(AffineMap1D { scale, shift })
    }

    /// The map taking `[a, b]` onto `[c, d]` with `a -> c` and `b -> d`.
    pub fn between(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<Self> {
        if a == b || c == d {
            return Err(Error::DegenerateInterval);
        }
        let scale = (d - c) / (b - a);
        let shift = c - &scale * a;
        AffineMap1D::new(scale, shift)
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        &self.scale * x + &self.shift
    }

    pub fn inverse(&self) -> AffineMap1D {
        let scale = self.scale.recip();
        let shift = -(&self.shift * &scale);
        AffineMap1D { scale, shift }
    }
}

/// Exact polynomial in `nvars` variables (`nvars <= 3`).
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rational::one())
    }

    /// The coordinate function for variable `var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable {var} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[var] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.add_term(Monomial::new(&exps), Rational::one());
        p
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = MultiPoly::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; like terms are merged.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial variable count mismatch");
            p.add_term(m, c);
        }
        p
    }

    /// Parses expressions such as `(1-x)(1-y)^2(y+1)/8` or `-2 + x^2 - 3*x*y`.
    ///
    /// Supported syntax: integers, the variables `x`, `y`, `z`, binary `+ - * /`,
    /// unary minus, `^` with a non-negative integer exponent, parentheses, and
    /// implicit multiplication by juxtaposition. Division is only allowed by a
    /// nonzero constant.
    pub fn parse(nvars: usize, src: &str) -> Result<Self> {
        parse::Parser::new(nvars, src).parse()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum total degree over all terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Maximum exponent of `var`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponents()[var]).max()
    }

    /// Largest superlinear degree of any term; `None` for the zero polynomial.
    pub fn max_superlinear_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::superlinear_degree).max()
    }

    fn check_same(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    fn check_var(&self, var: usize) -> Result<()> {
        if var >= self.nvars {
            return Err(Error::VarOutOfRange { var, nvars: self.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::PointLength { expected: self.nvars, got: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replaces variable `var` by `m(var)`.
    pub fn substitute_affine(&self, var: usize, m: &AffineMap1D) -> Result<MultiPoly> {
        self.check_var(var)?;
        let lin = &MultiPoly::var(self.nvars, var).scale(m.scale())
            + &MultiPoly::constant(self.nvars, m.shift().clone());
        let maxdeg = self.degree_in(var).unwrap_or(0);
        let powers: Vec<MultiPoly> = std::iter::successors(Some(MultiPoly::one(self.nvars)), |p| {
            Some(p * &lin)
        })
        .take(maxdeg as usize + 1)
        .collect();
        let mut out = MultiPoly::zero(self.nvars);
        for (mono, c) in &self.terms {
            let e = mono.exponents()[var];
            let mut rest = mono.exps;
            rest[var] = 0;
            let rest = MultiPoly::monomial(Monomial { exps: rest, nvars: mono.nvars }, c.clone());
            out = &out + &(&rest * &powers[e as usize]);
        }
        Ok(out)
    }

    /// Applies `maps[i]` to variable `i` simultaneously.
    pub fn substitute_all(&self, maps: &[AffineMap1D]) -> Result<MultiPoly> {
        if maps.len() != self.nvars {
            return Err(Error::PointLength { expected: self.nvars, got: maps.len() });
        }
        // Each substitution leaves the other variables untouched, so they commute.
        maps.iter()
            .enumerate()
            .try_fold(self.clone(), |p, (v, m)| p.substitute_affine(v, m))
    }

    pub fn partial(&self, var: usize) -> Result<MultiPoly> {
        self.check_var(var)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps;
            exps[var] -= 1;
            out.add_term(Monomial { exps, nvars: m.nvars }, c * rat(e as i64));
        }
        Ok(out)
    }

    /// Pins `var` to `value`, yielding a polynomial in the remaining `nvars - 1` variables.
    pub fn restrict(&self, var: usize, value: &Rational) -> Result<MultiPoly> {
        self.check_var(var)?;
        let mut out = MultiPoly::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let e = m.exponents()[var] as usize;
            out.add_term(m.without(var), c * num_traits::pow(value.clone(), e));
        }
        Ok(out)
    }

    /// Exact integral over the box `prod [lo_i, hi_i]`.
    pub fn integrate_box(&self, bounds: &[(Rational, Rational)]) -> Result<Rational> {
        if bounds.len() != self.nvars {
            return Err(Error::PointLength { expected: self.nvars, got: bounds.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for ((lo, hi), &e) in bounds.iter().zip(m.exponents()) {
                let k = e as usize + 1;
                t *= (num_traits::pow(hi.clone(), k) - num_traits::pow(lo.clone(), k))
                    / rat(k as i64);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Embeds into a space with more variables; existing variable `i` becomes `slots[i]`.
    pub fn embed(&self, nvars: usize, slots: &[usize]) -> MultiPoly {
        assert_eq!(slots.len(), self.nvars);
        let mut out = MultiPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0; nvars];
            for (i, &s) in slots.iter().enumerate() {
                exps[s] = m.exponents()[i];
            }
            out.add_term(Monomial::new(&exps), c.clone());
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomial variable counts differ")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomial variable counts differ")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomial variable counts differ")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&rat(-1))
    }
}

impl std::iter::Sum for MultiPoly {
    /// Panics on an empty iterator, since the variable count would be unknown.
    fn sum<I: Iterator<Item = MultiPoly>>(mut iter: I) -> MultiPoly {
        let first = iter.next().expect("sum of an empty polynomial sequence");
        iter.fold(first, |acc, p| &acc + &p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = m.total_degree() == 0;
            if is_const {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Superlinear degree of a monomial; free-function form of
/// [`Monomial::superlinear_degree`].
pub fn superlinear_degree(m: &Monomial) -> u32 {
    m.superlinear_degree()
}

mod parse {
    use super::*;

    pub(super) struct Parser<'a> {
        nvars: usize,
        chars: std::iter::Peekable<std::str::CharIndices<'a>>,
        src: &'a str,
    }

    impl<'a> Parser<'a> {
        pub(super) fn new(nvars: usize, src: &'a str) -> Self {
            Parser { nvars, chars: src.char_indices().peekable(), src }
        }

        fn err(&mut self, msg: &str) -> Error {
            let pos = self.chars.peek().map(|&(i, _)| i).unwrap_or(self.src.len());
            Error::Parse { pos, msg: msg.to_string() }
        }

        fn skip_ws(&mut self) {
            while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
                self.chars.next();
            }
        }

        fn peek(&mut self) -> Option<char> {
            self.skip_ws();
            self.chars.peek().map(|&(_, c)| c)
        }

        pub(super) fn parse(mut self) -> Result<MultiPoly> {
            let p = self.expr()?;
            if self.peek().is_some() {
                return Err(self.err("unexpected trailing input"));
            }
            Ok(p)
        }

        // expr := ['-'] term (('+'|'-') term)*
        fn expr(&mut self) -> Result<MultiPoly> {
            let mut acc = if self.peek() == Some('-') {
                self.chars.next();
                -&self.term()?
            } else {
                self.term()?
            };
            loop {
                match self.peek() {
                    Some('+') => {
                        self.chars.next();
                        acc = &acc + &self.term()?;
                    }
                    Some('-') => {
                        self.chars.next();
                        acc = &acc - &self.term()?;
                    }
                    _ => return Ok(acc),
                }
            }
        }

        // term := power (('*'|'/'|<juxtaposition>) power)*
        fn term(&mut self) -> Result<MultiPoly> {
            let mut acc = self.power()?;
            loop {
                match self.peek() {
                    Some('*') => {
                        self.chars.next();
                        acc = &acc * &self.power()?;
                    }
                    Some('/') => {
                        self.chars.next();
                        let d = self.power()?;
                        let c = match (d.total_degree(), d.terms.values().next()) {
                            (Some(0), Some(c)) => c.clone(),
                            _ => return Err(self.err("division by a non-constant or zero")),
                        };
                        acc = acc.scale(&c.recip());
                    }
                    Some(c) if c == '(' || c.is_ascii_alphanumeric() => {
                        acc = &acc * &self.power()?;
                    }
                    _ => return Ok(acc),
                }
            }
        }

        fn power(&mut self) -> Result<MultiPoly> {
            let base = self.atom()?;
            if self.peek() == Some('^') {
                self.chars.next();
                self.skip_ws();
                let n = self.integer()?;
                let n: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                return Ok(base.pow(n));
            }
            Ok(base)
        }

        fn integer(&mut self) -> Result<BigInt> {
            let mut digits = String::new();
            while let Some(&(_, c)) = self.chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    self.chars.next();
                } else {
                    break;
                }
            }
            if digits.is_empty() {
                return Err(self.err("expected an integer"));
            }
            Ok(digits.parse().expect("ascii digits"))
        }

        fn atom(&mut self) -> Result<MultiPoly> {
            match self.peek() {
                Some('(') => {
                    self.chars.next();
                    let inner = self.expr()?;
                    if self.peek() != Some(')') {
                        return Err(self.err("expected ')'"));
                    }
                    self.chars.next();
                    Ok(inner)
                }
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    Ok(MultiPoly::constant(self.nvars, Rational::from_integer(n)))
                }
                Some(c) => match VAR_NAMES.iter().position(|&v| v == c) {
                    Some(i) if i < self.nvars => {
                        self.chars.next();
                        Ok(MultiPoly::var(self.nvars, i))
                    }
                    _ => Err(self.err("unknown symbol")),
                },
                None => Err(self.err("unexpected end of input")),
            }
        }
    }
}
