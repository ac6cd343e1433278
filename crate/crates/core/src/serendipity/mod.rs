//! Domain-point indices, the closed-form cubic serendipity bases on `[-1,1]^n`
//! (`n = 2, 3`), tensor-product bases, and conversions between reference cells.
//!
//! Index digits run over `1..=4`: digits 1 and 4 sit at the ends of an axis, 2
//! and 3 at the interior cubic points. A basis function labelled `ℓmn` is
//! associated with the corresponding domain point of the cube.

mod forms;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::cubic1d::{self, Kind1D};
use crate::error::{Error, Result};
use crate::exact;
use crate::ratpoly::{frac, rat, AffineMap1D, Monomial, MultiPoly, Rational};

/// Label of a domain point: two or three digits from `1..=4`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointIndex {
    digits: [u8; 3],
    len: u8,
}

impl PointIndex {
    pub fn new(digits: &[u8]) -> Result<Self> {
        if !(2..=3).contains(&digits.len()) || digits.iter().any(|d| !(1..=4).contains(d)) {
            return Err(Error::IndexOutOfRange { name: "domain point index" });
        }
        let mut d = [0; 3];
        d[..digits.len()].copy_from_slice(digits);
        Ok(PointIndex { digits: d, len: digits.len() as u8 })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits[..self.len as usize]
    }

    pub fn dim(&self) -> usize {
        self.len as usize
    }

    /// Number of digits in `{2, 3}`, i.e. axes along which the point is interior.
    pub fn interior_count(&self) -> usize {
        self.digits().iter().filter(|&&d| d == 2 || d == 3).count()
    }

    /// Index with the digit at `axis` removed.
    pub fn drop_axis(&self, axis: usize) -> PointIndex {
        let mut d = self.digits().to_vec();
        d.remove(axis);
        PointIndex::new(&d).expect("dropping an axis keeps digits valid")
    }
}

impl fmt::Display for PointIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.digits() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PointIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointIndex({self})")
    }
}

impl FromStr for PointIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let digits: Option<Vec<u8>> = s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        PointIndex::new(&digits.ok_or(Error::IndexOutOfRange { name: "domain point index" })?)
    }
}

/// Geometric class of a domain point.
///
/// In 2D the classes are vertex, edge and interior (the paper-style `D` set);
/// in 3D they are vertex, edge, face and interior.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexClass {
    Vertex,
    Edge,
    Face,
    Interior,
}

pub fn classify_index(idx: &PointIndex) -> IndexClass {
    match (idx.dim(), idx.interior_count()) {
        (_, 0) => IndexClass::Vertex,
        (_, 1) => IndexClass::Edge,
        (2, 2) => IndexClass::Interior,
        (3, 2) => IndexClass::Face,
        _ => IndexClass::Interior,
    }
}

fn all_indices(dim: usize) -> Vec<PointIndex> {
    let mut out = Vec::new();
    let mut digits = vec![1u8; dim];
    loop {
        out.push(PointIndex::new(&digits).expect("valid digits"));
        let mut k = dim;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if digits[k] < 4 {
                digits[k] += 1;
                break;
            }
            digits[k] = 1;
        }
    }
}

fn indices_of(dim: usize, class: IndexClass) -> Vec<PointIndex> {
    if dim == 2 && class == IndexClass::Edge {
        // The square's edge block is not lexicographic: the two points on x = -1,
        // then x = +1, then y = -1, then y = +1.
        return ["12", "13", "42", "43", "21", "31", "24", "34"]
            .iter()
            .map(|s| s.parse().expect("valid index"))
            .collect();
    }
    all_indices(dim)
        .into_iter()
        .filter(|i| classify_index(i) == class)
        .collect()
}

/// Indices of the serendipity basis, vertices first, then edges.
pub fn serendipity_indices(dim: usize) -> Vec<PointIndex> {
    assert!(dim == 2 || dim == 3, "dimension must be 2 or 3");
    let mut out = indices_of(dim, IndexClass::Vertex);
    out.extend(indices_of(dim, IndexClass::Edge));
    out
}

/// All `4^dim` tensor-product indices: vertices, edges, (faces,) interior.
pub fn tensor_indices(dim: usize) -> Vec<PointIndex> {
    let mut out = serendipity_indices(dim);
    if dim == 3 {
        out.extend(indices_of(dim, IndexClass::Face));
    }
    out.extend(indices_of(dim, IndexClass::Interior));
    out
}

/// Monomials spanning the cubic serendipity space, grouped as constant,
/// linear, quadratic, cubic, then superlinear cubic.
pub fn monomial_span_s3(n: usize) -> Vec<Monomial> {
    let exps: &[&[u32]] = match n {
        2 => &[
            &[0, 0],
            &[1, 0], &[0, 1],
            &[2, 0], &[0, 2], &[1, 1],
            &[3, 0], &[0, 3], &[2, 1], &[1, 2],
            &[3, 1], &[1, 3],
        ],
        3 => &[
            &[0, 0, 0],
            &[1, 0, 0], &[0, 1, 0], &[0, 0, 1],
            &[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1],
            &[3, 0, 0], &[0, 3, 0], &[0, 0, 3],
            &[2, 1, 0], &[2, 0, 1], &[1, 2, 0], &[0, 2, 1], &[1, 0, 2], &[0, 1, 2], &[1, 1, 1],
            &[3, 1, 0], &[3, 0, 1], &[0, 3, 1], &[1, 3, 0], &[1, 0, 3], &[0, 1, 3],
            &[2, 1, 1], &[1, 2, 1], &[1, 1, 2],
            &[3, 1, 1], &[1, 3, 1], &[1, 1, 3],
        ],
        _ => panic!("serendipity span only tabulated for n = 2, 3"),
    };
    exps.iter().map(|e| Monomial::new(e)).collect()
}

/// Polynomial space families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    /// Total degree at most `r`.
    P,
    /// Superlinear degree at most `r`.
    S,
    /// Degree at most `r` in each variable.
    Q,
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of the space of degree `r` on the `n`-cube, from its closed formula.
pub fn dim_formula(space: Space, r: u64, n: u64) -> u64 {
    match space {
        Space::P => binom(n + r, n),
        Space::S => (0..=n.min(r / 2))
            .map(|d| (1u64 << (n - d)) * binom(n, d) * binom(r - d, d))
            .sum(),
        Space::Q => (r + 1).pow(n as u32),
    }
}

/// Monomials in `n` variables belonging to `space` of degree `r`, by enumeration.
pub fn enumerate_monomials(space: Space, r: u32, n: usize) -> Vec<Monomial> {
    // Exponent 1 never raises the superlinear degree, so S_0 still contains x.
    let bound = if space == Space::S { r.max(1) } else { r };
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::new(&exps);
        let keep = match space {
            Space::P => m.total_degree() <= r,
            Space::S => m.superlinear_degree() <= r,
            Space::Q => true,
        };
        if keep {
            out.push(m);
        }
        let mut k = n;
        loop {
            if k == 0 {
                out.sort();
                return out;
            }
            k -= 1;
            if exps[k] < bound {
                exps[k] += 1;
                break;
            }
            exps[k] = 0;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Style {
    Bernstein,
    Hermite,
}

impl Style {
    pub fn kind_1d(self) -> Kind1D {
        match self {
            Style::Bernstein => Kind1D::BernsteinLike,
            Style::Hermite => Kind1D::Hermite,
        }
    }
}

/// Reference cell a basis lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    /// `[0,1]^n`
    Unit,
    /// `[-1,1]^n`
    Sym,
}

/// An ordered family of polynomials labelled by domain points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledBasis {
    pub dim: usize,
    pub style: Style,
    pub domain: Domain,
    pub entries: Vec<(PointIndex, MultiPoly)>,
}

impl LabeledBasis {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, idx: &PointIndex) -> Option<&MultiPoly> {
        self.entries.iter().find(|(i, _)| i == idx).map(|(_, p)| p)
    }

    /// Lookup by index string such as `"142"`. Panics on a missing entry.
    pub fn by_label(&self, label: &str) -> &MultiPoly {
        let idx: PointIndex = label.parse().expect("valid index label");
        self.get(&idx).unwrap_or_else(|| panic!("no basis entry {label}"))
    }

    pub fn indices(&self) -> impl Iterator<Item = &PointIndex> {
        self.entries.iter().map(|(i, _)| i)
    }

    pub fn polys(&self) -> impl Iterator<Item = &MultiPoly> {
        self.entries.iter().map(|(_, p)| p)
    }
}

fn from_forms(dim: usize, style: Style, forms: &[(&str, &str)]) -> LabeledBasis {
    let entries = forms
        .iter()
        .map(|(idx, src)| {
            let idx: PointIndex = idx.parse().expect("valid built-in index");
            let p = MultiPoly::parse(dim, src).expect("valid built-in closed form");
            (idx, p)
        })
        .collect();
    LabeledBasis { dim, style, domain: Domain::Sym, entries }
}

/// Bernstein-style serendipity basis on `[-1,1]^2` (12 functions).
pub fn xi2() -> LabeledBasis {
    from_forms(2, Style::Bernstein, &forms::XI2)
}

/// Hermite-style serendipity basis on `[-1,1]^2` (12 functions).
pub fn theta2() -> LabeledBasis {
    from_forms(2, Style::Hermite, &forms::THETA2)
}

/// Bernstein-style serendipity basis on `[-1,1]^3` (32 functions).
pub fn xi3() -> LabeledBasis {
    from_forms(3, Style::Bernstein, &forms::XI3)
}

/// Hermite-style serendipity basis on `[-1,1]^3` (32 functions).
pub fn theta3() -> LabeledBasis {
    from_forms(3, Style::Hermite, &forms::THETA3)
}

pub fn serendipity_basis(dim: usize, style: Style) -> LabeledBasis {
    match (dim, style) {
        (2, Style::Bernstein) => xi2(),
        (2, Style::Hermite) => theta2(),
        (3, Style::Bernstein) => xi3(),
        (3, Style::Hermite) => theta3(),
        _ => panic!("serendipity bases exist for dimension 2 and 3 only"),
    }
}

/// Factor applied to a Hermite-style function with label `idx` when moving
/// from `[-1,1]^n` to `[0,1]^n`: one half per interior digit.
fn hermite_unit_factor(idx: &PointIndex) -> Rational {
    frac(1, 1 << idx.interior_count())
}

fn convert(basis: &LabeledBasis, target: Domain) -> LabeledBasis {
    if basis.domain == target {
        return basis.clone();
    }
    // Substitution maps the target cell onto the current one.
    let (map, factor_pow): (AffineMap1D, i64) = match target {
        Domain::Unit => (AffineMap1D::new(rat(2), rat(-1)).expect("nonzero"), 1),
        Domain::Sym => (AffineMap1D::new(frac(1, 2), frac(1, 2)).expect("nonzero"), -1),
    };
    let maps = vec![map; basis.dim];
    let entries = basis
        .entries
        .iter()
        .map(|(idx, p)| {
            let mut q = p.substitute_all(&maps).expect("dimension matches");
            if basis.style == Style::Hermite {
                let f = hermite_unit_factor(idx);
                q = q.scale(&if factor_pow > 0 { f } else { f.recip() });
            }
            (*idx, q)
        })
        .collect();
    LabeledBasis { dim: basis.dim, style: basis.style, domain: target, entries }
}

/// Moves a basis onto `[0,1]^n`; Hermite-style functions use derivative-preserving scaling.
pub fn to_unit(basis: &LabeledBasis) -> LabeledBasis {
    convert(basis, Domain::Unit)
}

/// Moves a basis onto `[-1,1]^n`; Hermite-style functions use derivative-preserving scaling.
pub fn to_sym(basis: &LabeledBasis) -> LabeledBasis {
    convert(basis, Domain::Sym)
}

/// The full `4^dim` tensor-product basis of the chosen style, in tensor index order.
pub fn tensor_basis(dim: usize, style: Style, domain: Domain) -> LabeledBasis {
    let one_d = cubic1d::basis(style.kind_1d());
    let entries = tensor_indices(dim)
        .into_iter()
        .map(|idx| {
            let p = idx
                .digits()
                .iter()
                .enumerate()
                .map(|(axis, &d)| one_d.functions[d as usize - 1].embed(dim, &[axis]))
                .reduce(|a, b| &a * &b)
                .expect("at least two factors");
            (idx, p)
        })
        .collect();
    let unit = LabeledBasis { dim, style, domain: Domain::Unit, entries };
    convert(&unit, domain)
}

/// The tensor basis restricted to serendipity labels (vertices and edges).
pub fn tensor_vertex_edge_part(tensor: &LabeledBasis) -> LabeledBasis {
    let keep = serendipity_indices(tensor.dim);
    let entries = keep
        .iter()
        .map(|idx| (*idx, tensor.get(idx).expect("tensor basis has every index").clone()))
        .collect();
    LabeledBasis { entries, ..tensor.clone() }
}

/// A face of `[-1,1]^3`: the coordinate `axis` pinned to `-1` or `+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Face {
    pub axis: usize,
    pub positive: bool,
}

impl Face {
    pub fn all(dim: usize) -> Vec<Face> {
        (0..dim)
            .flat_map(|axis| [false, true].map(|positive| Face { axis, positive }))
            .collect()
    }

    pub fn value(&self) -> Rational {
        if self.positive {
            rat(1)
        } else {
            rat(-1)
        }
    }

    /// Digit of labels whose domain point lies on this face.
    pub fn digit(&self) -> u8 {
        if self.positive {
            4
        } else {
            1
        }
    }
}

/// Restricts a 3D basis on `[-1,1]^3` to a face and returns the surviving
/// entries, relabelled and ordered as a 2D serendipity basis.
///
/// Entries whose domain point is off the face must restrict to zero;
/// otherwise [`Error::NonzeroFaceTrace`] is returned.
pub fn restrict_to_face(basis3: &LabeledBasis, face: Face) -> Result<LabeledBasis> {
    if basis3.dim != 3 || basis3.domain != Domain::Sym {
        return Err(Error::Shape("face restriction needs a basis on [-1,1]^3".into()));
    }
    let mut survivors: HashMap<PointIndex, MultiPoly> = HashMap::new();
    for (idx, p) in &basis3.entries {
        let trace = p.restrict(face.axis, &face.value())?;
        if idx.digits()[face.axis] == face.digit() {
            survivors.insert(idx.drop_axis(face.axis), trace);
        } else if !trace.is_zero() {
            return Err(Error::NonzeroFaceTrace(idx.to_string()));
        }
    }
    let entries = serendipity_indices(2)
        .into_iter()
        .filter_map(|i| survivors.remove(&i).map(|p| (i, p)))
        .collect();
    Ok(LabeledBasis { dim: 2, style: basis3.style, domain: Domain::Sym, entries })
}

/// An edge of `[-1,1]^n`: coordinate `axis` free, every other coordinate pinned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub axis: usize,
    /// `(axis, value)` for each pinned coordinate, in axis order.
    pub fixed: Vec<(usize, i64)>,
}

impl Edge {
    /// Edges ordered lexicographically by (start vertex, end vertex), where the
    /// start vertex has the free coordinate at `-1`.
    pub fn all(dim: usize) -> Vec<Edge> {
        let mut edges: Vec<(Vec<i64>, Vec<i64>, Edge)> = Vec::new();
        for axis in 0..dim {
            let others: Vec<usize> = (0..dim).filter(|&a| a != axis).collect();
            for mask in 0..(1usize << others.len()) {
                let fixed: Vec<(usize, i64)> = others
                    .iter()
                    .enumerate()
                    .map(|(b, &a)| (a, if mask >> (others.len() - 1 - b) & 1 == 1 { 1 } else { -1 }))
                    .collect();
                let edge = Edge { axis, fixed };
                edges.push((edge.endpoint(-1), edge.endpoint(1), edge));
            }
        }
        edges.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        edges.into_iter().map(|(_, _, e)| e).collect()
    }

    fn endpoint(&self, t: i64) -> Vec<i64> {
        let mut v = vec![0; self.fixed.len() + 1];
        v[self.axis] = t;
        for &(a, val) in &self.fixed {
            v[a] = val;
        }
        v
    }

    pub fn start(&self) -> Vec<i64> {
        self.endpoint(-1)
    }

    pub fn end(&self) -> Vec<i64> {
        self.endpoint(1)
    }

    /// Restriction of `p` to this edge, as a univariate polynomial in the free coordinate.
    pub fn trace(&self, p: &MultiPoly) -> Result<MultiPoly> {
        // Pin from the highest axis down so lower axis numbers stay valid.
        let mut q = p.clone();
        for &(a, val) in self.fixed.iter().rev() {
            q = q.restrict(a, &rat(val))?;
        }
        Ok(q)
    }
}

/// Coefficients of `p` in the given monomial list, or `None` if `p` uses a
/// monomial outside the list.
pub fn coordinates(p: &MultiPoly, monomials: &[Monomial]) -> Option<Vec<Rational>> {
    let mut covered = 0;
    let coords = monomials
        .iter()
        .map(|m| {
            let c = p.coeff(m);
            if !c.is_zero() {
                covered += 1;
            }
            c
        })
        .collect();
    (covered == p.num_terms()).then_some(coords)
}

/// True iff the entries form a basis of the cubic serendipity space.
pub fn span_check(basis: &LabeledBasis) -> bool {
    let monos = monomial_span_s3(basis.dim);
    if basis.len() != monos.len() {
        return false;
    }
    let rows: Option<Vec<Vec<Rational>>> =
        basis.polys().map(|p| coordinates(p, &monos)).collect();
    match rows {
        Some(rows) => exact::rank(&rows) == monos.len(),
        None => false,
    }
}

/// Weight of the entry labelled `idx` in the expansion of the monomial with
/// exponents `exps` on `[0,1]^n`: the product of the univariate weights.
pub fn reproduction_weight(style: Style, exps: &[u32], idx: &PointIndex) -> Rational {
    exps.iter()
        .zip(idx.digits())
        .map(|(&r, &d)| cubic1d::reproduction_weight(style.kind_1d(), r, d))
        .fold(Rational::one(), |acc, w| acc * w)
}

/// `sum_idx weight(idx) * entry(idx)` for the monomial with exponents `exps`;
/// on `[0,1]^n` this should equal the monomial itself.
pub fn weighted_reproduction(basis: &LabeledBasis, exps: &[u32]) -> MultiPoly {
    basis
        .entries
        .iter()
        .map(|(idx, p)| p.scale(&reproduction_weight(basis.style, exps, idx)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(s: &str) -> PointIndex {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_index(&idx("14")), IndexClass::Vertex);
        assert_eq!(classify_index(&idx("124")), IndexClass::Edge);
        assert_eq!(classify_index(&idx("232")), IndexClass::Interior);
        assert_eq!(classify_index(&idx("23")), IndexClass::Interior);
        assert_eq!(classify_index(&idx("123")), IndexClass::Face);
        assert!("15".parse::<PointIndex>().is_err());
        assert!("1".parse::<PointIndex>().is_err());
    }

    #[test]
    fn partition_sizes() {
        let count = |dim, class| indices_of(dim, class).len();
        assert_eq!(
            [IndexClass::Vertex, IndexClass::Edge, IndexClass::Interior].map(|c| count(2, c)),
            [4, 8, 4]
        );
        assert_eq!(
            [IndexClass::Vertex, IndexClass::Edge, IndexClass::Face, IndexClass::Interior]
                .map(|c| count(3, c)),
            [8, 24, 24, 8]
        );
        assert_eq!(tensor_indices(2).len(), 16);
        assert_eq!(tensor_indices(3).len(), 64);
    }

    #[test]
    fn orderings_match_closed_form_tables() {
        assert_eq!(xi2().indices().copied().collect::<Vec<_>>(), serendipity_indices(2));
        assert_eq!(theta2().indices().copied().collect::<Vec<_>>(), serendipity_indices(2));
        assert_eq!(xi3().indices().copied().collect::<Vec<_>>(), serendipity_indices(3));
        assert_eq!(theta3().indices().copied().collect::<Vec<_>>(), serendipity_indices(3));
        let t2: Vec<String> = tensor_indices(2).iter().map(|i| i.to_string()).collect();
        assert_eq!(&t2[12..], ["22", "23", "32", "33"]);
        let t3 = tensor_indices(3);
        assert_eq!(t3[32].to_string(), "122");
        assert_eq!(t3[55].to_string(), "433");
        assert_eq!(t3[56].to_string(), "222");
    }

    #[test]
    fn span_monomials() {
        let m2 = monomial_span_s3(2);
        assert_eq!(m2.len(), 12);
        assert!(m2.contains(&Monomial::new(&[3, 1])));
        assert!(m2.contains(&Monomial::new(&[1, 3])));
        assert!(!m2.contains(&Monomial::new(&[2, 2])));
        let m3 = monomial_span_s3(3);
        assert_eq!(m3.len(), 32);
        for e in [[3, 1, 1], [1, 3, 1], [1, 1, 3]] {
            assert!(m3.contains(&Monomial::new(&e)));
        }
        for m in m2.iter().chain(&m3) {
            assert!(m.superlinear_degree() <= 3);
        }
        let mut sorted = m3.clone();
        sorted.sort();
        assert_eq!(sorted, enumerate_monomials(Space::S, 3, 3));
    }

    #[test]
    fn dimension_formulas() {
        assert_eq!(dim_formula(Space::S, 3, 2), 12);
        assert_eq!(dim_formula(Space::S, 3, 3), 32);
        assert_eq!(dim_formula(Space::Q, 3, 3), 64);
        assert_eq!(dim_formula(Space::P, 3, 2), 10);
        assert_eq!(dim_formula(Space::P, 3, 3), 20);
        for n in 1..=3 {
            for r in 0..=5u32 {
                for space in [Space::P, Space::S, Space::Q] {
                    assert_eq!(
                        dim_formula(space, r as u64, n as u64),
                        enumerate_monomials(space, r, n).len() as u64,
                        "{space:?} r={r} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let p2 = |s| MultiPoly::parse(2, s).unwrap();
        let p3 = |s| MultiPoly::parse(3, s).unwrap();
        assert_eq!(xi2().by_label("11"), &p2("(1-x)(1-y)(-2-2x+x^2-2y+y^2)/16"));
        assert_eq!(theta2().by_label("12"), &p2("(1-x)(1-y)^2(y+1)/8"));
        assert_eq!(
            xi3().by_label("111"),
            &p3("(1-x)(1-y)(1-z)(-5-2x+x^2-2y+y^2-2z+z^2)/32")
        );
    }

    #[test]
    fn tensor_examples() {
        let b = tensor_basis(2, Style::Bernstein, Domain::Unit);
        assert_eq!(b.by_label("11").eval(&[rat(0), rat(0)]).unwrap(), rat(1));
        let h_sym = tensor_basis(2, Style::Hermite, Domain::Sym);
        let h_unit = tensor_basis(2, Style::Hermite, Domain::Unit);
        let to_unit = AffineMap1D::new(frac(1, 2), frac(1, 2)).unwrap();
        let plain = |p: &MultiPoly| p.substitute_all(&[to_unit.clone(), to_unit.clone()]).unwrap();
        assert_eq!(h_sym.by_label("11"), &plain(h_unit.by_label("11")));
        assert_eq!(h_sym.by_label("21"), &plain(h_unit.by_label("21")).scale(&rat(2)));
        assert_eq!(h_sym.by_label("23"), &plain(h_unit.by_label("23")).scale(&rat(4)));

        let b3 = tensor_basis(3, Style::Bernstein, Domain::Sym);
        let expected = MultiPoly::parse(3, "((1-x)/2)^2 ((x+1)/2) ((1-y)/2)^3 ((z+1)/2)^3").unwrap();
        assert_eq!(b3.by_label("214"), &expected);
    }

    #[test]
    fn unit_round_trip() {
        for basis in [xi2(), theta2(), xi3()] {
            assert_eq!(to_sym(&to_unit(&basis)), basis);
        }
    }

    #[test]
    fn face_restriction_examples() {
        let xi3 = xi3();
        let bottom = restrict_to_face(&xi3, Face { axis: 2, positive: false }).unwrap();
        assert_eq!(bottom, xi2());
        assert_eq!(
            xi3.by_label("142").restrict(1, &rat(1)).unwrap(),
            *xi2().by_label("12")
        );
        let left = restrict_to_face(&theta3(), Face { axis: 0, positive: false }).unwrap();
        assert_eq!(left, theta2());
    }

    #[test]
    fn edges_of_cells() {
        let e2 = Edge::all(2);
        assert_eq!(e2.len(), 4);
        assert_eq!((e2[0].axis, e2[0].start()), (1, vec![-1, -1]));
        assert_eq!((e2[1].axis, e2[1].start()), (0, vec![-1, -1]));
        assert_eq!(Edge::all(3).len(), 12);
        let p = MultiPoly::parse(3, "x + 2y + 3z").unwrap();
        let e = Edge { axis: 1, fixed: vec![(0, 1), (2, -1)] };
        assert_eq!(e.trace(&p).unwrap(), MultiPoly::parse(1, "2x - 2").unwrap());
    }

    #[test]
    fn span_examples() {
        assert!(span_check(&xi2()));
        assert!(span_check(&theta3()));
        let mut broken = xi2();
        let dup = broken.by_label("34").clone();
        let pos = broken.indices().position(|i| i.to_string() == "24").unwrap();
        broken.entries[pos].1 = dup;
        assert!(!span_check(&broken));
        let tensor = tensor_basis(2, Style::Bernstein, Domain::Sym);
        assert!(!span_check(&tensor_vertex_edge_part(&tensor)));
    }

    #[test]
    fn not_a_partition_of_unity() {
        for basis in [xi2(), xi3(), theta2(), theta3()] {
            let sum: MultiPoly = basis.polys().cloned().sum();
            assert_ne!(sum, MultiPoly::one(basis.dim));
        }
    }

    #[test]
    fn hermite_vertex_functions_sum_to_one() {
        let t = theta2();
        let sum: MultiPoly = ["11", "14", "41", "44"].iter().map(|l| t.by_label(l).clone()).sum();
        assert_eq!(sum, MultiPoly::one(2));
    }

    #[test]
    fn weighted_reproduction_in_2d() {
        for basis in [to_unit(&xi2()), to_unit(&theta2())] {
            for m in monomial_span_s3(2) {
                assert_eq!(
                    weighted_reproduction(&basis, m.exponents()),
                    MultiPoly::monomial(m, rat(1)),
                    "{:?} {m}",
                    basis.style
                );
            }
        }
    }

    #[test]
    fn entries_stay_in_serendipity_span() {
        for basis in [xi2(), theta2(), xi3(), theta3()] {
            for p in basis.polys() {
                assert!(p.max_superlinear_degree().unwrap() <= 3);
            }
        }
    }
}
