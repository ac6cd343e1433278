//! The exact verification battery. Each suite either passes or reports the
//! first counterexample it met (an index, a monomial or a matrix entry).

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffsolver::{
    self, constraint_exponents, corrections_confined_to_interior, first_constraint_violation,
    synthesize_basis, CoeffMatrix,
};
use crate::cubic1d::{self, hermite_interpolate, scale_to_interval, Kind1D};
use crate::dofcheck::{unisolvence_matrix, vertex_kronecker};
use crate::ratpoly::{frac, rat, Monomial, MultiPoly, Rational};
use crate::serendipity::{
    dim_formula, enumerate_monomials, monomial_span_s3, restrict_to_face, span_check,
    tensor_basis, to_unit, weighted_reproduction, Domain, Edge, Face, LabeledBasis, Space,
    Style,
};

/// Right block of the 2D Bernstein-style coefficient matrix as printed.
pub const KNOWN_B_PRIME: [[i64; 4]; 12] = [
    [-4, -2, -2, -1],
    [-2, -4, -1, -2],
    [-2, -1, -4, -2],
    [-1, -2, -2, -4],
    [2, 0, 1, 0],
    [0, 2, 0, 1],
    [1, 0, 2, 0],
    [0, 1, 0, 2],
    [2, 1, 0, 0],
    [0, 0, 2, 1],
    [1, 2, 0, 0],
    [0, 0, 1, 2],
];

/// Right block of the 2D Hermite-style coefficient matrix as printed.
pub const KNOWN_H_PRIME: [[i64; 4]; 12] = [
    [-1, 1, 1, -1],
    [1, -1, -1, 1],
    [1, -1, -1, 1],
    [-1, 1, 1, -1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
    [-1, 1, 0, 0],
    [0, 0, -1, 1],
    [1, -1, 0, 0],
    [0, 0, 1, -1],
];

/// The four serendipity bases under test, all on `[-1,1]^n`.
#[derive(Clone, Debug)]
pub struct BasisSet {
    pub xi2: LabeledBasis,
    pub theta2: LabeledBasis,
    pub xi3: LabeledBasis,
    pub theta3: LabeledBasis,
}

impl Default for BasisSet {
    fn default() -> Self {
        use crate::serendipity::{theta2, theta3, xi2, xi3};
        BasisSet { xi2: xi2(), theta2: theta2(), xi3: xi3(), theta3: theta3() }
    }
}

impl BasisSet {
    fn get(&self, dim: usize, style: Style) -> &LabeledBasis {
        match (dim, style) {
            (2, Style::Bernstein) => &self.xi2,
            (2, Style::Hermite) => &self.theta2,
            (3, Style::Bernstein) => &self.xi3,
            _ => &self.theta3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl SuiteOutcome {
    pub fn line(&self) -> String {
        match &self.counterexample {
            None => format!("PASS {}", self.name),
            Some(c) => format!("FAIL {}: {c}", self.name),
        }
    }
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const CASES: [(usize, Style); 4] = [
    (2, Style::Bernstein),
    (2, Style::Hermite),
    (3, Style::Bernstein),
    (3, Style::Hermite),
];

fn basis_name(dim: usize, style: Style) -> &'static str {
    match (dim, style) {
        (2, Style::Bernstein) => "xi2",
        (2, Style::Hermite) => "theta2",
        (3, Style::Bernstein) => "xi3",
        _ => "theta3",
    }
}

struct Matrices {
    b: CoeffMatrix,
    h: CoeffMatrix,
    u: CoeffMatrix,
    w: CoeffMatrix,
}

impl Matrices {
    fn build() -> crate::Result<Self> {
        let ((b, h), (u, w)) = rayon::join(
            || (coeffsolver::build_b(), coeffsolver::build_h()),
            || (coeffsolver::build_u(), coeffsolver::build_w()),
        );
        Ok(Matrices { b: b?, h: h?, u: u?, w: w? })
    }

    fn get(&self, dim: usize, style: Style) -> &CoeffMatrix {
        match (dim, style) {
            (2, Style::Bernstein) => &self.b,
            (2, Style::Hermite) => &self.h,
            (3, Style::Bernstein) => &self.u,
            _ => &self.w,
        }
    }
}

fn dimension_table() -> Check {
    for (n, expected) in [(2u64, [10u64, 12, 16]), (3, [20, 32, 64])] {
        for (space, want) in [Space::P, Space::S, Space::Q].into_iter().zip(expected) {
            let formula = dim_formula(space, 3, n);
            let listed = enumerate_monomials(space, 3, n as usize).len() as u64;
            ensure(formula == want && listed == want, || {
                format!("{space:?} n={n}: formula {formula}, listed {listed}, expected {want}")
            })?;
        }
        let mut s3 = monomial_span_s3(n as usize);
        s3.sort();
        ensure(s3 == enumerate_monomials(Space::S, 3, n as usize), || {
            format!("printed S3 list for n={n} differs from enumeration")
        })?;
    }
    Ok(())
}

fn univariate_identities() -> Check {
    let (v, v_inv) = cubic1d::matrix_v();
    ensure(v.mul(&v_inv) == cubic1d::Matrix4::identity(), || "V * V^-1 != I".into())?;
    let beta = cubic1d::bernstein_like();
    let psi = cubic1d::hermite();
    let via_v = v.apply(&psi.functions);
    for (i, (a, b)) in beta.functions.iter().zip(&via_v).enumerate() {
        ensure(a == b, || format!("beta_{} != (V psi)_{}", i + 1, i + 1))?;
    }
    let x = MultiPoly::var(1, 0);
    for basis in [&beta, &psi] {
        for r in 0..=3 {
            let got = cubic1d::reproduce_monomial(basis, r).map_err(|e| e.to_string())?;
            ensure(got == x.pow(r), || format!("{:?} weights fail to reproduce x^{r}", basis.kind))?;
        }
        // Endpoint cardinality: only function 1 is nonzero at 0, only function 4 at 1.
        for (i, f) in basis.functions.iter().enumerate() {
            let at0 = f.eval(&[rat(0)]).map_err(|e| e.to_string())?;
            let at1 = f.eval(&[rat(1)]).map_err(|e| e.to_string())?;
            let ok = at0 == if i == 0 { rat(1) } else { rat(0) }
                && at1 == if i == 3 { rat(1) } else { rat(0) };
            ensure(ok, || format!("{:?} function {} is not endpoint-cardinal", basis.kind, i + 1))?;
        }
    }
    Ok(())
}

fn span(set: &BasisSet) -> Check {
    for (dim, style) in CASES {
        ensure(span_check(set.get(dim, style)), || {
            format!("{} does not span S3", basis_name(dim, style))
        })?;
    }
    Ok(())
}

fn printed_block(m: &CoeffMatrix, known: &[[i64; 4]; 12], label: &str) -> Check {
    ensure(m.left_block_is_identity(), || format!("{label}: left block is not the identity"))?;
    for (i, (row, want)) in m.right_block().iter().zip(known).enumerate() {
        for (j, (got, w)) in row.iter().zip(want).enumerate() {
            ensure(*got == rat(*w), || {
                format!("{label}'[{},{}] = {got}, printed {w}", i + 1, j + 1)
            })?;
        }
    }
    Ok(())
}

fn u_prime_range(u: &CoeffMatrix) -> Check {
    ensure(u.nrows() == 32 && u.ncols() == 64, || "U is not 32x64".into())?;
    ensure(u.left_block_is_identity(), || "U: left block is not the identity".into())?;
    let (lo, hi) = (rat(-16), rat(4));
    for (i, row) in u.right_block().iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            ensure(v.is_integer() && *v >= lo && *v <= hi, || {
                format!("U'[{},{}] = {v} outside the integers -16..=4", i + 1, j + 1)
            })?;
        }
    }
    Ok(())
}

fn w_prime_set(w: &CoeffMatrix) -> Check {
    ensure(w.nrows() == 32 && w.ncols() == 64, || "W is not 32x64".into())?;
    ensure(w.left_block_is_identity(), || "W: left block is not the identity".into())?;
    let allowed = [rat(-1), rat(0), rat(1)];
    let right = w.right_block();
    let outside: Vec<(usize, usize, &Rational)> = right
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, v)))
        .filter(|(_, _, v)| !allowed.contains(v))
        .collect();
    match outside.first() {
        None => Ok(()),
        Some((i, j, v)) => Err(format!(
            "W'[{},{}] = {v} not in {{-1,0,1}} (row {}, column {}; {} entries outside the set)",
            i + 1,
            j + 1,
            w.rows[*i],
            w.cols[w.rows.len() + j],
            outside.len()
        )),
    }
}

fn closed_forms(set: &BasisSet, mats: &Matrices) -> Check {
    for (dim, style) in CASES {
        let tensor = tensor_basis(dim, style, Domain::Unit);
        let synth = synthesize_basis(mats.get(dim, style), &tensor).map_err(|e| e.to_string())?;
        let closed = to_unit(set.get(dim, style));
        for ((idx, a), (_, b)) in synth.entries.iter().zip(&closed.entries) {
            ensure(a == b, || {
                format!("{}_{idx}: synthesized {a} but closed form gives {b}", basis_name(dim, style))
            })?;
        }
    }
    Ok(())
}

fn constraint_substitution(mats: &Matrices) -> Check {
    for (dim, style) in CASES {
        let m = mats.get(dim, style);
        if let Some(v) = first_constraint_violation(m) {
            return Err(format!(
                "{} matrix: constraint {:?} fails for column {}",
                basis_name(dim, style),
                v.exponents,
                v.column
            ));
        }
        ensure(corrections_confined_to_interior(m), || {
            format!("{} matrix: corrections leave the interior columns", basis_name(dim, style))
        })?;
    }
    Ok(())
}

fn order_independence(mats: &Matrices) -> Check {
    for (dim, style) in [(2, Style::Bernstein), (2, Style::Hermite)] {
        let mut order = constraint_exponents(dim);
        order.reverse();
        let m = coeffsolver::build_with_order(dim, style, &order).map_err(|e| e.to_string())?;
        ensure(m.entries == mats.get(dim, style).entries, || {
            format!("{} matrix depends on constraint order", basis_name(dim, style))
        })?;
    }
    Ok(())
}

fn reproduction(set: &BasisSet) -> Check {
    for (dim, style) in CASES {
        let basis = to_unit(set.get(dim, style));
        for m in monomial_span_s3(dim) {
            let got = weighted_reproduction(&basis, m.exponents());
            let want = MultiPoly::monomial(m, Rational::one());
            ensure(got == want, || {
                format!("{}: weighted sum for {} gives {got}", basis_name(dim, style), want)
            })?;
        }
    }
    Ok(())
}

fn edge_traces(set: &BasisSet) -> Check {
    for (dim, style) in CASES {
        let basis = set.get(dim, style);
        let tensor = tensor_basis(dim, style, Domain::Sym);
        for (idx, p) in &basis.entries {
            let Some(q) = tensor.get(idx) else {
                return Err(format!("tensor basis lacks index {idx}"));
            };
            for edge in Edge::all(dim) {
                let a = edge.trace(p).map_err(|e| e.to_string())?;
                let b = edge.trace(q).map_err(|e| e.to_string())?;
                ensure(a == b, || {
                    format!(
                        "{}_{idx} on edge {:?}->{:?}: trace {a} vs tensor {b}",
                        basis_name(dim, style),
                        edge.start(),
                        edge.end()
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn face_reductions(set: &BasisSet) -> Check {
    for (style, b3, b2) in [
        (Style::Bernstein, &set.xi3, &set.xi2),
        (Style::Hermite, &set.theta3, &set.theta2),
    ] {
        for face in Face::all(3) {
            let reduced = restrict_to_face(b3, face).map_err(|e| e.to_string())?;
            for ((idx, a), (_, b)) in reduced.entries.iter().zip(&b2.entries) {
                ensure(a == b, || {
                    format!("{} on face {face:?}: entry {idx} reduces to {a}", basis_name(3, style))
                })?;
            }
            ensure(reduced.len() == b2.len(), || format!("face {face:?}: wrong entry count"))?;
        }
    }
    Ok(())
}

fn unisolvence(set: &BasisSet) -> Check {
    for (dim, style) in CASES {
        let m = unisolvence_matrix(set.get(dim, style)).map_err(|e| e.to_string())?;
        let det = m.determinant().map_err(|e| e.to_string())?;
        ensure(!det.is_zero(), || format!("{}: degree-of-freedom matrix is singular", basis_name(dim, style)))?;
    }
    Ok(())
}

fn kronecker(set: &BasisSet) -> Check {
    for (dim, style) in CASES {
        ensure(vertex_kronecker(set.get(dim, style)), || {
            format!("{}: vertex values are not Kronecker", basis_name(dim, style))
        })?;
    }
    Ok(())
}

/// A cubic with small random rational coefficients.
pub fn random_cubic(rng: &mut impl Rng) -> MultiPoly {
    MultiPoly::from_terms(
        1,
        (0..=3u32).map(|k| {
            (Monomial::new(&[k]), frac(rng.gen_range(-20..=20), rng.gen_range(1..=9)))
        }),
    )
}

fn hermite_interpolation() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e4e);
    let unit = cubic1d::basis(Kind1D::Hermite);
    let sym = scale_to_interval(&unit, &rat(-1), &rat(1), true).map_err(|e| e.to_string())?;
    for _ in 0..100 {
        let u = random_cubic(&mut rng);
        let c = hermite_interpolate(&u, &rat(0), &rat(1)).map_err(|e| e.to_string())?;
        ensure(unit.combine(&c) == u, || format!("interpolation on [0,1] misses {u}"))?;
        // Derivative-preserving coefficients: plain ones divided by the width.
        let c = hermite_interpolate(&u, &rat(-1), &rat(1)).map_err(|e| e.to_string())?;
        let half = frac(1, 2);
        let scaled = [c[0].clone(), &c[1] * &half, &c[2] * &half, c[3].clone()];
        let du = u.partial(0).map_err(|e| e.to_string())?;
        let direct = [
            u.eval(&[rat(-1)]).map_err(|e| e.to_string())?,
            du.eval(&[rat(-1)]).map_err(|e| e.to_string())?,
            -du.eval(&[rat(1)]).map_err(|e| e.to_string())?,
            u.eval(&[rat(1)]).map_err(|e| e.to_string())?,
        ];
        ensure(scaled == direct, || format!("derivative slots on [-1,1] disagree for {u}"))?;
        ensure(sym.combine(&direct) == u, || format!("interpolation on [-1,1] misses {u}"))?;
    }
    Ok(())
}

fn outcome(name: &'static str, check: Check) -> SuiteOutcome {
    SuiteOutcome { name, passed: check.is_ok(), counterexample: check.err() }
}

/// Runs every suite against `set`, in a fixed order.
pub fn run_suites(set: &BasisSet) -> Vec<SuiteOutcome> {
    let mut out = vec![
        outcome("dimension table", dimension_table()),
        outcome("univariate identities", univariate_identities()),
        outcome("hermite interpolation", hermite_interpolation()),
        outcome("span of S3", span(set)),
        outcome("reproduction identities", reproduction(set)),
        outcome("edge traces", edge_traces(set)),
        outcome("face reductions", face_reductions(set)),
        outcome("unisolvence", unisolvence(set)),
        outcome("vertex kronecker", kronecker(set)),
    ];
    match Matrices::build() {
        Ok(mats) => out.extend([
            outcome("B' matches printed", printed_block(&mats.b, &KNOWN_B_PRIME, "B")),
            outcome("H' matches printed", printed_block(&mats.h, &KNOWN_H_PRIME, "H")),
            outcome("U' integer range", u_prime_range(&mats.u)),
            outcome("W' entry set", w_prime_set(&mats.w)),
            outcome("constraint substitution", constraint_substitution(&mats)),
            outcome("constraint order independence", order_independence(&mats)),
            outcome("closed-form cross-validation", closed_forms(set, &mats)),
        ]),
        Err(e) => out.push(outcome("coefficient matrices", Err(e.to_string()))),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pristine_bases_pass() {
        let results = run_suites(&BasisSet::default());
        assert!(results.len() >= 10);
        for r in results.iter().filter(|r| r.name != "W' entry set") {
            assert!(r.passed, "{}", r.line());
        }
        // The constraint equations force +-2 into the vertex rows of W'.
        let w = results.iter().find(|r| r.name == "W' entry set").unwrap();
        assert!(!w.passed);
        assert!(w.counterexample.as_deref().unwrap().contains("row 111, column 222"));
    }

    #[test]
    fn corrupted_xi11_is_caught() {
        let mut set = BasisSet::default();
        let p = &mut set.xi2.entries[0].1;
        *p = p.checked_add(&MultiPoly::parse(2, "x^2*y/16").unwrap()).unwrap();
        let failed: Vec<_> = run_suites(&set).into_iter().filter(|r| !r.passed).collect();
        assert!(failed.iter().any(|r| r.name == "closed-form cross-validation"
            && r.counterexample.as_deref().unwrap().contains("xi2_11")));
        assert!(failed.iter().any(|r| r.name == "reproduction identities"));
    }

    #[test]
    fn printed_blocks_reject_a_changed_entry() {
        let mut b = coeffsolver::build_b().unwrap();
        b.entries[3][14] = rat(7);
        let err = printed_block(&b, &KNOWN_B_PRIME, "B").unwrap_err();
        assert!(err.starts_with("B'[4,3]"), "{err}");
    }

    #[test]
    fn random_cubics_are_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            assert!(random_cubic(&mut rng).total_degree().unwrap_or(0) <= 3);
        }
    }
}
