//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

use std::process::ExitCode;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use serendipity_core::coeffsolver::{self, synthesize_basis, CoeffMatrix};
use serendipity_core::cubic1d::{hermite, hermite_interpolate, scale_to_interval};
use serendipity_core::dofcheck::{unisolvence_matrix, vertex_kronecker};
use serendipity_core::serendipity::{
    dim_formula, enumerate_monomials, monomial_span_s3, restrict_to_face, serendipity_basis,
    tensor_basis, to_unit, weighted_reproduction, Domain, Edge, Face, Space, Style,
};
use serendipity_core::{frac, rat, Monomial, MultiPoly, Rational};
use serendipity_femlab::assemble::manufactured_source;
use serendipity_femlab::mesh::expected_dofs;
use serendipity_femlab::{
    l2_distance, run_convergence, BasisKind, CgOptions, Discretization, ReferenceElement,
    UniformMesh,
};
use serendipity_validation::{judge, Verdict};

type Check = Result<String, String>;

const CASES: [(usize, Style); 4] = [
    (2, Style::Bernstein),
    (2, Style::Hermite),
    (3, Style::Bernstein),
    (3, Style::Hermite),
];

fn c1_dimensions() -> Check {
    for (n, want) in [(2usize, [10u64, 12, 16]), (3, [20, 32, 64])] {
        for (space, w) in [Space::P, Space::S, Space::Q].into_iter().zip(want) {
            let formula = dim_formula(space, 3, n as u64);
            let listed = enumerate_monomials(space, 3, n).len() as u64;
            if formula != w || listed != w {
                return Err(format!("{space:?} n={n}: formula {formula}, list {listed}, want {w}"));
            }
        }
        if monomial_span_s3(n).len() as u64 != want[1] {
            return Err(format!("printed S3 list for n={n} has the wrong length"));
        }
    }
    Ok("(10,12,16) and (20,32,64)".into())
}

const B_PRIME: [[i64; 4]; 12] = [
    [-4, -2, -2, -1], [-2, -4, -1, -2], [-2, -1, -4, -2], [-1, -2, -2, -4],
    [2, 0, 1, 0], [0, 2, 0, 1], [1, 0, 2, 0], [0, 1, 0, 2],
    [2, 1, 0, 0], [0, 0, 2, 1], [1, 2, 0, 0], [0, 0, 1, 2],
];

const H_PRIME: [[i64; 4]; 12] = [
    [-1, 1, 1, -1], [1, -1, -1, 1], [1, -1, -1, 1], [-1, 1, 1, -1],
    [-1, 0, 1, 0], [0, -1, 0, 1], [1, 0, -1, 0], [0, 1, 0, -1],
    [-1, 1, 0, 0], [0, 0, -1, 1], [1, -1, 0, 0], [0, 0, 1, -1],
];

fn c2_matrices(b: &CoeffMatrix, h: &CoeffMatrix) -> Check {
    let mut matches = 0;
    for (name, m, printed) in [("B", b, &B_PRIME), ("H", h, &H_PRIME)] {
        if !m.left_block_is_identity() {
            return Err(format!("{name}: left block is not the identity"));
        }
        for (i, row) in m.right_block().iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if *v != rat(printed[i][j]) {
                    return Err(format!("{name}'[{},{}] = {v}, printed {}", i + 1, j + 1, printed[i][j]));
                }
                matches += 1;
            }
        }
    }
    Ok(format!("{matches} of 96 entries match"))
}

fn c3_properties(u: &CoeffMatrix, w: &CoeffMatrix) -> Check {
    let (lo, hi) = (rat(-16), rat(4));
    let u_right = u.right_block();
    let u_count = u_right.iter().flatten().count();
    if u_count != 1024 {
        return Err(format!("U' has {u_count} entries"));
    }
    if let Some(v) = u_right.iter().flatten().find(|v| !v.is_integer() || **v < lo || **v > hi) {
        return Err(format!("U' entry {v} outside the integers -16..=4"));
    }
    let allowed = [rat(-1), rat(0), rat(1)];
    let w_right = w.right_block();
    let bad: Vec<(usize, usize)> = w_right
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().filter(|(_, v)| !allowed.contains(v)).map(move |(j, _)| (i, j)))
        .collect();
    if let Some(&(i, j)) = bad.first() {
        return Err(format!(
            "U' ok; W'[{},{}] (row {}, column {}) = {} and {} W' entries in total lie outside {{-1,0,1}}",
            i + 1,
            j + 1,
            w.rows[i],
            w.cols[w.rows.len() + j],
            w_right[i][j],
            bad.len()
        ));
    }
    Ok("U' integers in [-16,4], W' in {-1,0,1}".into())
}

fn c4_closed_forms(mats: &[&CoeffMatrix; 4]) -> Check {
    let mut count = 0;
    for ((dim, style), m) in CASES.into_iter().zip(mats) {
        let synth = synthesize_basis(m, &tensor_basis(dim, style, Domain::Unit)).map_err(|e| e.to_string())?;
        let closed = to_unit(&serendipity_basis(dim, style));
        for ((idx, a), (_, b)) in synth.entries.iter().zip(&closed.entries) {
            if a != b {
                return Err(format!("dim {dim} {style:?} entry {idx} differs"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} of 88 polynomial identities"))
}

fn c5_reproduction() -> Check {
    let mut count = 0;
    for (dim, style) in CASES {
        let basis = to_unit(&serendipity_basis(dim, style));
        for m in monomial_span_s3(dim) {
            let want = MultiPoly::monomial(m, rat(1));
            if weighted_reproduction(&basis, m.exponents()) != want {
                return Err(format!("dim {dim} {style:?}: {want} not reproduced"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} of 88 monomials reproduced"))
}

fn c6_traces() -> Check {
    let mut edges = 0;
    for (dim, style) in CASES {
        let basis = serendipity_basis(dim, style);
        let tensor = tensor_basis(dim, style, Domain::Sym);
        for edge in Edge::all(dim) {
            for (idx, p) in &basis.entries {
                let q = tensor.get(idx).ok_or("missing tensor entry")?;
                if edge.trace(p).map_err(|e| e.to_string())? != edge.trace(q).map_err(|e| e.to_string())? {
                    return Err(format!("dim {dim} {style:?} entry {idx} on edge {:?}", edge.start()));
                }
            }
            edges += 1;
        }
    }
    let mut faces = 0;
    for style in [Style::Bernstein, Style::Hermite] {
        let b3 = serendipity_basis(3, style);
        let b2 = serendipity_basis(2, style);
        for face in Face::all(3) {
            let reduced = restrict_to_face(&b3, face).map_err(|e| e.to_string())?;
            if reduced.entries != b2.entries {
                return Err(format!("{style:?} face {face:?} does not reduce to the 2D basis"));
            }
            faces += 1;
        }
    }
    Ok(format!("{edges} edge checks (4+4+12+12), {faces} face reductions"))
}

fn c7_unisolvence() -> Check {
    for (dim, style) in CASES {
        let basis = serendipity_basis(dim, style);
        let det = unisolvence_matrix(&basis).and_then(|m| m.determinant()).map_err(|e| e.to_string())?;
        if det.is_zero() {
            return Err(format!("dim {dim} {style:?}: singular DOF matrix"));
        }
        if !vertex_kronecker(&basis) {
            return Err(format!("dim {dim} {style:?}: vertex Kronecker property fails"));
        }
    }
    Ok("4 nonzero determinants, 4 Kronecker checks".into())
}

fn c8_hermite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let unit = hermite();
    let sym = scale_to_interval(&unit, &rat(-1), &rat(1), true).map_err(|e| e.to_string())?;
    let at = |p: &MultiPoly, x: i64| p.eval(&[rat(x)]).expect("univariate");
    for k in 0..100 {
        let u = MultiPoly::from_terms(
            1,
            (0..=3u32).map(|e| (Monomial::new(&[e]), frac(rng.gen_range(-50..=50), rng.gen_range(1..=12)))),
        );
        let du = u.partial(0).map_err(|e| e.to_string())?;
        let c01: [Rational; 4] = [at(&u, 0), at(&du, 0), -at(&du, 1), at(&u, 1)];
        if unit.combine(&c01) != u || hermite_interpolate(&u, &rat(0), &rat(1)).ok() != Some(c01) {
            return Err(format!("cubic {k} ({u}) not reproduced on [0,1]"));
        }
        let csym: [Rational; 4] = [at(&u, -1), at(&du, -1), -at(&du, 1), at(&u, 1)];
        if sym.combine(&csym) != u {
            return Err(format!("cubic {k} ({u}) not reproduced on [-1,1]"));
        }
    }
    Ok("100 of 100 cubics on both intervals".into())
}

fn c9_convergence_2d() -> Check {
    let levels = [2, 4, 8, 16, 32];
    let mut notes = Vec::new();
    for kind in BasisKind::ALL {
        let r = run_convergence(2, kind, &levels, CgOptions::default()).map_err(|e| e.to_string())?;
        let rate = r.final_h1_rate().ok_or("no rate")?;
        if !(2.7..=3.3).contains(&rate) {
            return Err(format!("{kind}: final H1 rate {rate:.4}"));
        }
        notes.push(format!("{kind} {rate:.4}"));
    }
    for n in levels {
        let s = expected_dofs(BasisKind::S3Bernstein, 2, n);
        let q = expected_dofs(BasisKind::Q3, 2, n);
        let built = Discretization::new(BasisKind::S3Bernstein, UniformMesh::new(2, n)).num_dofs();
        if !(s < q && built == s) {
            return Err(format!("N={n}: s3 dofs {built} vs q3 {q}"));
        }
    }
    Ok(format!("H1 rates {}; s3 dofs < q3 dofs at every level", notes.join(", ")))
}

fn c9_convergence_3d() -> Check {
    if ReferenceElement::new(BasisKind::S3Bernstein, 3).len() != 32 || ReferenceElement::new(BasisKind::Q3, 3).len() != 64 {
        return Err("local element sizes are not 32 and 64".into());
    }
    let mut notes = Vec::new();
    for kind in BasisKind::ALL {
        let r = run_convergence(3, kind, &[2, 4, 8], CgOptions::default()).map_err(|e| e.to_string())?;
        let rate = r.final_h1_rate().ok_or("no rate")?;
        if !(2.5..=3.5).contains(&rate) {
            return Err(format!("{kind}: final H1 rate {rate:.4}"));
        }
        notes.push(format!("{kind} {rate:.4}"));
    }
    Ok(format!("local 32 vs 64; H1 rates {}", notes.join(", ")))
}

fn c10_styles() -> Check {
    let f = manufactured_source(2);
    let mesh = UniformMesh::new(2, 8);
    let a = Discretization::new(BasisKind::S3Bernstein, mesh);
    let b = Discretization::new(BasisKind::S3Hermite, mesh);
    let ca = a.solve_poisson(&f, CgOptions::default()).map_err(|e| e.to_string())?;
    let cb = b.solve_poisson(&f, CgOptions::default()).map_err(|e| e.to_string())?;
    let d = l2_distance(&a, &ca, &b, &cb);
    if d <= 1e-9 {
        Ok(format!("L2 distance {d:.3e}"))
    } else {
        Err(format!("L2 distance {d:.3e} exceeds 1e-9"))
    }
}

fn main() -> ExitCode {
    let mut verdicts: Vec<Verdict> = Vec::new();
    let mut report = |v: Verdict| {
        println!("{}", v.line());
        verdicts.push(v);
    };
    report(judge(1, "dimension table", 1, c1_dimensions));
    let mut mats = None;
    report(judge(2, "B' and H' reproduce the printed matrices", 1, || {
        let b = coeffsolver::build_b().map_err(|e| e.to_string())?;
        let h = coeffsolver::build_h().map_err(|e| e.to_string())?;
        let out = c2_matrices(&b, &h);
        mats = Some((b, h));
        out
    }));
    let (b, h) = mats.expect("2D matrices built");
    let mut mats3 = None;
    report(judge(3, "U' and W' entry properties", 10, || {
        let u = coeffsolver::build_u().map_err(|e| e.to_string())?;
        let w = coeffsolver::build_w().map_err(|e| e.to_string())?;
        let out = c3_properties(&u, &w);
        mats3 = Some((u, w));
        out
    }));
    let (u, w) = mats3.expect("3D matrices built");
    report(judge(4, "closed-form cross-validation", 10, || c4_closed_forms(&[&b, &h, &u, &w])));
    report(judge(5, "reproduction identities", 5, c5_reproduction));
    report(judge(6, "edge traces and face reductions", 5, c6_traces));
    report(judge(7, "unisolvence and vertex Kronecker", 5, c7_unisolvence));
    report(judge(8, "Hermite interpolation of random cubics", 2, c8_hermite));
    report(judge(9, "2D convergence and DOF counts", 60, c9_convergence_2d));
    report(judge(9, "3D convergence", 300, c9_convergence_3d));
    report(judge(10, "Bernstein and Hermite styles agree", 30, c10_styles));
    let failed = verdicts.iter().filter(|v| !v.passed).count();
    println!("{} checks, {} failed", verdicts.len(), failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
