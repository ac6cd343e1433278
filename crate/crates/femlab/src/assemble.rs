//! Galerkin assembly on uniform meshes, finite element functions and error norms.

use rayon::prelude::*;

use crate::element::{BasisKind, ReferenceElement, Tabulation};
use crate::error::Result;
use crate::mesh::{GlobalDofMap, UniformMesh};
use crate::quadrature::QuadratureRule;
use crate::solver::{solve_cg, CgOptions};
use crate::sparse::{CsrMatrix, SparseLinearSystem};

/// Points per axis for stiffness and mass integrals (exact for these integrands).
pub const STIFFNESS_ORDER: usize = 4;
/// Points per axis for loads and error norms.
pub const LOAD_ORDER: usize = 6;

pub type ScalarField<'a> = &'a (dyn Fn([f64; 3]) -> f64 + Sync);
pub type VectorField<'a> = &'a (dyn Fn([f64; 3]) -> [f64; 3] + Sync);

/// A basis kind on a mesh, with its tabulated reference element.
#[derive(Clone, Debug)]
pub struct Discretization {
    pub mesh: UniformMesh,
    pub element: ReferenceElement,
    pub dofs: GlobalDofMap,
    coarse: (QuadratureRule, Tabulation),
    fine: (QuadratureRule, Tabulation),
    /// Reference-to-physical factor of each local function.
    scales: Vec<f64>,
}

impl Discretization {
    pub fn new(kind: BasisKind, mesh: UniformMesh) -> Self {
        let element = ReferenceElement::new(kind, mesh.dim);
        let dofs = GlobalDofMap::new(mesh, &element);
        let coarse_rule = QuadratureRule::tensor(mesh.dim, STIFFNESS_ORDER);
        let fine_rule = QuadratureRule::tensor(mesh.dim, LOAD_ORDER);
        let coarse = (coarse_rule.clone(), element.tabulate(&coarse_rule));
        let fine = (fine_rule.clone(), element.tabulate(&fine_rule));
        let scales = (0..element.len()).map(|a| element.physical_scale(a, mesh.h())).collect();
        Discretization { mesh, element, dofs, coarse, fine, scales }
    }

    pub fn kind(&self) -> BasisKind {
        self.element.kind
    }

    pub fn num_dofs(&self) -> usize {
        self.dofs.num_dofs
    }

    fn physical_point(&self, cell: usize, xi: &[f64; 3]) -> [f64; 3] {
        let o = self.mesh.cell_origin(cell);
        let h = self.mesh.h();
        std::array::from_fn(|k| if k < self.mesh.dim { o[k] + h * xi[k] } else { 0.0 })
    }

    /// Element stiffness matrix, identical for every cell.
    pub fn local_stiffness(&self) -> Vec<Vec<f64>> {
        let (rule, tab) = &self.coarse;
        let h = self.mesh.h();
        let jac = h.powi(self.mesh.dim as i32 - 2);
        let n = self.element.len();
        let mut k = vec![vec![0.0; n]; n];
        for (q, w) in rule.weights.iter().enumerate() {
            let g = &tab.grads[q];
            for a in 0..n {
                for b in 0..n {
                    let dot: f64 = (0..self.mesh.dim).map(|d| g[a][d] * g[b][d]).sum();
                    k[a][b] += w * dot;
                }
            }
        }
        self.scaled(k, jac)
    }

    /// Element mass matrix, identical for every cell.
    pub fn local_mass(&self) -> Vec<Vec<f64>> {
        let (rule, tab) = &self.coarse;
        let n = self.element.len();
        let mut m = vec![vec![0.0; n]; n];
        for (q, w) in rule.weights.iter().enumerate() {
            let v = &tab.values[q];
            for a in 0..n {
                for b in 0..n {
                    m[a][b] += w * v[a] * v[b];
                }
            }
        }
        self.scaled(m, self.mesh.h().powi(self.mesh.dim as i32))
    }

    fn scaled(&self, mut m: Vec<Vec<f64>>, factor: f64) -> Vec<Vec<f64>> {
        for (a, row) in m.iter_mut().enumerate() {
            for (b, v) in row.iter_mut().enumerate() {
                *v *= factor * self.scales[a] * self.scales[b];
            }
        }
        m
    }

    /// Scatters a cell-independent local matrix into the global one.
    pub fn assemble_matrix(&self, local: &[Vec<f64>]) -> CsrMatrix {
        let triplets: Vec<(usize, usize, f64)> = (0..self.mesh.num_cells())
            .into_par_iter()
            .flat_map_iter(|c| {
                let g = &self.dofs.cell_dofs[c];
                let s = &self.dofs.cell_signs[c];
                (0..g.len()).flat_map(move |a| {
                    (0..g.len()).map(move |b| (g[a], g[b], s[a] * s[b] * local[a][b]))
                })
            })
            .collect();
        CsrMatrix::from_triplets(self.num_dofs(), triplets)
    }

    pub fn stiffness(&self) -> CsrMatrix {
        self.assemble_matrix(&self.local_stiffness())
    }

    pub fn mass(&self) -> CsrMatrix {
        self.assemble_matrix(&self.local_mass())
    }

    /// `∫ f φ_i` for every global unknown.
    pub fn load(&self, f: ScalarField) -> Vec<f64> {
        let (rule, tab) = &self.fine;
        let vol = self.mesh.h().powi(self.mesh.dim as i32);
        let per_cell: Vec<Vec<f64>> = (0..self.mesh.num_cells())
            .into_par_iter()
            .map(|c| {
                let mut local = vec![0.0; self.element.len()];
                for (q, (p, w)) in rule.points.iter().zip(&rule.weights).enumerate() {
                    let fx = f(self.physical_point(c, p)) * w * vol;
                    for (a, l) in local.iter_mut().enumerate() {
                        *l += fx * tab.values[q][a];
                    }
                }
                local
            })
            .collect();
        let mut out = vec![0.0; self.num_dofs()];
        for (c, local) in per_cell.iter().enumerate() {
            for (a, l) in local.iter().enumerate() {
                out[self.dofs.cell_dofs[c][a]] += self.dofs.cell_signs[c][a] * self.scales[a] * l;
            }
        }
        out
    }

    /// Stiffness system with homogeneous Dirichlet data on the whole boundary.
    pub fn poisson_system(&self, f: ScalarField) -> SparseLinearSystem {
        let mut sys = SparseLinearSystem::new(self.stiffness(), self.load(f));
        sys.set_dirichlet(&self.dofs.boundary_mask(), 0.0);
        sys
    }

    pub fn solve_poisson(&self, f: ScalarField, opts: CgOptions) -> Result<Vec<f64>> {
        let (a, b) = self.poisson_system(f).eliminated();
        Ok(solve_cg(&a, &b, opts)?.x)
    }

    /// Coefficients of the L2 projection of `f` (no boundary conditions).
    pub fn project(&self, f: ScalarField, opts: CgOptions) -> Result<Vec<f64>> {
        Ok(solve_cg(&self.mass(), &self.load(f), opts)?.x)
    }

    /// Value and physical gradient of the finite element function `coeffs`
    /// at reference point `xi` of `cell`.
    pub fn eval_in_cell(&self, coeffs: &[f64], cell: usize, xi: &[f64; 3]) -> (f64, [f64; 3]) {
        let h = self.mesh.h();
        let mut value = 0.0;
        let mut grad = [0.0; 3];
        for (a, poly) in self.element.polys.iter().enumerate() {
            let c = coeffs[self.dofs.cell_dofs[cell][a]] * self.dofs.cell_signs[cell][a] * self.scales[a];
            if c == 0.0 {
                continue;
            }
            value += c * poly.eval(xi);
            let g = poly.grad(xi);
            for d in 0..self.mesh.dim {
                grad[d] += c * g[d] / h;
            }
        }
        (value, grad)
    }

    fn cell_values(&self, coeffs: &[f64], cell: usize, q: usize) -> (f64, [f64; 3]) {
        let (_, tab) = &self.fine;
        let h = self.mesh.h();
        let mut value = 0.0;
        let mut grad = [0.0; 3];
        for a in 0..self.element.len() {
            let c = coeffs[self.dofs.cell_dofs[cell][a]] * self.dofs.cell_signs[cell][a] * self.scales[a];
            value += c * tab.values[q][a];
            for (g, dg) in grad.iter_mut().zip(&tab.grads[q][a]).take(self.mesh.dim) {
                *g += c * dg / h;
            }
        }
        (value, grad)
    }

    /// `(‖u_h - u‖_L2, |u_h - u|_H1)` by fine quadrature.
    pub fn errors(&self, coeffs: &[f64], u: ScalarField, grad_u: VectorField) -> (f64, f64) {
        let (rule, _) = &self.fine;
        let vol = self.mesh.h().powi(self.mesh.dim as i32);
        let per_cell: Vec<(f64, f64)> = (0..self.mesh.num_cells())
            .into_par_iter()
            .map(|c| {
                let mut l2 = 0.0;
                let mut h1 = 0.0;
                for (q, (p, w)) in rule.points.iter().zip(&rule.weights).enumerate() {
                    let x = self.physical_point(c, p);
                    let (v, g) = self.cell_values(coeffs, c, q);
                    let gu = grad_u(x);
                    l2 += w * (v - u(x)).powi(2);
                    h1 += w * (0..self.mesh.dim).map(|d| (g[d] - gu[d]).powi(2)).sum::<f64>();
                }
                (l2 * vol, h1 * vol)
            })
            .collect();
        let (l2, h1) = per_cell.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
        (l2.sqrt(), h1.sqrt())
    }
}

/// `Π sin(π x_i)`.
pub fn manufactured_u(dim: usize) -> impl Fn([f64; 3]) -> f64 + Sync {
    use std::f64::consts::PI;
    move |x| (0..dim).map(|k| (PI * x[k]).sin()).product()
}

pub fn manufactured_grad(dim: usize) -> impl Fn([f64; 3]) -> [f64; 3] + Sync {
    use std::f64::consts::PI;
    move |x| {
        std::array::from_fn(|d| {
            if d >= dim {
                return 0.0;
            }
            (0..dim)
                .map(|k| if k == d { PI * (PI * x[k]).cos() } else { (PI * x[k]).sin() })
                .product()
        })
    }
}

/// `-Δu` for the manufactured solution: `dim π² u`.
pub fn manufactured_source(dim: usize) -> impl Fn([f64; 3]) -> f64 + Sync {
    use std::f64::consts::PI;
    let u = manufactured_u(dim);
    move |x| dim as f64 * PI * PI * u(x)
}

/// Stiffness system for `-Δu = f` with zero boundary values.
pub fn assemble_poisson(mesh: UniformMesh, kind: BasisKind, f: ScalarField) -> SparseLinearSystem {
    Discretization::new(kind, mesh).poisson_system(f)
}

/// L2 distance between finite element functions on the same mesh.
pub fn l2_distance(a: &Discretization, ca: &[f64], b: &Discretization, cb: &[f64]) -> f64 {
    assert_eq!(a.mesh, b.mesh, "functions live on different meshes");
    let (rule, _) = &a.fine;
    let vol = a.mesh.h().powi(a.mesh.dim as i32);
    let per_cell: Vec<f64> = (0..a.mesh.num_cells())
        .into_par_iter()
        .map(|c| {
            rule.weights
                .iter()
                .enumerate()
                .map(|(q, w)| w * (a.cell_values(ca, c, q).0 - b.cell_values(cb, c, q).0).powi(2))
                .sum::<f64>()
                * vol
        })
        .collect();
    per_cell.iter().sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use serendipity_core::serendipity::{reproduction_weight, Style};

    #[test]
    fn q3_single_cell_rows_sum_to_zero() {
        for dim in [2, 3] {
            let d = Discretization::new(BasisKind::Q3, UniformMesh::new(dim, 1));
            let k = d.stiffness();
            for i in 0..k.n {
                assert!(k.row(i).map(|(_, v)| v).sum::<f64>().abs() < 1e-11);
            }
        }
    }

    #[test]
    fn s3_single_cell_weighted_rows_vanish() {
        for (kind, style) in [(BasisKind::S3Bernstein, Style::Bernstein), (BasisKind::S3Hermite, Style::Hermite)] {
            for dim in [2, 3] {
                let d = Discretization::new(kind, UniformMesh::new(dim, 1));
                let k = d.stiffness();
                let zeros = vec![0u32; dim];
                let mut w = vec![0.0; d.num_dofs()];
                for (a, idx) in d.element.indices.iter().enumerate() {
                    w[d.dofs.cell_dofs[0][a]] = reproduction_weight(style, &zeros, idx).to_f64().unwrap();
                }
                let mut kw = vec![0.0; k.n];
                k.mul_vec(&w, &mut kw);
                assert!(kw.iter().all(|v| v.abs() < 1e-11), "{kind} dim={dim}");
            }
        }
    }

    #[test]
    fn stiffness_is_symmetric() {
        for kind in BasisKind::ALL {
            let d = Discretization::new(kind, UniformMesh::new(2, 3));
            assert!(d.stiffness().asymmetry() < 1e-12);
            assert!(d.mass().asymmetry() < 1e-12);
        }
    }

    #[test]
    fn mass_integrates_constant() {
        // All-ones coefficients give the constant 1 for the q3 basis.
        let d = Discretization::new(BasisKind::Q3, UniformMesh::new(2, 2));
        let ones = vec![1.0; d.num_dofs()];
        assert!((d.mass().quadratic_form(&ones) - 1.0).abs() < 1e-13);
    }

    #[test]
    fn manufactured_fields_are_consistent() {
        let u = manufactured_u(2);
        let g = manufactured_grad(2);
        let x = [0.3, 0.6, 0.0];
        let eps = 1e-6;
        let fd = (u([x[0] + eps, x[1], 0.0]) - u([x[0] - eps, x[1], 0.0])) / (2.0 * eps);
        assert!((fd - g(x)[0]).abs() < 1e-8);
        assert!(u([0.0, 0.4, 0.0]).abs() < 1e-15);
    }
}
