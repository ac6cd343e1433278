//! Uniform meshes of `[0,1]^dim` and the local-to-global degree-of-freedom map.

use std::collections::HashMap;

use crate::element::{BasisKind, LocalDof, ReferenceElement};

/// `N^dim` congruent cells of width `1/N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniformMesh {
    pub dim: usize,
    pub cells_per_side: usize,
}

impl UniformMesh {
    pub fn new(dim: usize, cells_per_side: usize) -> Self {
        assert!(dim == 2 || dim == 3, "dimension must be 2 or 3");
        assert!(cells_per_side >= 1, "need at least one cell per side");
        UniformMesh { dim, cells_per_side }
    }

    pub fn h(&self) -> f64 {
        1.0 / self.cells_per_side as f64
    }

    pub fn num_cells(&self) -> usize {
        self.cells_per_side.pow(self.dim as u32)
    }

    pub fn num_vertices(&self) -> usize {
        (self.cells_per_side + 1).pow(self.dim as u32)
    }

    pub fn num_edges(&self) -> usize {
        let n = self.cells_per_side;
        self.dim * n * (n + 1).pow(self.dim as u32 - 1)
    }

    /// Integer coordinates of cell `c`, last axis fastest.
    pub fn cell_coords(&self, c: usize) -> [usize; 3] {
        unflatten(c, self.dim, self.cells_per_side)
    }

    /// Lower corner of cell `c` in physical coordinates.
    pub fn cell_origin(&self, c: usize) -> [f64; 3] {
        self.cell_coords(c).map(|k| k as f64 * self.h())
    }

    pub fn vertex_id(&self, v: [usize; 3]) -> usize {
        flatten(&v[..self.dim], &vec![self.cells_per_side + 1; self.dim])
    }

    /// Id of the edge along `axis` whose lower end is vertex `start`.
    pub fn edge_id(&self, axis: usize, start: [usize; 3]) -> usize {
        let n = self.cells_per_side;
        let per_axis = n * (n + 1).pow(self.dim as u32 - 1);
        let extents: Vec<usize> = (0..self.dim).map(|k| if k == axis { n } else { n + 1 }).collect();
        axis * per_axis + flatten(&start[..self.dim], &extents)
    }
}

fn flatten(coords: &[usize], extents: &[usize]) -> usize {
    coords.iter().zip(extents).fold(0, |acc, (&c, &e)| acc * e + c)
}

fn unflatten(mut flat: usize, dim: usize, extent: usize) -> [usize; 3] {
    let mut out = [0; 3];
    for k in (0..dim).rev() {
        out[k] = flat % extent;
        flat /= extent;
    }
    out
}

/// Where a local edge degree of freedom lands globally when the local edge
/// runs with (`reversed == false`) or against the global edge direction.
///
/// Bernstein-style pairs are attached to points near each end, so reversal
/// swaps them. Hermite-style pairs are tangential derivatives, so reversal
/// also flips their sign.
pub fn edge_transfer(kind: BasisKind, slot: u8, reversed: bool) -> (u8, f64) {
    if !reversed {
        return (slot, 1.0);
    }
    let sign = if kind == BasisKind::S3Hermite { -1.0 } else { 1.0 };
    (1 - slot, sign)
}

/// Global numbering: vertices, then two unknowns per edge (`nv + 2e + slot`,
/// slot 0 nearest the global start), then face and interior lattice points.
#[derive(Clone, Debug)]
pub struct GlobalDofMap {
    pub kind: BasisKind,
    pub mesh: UniformMesh,
    pub num_dofs: usize,
    /// Global index of each local function, per cell.
    pub cell_dofs: Vec<Vec<usize>>,
    /// Orientation sign of each local function, per cell.
    pub cell_signs: Vec<Vec<f64>>,
    /// Position of each global unknown on the `0..=3N` lattice.
    pub lattice: Vec<[usize; 3]>,
}

impl GlobalDofMap {
    pub fn new(mesh: UniformMesh, element: &ReferenceElement) -> Self {
        assert_eq!(mesh.dim, element.dim, "mesh and element dimensions differ");
        let nv = mesh.num_vertices();
        let ne = mesh.num_edges();
        let mut next = nv + 2 * ne;
        let mut extra: HashMap<[usize; 3], usize> = HashMap::new();
        let mut cell_dofs = Vec::with_capacity(mesh.num_cells());
        let mut cell_signs = Vec::with_capacity(mesh.num_cells());
        let mut lattice = vec![[0usize; 3]; nv + 2 * ne];
        for c in 0..mesh.num_cells() {
            let cell = mesh.cell_coords(c);
            let mut dofs = Vec::with_capacity(element.len());
            let mut signs = Vec::with_capacity(element.len());
            for local in &element.dofs {
                let offset = local.lattice_offset();
                let point: [usize; 3] = std::array::from_fn(|k| 3 * cell[k] + offset[k] as usize);
                let (g, s) = match *local {
                    LocalDof::Vertex { corner } => {
                        let v = std::array::from_fn(|k| cell[k] + corner[k] as usize);
                        (mesh.vertex_id(v), 1.0)
                    }
                    LocalDof::Edge { axis, start, slot } => {
                        let a: [usize; 3] = std::array::from_fn(|k| cell[k] + start[k] as usize);
                        let mut b = a;
                        b[axis] += 1;
                        let reversed = mesh.vertex_id(a) > mesh.vertex_id(b);
                        let lower = if reversed { b } else { a };
                        let (gslot, sign) = edge_transfer(element.kind, slot, reversed);
                        (nv + 2 * mesh.edge_id(axis, lower) + gslot as usize, sign)
                    }
                    LocalDof::Lattice { .. } => {
                        let id = *extra.entry(point).or_insert_with(|| {
                            next += 1;
                            next - 1
                        });
                        if id == lattice.len() {
                            lattice.push(point);
                        }
                        (id, 1.0)
                    }
                };
                if g < nv + 2 * ne {
                    lattice[g] = point;
                }
                dofs.push(g);
                signs.push(s);
            }
            cell_dofs.push(dofs);
            cell_signs.push(signs);
        }
        GlobalDofMap { kind: element.kind, mesh, num_dofs: next, cell_dofs, cell_signs, lattice }
    }

    /// Unknowns whose lattice point lies on the boundary of `[0,1]^dim`.
    pub fn boundary_mask(&self) -> Vec<bool> {
        let top = 3 * self.mesh.cells_per_side;
        self.lattice
            .iter()
            .map(|p| p[..self.mesh.dim].iter().any(|&c| c == 0 || c == top))
            .collect()
    }
}

/// Closed-form global unknown counts.
pub fn expected_dofs(kind: BasisKind, dim: usize, n: usize) -> usize {
    match (kind.is_serendipity(), dim) {
        (true, 2) => (n + 1).pow(2) + 4 * n * (n + 1),
        (true, _) => (n + 1).pow(3) + 6 * n * (n + 1).pow(2),
        (false, d) => (3 * n + 1).pow(d as u32),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_closed_forms() {
        for kind in BasisKind::ALL {
            for (dim, levels) in [(2, vec![1, 2, 3, 5]), (3, vec![1, 2, 3])] {
                let el = ReferenceElement::new(kind, dim);
                for n in levels {
                    let map = GlobalDofMap::new(UniformMesh::new(dim, n), &el);
                    assert_eq!(map.num_dofs, expected_dofs(kind, dim, n), "{kind} dim={dim} n={n}");
                    assert_eq!(map.lattice.len(), map.num_dofs);
                }
            }
        }
        assert_eq!(expected_dofs(BasisKind::Q3, 2, 2), 49);
        assert_eq!(expected_dofs(BasisKind::S3Bernstein, 2, 2), 33);
        for n in 1..=40 {
            assert!(expected_dofs(BasisKind::S3Bernstein, 2, n) < expected_dofs(BasisKind::Q3, 2, n));
            assert!(expected_dofs(BasisKind::S3Bernstein, 3, n) < expected_dofs(BasisKind::Q3, 3, n));
        }
    }

    #[test]
    fn lattice_points_are_distinct() {
        for kind in BasisKind::ALL {
            let map = GlobalDofMap::new(UniformMesh::new(3, 2), &ReferenceElement::new(kind, 3));
            let mut pts = map.lattice.clone();
            pts.sort();
            pts.dedup();
            assert_eq!(pts.len(), map.num_dofs);
        }
    }

    #[test]
    fn shared_edge_maps_to_same_unknowns() {
        let el = ReferenceElement::new(BasisKind::S3Hermite, 2);
        let mesh = UniformMesh::new(2, 2);
        let map = GlobalDofMap::new(mesh, &el);
        // Cells (0,0) and (1,0) share the edge x = 1/2, 0 <= y <= 1/2.
        let left = 0;
        let right = 2;
        let pick = |cell: usize, label: &str| {
            let a = el.indices.iter().position(|i| i.to_string() == label).unwrap();
            map.cell_dofs[cell][a]
        };
        assert_eq!(pick(left, "42"), pick(right, "12"));
        assert_eq!(pick(left, "43"), pick(right, "13"));
        assert_eq!(pick(left, "44"), pick(right, "14"));
        assert!(map.cell_signs.iter().flatten().all(|&s| s == 1.0));
    }

    #[test]
    fn reversal_rules() {
        assert_eq!(edge_transfer(BasisKind::S3Bernstein, 0, false), (0, 1.0));
        assert_eq!(edge_transfer(BasisKind::S3Bernstein, 0, true), (1, 1.0));
        assert_eq!(edge_transfer(BasisKind::S3Hermite, 1, true), (0, -1.0));
        assert_eq!(edge_transfer(BasisKind::Q3, 1, true), (0, 1.0));
    }

    #[test]
    fn mirrored_cell_agrees_with_transfer_rule() {
        // Traversing the bottom edge backwards: the physical function attached to
        // local slot 0 of the mirrored cell must equal sign * (function in global slot).
        let h = 0.25;
        for kind in [BasisKind::S3Bernstein, BasisKind::S3Hermite] {
            let el = ReferenceElement::new(kind, 2);
            let pos = |s: &str| el.indices.iter().position(|i| i.to_string() == s).unwrap();
            let (a, b) = (pos("21"), pos("31"));
            let (gslot, sign) = edge_transfer(kind, 0, true);
            assert_eq!(gslot, 1);
            for &(x, y) in &[(0.1, 0.0), (0.4, 0.3), (0.9, 0.7)] {
                let mirrored = el.physical_scale(a, h) * el.polys[a].eval(&[1.0 - x, y]);
                let global = el.physical_scale(b, h) * el.polys[b].eval(&[x, y]);
                assert!((mirrored - sign * global).abs() < 1e-14, "{kind} at ({x},{y})");
            }
        }
    }

    #[test]
    fn boundary_counts() {
        let el = ReferenceElement::new(BasisKind::Q3, 2);
        let map = GlobalDofMap::new(UniformMesh::new(2, 2), &el);
        let interior = map.boundary_mask().iter().filter(|b| !**b).count();
        assert_eq!(interior, 5 * 5);
        let el = ReferenceElement::new(BasisKind::S3Bernstein, 2);
        let map = GlobalDofMap::new(UniformMesh::new(2, 2), &el);
        // One interior vertex and four interior edges.
        assert_eq!(map.boundary_mask().iter().filter(|b| !**b).count(), 1 + 4 * 2);
    }
}
