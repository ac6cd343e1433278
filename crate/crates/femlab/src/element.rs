//! Reference elements on `[0,1]^dim` built from the exact bases.

use std::fmt;
use std::str::FromStr;

use serendipity_core::cubic1d::binomial;
use serendipity_core::serendipity::{
    classify_index, serendipity_basis, tensor_basis, to_unit, Domain, IndexClass, PointIndex,
    Style,
};

use crate::poly::FloatPoly;
use crate::quadrature::QuadratureRule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// 12/32-function serendipity basis, Bernstein style.
    S3Bernstein,
    /// 12/32-function serendipity basis, Hermite style.
    S3Hermite,
    /// 16/64-function tensor-product cubic basis (classical Bernstein scaling).
    Q3,
}

impl BasisKind {
    pub const ALL: [BasisKind; 3] = [BasisKind::S3Bernstein, BasisKind::S3Hermite, BasisKind::Q3];

    pub fn tag(self) -> &'static str {
        match self {
            BasisKind::S3Bernstein => "s3b",
            BasisKind::S3Hermite => "s3h",
            BasisKind::Q3 => "q3",
        }
    }

    pub fn is_serendipity(self) -> bool {
        self != BasisKind::Q3
    }

    pub fn local_count(self, dim: usize) -> usize {
        match (self.is_serendipity(), dim) {
            (true, 2) => 12,
            (true, _) => 32,
            (false, d) => 4usize.pow(d as u32),
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for BasisKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "s3b" | "s3-bernstein" => Ok(BasisKind::S3Bernstein),
            "s3h" | "s3-hermite" => Ok(BasisKind::S3Hermite),
            "q3" | "q3-tensor" => Ok(BasisKind::Q3),
            other => Err(format!("unknown basis kind `{other}`")),
        }
    }
}

/// What a local basis function is attached to on the reference cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalDof {
    /// Corner with coordinates in `{0,1}`.
    Vertex { corner: [u8; 3] },
    /// Edge along `axis` starting at `start` (whose `axis` coordinate is 0);
    /// `slot` 0 sits near the start, 1 near the end.
    Edge { axis: usize, start: [u8; 3], slot: u8 },
    /// Face or interior lattice point, offsets in `0..=3`.
    Lattice { offset: [u8; 3] },
}

impl LocalDof {
    pub fn from_index(idx: &PointIndex) -> Self {
        let d = idx.digits();
        let mut offset = [0u8; 3];
        for (o, &digit) in offset.iter_mut().zip(d) {
            *o = digit - 1;
        }
        match classify_index(idx) {
            IndexClass::Vertex => LocalDof::Vertex { corner: offset.map(|o| o / 3) },
            IndexClass::Edge => {
                let axis = d.iter().position(|&g| g == 2 || g == 3).expect("edge digit");
                let mut start = offset.map(|o| o / 3);
                start[axis] = 0;
                LocalDof::Edge { axis, start, slot: offset[axis] - 1 }
            }
            _ => LocalDof::Lattice { offset },
        }
    }

    /// Position on the `0..=3` lattice of the reference cell.
    pub fn lattice_offset(&self) -> [u8; 3] {
        match *self {
            LocalDof::Vertex { corner } => corner.map(|c| 3 * c),
            LocalDof::Edge { axis, start, slot } => {
                let mut p = start.map(|c| 3 * c);
                p[axis] = 1 + slot;
                p
            }
            LocalDof::Lattice { offset } => offset,
        }
    }
}

/// Basis polynomials on `[0,1]^dim` with their attachments.
#[derive(Clone, Debug)]
pub struct ReferenceElement {
    pub kind: BasisKind,
    pub dim: usize,
    pub indices: Vec<PointIndex>,
    pub dofs: Vec<LocalDof>,
    pub polys: Vec<FloatPoly>,
}

impl ReferenceElement {
    pub fn new(kind: BasisKind, dim: usize) -> Self {
        assert!(dim == 2 || dim == 3, "dimension must be 2 or 3");
        let basis = match kind {
            BasisKind::S3Bernstein => to_unit(&serendipity_basis(dim, Style::Bernstein)),
            BasisKind::S3Hermite => to_unit(&serendipity_basis(dim, Style::Hermite)),
            BasisKind::Q3 => tensor_basis(dim, Style::Bernstein, Domain::Unit),
        };
        let mut indices = Vec::with_capacity(basis.len());
        let mut polys = Vec::with_capacity(basis.len());
        for (idx, p) in &basis.entries {
            let p = if kind == BasisKind::Q3 {
                let w: i64 = idx.digits().iter().map(|&d| binomial(3, d as i64 - 1)).product();
                p.scale(&serendipity_core::rat(w))
            } else {
                p.clone()
            };
            indices.push(*idx);
            polys.push(FloatPoly::from_exact(&p));
        }
        let dofs = indices.iter().map(LocalDof::from_index).collect();
        ReferenceElement { kind, dim, indices, dofs, polys }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Factor turning reference function `a` into the physical one on a cell
    /// of width `h`. Hermite edge functions become tangential derivatives in
    /// physical units, pointing along the local edge direction.
    pub fn physical_scale(&self, a: usize, h: f64) -> f64 {
        match (self.kind, self.dofs[a]) {
            (BasisKind::S3Hermite, LocalDof::Edge { slot, .. }) => {
                if slot == 0 {
                    h
                } else {
                    -h
                }
            }
            _ => 1.0,
        }
    }

    pub fn tabulate(&self, rule: &QuadratureRule) -> Tabulation {
        assert_eq!(rule.dim, self.dim, "quadrature dimension mismatch");
        let values = rule
            .points
            .iter()
            .map(|p| self.polys.iter().map(|f| f.eval(p)).collect())
            .collect();
        let grads = rule
            .points
            .iter()
            .map(|p| self.polys.iter().map(|f| f.grad(p)).collect())
            .collect();
        Tabulation { values, grads }
    }
}

/// Values `[q][a]` and reference gradients `[q][a]` at quadrature points.
#[derive(Clone, Debug)]
pub struct Tabulation {
    pub values: Vec<Vec<f64>>,
    pub grads: Vec<Vec<[f64; 3]>>,
}
