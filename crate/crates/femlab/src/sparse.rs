//! Compressed sparse row storage and Dirichlet elimination.

#[derive(Clone, Debug, PartialEq)]
pub struct CsrMatrix {
    pub n: usize,
    pub row_ptr: Vec<usize>,
    pub col_idx: Vec<usize>,
    pub values: Vec<f64>,
}

impl CsrMatrix {
    /// Square matrix from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(n: usize, mut triplets: Vec<(usize, usize, f64)>) -> Self {
        triplets.sort_unstable_by_key(|&(i, j, _)| (i, j));
        let mut row_ptr = vec![0; n + 1];
        let mut col_idx = Vec::with_capacity(triplets.len());
        let mut values: Vec<f64> = Vec::with_capacity(triplets.len());
        let mut last: Option<(usize, usize)> = None;
        for (i, j, v) in triplets {
            assert!(i < n && j < n, "triplet ({i},{j}) outside a {n}x{n} matrix");
            if last == Some((i, j)) {
                *values.last_mut().expect("previous entry") += v;
                continue;
            }
            col_idx.push(j);
            values.push(v);
            row_ptr[i + 1] += 1;
            last = Some((i, j));
        }
        for i in 0..n {
            row_ptr[i + 1] += row_ptr[i];
        }
        CsrMatrix { n, row_ptr, col_idx, values }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_triplets(n, (0..n).map(|i| (i, i, 1.0)).collect())
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let r = self.row_ptr[i]..self.row_ptr[i + 1];
        self.col_idx[r.clone()].iter().copied().zip(self.values[r].iter().copied())
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let r = self.row_ptr[i]..self.row_ptr[i + 1];
        match self.col_idx[r.clone()].binary_search(&j) {
            Ok(k) => self.values[r.start + k],
            Err(_) => 0.0,
        }
    }

    pub fn mul_vec(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate().take(self.n) {
            *yi = self.row(i).map(|(j, v)| v * x[j]).sum();
        }
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    /// Largest `|a_ij - a_ji|` relative to the largest `|a_ij|`.
    pub fn asymmetry(&self) -> f64 {
        let scale = self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if scale == 0.0 {
            return 0.0;
        }
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for (j, v) in self.row(i) {
                worst = worst.max((v - self.get(j, i)).abs());
            }
        }
        worst / scale
    }

    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        (0..self.n).map(|i| x[i] * self.row(i).map(|(j, v)| v * x[j]).sum::<f64>()).sum()
    }
}

/// `A x = b` with a set of prescribed unknowns.
#[derive(Clone, Debug)]
pub struct SparseLinearSystem {
    pub matrix: CsrMatrix,
    pub rhs: Vec<f64>,
    /// Prescribed value per unknown, if any.
    pub dirichlet: Vec<Option<f64>>,
}

impl SparseLinearSystem {
    pub fn new(matrix: CsrMatrix, rhs: Vec<f64>) -> Self {
        let n = matrix.n;
        assert_eq!(rhs.len(), n, "right-hand side length");
        SparseLinearSystem { matrix, rhs, dirichlet: vec![None; n] }
    }

    /// Prescribes `value` wherever `mask` is set.
    pub fn set_dirichlet(&mut self, mask: &[bool], value: f64) {
        for (d, &m) in self.dirichlet.iter_mut().zip(mask) {
            if m {
                *d = Some(value);
            }
        }
    }

    /// Symmetric elimination: prescribed rows and columns become identity
    /// rows/columns, their couplings are moved into the right-hand side.
    #[allow(clippy::needless_range_loop)]
    pub fn eliminated(&self) -> (CsrMatrix, Vec<f64>) {
        let a = &self.matrix;
        let mut rhs = self.rhs.clone();
        let mut triplets = Vec::with_capacity(a.nnz());
        for i in 0..a.n {
            if let Some(g) = self.dirichlet[i] {
                triplets.push((i, i, 1.0));
                rhs[i] = g;
                continue;
            }
            for (j, v) in a.row(i) {
                match self.dirichlet[j] {
                    Some(g) => rhs[i] -= v * g,
                    None => triplets.push((i, j, v)),
                }
            }
        }
        (CsrMatrix::from_triplets(a.n, triplets), rhs)
    }
}
