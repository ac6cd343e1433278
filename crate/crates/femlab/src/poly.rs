//! Floating-point copies of exact polynomials, for fast evaluation.

use num_traits::ToPrimitive;
use serendipity_core::MultiPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct FloatPoly {
    pub nvars: usize,
    pub terms: Vec<([u32; 3], f64)>,
}

impl FloatPoly {
    pub fn from_exact(p: &MultiPoly) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| {
                let mut e = [0u32; 3];
                e[..m.nvars()].copy_from_slice(m.exponents());
                (e, c.to_f64().expect("finite coefficient"))
            })
            .collect();
        FloatPoly { nvars: p.nvars(), terms }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c * (0..self.nvars).map(|k| x[k].powi(e[k] as i32)).product::<f64>())
            .sum()
    }

    /// Gradient; unused trailing entries are zero.
    pub fn grad(&self, x: &[f64]) -> [f64; 3] {
        let mut g = [0.0; 3];
        for (e, c) in &self.terms {
            for (d, gd) in g.iter_mut().enumerate().take(self.nvars) {
                if e[d] == 0 {
                    continue;
                }
                let mut term = c * e[d] as f64;
                for k in 0..self.nvars {
                    let p = if k == d { e[k] - 1 } else { e[k] };
                    term *= x[k].powi(p as i32);
                }
                *gd += term;
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_exact_evaluation() {
        let p = MultiPoly::parse(2, "1/3 - x^2*y + 5/2*y^3").unwrap();
        let f = FloatPoly::from_exact(&p);
        let x = [0.25, -0.5];
        let expected = 1.0 / 3.0 - 0.0625 * -0.5 + 2.5 * -0.125;
        assert!((f.eval(&x) - expected).abs() < 1e-15);
        let g = f.grad(&x);
        assert!((g[0] - (-2.0 * 0.25 * -0.5)).abs() < 1e-15);
        assert!((g[1] - (-0.0625 + 7.5 * 0.25)).abs() < 1e-15);
        assert_eq!(g[2], 0.0);
    }
}
