//! Symmetric tridiagonal pencils K − λW (W diagonal, positive): Sturm counts,
//! bisection for single eigenvalues and inverse iteration for eigenvectors.

use crate::error::{Error, Result};

/// K = tridiag(off, diag, off) paired with the diagonal weight W.
#[derive(Debug, Clone)]
pub struct TridiagPencil {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
    pub weight: Vec<f64>,
}

impl TridiagPencil {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `lambda`.
    ///
    /// By Sylvester's law of inertia this is the number of negative pivots of
    /// the LDLᵀ factorization of K − λW.
    pub fn sturm_count(&self, lambda: f64) -> usize {
        let n = self.diag.len();
        if n == 0 {
            return 0;
        }
        let mut count = 0;
        let mut pivot = self.diag[0] - lambda * self.weight[0];
        for i in 0..n {
            if i > 0 {
                let prev = if pivot == 0.0 { f64::MIN_POSITIVE.sqrt() } else { pivot };
                let e = self.off[i - 1];
                pivot = (self.diag[i] - lambda * self.weight[i]) - e * e / prev;
            }
            if pivot < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Weighted Gershgorin lower bound on the spectrum.
    pub fn lower_bound(&self) -> f64 {
        let n = self.diag.len();
        (0..n)
            .map(|i| {
                let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
                let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
                (self.diag[i] - left - right) / self.weight[i]
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// The `index`-th (0-based, ascending) eigenvalue inside [lo, hi].
    ///
    /// Requires count(lo) ≤ index < count(hi).
    pub fn eigenvalue_in(&self, index: usize, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..400 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi || hi - lo <= 2.0 * f64::EPSILON * mid.abs() {
                break;
            }
            if self.sturm_count(mid) <= index {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// The `index`-th eigenvalue below `upper`, or an error when fewer than
    /// `index + 1` eigenvalues lie below `upper`.
    pub fn eigenvalue_below(&self, index: usize, upper: f64, guess: Option<f64>) -> Result<f64> {
        let available = self.sturm_count(upper);
        if available <= index {
            return Err(Error::NoSuchState(format!(
                "only {available} discrete eigenvalues below {upper}, index {index} requested"
            )));
        }
        if let Some(g) = guess.filter(|g| *g < upper) {
            // warm start: widen a bracket around the guess until it isolates the eigenvalue
            let mut width = 1e-6 * g.abs().max(1e-12);
            for _ in 0..60 {
                let lo = g - width;
                let hi = (g + width).min(upper);
                if self.sturm_count(lo) <= index && self.sturm_count(hi) > index {
                    return Ok(self.eigenvalue_in(index, lo, hi));
                }
                width *= 8.0;
            }
        }
        let lo = self.lower_bound() - 1.0;
        Ok(self.eigenvalue_in(index, lo, upper))
    }

    /// Eigenvector for a converged eigenvalue by inverse iteration,
    /// normalized to xᵀWx = 1 with a positive first nonzero entry.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.len();
        let shift = lambda;
        let mut x = vec![1.0; n];
        for _ in 0..4 {
            let rhs: Vec<f64> = x.iter().zip(&self.weight).map(|(a, w)| a * w).collect();
            x = self.solve_shifted(shift, &rhs);
            let norm = x
                .iter()
                .zip(&self.weight)
                .map(|(a, w)| a * a * w)
                .sum::<f64>()
                .sqrt();
            x.iter_mut().for_each(|v| *v /= norm);
        }
        if let Some(first) = x.iter().find(|v| v.abs() > 1e-300) {
            if *first < 0.0 {
                x.iter_mut().for_each(|v| *v = -*v);
            }
        }
        x
    }

    // Thomas algorithm for (K − σW) x = rhs
    fn solve_shifted(&self, sigma: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.len();
        let tiny = f64::EPSILON * self.diag.iter().fold(0.0f64, |m, d| m.max(d.abs()));
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let guard = |p: f64| if p.abs() < tiny { tiny.copysign(p) } else { p };
        let mut p = guard(self.diag[0] - sigma * self.weight[0]);
        if n > 1 {
            c[0] = self.off[0] / p;
        }
        d[0] = rhs[0] / p;
        for i in 1..n {
            let e = self.off[i - 1];
            p = guard(self.diag[i] - sigma * self.weight[i] - e * c[i - 1]);
            if i + 1 < n {
                c[i] = self.off[i] / p;
            }
            d[i] = (rhs[i] - e * d[i - 1]) / p;
        }
        let mut x = d;
        for i in (0..n - 1).rev() {
            x[i] -= c[i] * x[i + 1];
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn chain(n: usize) -> TridiagPencil {
        TridiagPencil {
            diag: vec![2.0; n],
            off: vec![-1.0; n - 1],
            weight: vec![1.0; n],
        }
    }

    #[test]
    fn sturm_count_small() {
        // [[1, −1], [−1, 3]] → 2 ∓ √2
        let p = TridiagPencil {
            diag: vec![1.0, 3.0],
            off: vec![-1.0],
            weight: vec![1.0, 1.0],
        };
        assert_eq!(p.sturm_count(0.0), 0);
        assert_eq!(p.sturm_count(1.0), 1);
        assert_eq!(p.sturm_count(4.0), 2);
        let l0 = p.eigenvalue_below(0, 10.0, None).unwrap();
        assert!((l0 - (2.0 - 2f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn laplacian_chain_spectrum() {
        let n = 200;
        let p = chain(n);
        for k in 0..5 {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * PI / (n + 1) as f64).cos();
            let got = p.eigenvalue_below(k, 5.0, None).unwrap();
            assert!((got - exact).abs() < 1e-13, "k={k}");
        }
        assert!(p.eigenvalue_below(n, 5.0, None).is_err());
    }

    #[test]
    fn weighted_pencil_matches_scaled_problem() {
        // W = 2I halves every eigenvalue
        let mut p = chain(50);
        let plain = p.eigenvalue_below(3, 5.0, None).unwrap();
        p.weight = vec![2.0; 50];
        let weighted = p.eigenvalue_below(3, 5.0, Some(plain / 2.0 + 1e-4)).unwrap();
        assert!((weighted - plain / 2.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let p = chain(100);
        let l0 = p.eigenvalue_below(0, 5.0, None).unwrap();
        let l1 = p.eigenvalue_below(1, 5.0, None).unwrap();
        let v0 = p.eigenvector(l0);
        let v1 = p.eigenvector(l1);
        let dot: f64 = v0.iter().zip(&v1).map(|(a, b)| a * b).sum();
        let n0: f64 = v0.iter().map(|a| a * a).sum();
        assert!(dot.abs() < 1e-10);
        assert!((n0 - 1.0).abs() < 1e-12);
        // sin profile
        let scale = v0[0] / (PI / 101.0).sin();
        for (i, v) in v0.iter().enumerate() {
            assert!((v - scale * ((i + 1) as f64 * PI / 101.0).sin()).abs() < 1e-10);
        }
    }
}
