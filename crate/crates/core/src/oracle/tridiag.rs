//! Symmetric tridiagonal matrices with a constant off-diagonal.

use crate::error::{Error, Result};

/// `T = diag(d) + offdiag * (sub + super)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub offdiag: f64,
}

impl SymTridiag {
    /// Number of eigenvalues strictly below `x` (Sturm sequence count).
    pub fn count_below(&self, x: f64) -> usize {
        let e2 = self.offdiag * self.offdiag;
        let mut count = 0;
        let mut pivot = 1.0;
        for (i, &d) in self.diag.iter().enumerate() {
            pivot = if i == 0 { d - x } else { d - x - e2 / pivot };
            if pivot == 0.0 {
                pivot = -f64::EPSILON * (d.abs() + x.abs()).max(f64::MIN_POSITIVE);
            }
            if pivot < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn lower_bound(&self) -> f64 {
        let min = self.diag.iter().cloned().fold(f64::INFINITY, f64::min);
        min - 2.0 * self.offdiag.abs()
    }

    /// The `k`-th smallest eigenvalue (0-based) by bisection on the Sturm count.
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        if k >= self.diag.len() {
            return Err(Error::Grid(format!("eigenvalue {k} requested from a {}-point grid", self.diag.len())));
        }
        let mut lo = self.lower_bound();
        // expand upward until k + 1 eigenvalues lie below
        let mut step = 1.0f64.max(lo.abs());
        let mut hi = lo + step;
        while self.count_below(hi) <= k {
            lo = hi;
            step *= 2.0;
            hi += step;
            if !hi.is_finite() {
                return Err(Error::Grid("eigenvalue bracket overflow".into()));
            }
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi || hi - lo <= 1e-15 * (lo.abs().max(hi.abs())).max(1e-300) {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Solve `(T - shift) x = b` with the Thomas algorithm.
    pub fn solve_shifted(&self, shift: f64, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.diag.len();
        let e = self.offdiag;
        let mut c = vec![0.0; n];
        let mut x = vec![0.0; n];
        let mut denom = self.diag[0] - shift;
        if denom == 0.0 {
            denom = f64::EPSILON;
        }
        c[0] = e / denom;
        x[0] = b[0] / denom;
        for i in 1..n {
            let mut m = self.diag[i] - shift - e * c[i - 1];
            if m == 0.0 {
                m = f64::EPSILON;
            }
            c[i] = e / m;
            x[i] = (b[i] - e * x[i - 1]) / m;
        }
        for i in (0..n - 1).rev() {
            x[i] -= c[i] * x[i + 1];
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Grid("inverse iteration produced non-finite values".into()));
        }
        Ok(x)
    }

    /// Unit eigenvector for `eigenvalue` by inverse iteration.
    pub fn eigenvector(&self, eigenvalue: f64) -> Result<Vec<f64>> {
        let n = self.diag.len();
        let shift = eigenvalue + 1e-10 * eigenvalue.abs().max(1e-6);
        let mut v = vec![1.0 / (n as f64).sqrt(); n];
        for _ in 0..4 {
            let w = self.solve_shifted(shift, &v)?;
            let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            v = w.into_iter().map(|x| x / norm).collect();
        }
        // fix the sign: positive near the first maximum
        let idx = v.iter().enumerate().fold(0, |best, (i, x)| if x.abs() > v[best].abs() { i } else { best });
        if v[idx] < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        Ok(v)
    }
}
