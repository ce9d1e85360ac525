//! Symmetric tridiagonal eigenvalue machinery.
//!
//! Truncating the Jacobi operator of an orthogonal-polynomial recurrence
//! gives a symmetric tridiagonal matrix with nonnegative off-diagonal.  Its
//! eigenvalues are the Gauss quadrature nodes of the orthogonality measure
//! and the squared first components of the normalized eigenvectors are the
//! Gauss weights.  Eigenvalues come from Sturm-sequence bisection: the LDLᵀ
//! pivots of J - s count eigenvalues below the shift s, so each eigenvalue is
//! pinned in its own shrinking interval.  Deterministic given the tolerance,
//! no balancing heuristics, and the weights come from the three-term
//! recurrence rather than an eigenvector solve.

use crate::error::{Error, Result};

/// Symmetric tridiagonal matrix with nonnegative off-diagonal entries.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TridiagonalOperator {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Parameter("empty tridiagonal matrix".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::Parameter(format!(
                "off-diagonal length {} does not match size {}",
                offdiag.len(),
                diag.len()
            )));
        }
        if diag.iter().chain(offdiag.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Parameter("non-finite tridiagonal entry".into()));
        }
        if offdiag.iter().any(|&b| b < 0.0) {
            return Err(Error::Parameter("negative off-diagonal entry".into()));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Interval guaranteed to contain the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.size();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1] } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i] } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below the shift, by counting negative
    /// LDLᵀ pivots of J - s.
    fn count_below(&self, s: f64) -> usize {
        let mut count = 0usize;
        let mut d = self.diag[0] - s;
        if d == 0.0 {
            d = -f64::MIN_POSITIVE;
        }
        if d < 0.0 {
            count += 1;
        }
        for i in 1..self.size() {
            let b = self.offdiag[i - 1];
            d = (self.diag[i] - s) - b * b / d;
            if d == 0.0 {
                d = -f64::MIN_POSITIVE;
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// All eigenvalues, sorted ascending, each located by bisection to
    /// absolute tolerance `tol` (or the local floating-point resolution,
    /// whichever is coarser).
    pub fn eigenvalues(&self, tol: f64) -> Result<Vec<f64>> {
        if !(tol > 0.0) {
            return Err(Error::Parameter("bisection tolerance must be positive".into()));
        }
        let (glo, ghi) = self.gershgorin();
        let n = self.size();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let (mut lo, mut hi) = (glo, ghi);
            let mut iterations = 0u32;
            loop {
                let scale = lo.abs().max(hi.abs()).max(1.0);
                if hi - lo <= tol.max(4.0 * f64::EPSILON * scale) {
                    break;
                }
                if iterations >= 200 {
                    // each step halves the interval, so this only fires if
                    // the requested tolerance is below what 200 halvings of
                    // the Gershgorin interval can deliver
                    return Err(Error::BisectionIterationCap { tol });
                }
                let mid = 0.5 * (lo + hi);
                if self.count_below(mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
                iterations += 1;
            }
            out.push(0.5 * (lo + hi));
        }
        Ok(out)
    }

    pub fn eigenvalues_default(&self) -> Result<Vec<f64>> {
        self.eigenvalues(1e-12)
    }

    /// Gauss weights: squared first components of the normalized
    /// eigenvectors, via w = 1/Σ_m P_m(θ)² where P_m are the orthonormal
    /// polynomials of the recurrence.  Rescales the running recurrence to
    /// avoid overflow for large truncations.
    pub fn gauss_weights(&self, eigenvalues: &[f64]) -> Vec<f64> {
        let n = self.size();
        eigenvalues
            .iter()
            .map(|&theta| {
                // running values carry a common factor e^{log_c}; the true
                // reciprocal weight is sum / e^{2 log_c}
                let mut pm1 = 0.0f64;
                let mut p = 1.0f64;
                let mut sum = 1.0f64;
                let mut log_c = 0.0f64;
                for m in 0..n - 1 {
                    let b = self.offdiag[m];
                    let bprev = if m > 0 { self.offdiag[m - 1] } else { 0.0 };
                    let next = ((theta - self.diag[m]) * p - bprev * pm1) / b;
                    pm1 = p;
                    p = next;
                    sum += p * p;
                    if sum > 1e280 {
                        let r = 1e-140;
                        pm1 *= r;
                        p *= r;
                        sum *= r * r;
                        log_c += r.ln();
                    }
                }
                (2.0 * log_c).exp() / sum
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        assert!(TridiagonalOperator::new(vec![], vec![]).is_err());
        assert!(TridiagonalOperator::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(TridiagonalOperator::new(vec![1.0, 2.0], vec![-0.5]).is_err());
        assert!(TridiagonalOperator::new(vec![1.0], vec![]).is_ok());
    }

    #[test]
    fn one_by_one() {
        let t = TridiagonalOperator::new(vec![2.0 / 9.0], vec![]).unwrap();
        let e = t.eigenvalues_default().unwrap();
        assert_eq!(e.len(), 1);
        assert!((e[0] - 2.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn two_by_two_quadratic_formula() {
        let (d0, d1, e0) = (0.7, -1.3, 0.9);
        let t = TridiagonalOperator::new(vec![d0, d1], vec![e0]).unwrap();
        let mid = 0.5 * (d0 + d1);
        let rad = (0.25 * (d0 - d1) * (d0 - d1) + e0 * e0).sqrt();
        let eig = t.eigenvalues_default().unwrap();
        assert!((eig[0] - (mid - rad)).abs() < 1e-12);
        assert!((eig[1] - (mid + rad)).abs() < 1e-12);
    }

    #[test]
    fn three_by_three_known_spectrum() {
        // diag 2, off 1: eigenvalues 2 - √2, 2, 2 + √2
        let t = TridiagonalOperator::new(vec![2.0; 3], vec![1.0; 2]).unwrap();
        let eig = t.eigenvalues_default().unwrap();
        let expect = [2.0 - 2f64.sqrt(), 2.0, 2.0 + 2f64.sqrt()];
        for (a, b) in eig.iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn chebyshev_nodes_and_weights() {
        // Free Jacobi matrix (diag 0, off 1/2) is the second-kind Chebyshev
        // recurrence: eigenvalues cos(jπ/(n+1)), Gauss weights
        // 2 sin²(jπ/(n+1))/(n+1).
        let n = 6usize;
        let t = TridiagonalOperator::new(vec![0.0; n], vec![0.5; n - 1]).unwrap();
        let eig = t.eigenvalues_default().unwrap();
        let w = t.gauss_weights(&eig);
        for (i, (&e, &wi)) in eig.iter().zip(w.iter()).enumerate() {
            let j = (n - i) as f64; // ascending eigenvalues are j = n..1
            let theta = j * std::f64::consts::PI / (n as f64 + 1.0);
            assert!((e - theta.cos()).abs() < 1e-12);
            assert!((wi - 2.0 * theta.sin().powi(2) / (n as f64 + 1.0)).abs() < 1e-12);
        }
        let total: f64 = w.iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn interlacing_between_truncations() {
        // leading principal sections of the same operator interlace
        let diag: Vec<f64> = (0..12).map(|i| (i * i) as f64 * 0.3 + 0.2).collect();
        let off: Vec<f64> = (1..12).map(|i| i as f64 * 0.7).collect();
        let t11 = TridiagonalOperator::new(diag[..11].to_vec(), off[..10].to_vec()).unwrap();
        let t12 = TridiagonalOperator::new(diag.clone(), off.clone()).unwrap();
        let a = t11.eigenvalues_default().unwrap();
        let b = t12.eigenvalues_default().unwrap();
        for k in 0..11 {
            assert!(b[k] <= a[k] + 1e-10 && a[k] <= b[k + 1] + 1e-10);
        }
    }

    #[test]
    fn rejects_nonpositive_tolerance() {
        let t = TridiagonalOperator::new(vec![1.0, 2.0], vec![0.5]).unwrap();
        assert!(t.eigenvalues(0.0).is_err());
        assert!(t.eigenvalues(-1.0).is_err());
        assert!(t.eigenvalues(f64::MIN_POSITIVE).is_ok());
    }
}
