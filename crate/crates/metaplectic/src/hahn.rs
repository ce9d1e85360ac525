//! Continuous dual Hahn polynomials: evaluation, orthogonality measure,
//! certified quadrature, and truncated Jacobi spectra.
//!
//! ω_m(x²) = ₃F₂(−m, a+ix, a−ix; a+b, a+c; 1) terminates and is real because
//! (a+ix)_j (a−ix)_j = Π_{r<j} ((a+r)² + x²).  The family is orthogonal on
//! [0, ∞) for the measure
//!
//!   dμ = (1/2π) |Γ(a+ix)Γ(b+ix)Γ(c+ix)/Γ(2ix)|² / (Γ(a+b)Γ(a+c)Γ(b+c)) dx
//!
//! with ⟨ω_m, ω_l⟩ = m!(b+c)_m / ((a+b)_m (a+c)_m) δ_{ml}, and satisfies
//!
//!   −x² ω_m = A_m ω_{m+1} − (A_m + C_m − a²) ω_m + C_m ω_{m−1},
//!
//! A_m = (m+a+b)(m+a+c), C_m = m(m+b+c−1).  Symmetrizing the recurrence gives
//! the Jacobi matrix of multiplication by x²; its truncations have spectra
//! filling [0, ∞), which is how the continuous part of the branching is
//! exhibited.  The branching application evaluates the rescaled variant
//! ω̃_m(x²) = ω_m((x/s)²) with s = 3, and the Casimir dictionary
//! −C = 2(sx)² + 1/2 pins the spectral infimum at exactly 1/2.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::f64::consts::PI;

use crate::arith::{self, rat, rat_to_f64};
use crate::error::{Error, Result};
use crate::gamma;
use crate::tridiag::TridiagonalOperator;

/// Parameter set (a, b, c) of a continuous dual Hahn family, together with
/// the spectral shift d and the argument scale s used by the branching
/// dictionary.
#[derive(Debug, Clone, PartialEq)]
pub struct HahnParams {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
    scale: BigRational,
}

impl HahnParams {
    pub fn new(
        a: BigRational,
        b: BigRational,
        c: BigRational,
        d: BigRational,
        scale: BigRational,
    ) -> Result<Self> {
        if a.is_negative() {
            return Err(Error::Parameter("hahn parameter a must be >= 0".into()));
        }
        if !b.is_positive() || !c.is_positive() {
            return Err(Error::Parameter("hahn parameters b, c must be > 0".into()));
        }
        if !scale.is_positive() {
            return Err(Error::Parameter("hahn scale must be > 0".into()));
        }
        Ok(Self { a, b, c, d, scale })
    }

    /// Parameters matched by the weight −1 ladder: (0, 1/3, 2/3), shift 1.
    pub fn weight_minus_one() -> Self {
        Self::new(rat(0, 1), rat(1, 3), rat(2, 3), rat(1, 1), rat(3, 1)).unwrap()
    }

    /// Parameters matched by the weight 0 ladder: (1/2, 1/6, 5/6), shift 1/4.
    pub fn weight_zero() -> Self {
        Self::new(rat(1, 2), rat(1, 6), rat(5, 6), rat(1, 4), rat(3, 1)).unwrap()
    }

    /// The parameter set attached to a weight, where one is known.
    pub fn for_weight(mu: i64) -> Option<Self> {
        match mu {
            -1 => Some(Self::weight_minus_one()),
            0 => Some(Self::weight_zero()),
            _ => None,
        }
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    pub fn d_shift(&self) -> &BigRational {
        &self.d
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    /// A_m = (m + a + b)(m + a + c).
    pub fn recurrence_a(&self, m: u32) -> BigRational {
        let m = rat(m as i64, 1);
        (&m + &self.a + &self.b) * (&m + &self.a + &self.c)
    }

    /// C_m = m(m + b + c − 1).
    pub fn recurrence_c(&self, m: u32) -> BigRational {
        let m = rat(m as i64, 1);
        (&m + &self.b + &self.c - rat(1, 1)) * m
    }

    /// Diagonal of the multiplication-by-x² Jacobi matrix: A_m + C_m − a².
    pub fn jacobi_diag(&self, m: u32) -> BigRational {
        self.recurrence_a(m) + self.recurrence_c(m) - (&self.a * &self.a)
    }

    /// ⟨ω_m, ω_m⟩ = m!(b+c)_m / ((a+b)_m (a+c)_m).
    pub fn norm_sq(&self, m: u32) -> BigRational {
        let m = m as u64;
        arith::factorial_rat(m) * arith::pochhammer(&(&self.b + &self.c), m)
            / (arith::pochhammer(&(&self.a + &self.b), m)
                * arith::pochhammer(&(&self.a + &self.c), m))
    }

    fn abc_f64(&self) -> (f64, f64, f64) {
        (rat_to_f64(&self.a), rat_to_f64(&self.b), rat_to_f64(&self.c))
    }
}

/// ω_m(y) as an exact rational, y the unscaled x².
pub fn cdh_eval_exact(m: u32, y: &BigRational, p: &HahnParams) -> BigRational {
    let mut sum = BigRational::one();
    let mut term = BigRational::one();
    for j in 1..=m as i64 {
        // term_j = term_{j-1} * (-(m-j+1)/j) * ((a+j-1)^2 + y) / ((a+b+j-1)(a+c+j-1))
        let aj = &p.a + rat(j - 1, 1);
        let num = &aj * &aj + y;
        let den = (&p.a + &p.b + rat(j - 1, 1)) * (&p.a + &p.c + rat(j - 1, 1));
        term = term * rat(-(m as i64 - j + 1), j) * num / den;
        sum += &term;
    }
    sum
}

/// ω̃_m(t) = ω_m(t/s²) as an exact rational, t the scaled x².
pub fn cdh_eval_scaled_exact(m: u32, t: &BigRational, p: &HahnParams) -> BigRational {
    cdh_eval_exact(m, &(t / (&p.scale * &p.scale)), p)
}

/// ω_m(y) in floating point, by the terminating series.
pub fn cdh_eval(m: u32, y: f64, p: &HahnParams) -> f64 {
    cdh_eval_conditioned(m, y, p).0
}

/// Series value together with Σ_j |term_j|, the scale against which the
/// floating-point error of the alternating sum must be judged.
pub(crate) fn cdh_eval_conditioned(m: u32, y: f64, p: &HahnParams) -> (f64, f64) {
    let (a, b, c) = p.abc_f64();
    let mut sum = 1.0f64;
    let mut cond = 1.0f64;
    let mut term = 1.0f64;
    for j in 1..=m as i64 {
        let jf = j as f64;
        let aj = a + jf - 1.0;
        term *= -((m as i64 - j + 1) as f64) / jf * (aj * aj + y)
            / ((a + b + jf - 1.0) * (a + c + jf - 1.0));
        sum += term;
        cond += term.abs();
    }
    (sum, cond)
}

/// ω̃_m(t) = ω_m(t/s²) in floating point.
pub fn cdh_eval_scaled(m: u32, t: f64, p: &HahnParams) -> f64 {
    let s = rat_to_f64(&p.scale);
    cdh_eval(m, t / (s * s), p)
}

/// All of ω_0(y), …, ω_{m_max}(y) by the three-term recurrence.  This is the
/// fast path used at quadrature nodes; the series evaluator above is the
/// independent reference it is tested against.
pub fn cdh_eval_all(m_max: u32, y: f64, p: &HahnParams) -> Vec<f64> {
    let (a, b, c) = p.abc_f64();
    let mut out = Vec::with_capacity(m_max as usize + 1);
    out.push(1.0);
    let mut prev = 0.0f64;
    let mut cur = 1.0f64;
    for m in 0..m_max {
        let mf = m as f64;
        let am = (mf + a + b) * (mf + a + c);
        let cm = mf * (mf + b + c - 1.0);
        let next = ((am + cm - a * a - y) * cur - cm * prev) / am;
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// Density of the orthogonality measure at x ≥ 0.  The x = 0 value is the
/// limit: (2/π)Γ(b)Γ(c)/Γ(b+c) when a = 0 (the Γ(ix)/Γ(2ix) ratio tends
/// to 2), and 0 otherwise.
pub fn measure_density(x: f64, p: &HahnParams) -> f64 {
    DensityEval::new(p).eval(x)
}

struct DensityEval {
    a: f64,
    b: f64,
    c: f64,
    log_norm: f64,
}

impl DensityEval {
    fn new(p: &HahnParams) -> Self {
        let (a, b, c) = p.abc_f64();
        let log_norm = -(2.0 * PI).ln()
            - gamma::gamma_real(a + b).ln()
            - gamma::gamma_real(a + c).ln()
            - gamma::gamma_real(b + c).ln();
        Self { a, b, c, log_norm }
    }

    fn eval(&self, x: f64) -> f64 {
        assert!(x >= 0.0, "measure density needs x >= 0");
        if x == 0.0 {
            return if self.a == 0.0 {
                2.0 / PI * gamma::gamma_real(self.b) * gamma::gamma_real(self.c)
                    / gamma::gamma_real(self.b + self.c)
            } else {
                0.0
            };
        }
        // combine every log before the single exponential so the e^{±2πx}
        // halves cancel exactly where they should
        let mut s = self.log_norm + gamma::log_inv_gamma_2ix_sq(x);
        for w in [self.a, self.b, self.c] {
            s += 2.0 * gamma::log_abs_gamma(num_complex::Complex64::new(w, x));
        }
        s.exp()
    }
}

const GL_ORDER: usize = 32;

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// Legendre recurrence.
fn legendre_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    for k in 0..n.div_ceil(2) {
        let mut x = (PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (pn, dp) = legendre_p_dp(n, x);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_p_dp(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        xs[k] = -x;
        xs[n - 1 - k] = x;
        ws[k] = w;
        ws[n - 1 - k] = w;
    }
    (xs, ws)
}

fn legendre_p_dp(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0f64;
    let mut p1 = x;
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    (p1, n as f64 * (x * p1 - p0) / (x * x - 1.0))
}

fn integrate_fixed<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    panels: usize,
    xs: &[f64],
    ws: &[f64],
) -> f64 {
    let h = (hi - lo) / panels as f64;
    let mut total = 0.0f64;
    for k in 0..panels {
        let (u, v) = (lo + k as f64 * h, lo + (k + 1) as f64 * h);
        let mid = 0.5 * (u + v);
        let half = 0.5 * (v - u);
        let mut acc = 0.0;
        for (&x, &w) in xs.iter().zip(ws) {
            acc += w * f(mid + half * x);
        }
        total += acc * half;
    }
    total
}

/// Composite Gauss-Legendre integration with panel doubling until the value
/// stabilizes to `tol` (relative to max(1, |value|)).
fn integrate_adaptive<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (xs, ws) = legendre_rule(GL_ORDER);
    let mut panels = 8usize;
    let mut prev = integrate_fixed(f, lo, hi, panels, &xs, &ws);
    while panels <= 4096 {
        panels *= 2;
        let cur = integrate_fixed(f, lo, hi, panels, &xs, &ws);
        let change = (cur - prev).abs();
        if change <= tol * cur.abs().max(1.0) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureNonConvergence {
        tol,
        change: f64::NAN,
    })
}

/// Rigorous upper bound for ∫_X^∞ |ω_m ω_l| dμ.
///
/// Stirling with remainder |μ(z)| ≤ 1/(6|z|) on Re z ≥ 0 gives, for x ≥ 1,
/// density(x) ≤ K x^q e^{−πx} with q = 2(a+b+c) − 2 and
/// K = 4π e^{3/x} / (Γ(a+b)Γ(a+c)Γ(b+c)); the polynomial factors are bounded
/// on [X, ∞) by S x^{2m} where S sums the series coefficients with
/// (a+r)² + x² ≤ (1 + (a+r)²/X²) x².  Finally
/// ∫_X^∞ x^p e^{−πx} dx ≤ X^p e^{−πX} / (π − p/X) whenever p/X < π.
fn tail_bound(p: &HahnParams, m: u32, l: u32, x_cut: f64) -> f64 {
    let (a, b, c) = p.abc_f64();
    let coeff_sum = |deg: u32| -> f64 {
        let mut sum = 1.0f64;
        let mut term = 1.0f64;
        for j in 1..=deg as i64 {
            let jf = j as f64;
            let aj = a + jf - 1.0;
            term *= ((deg as i64 - j + 1) as f64) / jf * (1.0 + aj * aj / (x_cut * x_cut))
                / ((a + b + jf - 1.0) * (a + c + jf - 1.0));
            sum += term;
        }
        sum
    };
    let q = 2.0 * (a + b + c) - 2.0;
    let p_exp = q + 2.0 * (m + l) as f64;
    if p_exp >= 0.9 * PI * x_cut {
        return f64::INFINITY;
    }
    let ln_k = (4.0 * PI).ln() + 3.0 / x_cut
        - gamma::gamma_real(a + b).ln()
        - gamma::gamma_real(a + c).ln()
        - gamma::gamma_real(b + c).ln();
    let ln_tail = ln_k + coeff_sum(m).ln() + coeff_sum(l).ln() + p_exp * x_cut.ln()
        - PI * x_cut
        - (PI - p_exp / x_cut).ln();
    ln_tail.exp()
}

/// Numerical inner product ⟨ω_m, ω_l⟩ next to its closed form.
#[derive(Debug, Clone, Serialize)]
pub struct OrthogonalityCheck {
    pub m: u32,
    pub l: u32,
    /// quadrature value of ∫ ω_m ω_l dμ over [0, cut]
    pub value: f64,
    /// closed form m!(b+c)_m/((a+b)_m(a+c)_m) δ_{ml}
    #[serde(serialize_with = "arith::serialize_rat")]
    pub expected: BigRational,
    pub abs_error: f64,
    /// integration endpoint, pushed out until the certified tail bound
    /// drops below 1e-30
    pub cut: f64,
    pub tail_bound: f64,
}

/// Integrates ω_m ω_l dμ and compares with the closed form.  The endpoint
/// starts at X = 60 and grows until the analytic tail bound certifies that
/// the truncation error is below 1e−30.
pub fn quadrature_orthogonality(m: u32, l: u32, p: &HahnParams) -> Result<OrthogonalityCheck> {
    let mut cut = 60.0f64;
    while tail_bound(p, m, l, cut) >= 1e-30 {
        cut += 30.0;
        if cut > 1200.0 {
            return Err(Error::Invariant(
                "tail bound did not certify an integration endpoint".into(),
            ));
        }
    }
    let dens = DensityEval::new(p);
    let top = m.max(l);
    let f = |x: f64| {
        let w = cdh_eval_all(top, x * x, p);
        dens.eval(x) * w[m as usize] * w[l as usize]
    };
    let value = integrate_adaptive(&f, 0.0, cut, 1e-11)?;
    let expected = if m == l {
        p.norm_sq(m)
    } else {
        BigRational::zero()
    };
    let abs_error = (value - rat_to_f64(&expected)).abs();
    Ok(OrthogonalityCheck {
        m,
        l,
        value,
        expected,
        abs_error,
        cut,
        tail_bound: tail_bound(p, m, l, cut),
    })
}

/// Symmetric tridiagonal truncation of multiplication by x² (unscaled
/// variable): diag_m = A_m + C_m − a², offdiag_m = √(A_m C_{m+1}).
pub fn jacobi_matrix(p: &HahnParams, n: usize) -> Result<TridiagonalOperator> {
    if n == 0 {
        return Err(Error::Parameter("jacobi matrix needs size >= 1".into()));
    }
    let diag: Vec<f64> = (0..n).map(|m| rat_to_f64(&p.jacobi_diag(m as u32))).collect();
    let offdiag: Vec<f64> = (0..n - 1)
        .map(|m| {
            rat_to_f64(&(p.recurrence_a(m as u32) * p.recurrence_c(m as u32 + 1))).sqrt()
        })
        .collect();
    TridiagonalOperator::new(diag, offdiag)
}

#[derive(Debug, Clone, Serialize)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub mass: f64,
}

/// Spectrum of a truncated Jacobi operator, pushed through the Casimir
/// dictionary −C = 2(s·x)² + 1/2.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub weight: i64,
    pub size: usize,
    /// eigenvalues of multiplication by x², ascending
    pub theta: Vec<f64>,
    /// spectral variable of the rescaled measure, s·√θ
    pub x_scaled: Vec<f64>,
    /// principal-series parametrization λ = √2·s·√θ of the same points
    /// (the source normalization of −C = 1/2 + λ² is reported, not chosen)
    pub lambda: Vec<f64>,
    /// −C = 2(s·√θ)² + 1/2
    pub minus_casimir: Vec<f64>,
    /// Gauss weights of the truncation: squared first eigenvector components
    pub christoffel_weights: Vec<f64>,
    pub theta_min: f64,
    pub minus_casimir_min: f64,
    pub minus_casimir_max: f64,
    /// Christoffel mass histogram over the unscaled spectral variable x
    pub histogram: Vec<HistogramBin>,
    /// Kolmogorov distance between the weighted empirical distribution of
    /// x = √θ and the cumulative orthogonality measure
    pub ks_statistic: f64,
}

/// Builds the size-n truncation for the parameter set of the given weight
/// (−1 or 0) and reports its spectrum under the Casimir dictionary.
pub fn spectrum_report(weight: i64, n: usize) -> Result<SpectrumReport> {
    let p = HahnParams::for_weight(weight).ok_or_else(|| {
        Error::Parameter(format!("no hahn parameters attached to weight {weight}"))
    })?;
    let jac = jacobi_matrix(&p, n)?;
    let theta = jac.eigenvalues_default()?;
    let weights = jac.gauss_weights(&theta);
    let s = rat_to_f64(p.scale());
    let xs: Vec<f64> = theta.iter().map(|&t| t.max(0.0).sqrt()).collect();
    let x_scaled: Vec<f64> = xs.iter().map(|&x| s * x).collect();
    let lambda: Vec<f64> = x_scaled.iter().map(|&x| 2f64.sqrt() * x).collect();
    let minus_casimir: Vec<f64> = x_scaled.iter().map(|&x| 2.0 * x * x + 0.5).collect();
    let theta_min = theta.first().copied().unwrap_or(f64::NAN);
    let mc_min = minus_casimir.first().copied().unwrap_or(f64::NAN);
    let mc_max = minus_casimir.last().copied().unwrap_or(f64::NAN);

    let bins = 50usize;
    let top = xs.last().copied().unwrap_or(1.0).max(1e-12);
    let mut histogram: Vec<HistogramBin> = (0..bins)
        .map(|i| HistogramBin {
            lo: top * i as f64 / bins as f64,
            hi: top * (i + 1) as f64 / bins as f64,
            mass: 0.0,
        })
        .collect();
    for (&x, &w) in xs.iter().zip(&weights) {
        let idx = ((x / top * bins as f64) as usize).min(bins - 1);
        histogram[idx].mass += w;
    }

    let ks_statistic = ks_distance(&p, &xs, &weights)?;

    Ok(SpectrumReport {
        weight,
        size: n,
        theta,
        x_scaled,
        lambda,
        minus_casimir,
        christoffel_weights: weights,
        theta_min,
        minus_casimir_min: mc_min,
        minus_casimir_max: mc_max,
        histogram,
        ks_statistic,
    })
}

/// Kolmogorov distance between Σ w_i δ_{x_i} and the measure, comparing the
/// cumulative measure at each node against the midpoint value W_{i−1} + w_i/2
/// of the empirical jump.  The Chebyshev-Markov-Stieltjes inequalities pin
/// F(x_i) between W_{i−1} and W_i, so the one-sided jump values differ from F
/// by up to a full Gauss weight no matter how accurate the rule is; the
/// midpoint convention measures genuine distributional misfit instead of
/// that built-in discretization.
fn ks_distance(p: &HahnParams, xs_sorted: &[f64], weights: &[f64]) -> Result<f64> {
    let dens = DensityEval::new(p);
    let (gx, gw) = legendre_rule(GL_ORDER);
    let f = |x: f64| dens.eval(x);
    let mut cum = 0.0f64;
    let mut prev_x = 0.0f64;
    let mut emp = 0.0f64;
    let mut ks = 0.0f64;
    for (&x, &w) in xs_sorted.iter().zip(weights) {
        if x > prev_x {
            let panels = (((x - prev_x) / 0.25).ceil() as usize).max(1);
            cum += integrate_fixed(&f, prev_x, x, panels, &gx, &gw);
            prev_x = x;
        }
        ks = ks.max((emp + 0.5 * w - cum).abs());
        emp += w;
    }
    // mass escaping past the largest node counts in full
    ks = ks.max(1.0 - emp.min(1.0));
    Ok(ks)
}

/// Smallest reported −C value for each truncation size, for trend checks
/// against the spectral infimum 1/2.
pub fn spectrum_minima(weight: i64, sizes: &[usize]) -> Result<Vec<f64>> {
    let p = HahnParams::for_weight(weight).ok_or_else(|| {
        Error::Parameter(format!("no hahn parameters attached to weight {weight}"))
    })?;
    let s = rat_to_f64(p.scale());
    sizes
        .iter()
        .map(|&n| {
            let jac = jacobi_matrix(&p, n)?;
            let theta = jac.eigenvalues_default()?;
            let t0 = theta.first().copied().unwrap_or(f64::NAN).max(0.0);
            Ok(2.0 * s * s * t0 + 0.5)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_string;

    fn wm1() -> HahnParams {
        HahnParams::weight_minus_one()
    }

    fn w0() -> HahnParams {
        HahnParams::weight_zero()
    }

    #[test]
    fn parameter_validation() {
        assert!(HahnParams::new(rat(-1, 3), rat(1, 3), rat(1, 3), rat(0, 1), rat(3, 1)).is_err());
        assert!(HahnParams::new(rat(0, 1), rat(0, 1), rat(1, 3), rat(0, 1), rat(3, 1)).is_err());
        assert!(HahnParams::new(rat(0, 1), rat(1, 3), rat(1, 3), rat(0, 1), rat(0, 1)).is_err());
        assert!(HahnParams::for_weight(-2).is_none());
    }

    #[test]
    fn recurrence_coefficients_exact() {
        let p = wm1();
        assert_eq!(rat_string(&p.recurrence_a(0)), "2/9");
        assert_eq!(rat_string(&p.recurrence_c(0)), "0/1");
        assert_eq!(rat_string(&p.recurrence_c(1)), "1/1");
        assert_eq!(rat_string(&p.jacobi_diag(0)), "2/9");
        let q = w0();
        assert_eq!(rat_string(&q.recurrence_a(0)), "8/9");
        // diag_0 = A_0 + C_0 - a^2 = 8/9 - 1/4
        assert_eq!(rat_string(&q.jacobi_diag(0)), "23/36");
    }

    #[test]
    fn norm_closed_form() {
        let p = wm1();
        assert_eq!(rat_string(&p.norm_sq(0)), "1/1");
        // 1!(1)_1/((1/3)(2/3)) = 9/2
        assert_eq!(rat_string(&p.norm_sq(1)), "9/2");
        let q = w0();
        // 2!(1)_2/((2/3)_2(4/3)_2) = 4/((10/9)(28/9)) = 81/70
        assert_eq!(rat_string(&q.norm_sq(2)), "81/70");
        // norm ratio identity ||w_{m+1}||^2/||w_m||^2 = C_{m+1}/A_m
        for params in [wm1(), w0()] {
            for m in 0..20u32 {
                let lhs = params.norm_sq(m + 1) / params.norm_sq(m);
                let rhs = params.recurrence_c(m + 1) / params.recurrence_a(m);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn series_matches_symbolic_degree_one() {
        // w_1(y) = 1 - (a^2+y)/((a+b)(a+c))
        for p in [wm1(), w0()] {
            for y in [rat(0, 1), rat(5, 7), rat(12, 1)] {
                let direct = cdh_eval_exact(1, &y, &p);
                let expect = BigRational::one()
                    - (&(p.a() * p.a()) + &y)
                        / ((p.a() + p.b()) * (p.a() + p.c()));
                assert_eq!(direct, expect);
            }
        }
        assert!(cdh_eval_exact(0, &rat(3, 1), &wm1()).is_one());
        assert!(cdh_eval_exact(1, &rat(0, 1), &wm1()).is_one());
    }

    #[test]
    fn float_series_and_recurrence_agree_with_exact() {
        for p in [wm1(), w0()] {
            for &(num, den) in &[(1i64, 4i64), (7, 2), (111, 5)] {
                let y = rat(num, den);
                let yf = num as f64 / den as f64;
                let all = cdh_eval_all(12, yf, &p);
                for m in 0..=12u32 {
                    let exact = rat_to_f64(&cdh_eval_exact(m, &y, &p));
                    let series = cdh_eval(m, yf, &p);
                    let scale = exact.abs().max(1.0);
                    assert!((series - exact).abs() / scale < 1e-10, "series m = {m}");
                    assert!(
                        (all[m as usize] - exact).abs() / scale < 1e-10,
                        "recurrence m = {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn recurrence_identity_random_arguments() {
        // three-term recurrence satisfied by the series evaluator, scaled and
        // unscaled arguments
        for p in [wm1(), w0()] {
            let (a, _, _) = p.abc_f64();
            let s = rat_to_f64(p.scale());
            let mut x = 0.173f64;
            for _ in 0..24 {
                x = (x * 997.13).fract() * 20.0;
                if x < 1e-3 {
                    x += 0.5;
                }
                let y = x * x;
                for m in 1..=30u32 {
                    let am = rat_to_f64(&p.recurrence_a(m));
                    let cm = rat_to_f64(&p.recurrence_c(m));
                    let bm = rat_to_f64(&p.jacobi_diag(m));
                    let (w0v, e0) = cdh_eval_conditioned(m - 1, y, &p);
                    let (w1v, e1) = cdh_eval_conditioned(m, y, &p);
                    let (w2v, e2) = cdh_eval_conditioned(m + 1, y, &p);
                    let lhs = -y * w1v;
                    let rhs = am * w2v - bm * w1v + cm * w0v;
                    // the alternating series near a zero of w_m carries an
                    // unavoidable error of eps times the term-magnitude sum,
                    // so that is the scale the identity can be held to
                    let scale = am * e2 + bm.abs() * e1 + cm * e0 + y * e1;
                    assert!((lhs - rhs).abs() <= 1e-10 * scale.max(1.0), "m={m} x={x}");
                    // scaled variant: t = (s x)^2, divide the multiplication
                    // variable by s^2
                    let t = s * s * y;
                    let ws = [
                        cdh_eval_scaled(m - 1, t, &p),
                        cdh_eval_scaled(m, t, &p),
                        cdh_eval_scaled(m + 1, t, &p),
                    ];
                    let lhs_s = -(t / (s * s)) * ws[1];
                    let rhs_s = am * ws[2] - bm * ws[1] + cm * ws[0];
                    assert!((lhs_s - rhs_s).abs() <= 1e-10 * scale.max(1.0));
                    let _ = a;
                }
            }
        }
    }

    #[test]
    fn density_limits_and_positivity() {
        let p = wm1();
        // x -> 0+ limit is (2/pi)G(1/3)G(2/3)/G(1) = 4/sqrt(3)
        let at0 = measure_density(0.0, &p);
        assert!((at0 - 4.0 / 3f64.sqrt()).abs() < 1e-12);
        let near0 = measure_density(1e-9, &p);
        assert!((near0 - at0).abs() < 1e-8);
        // a = 1/2 set vanishes at the origin
        assert_eq!(measure_density(0.0, &w0()), 0.0);
        assert!(measure_density(1e-9, &w0()) < 1e-8);
        for &x in &[0.01, 0.5, 1.0, 3.0, 10.0, 40.0, 80.0] {
            for p in [wm1(), w0()] {
                let d = measure_density(x, &p);
                assert!(d.is_finite() && d >= 0.0, "x = {x}");
            }
        }
    }

    #[test]
    fn density_matches_reflection_closed_forms() {
        // For (0, 1/3, 2/3): |G(ix)/G(2ix)|^2 = 4 cosh(pi x) and
        // |G(1/3+ix)G(2/3+ix)|^2 = pi^2/(3/4 + sinh^2(pi x)) give
        //   density = sqrt(3) cosh(pi x) / (3/4 + sinh^2(pi x)).
        let p = wm1();
        for &x in &[0.05, 0.3, 1.0, 2.5, 6.0] {
            let sh = (PI * x).sinh();
            let closed = 3f64.sqrt() * (PI * x).cosh() / (0.75 + sh * sh);
            let d = measure_density(x, &p);
            assert!((d - closed).abs() / closed < 1e-11, "x = {x}");
        }
        // For (1/2, 1/6, 5/6): |G(1/2+ix)|^2 = pi/cosh(pi x),
        // |G(1/6+ix)G(5/6+ix)|^2 = pi^2/(1/4 + sinh^2 pi x), and
        // |1/G(2ix)|^2 = 2x sinh(2 pi x)/pi, with G(2/3)G(4/3)G(1) = 2pi/(3 sqrt 3).
        let q = w0();
        for &x in &[0.05, 0.3, 1.0, 2.5, 6.0] {
            let sh = (PI * x).sinh();
            let ch = (PI * x).cosh();
            let closed = (1.0 / (2.0 * PI))
                * (PI / ch)
                * (PI * PI / (0.25 + sh * sh))
                * (2.0 * x * (2.0 * PI * x).sinh() / PI)
                * (3.0 * 3f64.sqrt() / (2.0 * PI));
            let d = measure_density(x, &q);
            assert!((d - closed).abs() / closed < 1e-11, "x = {x}");
        }
    }

    #[test]
    fn tail_bound_is_a_bound_and_small() {
        let p = wm1();
        // closed form density = sqrt(3) cosh / (3/4 + sinh^2) <= 4 e^{-pi x}
        // for x >= 1; compare numerically on a grid against the K x^q e^{-pi x}
        // envelope used by the certificate
        for &x in &[8.0f64, 20.0, 60.0] {
            let envelope = tail_density_envelope(&p, x);
            assert!(measure_density(x, &p) <= envelope);
        }
        assert!(tail_bound(&p, 0, 0, 60.0) < 1e-30);
        assert!(tail_bound(&p, 3, 2, 60.0) < 1e-30);
        // degree 40 polynomial needs a farther endpoint
        assert!(tail_bound(&p, 10, 10, 60.0) > 1e-30);
        assert!(tail_bound(&p, 10, 10, 120.0) < 1e-30);
    }

    fn tail_density_envelope(p: &HahnParams, x: f64) -> f64 {
        let (a, b, c) = p.abc_f64();
        let q = 2.0 * (a + b + c) - 2.0;
        let k = 4.0 * PI * (3.0 / x).exp()
            / (gamma::gamma_real(a + b) * gamma::gamma_real(a + c) * gamma::gamma_real(b + c));
        k * x.powf(q) * (-PI * x).exp()
    }

    #[test]
    fn quadrature_orthogonality_small_cases() {
        let p = wm1();
        // total mass
        let r = quadrature_orthogonality(0, 0, &p).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10, "mass {:.3e}", r.value - 1.0);
        // <w1, w1> = 9/2
        let r = quadrature_orthogonality(1, 1, &p).unwrap();
        assert!((r.value - 4.5).abs() / 4.5 < 1e-10);
        assert_eq!(rat_string(&r.expected), "9/2");
        // orthogonality
        let r = quadrature_orthogonality(0, 1, &p).unwrap();
        assert!(r.value.abs() < 1e-10);
        let r = quadrature_orthogonality(2, 3, &p).unwrap();
        assert!(r.value.abs() < 1e-8 * rat_to_f64(&p.norm_sq(3)));
        // weight-zero set, <w2, w2> = 81/70
        let q = w0();
        let r = quadrature_orthogonality(2, 2, &q).unwrap();
        let expect = 81.0 / 70.0;
        assert!((r.value - expect).abs() / expect < 1e-10);
    }

    #[test]
    fn jacobi_matrix_entries() {
        let p = wm1();
        let j1 = jacobi_matrix(&p, 1).unwrap();
        assert_eq!(j1.diag(), &[2.0 / 9.0]);
        let j4 = jacobi_matrix(&p, 4).unwrap();
        // offdiag_0 = sqrt(A_0 C_1) = sqrt(2/9)
        assert!((j4.offdiag()[0] - (2.0f64 / 9.0).sqrt()).abs() < 1e-15);
        assert!(j4.offdiag().iter().all(|&b| b >= 0.0));
        assert!(jacobi_matrix(&p, 0).is_err());
    }

    #[test]
    fn truncated_spectra_nonnegative_and_interlacing() {
        for p in [wm1(), w0()] {
            let e10 = jacobi_matrix(&p, 10).unwrap().eigenvalues_default().unwrap();
            let e11 = jacobi_matrix(&p, 11).unwrap().eigenvalues_default().unwrap();
            assert!(e10[0] >= -1e-9 && e11[0] >= -1e-9);
            for k in 0..10 {
                assert!(e11[k] <= e10[k] + 1e-9);
                assert!(e10[k] <= e11[k + 1] + 1e-9);
            }
        }
    }

    #[test]
    fn gauss_weights_bracket_the_cumulative_measure() {
        // Chebyshev-Markov-Stieltjes: the partial weight sums bracket the
        // true cumulative measure at the nodes.  This ties eigenvalues,
        // first-component weights, and the density together.
        let p = wm1();
        let jac = jacobi_matrix(&p, 60).unwrap();
        let theta = jac.eigenvalues_default().unwrap();
        let w = jac.gauss_weights(&theta);
        let xs: Vec<f64> = theta.iter().map(|&t| t.max(0.0).sqrt()).collect();
        let dens = DensityEval::new(&p);
        let (gx, gw) = legendre_rule(GL_ORDER);
        let f = |x: f64| dens.eval(x);
        let mut cum = 0.0;
        let mut prev = 0.0;
        let mut emp = 0.0;
        for (&x, &wi) in xs.iter().zip(&w) {
            let panels = (((x - prev) / 0.25).ceil() as usize).max(1);
            cum += integrate_fixed(&f, prev, x, panels, &gx, &gw);
            prev = x;
            assert!(emp <= cum + 1e-8, "lower bracket at x = {x}");
            emp += wi;
            assert!(cum <= emp + 1e-8, "upper bracket at x = {x}");
        }
        let total: f64 = w.iter().sum();
        assert!((total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn spectrum_report_small() {
        let r = spectrum_report(-1, 80).unwrap();
        assert_eq!(r.size, 80);
        assert!(r.minus_casimir_min >= 0.5 - 1e-6);
        // the lowest node creeps toward the infimum 1/2 quite slowly for
        // this exponential-tail measure; at n = 80 it sits near 1.19
        assert!(r.minus_casimir_min < 1.5);
        assert!(r.theta_min >= -1e-9);
        // dictionary consistency on every reported point
        for i in 0..r.theta.len() {
            let x = r.x_scaled[i];
            assert!((r.minus_casimir[i] - (2.0 * x * x + 0.5)).abs() < 1e-12);
            assert!((r.lambda[i] - 2f64.sqrt() * x).abs() < 1e-12);
        }
        let mass: f64 = r.histogram.iter().map(|b| b.mass).sum();
        assert!((mass - 1.0).abs() < 1e-9);
        // midpoint ks is about 0.050 at n = 80 and falls with n
        assert!(r.ks_statistic < 0.08);
        assert!(spectrum_report(5, 10).is_err());
    }

    #[test]
    fn spectrum_minima_trend() {
        let mins = spectrum_minima(0, &[25, 50, 100]).unwrap();
        assert!(mins.iter().all(|&m| m >= 0.5 - 1e-6));
        assert!(mins[1] <= mins[0] + 1e-9 && mins[2] <= mins[1] + 1e-9);
    }
}
