//! Named verification suites bundling the exact and numerical checks into
//! deterministic pass/fail reports.
//!
//! Every check compares an expected string against an actual string (exact
//! mode) or a measured value against a tolerance; a suite passes iff every
//! check passes, and the process exit code of the CLI mirrors that.

use std::time::Instant;

use num_complex::Complex64;
use serde::Serialize;

use crate::arith::{f64_string, factorial_rat, pochhammer, rat, rat_string};
use crate::branching::{
    casimir_tridiagonal, discrete_components, generalized_eigenfunction, hwv_norm_limit,
    hwv_norm_partials, match_hahn_params, no_lws_scan, rep_casimir_eigenvalue, solve_hwv,
    weight_basis, HwvNormVerdict, Parity, ReprDescriptor, ReprKind,
};
use crate::error::{Error, Result};
use crate::fock::{invariant_norm_closed, Axis, FockPolynomial};
use crate::hahn::{quadrature_orthogonality, spectrum_minima, spectrum_report, HahnParams};
use crate::radical::RadicalScalar;
use crate::sl2::{casimir_operator, principal_action, principal_sl2, verify_sl2_matrix};

/// Optional knobs shared by all suites; unset fields fall back to
/// suite-specific defaults chosen so the full battery stays fast.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    pub n: Option<u32>,
    pub weight: Option<i64>,
    pub m_max: Option<u32>,
    pub size: Option<usize>,
    pub k: Option<u32>,
    pub terms: Option<u32>,
    pub tol: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One named comparison with its outcome.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub status: CheckStatus,
    pub expected: String,
    pub actual: String,
}

impl Check {
    fn exact(id: impl Into<String>, description: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        let expected = expected.into();
        let actual = actual.into();
        let status = if expected == actual {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Check {
            id: id.into(),
            description: description.into(),
            status,
            expected,
            actual,
        }
    }

    fn bound(id: impl Into<String>, description: impl Into<String>, value: f64, bound: f64) -> Self {
        let status = if value <= bound {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Check {
            id: id.into(),
            description: description.into(),
            status,
            expected: format!("<= {}", f64_string(bound)),
            actual: f64_string(value),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Deterministic result of one suite; wall time is reported in the text
/// rendering only, so identical invocations stay byte-identical in JSON.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: String,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub wall_ms: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        out.push_str(&format!(
            "suite {}: {}/{} checks passed ({:.1} ms)\n",
            self.suite,
            passed,
            self.checks.len(),
            self.wall_ms
        ));
        for c in &self.checks {
            let tag = if c.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("  {tag}  {}  {}\n", c.id, c.description));
            if !c.passed() {
                out.push_str(&format!(
                    "        expected {} actual {}\n",
                    c.expected, c.actual
                ));
            }
        }
        out
    }
}

pub const SUITE_NAMES: [&str; 8] = [
    "sl2-matrix",
    "sl2-weyl",
    "norms",
    "recurrence",
    "hahn-orthogonality",
    "spectrum",
    "hwv",
    "discrete-catalog",
];

/// Run one named suite and assemble its report in declaration order.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let checks = match name {
        "sl2-matrix" => suite_sl2_matrix(opts),
        "sl2-weyl" => suite_sl2_weyl(opts)?,
        "norms" => suite_norms(opts),
        "recurrence" => suite_recurrence(opts)?,
        "hahn-orthogonality" => suite_hahn_orthogonality(opts)?,
        "spectrum" => suite_spectrum(opts)?,
        "hwv" => suite_hwv(opts)?,
        "discrete-catalog" => suite_discrete_catalog(opts)?,
        other => return Err(Error::UnknownSuite(other.into())),
    };
    Ok(SuiteReport {
        schema: "1",
        suite: name.into(),
        checks,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Defining sl(2) relations on the embedded 2n x 2n matrices, n = 1..n_max.
fn suite_sl2_matrix(opts: &SuiteOptions) -> Vec<Check> {
    let n_max = opts.n.unwrap_or(8).max(1) as usize;
    let mut checks = Vec::new();
    for n in 1..=n_max {
        let report = verify_sl2_matrix(&principal_sl2(n));
        let mut add = |id: &str, description: &str, labels: &[&str]| {
            let ok = report
                .checks
                .iter()
                .filter(|c| labels.iter().any(|l| c.label.contains(l)))
                .all(|c| c.pass);
            checks.push(Check::exact(
                format!("n{n}/{id}"),
                description,
                "true",
                format!("{ok}"),
            ));
        };
        add(
            "symplectic-blocks",
            "B, C blocks symmetric and E- = (E+)^t",
            &["symmetric", "(E+)^t"],
        );
        add("bracket-h-eplus", "[H, E+] = 2 E+", &["[H, E+]"]);
        add("bracket-h-eminus", "[H, E-] = -2 E-", &["[H, E-]"]);
        add("bracket-eplus-eminus", "[E+, E-] = H", &["[E+, E-]"]);
    }
    checks
}

/// Operator sl(2) relations and Casimir centrality for the derived action.
fn suite_sl2_weyl(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let n_max = opts.n.unwrap_or(2).max(1) as usize;
    let mut checks = Vec::new();
    for n in 1..=n_max {
        let act = principal_action(n);
        let two_ep = act.e_plus.scale(&RadicalScalar::integer(2));
        let m2_em = act.e_minus.scale(&RadicalScalar::integer(-2));
        let rel = |ok: bool| if ok { "0" } else { "nonzero" };
        let b1 = &act.h.commutator(&act.e_plus)? - &two_ep;
        checks.push(Check::exact(
            format!("n{n}/bracket-h-eplus"),
            "[dL(H), dL(E+)] - 2 dL(E+) = 0",
            "0",
            rel(b1.is_zero()),
        ));
        let b2 = &act.h.commutator(&act.e_minus)? - &m2_em;
        checks.push(Check::exact(
            format!("n{n}/bracket-h-eminus"),
            "[dL(H), dL(E-)] + 2 dL(E-) = 0",
            "0",
            rel(b2.is_zero()),
        ));
        let b3 = &act.e_plus.commutator(&act.e_minus)? - &act.h;
        checks.push(Check::exact(
            format!("n{n}/bracket-eplus-eminus"),
            "[dL(E+), dL(E-)] - dL(H) = 0",
            "0",
            rel(b3.is_zero()),
        ));
        let cas = casimir_operator(n);
        for (tag, op) in [("h", &act.h), ("eplus", &act.e_plus), ("eminus", &act.e_minus)] {
            let c = cas.commutator(op)?;
            checks.push(Check::exact(
                format!("n{n}/casimir-commutes-{tag}"),
                "[C, dL(X)] = 0",
                "0",
                rel(c.is_zero()),
            ));
        }
    }
    if n_max >= 2 {
        let cas = casimir_operator(2);
        let one = FockPolynomial::constant(2, RadicalScalar::one());
        let c1 = cas.apply(&one)?;
        let mut expect = one.scale(&RadicalScalar::rational(-9, 2));
        expect = &expect
            + &FockPolynomial::monomial(vec![1, 3], RadicalScalar::sqrt_int(3).scale(&rat(2, 1)));
        checks.push(Check::exact(
            "n2/casimir-on-1",
            "C 1 = -9/2 + 2 sqrt(3) z1 z2^3",
            "0",
            if (&c1 - &expect).is_zero() { "0" } else { "nonzero" },
        ));
        let z2 = FockPolynomial::monomial(vec![0, 1], RadicalScalar::one());
        let cz2 = cas.apply(&z2)?;
        let mut expect2 = z2.scale(&RadicalScalar::integer(-12));
        expect2 = &expect2
            + &FockPolynomial::monomial(vec![1, 4], RadicalScalar::sqrt_int(3).scale(&rat(2, 1)));
        checks.push(Check::exact(
            "n2/casimir-on-z2",
            "C z2 = -12 z2 + 2 sqrt(3) z1 z2^4",
            "0",
            if (&cz2 - &expect2).is_zero() { "0" } else { "nonzero" },
        ));
    }
    Ok(checks)
}

/// Closed-form squared norms of I^m z1^k and I^m z2^k against brute-force
/// monomial inner products, plus the ladder norms on the weights -1 and 0.
fn suite_norms(opts: &SuiteOptions) -> Vec<Check> {
    let m_max = opts.m_max.unwrap_or(12);
    let k_max = opts.k.unwrap_or(6);
    let mut checks = Vec::new();
    for (tag, axis) in [("z1", Axis::Z1), ("z2", Axis::Z2)] {
        let mut mismatches = 0u32;
        for m in 0..=m_max {
            for k in 0..=k_max {
                let extra = match axis {
                    Axis::Z1 => [k, 0],
                    Axis::Z2 => [0, k],
                };
                let brute = FockPolynomial::invariant_power(m, extra).norm_sq();
                let closed = invariant_norm_closed(m, k, axis);
                if brute.as_rational() != Some(closed) {
                    mismatches += 1;
                }
            }
        }
        checks.push(Check::exact(
            format!("closed-vs-brute-{tag}"),
            format!("||I^m {tag}^k||^2 closed form, m <= {m_max}, k <= {k_max}"),
            "0 mismatches",
            format!("{mismatches} mismatches"),
        ));
    }
    for mu in [-1i64, 0] {
        let p = HahnParams::for_weight(mu).expect("known weight");
        let basis = weight_basis(mu, m_max);
        let mut mismatches = 0u32;
        for m in 0..=m_max {
            let closed = factorial_rat(m as u64) * factorial_rat(m as u64)
                / (pochhammer(&(p.a() + p.b()), m as u64)
                    * pochhammer(&(p.a() + p.c()), m as u64));
            if basis.norms[m as usize].as_rational() != Some(closed) {
                mismatches += 1;
            }
        }
        checks.push(Check::exact(
            format!("ladder-norms-weight{mu}"),
            format!("||W_m||^2 = (m!)^2/((a+b)_m (a+c)_m) on weight {mu}"),
            "0 mismatches",
            format!("{mismatches} mismatches"),
        ));
    }
    checks
}

/// Exact tridiagonalization on one weight space and the dual Hahn match.
fn suite_recurrence(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let weight = opts.weight.unwrap_or(-1);
    let m_max = opts.m_max.unwrap_or(30);
    let mut checks = Vec::new();
    let data = match casimir_tridiagonal(weight, m_max) {
        Ok(d) => {
            checks.push(Check::exact(
                "tridiagonal",
                format!("operator action stays on adjacent rungs, m <= {m_max}"),
                "tridiagonal",
                "tridiagonal",
            ));
            d
        }
        Err(e) => {
            checks.push(Check::exact(
                "tridiagonal",
                format!("operator action stays on adjacent rungs, m <= {m_max}"),
                "tridiagonal",
                e.to_string(),
            ));
            return Ok(checks);
        }
    };
    let mut asym = 0u32;
    for m in 0..m_max as usize {
        let lhs = &data.triples[m].alpha * &data.norms[m + 1];
        let rhs = &data.triples[m + 1].gamma * &data.norms[m];
        if lhs != rhs {
            asym += 1;
        }
    }
    checks.push(Check::exact(
        "symmetry",
        "alpha_m ||W_{m+1}||^2 = gamma_{m+1} ||W_m||^2",
        "0 mismatches",
        format!("{asym} mismatches"),
    ));
    if let Some(params) = HahnParams::for_weight(weight) {
        let report = match_hahn_params(&data, &params);
        for quantity in ["alpha", "beta", "gamma", "norm_sq"] {
            let bad = report
                .entries
                .iter()
                .filter(|e| e.quantity == quantity && !e.matched)
                .count();
            checks.push(Check::exact(
                format!("hahn-{quantity}"),
                format!(
                    "{quantity} matches dual Hahn (a,b,c,shift) = ({},{},{},{})",
                    report.params[0], report.params[1], report.params[2], report.params[3]
                ),
                "0 mismatches",
                format!("{bad} mismatches"),
            ));
        }
        let frozen: &[(usize, (i64, i64), (i64, i64), (i64, i64))] = if weight == -1 {
            &[(0, (2, 9), (-1, 3), (0, 1)), (1, (20, 9), (-10, 3), (1, 1))]
        } else {
            &[(0, (8, 9), (-2, 3), (0, 1))]
        };
        for (m, a, b, g) in frozen {
            let t = &data.triples[*m];
            let ok = t.alpha == rat(a.0, a.1) && t.beta == rat(b.0, b.1) && t.gamma == rat(g.0, g.1);
            checks.push(Check::exact(
                format!("frozen-m{m}"),
                format!(
                    "triple at m = {m} equals ({}/{}, {}/{}, {}/{})",
                    a.0, a.1, b.0, b.1, g.0, g.1
                ),
                "true",
                format!("{ok}"),
            ));
        }
    }
    Ok(checks)
}

/// Quadrature orthogonality of the scaled dual Hahn functions against the
/// continuous measure, for both parameter sets.
fn suite_hahn_orthogonality(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let m_max = opts.m_max.unwrap_or(10);
    let tol = opts.tol.unwrap_or(1e-8);
    let mut checks = Vec::new();
    for mu in [-1i64, 0] {
        let p = HahnParams::for_weight(mu).expect("known weight");
        let mut diag_err = 0.0f64;
        let mut off_err = 0.0f64;
        let mut mass_err = 0.0f64;
        for m in 0..=m_max {
            for l in m..=m_max {
                let c = quadrature_orthogonality(m, l, &p)?;
                if m == l {
                    let expected = crate::arith::rat_to_f64(&c.expected);
                    let rel = (c.value - expected).abs() / expected;
                    diag_err = diag_err.max(rel);
                    if m == 0 {
                        mass_err = (c.value - 1.0).abs();
                    }
                } else {
                    let nm = crate::arith::rat_to_f64(&p.norm_sq(m));
                    let nl = crate::arith::rat_to_f64(&p.norm_sq(l));
                    off_err = off_err.max(c.value.abs() / (nm * nl).sqrt());
                }
            }
        }
        checks.push(Check::bound(
            format!("diag-weight{mu}"),
            format!("max relative error of <w_m, w_m>, m <= {m_max}"),
            diag_err,
            tol,
        ));
        checks.push(Check::bound(
            format!("offdiag-weight{mu}"),
            format!("max normalized |<w_m, w_l>|, m < l <= {m_max}"),
            off_err,
            tol,
        ));
        checks.push(Check::bound(
            format!("mass-weight{mu}"),
            "total measure mass |mu(R) - 1|",
            mass_err,
            1e-10,
        ));
    }
    Ok(checks)
}

/// Spectral truncations: Casimir infimum bound, monotone edge, and the
/// Kolmogorov distance between truncated and continuous spectral measures.
fn suite_spectrum(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let weight = opts.weight.unwrap_or(-1);
    let size = opts.size.unwrap_or(2000).max(8);
    let ks_tol = opts.tol.unwrap_or(0.05);
    let sizes = [size / 8, size / 4, size / 2, size];
    let report = spectrum_report(weight, size)?;
    let mut checks = Vec::new();
    checks.push(Check::bound(
        "edge-bound",
        format!("all -C eigenvalues >= 1/2 - 1e-6 at N = {size} (deficit shown)"),
        0.5 - report.minus_casimir_min,
        1e-6,
    ));
    let minima = spectrum_minima(weight, &sizes[..3])?;
    let mut chain = minima.clone();
    chain.push(report.minus_casimir_min);
    let monotone = chain.windows(2).all(|w| w[1] < w[0]);
    checks.push(Check::exact(
        "edge-monotone",
        format!("min -C strictly decreases across N in {sizes:?}"),
        "decreasing",
        if monotone { "decreasing" } else { "not decreasing" },
    ));
    checks.push(Check::bound(
        "ks",
        format!("Kolmogorov distance to the continuous law at N = {size}"),
        report.ks_statistic,
        ks_tol,
    ));
    let mass: f64 = report.christoffel_weights.iter().sum();
    checks.push(Check::bound(
        "mass",
        "Christoffel weights sum to 1",
        (mass - 1.0).abs(),
        1e-10,
    ));
    Ok(checks)
}

/// Highest-weight ladder: closed-form coefficients, telescoping residual,
/// Casimir eigenvalue on interior degrees, and the norm-series verdict.
fn suite_hwv(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let k = opts.k.unwrap_or(1);
    let terms = opts.terms.unwrap_or(30);
    let mut checks = Vec::new();
    let series = solve_hwv(k, terms)?;
    let mut bad = 0u32;
    for (l, a) in series.coefficients.iter().enumerate() {
        let expect = factorial_rat(k as u64)
            / (factorial_rat(l as u64) * factorial_rat(k as u64 + l as u64));
        if a != &expect {
            bad += 1;
        }
    }
    checks.push(Check::exact(
        "coefficients",
        format!("a_l = k!/(l! (k+l)!) for l <= {terms}, solved by exact division"),
        "0 mismatches",
        format!("{bad} mismatches"),
    ));
    let residual = crate::branching::raising_residual(&series)?;
    let expect = series.polynomials[terms as usize].mul_monomial(&[0, 2], &RadicalScalar::one());
    checks.push(Check::exact(
        "raising-residual",
        "E+ f^(L) = z2^2 f_L, a single top-band monomial",
        "single band",
        if (&residual - &expect).is_zero() && residual.num_terms() == 1 {
            "single band".into()
        } else {
            format!("{} terms", residual.num_terms())
        },
    ));
    let cas = casimir_operator(2);
    let f = series.truncation();
    let nu = rat(3 * k as i64 + 1, 1);
    let eig = &nu * &nu / rat(2, 1) - &nu;
    let res = &cas.apply(&f)? - &f.scale(&RadicalScalar::from_rational(eig.clone()));
    let top = vec![k + terms, 3 * terms];
    let next = vec![k + terms + 1, 3 * terms + 3];
    let interior_clean = res.terms().all(|(alpha, _)| alpha == &top || alpha == &next);
    checks.push(Check::exact(
        "casimir-interior",
        format!(
            "C f^(L) = ({}) f^(L) exactly below the truncation bands",
            rat_string(&eig)
        ),
        "eigenvector below bands",
        if interior_clean {
            "eigenvector below bands"
        } else {
            "stray interior residual"
        },
    ));
    let partials = hwv_norm_partials(k, terms)?;
    match &partials.verdict {
        HwvNormVerdict::Divergent {
            doubling_gaps,
            gap_floor,
        } => {
            let ok = !doubling_gaps.is_empty() && doubling_gaps.iter().all(|g| g >= gap_floor);
            checks.push(Check::exact(
                "norm-verdict",
                format!(
                    "k = {k}: squared-norm series diverges, doubling gaps >= {}",
                    rat_string(gap_floor)
                ),
                if k == 0 { "divergent" } else { "convergent" },
                if ok { "divergent" } else { "gap fell below floor" },
            ));
        }
        HwvNormVerdict::Convergent { tail_bound } => {
            checks.push(Check::exact(
                "norm-verdict",
                format!(
                    "k = {k}: squared-norm series converges, tail past S_{terms} <= {}",
                    rat_string(tail_bound)
                ),
                if k == 0 { "divergent" } else { "convergent" },
                "convergent",
            ));
            let lim = hwv_norm_limit(k, 20, 5)?;
            checks.push(Check::bound(
                "limit-stability",
                format!(
                    "Richardson limit {} of the norm series is stable",
                    f64_string(lim.estimate)
                ),
                lim.stability,
                opts.tol.unwrap_or(1e-10),
            ));
            let s_terms = crate::arith::rat_to_f64(&partials.partials[terms as usize]);
            let bound = crate::arith::rat_to_f64(tail_bound);
            let inside = lim.estimate >= s_terms - 1e-12 && lim.estimate <= s_terms + bound + 1e-12;
            checks.push(Check::exact(
                "limit-bracket",
                format!(
                    "limit lies in [S_{terms}, S_{terms} + tail bound] = [{}, {}]",
                    f64_string(s_terms),
                    f64_string(s_terms + bound)
                ),
                "inside",
                if inside { "inside" } else { "outside" },
            ));
        }
    }
    Ok(checks)
}

/// The discrete component catalog, Casimir eigenvalue map, kernel scan, and
/// a truncated generalized eigenfunction probe.
fn suite_discrete_catalog(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let k_max = opts.k.unwrap_or(4);
    let degree_bound = opts.m_max.unwrap_or(12);
    let mut checks = Vec::new();
    let all = discrete_components(Parity::All, k_max);
    let ok_all = all.len() == k_max as usize
        && all
            .iter()
            .enumerate()
            .all(|(i, d)| d.kind == ReprKind::HighestWeight && d.parameter == rat(3 * (i as i64 + 1) + 1, 1));
    checks.push(Check::exact(
        "catalog-all",
        format!("full catalog is sigma_-(3k+1), k = 1..{k_max}"),
        "true",
        format!("{ok_all}"),
    ));
    let even = discrete_components(Parity::Even, k_max);
    let ok_even = even
        .iter()
        .enumerate()
        .all(|(i, d)| d.parameter == rat(6 * (i as i64 + 1) + 1, 1));
    checks.push(Check::exact(
        "catalog-even",
        "even-parity catalog has weights -(6l+1)",
        "true",
        format!("{ok_even}"),
    ));
    checks.push(Check::exact(
        "no-lowest-weight",
        "no lowest-weight component appears",
        "true",
        format!("{}", all.iter().all(|d| d.kind != ReprKind::LowestWeight)),
    ));
    let pr = ReprDescriptor::new(ReprKind::PrincipalEven, rat(1, 1))?;
    let hw4 = ReprDescriptor::new(ReprKind::HighestWeight, rat(4, 1))?;
    let hw1 = ReprDescriptor::new(ReprKind::HighestWeight, rat(1, 1))?;
    let ok_eigs = rep_casimir_eigenvalue(&pr) == rat(-3, 2)
        && rep_casimir_eigenvalue(&hw4) == rat(4, 1)
        && rep_casimir_eigenvalue(&hw1) == rat(-1, 2);
    checks.push(Check::exact(
        "casimir-eigenvalues",
        "frozen values: principal(1) -> -3/2, sigma_-4 -> 4, sigma_-1 -> -1/2",
        "true",
        format!("{ok_eigs}"),
    ));
    let scan = no_lws_scan(degree_bound);
    checks.push(Check::exact(
        "kernel-scan",
        format!(
            "lowering-kernel weights stay below 1 up to degree {degree_bound} (max {})",
            scan.max_weight
        ),
        "true",
        format!("{}", scan.all_below_one && scan.max_weight == 0),
    ));
    checks.push(Check::exact(
        "k0-excluded",
        "the infinite-norm ladder k = 0 is never catalogued",
        "true",
        format!("{}", all.iter().all(|d| d.parameter != rat(1, 1))),
    ));
    let z0 = [Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)];
    let probe = generalized_eigenfunction(0.0, z0, 5)?;
    checks.push(Check::bound(
        "eigenfunction-probe",
        "Psi_0(0) = 1 for the truncated weight -1 eigenfunction",
        (probe - Complex64::new(1.0, 0.0)).norm(),
        1e-14,
    ));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> SuiteOptions {
        SuiteOptions::default()
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(
            run_suite("frobnicate", &opts()),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn sl2_matrix_suite_shape() {
        let r = run_suite("sl2-matrix", &opts()).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks.len(), 8 * 4);
        assert_eq!(r.schema, "1");
    }

    #[test]
    fn sl2_weyl_suite_passes() {
        let r = run_suite("sl2-weyl", &opts()).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn norms_suite_passes_small() {
        let o = SuiteOptions {
            m_max: Some(6),
            k: Some(3),
            ..opts()
        };
        let r = run_suite("norms", &o).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert_eq!(r.checks.len(), 4);
    }

    #[test]
    fn recurrence_suite_both_weights() {
        for mu in [-1i64, 0] {
            let o = SuiteOptions {
                weight: Some(mu),
                m_max: Some(12),
                ..opts()
            };
            let r = run_suite("recurrence", &o).unwrap();
            assert!(r.passed(), "{}", r.render_text());
        }
        let o = SuiteOptions {
            weight: Some(2),
            m_max: Some(6),
            ..opts()
        };
        let r = run_suite("recurrence", &o).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        // no hahn params attached: only tridiagonality and symmetry checks
        assert_eq!(r.checks.len(), 2);
    }

    #[test]
    fn hahn_orthogonality_suite_small() {
        let o = SuiteOptions {
            m_max: Some(3),
            ..opts()
        };
        let r = run_suite("hahn-orthogonality", &o).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert_eq!(r.checks.len(), 6);
    }

    #[test]
    fn spectrum_suite_small() {
        let o = SuiteOptions {
            size: Some(160),
            tol: Some(0.2),
            ..opts()
        };
        let r = run_suite("spectrum", &o).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn hwv_suite_k1_and_divergent_k0() {
        let o = SuiteOptions {
            k: Some(1),
            terms: Some(12),
            ..opts()
        };
        let r = run_suite("hwv", &o).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let o0 = SuiteOptions {
            k: Some(0),
            terms: Some(8),
            ..opts()
        };
        let r0 = run_suite("hwv", &o0).unwrap();
        assert!(r0.passed(), "{}", r0.render_text());
        let verdict = r0.checks.iter().find(|c| c.id == "norm-verdict").unwrap();
        assert_eq!(verdict.expected, "divergent");
    }

    #[test]
    fn discrete_catalog_suite_passes() {
        let r = run_suite("discrete-catalog", &opts()).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn json_report_is_versioned_and_deterministic() {
        let o = SuiteOptions {
            m_max: Some(4),
            k: Some(2),
            ..opts()
        };
        let a = serde_json::to_string(&run_suite("norms", &o).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite("norms", &o).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\":\"1\""));
        assert!(!a.contains("wall"));
    }

    #[test]
    fn failing_check_is_reported_not_hidden() {
        // An impossible KS tolerance must produce a fail status, not an error.
        let o = SuiteOptions {
            size: Some(64),
            tol: Some(1e-12),
            ..opts()
        };
        let r = run_suite("spectrum", &o).unwrap();
        assert!(!r.passed());
        let text = r.render_text();
        assert!(text.contains("FAIL"));
    }
}
