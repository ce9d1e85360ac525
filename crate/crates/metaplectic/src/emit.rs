//! Deterministic dataset emission in JSON and CSV.
//!
//! Exact rationals are serialized as `p/q` strings and floats at 17
//! significant digits in both formats, so identical invocations produce
//! byte-identical output.

use num_complex::Complex64;
use serde::Serialize;

use crate::arith::{f64_string, rat_string};
use crate::branching::{
    casimir_tridiagonal, generalized_eigenfunction, hwv_norm_partials, solve_hwv, HwvNormVerdict,
};
use crate::error::{Error, Result};
use crate::hahn::{measure_density, spectrum_report, HahnParams};

pub const DATASET_NAMES: [&str; 5] = [
    "density",
    "spectrum",
    "recurrence",
    "hwv-partials",
    "eigenfunction",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    Json,
    Csv,
}

impl std::str::FromStr for EmitFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(EmitFormat::Json),
            "csv" => Ok(EmitFormat::Csv),
            other => Err(Error::InvalidOption(format!(
                "unknown format `{other}` (expected json or csv)"
            ))),
        }
    }
}

/// Knobs for dataset emission; unset fields fall back to dataset defaults.
#[derive(Clone, Copy, Debug, Default)]
pub struct EmitOptions {
    pub weight: Option<i64>,
    pub m_max: Option<u32>,
    pub size: Option<usize>,
    pub k: Option<u32>,
    pub terms: Option<u32>,
}

/// Render one named dataset to a string in the requested format.
pub fn emit(dataset: &str, format: EmitFormat, opts: &EmitOptions) -> Result<String> {
    match dataset {
        "density" => emit_density(format, opts),
        "spectrum" => emit_spectrum(format, opts),
        "recurrence" => emit_recurrence(format, opts),
        "hwv-partials" => emit_hwv_partials(format, opts),
        "eigenfunction" => emit_eigenfunction(format, opts),
        other => Err(Error::UnknownDataset(other.into())),
    }
}

fn params_for(weight: i64) -> Result<HahnParams> {
    HahnParams::for_weight(weight).ok_or_else(|| {
        Error::InvalidOption(format!(
            "weight {weight} carries no dual Hahn parameter set (use -1 or 0)"
        ))
    })
}

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct DensityRow {
    x: String,
    density: String,
}

#[derive(Serialize)]
struct DensityEmit {
    dataset: &'static str,
    weight: i64,
    params: [String; 3],
    shift: String,
    rows: Vec<DensityRow>,
}

/// Spectral density of the continuous measure on the grid x = 0..20 step 0.01.
fn emit_density(format: EmitFormat, opts: &EmitOptions) -> Result<String> {
    let weight = opts.weight.unwrap_or(-1);
    let p = params_for(weight)?;
    let rows: Vec<DensityRow> = (0..=2000)
        .map(|i| {
            let x = i as f64 * 0.01;
            DensityRow {
                x: f64_string(x),
                density: f64_string(measure_density(x, &p)),
            }
        })
        .collect();
    match format {
        EmitFormat::Csv => {
            let mut out = String::from("x,density\n");
            for r in &rows {
                out.push_str(&format!("{},{}\n", r.x, r.density));
            }
            Ok(out)
        }
        EmitFormat::Json => json_line(&DensityEmit {
            dataset: "density",
            weight,
            params: [
                rat_string(p.a()),
                rat_string(p.b()),
                rat_string(p.c()),
            ],
            shift: rat_string(p.d_shift()),
            rows,
        }),
    }
}

#[derive(Serialize)]
struct SpectrumRow {
    index: usize,
    theta: String,
    x: String,
    lambda: String,
    minus_casimir: String,
    weight: String,
}

#[derive(Serialize)]
struct SpectrumEmit {
    dataset: &'static str,
    weight: i64,
    size: usize,
    ks_statistic: String,
    minus_casimir_min: String,
    rows: Vec<SpectrumRow>,
}

/// Eigenvalues and Christoffel weights of the order-N spectral truncation.
fn emit_spectrum(format: EmitFormat, opts: &EmitOptions) -> Result<String> {
    let weight = opts.weight.unwrap_or(-1);
    let size = opts.size.unwrap_or(200);
    let report = spectrum_report(weight, size)?;
    let rows: Vec<SpectrumRow> = (0..report.theta.len())
        .map(|i| SpectrumRow {
            index: i,
            theta: f64_string(report.theta[i]),
            x: f64_string(report.x_scaled[i]),
            lambda: f64_string(report.lambda[i]),
            minus_casimir: f64_string(report.minus_casimir[i]),
            weight: f64_string(report.christoffel_weights[i]),
        })
        .collect();
    match format {
        EmitFormat::Csv => {
            let mut out = String::from("index,theta,x,lambda,minus_casimir,weight\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.index, r.theta, r.x, r.lambda, r.minus_casimir, r.weight
                ));
            }
            Ok(out)
        }
        EmitFormat::Json => json_line(&SpectrumEmit {
            dataset: "spectrum",
            weight,
            size,
            ks_statistic: f64_string(report.ks_statistic),
            minus_casimir_min: f64_string(report.minus_casimir_min),
            rows,
        }),
    }
}

#[derive(Serialize)]
struct RecurrenceEmit {
    dataset: &'static str,
    #[serde(flatten)]
    data: crate::branching::CasimirTridiagonal,
}

/// Exact tridiagonal recurrence triples and ladder norms on one weight.
fn emit_recurrence(format: EmitFormat, opts: &EmitOptions) -> Result<String> {
    let weight = opts.weight.unwrap_or(-1);
    let m_max = opts.m_max.unwrap_or(10);
    let data = casimir_tridiagonal(weight, m_max)?;
    match format {
        EmitFormat::Csv => {
            let mut out = String::from("m,alpha,beta,gamma,norm_sq\n");
            for t in &data.triples {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    t.m,
                    rat_string(&t.alpha),
                    rat_string(&t.beta),
                    rat_string(&t.gamma),
                    rat_string(&data.norms[t.m as usize]),
                ));
            }
            Ok(out)
        }
        EmitFormat::Json => json_line(&RecurrenceEmit {
            dataset: "recurrence",
            data,
        }),
    }
}

#[derive(Serialize)]
struct HwvEmit {
    dataset: &'static str,
    k: u32,
    #[serde(rename = "L")]
    l: u32,
    a: Vec<String>,
    terms: Vec<String>,
    partials: Vec<String>,
    verdict: HwvNormVerdict,
}

/// Ladder coefficients and exact squared-norm partial sums for one k.
fn emit_hwv_partials(format: EmitFormat, opts: &EmitOptions) -> Result<String> {
    let k = opts.k.unwrap_or(1);
    let l_max = opts.terms.unwrap_or(10);
    let series = solve_hwv(k, l_max)?;
    let partials = hwv_norm_partials(k, l_max)?;
    let terms: Vec<_> = (0..=l_max as usize)
        .map(|l| {
            if l == 0 {
                partials.partials[0].clone()
            } else {
                &partials.partials[l] - &partials.partials[l - 1]
            }
        })
        .collect();
    match format {
        EmitFormat::Csv => {
            let mut out = String::from("l,a,term,partial\n");
            for l in 0..=l_max as usize {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    l,
                    rat_string(&series.coefficients[l]),
                    rat_string(&terms[l]),
                    rat_string(&partials.partials[l]),
                ));
            }
            Ok(out)
        }
        EmitFormat::Json => json_line(&HwvEmit {
            dataset: "hwv-partials",
            k,
            l: l_max,
            a: series.coefficients.iter().map(rat_string).collect(),
            terms: terms.iter().map(rat_string).collect(),
            partials: partials.partials.iter().map(rat_string).collect(),
            verdict: partials.verdict,
        }),
    }
}

#[derive(Serialize)]
struct EigenfunctionRow {
    x: String,
    re: String,
    im: String,
}

#[derive(Serialize)]
struct EigenfunctionEmit {
    dataset: &'static str,
    weight: i64,
    m_max: u32,
    z: [[String; 2]; 2],
    rows: Vec<EigenfunctionRow>,
}

const EIGENFUNCTION_PROBE: [Complex64; 2] = [
    Complex64::new(0.3, 0.1),
    Complex64::new(-0.2, 0.4),
];

/// Truncated generalized eigenfunction Psi_x(z0) on the weight -1 tower,
/// sampled at a fixed probe point z0 over x = 0..5 step 0.05.
fn emit_eigenfunction(format: EmitFormat, opts: &EmitOptions) -> Result<String> {
    let m_max = opts.m_max.unwrap_or(8);
    let mut rows = Vec::with_capacity(101);
    for i in 0..=100 {
        let x = i as f64 * 0.05;
        let v = generalized_eigenfunction(x, EIGENFUNCTION_PROBE, m_max)?;
        rows.push(EigenfunctionRow {
            x: f64_string(x),
            re: f64_string(v.re),
            im: f64_string(v.im),
        });
    }
    match format {
        EmitFormat::Csv => {
            let mut out = String::from("x,re,im\n");
            for r in &rows {
                out.push_str(&format!("{},{},{}\n", r.x, r.re, r.im));
            }
            Ok(out)
        }
        EmitFormat::Json => json_line(&EigenfunctionEmit {
            dataset: "eigenfunction",
            weight: -1,
            m_max,
            z: [
                [
                    f64_string(EIGENFUNCTION_PROBE[0].re),
                    f64_string(EIGENFUNCTION_PROBE[0].im),
                ],
                [
                    f64_string(EIGENFUNCTION_PROBE[1].re),
                    f64_string(EIGENFUNCTION_PROBE[1].im),
                ],
            ],
            rows,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_dataset_is_rejected() {
        assert!(matches!(
            emit("fourier", EmitFormat::Csv, &EmitOptions::default()),
            Err(Error::UnknownDataset(_))
        ));
    }

    #[test]
    fn density_csv_shape() {
        let out = emit("density", EmitFormat::Csv, &EmitOptions::default()).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2002);
        assert_eq!(lines[0], "x,density");
        let mut prev = f64::NEG_INFINITY;
        for line in &lines[1..] {
            let x: f64 = line.split(',').next().unwrap().parse().unwrap();
            assert!(x > prev);
            prev = x;
        }
        assert!((prev - 20.0).abs() < 1e-12);
    }

    #[test]
    fn recurrence_json_eleven_triples() {
        let opts = EmitOptions {
            weight: Some(0),
            m_max: Some(10),
            ..Default::default()
        };
        let out = emit("recurrence", EmitFormat::Json, &opts).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dataset"], "recurrence");
        assert_eq!(v["triples"].as_array().unwrap().len(), 11);
        assert_eq!(v["triples"][0]["alpha"], "8/9");
        assert_eq!(v["triples"][0]["beta"], "-2/3");
        assert_eq!(v["kind"], "scaled-lowering-product");
    }

    #[test]
    fn hwv_partials_csv_frozen_last_row() {
        let opts = EmitOptions {
            k: Some(1),
            terms: Some(2),
            ..Default::default()
        };
        let out = emit("hwv-partials", EmitFormat::Csv, &opts).unwrap();
        let last = out.lines().last().unwrap();
        assert_eq!(last, "2,1/12,10/243,280/243");
    }

    #[test]
    fn emission_is_byte_deterministic() {
        for dataset in DATASET_NAMES {
            let opts = EmitOptions {
                size: Some(24),
                m_max: Some(4),
                terms: Some(4),
                ..Default::default()
            };
            for format in [EmitFormat::Json, EmitFormat::Csv] {
                let a = emit(dataset, format, &opts).unwrap();
                let b = emit(dataset, format, &opts).unwrap();
                assert_eq!(a, b, "{dataset}");
                assert!(a.ends_with('\n'));
            }
        }
    }

    #[test]
    fn spectrum_csv_row_count() {
        let opts = EmitOptions {
            size: Some(32),
            ..Default::default()
        };
        let out = emit("spectrum", EmitFormat::Csv, &opts).unwrap();
        assert_eq!(out.lines().count(), 33);
    }

    #[test]
    fn eigenfunction_values_finite() {
        let out = emit("eigenfunction", EmitFormat::Csv, &EmitOptions::default()).unwrap();
        for line in out.lines().skip(1) {
            let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
            assert!(cols.iter().all(|v| v.is_finite()));
        }
    }

    #[test]
    fn density_json_params_echo() {
        let out = emit("density", EmitFormat::Json, &EmitOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["params"][0], "0/1");
        assert_eq!(v["params"][1], "1/3");
        assert_eq!(v["params"][2], "2/3");
        assert_eq!(v["shift"], "1/1");
        assert_eq!(v["rows"].as_array().unwrap().len(), 2001);
    }
}
