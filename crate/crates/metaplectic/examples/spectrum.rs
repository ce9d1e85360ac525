//! Spectral truncations: the order-N Jacobi matrix of multiplication by
//! x~^2 has eigenvalues theta_i >= 0 mapping to -C = 2 s^2 theta + 1/2,
//! all above the continuous-spectrum edge 1/2; the Christoffel weights
//! converge weakly to the dual Hahn measure (Kolmogorov distance shown).

use metaplectic::hahn::{spectrum_minima, spectrum_report};

fn main() {
    let weight = -1i64;
    let n = 400;
    let report = spectrum_report(weight, n).unwrap();
    println!("weight {weight}, N = {n}:");
    println!("  smallest -C eigenvalues:");
    for i in 0..5 {
        println!(
            "    theta = {:.9e}  x~ = {:.6}  lambda = {:.6}  -C = {:.9}",
            report.theta[i], report.x_scaled[i], report.lambda[i], report.minus_casimir[i]
        );
    }
    println!("  min -C = {:.9} (continuous edge 1/2)", report.minus_casimir_min);
    assert!(report.minus_casimir_min >= 0.5 - 1e-6);

    println!("  KS distance to continuous law = {:.4}", report.ks_statistic);
    let mass: f64 = report.christoffel_weights.iter().sum();
    println!("  Christoffel mass = {:.15}", mass);

    let minima = spectrum_minima(weight, &[50, 100, 200, 400]).unwrap();
    println!("  min -C across N = 50, 100, 200, 400:");
    for (n, m) in [50, 100, 200, 400].iter().zip(&minima) {
        println!("    N = {n:4}: {m:.9}");
    }
    assert!(minima.windows(2).all(|w| w[1] < w[0]));
    println!("  edge decreases monotonically toward 1/2  ok");
}
