//! Highest-weight ladders f = sum_l a_l I^l z1^k: the recursion
//! sqrt(3) d1 d2 f_{l+1} = z2^2 f_l is solved by exact division, giving
//! a_l = k!/(l!(k+l)!).  The squared-norm series converges iff k >= 1,
//! certifying one discrete component sigma_{-(3k+1)} per k >= 1.

use metaplectic::arith::{rat_string, rat_to_f64};
use metaplectic::branching::{
    discrete_components, hwv_norm_limit, hwv_norm_partials, rep_casimir_eigenvalue, solve_hwv,
    HwvNormVerdict, Parity,
};

fn main() {
    for k in 0..=3u32 {
        let series = solve_hwv(k, 8).unwrap();
        let a: Vec<String> = series.coefficients.iter().take(4).map(rat_string).collect();
        println!("k = {k}: a_0..a_3 = {}", a.join(", "));

        let partials = hwv_norm_partials(k, 8).unwrap();
        let s8 = rat_string(&partials.partials[8]);
        match &partials.verdict {
            HwvNormVerdict::Divergent { doubling_gaps, gap_floor } => {
                let gaps: Vec<String> = doubling_gaps
                    .iter()
                    .map(|g| format!("{:.4}", rat_to_f64(g)))
                    .collect();
                println!(
                    "  S_8 = {s8}; divergent: doubling gaps {} all >= {}",
                    gaps.join(", "),
                    rat_string(gap_floor)
                );
            }
            HwvNormVerdict::Convergent { tail_bound } => {
                println!(
                    "  S_8 = {s8}; convergent: tail past S_8 <= {}",
                    rat_string(tail_bound)
                );
            }
        }
    }

    // k = 1 limit: 2F1(1/3, 2/3; 2; 1) = 9 sqrt(3) / (4 pi)
    let lim = hwv_norm_limit(1, 20, 5).unwrap();
    let gauss = 9.0 * 3.0f64.sqrt() / (4.0 * std::f64::consts::PI);
    println!(
        "\nk = 1 norm limit: {:.12} (Gauss value {:.12}, stability {:.1e})",
        lim.estimate, gauss, lim.stability
    );
    assert!((lim.estimate - gauss).abs() < 1e-10);

    println!("\ndiscrete components (all parities, k <= 5):");
    for d in discrete_components(Parity::All, 5) {
        println!(
            "  sigma_-{}  Casimir eigenvalue {}",
            rat_string(&d.parameter),
            rat_string(&rep_casimir_eigenvalue(&d))
        );
    }
}
