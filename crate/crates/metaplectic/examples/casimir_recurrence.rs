//! Tridiagonalization of the scaled lowering product (1/9) E+ E- on the
//! weight -1 and weight 0 ladders, and the exact match with the continuous
//! dual Hahn recurrence: alpha_m = (m+a+b)(m+a+c), gamma_m = m(m+b+c-1),
//! beta_m = -(alpha_m + gamma_m - a^2 + d/9).

use metaplectic::arith::rat_string;
use metaplectic::branching::{casimir_tridiagonal, match_hahn_params};
use metaplectic::HahnParams;

fn main() {
    for weight in [-1i64, 0] {
        let data = casimir_tridiagonal(weight, 10).unwrap();
        println!("weight {weight} ({:?}):", data.kind);
        println!("   m  alpha        beta         gamma        ||W_m||^2");
        for t in &data.triples {
            println!(
                "  {:2}  {:11}  {:11}  {:11}  {}",
                t.m,
                rat_string(&t.alpha),
                rat_string(&t.beta),
                rat_string(&t.gamma),
                rat_string(&data.norms[t.m as usize]),
            );
        }
        let params = HahnParams::for_weight(weight).unwrap();
        let report = match_hahn_params(&data, &params);
        println!(
            "  dual Hahn (a, b, c, shift) = ({}, {}, {}, {}): {} quantities, all matched = {}\n",
            report.params[0],
            report.params[1],
            report.params[2],
            report.params[3],
            report.entries.len(),
            report.all_matched(),
        );
        assert!(report.all_matched());
    }

    // any other weight is still tridiagonal under the full Casimir
    let other = casimir_tridiagonal(2, 5).unwrap();
    println!("weight 2 ({:?}): {} triples", other.kind, other.triples.len());
}
