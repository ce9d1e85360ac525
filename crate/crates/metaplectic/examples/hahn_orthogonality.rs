//! Continuous dual Hahn orthogonality on the measure
//! dmu = (1/2pi) |Gamma(a+ix) Gamma(b+ix) Gamma(c+ix) / Gamma(2ix)|^2 dx
//! (normalized), evaluated by adaptive quadrature against a certified
//! exponential tail bound: <w_m, w_l> = delta_ml m!(b+c)_m/((a+b)_m(a+c)_m).

use metaplectic::arith::{rat_string, rat_to_f64};
use metaplectic::hahn::{measure_density, quadrature_orthogonality};
use metaplectic::HahnParams;

fn main() {
    for weight in [-1i64, 0] {
        let p = HahnParams::for_weight(weight).unwrap();
        println!(
            "weight {weight}: (a, b, c) = ({}, {}, {})",
            rat_string(p.a()),
            rat_string(p.b()),
            rat_string(p.c())
        );
        println!(
            "  density at x = 0.5: {:.12}, at x = 2: {:.12}",
            measure_density(0.5, &p),
            measure_density(2.0, &p)
        );
        for (m, l) in [(0, 0), (1, 1), (3, 3), (0, 1), (2, 5)] {
            let c = quadrature_orthogonality(m, l, &p).unwrap();
            let expected = rat_to_f64(&c.expected);
            println!(
                "  <w_{m}, w_{l}> = {:+.14e}  (expected {}, cut at x = {}, tail < {:.1e})",
                c.value,
                rat_string(&c.expected),
                c.cut,
                c.tail_bound
            );
            assert!((c.value - expected).abs() <= 1e-8 * expected.max(1.0));
        }
        println!();
    }
}
