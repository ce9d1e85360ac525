//! Fock inner products: <z^a, z^b> = a! delta_ab, and the closed squared
//! norms ||I^m z1^k||^2 = (m!)^2 (m+1)_k (2/3)_m (1/3)_m and
//! ||I^m z2^k||^2 = (m!)^2 (3m+1)_k (2/3)_m (1/3)_m, checked against
//! brute-force expansion.

use metaplectic::arith::rat_string;
use metaplectic::fock::{invariant_norm_closed, Axis};
use metaplectic::{FockPolynomial, RadicalScalar};

fn main() {
    let z114 = FockPolynomial::monomial(vec![1, 4], RadicalScalar::one());
    println!("||z1 z2^4||^2 = {:?}", z114.norm_sq());

    for (axis, tag) in [(Axis::Z1, "z1"), (Axis::Z2, "z2")] {
        println!("\nsquared norms of I^m {tag}^k:");
        for m in 0..=3u32 {
            for k in 0..=3u32 {
                let extra = match axis {
                    Axis::Z1 => [k, 0],
                    Axis::Z2 => [0, k],
                };
                let brute = FockPolynomial::invariant_power(m, extra).norm_sq();
                let closed = invariant_norm_closed(m, k, axis);
                assert_eq!(brute.as_rational().as_ref(), Some(&closed));
                print!("  m={m} k={k}: {}", rat_string(&closed));
            }
            println!();
        }
    }

    // orthogonality of distinct ladder monomials is automatic: different
    // degree slices of the same weight space never share a monomial
    let a = FockPolynomial::invariant_power(2, [1, 0]);
    let b = FockPolynomial::invariant_power(3, [1, 0]);
    assert!(a.inner_product(&b).unwrap().is_zero());
    println!("\n<I^2 z1, I^3 z1> = 0  ok");
}
