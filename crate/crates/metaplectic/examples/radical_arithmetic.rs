//! Exact arithmetic in the radical ring Q[sqrt(d1), sqrt(d2), ...]:
//! square roots normalize to squarefree radicands, products and exact
//! divisions stay in the ring, and conversion to f64 goes through a
//! certified interval refinement.

use metaplectic::arith::rat;
use metaplectic::RadicalScalar;

fn main() {
    let sqrt12 = RadicalScalar::sqrt_int(12);
    println!("sqrt(12)            = {sqrt12:?}");

    let sqrt3 = RadicalScalar::sqrt_int(3);
    let prod = &sqrt12 * &sqrt3;
    println!("sqrt(12)*sqrt(3)    = {prod:?}");

    let mixed = &RadicalScalar::rational(1, 2) + &sqrt3.scale(&rat(2, 9));
    println!("1/2 + (2/9) sqrt(3) = {mixed:?}");

    let q = mixed.try_div(&sqrt3).expect("single-radical divisor");
    println!("   ... / sqrt(3)    = {q:?}");
    let back = &q * &sqrt3;
    assert_eq!(back, mixed);

    let r = RadicalScalar::sqrt_rational(&rat(27, 50)).unwrap();
    println!("sqrt(27/50)         = {r:?}");
    println!("  as f64            = {:.15}", r.to_f64());
    assert!((r.to_f64() - (27.0f64 / 50.0).sqrt()).abs() < 1e-15);

    // (sqrt(2) + sqrt(3))^2 = 5 + 2 sqrt(6)
    let s = &RadicalScalar::sqrt_int(2) + &RadicalScalar::sqrt_int(3);
    let sq = s.pow(2);
    println!("(sqrt2 + sqrt3)^2   = {sq:?}");
    assert_eq!(
        sq,
        &RadicalScalar::integer(5) + &RadicalScalar::sqrt_int(6).scale(&rat(2, 1))
    );
}
