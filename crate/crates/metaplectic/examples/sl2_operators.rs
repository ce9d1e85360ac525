//! The derived action on the Fock space of polynomials in (z1, z2):
//! dL(H) = -1 - 3 z1 d1 + z2 d2, dL(E+) = -sqrt(3) d1 d2 + z2^2,
//! dL(E-) = -d2^2 + sqrt(3) z1 z2, and the Casimir
//! C = 2 E+ E- - H + H^2/2 which commutes with all three.

use metaplectic::arith::rat;
use metaplectic::sl2::{casimir_operator, principal_action};
use metaplectic::{FockPolynomial, RadicalScalar};

fn main() {
    let act = principal_action(2);
    println!("dL(H)  = {:?}", act.h);
    println!("dL(E+) = {:?}", act.e_plus);
    println!("dL(E-) = {:?}", act.e_minus);

    let bracket = act.e_plus.commutator(&act.e_minus).unwrap();
    assert_eq!(bracket, act.h);
    println!("[dL(E+), dL(E-)] = dL(H)  ok");

    let cas = casimir_operator(2);
    for (name, op) in [("H", &act.h), ("E+", &act.e_plus), ("E-", &act.e_minus)] {
        assert!(cas.commutator(op).unwrap().is_zero());
        println!("[C, dL({name})] = 0  ok");
    }

    // C 1 = -9/2 + 2 sqrt(3) z1 z2^3 and C z2 = -12 z2 + 2 sqrt(3) z1 z2^4
    let one = FockPolynomial::constant(2, RadicalScalar::one());
    println!("C 1  = {:?}", cas.apply(&one).unwrap());
    let z2 = FockPolynomial::monomial(vec![0, 1], RadicalScalar::one());
    println!("C z2 = {:?}", cas.apply(&z2).unwrap());

    // the invariant I = (sqrt(3)/9) z1 z2^3 spans the degree-4 slice of
    // the weight -1 space
    let inv = FockPolynomial::invariant_power(1, [0, 0]);
    let h_inv = act.h.apply(&inv).unwrap();
    assert_eq!(h_inv, inv.scale(&RadicalScalar::from_rational(rat(-1, 1))));
    println!("dL(H) I = -I  ok");
}
