//! Truncated generalized eigenfunctions on the weight -1 tower:
//! Psi_x = sum_m e_m ohm_m(x^2) over the orthonormal ladder, satisfying
//! (-C) Psi_x = (2x^2 + 1/2) Psi_x up to a defect supported on the top
//! two truncation modes only; the defect support is verified exactly.

use metaplectic::arith::rat;
use metaplectic::branching::{eigenfunction_residual_exact, generalized_eigenfunction};
use num_complex::Complex64;

fn main() {
    let z = [Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.4)];
    println!("Psi_x(z) at z = (0.3+0.1i, -0.2+0.4i):");
    for &x in &[0.0, 0.5, 1.0, 2.0, 4.0] {
        let v = generalized_eigenfunction(x, z, 12).unwrap();
        println!("  x = {x:3.1}: {:+.12} {:+.12}i", v.re, v.im);
    }

    let zero = [Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)];
    let v0 = generalized_eigenfunction(1.7, zero, 10).unwrap();
    println!("Psi_x(0) = {v0} for every x (only W_0 survives at the origin)");

    // exact residual at rational t = x^2 = 4/9: every interior mode cancels
    let t = rat(4, 9);
    let m = 5;
    let res = eigenfunction_residual_exact(&t, m).unwrap();
    println!("\n(-C - (2t + 1/2)) Psi^(5) at t = 4/9:");
    for (alpha, c) in res.terms() {
        println!("  monomial z1^{} z2^{}: {c:?}", alpha[0], alpha[1]);
        assert!(alpha == &vec![m, 3 * m] || alpha == &vec![m + 1, 3 * m + 3]);
    }
    println!("residual supported on the two top truncation modes only  ok");
}
