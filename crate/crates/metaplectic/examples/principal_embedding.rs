//! The principal sl(2) inside sp(n,R): H, E+, E- as 2n x 2n block
//! matrices with exact radical entries, satisfying [H, E+] = 2E+,
//! [H, E-] = -2E-, [E+, E-] = H.

use metaplectic::sl2::{principal_sl2, verify_sl2_matrix};

fn main() {
    for n in 1..=3 {
        let triple = principal_sl2(n);
        let report = verify_sl2_matrix(&triple);
        println!("n = {n}:");
        for check in &report.checks {
            println!("  {}  {}", if check.pass { "ok " } else { "BAD" }, check.label);
        }
        assert!(report.passed());
    }

    // the n = 1 matrices in full
    let t = principal_sl2(1);
    println!("\nn = 1 blocks (A | B | C):");
    for (name, el) in [("H ", &t.h), ("E+", &t.e_plus), ("E-", &t.e_minus)] {
        println!(
            "  {name}: A = {:?}, B = {:?}, C = {:?}",
            el.block_a().get(0, 0),
            el.block_b().get(0, 0),
            el.block_c().get(0, 0),
        );
    }
}
