//! Log-gamma, Pochhammer symbols, terminating hypergeometric series and
//! Jacobi polynomials.
//!
//! cargo run --example special_functions

use kgh::specfun::{
    hyp2f1_terminating, hyp3f2_unit_terminating, jacobi_p, jacobi_p_hypergeometric, log_gamma, pochhammer,
};

fn main() -> kgh::Result<()> {
    for x in [0.5, 1.0, 3.7, 25.0, 170.5] {
        println!("lnΓ({x}) = {:.16e}", log_gamma(x)?);
    }
    println!("(−2.5)_4 = {}", pochhammer(-2.5, 4).value());

    // ₂F₁(−n, b; c; z) is a polynomial of degree n in z
    for n in 0..5 {
        println!("2F1(−{n}, 3.5; 1.5; 0.4) = {:.16}", hyp2f1_terminating(n, 3.5, 1.5, 0.4)?);
    }
    println!("3F2(−3, 2.5, 1.2; 4.1, 3.3; 1) = {:.16}", hyp3f2_unit_terminating(3, 2.5, 1.2, 4.1, 3.3)?);

    println!("\nP_n^(1.5,0.5)(0.3): recurrence vs hypergeometric form (the latter cancels badly at large n)");
    for n in [0, 1, 5, 20, 60] {
        let x = 0.3;
        let a = jacobi_p(n, 1.5, 0.5, x)?;
        let b = jacobi_p_hypergeometric(n, 1.5, 0.5, x)?;
        println!("  n={n:>2} {a:>+24.16e} {b:>+24.16e} diff={:.1e}", (a - b).abs());
    }
    Ok(())
}
