//! Bound-state energies of the generalized Hulthén potential for a few
//! angular momenta, with both roots of the quantization condition.
//!
//! cargo run --example spectrum

use kgh::model::effective_k;
use kgh::spectrum::enumerate_spectrum;
use kgh::{PotentialSpec, QuantumNumbers};

fn main() -> kgh::Result<()> {
    let spec = PotentialSpec::new(1.0, 0.2, 1.0, 0.0, 0.1)?;
    for ell in 0..3 {
        let qn = QuantumNumbers::new(3, ell, 0)?;
        let spectrum = enumerate_spectrum(&spec, &qn, 10)?;
        println!("l = {ell} (k = {}): {} levels", effective_k(&qn), spectrum.level_count);
        for s in &spectrum.states {
            println!("  n={} {:<14} E={:+.15} eps={:.6} delta={:.6}", s.n, s.branch, s.energy, s.eps, s.delta);
        }
    }

    // equal vector and scalar depths: only one root survives per level
    let coupled = PotentialSpec::new(1.0, 0.2, 1.0, 0.1, 0.1)?;
    let spectrum = enumerate_spectrum(&coupled, &QuantumNumbers::new(3, 0, 0)?, 10)?;
    println!("V0 = S0:");
    for s in &spectrum.states {
        println!("  n={} {:<14} E={:+.15}", s.n, s.branch, s.energy);
    }
    Ok(())
}
