//! Normalized radial functions u(r) and R(r) sampled on a log grid, with a
//! rough ASCII picture of each level.
//!
//! cargo run --example wavefunction

use kgh::normalize::normalize;
use kgh::spectrum::enumerate_spectrum;
use kgh::wavefunc::{log_radii, sample, sign_changes};
use kgh::{Branch, PotentialSpec, QuantumNumbers};

fn main() -> kgh::Result<()> {
    let spec = PotentialSpec::new(1.0, 0.2, 0.5, 0.0, 0.1)?;
    let qn = QuantumNumbers::new(3, 0, 0)?;
    let radii = log_radii(spec.alpha, 60.0 / spec.alpha, 48);

    for state in enumerate_spectrum(&spec, &qn, 10)?.states {
        if state.branch != Branch::Positive {
            continue;
        }
        let state = normalize(&state, &spec)?;
        let samples = sample(&state, &spec, &qn.with_n(state.n), &radii, true)?;
        let peak = samples.iter().fold(0.0f64, |m, s| m.max(s.u.abs()));
        println!(
            "n={} E={:.12} C={:.6e} nodes={}",
            state.n,
            state.energy,
            state.norm_constant.unwrap(),
            sign_changes(samples.iter().map(|s| s.u))
        );
        for s in samples.iter().step_by(3) {
            let width = (30.0 * s.u / peak).round() as i32;
            let bar: String = if width >= 0 {
                format!("{:>30}|{}", "", "#".repeat(width as usize))
            } else {
                format!("{:>30}|", "-".repeat((-width) as usize))
            };
            println!("  r={:>10.4} {bar}", s.r);
        }
    }
    Ok(())
}
