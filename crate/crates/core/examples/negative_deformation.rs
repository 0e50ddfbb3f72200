//! q < 0 turns the well into a bounded, Woods–Saxon-like shape. Energies and
//! unnormalized wavefunctions are available; the normalization sums are not.
//!
//! cargo run --example negative_deformation

use kgh::normalize::normalize;
use kgh::spectrum::enumerate_spectrum;
use kgh::wavefunc::{radial_u, z_of_r};
use kgh::{PotentialSpec, QuantumNumbers};

fn main() -> kgh::Result<()> {
    let spec = PotentialSpec::new(1.0, 0.2, -0.5, 0.0, -0.1)?;
    let qn = QuantumNumbers::new(3, 0, 0)?;
    let spectrum = enumerate_spectrum(&spec, &qn, 10)?;
    for s in &spectrum.states {
        println!("n={} {:<14} E={:+.15} delta={:.6}", s.n, s.branch, s.energy, s.delta);
        for r in [0.5, 2.0, 5.0, 10.0, 20.0] {
            println!("    r={r:<4} z={:+.6} u={:+.6e}", z_of_r(r, &spec), radial_u(s, &spec, r, false)?);
        }
        if let Err(e) = normalize(s, &spec) {
            println!("    normalize: {e}");
        }
    }
    Ok(())
}
