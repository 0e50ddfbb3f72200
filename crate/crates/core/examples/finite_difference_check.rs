//! Independent check of the analytic energies: a second-order finite
//! difference discretization of the radial equation on a logarithmic grid,
//! with Richardson-style convergence order from three refinements.
//!
//! cargo run --release --example finite_difference_check

use kgh::oracle::{fd_eigensolve, GridSpec, Spacing};
use kgh::spectrum::solve_level;
use kgh::{Branch, PotentialSpec, QuantumNumbers};

fn main() -> kgh::Result<()> {
    for spec in [PotentialSpec::new(1.0, 0.2, 1.0, 0.0, 0.1)?, PotentialSpec::new(1.0, 0.2, 1.0, 0.1, 0.1)?] {
        println!("V0={} S0={}", spec.v0, spec.s0);
        let qn = QuantumNumbers::new(3, 0, 0)?;
        let exact = solve_level(&spec, &qn)?
            .into_iter()
            .find(|s| s.branch == Branch::Positive)
            .expect("ground state");
        let mut errors = Vec::new();
        for points in [2001, 4001, 8001, 16001, 32001, 64001] {
            let grid = GridSpec::new(300.0, points, Spacing::Log)?;
            let fd = fd_eigensolve(&spec, &qn, &grid, 0, Branch::Positive)?;
            let err = (fd.energy - exact.energy).abs();
            println!("  {points:>6} points E={:.12} err={err:.3e} iterations={}", fd.energy, fd.iterations);
            errors.push(err);
        }
        for w in errors.windows(2) {
            println!("  order {:.3}", (w[0] / w[1]).log2());
        }
    }
    Ok(())
}
