//! The normalization constant from every available route: the double sum for
//! general q, the single ₃F₂ sum at q = 1, the ground-state closed form, and
//! direct quadrature in r.
//!
//! cargo run --example normalization

use kgh::normalize::{norm_general_q, norm_ground_state, norm_q1, norm_quadrature};
use kgh::spectrum::enumerate_spectrum;
use kgh::{PotentialSpec, QuantumNumbers};

fn main() -> kgh::Result<()> {
    let qn = QuantumNumbers::new(3, 0, 0)?;

    let spec = PotentialSpec::new(1.0, 0.05, 1.0, 0.0, 0.03)?;
    println!("q = 1");
    println!("{:>3} {:>22} {:>22} {:>22} {:>10}", "n", "double sum", "3F2 sum", "quadrature", "rel diff");
    for s in enumerate_spectrum(&spec, &qn, 6)?.states.iter().filter(|s| s.branch == kgh::Branch::Positive) {
        let g = norm_general_q(s, &spec)?;
        let h = norm_q1(s, spec.alpha)?;
        let quad = norm_quadrature(s, &spec)?;
        println!("{:>3} {g:>22.15e} {h:>22.15e} {quad:>22.15e} {:>10.2e}", s.n, ((g - h) / h).abs());
        if s.n == 0 {
            println!("    ground-state formula {:.15e}", norm_ground_state(s, spec.alpha)?);
        }
    }

    println!("q = 0.3");
    let spec = PotentialSpec::new(1.0, 0.2, 0.3, 0.02, 0.08)?;
    for s in enumerate_spectrum(&spec, &qn, 6)?.states {
        let g = norm_general_q(&s, &spec)?;
        let quad = norm_quadrature(&s, &spec)?;
        println!("{:>3} {:<14} {g:>22.15e} {quad:>22.15e} {:>10.2e}", s.n, s.branch, ((g - quad) / quad).abs());
    }
    Ok(())
}
