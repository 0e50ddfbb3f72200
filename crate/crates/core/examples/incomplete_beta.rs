//! Incomplete Beta B_q(x, y) = ∫₀^q t^{x−1}(1−t)^{y−1} dt by series, by
//! quadrature, and through the contiguous ladder in x.
//!
//! cargo run --example incomplete_beta

use kgh::oracle::inc_beta_quadrature;
use kgh::specfun::{inc_beta, inc_beta_ladder, inc_beta_regularized, route_switch};

fn main() -> kgh::Result<()> {
    println!("{:>6} {:>6} {:>6} {:>24} {:>24} {:>9}", "q", "x", "y", "series", "quadrature", "rel");
    for &(q, x, y) in &[(0.3, 2.5, 1.5), (0.9, 0.7, 3.2), (0.5, 7.0, 0.4), (0.999, 1.2, 12.0), (0.01, 3.0, 3.0)] {
        let s = inc_beta(q, x, y)?;
        let quad = inc_beta_quadrature(q, x, y, 1e-14)?;
        println!("{q:>6} {x:>6} {y:>6} {s:>24.16e} {quad:>24.16e} {:>9.1e}", ((s - quad) / quad).abs());
    }

    println!("\nregularized I_q(2, 3) and the series switch point");
    for i in 1..10 {
        let q = f64::from(i) / 10.0;
        println!("  q={q:.1} I={:.15} switch={:.3}", inc_beta_regularized(q, 2.0, 3.0)?, route_switch(2.0, 3.0));
    }

    println!("\nladder B_q(x+m, y), m = 0..8, at q = 0.05");
    let (q, x, y) = (0.05, 1.3, 2.1);
    for (m, b) in inc_beta_ladder(q, x, y, 8)?.iter().enumerate() {
        let direct = inc_beta(q, x + m as f64, y)?;
        println!("  m={m} {b:.16e} rel={:.1e}", ((b - direct) / direct).abs());
    }
    Ok(())
}
