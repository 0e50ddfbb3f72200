//! Terminating hypergeometric series and the ₂F₁(1, b; c; w) tail series used
//! by the incomplete Beta routes.

use super::dd::Dd;

use super::sum::CompensatedSum;
use crate::error::{domain, Error, Result};

/// Relative size below which a series term no longer contributes.
pub const SERIES_REL_TOL: f64 = 1e-16;
/// Hard cap on the number of series terms.
pub const SERIES_MAX_TERMS: usize = 100_000;

fn check_denominator(function: &'static str, c: f64, n: usize) -> Result<()> {
    for k in 0..n {
        if c + k as f64 == 0.0 {
            return Err(domain(
                function,
                format!("denominator parameter {c} vanishes at term {}", k + 1),
            ));
        }
    }
    Ok(())
}

/// ₂F₁(−n, b; c; z) as the exact finite sum of its n+1 terms.
///
/// Terms and their sum are carried in double-double: near z = 1 with large b
/// the terms alternate and cancel by many orders of magnitude.
pub fn hyp2f1_terminating(n: usize, b: f64, c: f64, z: f64) -> Result<f64> {
    check_denominator("hyp2f1_terminating", c, n)?;
    Ok(hyp2f1_terminating_dd(n, Dd::from(b), Dd::from(c), Dd::from(z)).to_f64())
}

/// Double-double kernel of [`hyp2f1_terminating`]; denominators are not checked.
pub(crate) fn hyp2f1_terminating_dd(n: usize, b: Dd, c: Dd, z: Dd) -> Dd {
    let mut term = Dd::from(1.0);
    let mut acc = term;
    for k in 0..n {
        let kf = k as f64;
        term = term * (kf - n as f64) * (b + kf) * z / ((c + kf) * (kf + 1.0));
        acc += term;
    }
    acc
}

/// d/dz ₂F₁(−n, b; c; z) = (−n·b/c)·₂F₁(−n+1, b+1; c+1; z).
pub fn hyp2f1_terminating_derivative(n: usize, b: f64, c: f64, z: f64) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    check_denominator("hyp2f1_terminating_derivative", c, n)?;
    Ok(-(n as f64) * b / c * hyp2f1_terminating(n - 1, b + 1.0, c + 1.0, z)?)
}

/// ₃F₂(−n, a2, a3; c1, c2; 1) as the exact finite sum of its n+1 terms.
pub fn hyp3f2_unit_terminating(n: usize, a2: f64, a3: f64, c1: f64, c2: f64) -> Result<f64> {
    check_denominator("hyp3f2_unit_terminating", c1, n)?;
    check_denominator("hyp3f2_unit_terminating", c2, n)?;
    let mut term = 1.0;
    let mut acc = CompensatedSum::new();
    acc.add(term);
    for k in 0..n {
        let kf = k as f64;
        term *= (kf - n as f64) * (a2 + kf) * (a3 + kf) / ((c1 + kf) * (c2 + kf) * (kf + 1.0));
        acc.add(term);
    }
    Ok(acc.value())
}

/// ₂F₁(1, b; c; w) = Σₖ (b)ₖ/(c)ₖ wᵏ for |w| < 1.
///
/// Summation stops once the remaining tail, bounded geometrically by the
/// current term ratio, falls below `SERIES_REL_TOL` of the partial sum.
pub(crate) fn hyp2f1_one(b: f64, c: f64, w: f64) -> Result<f64> {
    if !(w.abs() < 1.0) {
        return Err(domain("hyp2f1_one", format!("argument {w} outside the unit disc")));
    }
    let mut term = 1.0;
    let mut acc = CompensatedSum::new();
    acc.add(term);
    for k in 0..SERIES_MAX_TERMS {
        let kf = k as f64;
        let den = c + kf;
        if den == 0.0 {
            return Err(domain("hyp2f1_one", format!("denominator parameter {c} vanishes")));
        }
        let ratio = (b + kf) / den * w;
        term *= ratio;
        acc.add(term);
        if term == 0.0 {
            return Ok(acc.value());
        }
        // past the parameter transients the ratio magnitude is monotone
        let r = ratio.abs();
        if kf > b.abs() + 1.0 && kf > c.abs() + 1.0 && r < 1.0 {
            let tail = term.abs() * r / (1.0 - r);
            if tail <= SERIES_REL_TOL * acc.value().abs() {
                return Ok(acc.value());
            }
        }
    }
    Err(Error::Convergence {
        what: "hypergeometric series",
        detail: format!("2F1(1, {b}; {c}; {w}) needed more than {SERIES_MAX_TERMS} terms"),
    })
}
