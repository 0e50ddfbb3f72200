//! Jacobi polynomials by the three-term recurrence in the degree.

use super::dd::Dd;

use super::hypergeometric::hyp2f1_terminating_dd;
use super::pochhammer::{factorial, pochhammer};
use crate::error::{domain, Result};

/// P_n^{(a,b)}(x) for a, b > −1.
///
/// The recurrence runs in double-double so that values near a zero of P_n
/// keep their relative accuracy.
pub fn jacobi_p(n: usize, a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a > -1.0) || !(b > -1.0) {
        return Err(domain("jacobi_p", format!("parameters ({a}, {b}) must exceed -1")));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let (a, b, x) = (Dd::from(a), Dd::from(b), Dd::from(x));
    let ab = a + b;
    let p1 = (a + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0;
    let (mut prev, mut cur) = (Dd::from(1.0), p1);
    let a2b2 = a * a - b * b;
    for m in 2..=n {
        let m = m as f64;
        let s = ab + 2.0 * m;
        let c1 = (ab + m) * (s - 2.0) * (2.0 * m);
        let c2 = (s - 1.0) * (s * (s - 2.0) * x + a2b2);
        let c3 = (a + (m - 1.0)) * (b + (m - 1.0)) * s * 2.0;
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    Ok(cur.to_f64())
}

/// P_n^{(a,b)}(x) through its terminating ₂F₁ representation
/// ((1+a)ₙ/n!)·₂F₁(−n, a+b+1+n; 1+a; (1−x)/2).
///
/// The series alternates with terms far larger than the result once n is a
/// few dozen; even with double-double summation it loses digits there.
/// Prefer [`jacobi_p`] beyond n ≈ 30.
pub fn jacobi_p_hypergeometric(n: usize, a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a > -1.0) || !(b > -1.0) {
        return Err(domain(
            "jacobi_p_hypergeometric",
            format!("parameters ({a}, {b}) must exceed -1"),
        ));
    }
    let prefactor = (pochhammer(1.0 + a, n) / factorial(n)).value();
    let (ad, bd) = (Dd::from(a), Dd::from(b));
    let z = (Dd::from(1.0) - x) / 2.0;
    let f = hyp2f1_terminating_dd(n, ad + bd + (1.0 + n as f64), ad + 1.0, z);
    Ok(prefactor * f.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(jacobi_p(0, 0.4, 2.2, -0.3).unwrap(), 1.0);
        assert!((jacobi_p(1, 1.0, 2.0, 0.3).unwrap() - 0.25).abs() < 1e-15);
        let endpoint = 1.5 * 2.5 * 3.5 * 4.5 / 24.0;
        assert!((jacobi_p(4, 0.5, 1.5, 1.0).unwrap() - endpoint).abs() < 1e-13);
    }

    #[test]
    fn legendre_special_case() {
        // P_3^{(0,0)} = (5x³ − 3x)/2
        for &x in &[-1.0, -0.4, 0.0, 0.35, 1.0] {
            let want = (5.0 * x * x * x - 3.0 * x) / 2.0;
            assert!((jacobi_p(3, 0.0, 0.0, x).unwrap() - want).abs() < 1e-15);
        }
    }

    #[test]
    fn reflection_symmetry() {
        // P_n^{(a,b)}(−x) = (−1)ⁿ P_n^{(b,a)}(x)
        for n in 0..9 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let l = jacobi_p(n, 0.3, 2.1, -0.62).unwrap();
            let r = sign * jacobi_p(n, 2.1, 0.3, 0.62).unwrap();
            assert!((l - r).abs() < 1e-12 * (1.0 + l.abs()));
        }
    }

    #[test]
    fn recurrence_matches_hypergeometric_form() {
        for n in 0..=10 {
            for &(a, b, x) in &[(0.5, 1.5, 0.2), (-0.7, 3.2, -0.9), (4.1, -0.5, 0.99)] {
                let r = jacobi_p(n, a, b, x).unwrap();
                let h = jacobi_p_hypergeometric(n, a, b, x).unwrap();
                assert!((r - h).abs() <= 1e-12 * r.abs().max(1.0), "n={n} a={a} b={b}");
            }
        }
    }

    #[test]
    fn rejects_parameters_at_or_below_minus_one() {
        assert!(jacobi_p(2, -1.0, 0.0, 0.1).is_err());
        assert!(jacobi_p_hypergeometric(2, 0.0, -1.2, 0.1).is_err());
    }
}
