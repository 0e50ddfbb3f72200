//! Terminating series checked against exact rational arithmetic. Parameters are
//! dyadic so the f64 inputs equal the rationals exactly.

#![allow(clippy::excessive_precision)]

use kgh::specfun::{hyp2f1_terminating, hyp3f2_unit_terminating, jacobi_p, pochhammer};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use proptest::prelude::*;

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn dyadic(num: i64) -> (f64, BigRational) {
    (num as f64 / 8.0, q(num, 8))
}

/// Σₖ Π(aᵢ)ₖ / Π(cⱼ)ₖ · zᵏ/k! for k ≤ n.
fn exact_pfq(n: usize, a: &[BigRational], c: &[BigRational], z: &BigRational) -> BigRational {
    exact_pfq_with_scale(n, a, c, z).0
}

/// The sum together with Σ|termₖ|, the natural scale for rounding error.
fn exact_pfq_with_scale(n: usize, a: &[BigRational], c: &[BigRational], z: &BigRational) -> (BigRational, f64) {
    let mut term = BigRational::one();
    let mut sum = term.clone();
    let mut scale = 1.0;
    for k in 0..n {
        let kq = q(k as i64, 1);
        let mut num = z.clone();
        for ai in a {
            num *= ai + &kq;
        }
        let mut den = &kq + BigRational::one();
        for cj in c {
            den *= cj + &kq;
        }
        term = term * num / den;
        scale += term.abs().to_f64().unwrap();
        sum += &term;
    }
    (sum, scale)
}

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

#[test]
fn hyp3f2_fixed_case() {
    // ₃F₂(−3, 5/2, 6/5; 41/10, 33/10; 1), 50-digit value
    let v = hyp3f2_unit_terminating(3, 2.5, 1.2, 4.1, 3.3).unwrap();
    assert!(rel(v, 0.533_694_370_003_967_683_62) < 1e-14);
    let exact = exact_pfq(3, &[q(-3, 1), q(5, 2), q(6, 5)], &[q(41, 10), q(33, 10)], &BigRational::one());
    assert!(rel(v, exact.to_f64().unwrap()) < 1e-14);
}

#[test]
fn saalschutz_balanced_sum() {
    // balanced ₃F₂(−n, a, b; c, 1+a+b−c−n; 1) = (c−a)ₙ(c−b)ₙ / ((c)ₙ(c−a−b)ₙ)
    let (a, b, c) = (1.25, 0.5, 3.75);
    for n in 0..8usize {
        let d = 1.0 + a + b - c - n as f64;
        let got = hyp3f2_unit_terminating(n, a, b, c, d).unwrap();
        let want = (pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n))).value();
        assert!(rel(got, want) < 1e-12, "n={n}: {got} vs {want}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hyp2f1_matches_rational(n in 0usize..10, b in 1i64..80, c in 1i64..80, z in -8i64..=8) {
        let ((bf, bq), (cf, cq), (zf, zq)) = (dyadic(b), dyadic(c), dyadic(z));
        let (exact, scale) = exact_pfq_with_scale(n, &[q(-(n as i64), 1), bq], &[cq], &zq);
        let exact = exact.to_f64().unwrap();
        let got = hyp2f1_terminating(n, bf, cf, zf).unwrap();
        // extended-precision summation: error far below one ulp of the term scale
        prop_assert!((got - exact).abs() <= 1e-15 * exact.abs() + 1e-20 * scale, "{got} vs {exact}");
    }

    #[test]
    fn hyp3f2_matches_rational(n in 0usize..9, a2 in 1i64..60, a3 in 1i64..60, c1 in 1i64..60, c2 in 1i64..60) {
        let ((a2f, a2q), (a3f, a3q)) = (dyadic(a2), dyadic(a3));
        let ((c1f, c1q), (c2f, c2q)) = (dyadic(c1), dyadic(c2));
        let (exact, scale) = exact_pfq_with_scale(n, &[q(-(n as i64), 1), a2q, a3q], &[c1q, c2q], &BigRational::one());
        let got = hyp3f2_unit_terminating(n, a2f, a3f, c1f, c2f).unwrap();
        let e = exact.to_f64().unwrap();
        // plain f64 summation of an alternating series: rounding scales with Σ|term|
        prop_assert!((got - e).abs() <= 1e-14 * e.abs() + 4.0 * f64::EPSILON * (n as f64 + 1.0) * scale, "{got} vs {e}");
    }

    #[test]
    fn jacobi_matches_rational(n in 0usize..10, a in -7i64..40, b in -7i64..40, x in -8i64..=8) {
        // P_n^{(a,b)}(x) = ((1+a)ₙ/n!) ₂F₁(−n, n+a+b+1; 1+a; (1−x)/2)
        let ((af, aq), (bf, bq), (xf, xq)) = (dyadic(a), dyadic(b), dyadic(x));
        let one = BigRational::one();
        let z = (&one - &xq) / q(2, 1);
        let f = exact_pfq(n, &[q(-(n as i64), 1), q(n as i64, 1) + &aq + &bq + &one], &[&aq + &one], &z);
        let mut pre = one.clone();
        for k in 0..n {
            pre = pre * (&aq + q(k as i64 + 1, 1)) / q(k as i64 + 1, 1);
        }
        let exact = (pre * f).to_f64().unwrap();
        let got = jacobi_p(n, af, bf, xf).unwrap();
        prop_assert!((got - exact).abs() <= 1e-13 * exact.abs().max(1e-8), "{got} vs {exact}");
    }
}
