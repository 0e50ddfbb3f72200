//! Rising factorials in overflow-safe signed-log form.

use std::ops::{Div, Mul};

/// A real number stored as `sign · exp(log_magnitude)`.
///
/// `sign == 0` exactly when the value is zero; `log_magnitude` is then −∞.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogValue {
    pub log_magnitude: f64,
    pub sign: i8,
}

impl SignedLogValue {
    pub const ONE: Self = Self {
        log_magnitude: 0.0,
        sign: 1,
    };
    pub const ZERO: Self = Self {
        log_magnitude: f64::NEG_INFINITY,
        sign: 0,
    };

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self {
                log_magnitude: x.abs().ln(),
                sign: if x > 0.0 { 1 } else { -1 },
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn value(&self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * self.log_magnitude.exp()
        }
    }

    pub fn recip(self) -> Self {
        assert!(self.sign != 0, "reciprocal of zero");
        Self {
            log_magnitude: -self.log_magnitude,
            sign: self.sign,
        }
    }
}

impl Mul for SignedLogValue {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.sign == 0 || rhs.sign == 0 {
            return Self::ZERO;
        }
        Self {
            log_magnitude: self.log_magnitude + rhs.log_magnitude,
            sign: self.sign * rhs.sign,
        }
    }
}

impl Div for SignedLogValue {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

/// Pochhammer symbol (a)ₙ = a(a+1)···(a+n−1), accumulated term-wise in log space.
pub fn pochhammer(a: f64, n: usize) -> SignedLogValue {
    let mut acc = SignedLogValue::ONE;
    for j in 0..n {
        let factor = a + j as f64;
        if factor == 0.0 {
            return SignedLogValue::ZERO;
        }
        acc.log_magnitude += factor.abs().ln();
        if factor < 0.0 {
            acc.sign = -acc.sign;
        }
    }
    acc
}

/// ln n! as a signed-log value (always positive).
pub fn factorial(n: usize) -> SignedLogValue {
    pochhammer(1.0, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(pochhammer(7.3, 0), SignedLogValue::ONE);
        assert!((pochhammer(3.0, 2).value() - 12.0).abs() < 1e-14);
        assert!(pochhammer(-2.0, 3).is_zero());
        assert_eq!(pochhammer(-2.0, 3).value(), 0.0);
    }

    #[test]
    fn negative_integer_below_reach_is_nonzero() {
        // (−3)₃ = (−3)(−2)(−1) = −6
        let p = pochhammer(-3.0, 3);
        assert_eq!(p.sign, -1);
        assert!((p.value() + 6.0).abs() < 1e-14);
    }

    #[test]
    fn huge_products_do_not_overflow() {
        let p = pochhammer(150.5, 400);
        assert!(p.log_magnitude.is_finite());
        assert!(p.value().is_infinite());
        let ratio = p / pochhammer(151.5, 399);
        assert!((ratio.value() - 150.5).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn forward_recurrence(a in -12.0f64..12.0, n in 0usize..30) {
            let lhs = pochhammer(a, n + 1);
            let rhs = SignedLogValue::from_f64(a + n as f64) * pochhammer(a, n);
            prop_assert_eq!(lhs.sign, rhs.sign);
            if lhs.sign != 0 {
                prop_assert!((lhs.log_magnitude - rhs.log_magnitude).abs()
                    < 1e-12 * (1.0 + lhs.log_magnitude.abs()));
            }
        }
    }
}
