//! Globally adaptive 21-point Gauss–Kronrod quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{domain, Error, Result};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const ROUNDOFF_FLOOR: f64 = 50.0 * f64::EPSILON;

/// Maximum number of subintervals before giving up.
pub const MAX_INTERVALS: usize = 5000;

/// Integral estimate with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub abs_error: f64,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    res_abs: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Piece> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[10];
    let mut gauss = 0.0;
    let mut res_abs = kronrod.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let x = half * XGK[j];
        let (f1, f2) = (f(center - x), f(center + x));
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    if !kronrod.is_finite() {
        return Err(domain("integrate", format!("integrand not finite on [{a}, {b}]")));
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = kronrod * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(ROUNDOFF_FLOOR * res_abs);
    }
    Ok(Piece {
        a,
        b,
        value,
        error: err,
        res_abs,
    })
}

/// Adaptive estimate of ∫ₐᵇ f with total absolute error at most `tol`.
pub fn integrate_with_estimate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<Quadrature> {
    if !(a < b) {
        return Err(domain("integrate", format!("empty interval [{a}, {b}]")));
    }
    if !(tol > 0.0) {
        return Err(domain("integrate", format!("tolerance {tol} must be positive")));
    }
    let first = gk21(&f, a, b)?;
    let mut total_err = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    while total_err > tol {
        // once the worst piece sits on its roundoff floor, bisection cannot help
        let top = heap.peek().expect("heap is non-empty");
        if top.error <= ROUNDOFF_FLOOR * top.res_abs {
            break;
        }
        if heap.len() >= MAX_INTERVALS {
            let worst = heap.peek().copied().expect("heap is non-empty");
            return Err(Error::Convergence {
                what: "adaptive quadrature",
                detail: format!(
                    "error estimate {total_err:e} above tolerance {tol:e} after {} subintervals; \
                     worst interval [{}, {}] carries {:e}",
                    heap.len(),
                    worst.a,
                    worst.b,
                    worst.error
                ),
            });
        }
        let worst = heap.pop().expect("heap is non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            return Err(Error::Convergence {
                what: "adaptive quadrature",
                detail: format!("interval [{}, {}] cannot be bisected further", worst.a, worst.b),
            });
        }
        let left = gk21(&f, worst.a, mid)?;
        let right = gk21(&f, mid, worst.b)?;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // re-sum from the pieces to drop accumulated update drift
    let mut pieces: Vec<Piece> = heap.into_vec();
    pieces.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value: crate::specfun::CompensatedSum = pieces.iter().map(|p| p.value).collect();
    let abs_error = pieces.iter().map(|p| p.error).sum();
    Ok(Quadrature {
        value: value.value(),
        abs_error,
        intervals: pieces.len(),
    })
}

/// Adaptive estimate of ∫ₐᵇ f with absolute error at most `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    integrate_with_estimate(f, a, b, tol).map(|q| q.value)
}

/// B_q(x, y) by quadrature of its defining integral.
///
/// Endpoint singularities t^{x−1} (x < 1) and (1−t)^{y−1} (y < 1) are removed
/// by the substitutions t = s^{1/x} and 1 − t = v^{1/y}. Used as an
/// independent check on the series routes.
pub fn inc_beta_quadrature(q: f64, x: f64, y: f64, rel_tol: f64) -> Result<f64> {
    if !(q > 0.0 && q <= 1.0) || !(x > 0.0) || !(y > 0.0) {
        return Err(domain("inc_beta_quadrature", format!("arguments ({q}, {x}, {y})")));
    }
    let split = q.min(0.5);
    let lower = |tol: f64| -> Result<f64> {
        if x < 1.0 {
            let ux = 1.0 / x;
            let upper = split.powf(x);
            integrate(move |s: f64| ((y - 1.0) * (-s.powf(ux)).ln_1p()).exp() / x, 0.0, upper, tol)
        } else {
            integrate(
                move |t: f64| ((x - 1.0) * t.ln() + (y - 1.0) * (-t).ln_1p()).exp(),
                0.0,
                split,
                tol,
            )
        }
    };
    let upper = |tol: f64| -> Result<f64> {
        if q <= split {
            return Ok(0.0);
        }
        if y < 1.0 {
            let uy = 1.0 / y;
            let (v_lo, v_hi) = ((1.0 - q).powf(y), (1.0 - split).powf(y));
            integrate(move |v: f64| ((x - 1.0) * (-v.powf(uy)).ln_1p()).exp() / y, v_lo, v_hi, tol)
        } else {
            integrate(
                move |t: f64| ((x - 1.0) * t.ln() + (y - 1.0) * (-t).ln_1p()).exp(),
                split,
                q,
                tol,
            )
        }
    };
    // rough magnitude first, then the requested relative accuracy
    let rough = lower(1e-3)?.abs() + upper(1e-3)?.abs();
    let tol = (rel_tol * rough).max(f64::MIN_POSITIVE);
    Ok(lower(tol / 2.0)? + upper(tol / 2.0)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_integrand() {
        for &q in &[0.1, 0.5, 1.0] {
            assert!((integrate(|_| 1.0, 0.0, q, 1e-14).unwrap() - q).abs() < 1e-15);
        }
    }

    #[test]
    fn complete_beta_two_three() {
        let v = integrate(|t| t * (1.0 - t) * (1.0 - t), 0.0, 1.0, 1e-12).unwrap();
        assert!((v - 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn polynomials_are_exact() {
        // ∫₋₁² Σ cᵢ tⁱ for degree ≤ 10
        let c: Vec<f64> = (0..=10).map(|i| ((i * 7 % 5) as f64 - 2.0) / (i + 1) as f64).collect();
        let f = |t: f64| c.iter().rev().fold(0.0, |acc, &ci| acc * t + ci);
        let exact: f64 = c
            .iter()
            .enumerate()
            .map(|(i, ci)| ci * (2f64.powi(i as i32 + 1) - (-1f64).powi(i as i32 + 1)) / (i + 1) as f64)
            .sum();
        let got = integrate_with_estimate(f, -1.0, 2.0, 1e-13).unwrap();
        assert_eq!(got.intervals, 1);
        assert!((got.value - exact).abs() < 1e-13 * exact.abs().max(1.0));
    }

    #[test]
    fn oscillatory_integrand_adapts() {
        let v = integrate(|t: f64| (50.0 * t).sin() * (-t).exp(), 0.0, 10.0, 1e-13).unwrap();
        let exact = (50.0 - (-10.0f64).exp() * (50.0 * (500.0f64).cos() + (500.0f64).sin())) / 2501.0;
        assert!((v - exact).abs() < 1e-13);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(integrate(|t| t, 1.0, 1.0, 1e-10).is_err());
        assert!(integrate(|t| t, 0.0, 1.0, 0.0).is_err());
        assert!(integrate(|t: f64| 1.0 / t, 0.0, 1.0, 1e-10).is_err());
    }

    #[test]
    fn incomplete_beta_by_quadrature() {
        // B_q(1, 1) = q ; B_{1/2}(1/2, 1/2) = π/2
        assert!((inc_beta_quadrature(0.3, 1.0, 1.0, 1e-13).unwrap() - 0.3).abs() < 1e-14);
        let half = inc_beta_quadrature(0.5, 0.5, 0.5, 1e-13).unwrap();
        assert!((half - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        let full = inc_beta_quadrature(1.0, 0.5, 0.5, 1e-13).unwrap();
        assert!((full - std::f64::consts::PI).abs() < 1e-12);
        let v = inc_beta_quadrature(0.7, 1.3, 2.6, 1e-13).unwrap();
        assert!(((v - 0.226_503_381_310_968_322_25) / v).abs() < 1e-12);
    }
}
