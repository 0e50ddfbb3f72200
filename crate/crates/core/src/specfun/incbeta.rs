//! Incomplete Beta function B_q(x, y) = ∫₀^q t^{x−1}(1−t)^{y−1} dt.
//!
//! Two hypergeometric representations are used:
//!
//! * lower form: `q^x (1−q)^{y−1}/x · ₂F₁(1, 1−y; 1+x; q/(q−1))`
//! * complement form: `B(x,y) − q^{x−1}(1−q)^y/y · ₂F₁(1, 1−x; 1+y; (q−1)/q)`
//!
//! When the series argument has magnitude above 1/2 the same ₂F₁ is summed
//! through its Pfaff transform (argument `q` resp. `1−q`, positive terms), so
//! every evaluated series converges at least as fast as 2^{−k}.

use super::gamma::{beta, log_beta};
use super::hypergeometric::hyp2f1_one;
use crate::error::{domain, Error, Result};

fn check_args(function: &'static str, x: f64, y: f64) -> Result<()> {
    if !(x > 0.0) || !(y > 0.0) || !x.is_finite() || !y.is_finite() {
        return Err(domain(function, format!("shape parameters ({x}, {y}) must be positive")));
    }
    Ok(())
}

/// Where `inc_beta` switches from the lower form to the complement form.
///
/// Below the switch B_q is less than roughly half of B(x,y), so neither
/// branch subtracts two nearly equal numbers.
pub fn route_switch(x: f64, y: f64) -> f64 {
    (x + 1.0) / (x + y + 2.0)
}

/// B_q(x, y) for 0 < q ≤ 1.
pub fn inc_beta(q: f64, x: f64, y: f64) -> Result<f64> {
    check_args("inc_beta", x, y)?;
    if !(q > 0.0 && q <= 1.0) {
        return Err(domain("inc_beta", format!("q = {q} outside (0, 1]")));
    }
    if q == 1.0 {
        return beta(x, y);
    }
    if q < route_switch(x, y) {
        inc_beta_lower(q, x, y)
    } else {
        inc_beta_complement(q, x, y)
    }
}

/// Lower hypergeometric form, valid for q ∈ (0, 1).
pub fn inc_beta_lower(q: f64, x: f64, y: f64) -> Result<f64> {
    check_args("inc_beta_lower", x, y)?;
    if !(q > 0.0 && q < 1.0) {
        return Err(domain("inc_beta_lower", format!("q = {q} outside (0, 1)")));
    }
    let ln_q = q.ln();
    let ln_1mq = (-q).ln_1p();
    if q <= 1.0 / 3.0 {
        let w = q / (q - 1.0);
        let pre = (x * ln_q + (y - 1.0) * ln_1mq - x.ln()).exp();
        Ok(pre * hyp2f1_one(1.0 - y, 1.0 + x, w)?)
    } else {
        let pre = (x * ln_q + y * ln_1mq - x.ln()).exp();
        Ok(pre * hyp2f1_one(x + y, 1.0 + x, q)?)
    }
}

/// Complement hypergeometric form, valid for q ∈ (0, 1].
pub fn inc_beta_complement(q: f64, x: f64, y: f64) -> Result<f64> {
    check_args("inc_beta_complement", x, y)?;
    if !(q > 0.0 && q <= 1.0) {
        return Err(domain("inc_beta_complement", format!("q = {q} outside (0, 1]")));
    }
    let full = beta(x, y)?;
    if q == 1.0 {
        return Ok(full);
    }
    let ln_q = q.ln();
    let ln_1mq = (-q).ln_1p();
    let tail = if q >= 2.0 / 3.0 {
        let w = (q - 1.0) / q;
        let pre = ((x - 1.0) * ln_q + y * ln_1mq - y.ln()).exp();
        pre * hyp2f1_one(1.0 - x, 1.0 + y, w)?
    } else {
        let pre = (x * ln_q + y * ln_1mq - y.ln()).exp();
        pre * hyp2f1_one(x + y, 1.0 + y, 1.0 - q)?
    };
    Ok(full - tail)
}

/// Regularized I_q(x, y) = B_q(x, y)/B(x, y).
pub fn inc_beta_regularized(q: f64, x: f64, y: f64) -> Result<f64> {
    Ok((inc_beta(q, x, y)?.ln() - log_beta(x, y)?).exp())
}

/// Lower hypergeometric form for negative q.
///
/// `q^x` is real only for integer x, so any other x is reported as
/// complex-valued and unsupported.
pub fn inc_beta_series_signed(q: f64, x: f64, y: f64) -> Result<f64> {
    check_args("inc_beta_series_signed", x, y)?;
    if q > 0.0 {
        return inc_beta(q, x, y);
    }
    if !(q < 0.0) || !q.is_finite() {
        return Err(domain("inc_beta_series_signed", format!("q = {q} not supported")));
    }
    if x.fract() != 0.0 {
        return Err(Error::Unsupported(format!(
            "B_q(x, y) with q = {q} < 0 and non-integer x = {x} is complex-valued"
        )));
    }
    let w = q / (q - 1.0);
    let sign = if (x as i64) % 2 == 0 { 1.0 } else { -1.0 };
    let pre = sign * (x * (-q).ln() + (y - 1.0) * (-q).ln_1p() - x.ln()).exp();
    Ok(pre * hyp2f1_one(1.0 - y, 1.0 + x, w)?)
}

/// Advance B_q(x, y) to B_q(x+m, y) with the integration-by-parts ladder
/// B_q(x+1, y) = x/(x+y)·B_q(x, y) − q^x (1−q)^y/(x+y).
///
/// `base` must be B_q(x, y); for `m == 0` it is returned unchanged.
pub fn inc_beta_shift(q: f64, x: f64, y: f64, m: usize, base: f64) -> Result<f64> {
    check_args("inc_beta_shift", x, y)?;
    if !(q > 0.0 && q <= 1.0) {
        return Err(domain("inc_beta_shift", format!("q = {q} outside (0, 1]")));
    }
    let ln_q = q.ln();
    let ln_1mq = (-q).ln_1p();
    let mut value = base;
    for j in 0..m {
        let xj = x + j as f64;
        let boundary = if q == 1.0 {
            0.0
        } else {
            (xj * ln_q + y * ln_1mq).exp()
        };
        value = (xj * value - boundary) / (xj + y);
    }
    Ok(value)
}

/// Inverse ladder: B_q(x, y) from `top` = B_q(x+m, y), stepping down with
/// B_q(x, y) = ((x+y)·B_q(x+1, y) + q^x (1−q)^y)/x.
///
/// Every step adds two positive numbers, so unlike the upward direction,
/// which subtracts nearly equal terms when q is small (error growth about
/// q^{−m}), this direction is stable for every q.
pub fn inc_beta_shift_down(q: f64, x: f64, y: f64, m: usize, top: f64) -> Result<f64> {
    check_args("inc_beta_shift_down", x, y)?;
    if !(q > 0.0 && q <= 1.0) {
        return Err(domain("inc_beta_shift_down", format!("q = {q} outside (0, 1]")));
    }
    let ln_q = q.ln();
    let ln_1mq = (-q).ln_1p();
    let mut value = top;
    for j in (0..m).rev() {
        let xj = x + j as f64;
        let boundary = if q == 1.0 {
            0.0
        } else {
            (xj * ln_q + y * ln_1mq).exp()
        };
        value = ((xj + y) * value + boundary) / xj;
    }
    Ok(value)
}

/// B_q(x+s, y) for s = 0..=m_max from a single evaluation at s = m_max and
/// the stable downward ladder.
pub fn inc_beta_ladder(q: f64, x: f64, y: f64, m_max: usize) -> Result<Vec<f64>> {
    let mut out = vec![0.0; m_max + 1];
    let mut value = inc_beta(q, x + m_max as f64, y)?;
    out[m_max] = value;
    for s in (0..m_max).rev() {
        value = inc_beta_shift_down(q, x + s as f64, y, 1, value)?;
        out[s] = value;
    }
    Ok(out)
}
