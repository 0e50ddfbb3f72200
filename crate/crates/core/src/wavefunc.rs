//! Analytic eigenfunctions
//!
//! ```text
//! u(r) = C · z^ε (1−z)^δ · ₂F₁(−n, 2ε+2δ+n; 1+2ε; z),    z = q·e^{−αr}
//! ```
//!
//! The ₂F₁ form is canonical: normalization constants refer to it. The
//! Jacobi form z^ε(1−z)^δ P_n^{(2ε, 2δ−1)}(1−2z) differs from it by the
//! constant factor (1+2ε)ₙ/n! and is kept as a cross-check.
//!
//! For q < 0 the variable z is negative and z^ε is taken as |z|^ε; the
//! dropped factor is a constant phase.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::model::{PotentialSpec, QuantumNumbers};
use crate::spectrum::BoundState;
use crate::specfun::{hyp2f1_terminating, jacobi_p};

/// z = q·e^{−αr}.
pub fn z_of_r(r: f64, spec: &PotentialSpec) -> f64 {
    spec.q * (-spec.alpha * r).exp()
}

/// 1 − z evaluated without cancellation at small r.
pub fn one_minus_z_of_r(r: f64, spec: &PotentialSpec) -> f64 {
    (1.0 - spec.q) - spec.q * (-spec.alpha * r).exp_m1()
}

/// Parameters (b, c) of the ₂F₁(−n, b; c; z) factor.
pub fn hypergeometric_parameters(state: &BoundState) -> (f64, f64) {
    let b = 2.0 * state.eps + 2.0 * state.delta + f64::from(state.n);
    let c = 1.0 + 2.0 * state.eps;
    (b, c)
}

// |z|^ε (1−z)^δ from ln|z| and 1−z
fn envelope(state: &BoundState, ln_abs_z: f64, one_minus_z: f64) -> Result<f64> {
    if one_minus_z == 0.0 {
        return Ok(0.0);
    }
    if one_minus_z < 0.0 {
        return Err(Error::Internal(format!("1 - z = {one_minus_z} is negative")));
    }
    Ok((state.eps * ln_abs_z + state.delta * one_minus_z.ln()).exp())
}

fn scale(state: &BoundState, normalized: bool) -> Result<f64> {
    if !normalized {
        return Ok(1.0);
    }
    state
        .norm_constant
        .ok_or_else(|| Error::NoSuchState("state carries no normalization constant".into()))
}

/// u evaluated at a value of z (with 1 − z supplied separately for accuracy).
pub fn radial_u_at_z(state: &BoundState, z: f64, one_minus_z: f64, normalized: bool) -> Result<f64> {
    let c = scale(state, normalized)?;
    if z == 0.0 {
        return Ok(0.0);
    }
    let env = envelope(state, z.abs().ln(), one_minus_z)?;
    if env == 0.0 {
        return Ok(0.0);
    }
    let (b, cc) = hypergeometric_parameters(state);
    Ok(c * env * hyp2f1_terminating(state.n as usize, b, cc, z)?)
}

/// u(r); with `normalized` the state's normalization constant is applied.
pub fn radial_u(state: &BoundState, spec: &PotentialSpec, r: f64, normalized: bool) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(domain("radial_u", format!("radius {r} must be nonnegative")));
    }
    let c = scale(state, normalized)?;
    let ln_abs_z = spec.q.abs().ln() - spec.alpha * r;
    let env = envelope(state, ln_abs_z, one_minus_z_of_r(r, spec))?;
    if env == 0.0 {
        return Ok(0.0);
    }
    let (b, cc) = hypergeometric_parameters(state);
    let f = hyp2f1_terminating(state.n as usize, b, cc, z_of_r(r, spec))?;
    Ok(c * env * f)
}

/// Unnormalized Jacobi form z^ε(1−z)^δ P_n^{(2ε, 2δ−1)}(1−2z).
pub fn radial_u_jacobi(state: &BoundState, spec: &PotentialSpec, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(domain("radial_u_jacobi", format!("radius {r} must be nonnegative")));
    }
    let ln_abs_z = spec.q.abs().ln() - spec.alpha * r;
    let env = envelope(state, ln_abs_z, one_minus_z_of_r(r, spec))?;
    if env == 0.0 {
        return Ok(0.0);
    }
    let z = z_of_r(r, spec);
    Ok(env * jacobi_p(state.n as usize, 2.0 * state.eps, 2.0 * state.delta - 1.0, 1.0 - 2.0 * z)?)
}

/// R(r) = r^{−(D−1)/2} u(r).
pub fn radial_r(
    state: &BoundState,
    spec: &PotentialSpec,
    qn: &QuantumNumbers,
    r: f64,
    normalized: bool,
) -> Result<f64> {
    let u = radial_u(state, spec, r, normalized)?;
    if qn.dim == 1 {
        return Ok(u);
    }
    if !(r > 0.0) {
        return Err(domain(
            "radial_R",
            format!("R is singular at r = 0 for D = {}", qn.dim),
        ));
    }
    Ok(u * r.powf(-(f64::from(qn.dim) - 1.0) / 2.0))
}

/// One sample of the radial functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialSample {
    pub r: f64,
    pub z: f64,
    pub u: f64,
    #[serde(rename = "R")]
    pub big_r: f64,
}

/// Samples u and R on the given radii (all > 0 unless D = 1).
pub fn sample(
    state: &BoundState,
    spec: &PotentialSpec,
    qn: &QuantumNumbers,
    radii: &[f64],
    normalized: bool,
) -> Result<Vec<RadialSample>> {
    radii
        .iter()
        .map(|&r| {
            Ok(RadialSample {
                r,
                z: z_of_r(r, spec),
                u: radial_u(state, spec, r, normalized)?,
                big_r: radial_r(state, spec, qn, r, normalized)?,
            })
        })
        .collect()
}

/// Number of sign changes in a sequence, ignoring exact zeros.
pub fn sign_changes(values: impl IntoIterator<Item = f64>) -> usize {
    let mut last = 0.0f64;
    let mut count = 0;
    for v in values {
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            count += 1;
        }
        last = v;
    }
    count
}

/// Log-spaced radii over [1e−4/α, r_max].
pub fn log_radii(alpha: f64, r_max: f64, points: usize) -> Vec<f64> {
    let lo = (1e-4 / alpha).ln();
    let hi = r_max.ln();
    let step = (hi - lo) / (points.max(2) - 1) as f64;
    (0..points).map(|i| (lo + step * i as f64).exp()).collect()
}
