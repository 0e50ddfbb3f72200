//! Residual of the z-form radial operator applied to the analytic u.
//!
//! With z = q·e^{−αr} the approximated radial equation reads
//!
//! ```text
//! u″ + u′/z − ε²/z² u + β₁/(z(1−z)) u − (k−1)(k−3)/(4q z(1−z)²) u − β₂/(1−z)² u = 0
//! ```
//!
//! Derivatives are analytic: with u = z^ε(1−z)^δ F and L = ε/z − δ/(1−z),
//! u′ = env·(L F + F′) and u″ = env·((L² + L′) F + 2L F′ + F″), where F′ and
//! F″ are again terminating ₂F₁ by the contiguous derivative relation.

use crate::error::{domain, Result};
use crate::model::{centrifugal_factor, PotentialSpec};
use crate::spectrum::BoundState;
use crate::specfun::hyp2f1_terminating;

/// u, u′, u″ (unnormalized) at z.
pub fn u_and_derivatives(state: &BoundState, z: f64) -> Result<[f64; 3]> {
    let n = state.n as usize;
    let nf = f64::from(state.n);
    let (eps, delta) = (state.eps, state.delta);
    let b = 2.0 * eps + 2.0 * delta + nf;
    let c = 1.0 + 2.0 * eps;
    let f = hyp2f1_terminating(n, b, c, z)?;
    let f1 = if n >= 1 {
        -nf * b / c * hyp2f1_terminating(n - 1, b + 1.0, c + 1.0, z)?
    } else {
        0.0
    };
    let f2 = if n >= 2 {
        nf * (nf - 1.0) * b * (b + 1.0) / (c * (c + 1.0)) * hyp2f1_terminating(n - 2, b + 2.0, c + 2.0, z)?
    } else {
        0.0
    };
    let w = 1.0 - z;
    let env = (eps * z.abs().ln() + delta * w.ln()).exp();
    let l = eps / z - delta / w;
    let dl = -eps / (z * z) - delta / (w * w);
    Ok([
        env * f,
        env * (l * f + f1),
        env * ((l * l + dl) * f + 2.0 * l * f1 + f2),
    ])
}

/// The operator applied to u at a single z.
pub fn operator_at(state: &BoundState, spec: &PotentialSpec, z: f64) -> Result<f64> {
    let [u, du, d2u] = u_and_derivatives(state, z)?;
    let w = 1.0 - z;
    let eps = state.eps;
    let beta1 = spec.beta1(state.energy);
    let beta2 = spec.beta2();
    let cent = centrifugal_factor(state.k);
    Ok(d2u + du / z - eps * eps / (z * z) * u + beta1 / (z * w) * u
        - cent / (spec.q * z * w * w) * u
        - beta2 / (w * w) * u)
}

/// max |operator u| / max |u| over `points` equally spaced z in
/// [0.05q, 0.95q].
pub fn ode_residual(state: &BoundState, spec: &PotentialSpec, points: usize) -> Result<f64> {
    if points < 2 {
        return Err(domain("ode_residual", "at least two sample points required"));
    }
    let (z0, z1) = (0.05 * spec.q, 0.95 * spec.q);
    let mut max_res = 0.0f64;
    let mut max_u = 0.0f64;
    for i in 0..points {
        let z = z0 + (z1 - z0) * i as f64 / (points - 1) as f64;
        max_res = max_res.max(operator_at(state, spec, z)?.abs());
        max_u = max_u.max(u_and_derivatives(state, z)?[0].abs());
    }
    Ok(max_res / max_u)
}
