//! Normalization constants Cₙ such that ∫₀^∞ (Cₙ u)² dr = 1, with u the
//! unnormalized ₂F₁ form from [`crate::wavefunc`].
//!
//! Substituting z = q·e^{−αr} turns the integral into
//! (1/α)∫₀^q z^{2ε−1}(1−z)^{2δ} F(z)² dz. Expanding F gives a double sum of
//! incomplete Beta functions (any 0 < q ≤ 1); at q = 1 the inner sum
//! collapses to a ₃F₂ at unit argument.

use crate::specfun::Dd;

use crate::error::{Error, Result};
use crate::model::PotentialSpec;
use crate::oracle::integrate_with_estimate;
use crate::spectrum::BoundState;
use crate::specfun::{factorial, hyp3f2_unit_terminating, inc_beta, log_beta, pochhammer, CompensatedSum};
use crate::wavefunc::{hypergeometric_parameters, radial_u, radial_u_at_z};

fn check_exponents(state: &BoundState) -> Result<()> {
    if !(state.eps > 0.0) || !(2.0 * state.delta + 1.0 > 0.0) {
        return Err(Error::NoSuchState(format!(
            "normalization needs eps > 0 and 2 delta + 1 > 0 (eps = {}, delta = {})",
            state.eps, state.delta
        )));
    }
    Ok(())
}

fn constant_from_sum(alpha: f64, sum: f64) -> Result<f64> {
    if !(sum > 0.0) || !sum.is_finite() {
        return Err(Error::NonPositiveRadicand { value: sum });
    }
    Ok((alpha / sum).sqrt())
}

/// Series coefficients cᵢ = (−n)ᵢ(b)ᵢ / ((c)ᵢ i!) of F = ₂F₁(−n, b; c; z),
/// by the term ratio in double-double arithmetic.
fn series_coefficients(state: &BoundState) -> Vec<Dd> {
    let n = state.n as usize;
    let (b, c) = hypergeometric_parameters(state);
    let (b, c) = (Dd::from(b), Dd::from(c));
    let mut out = Vec::with_capacity(n + 1);
    let mut term = Dd::from(1.0);
    out.push(term);
    for i in 0..n {
        let fi = i as f64;
        term = term * (fi - n as f64) * (b + fi) / ((c + fi) * (fi + 1.0));
        out.push(term);
    }
    out
}

/// B_q(x+m, y) for m = 0..=m_max from one evaluation at m = m_max and the
/// downward ladder, carried in double-double.
fn beta_ladder_dd(q: f64, x: f64, y: f64, m_max: usize) -> Result<Vec<Dd>> {
    let mut value = Dd::from(inc_beta(q, x + m_max as f64, y)?);
    let (ln_q, ln_1mq) = (q.ln(), (-q).ln_1p());
    let mut out = vec![Dd::ZERO; m_max + 1];
    out[m_max] = value;
    for j in (0..m_max).rev() {
        let xj = Dd::from(x) + j as f64;
        let boundary = if q == 1.0 {
            0.0
        } else {
            ((x + j as f64) * ln_q + y * ln_1mq).exp()
        };
        value = ((xj + y) * value + boundary) / xj;
        out[j] = value;
    }
    Ok(out)
}

/// Cₙ from Σᵢⱼ cᵢcⱼ B_q(2ε+i+j, 2δ+1) = α/Cₙ².
///
/// Terms are grouped by m = i+j; the 2n+1 Beta values come from a single
/// evaluation at m = 2n followed by the (stable) downward ladder. The alternating signs
/// of (−n)ᵢ cancel heavily for larger n (about 10⁶ at n = 5), so
/// coefficients, ladder and sums are carried in double-double.
pub fn norm_general_q(state: &BoundState, spec: &PotentialSpec) -> Result<f64> {
    check_exponents(state)?;
    if !(spec.q > 0.0 && spec.q <= 1.0) {
        return Err(Error::Unsupported(format!(
            "normalization requires q in (0, 1], got {}",
            spec.q
        )));
    }
    let n = state.n as usize;
    let coeffs = series_coefficients(state);
    let betas = beta_ladder_dd(spec.q, 2.0 * state.eps, 2.0 * state.delta + 1.0, 2 * n)?;
    let mut total = Dd::from(0.0);
    for (m, bq) in betas.iter().enumerate() {
        let mut pair = Dd::from(0.0);
        for i in m.saturating_sub(n)..=m.min(n) {
            pair += coeffs[i] * coeffs[m - i];
        }
        total += pair * *bq;
    }
    constant_from_sum(spec.alpha, total.to_f64())
}

/// Cₙ at q = 1 from the single ₃F₂ sum
///
/// ```text
/// α / (Cₙ² B(2ε, 2δ+1)) = Σᵢ (−n)ᵢ(b)ᵢ(2ε)ᵢ / ((1+2ε)ᵢ(2ε+2δ+1)ᵢ i!)
///                          · ₃F₂(−n, b, 2ε+i; 1+2ε, 2ε+2δ+1+i; 1)
/// ```
///
/// with b = 2ε+2δ+n. The state must come from a q = 1 potential.
pub fn norm_q1(state: &BoundState, alpha: f64) -> Result<f64> {
    check_exponents(state)?;
    let n = state.n as usize;
    let (b, c) = hypergeometric_parameters(state);
    let two_eps = 2.0 * state.eps;
    let y = 2.0 * state.delta + 1.0;
    let mut sum = CompensatedSum::new();
    for i in 0..=n {
        let coef = pochhammer(-(n as f64), i) * pochhammer(b, i) * pochhammer(two_eps, i)
            / (pochhammer(c, i) * pochhammer(two_eps + y, i) * factorial(i));
        let f32 = hyp3f2_unit_terminating(n, b, two_eps + i as f64, c, two_eps + y + i as f64)?;
        sum.add(coef.value() * f32);
    }
    constant_from_sum(alpha, log_beta(two_eps, y)?.exp() * sum.value())
}

/// Ground state at q = 1: C₀ = √(α / B(2ε, 2δ+1)).
pub fn norm_ground_state(state: &BoundState, alpha: f64) -> Result<f64> {
    check_exponents(state)?;
    if state.n != 0 {
        return Err(Error::Unsupported(format!(
            "ground-state formula used for n = {}",
            state.n
        )));
    }
    constant_from_sum(alpha, log_beta(2.0 * state.eps, 2.0 * state.delta + 1.0)?.exp() * 1.0)
}

/// Absolute tolerance on ∫ u² dr (per chunk a tenth of it, tightened to
/// `RELATIVE_TOL` of the running value when that is smaller).
pub const QUADRATURE_TOL: f64 = 1e-12;
/// The r integral stops once the integrand falls below this fraction of its peak.
pub const TRUNCATION_RATIO: f64 = 1e-18;
/// Relative tolerance applied when it is tighter than the absolute one
/// (small integrals, i.e. large Cₙ).
pub const RELATIVE_TOL: f64 = 1e-14;
const MAX_CHUNKS: usize = 100_000;

/// ∫₀^∞ u(r)² dr of the unnormalized u by adaptive quadrature in r.
///
/// The half line is covered in chunks of width 1/(εα), the decay length of u²,
/// until the integrand at a chunk end is below `TRUNCATION_RATIO` of the
/// largest value seen and the last chunk contributes negligibly.
pub fn unnormalized_norm_integral(state: &BoundState, spec: &PotentialSpec) -> Result<f64> {
    check_exponents(state)?;
    let f = |r: f64| radial_u(state, spec, r, false).map(|u| u * u).unwrap_or(f64::NAN);
    let width = 1.0 / (state.eps * spec.alpha);
    let mut total = CompensatedSum::new();
    let mut peak = f(0.0).abs();
    let mut a = 0.0;
    for _ in 0..MAX_CHUNKS {
        let b = a + width;
        let rough = integrate_with_estimate(f, a, b, 1e-3)?.value.abs();
        let tol = (QUADRATURE_TOL * 0.1).min(RELATIVE_TOL * (rough + total.value()));
        let piece = integrate_with_estimate(f, a, b, tol)?;
        total.add(piece.value);
        // sample the chunk coarsely to track the peak
        for j in 1..=16 {
            peak = peak.max(f(a + width * j as f64 / 16.0));
        }
        let tail = f(b);
        if !tail.is_finite() {
            return Err(Error::Convergence {
                what: "normalization quadrature",
                detail: format!("non-finite integrand at r = {b}"),
            });
        }
        if tail < TRUNCATION_RATIO * peak && piece.value.abs() < TRUNCATION_RATIO * total.value() {
            return Ok(total.value());
        }
        a = b;
    }
    Err(Error::Convergence {
        what: "normalization quadrature",
        detail: format!("integrand not negligible after {MAX_CHUNKS} chunks (r = {a})"),
    })
}

/// Cₙ = 1/√(∫ u² dr) by quadrature.
pub fn norm_quadrature(state: &BoundState, spec: &PotentialSpec) -> Result<f64> {
    let integral = unnormalized_norm_integral(state, spec)?;
    if !(integral > 0.0) {
        return Err(Error::NonPositiveRadicand { value: integral });
    }
    Ok(integral.sqrt().recip())
}

/// (1/α)∫₀^q u(z)²/z dz for 0 < q ≤ 1, integrated in t = (z/q)^{2ε} so the
/// z^{2ε−1} endpoint singularity disappears.
pub fn z_domain_norm_integral(state: &BoundState, spec: &PotentialSpec) -> Result<f64> {
    check_exponents(state)?;
    if !(spec.q > 0.0 && spec.q <= 1.0) {
        return Err(Error::Unsupported(format!("z-domain integral needs q in (0, 1], got {}", spec.q)));
    }
    let two_eps = 2.0 * state.eps;
    // u²/z dz = q^{2ε} (1−z)^{2δ} F² dt / (2ε)
    let g = |t: f64| {
        if t == 0.0 {
            return 0.0;
        }
        let z = spec.q * t.powf(1.0 / two_eps);
        let w = 1.0 - z;
        // u / z^ε = (1−z)^δ F
        match radial_u_at_z(state, z, w, false) {
            Ok(u) => {
                let reduced = u * (-state.eps * z.ln()).exp();
                reduced * reduced
            }
            Err(_) => f64::NAN,
        }
    };
    let q_pow = spec.q.powf(two_eps);
    let rough = integrate_with_estimate(g, 0.0, 1.0, 1e-3)?.value.abs();
    let integral = integrate_with_estimate(g, 0.0, 1.0, RELATIVE_TOL * rough)?.value;
    Ok(q_pow * integral / (two_eps * spec.alpha))
}

/// Attaches Cₙ from the analytic route appropriate to q.
pub fn normalize(state: &BoundState, spec: &PotentialSpec) -> Result<BoundState> {
    let c = if spec.q == 1.0 {
        if state.n == 0 {
            norm_ground_state(state, spec.alpha)?
        } else {
            norm_q1(state, spec.alpha)?
        }
    } else {
        norm_general_q(state, spec)?
    };
    Ok(state.with_norm(c))
}
