//! The invariant suite behind `kgh validate`.

use rayon::prelude::*;
use serde::Serialize;

use super::config::RunConfig;
use crate::error::Result;
use crate::model::{delta_residual, PotentialSpec, QuantumNumbers};
use crate::normalize::{
    norm_general_q, norm_ground_state, norm_q1, norm_quadrature, normalize, unnormalized_norm_integral,
    z_domain_norm_integral,
};
use crate::oracle::{fd_eigensolve, inc_beta_quadrature, ode_residual, GridSpec, Spacing};
use crate::spectrum::{enumerate_spectrum, unsquared_residual, BoundState};
use crate::specfun::{
    factorial, inc_beta, inc_beta_ladder, jacobi_p, jacobi_p_hypergeometric, pochhammer,
};
use crate::wavefunc::{radial_u, radial_u_jacobi};

/// Points in the log grid used for the finite-difference comparison.
pub const FD_POINTS: usize = 40_000;
/// Sample count in z for the ODE residual.
pub const RESIDUAL_POINTS: usize = 400;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// `None` when the check could not be evaluated.
    pub measured: Option<f64>,
    pub threshold: f64,
    pub pass: bool,
}

impl Check {
    fn new(name: &str, measured: Result<f64>, threshold: f64) -> Self {
        let measured = measured.ok().filter(|m| !m.is_nan());
        Self {
            name: name.to_string(),
            pass: measured.is_some_and(|m| m <= threshold),
            measured,
            threshold,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl ValidationReport {
    pub fn from_checks(checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(|c| c.pass);
        Self { checks, overall }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Largest value in a fallible iterator; NaN propagates as a failure.
fn max_of(values: impl IntoIterator<Item = Result<f64>>) -> Result<f64> {
    let mut m = 0.0f64;
    for v in values {
        let v = v?;
        if v.is_nan() {
            return Ok(f64::NAN);
        }
        m = m.max(v);
    }
    Ok(m)
}

fn jacobi_identity() -> Result<f64> {
    let mut cases = Vec::new();
    for n in 0..=10 {
        for a in [-0.5, 0.3, 2.0, 7.5] {
            for b in [-0.7, 1.2, 4.0] {
                for x in [-0.95, -0.3, 0.4, 0.9] {
                    cases.push((n, a, b, x));
                }
            }
        }
    }
    max_of(cases.into_iter().map(|(n, a, b, x)| {
        let r = jacobi_p(n, a, b, x)?;
        let h = jacobi_p_hypergeometric(n, a, b, x)?;
        Ok(if r.abs() < 1e-8 { (r - h).abs() } else { rel(h, r) })
    }))
}

fn inc_beta_routes() -> (Result<f64>, Result<f64>) {
    let mut cases = Vec::new();
    for q in [0.2, 0.5, 0.85] {
        for x in [0.3, 1.7, 4.2] {
            for y in [0.6, 2.5, 7.0] {
                cases.push((q, x, y));
            }
        }
    }
    let quad = max_of(cases.iter().map(|&(q, x, y)| Ok(rel(inc_beta(q, x, y)?, inc_beta_quadrature(q, x, y, 1e-13)?))));
    let ladder = max_of(cases.iter().map(|&(q, x, y)| {
        let lad = inc_beta_ladder(q, x, y, 5)?;
        max_of(lad.iter().enumerate().map(|(m, v)| Ok(rel(*v, inc_beta(q, x + m as f64, y)?))))
    }));
    (quad, ladder)
}

/// Ratio u_₂F₁ / u_Jacobi should be n!/(1+2ε)ₙ at every radius.
fn jacobi_proportionality(state: &BoundState, spec: &PotentialSpec) -> Result<f64> {
    let n = state.n as usize;
    let factor = (factorial(n) / pochhammer(1.0 + 2.0 * state.eps, n)).value();
    let r_peak = 1.0 / spec.alpha;
    max_of((1..=20).map(|i| {
        let r = r_peak * i as f64 / 4.0;
        let u = radial_u(state, spec, r, false)?;
        let j = radial_u_jacobi(state, spec, r)?;
        Ok(if u.abs() < 1e-8 { (u - factor * j).abs() } else { rel(factor * j, u) })
    }))
}

struct Level {
    qn: QuantumNumbers,
    state: BoundState,
}

fn collect_levels(cfg: &RunConfig) -> Result<Vec<Level>> {
    let mut out = Vec::new();
    for l in 0..=cfg.l_max {
        let base = QuantumNumbers::new(cfg.dim, l, 0)?;
        for state in enumerate_spectrum(&cfg.spec, &base, cfg.n_max)?.states {
            out.push(Level {
                qn: base.with_n(state.n),
                state,
            });
        }
    }
    Ok(out)
}

/// Energies at (D, l) against (D+2l, 0); both sides failing with the same
/// regime error also counts as agreement.
fn k_degeneracy(cfg: &RunConfig) -> Result<f64> {
    let spec = &cfg.spec;
    let mut worst = 0.0f64;
    for l in 1..=cfg.l_max.max(1) {
        let a = enumerate_spectrum(spec, &QuantumNumbers::new(cfg.dim, l, 0)?, cfg.n_max);
        let b = enumerate_spectrum(spec, &QuantumNumbers::new(cfg.dim + 2 * l, 0, 0)?, cfg.n_max);
        match (a, b) {
            (Ok(a), Ok(b)) => {
                if a.states.len() != b.states.len() {
                    return Ok(f64::INFINITY);
                }
                for (x, y) in a.states.iter().zip(&b.states) {
                    worst = worst.max((x.energy - y.energy).abs());
                }
            }
            (Err(x), Err(y)) if x == y => {}
            _ => return Ok(f64::INFINITY),
        }
    }
    Ok(worst)
}

/// Runs every check. `corrupt_energy` shifts each solved energy toward zero
/// by the given amount before the state-level checks (negative control).
pub fn run_validation(cfg: &RunConfig, corrupt_energy: f64) -> Result<ValidationReport> {
    let spec = cfg.spec;
    let mut levels = collect_levels(cfg)?;
    if corrupt_energy != 0.0 {
        for lv in &mut levels {
            let e = lv.state.energy;
            lv.state = lv.state.with_energy(&spec, e - corrupt_energy * e.signum());
        }
    }

    let mut checks = vec![Check::new("jacobi_recurrence_vs_hypergeometric", jacobi_identity(), 1e-12)];
    let (quad, ladder) = inc_beta_routes();
    checks.push(Check::new("inc_beta_series_vs_quadrature", quad, 1e-10));
    checks.push(Check::new("inc_beta_ladder_vs_direct", ladder, 1e-10));
    checks.push(Check::new(
        "delta_identity",
        max_of(levels.iter().map(|lv| {
            let d = lv.state.delta;
            Ok(delta_residual(&spec, lv.state.k, d).abs() / d.mul_add(d, 1.0))
        })),
        1e-13,
    ));
    checks.push(Check::new(
        "quantization_residual",
        max_of(levels.iter().map(|lv| unsquared_residual(&spec, &lv.qn, lv.state.energy).map(f64::abs))),
        1e-10,
    ));

    let per_state = |f: &(dyn Fn(&Level) -> Result<f64> + Sync)| -> Result<f64> {
        let values: Vec<Result<f64>> = levels.par_iter().map(f).collect();
        max_of(values)
    };
    checks.push(Check::new(
        "ode_residual",
        per_state(&|lv| ode_residual(&lv.state, &spec, RESIDUAL_POINTS)),
        1e-8,
    ));
    checks.push(Check::new(
        "wavefunction_jacobi_proportionality",
        per_state(&|lv| jacobi_proportionality(&lv.state, &spec)),
        1e-10,
    ));

    if spec.q > 0.0 {
        if spec.q == 1.0 {
            checks.push(Check::new(
                "norm_route_equivalence",
                per_state(&|lv| Ok(rel(norm_general_q(&lv.state, &spec)?, norm_q1(&lv.state, spec.alpha)?))),
                1e-10,
            ));
            checks.push(Check::new(
                "norm_ground_state_formula",
                per_state(&|lv| {
                    if lv.state.n != 0 {
                        return Ok(0.0);
                    }
                    Ok(rel(norm_ground_state(&lv.state, spec.alpha)?, norm_q1(&lv.state, spec.alpha)?))
                }),
                1e-13,
            ));
        }
        checks.push(Check::new(
            "norm_quadrature_agreement",
            per_state(&|lv| {
                let c = normalize(&lv.state, &spec)?.norm_constant.unwrap_or(f64::NAN);
                Ok(rel(norm_quadrature(&lv.state, &spec)?, c))
            }),
            1e-8,
        ));
        checks.push(Check::new(
            "unit_norm",
            per_state(&|lv| {
                let c = normalize(&lv.state, &spec)?.norm_constant.unwrap_or(f64::NAN);
                Ok((c * c * unnormalized_norm_integral(&lv.state, &spec)? - 1.0).abs())
            }),
            1e-8,
        ));
        checks.push(Check::new(
            "change_of_variable",
            per_state(&|lv| {
                Ok(rel(
                    z_domain_norm_integral(&lv.state, &spec)?,
                    unnormalized_norm_integral(&lv.state, &spec)?,
                ))
            }),
            1e-10,
        ));
    }
    // the Dirichlet condition at r = 0 matches the analytic state only at q = 1
    if spec.q == 1.0 {
        let grid = GridSpec::new(cfg.grid.r_max, FD_POINTS, Spacing::Log)?;
        checks.push(Check::new(
            "fd_energy_agreement",
            per_state(&|lv| {
                let fd = fd_eigensolve(&spec, &lv.qn, &grid, lv.state.n as usize, lv.state.branch)?;
                Ok(rel(fd.energy, lv.state.energy))
            }),
            1e-6,
        ));
    }
    checks.push(Check::new("k_degeneracy", k_degeneracy(cfg), 1e-12));
    Ok(ValidationReport::from_checks(checks))
}
