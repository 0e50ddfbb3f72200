//! Second-order finite-difference eigensolver for the approximated radial
//! equation −u″ + W(r; E) u = (E² − M²) u with u(0) = u(r_max) = 0.
//!
//! Uniform grids discretize u directly. Because u ~ r^δ at the origin, the
//! uniform scheme converges only like h^{min(2, 2δ−1)} when δ is not an
//! integer. Log grids discretize v(s) = r^{−1/2} u(e^s) instead:
//!
//! ```text
//! −v″(s) + (1/4 + r² W) v = λ r² v
//! ```
//!
//! which is smooth in s and recovers clean second-order convergence. The
//! inner boundary sits at r_max · `LOG_GRID_SPAN`.

use serde::{Deserialize, Serialize};

use super::tridiag::TridiagPencil;
use crate::error::{domain, Error, Result};
use crate::model::{effective_k, PotentialSpec, QuantumNumbers};
use crate::spectrum::{solve_level, Branch};

/// Ratio of the innermost to the outermost radius on log grids. The wall at
/// r_min shifts λ by about u′(0)²·r_min when δ = 1, so it must sit far inside
/// any length scale of the problem.
pub const LOG_GRID_SPAN: f64 = 1e-16;
/// Largest grid `fd_eigensolve_refined` will build.
pub const MAX_POINTS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Uniform,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub r_max: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(r_max: f64, points: usize, spacing: Spacing) -> Result<Self> {
        let g = Self {
            r_max,
            points,
            spacing,
        };
        g.validate()?;
        Ok(g)
    }

    /// r_max = 60/α.
    pub fn default_for(spec: &PotentialSpec, points: usize, spacing: Spacing) -> Self {
        Self {
            r_max: 60.0 / spec.alpha,
            points,
            spacing,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r_max > 0.0) || !self.r_max.is_finite() {
            return Err(domain("GridSpec", format!("r_max {} must be positive", self.r_max)));
        }
        if self.points < 100 {
            return Err(domain("GridSpec", format!("{} points, at least 100 required", self.points)));
        }
        Ok(())
    }

    /// All grid nodes including both boundary nodes.
    pub fn nodes(&self) -> Vec<f64> {
        let n = self.points;
        match self.spacing {
            Spacing::Uniform => {
                let h = self.r_max / (n - 1) as f64;
                (0..n).map(|i| i as f64 * h).collect()
            }
            Spacing::Log => {
                let (lo, hi) = ((self.r_max * LOG_GRID_SPAN).ln(), self.r_max.ln());
                let step = (hi - lo) / (n - 1) as f64;
                (0..n).map(|i| (lo + step * i as f64).exp()).collect()
            }
        }
    }

    /// Step in r (uniform) or in ln r (log).
    pub fn step(&self) -> f64 {
        match self.spacing {
            Spacing::Uniform => self.r_max / (self.points - 1) as f64,
            Spacing::Log => -LOG_GRID_SPAN.ln() / (self.points - 1) as f64,
        }
    }

    pub fn refined(&self) -> Self {
        Self {
            points: 2 * self.points - 1,
            ..*self
        }
    }
}

/// The discrete pencil together with the interior radii it lives on.
#[derive(Debug, Clone)]
pub struct Discretization {
    pub pencil: TridiagPencil,
    pub radii: Vec<f64>,
    pub spacing: Spacing,
}

impl Discretization {
    /// Converts a pencil eigenvector into samples of u on `radii`.
    pub fn to_u(&self, vector: &[f64]) -> Vec<f64> {
        match self.spacing {
            Spacing::Uniform => vector.to_vec(),
            Spacing::Log => vector.iter().zip(&self.radii).map(|(v, r)| v * r.sqrt()).collect(),
        }
    }
}

/// Builds the pencil for W(r; E) at the given energy.
pub fn discretize(spec: &PotentialSpec, k: u32, energy: f64, grid: &GridSpec) -> Result<Discretization> {
    grid.validate()?;
    let nodes = grid.nodes();
    let radii: Vec<f64> = nodes[1..nodes.len() - 1].to_vec();
    let m = radii.len();
    let h = grid.step();
    let inv_h2 = 1.0 / (h * h);
    let pencil = match grid.spacing {
        Spacing::Uniform => TridiagPencil {
            diag: radii
                .iter()
                .map(|&r| 2.0 * inv_h2 + spec.effective_potential(k, energy, r))
                .collect(),
            off: vec![-inv_h2; m - 1],
            weight: vec![1.0; m],
        },
        Spacing::Log => TridiagPencil {
            diag: radii
                .iter()
                .map(|&r| 2.0 * inv_h2 + 0.25 + r * r * spec.effective_potential(k, energy, r))
                .collect(),
            off: vec![-inv_h2; m - 1],
            weight: radii.iter().map(|r| r * r).collect(),
        },
    };
    Ok(Discretization {
        pencil,
        radii,
        spacing: grid.spacing,
    })
}

/// Outcome of a finite-difference solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdSolution {
    pub energy: f64,
    /// λ = E² − M².
    pub lambda: f64,
    /// Fixed-point iterations (0 when the operator is energy independent).
    pub iterations: usize,
}

const FIXED_POINT_TOL: f64 = 1e-12;
const FIXED_POINT_MAX_ITER: usize = 200;
const DAMPING: f64 = 0.5;

fn branch_sign(branch: Branch) -> f64 {
    match branch {
        Branch::Positive => 1.0,
        Branch::Negative => -1.0,
    }
}

struct EnergyMap<'a> {
    spec: &'a PotentialSpec,
    k: u32,
    grid: &'a GridSpec,
    target_n: usize,
    sign: f64,
    last_lambda: Option<f64>,
}

impl EnergyMap<'_> {
    // E ↦ ±√(M² + λₙ(E))
    fn apply(&mut self, energy: f64) -> Result<(f64, f64)> {
        let d = discretize(self.spec, self.k, energy, self.grid)?;
        let lambda = d.pencil.eigenvalue_below(self.target_n, 0.0, self.last_lambda)?;
        self.last_lambda = Some(lambda);
        let m2 = self.spec.mass * self.spec.mass;
        if !(m2 + lambda > 0.0) {
            return Err(Error::Unsupported(format!(
                "discrete eigenvalue {lambda} below -M^2: no real energy"
            )));
        }
        Ok((self.sign * (m2 + lambda).sqrt(), lambda))
    }
}

/// Energy of the `target_n`-th discrete level on the requested branch.
///
/// With V₀ = 0 the operator does not depend on E and one eigenvalue solve
/// suffices. Otherwise E is found by the damped fixed-point iteration
/// E ← (1−θ)E + θ·G(E), θ = 1/2, started from the analytic level when one
/// exists on that branch; oscillation switches to bisection on G(E) − E.
pub fn fd_eigensolve(
    spec: &PotentialSpec,
    qn: &QuantumNumbers,
    grid: &GridSpec,
    target_n: usize,
    branch: Branch,
) -> Result<FdSolution> {
    spec.validate()?;
    if !(spec.q > 0.0) {
        return Err(Error::Unsupported(format!(
            "finite-difference oracle requires q in (0, 1], got {}",
            spec.q
        )));
    }
    let k = effective_k(qn);
    let mut map = EnergyMap {
        spec,
        k,
        grid,
        target_n,
        sign: branch_sign(branch),
        last_lambda: None,
    };
    if spec.v0 == 0.0 {
        let (energy, lambda) = map.apply(0.0)?;
        return Ok(FdSolution {
            energy,
            lambda,
            iterations: 0,
        });
    }

    let analytic = solve_level(spec, &qn.with_n(target_n as u32))
        .ok()
        .and_then(|states| states.into_iter().find(|s| s.branch == branch))
        .map(|s| s.energy);
    let mut energy = match analytic {
        Some(e) => e,
        None => map.apply(0.0)?.0,
    };

    let mut last_step = f64::INFINITY;
    let mut growth = 0;
    for it in 1..=FIXED_POINT_MAX_ITER {
        let (mapped, lambda) = map.apply(energy)?;
        let next = (1.0 - DAMPING) * energy + DAMPING * mapped;
        let step = (next - energy).abs();
        if step < FIXED_POINT_TOL {
            let (_, lambda) = map.apply(next).unwrap_or((next, lambda));
            return Ok(FdSolution {
                energy: next,
                lambda,
                iterations: it,
            });
        }
        growth = if step > last_step { growth + 1 } else { 0 };
        if growth >= 3 {
            return bisect_fixed_point(&mut map, next, it);
        }
        last_step = step;
        energy = next;
    }
    Err(Error::Convergence {
        what: "finite-difference fixed point",
        detail: format!("no convergence in {FIXED_POINT_MAX_ITER} iterations, last E = {energy}"),
    })
}

fn bisect_fixed_point(map: &mut EnergyMap<'_>, start: f64, iterations: usize) -> Result<FdSolution> {
    let mass = map.spec.mass;
    let mut g = |e: f64| -> Result<f64> { Ok(map.apply(e)?.0 - e) };
    let g0 = g(start)?;
    let mut width = 1e-3 * mass;
    let mut bracket = None;
    while width < 2.0 * mass {
        for cand in [start - width, start + width] {
            if cand.abs() < mass {
                if let Ok(gc) = g(cand) {
                    if gc.signum() != g0.signum() {
                        bracket = Some(if cand < start { (cand, start) } else { (start, cand) });
                    }
                }
            }
        }
        if bracket.is_some() {
            break;
        }
        width *= 2.0;
    }
    let (mut lo, mut hi) = bracket.ok_or_else(|| Error::Convergence {
        what: "finite-difference fixed point",
        detail: "oscillation detected and no bisection bracket found".into(),
    })?;
    let glo = g(lo)?;
    while hi - lo > FIXED_POINT_TOL {
        let mid = 0.5 * (lo + hi);
        if g(mid)?.signum() == glo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let energy = 0.5 * (lo + hi);
    let (_, lambda) = map.apply(energy)?;
    Ok(FdSolution {
        energy,
        lambda,
        iterations,
    })
}

/// Repeats `fd_eigensolve`, doubling the number of intervals until two
/// successive energies differ by less than 1e−8 (relative) or the grid would
/// exceed `MAX_POINTS`. Returns the last solution and the grid it used.
pub fn fd_eigensolve_refined(
    spec: &PotentialSpec,
    qn: &QuantumNumbers,
    start: &GridSpec,
    target_n: usize,
    branch: Branch,
) -> Result<(FdSolution, GridSpec)> {
    let mut grid = *start;
    let mut prev = fd_eigensolve(spec, qn, &grid, target_n, branch)?;
    loop {
        let next_grid = grid.refined();
        if next_grid.points > MAX_POINTS {
            return Ok((prev, grid));
        }
        let next = fd_eigensolve(spec, qn, &next_grid, target_n, branch)?;
        let converged = (next.energy - prev.energy).abs() < 1e-8 * next.energy.abs().max(1e-300);
        grid = next_grid;
        prev = next;
        if converged {
            return Ok((prev, grid));
        }
    }
}

/// Discrete eigenfunction of the `target_n`-th level at a fixed energy,
/// as (radii, u) normalized to Σ wᵢ vᵢ² = 1.
pub fn fd_eigenvector(
    spec: &PotentialSpec,
    qn: &QuantumNumbers,
    grid: &GridSpec,
    target_n: usize,
    energy: f64,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let d = discretize(spec, effective_k(qn), energy, grid)?;
    let lambda = d.pencil.eigenvalue_below(target_n, 0.0, None)?;
    let v = d.pencil.eigenvector(lambda);
    Ok((d.radii.clone(), d.to_u(&v)))
}

/// Discrete inner product Σ wᵢ aᵢ bᵢ for pencil vectors.
pub fn weighted_dot(d: &Discretization, a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .zip(&d.pencil.weight)
        .map(|((x, y), w)| x * y * w)
        .sum()
}
