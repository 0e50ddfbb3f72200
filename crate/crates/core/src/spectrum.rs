//! Bound-state energies from the quantization condition
//!
//! ```text
//! ε(E) = (β₁(E) + β₂) / (2(n+δ)) − (n+δ)/2,     ε(E) = √(M² − E²)/α
//! ```
//!
//! This is the N = −1, b = 1 member of the family of exactly solvable
//! equations f″ = (2az^{N+1}/(1−bz^{N+2}) − 2(m+1)/z) f′ − wz^N/(1−bz^{N+2}) f;
//! only that member is implemented.
//!
//! β₁ is linear in E, so the right-hand side is A + B·E and squaring gives a
//! quadratic in E. Its roots are filtered against the unsquared condition.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::{delta_exponent, effective_k, PotentialSpec, QuantumNumbers};

/// Which root of the squared quantization condition a state came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Branch {
    /// Larger root.
    #[serde(rename = "positive-root")]
    Positive,
    /// Smaller root.
    #[serde(rename = "negative-root")]
    Negative,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Positive => "positive-root",
            Branch::Negative => "negative-root",
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One solved level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundState {
    pub n: u32,
    pub k: u32,
    pub energy: f64,
    pub eps: f64,
    pub delta: f64,
    pub branch: Branch,
    pub norm_constant: Option<f64>,
}

impl BoundState {
    /// The same level with its energy moved to `energy` and ε recomputed;
    /// used to build negative controls for the residual checks.
    pub fn with_energy(&self, spec: &PotentialSpec, energy: f64) -> Self {
        Self {
            energy,
            eps: spec.eps(energy),
            norm_constant: None,
            ..*self
        }
    }

    pub fn with_norm(self, c: f64) -> Self {
        Self {
            norm_constant: Some(c),
            ..self
        }
    }
}

/// Absolute bound on the unsquared residual for an accepted root.
pub const UNSQUARED_TOL: f64 = 1e-10;

/// Coefficients of ε = A + B·E at fixed (n, k).
#[derive(Debug, Clone, Copy)]
pub struct LinearCondition {
    pub a: f64,
    pub b: f64,
    pub delta: f64,
}

impl LinearCondition {
    pub fn new(spec: &PotentialSpec, k: u32, n: u32) -> Result<Self> {
        let delta = delta_exponent(spec, k)?;
        let nd = f64::from(n) + delta;
        let a2q = spec.alpha * spec.alpha * spec.q;
        let a = (2.0 * spec.mass * spec.s0 / a2q + spec.beta2()) / (2.0 * nd) - nd / 2.0;
        let b = spec.v0 / (a2q * nd);
        Ok(Self { a, b, delta })
    }

    pub fn rhs(&self, energy: f64) -> f64 {
        self.a + self.b * energy
    }
}

/// ε(E) − [(β₁(E)+β₂)/(2(n+δ)) − (n+δ)/2].
pub fn unsquared_residual(spec: &PotentialSpec, qn: &QuantumNumbers, energy: f64) -> Result<f64> {
    let cond = LinearCondition::new(spec, effective_k(qn), qn.n)?;
    Ok(spec.eps(energy) - cond.rhs(energy))
}

fn polish(spec: &PotentialSpec, cond: &LinearCondition, mut e: f64) -> f64 {
    let f = |e: f64| spec.eps(e) - cond.rhs(e);
    for _ in 0..3 {
        let fe = f(e);
        let s = ((spec.mass - e) * (spec.mass + e)).sqrt();
        if !(s > 0.0) {
            break;
        }
        let df = -e / (spec.alpha * s) - cond.b;
        let next = e - fe / df;
        if !(next.abs() < spec.mass) || f(next).abs() >= fe.abs() {
            break;
        }
        e = next;
    }
    e
}

fn quadratic_roots(spec: &PotentialSpec, cond: &LinearCondition) -> Option<Vec<f64>> {
    let al2 = spec.alpha * spec.alpha;
    let qa = 1.0 + al2 * cond.b * cond.b;
    let qb = 2.0 * al2 * cond.a * cond.b;
    let qc = al2 * cond.a * cond.a - spec.mass * spec.mass;
    let disc = qb * qb - 4.0 * qa * qc;
    let scale = qb * qb + (4.0 * qa * qc).abs();
    if disc.abs() <= 1e-12 * scale {
        return None;
    }
    if disc < 0.0 {
        return Some(Vec::new());
    }
    let sq = disc.sqrt();
    if qb == 0.0 {
        let r = sq / (2.0 * qa);
        return Some(vec![r, -r]);
    }
    let t = -0.5 * (qb + qb.signum() * sq);
    let (r1, r2) = (t / qa, qc / t);
    Some(if r1 >= r2 { vec![r1, r2] } else { vec![r2, r1] })
}

/// Roots of the unsquared condition on (−M, M) located by sign changes on a
/// cosine-spaced scan followed by bisection. Sorted in descending order.
pub fn bisect_unsquared(spec: &PotentialSpec, qn: &QuantumNumbers) -> Result<Vec<f64>> {
    let cond = LinearCondition::new(spec, effective_k(qn), qn.n)?;
    let f = |e: f64| spec.eps(e) - cond.rhs(e);
    const SCAN: usize = 4096;
    let nodes: Vec<f64> = (1..SCAN)
        .map(|i| spec.mass * (std::f64::consts::PI * i as f64 / SCAN as f64).cos())
        .collect();
    let mut roots = Vec::new();
    for w in nodes.windows(2) {
        let (mut hi, mut lo) = (w[0], w[1]);
        let (fhi, flo) = (f(hi), f(lo));
        if fhi == 0.0 {
            roots.push(hi);
            continue;
        }
        if fhi * flo > 0.0 {
            continue;
        }
        let f_hi_sign = fhi.signum();
        for _ in 0..200 {
            let mid = 0.5 * (hi + lo);
            if mid == hi || mid == lo {
                break;
            }
            if f(mid).signum() == f_hi_sign {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        roots.push(0.5 * (hi + lo));
    }
    Ok(roots)
}

/// Bound states at fixed (D, l, n): zero, one or two, tagged by branch.
pub fn solve_level(spec: &PotentialSpec, qn: &QuantumNumbers) -> Result<Vec<BoundState>> {
    spec.validate()?;
    let k = effective_k(qn);
    let cond = LinearCondition::new(spec, k, qn.n)?;
    let candidates = match quadratic_roots(spec, &cond) {
        Some(roots) => roots,
        // near-double root: the closed form is ill-conditioned
        None => bisect_unsquared(spec, qn)?,
    };

    let mut accepted: Vec<f64> = Vec::new();
    for e in candidates {
        if !(e.abs() < spec.mass) {
            continue;
        }
        let e = polish(spec, &cond, e);
        if !(cond.rhs(e) > 0.0) {
            continue;
        }
        if (spec.eps(e) - cond.rhs(e)).abs() >= UNSQUARED_TOL {
            continue;
        }
        if accepted.iter().any(|&a| (a - e).abs() < 1e-12) {
            continue;
        }
        accepted.push(e);
    }
    accepted.sort_by(|a, b| b.total_cmp(a));

    let two = accepted.len() == 2;
    Ok(accepted
        .into_iter()
        .enumerate()
        .map(|(i, energy)| {
            // a lone survivor keeps the tag of the quadratic root it came from
            let branch = if two {
                if i == 0 { Branch::Positive } else { Branch::Negative }
            } else {
                lone_branch(spec, &cond, energy)
            };
            BoundState {
                n: qn.n,
                k,
                energy,
                eps: spec.eps(energy),
                delta: cond.delta,
                branch,
                norm_constant: None,
            }
        })
        .collect())
}

fn lone_branch(spec: &PotentialSpec, cond: &LinearCondition, energy: f64) -> Branch {
    let al2 = spec.alpha * spec.alpha;
    let qa = 1.0 + al2 * cond.b * cond.b;
    let qb = 2.0 * al2 * cond.a * cond.b;
    // the vertex of the parabola separates the two roots
    if energy >= -qb / (2.0 * qa) {
        Branch::Positive
    } else {
        Branch::Negative
    }
}

/// Result of scanning n = 0, 1, … for bound levels.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub states: Vec<BoundState>,
    /// Number of radial indices that admitted at least one state.
    pub level_count: usize,
}

/// Levels n = 0..=n_max at the (D, l) of `qn_base`, stopping at the first n
/// without a state. Sorted by n, then branch.
pub fn enumerate_spectrum(spec: &PotentialSpec, qn_base: &QuantumNumbers, n_max: u32) -> Result<Spectrum> {
    let mut states = Vec::new();
    let mut level_count = 0;
    for n in 0..=n_max {
        let level = solve_level(spec, &qn_base.with_n(n))?;
        if level.is_empty() {
            break;
        }
        level_count += 1;
        states.extend(level);
    }
    states.sort_by(|a, b| a.n.cmp(&b.n).then(a.branch.cmp(&b.branch)));
    Ok(Spectrum { states, level_count })
}
