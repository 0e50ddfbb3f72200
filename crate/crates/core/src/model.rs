//! Physical inputs and the map onto the dimensionless parameters ε, β₁, β₂, δ.
//!
//! Units are ℏ = c = 1: `mass`, `v0`, `s0` and energies share one unit,
//! `alpha` is an inverse length.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Mass, screening, deformation and the vector/scalar depths of
/// V(r) = −V₀e^{−αr}/(1−qe^{−αr}), S(r) = −S₀e^{−αr}/(1−qe^{−αr}).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    pub mass: f64,
    pub alpha: f64,
    pub q: f64,
    pub v0: f64,
    pub s0: f64,
}

impl PotentialSpec {
    /// Validated constructor.
    pub fn new(mass: f64, alpha: f64, q: f64, v0: f64, s0: f64) -> Result<Self> {
        let spec = Self {
            mass,
            alpha,
            q,
            v0,
            s0,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.mass, self.alpha, self.q, self.v0, self.s0];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidSpec("all parameters must be finite".into()));
        }
        if !(self.mass > 0.0) {
            return Err(Error::InvalidSpec(format!("mass {} must be positive", self.mass)));
        }
        if !(self.alpha > 0.0) {
            return Err(Error::InvalidSpec(format!(
                "screening alpha {} must be positive",
                self.alpha
            )));
        }
        if self.q == 0.0 {
            return Err(Error::InvalidSpec("deformation q must be nonzero".into()));
        }
        if self.q > 1.0 {
            return Err(Error::InvalidSpec(format!(
                "deformation q = {} > 1: 1 - q*exp(-alpha*r) vanishes at r = ln(q)/alpha = {}, \
                 the potential has a pole there",
                self.q,
                self.q.ln() / self.alpha
            )));
        }
        Ok(())
    }

    /// β₂ = (S₀² − V₀²)/(α²q²); independent of the energy.
    pub fn beta2(&self) -> f64 {
        (self.s0 * self.s0 - self.v0 * self.v0) / (self.alpha * self.alpha * self.q * self.q)
    }

    /// β₁ = 2(M·S₀ + E·V₀)/(α²q).
    pub fn beta1(&self, energy: f64) -> f64 {
        2.0 * (self.mass * self.s0 + energy * self.v0) / (self.alpha * self.alpha * self.q)
    }

    /// ε = √(M² − E²)/α.
    pub fn eps(&self, energy: f64) -> f64 {
        ((self.mass - energy) * (self.mass + energy)).sqrt() / self.alpha
    }

    /// The effective interaction W(r; E) such that −u″ + W u = (E² − M²) u,
    /// with the centrifugal term replaced by α²e^{−αr}/(1−qe^{−αr})².
    pub fn effective_potential(&self, k: u32, energy: f64, r: f64) -> f64 {
        let e = (-self.alpha * r).exp();
        // 1 − q e^{−αr} without cancellation near r = 0
        let one_minus = (1.0 - self.q) - self.q * (-self.alpha * r).exp_m1();
        let kk = centrifugal_factor(k);
        -2.0 * (self.mass * self.s0 + energy * self.v0) * e / one_minus
            + (self.alpha * self.alpha * kk * e + (self.s0 * self.s0 - self.v0 * self.v0) * e * e)
                / (one_minus * one_minus)
    }
}

/// (k−1)(k−3)/4.
pub fn centrifugal_factor(k: u32) -> f64 {
    let k = f64::from(k);
    (k - 1.0) * (k - 3.0) / 4.0
}

/// Dimension D ≥ 1, angular momentum l ≥ 0 and radial index n ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub dim: u32,
    pub ell: u32,
    pub n: u32,
}

impl QuantumNumbers {
    pub fn new(dim: u32, ell: u32, n: u32) -> Result<Self> {
        if dim < 1 {
            return Err(Error::InvalidQuantumNumbers(format!("dimension {dim} must be >= 1")));
        }
        Ok(Self { dim, ell, n })
    }

    pub fn with_n(self, n: u32) -> Self {
        Self { n, ..self }
    }

    pub fn k(&self) -> u32 {
        effective_k(self)
    }
}

/// k = D + 2l; the radial problem depends on (D, l) only through k.
pub fn effective_k(qn: &QuantumNumbers) -> u32 {
    qn.dim + 2 * qn.ell
}

/// ε, β₁, β₂, δ at a given energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessSet {
    pub eps: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub delta: f64,
    pub k: u32,
}

pub fn dimensionless(spec: &PotentialSpec, qn: &QuantumNumbers, energy: f64) -> Result<DimensionlessSet> {
    spec.validate()?;
    if !(energy.abs() < spec.mass) {
        return Err(Error::NotBound {
            energy,
            mass: spec.mass,
        });
    }
    let k = effective_k(qn);
    Ok(DimensionlessSet {
        eps: spec.eps(energy),
        beta1: spec.beta1(energy),
        beta2: spec.beta2(),
        delta: delta_exponent(spec, k)?,
        k,
    })
}

/// Discriminant q²(1+4β₂) + q(k−1)(k−3) of the δ quadratic (times q²).
pub fn delta_discriminant(spec: &PotentialSpec, k: u32) -> f64 {
    let q = spec.q;
    q * q * (1.0 + 4.0 * spec.beta2()) + 4.0 * q * centrifugal_factor(k)
}

/// Root of δ² − δ − β₂ − (k−1)(k−3)/(4q) = 0: the larger root for q > 0,
/// δ₋ = 1/2 − √disc/(2q) for q < 0.
pub fn delta_exponent(spec: &PotentialSpec, k: u32) -> Result<f64> {
    let disc = delta_discriminant(spec, k);
    if !(disc >= 0.0) {
        return Err(Error::NoRealDelta { discriminant: disc });
    }
    Ok(0.5 + disc.sqrt() / (2.0 * spec.q.abs()))
}

/// δ² − δ − β₂ − (k−1)(k−3)/(4q).
pub fn delta_residual(spec: &PotentialSpec, k: u32, delta: f64) -> f64 {
    delta * delta - delta - spec.beta2() - centrifugal_factor(k) / spec.q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_with(q: f64, beta2: f64) -> PotentialSpec {
        // S₀ chosen so that (S₀² − 0)/(α²q²) equals the requested β₂ ≥ 0
        let alpha = 0.2;
        PotentialSpec::new(1.0, alpha, q, 0.0, (beta2).sqrt() * alpha * q.abs()).unwrap()
    }

    #[test]
    fn k_examples() {
        assert_eq!(effective_k(&QuantumNumbers::new(3, 0, 0).unwrap()), 3);
        assert_eq!(effective_k(&QuantumNumbers::new(3, 1, 0).unwrap()), 5);
        assert_eq!(effective_k(&QuantumNumbers::new(7, 0, 0).unwrap()), 7);
        assert!(QuantumNumbers::new(0, 1, 0).is_err());
    }

    #[test]
    fn dimensionless_examples() {
        let spec = PotentialSpec::new(1.0, 0.2, 1.0, 0.2, 0.0).unwrap();
        let qn = QuantumNumbers::new(3, 0, 0).unwrap();
        assert!((spec.eps(0.8) - 3.0).abs() < 1e-14);
        assert!((spec.beta1(0.8) - 8.0).abs() < 1e-13);
        assert!((spec.beta2() + 1.0).abs() < 1e-14);
        // 1 + 4β₂ = −3: no real δ for k = 3
        assert!(matches!(dimensionless(&spec, &qn, 0.8), Err(Error::NoRealDelta { .. })));
        let d = dimensionless(&PotentialSpec::new(1.0, 0.2, 1.0, 0.0, 0.1).unwrap(), &qn, 0.8).unwrap();
        assert!((d.delta - (1.0 + 2f64.sqrt()) / 2.0).abs() < 1e-15);
        assert_eq!(d.k, 3);
    }

    #[test]
    fn unbound_energy_rejected() {
        let spec = PotentialSpec::new(1.0, 0.2, 1.0, 0.1, 0.1).unwrap();
        let qn = QuantumNumbers::new(3, 0, 0).unwrap();
        assert!(matches!(dimensionless(&spec, &qn, 1.0), Err(Error::NotBound { .. })));
        assert!(matches!(dimensionless(&spec, &qn, -1.3), Err(Error::NotBound { .. })));
    }

    #[test]
    fn delta_examples() {
        assert!((delta_exponent(&spec_with(1.0, 0.0), 3).unwrap() - 1.0).abs() < 1e-15);
        let d = delta_exponent(&spec_with(1.0, 0.25), 3).unwrap();
        assert!((d - (1.0 + 2f64.sqrt()) / 2.0).abs() < 1e-14);
        for k in 2..=15 {
            let d = delta_exponent(&spec_with(1.0, 0.0), k).unwrap();
            assert!((d - (f64::from(k) - 1.0) / 2.0).abs() < 1e-13, "k={k}");
        }
    }

    #[test]
    fn delta_solves_its_quadratic() {
        for &q in &[1.0, 0.8, 0.3, -0.4, -2.0] {
            for &b2 in &[0.0, 0.25, 3.0] {
                for k in 1..12 {
                    let spec = spec_with(q, b2);
                    if let Ok(d) = delta_exponent(&spec, k) {
                        assert!(delta_residual(&spec, k, d).abs() < 1e-12 * (1.0 + d * d));
                        if q > 0.0 {
                            assert!(d >= 0.5);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn negative_discriminant_reported() {
        // q < 0 with large k drives q(k−1)(k−3) far below −q²(1+4β₂)
        let spec = PotentialSpec::new(1.0, 0.2, -0.5, 0.0, 0.0).unwrap();
        assert!(matches!(delta_exponent(&spec, 9), Err(Error::NoRealDelta { .. })));
    }

    #[test]
    fn spec_validation() {
        assert!(PotentialSpec::new(1.0, 0.2, 1.5, 0.1, 0.1)
            .unwrap_err()
            .to_string()
            .contains("pole"));
        assert!(PotentialSpec::new(1.0, 0.2, 0.0, 0.1, 0.1).is_err());
        assert!(PotentialSpec::new(-1.0, 0.2, 0.5, 0.1, 0.1).is_err());
        assert!(PotentialSpec::new(1.0, 0.0, 0.5, 0.1, 0.1).is_err());
        assert!(PotentialSpec::new(1.0, 0.2, -3.0, 0.1, 0.1).is_ok());
    }

    #[test]
    fn k_degenerate_pairs_share_dimensionless_parameters() {
        let spec = PotentialSpec::new(1.0, 0.2, 0.7, 0.05, 0.12).unwrap();
        for l in 1..4 {
            for dim in 1..6 {
                let a = dimensionless(&spec, &QuantumNumbers::new(dim, l, 0).unwrap(), 0.9).unwrap();
                let b =
                    dimensionless(&spec, &QuantumNumbers::new(dim + 2, l - 1, 0).unwrap(), 0.9).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}
