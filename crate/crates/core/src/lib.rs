//! Bound states of the D-dimensional Klein–Gordon equation with equal or
//! unequal vector and scalar generalized Hulthén potentials
//!
//! ```text
//! V(r) = −V₀ e^{−αr}/(1 − q e^{−αr}),   S(r) = −S₀ e^{−αr}/(1 − q e^{−αr})
//! ```
//!
//! under the centrifugal approximation 1/r² ≈ α² e^{−αr}/(1 − q e^{−αr})².
//!
//! * [`spectrum`] solves the quantization condition for energies,
//! * [`wavefunc`] evaluates the radial functions,
//! * [`normalize`] computes normalization constants,
//! * [`oracle`] holds the independent numerical checks,
//! * [`cli`] is the batch front end behind the `kgh` binary.
//!
//! ```
//! use kgh::{normalize::normalize, spectrum::enumerate_spectrum, wavefunc::radial_u};
//! use kgh::{PotentialSpec, QuantumNumbers};
//!
//! # fn main() -> kgh::Result<()> {
//! let spec = PotentialSpec::new(1.0, 0.2, 1.0, 0.0, 0.1)?;
//! let states = enumerate_spectrum(&spec, &QuantumNumbers::new(3, 0, 0)?, 10)?.states;
//! let ground = normalize(&states[0], &spec)?;
//! assert!((ground.energy - 0.949_352_325_125_297_8).abs() < 1e-15);
//! assert!(radial_u(&ground, &spec, 5.0, true)? > 0.0);
//! # Ok(())
//! # }
//! ```

// NaN-rejecting `!(x > 0.0)` guards are intentional; reference constants keep
// the digits they were printed with.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod cli;
pub mod error;
pub mod model;
pub mod normalize;
pub mod oracle;
pub mod specfun;
pub mod spectrum;
pub mod wavefunc;

pub use error::{Error, Result};
pub use model::{PotentialSpec, QuantumNumbers};
pub use spectrum::{BoundState, Branch};
