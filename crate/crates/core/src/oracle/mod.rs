//! Independent numerical checks: finite differences, adaptive quadrature
//! and the ODE residual of analytic states.

mod fd;
mod quadrature;
mod residual;
mod tridiag;

pub use fd::{
    discretize, fd_eigensolve, fd_eigensolve_refined, fd_eigenvector, weighted_dot, Discretization,
    FdSolution, GridSpec, Spacing, LOG_GRID_SPAN, MAX_POINTS,
};
pub use quadrature::{inc_beta_quadrature, integrate, integrate_with_estimate, Quadrature, MAX_INTERVALS};
pub use residual::{ode_residual, operator_at, u_and_derivatives};
pub use tridiag::TridiagPencil;
