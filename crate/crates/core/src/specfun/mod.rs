//! Scalar special functions: log-gamma, Beta, incomplete Beta, Pochhammer
//! symbols, terminating hypergeometric series and Jacobi polynomials.
//!
//! Everything here is a pure function of its arguments.

mod dd;
mod gamma;
mod hypergeometric;
mod incbeta;
mod jacobi;
mod pochhammer;
mod sum;

pub use dd::Dd;
pub use gamma::{beta, log_beta, log_gamma};
pub use hypergeometric::{
    hyp2f1_terminating, hyp2f1_terminating_derivative, hyp3f2_unit_terminating, SERIES_MAX_TERMS,
    SERIES_REL_TOL,
};
pub use incbeta::{
    inc_beta, inc_beta_complement, inc_beta_ladder, inc_beta_lower, inc_beta_regularized,
    inc_beta_series_signed, inc_beta_shift, inc_beta_shift_down, route_switch,
};
pub use jacobi::{jacobi_p, jacobi_p_hypergeometric};
pub use pochhammer::{factorial, pochhammer, SignedLogValue};
pub use sum::CompensatedSum;
