//! Complex special functions: log-gamma, Gauss `2F1`, Jacobi polynomials.
//!
//! Everything here is a pure function of its arguments.

mod gamma;
mod hypergeometric;
mod jacobi;

pub use gamma::{gamma, gamma_arg, log_gamma, recip_gamma, POLE_TOLERANCE};
pub use hypergeometric::{
    hyp2f1, hyp2f1_complement, hyp2f1_connection, hyp2f1_detailed, hyp2f1_series, Hyp2f1, Hyp2f1Route,
    C_PERTURBATION, DEGENERATE_GAP, MAX_TERMS, SERIES_RADIUS,
};
pub use jacobi::jacobi_poly;

pub use num_complex::Complex64 as Complex;
