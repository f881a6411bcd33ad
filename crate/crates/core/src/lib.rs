//! Bound states and scattering for the Klein-Gordon equation with a Hulthén
//! plus q-deformed hyperbolic potential and position-dependent mass in `D`
//! dimensions.
//!
//! Natural units throughout. The closed-form results in [`bound`] and
//! [`scatter`] are checked against the finite-difference and shooting solvers
//! in [`oracle`], which share only the radial coefficients with them.

pub mod bound;
pub mod checks;
pub mod error;
pub mod oracle;
pub mod par;
pub mod potential;
pub mod quadrature;
pub mod reference;
pub mod roots;
pub mod scatter;
pub mod specfun;

pub use error::{Error, Result};
