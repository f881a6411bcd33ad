//! Numerical reference solvers for the effective radial equation.
//!
//! Nothing here uses the factorization formulas: levels come from a
//! finite-difference operator and phase shifts from outward integration, so
//! agreement with [`crate::bound`] and [`crate::scatter`] is a two-path check.

mod levels;
mod phase;
mod tridiag;

pub use levels::{
    effective_level, effective_levels, effective_potential, extrapolated_level, operator, oracle_bound_energies,
    oracle_eigenvector, self_consistency, CentrifugalTreatment, EffectiveLevels, OracleEigenvector, OracleScan,
    OracleSpectrum, RadialGrid, LEVEL_COUNT,
};
pub use phase::{oracle_phase_shift, OraclePhase, PhaseGrid};
pub use tridiag::SymTridiag;
