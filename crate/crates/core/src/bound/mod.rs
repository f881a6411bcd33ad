//! Bound states: coefficient algebra, SUSY factorization, the level
//! condition and its solver, and the Jacobi-polynomial wavefunction.

mod coefficients;
mod solve;
mod susy;
mod wavefunction;

pub use coefficients::{
    chi_coeffs, chi_from_omegas, energy_tilde, omega_coeffs, ChiCoefficients, CoefficientScheme, Model,
    OmegaCoefficients, QuantumNumbers,
};
pub use solve::{
    bound_state_at, solve_bound_energies, solve_many, BoundSpectrum, BoundState, RejectedRoot, SearchWindow,
};
pub use susy::{
    decay_constant, energy_residual, energy_residual_sigma, ground_energy_tilde, level_condition,
    partner_potentials, rho, riccati_residual, shape_invariance_remainder, shifted_factors, sigma,
    superpotential, superpotential_derivative, susy_factors, susy_factors_with_branch, Branch,
    LevelCondition, SusyFactors,
};
pub use wavefunction::BoundWavefunction;
