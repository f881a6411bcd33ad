//! Continuum states: coefficient algebra, phase shift, normalization,
//! wavefunction, S-matrix poles and the Hulthén / Woods-Saxon reductions.

mod coefficients;
mod phase;
mod poles;
mod special;
mod threshold;

pub use coefficients::{eta_params, rate, wave_number, xi_coeffs, EtaParams, XiCoefficients};
pub use phase::{
    distance_mod_pi, phase_shift, reduce_angle, scatter_normalization, scattering_asymptote, scattering_state,
    scattering_state_with, scattering_wavefunction, PhaseTerms, PhaseVariant, ScatteringState,
};
pub use poles::{pole_condition, smatrix_pole_energies, PoleSpectrum};
pub use special::{hulthen_case, woods_saxon_case, CaseComparison, CaseResult, HulthenParams, WoodsSaxonParams};
pub use threshold::{continuum_edges, threshold_energy};
