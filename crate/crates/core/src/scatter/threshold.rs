use crate::bound::{omega_coeffs, Model, QuantumNumbers};
use crate::error::{Error, Result};
use crate::potential::{MassParams, PotentialParams};

/// Continuum edges `(E+, E-) = V1 +- |m0 + m1 + S1|`.
///
/// Scattering needs `E > E+` or `E < E-`; bound levels live in between.
pub fn threshold_energy(p: &PotentialParams, m: &MassParams) -> (f64, f64) {
    let gap = (m.m0 + m.m1 + p.s1).abs();
    (p.v1 + gap, p.v1 - gap)
}

/// Gap `(lo, hi)` where `E^2 - m0^2 < w3(E)`, for either coefficient scheme.
///
/// Equals `threshold_energy` (reordered) for the reduced coefficients.
pub fn continuum_edges(model: &Model) -> Result<(f64, f64)> {
    // w3 is affine in E and independent of the quantum numbers
    let qn = QuantumNumbers::new(0, 0, 3);
    let a = omega_coeffs(0.0, &qn, model).omega3;
    let b = omega_coeffs(1.0, &qn, model).omega3 - a;
    let m0 = model.mass.m0;
    let disc = b * b + 4.0 * (m0 * m0 + a);
    if disc < 0.0 {
        return Err(Error::Parameter(format!(
            "no real continuum edge (discriminant {disc})"
        )));
    }
    let root = disc.sqrt();
    Ok((0.5 * (b - root), 0.5 * (b + root)))
}
