use serde::Serialize;

use super::coefficients::{rate, xi_coeffs};
use crate::bound::{energy_tilde, omega_coeffs, Model, QuantumNumbers, SearchWindow};
use crate::error::{Error, Result};
use crate::roots::brent;

/// Pole condition of `Gamma(eta3 - eta1)` continued to `k = i kappa`:
/// `lambda1 + kappa/rate - sqrt(xi3) + n = 0`, `kappa = sqrt(w3 - (E^2 - m0^2))`.
pub fn pole_condition(e: f64, qn: &QuantumNumbers, model: &Model) -> Result<f64> {
    let om = omega_coeffs(e, qn, model);
    let kappa2 = om.omega3 - energy_tilde(e, &model.mass);
    if !(kappa2 > 0.0) {
        return Err(Error::Parameter(format!("E = {e} is not inside the gap")));
    }
    let xi = xi_coeffs(e, qn, model);
    if xi.xi3 < 0.0 {
        return Err(Error::Parameter(format!("xi3 = {} < 0 has no real pole", xi.xi3)));
    }
    let lambda1 = xi.lambda1()?;
    Ok(lambda1 + kappa2.sqrt() / rate(model) - xi.xi3.sqrt() + qn.n as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PoleSpectrum {
    pub qn: QuantumNumbers,
    pub energies: Vec<f64>,
}

/// Real energies in the gap where the scattering amplitude has a pole of order `qn.n`.
pub fn smatrix_pole_energies(qn: &QuantumNumbers, model: &Model, search: &SearchWindow) -> Result<PoleSpectrum> {
    qn.validate()?;
    model.validate()?;
    let grid = search.grid(model)?;
    let values: Vec<Option<f64>> = grid
        .iter()
        .map(|&e| pole_condition(e, qn, model).ok().filter(|v| v.is_finite()))
        .collect();
    let mut energies = Vec::new();
    for i in 0..grid.len() - 1 {
        let (Some(ha), Some(hb)) = (values[i], values[i + 1]) else { continue };
        if ha.signum() == hb.signum() && ha != 0.0 {
            continue;
        }
        if hb == 0.0 && i + 2 < grid.len() {
            continue;
        }
        let (a, b) = (grid[i], grid[i + 1]);
        let scale = a.abs().max(b.abs()).max(1.0);
        let root = brent(|e| pole_condition(e, qn, model), a, b, 4.0 * f64::EPSILON * scale, 0.0)?;
        energies.push(root);
    }
    Ok(PoleSpectrum { qn: *qn, energies })
}
