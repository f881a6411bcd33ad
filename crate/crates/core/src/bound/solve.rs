use serde::Serialize;

use super::coefficients::{chi_from_omegas, energy_tilde, omega_coeffs, ChiCoefficients, Model, OmegaCoefficients, QuantumNumbers};
use super::susy::{energy_residual, level_condition, sigma, susy_factors, SusyFactors};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::roots::brent;
use crate::scatter::continuum_edges;

/// Where and how finely to look for roots of the level condition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchWindow {
    /// Explicit energy interval; `None` means the gap interior.
    pub bounds: Option<(f64, f64)>,
    /// Fraction of the gap half-width searched around its center.
    pub fraction: f64,
    pub grid_points: usize,
    pub tol: f64,
}

impl Default for SearchWindow {
    fn default() -> Self {
        SearchWindow { bounds: None, fraction: 0.999, grid_points: 400, tol: 1e-12 }
    }
}

impl SearchWindow {
    pub fn resolve(&self, model: &Model) -> Result<(f64, f64)> {
        if self.grid_points < 100 {
            return Err(Error::Parameter(format!(
                "search grid needs at least 100 points, got {}",
                self.grid_points
            )));
        }
        if let Some((lo, hi)) = self.bounds {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::Parameter(format!("bad search interval [{lo}, {hi}]")));
            }
            return Ok((lo, hi));
        }
        let (lo, hi) = continuum_edges(model)?;
        let center = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo) * self.fraction;
        if !(half > 0.0) {
            return Err(Error::Parameter("the spectrum has no gap to search".into()));
        }
        Ok((center - half, center + half))
    }

    pub fn grid(&self, model: &Model) -> Result<Vec<f64>> {
        let (lo, hi) = self.resolve(model)?;
        let n = self.grid_points;
        Ok((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundState {
    pub energy: f64,
    pub qn: QuantumNumbers,
    pub omegas: OmegaCoefficients,
    pub chis: ChiCoefficients,
    /// Ground-level factors `P`, `Q` at this energy.
    pub factors: SusyFactors,
    pub sigma: f64,
    /// `rho_n = Q - 2 alpha q n`.
    pub rho: f64,
    /// Decay constant `P_n`.
    pub decay: f64,
    pub residual: f64,
}

/// A root of the level condition whose decay constant is not positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RejectedRoot {
    pub energy: f64,
    pub decay: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundSpectrum {
    pub qn: QuantumNumbers,
    /// Accepted levels in ascending energy.
    pub states: Vec<BoundState>,
    pub rejected: Vec<RejectedRoot>,
    /// Grid energies at which the level condition could not be evaluated.
    pub skipped_points: usize,
}

impl BoundSpectrum {
    pub fn energies(&self) -> Vec<f64> {
        self.states.iter().map(|s| s.energy).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Largest-energy level, the particle branch.
    pub fn upper(&self) -> Option<f64> {
        self.states.last().map(|s| s.energy)
    }

    /// Smallest-energy level, the antiparticle branch.
    pub fn lower(&self) -> Option<f64> {
        self.states.first().map(|s| s.energy)
    }
}

/// Bundle the coefficient data at a converged energy.
pub fn bound_state_at(e: f64, qn: &QuantumNumbers, model: &Model) -> Result<BoundState> {
    let om: OmegaCoefficients = omega_coeffs(e, qn, model);
    let factors = susy_factors(&om, &model.potential)?;
    let cond = level_condition(e, qn, model)?;
    let chis = chi_from_omegas(&om, energy_tilde(e, &model.mass), &model.potential);
    Ok(BoundState {
        energy: e,
        qn: *qn,
        omegas: om,
        chis,
        factors,
        sigma: sigma(&om, &model.potential)?,
        rho: cond.rho,
        decay: cond.decay,
        residual: cond.residual,
    })
}

/// All bound levels with radial number `qn.n` inside the search window.
pub fn solve_bound_energies(qn: &QuantumNumbers, model: &Model, search: &SearchWindow) -> Result<BoundSpectrum> {
    qn.validate()?;
    model.validate()?;
    let grid = search.grid(model)?;
    let values: Vec<Option<f64>> = grid
        .iter()
        .map(|&e| level_condition(e, qn, model).ok().map(|c| c.residual).filter(|g| g.is_finite()))
        .collect();
    let skipped_points = values.iter().filter(|v| v.is_none()).count();

    let mut states = Vec::new();
    let mut rejected = Vec::new();
    for i in 0..grid.len() - 1 {
        let (Some(ga), Some(gb)) = (values[i], values[i + 1]) else { continue };
        if ga.signum() == gb.signum() && ga != 0.0 {
            continue;
        }
        if gb == 0.0 && i + 2 < grid.len() {
            // counted by the next interval
            continue;
        }
        let (a, b) = (grid[i], grid[i + 1]);
        let scale = a.abs().max(b.abs()).max(1.0);
        let root = brent(
            |e| energy_residual(e, qn, model),
            a,
            b,
            4.0 * f64::EPSILON * scale,
            search.tol * scale * scale,
        )?;
        let state = bound_state_at(root, qn, model)?;
        // a sign change across a singularity of g is not a root
        if state.residual.abs() > 1e-6 * scale * scale {
            continue;
        }
        if state.decay > 0.0 {
            states.push(state);
        } else {
            rejected.push(RejectedRoot { energy: root, decay: state.decay });
        }
    }
    Ok(BoundSpectrum { qn: *qn, states, rejected, skipped_points })
}

/// [`solve_bound_energies`] over many quantum-number sets, results in input order.
pub fn solve_many(
    qns: &[QuantumNumbers],
    model: &Model,
    search: &SearchWindow,
    exec: Execution,
) -> Vec<Result<BoundSpectrum>> {
    par::map(qns, exec, |qn| solve_bound_energies(qn, model, search))
}
