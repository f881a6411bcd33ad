pub mod scatter;
pub mod sweep;
pub mod table1;
pub mod verify;

use std::path::PathBuf;

use crate::config::RunConfig;
use crate::Common;

/// `--out`, then the config's `output`, then stdout.
pub fn output_path(config: &RunConfig, common: &Common) -> Option<PathBuf> {
    common.out.clone().or_else(|| config.output.clone())
}

use anyhow::Result;
use kgspec::bound::{solve_bound_energies, Model, QuantumNumbers, SearchWindow};
use kgspec::oracle::{oracle_bound_energies, OracleScan, RadialGrid};
use kgspec::par::Execution;
use kgspec::scatter::continuum_edges;

use crate::Solver;

/// Bound energies in ascending order from the chosen solver.
pub fn levels(qn: &QuantumNumbers, model: &Model, window: &SearchWindow, solver: Solver) -> Result<Vec<f64>> {
    Ok(match solver {
        Solver::Analytic => solve_bound_energies(qn, model, window)?.energies(),
        Solver::Oracle => {
            let scan = OracleScan {
                window: SearchWindow { grid_points: OracleScan::default().window.grid_points, ..*window },
                execution: Execution::Sequential,
                ..OracleScan::default()
            };
            oracle_bound_energies(qn, model, &RadialGrid::for_potential(&model.potential), &scan)?.energies
        }
    })
}

/// `(E_plus, E_minus)`: the highest and lowest level, or a lone level placed by
/// which half of the gap it sits in.
pub fn branches(energies: &[f64], model: &Model) -> Result<(Option<f64>, Option<f64>)> {
    Ok(match energies {
        [] => (None, None),
        [e] => {
            let (lo, hi) = continuum_edges(model)?;
            if *e >= 0.5 * (lo + hi) {
                (Some(*e), None)
            } else {
                (None, Some(*e))
            }
        }
        [first, .., last] => (Some(*last), Some(*first)),
    })
}
