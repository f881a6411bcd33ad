use serde::Serialize;

use super::tridiag::SymTridiag;
use crate::bound::{energy_tilde, omega_coeffs, Model, OmegaCoefficients, QuantumNumbers, SearchWindow};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::potential::PotentialParams;
use crate::roots::bisect;

/// Uniform grid of interior points on `(r_min, r_max)` with Dirichlet ends.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialGrid {
    pub r_min: f64,
    pub r_max: f64,
    /// Interior points of the coarse grid; the fine grid has `2 points + 1`.
    pub points: usize,
}

impl RadialGrid {
    pub const DEFAULT_POINTS: usize = 20_000;

    /// `r_s + 1e-6/alpha` to `r_s + 14/alpha`, measured from the singular point `r_s`.
    pub fn for_potential(p: &PotentialParams) -> Self {
        let rs = p.singular_point();
        RadialGrid { r_min: rs + 1e-6 / p.alpha, r_max: rs + 14.0 / p.alpha, points: Self::DEFAULT_POINTS }
    }

    /// Grid for the exact `1/r^2` problem, which lives on `r > max(0, r_s)`.
    pub fn exact_centrifugal(p: &PotentialParams) -> Self {
        let start = p.r_floor();
        RadialGrid { r_min: start + 1e-6 / p.alpha, r_max: start + 14.0 / p.alpha, points: Self::DEFAULT_POINTS }
    }

    pub fn with_points(mut self, points: usize) -> Self {
        self.points = points;
        self
    }

    pub fn validate(&self, p: &PotentialParams) -> Result<()> {
        if self.points < 2000 {
            return Err(Error::Grid(format!("need at least 2000 points, got {}", self.points)));
        }
        if !(self.r_min > p.singular_point()) || !(self.r_max > self.r_min) {
            return Err(Error::Grid(format!(
                "bad interval [{}, {}] for singular point {}",
                self.r_min,
                self.r_max,
                p.singular_point()
            )));
        }
        if p.q * (-2.0 * p.alpha * self.r_max).exp() >= 1e-12 {
            return Err(Error::Grid(format!("r_max = {} leaves the potential tail above 1e-12", self.r_max)));
        }
        Ok(())
    }

    pub fn step(&self, interior: usize) -> f64 {
        (self.r_max - self.r_min) / (interior + 1) as f64
    }

    pub fn nodes(&self, interior: usize) -> Vec<f64> {
        let h = self.step(interior);
        (1..=interior).map(|i| self.r_min + h * i as f64).collect()
    }
}

/// How the centrifugal term enters the effective potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CentrifugalTreatment {
    /// The exponential approximation, which the closed forms solve exactly.
    #[default]
    Approximated,
    /// `gamma / r^2`; only used to size the approximation error.
    Exact,
}

/// Effective potential `(w1/q^2 s^2 + w2/q s + w3) / (1 - s)^2` with `s = q e^{-2 alpha r}`.
pub fn effective_potential(r: f64, om: &OmegaCoefficients, p: &PotentialParams, treatment: CentrifugalTreatment) -> f64 {
    let log_s = p.q.ln() - 2.0 * p.alpha * r;
    let s = log_s.exp();
    let one_minus_s = -log_s.exp_m1();
    let q = p.q;
    match treatment {
        CentrifugalTreatment::Approximated => {
            (om.omega1 / (q * q) * s * s + om.omega2 / q * s + om.omega3) / (one_minus_s * one_minus_s)
        }
        CentrifugalTreatment::Exact => {
            let w2 = om.omega2 - 4.0 * om.gamma * p.alpha * p.alpha;
            (om.omega1 / (q * q) * s * s + w2 / q * s + om.omega3) / (one_minus_s * one_minus_s) + om.gamma / (r * r)
        }
    }
}

/// Three-point discretization of `-F'' + V F` on the grid's interior nodes.
pub fn operator<V: Fn(f64) -> f64>(grid: &RadialGrid, interior: usize, v: V) -> SymTridiag {
    let h = grid.step(interior);
    let inv_h2 = 1.0 / (h * h);
    let diag = grid.nodes(interior).into_iter().map(|r| 2.0 * inv_h2 + v(r)).collect();
    SymTridiag { diag, offdiag: -inv_h2 }
}

/// Richardson-extrapolated eigenvalue `index` of `-F'' + V F`.
pub fn extrapolated_level<V: Fn(f64) -> f64>(grid: &RadialGrid, index: usize, v: V) -> Result<f64> {
    let coarse = operator(grid, grid.points, &v).eigenvalue(index)?;
    let fine = operator(grid, 2 * grid.points + 1, &v).eigenvalue(index)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EffectiveLevels {
    /// Richardson-extrapolated eigenvalues, ascending.
    pub values: Vec<f64>,
    pub coarse: Vec<f64>,
    pub fine: Vec<f64>,
}

pub const LEVEL_COUNT: usize = 8;

/// Lowest eigenvalues `E~` of the effective equation with coefficients frozen at `e_param`.
pub fn effective_levels(
    e_param: f64,
    qn: &QuantumNumbers,
    model: &Model,
    grid: &RadialGrid,
    treatment: CentrifugalTreatment,
) -> Result<EffectiveLevels> {
    grid.validate(&model.potential)?;
    let om = omega_coeffs(e_param, qn, model);
    let v = |r: f64| effective_potential(r, &om, &model.potential, treatment);
    let coarse_op = operator(grid, grid.points, v);
    let fine_op = operator(grid, 2 * grid.points + 1, v);
    let mut coarse = Vec::with_capacity(LEVEL_COUNT);
    let mut fine = Vec::with_capacity(LEVEL_COUNT);
    for k in 0..LEVEL_COUNT {
        coarse.push(coarse_op.eigenvalue(k)?);
        fine.push(fine_op.eigenvalue(k)?);
    }
    let values = coarse.iter().zip(&fine).map(|(c, f)| (4.0 * f - c) / 3.0).collect();
    Ok(EffectiveLevels { values, coarse, fine })
}

/// Richardson-extrapolated level `qn.n` at frozen coefficients.
pub fn effective_level(
    e_param: f64,
    qn: &QuantumNumbers,
    model: &Model,
    grid: &RadialGrid,
    treatment: CentrifugalTreatment,
) -> Result<f64> {
    let om = omega_coeffs(e_param, qn, model);
    extrapolated_level(grid, qn.n, |r| effective_potential(r, &om, &model.potential, treatment))
}

/// Energy scan used by the self-consistent solver.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleScan {
    pub window: SearchWindow,
    pub xtol: f64,
    pub treatment: CentrifugalTreatment,
    pub execution: Execution,
}

impl Default for OracleScan {
    fn default() -> Self {
        OracleScan {
            window: SearchWindow { grid_points: 160, ..SearchWindow::default() },
            xtol: 1e-8,
            treatment: CentrifugalTreatment::Approximated,
            execution: Execution::default(),
        }
    }
}

/// `h(E) = E~_n(E) - (E^2 - m0^2)`, defined only while level `n` sits below the continuum `w3`.
pub fn self_consistency(e: f64, qn: &QuantumNumbers, model: &Model, grid: &RadialGrid, treatment: CentrifugalTreatment) -> Result<f64> {
    let level = effective_level(e, qn, model, grid, treatment)?;
    let om = omega_coeffs(e, qn, model);
    if !(level < om.omega3) {
        return Err(Error::Parameter(format!("level {} at E = {e} is not bound", qn.n)));
    }
    Ok(level - energy_tilde(e, &model.mass))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleSpectrum {
    pub qn: QuantumNumbers,
    pub energies: Vec<f64>,
}

/// Energies where the numerically computed level `n` is self-consistent.
pub fn oracle_bound_energies(qn: &QuantumNumbers, model: &Model, grid: &RadialGrid, scan: &OracleScan) -> Result<OracleSpectrum> {
    qn.validate()?;
    model.validate()?;
    grid.validate(&model.potential)?;
    let energies_grid = scan.window.grid(model)?;
    let h: Vec<Option<f64>> =
        par::map(&energies_grid, scan.execution, |&e| self_consistency(e, qn, model, grid, scan.treatment).ok());
    let mut energies = Vec::new();
    for i in 0..energies_grid.len() - 1 {
        let (Some(ha), Some(hb)) = (h[i], h[i + 1]) else { continue };
        if ha.signum() == hb.signum() && ha != 0.0 {
            continue;
        }
        if hb == 0.0 && i + 2 < energies_grid.len() {
            continue;
        }
        let root = bisect(
            |e| self_consistency(e, qn, model, grid, scan.treatment),
            energies_grid[i],
            energies_grid[i + 1],
            scan.xtol,
        )?;
        energies.push(root);
    }
    Ok(OracleSpectrum { qn: *qn, energies })
}

/// Eigenvector of level `qn.n` on the coarse grid, normalized so `sum v^2 h = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleEigenvector {
    pub r: Vec<f64>,
    pub values: Vec<f64>,
    pub eigenvalue: f64,
    /// Interior sign changes, ignoring values below `1e-10` of the peak.
    pub nodes: usize,
    /// `|v(r_max)| / max |v|`.
    pub tail_ratio: f64,
}

impl OracleEigenvector {
    /// Tail above `1e-8` of the peak: the outer wall is biasing the level.
    pub fn tail_flagged(&self) -> bool {
        self.tail_ratio > 1e-8
    }
}

pub fn oracle_eigenvector(e: f64, qn: &QuantumNumbers, model: &Model, grid: &RadialGrid) -> Result<OracleEigenvector> {
    grid.validate(&model.potential)?;
    let om = omega_coeffs(e, qn, model);
    let op = operator(grid, grid.points, |r| {
        effective_potential(r, &om, &model.potential, CentrifugalTreatment::Approximated)
    });
    let eigenvalue = op.eigenvalue(qn.n)?;
    let mut values = op.eigenvector(eigenvalue)?;
    let h = grid.step(grid.points);
    let scale = 1.0 / h.sqrt();
    values.iter_mut().for_each(|v| *v *= scale);
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let significant: Vec<f64> = values.iter().cloned().filter(|v| v.abs() > 1e-10 * peak).collect();
    let nodes = significant.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
    let tail_ratio = values.last().map_or(0.0, |v| v.abs() / peak);
    Ok(OracleEigenvector { r: grid.nodes(grid.points), values, eigenvalue, nodes, tail_ratio })
}
