//! Cross-checks between independent routes to the same quantity.
//!
//! Each function returns a [`Check`] holding the worst deviation found and the
//! tolerance it was judged against. The command-line `verify` report and the
//! acceptance suite are both built from these.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::bound::{
    energy_residual_sigma, partner_potentials, riccati_residual, shape_invariance_remainder,
    shifted_factors, solve_bound_energies, Model, QuantumNumbers, SearchWindow,
};
use crate::error::Result;
use crate::oracle::{
    effective_level, oracle_bound_energies, oracle_phase_shift, CentrifugalTreatment, OracleScan, PhaseGrid,
    RadialGrid,
};
use crate::par::{self, Execution};
use crate::potential::{centrifugal, CentrifugalScheme, PotentialParams};
use crate::reference::{duplicate_conflicts, duplicate_pairs, PanelPoint};
use crate::roots::brent;
use crate::scatter::{
    distance_mod_pi, hulthen_case, scattering_state_with, smatrix_pole_energies, woods_saxon_case, HulthenParams,
    PhaseVariant, WoodsSaxonParams,
};
use crate::specfun::{gamma, hyp2f1, hyp2f1_connection, hyp2f1_series, jacobi_poly, log_gamma};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// Largest deviation seen; `NaN` when nothing could be compared.
    pub worst: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Number of individual comparisons behind `worst`.
    pub samples: usize,
    /// Failures to evaluate, and anything else worth reading.
    pub notes: Vec<String>,
}

impl Check {
    fn new(name: &str, tolerance: f64) -> Self {
        Check { name: name.into(), worst: 0.0, tolerance, passed: false, samples: 0, notes: Vec::new() }
    }

    fn record(&mut self, deviation: f64) {
        self.samples += 1;
        if !(deviation <= self.worst) {
            self.worst = deviation;
        }
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    /// Judge the check: at least one sample, every sample in tolerance, no evaluation failures.
    fn finish(mut self, failures: usize) -> Self {
        if self.samples == 0 {
            self.worst = f64::NAN;
        }
        self.passed = self.samples > 0 && failures == 0 && self.worst <= self.tolerance;
        self
    }
}

fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| a + (b - a) * i as f64 / (n - 1) as f64)
}

/// Radii `[0.01/alpha, 20/alpha]`, moved past the singular point when `q > 1`.
fn radial_samples(p: &PotentialParams, n: usize) -> impl Iterator<Item = f64> {
    let start = p.r_floor() + 0.01 / p.alpha;
    linspace(start, start + 20.0 / p.alpha, n)
}

const RADIAL_SAMPLES: usize = 1000;

fn ground(qn: &QuantumNumbers) -> QuantumNumbers {
    QuantumNumbers { n: 0, ..*qn }
}

/// Sup-norm of `W^2 - W' - (V_eff - E~_0)` for every ground level.
///
/// `corrupt` flips the sign of `w2` in the potential being factorized but not
/// in the factors, which any working check must catch.
pub fn riccati(points: &[PanelPoint], corrupt: bool) -> Check {
    let mut check = Check::new("riccati", 1e-9);
    let mut failures = 0;
    for pt in points {
        let p = &pt.model.potential;
        let spectrum = match solve_bound_energies(&ground(&pt.qn), &pt.model, &SearchWindow::default()) {
            Ok(s) => s,
            Err(e) => {
                failures += 1;
                check.note(format!("{:?}: {e}", pt.qn));
                continue;
            }
        };
        for state in &spectrum.states {
            let mut om = state.omegas;
            if corrupt {
                om.omega2 = -om.omega2;
            }
            for r in radial_samples(p, RADIAL_SAMPLES) {
                match riccati_residual(r, &state.factors, &om, p) {
                    Ok(v) => check.record(v.abs()),
                    Err(e) => {
                        failures += 1;
                        check.note(format!("{:?} r = {r}: {e}", pt.qn));
                        break;
                    }
                }
            }
        }
    }
    check.finish(failures)
}

/// `V+(r; rho_0) - V-(r; rho_1)` is flat in `r` and equals the remainder `R(rho_1)`.
pub fn shape_invariance(points: &[PanelPoint]) -> Check {
    let mut check = Check::new("shape_invariance", 1e-9);
    let mut failures = 0;
    for pt in points {
        let p = &pt.model.potential;
        let Ok(spectrum) = solve_bound_energies(&ground(&pt.qn), &pt.model, &SearchWindow::default()) else {
            failures += 1;
            continue;
        };
        for state in &spectrum.states {
            let f0 = state.factors;
            let result = (|| -> Result<(f64, f64)> {
                let f1 = shifted_factors(1, &f0, &state.omegas, p)?;
                let mut diffs = Vec::with_capacity(RADIAL_SAMPLES);
                for r in radial_samples(p, RADIAL_SAMPLES) {
                    diffs.push(partner_potentials(r, &f0, p)?.0 - partner_potentials(r, &f1, p)?.1);
                }
                let mean = diffs.iter().sum::<f64>() / diffs.len() as f64;
                let var = diffs.iter().map(|d| (d - mean).powi(2)).sum::<f64>() / diffs.len() as f64;
                let remainder = shape_invariance_remainder(1, &f0, &state.omegas, p)?;
                Ok((var.sqrt(), (mean - remainder).abs()))
            })();
            match result {
                Ok((std, offset)) => {
                    check.record(std);
                    check.record(offset);
                }
                Err(e) => {
                    failures += 1;
                    check.note(format!("{:?} E = {}: {e}", pt.qn, state.energy));
                }
            }
        }
    }
    check.finish(failures)
}

/// Energies and phase shifts agree for `(l + 1, D)` and `(l, D + 2)`.
///
/// Phases are compared at `0.3` and `2` above the upper continuum edge.
pub fn degeneracy(points: &[PanelPoint]) -> Check {
    let mut check = Check::new("interdimensional_degeneracy", 1e-10);
    let mut failures = 0;
    for pt in points {
        let a = QuantumNumbers { l: pt.qn.l + 1, ..pt.qn };
        let b = QuantumNumbers { d: pt.qn.d + 2, ..pt.qn };
        let window = SearchWindow::default();
        match (solve_bound_energies(&a, &pt.model, &window), solve_bound_energies(&b, &pt.model, &window)) {
            (Ok(sa), Ok(sb)) if sa.states.len() == sb.states.len() => {
                for (x, y) in sa.energies().iter().zip(sb.energies()) {
                    check.record((x - y).abs());
                }
            }
            (Ok(sa), Ok(sb)) => {
                failures += 1;
                check.note(format!("{a:?}: {} levels, {b:?}: {}", sa.states.len(), sb.states.len()));
            }
            _ => failures += 1,
        }
        let (upper, _) = crate::scatter::threshold_energy(&pt.model.potential, &pt.model.mass);
        for e in [upper + 0.3, upper + 2.0] {
            let da = scattering_state_with(e, &a, &pt.model, PhaseVariant::Standard);
            let db = scattering_state_with(e, &b, &pt.model, PhaseVariant::Standard);
            match (da, db) {
                (Ok(x), Ok(y)) => check.record((x.delta_raw - y.delta_raw).abs()),
                (Err(e), _) | (_, Err(e)) => {
                    failures += 1;
                    check.note(format!("phase at {a:?}: {e}"));
                }
            }
        }
    }
    check.note(format!(
        "printed table: {} duplicated cell pairs, {} of them disagree",
        duplicate_pairs(),
        duplicate_conflicts().len()
    ));
    check.finish(failures)
}

/// Real S-matrix poles in the gap coincide with the bound levels.
pub fn pole_duality(points: &[PanelPoint]) -> Check {
    let mut check = Check::new("pole_bound_duality", 1e-8);
    let mut failures = 0;
    for pt in points {
        let window = SearchWindow::default();
        match (solve_bound_energies(&pt.qn, &pt.model, &window), smatrix_pole_energies(&pt.qn, &pt.model, &window)) {
            (Ok(b), Ok(p)) => {
                if b.states.len() != p.energies.len() {
                    failures += 1;
                    check.note(format!("{:?}: {} levels, {} poles", pt.qn, b.states.len(), p.energies.len()));
                    continue;
                }
                for (x, y) in b.energies().iter().zip(&p.energies) {
                    check.record((x - y).abs());
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                failures += 1;
                check.note(format!("{:?}: {e}", pt.qn));
            }
        }
    }
    check.finish(failures)
}

/// Each level re-found from the `sigma` form of the level condition.
pub fn sigma_route(points: &[PanelPoint]) -> Check {
    let mut check = Check::new("sigma_route", 1e-8);
    let mut failures = 0;
    for pt in points {
        let Ok(spectrum) = solve_bound_energies(&pt.qn, &pt.model, &SearchWindow::default()) else {
            failures += 1;
            continue;
        };
        for e in spectrum.energies() {
            let h = 1e-6 * e.abs().max(1.0);
            match brent(|x| energy_residual_sigma(x, &pt.qn, &pt.model), e - h, e + h, 1e-15, 0.0) {
                Ok(root) => check.record((root - e).abs()),
                Err(err) => {
                    failures += 1;
                    check.note(format!("{:?} E = {e}: {err}", pt.qn));
                }
            }
        }
    }
    check.finish(failures)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelComparison {
    pub qn: QuantumNumbers,
    pub q: f64,
    pub alpha: f64,
    pub analytic: Vec<f64>,
    pub oracle: Vec<f64>,
}

/// Analytic levels against the self-consistent finite-difference levels, relative.
pub fn analytic_vs_oracle(points: &[PanelPoint], tolerance: f64, exec: Execution) -> (Check, Vec<LevelComparison>) {
    let mut check = Check::new("analytic_vs_oracle", tolerance);
    let scan = OracleScan { execution: exec, ..OracleScan::default() };
    let results = par::map(points, exec, |pt| -> Result<LevelComparison> {
        let analytic = solve_bound_energies(&pt.qn, &pt.model, &SearchWindow::default())?.energies();
        let grid = RadialGrid::for_potential(&pt.model.potential);
        let oracle = oracle_bound_energies(&pt.qn, &pt.model, &grid, &scan)?.energies;
        Ok(LevelComparison { qn: pt.qn, q: pt.model.potential.q, alpha: pt.model.potential.alpha, analytic, oracle })
    });
    let mut failures = 0;
    let mut rows = Vec::new();
    for (pt, r) in points.iter().zip(results) {
        match r {
            Ok(row) => {
                if row.analytic.len() != row.oracle.len() {
                    failures += 1;
                    check.note(format!("{:?}: analytic {:?}, oracle {:?}", pt.qn, row.analytic, row.oracle));
                } else {
                    for (a, o) in row.analytic.iter().zip(&row.oracle) {
                        check.record((a - o).abs() / a.abs().max(f64::MIN_POSITIVE));
                    }
                }
                rows.push(row);
            }
            Err(e) => {
                failures += 1;
                check.note(format!("{:?}: {e}", pt.qn));
            }
        }
    }
    (check.finish(failures), rows)
}

/// Closed-form phase shift against Numerov matching, modulo `pi`.
pub fn phase_vs_oracle(model: &Model, qns: &[QuantumNumbers], energies: &[f64], exec: Execution) -> Check {
    let mut check = Check::new("phase_vs_oracle", 1e-3);
    let jobs: Vec<(QuantumNumbers, f64)> = qns.iter().flat_map(|qn| energies.iter().map(|&e| (*qn, e))).collect();
    let results = par::map(&jobs, exec, |(qn, e)| -> Result<f64> {
        let analytic = scattering_state_with(*e, qn, model, PhaseVariant::Standard)?.delta;
        let numeric = oracle_phase_shift(*e, qn, model, &PhaseGrid::default())?;
        Ok(distance_mod_pi(analytic, numeric.delta))
    });
    let mut failures = 0;
    for ((qn, e), r) in jobs.iter().zip(results) {
        match r {
            Ok(d) => check.record(d),
            Err(err) => {
                failures += 1;
                check.note(format!("{qn:?} E = {e}: {err}"));
            }
        }
    }
    check.finish(failures)
}

/// How far each phase convention sits from the oracle; informational.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Ln2Report {
    pub standard: f64,
    pub with_ln2: f64,
    /// Largest `(k/rate) ln 2` in the sample.
    pub largest_shift: f64,
}

pub fn ln2_variant(model: &Model, qn: &QuantumNumbers, energies: &[f64], exec: Execution) -> Result<Ln2Report> {
    let rows = par::map(energies, exec, |&e| -> Result<(f64, f64, f64)> {
        let numeric = oracle_phase_shift(e, qn, model, &PhaseGrid::default())?.delta;
        let std = scattering_state_with(e, qn, model, PhaseVariant::Standard)?;
        let ln2 = scattering_state_with(e, qn, model, PhaseVariant::WithLn2)?;
        Ok((distance_mod_pi(std.delta, numeric), distance_mod_pi(ln2.delta, numeric), ln2.terms.ln2.abs()))
    });
    let mut report = Ln2Report { standard: 0.0, with_ln2: 0.0, largest_shift: 0.0 };
    for r in rows {
        let (a, b, c) = r?;
        report.standard = report.standard.max(a);
        report.with_ln2 = report.with_ln2.max(b);
        report.largest_shift = report.largest_shift.max(c);
    }
    Ok(report)
}

/// Dedicated Hulthén and Woods-Saxon formulas against the general pipeline.
pub fn special_cases(hulthen: &HulthenParams, woods_saxon: &WoodsSaxonParams, qns: &[QuantumNumbers], above: &[f64]) -> Check {
    let mut check = Check::new("special_cases", 1e-12);
    let mut failures = 0;
    for qn in qns {
        for &de in above {
            let h = hulthen_case(hulthen, hulthen.m0.abs() + de, qn, PhaseVariant::Standard);
            let w = woods_saxon_case(woods_saxon, woods_saxon.m0.abs() + de, qn, PhaseVariant::Standard);
            for (label, r) in [("hulthen", h), ("woods_saxon", w)] {
                match r {
                    Ok(c) => check.record(c.max_difference()),
                    Err(e) => {
                        failures += 1;
                        check.note(format!("{label} {qn:?}: {e}"));
                    }
                }
            }
        }
    }
    check.finish(failures)
}

/// Gamma recurrence and reflection, relative.
pub fn gamma_identities() -> Check {
    let mut check = Check::new("gamma_identities", 1e-11);
    let mut failures = 0;
    for x in linspace(-4.7, 6.3, 12) {
        for y in linspace(-5.0, 5.0, 9) {
            let z = Complex64::new(x, y);
            let r = (|| -> Result<(f64, f64)> {
                let g = gamma(z)?;
                let recurrence = (gamma(z + 1.0)? - z * g).norm() / (z * g).norm();
                let reflect = PI / (PI * z).sin();
                let reflection = (g * gamma(1.0 - z)? - reflect).norm() / reflect.norm();
                Ok((recurrence, reflection))
            })();
            match r {
                Ok((a, b)) => {
                    check.record(a);
                    check.record(b);
                }
                Err(e) => {
                    failures += 1;
                    check.note(format!("z = {z}: {e}"));
                }
            }
        }
    }
    check.finish(failures)
}

fn hyp_parameters() -> Vec<[Complex64; 3]> {
    let c = Complex64::new;
    vec![
        [c(0.3, 0.2), c(1.1, -0.4), c(2.2, 0.1)],
        [c(-1.2, 0.5), c(0.7, 0.9), c(1.6, -0.3)],
        [c(1.4, -0.8), c(-0.6, 0.2), c(0.9, 0.7)],
        [c(0.5, 0.0), c(0.25, 0.0), c(2.6, 0.0)],
        [c(-0.9, -0.9), c(1.3, 0.4), c(2.9, 0.0)],
        [c(1.0, 1.5), c(1.0, -1.5), c(2.5, 0.0)],
    ]
}

/// `2F1(a, b; c; 0) = 1` with no rounding at all.
pub fn hyp2f1_at_zero() -> Check {
    let mut check = Check::new("hyp2f1_at_zero", 0.0);
    let mut failures = 0;
    for [a, b, c] in hyp_parameters() {
        match hyp2f1(a, b, c, Complex64::new(0.0, 0.0)) {
            Ok(v) => check.record((v - 1.0).norm()),
            Err(e) => {
                failures += 1;
                check.note(format!("({a}, {b}; {c}): {e}"));
            }
        }
    }
    check.finish(failures)
}

/// The connection formula at `z = 0.7` reproduces the direct series.
pub fn hyp2f1_connection_at_07() -> Check {
    let mut check = Check::new("hyp2f1_connection", 1e-10);
    let mut failures = 0;
    let z = Complex64::new(0.7, 0.0);
    for [a, b, c] in hyp_parameters() {
        match (hyp2f1_series(a, b, c, z), hyp2f1_connection(a, b, c, z)) {
            (Ok(s), Ok(k)) => check.record((s - k).norm() / s.norm().max(1.0)),
            (Err(e), _) | (_, Err(e)) => {
                failures += 1;
                check.note(format!("({a}, {b}; {c}): {e}"));
            }
        }
    }
    check.finish(failures)
}

/// `P_n^{(mu, nu)}(1) = binom(n + mu, n)` for `n <= 6`.
pub fn jacobi_endpoint() -> Check {
    let mut check = Check::new("jacobi_endpoint", 1e-12);
    let mut failures = 0;
    for n in 0..=6usize {
        for mu in [0.0, 0.5, 1.7, 3.2] {
            for nu in [-0.5, 0.0, 1.3] {
                let binom = log_gamma(Complex64::new(n as f64 + mu + 1.0, 0.0))
                    .and_then(|a| Ok(a - log_gamma(Complex64::new(mu + 1.0, 0.0))?))
                    .and_then(|a| Ok(a - log_gamma(Complex64::new(n as f64 + 1.0, 0.0))?))
                    .map(|a| a.re.exp());
                match (jacobi_poly(n, mu, nu, 1.0), binom) {
                    (Ok(p), Ok(b)) => check.record((p - b).abs() / b.max(1.0)),
                    _ => failures += 1,
                }
            }
        }
    }
    check.finish(failures)
}

/// One sample of the centrifugal approximation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ApproximationRow {
    pub alpha_r: f64,
    /// `|alpha^2 / sinh_q^2(alpha r) - 1/r^2| r^2`.
    pub hyperbolic: f64,
    pub greene_aldrich: f64,
    /// `(alpha r)^2 / 3`, the leading Taylor term of the hyperbolic error at `q = 1`.
    pub taylor: f64,
}

pub fn approximation_table(p: &PotentialParams, alpha_r: &[f64]) -> Result<Vec<ApproximationRow>> {
    alpha_r
        .iter()
        .map(|&x| {
            let r = x / p.alpha;
            let exact = centrifugal(r, p, CentrifugalScheme::Exact)?;
            let rel = |s| -> Result<f64> { Ok((centrifugal(r, p, s)? - exact).abs() / exact) };
            Ok(ApproximationRow {
                alpha_r: x,
                hyperbolic: rel(CentrifugalScheme::Hyperbolic)?,
                greene_aldrich: rel(CentrifugalScheme::greene_aldrich())?,
                taylor: x * x / 3.0,
            })
        })
        .collect()
}

/// Effective level with the approximated and with the exact centrifugal term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LevelApproximation {
    pub qn: QuantumNumbers,
    pub energy: f64,
    pub approximated: f64,
    pub exact: f64,
    pub relative: f64,
}

/// Compare effective levels at `energy` for both centrifugal treatments.
pub fn level_approximation(model: &Model, qn: &QuantumNumbers, energy: f64) -> Result<LevelApproximation> {
    let p = &model.potential;
    let approximated =
        effective_level(energy, qn, model, &RadialGrid::for_potential(p), CentrifugalTreatment::Approximated)?;
    let exact = effective_level(energy, qn, model, &RadialGrid::exact_centrifugal(p), CentrifugalTreatment::Exact)?;
    Ok(LevelApproximation {
        qn: *qn,
        energy,
        approximated,
        exact,
        relative: (approximated - exact).abs() / approximated.abs().max(f64::MIN_POSITIVE),
    })
}
