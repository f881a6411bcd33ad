use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use super::levels::{effective_potential, CentrifugalTreatment};
use crate::bound::{energy_tilde, omega_coeffs, Model, QuantumNumbers};
use crate::error::{Error, Result};
use crate::scatter::distance_mod_pi;

/// Resolution of the outward integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseGrid {
    pub steps_per_wavelength: usize,
    /// Upper bound on the step in units of `1/alpha`.
    pub max_step_alpha: f64,
    /// Matching starts at `alpha r = match_alpha_r`.
    pub match_alpha_r: f64,
    /// Allowed disagreement between the two matching radii.
    pub tolerance: f64,
}

impl Default for PhaseGrid {
    fn default() -> Self {
        PhaseGrid { steps_per_wavelength: 1000, max_step_alpha: 0.01, match_alpha_r: 16.0, tolerance: 1e-3 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OraclePhase {
    /// Phase shift modulo `pi`, in `[0, pi)`.
    pub delta: f64,
    pub first: f64,
    pub second: f64,
    pub k: f64,
}

const RESCALE: f64 = 1e200;
const GRADING: u32 = 12;

/// Phase of `y = A sin(k r) + B cos(k r)` from two samples, as `y ~ sin(k r + phi)`.
fn two_point_phase(k: f64, ra: f64, ya: f64, rb: f64, yb: f64) -> f64 {
    let (sa, ca) = (k * ra).sin_cos();
    let (sb, cb) = (k * rb).sin_cos();
    let det = sa * cb - ca * sb;
    let a = (ya * cb - yb * ca) / det;
    let b = (sa * yb - sb * ya) / det;
    b.atan2(a)
}

/// Phase shift of the regular solution by Numerov integration and asymptotic matching.
pub fn oracle_phase_shift(e: f64, qn: &QuantumNumbers, model: &Model, grid: &PhaseGrid) -> Result<OraclePhase> {
    qn.validate()?;
    model.validate()?;
    let p = &model.potential;
    let om = omega_coeffs(e, qn, model);
    let e_tilde = energy_tilde(e, &model.mass);
    let k2 = e_tilde - om.omega3;
    if !(k2 > 0.0) {
        return Err(Error::BelowThreshold { energy: e });
    }
    let k = k2.sqrt();
    let alpha = p.alpha;
    let rs = p.singular_point();

    let wavelength = 2.0 * PI / k;
    let h = (wavelength / grid.steps_per_wavelength as f64).min(grid.max_step_alpha / alpha);
    // u = r - rs; matching radii in physical r
    let r1 = (grid.match_alpha_r / alpha).max(rs + grid.match_alpha_r / alpha);
    let r2 = r1 + 10.0 * wavelength + 2.0 / alpha;
    let quarter = ((0.25 * wavelength) / h).round().max(1.0) as usize;
    let n_total = ((r2 - rs) / h).ceil() as usize + quarter + 2;

    // near the singular point V ~ c / u^2 with c = (w1 + w2 q + w3 q^2) / (2 alpha q)^2
    let c = om.sigma_sum(p.q) / (2.0 * alpha * p.q).powi(2);
    if 0.25 + c < 0.0 {
        return Err(Error::Parameter("complex exponent at the singular point".into()));
    }
    let nu = 0.5 + (0.25 + c).sqrt();
    // next term of V ~ c/u^2 + b/u, giving y ~ u^nu (1 + b u / (2 nu))
    let b = (om.omega3 - om.omega1 / (p.q * p.q)) / (2.0 * alpha);
    let c1 = b / (2.0 * nu);
    let start_steps = ((nu * (nu - 1.0)).max(0.0) / 1.2).sqrt().ceil().max(1.0);

    let f = |u: f64| e_tilde - effective_potential(u + rs, &om, p, CentrifugalTreatment::Approximated);
    // begin on a step 2^-GRADING finer and double it on the way out
    let mut step = h / (1u64 << GRADING) as f64;
    let u0 = start_steps * step;
    let frobenius = |u: f64| nu * (u / u0).ln() + (1.0 + c1 * u).abs().ln() - (1.0 + c1 * u0).abs().ln();
    let mut y = [0.0, 1.0, frobenius(u0 + step).exp()];
    if !y[2].is_finite() || y[2] <= 0.0 {
        y = [0.0, 0.0, 1e-30];
    }
    let mut u = u0 + step;
    let mut f_prev = f(u - step);
    let mut f_curr = f(u);

    let mut samples: Vec<(f64, f64)> = Vec::with_capacity(4);
    let targets = [r1, r1 + quarter as f64 * h, r2, r2 + quarter as f64 * h];
    let mut next_target = 0;
    let mut since_change = 0usize;
    let mut steps = 0usize;
    while next_target < targets.len() {
        if steps > n_total + 10 * quarter + 64 * GRADING as usize {
            return Err(Error::Grid("outward integration ran past the matching radius".into()));
        }
        if step < h && since_change >= 2 && u >= 64.0 * step {
            // y[0] sits two fine steps back, one coarse step
            step *= 2.0;
            y[1] = y[0];
            f_prev = f(u - step);
            since_change = 0;
        }
        let w = step * step / 12.0;
        let u_next = u + step;
        let f_next = f(u_next);
        let y_next = (2.0 * y[2] * (1.0 - 5.0 * w * f_curr) - y[1] * (1.0 + w * f_prev)) / (1.0 + w * f_next);
        y = [y[1], y[2], y_next];
        f_prev = f_curr;
        f_curr = f_next;
        u = u_next;
        steps += 1;
        since_change += 1;
        if y[2].abs() > RESCALE {
            y.iter_mut().for_each(|v| *v /= RESCALE);
            samples.iter_mut().for_each(|s| s.1 /= RESCALE);
        }
        if !y[2].is_finite() {
            return Err(Error::Grid("outward integration overflowed".into()));
        }
        let r = u + rs;
        if step == h && r >= targets[next_target] {
            samples.push((r, y[2]));
            next_target += 1;
        }
    }

    let shift = FRAC_PI_2 * (qn.l as f64 + 0.5 * (qn.d as f64 - 3.0));
    let first = two_point_phase(k, samples[0].0, samples[0].1, samples[1].0, samples[1].1) + shift;
    let second = two_point_phase(k, samples[2].0, samples[2].1, samples[3].0, samples[3].1) + shift;
    let gap = distance_mod_pi(first, second);
    if gap > grid.tolerance {
        return Err(Error::Match { first, second, tolerance: grid.tolerance });
    }
    Ok(OraclePhase { delta: second.rem_euclid(PI), first, second, k })
}
