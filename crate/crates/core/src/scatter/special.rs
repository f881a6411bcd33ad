//! Hulthén and Woods-Saxon reductions.
//!
//! Each case is reached two ways: by mapping its parameters onto the general
//! model, and by closed forms written directly in the case's own parameters.

use std::f64::consts::{FRAC_PI_2, LN_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::phase::{reduce_angle, scattering_state_with, PhaseVariant};
use crate::bound::{CoefficientScheme, Model, QuantumNumbers};
use crate::error::{Error, Result};
use crate::potential::{MassParams, PotentialParams};
use crate::specfun::{gamma_arg, log_gamma};

/// `V(r) = -V0 e^{-alpha r} / (1 - q e^{-alpha r})` with constant mass `m0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HulthenParams {
    pub v0: f64,
    pub q: f64,
    pub alpha: f64,
    pub m0: f64,
}

/// `V(r) = V0 / (1 - e^{(r - theta)/R})`, defined for `r > theta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WoodsSaxonParams {
    pub v0: f64,
    pub radius: f64,
    pub theta: f64,
    pub m0: f64,
}

impl HulthenParams {
    /// The general model with `V1 = S0 = S1 = m1 = 0` and half the screening.
    pub fn to_model(&self) -> Model {
        Model {
            potential: PotentialParams { v0: self.v0, v1: 0.0, s0: 0.0, s1: 0.0, q: self.q, alpha: 0.5 * self.alpha },
            mass: MassParams { m0: self.m0, m1: 0.0 },
            scheme: CoefficientScheme::Reduced,
        }
    }

    pub fn potential(&self, r: f64) -> f64 {
        let y = (-self.alpha * r).exp();
        -self.v0 * y / (1.0 - self.q * y)
    }
}

impl WoodsSaxonParams {
    pub fn to_hulthen(&self) -> HulthenParams {
        let q = (self.theta / self.radius).exp();
        HulthenParams { v0: self.v0 * q, q, alpha: 1.0 / self.radius, m0: self.m0 }
    }

    pub fn potential(&self, r: f64) -> Result<f64> {
        if !(r > self.theta) {
            return Err(Error::Domain(format!("r = {r} must exceed theta = {}", self.theta)));
        }
        Ok(self.v0 / (1.0 - ((r - self.theta) / self.radius).exp()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CaseResult {
    pub delta_raw: f64,
    pub delta: f64,
    pub norm: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CaseComparison {
    /// Through the general model.
    pub general: CaseResult,
    /// Through the case's own closed forms.
    pub dedicated: CaseResult,
}

impl CaseComparison {
    pub fn max_difference(&self) -> f64 {
        let d = (self.general.delta_raw - self.dedicated.delta_raw).abs();
        let n = (self.general.norm - self.dedicated.norm).abs() / self.general.norm.abs().max(1e-300);
        d.max(n)
    }
}

/// Closed-form pieces shared by both dedicated formulas.
struct Dedicated {
    /// `k / alpha_H` (Hulthén) or `k R` (Woods-Saxon).
    x: f64,
    xi1: f64,
    xi3: f64,
    /// `-(k/alpha_H) ln q`, i.e. `-k theta` for Woods-Saxon.
    deformation: f64,
}

fn dedicated_result(d: &Dedicated, qn: &QuantumNumbers, variant: PhaseVariant) -> Result<CaseResult> {
    let radicand = 1.0 - 4.0 * d.xi1;
    if radicand < 0.0 {
        return Err(Error::Parameter(format!("1 - 4 xi1 = {radicand} < 0")));
    }
    let lambda1 = 0.5 * (1.0 + radicand.sqrt());
    let eta3 = 1.0 + radicand.sqrt();
    let root = Complex64::new(d.xi3, 0.0).sqrt();
    let ix = Complex64::new(0.0, d.x);
    let two_ix = Complex64::new(0.0, 2.0 * d.x);
    let mut delta = FRAC_PI_2 * (qn.l as f64 + 0.5 * (qn.d as f64 - 1.0)) + gamma_arg(two_ix)?
        - gamma_arg(lambda1 + ix - root)?
        - gamma_arg(lambda1 + ix + root)?
        + d.deformation;
    if variant == PhaseVariant::WithLn2 {
        delta -= d.x * LN_2;
    }
    let log_norm = log_gamma(lambda1 - ix + root)?.re + log_gamma(lambda1 - ix - root)?.re
        - log_gamma(Complex64::new(eta3, 0.0))?.re
        - log_gamma(two_ix)?.re;
    Ok(CaseResult { delta_raw: delta, delta: reduce_angle(delta), norm: log_norm.exp() })
}

fn general_result(model: &Model, e: f64, qn: &QuantumNumbers, variant: PhaseVariant) -> Result<CaseResult> {
    let s = scattering_state_with(e, qn, model, variant)?;
    Ok(CaseResult { delta_raw: s.delta_raw, delta: s.delta, norm: s.norm })
}

pub fn hulthen_case(h: &HulthenParams, e: f64, qn: &QuantumNumbers, variant: PhaseVariant) -> Result<CaseComparison> {
    let general = general_result(&h.to_model(), e, qn, variant)?;
    let e_tilde = e * e - h.m0 * h.m0;
    if !(e_tilde > 0.0) {
        return Err(Error::BelowThreshold { energy: e });
    }
    let (v0, q, a) = (h.v0, h.q, h.alpha);
    let gamma = qn.gamma();
    let dedicated = dedicated_result(
        &Dedicated {
            x: e_tilde.sqrt() / a,
            xi1: (v0 / (q * a)).powi(2) - gamma / q,
            xi3: ((2.0 * q * e * v0 - v0 * v0) / (q * q) - e_tilde) / (a * a),
            deformation: -(e_tilde.sqrt() / a) * q.ln(),
        },
        qn,
        variant,
    )?;
    Ok(CaseComparison { general, dedicated })
}

pub fn woods_saxon_case(
    ws: &WoodsSaxonParams,
    e: f64,
    qn: &QuantumNumbers,
    variant: PhaseVariant,
) -> Result<CaseComparison> {
    let general = general_result(&ws.to_hulthen().to_model(), e, qn, variant)?;
    let e_tilde = e * e - ws.m0 * ws.m0;
    if !(e_tilde > 0.0) {
        return Err(Error::BelowThreshold { energy: e });
    }
    let k = e_tilde.sqrt();
    let (v0, r) = (ws.v0, ws.radius);
    let dedicated = dedicated_result(
        &Dedicated {
            x: k * r,
            xi1: (v0 * r).powi(2) - qn.gamma() * (-ws.theta / r).exp(),
            xi3: (2.0 * e * v0 - v0 * v0 - e_tilde) * r * r,
            deformation: -k * ws.theta,
        },
        qn,
        variant,
    )?;
    Ok(CaseComparison { general, dedicated })
}
