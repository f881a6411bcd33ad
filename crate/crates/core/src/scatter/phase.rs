use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use super::coefficients::{eta_params, rate, wave_number, xi_coeffs, EtaParams, XiCoefficients};
use crate::bound::{Model, QuantumNumbers};
use crate::error::{Error, Result};
use crate::specfun::{gamma_arg, hyp2f1_complement, log_gamma};

/// Whether the phase shift carries the extra `-(k/rate) ln 2` term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseVariant {
    #[default]
    Standard,
    WithLn2,
}

/// Additive pieces of the phase shift.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseTerms {
    /// `pi/2 (l + (D - 1)/2)`.
    pub offset: f64,
    /// `arg Gamma(2ik/rate)`.
    pub arg_gamma_k: f64,
    /// `-arg Gamma(eta3 - eta1)`.
    pub arg_gamma_31: f64,
    /// `-arg Gamma(eta3 - eta2)`.
    pub arg_gamma_32: f64,
    /// `-(k/rate) ln q`.
    pub deformation: f64,
    /// `-(k/rate) ln 2`, included only for [`PhaseVariant::WithLn2`].
    pub ln2: f64,
}

impl PhaseTerms {
    pub fn total(&self) -> f64 {
        self.offset + self.arg_gamma_k + self.arg_gamma_31 + self.arg_gamma_32 + self.deformation + self.ln2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScatteringState {
    pub energy: f64,
    pub qn: QuantumNumbers,
    pub k: f64,
    pub rate: f64,
    #[serde(skip)]
    pub eta: EtaParams,
    pub xi: XiCoefficients,
    pub lambda1: f64,
    /// Exponent of `s` in the wavefunction, `-i k / rate`.
    #[serde(skip)]
    pub lambda2: Complex64,
    pub delta_raw: f64,
    /// `delta_raw` reduced to `(-pi, pi]`.
    pub delta: f64,
    pub terms: PhaseTerms,
    pub norm: f64,
}

/// Reduce an angle to `(-pi, pi]`.
pub fn reduce_angle(x: f64) -> f64 {
    let mut y = x % (2.0 * PI);
    if y <= -PI {
        y += 2.0 * PI;
    } else if y > PI {
        y -= 2.0 * PI;
    }
    y
}

/// Distance between two angles modulo `pi`, in `[0, pi/2]`.
pub fn distance_mod_pi(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

/// Phase shift pieces from the raw parameters; shared with the special cases.
pub(crate) fn phase_terms(
    qn: &QuantumNumbers,
    eta: &EtaParams,
    k: f64,
    rate: f64,
    q: f64,
    variant: PhaseVariant,
) -> Result<PhaseTerms> {
    let x = k / rate;
    Ok(PhaseTerms {
        offset: FRAC_PI_2 * (qn.l as f64 + 0.5 * (qn.d as f64 - 1.0)),
        arg_gamma_k: gamma_arg(Complex64::new(0.0, 2.0 * x))?,
        arg_gamma_31: -gamma_arg(eta.eta3 - eta.eta1)?,
        arg_gamma_32: -gamma_arg(eta.eta3 - eta.eta2)?,
        deformation: -x * q.ln(),
        ln2: match variant {
            PhaseVariant::Standard => 0.0,
            PhaseVariant::WithLn2 => -x * LN_2,
        },
    })
}

/// `N = |Gamma(eta1) Gamma(eta2)| / (Gamma(eta3) |Gamma(2ik/rate)|)`.
pub(crate) fn normalization(eta: &EtaParams, k: f64, rate: f64) -> Result<f64> {
    let log = log_gamma(eta.eta1)?.re + log_gamma(eta.eta2)?.re
        - log_gamma(eta.eta3)?.re
        - log_gamma(Complex64::new(0.0, 2.0 * k / rate))?.re;
    Ok(log.exp())
}

pub fn scattering_state(e: f64, qn: &QuantumNumbers, model: &Model) -> Result<ScatteringState> {
    scattering_state_with(e, qn, model, PhaseVariant::Standard)
}

pub fn scattering_state_with(
    e: f64,
    qn: &QuantumNumbers,
    model: &Model,
    variant: PhaseVariant,
) -> Result<ScatteringState> {
    qn.validate()?;
    model.validate()?;
    let k = wave_number(e, qn, model)?;
    let xi = xi_coeffs(e, qn, model);
    let rate = rate(model);
    let eta = eta_params(&xi, k, rate)?;
    let terms = phase_terms(qn, &eta, k, rate, model.potential.q, variant)?;
    let delta_raw = terms.total();
    Ok(ScatteringState {
        energy: e,
        qn: *qn,
        k,
        rate,
        eta,
        xi,
        lambda1: eta.lambda1,
        lambda2: Complex64::new(0.0, -k / rate),
        delta_raw,
        delta: reduce_angle(delta_raw),
        terms,
        norm: normalization(&eta, k, rate)?,
    })
}

/// Phase shift reduced to `(-pi, pi]`.
pub fn phase_shift(e: f64, qn: &QuantumNumbers, model: &Model) -> Result<f64> {
    scattering_state(e, qn, model).map(|s| s.delta)
}

pub fn scatter_normalization(e: f64, qn: &QuantumNumbers, model: &Model) -> Result<f64> {
    scattering_state(e, qn, model).map(|s| s.norm)
}

/// `F(r) = N s^{-ik/rate} (1 - s)^{lambda1} 2F1(eta1, eta2; eta3; 1 - s)`, `s = q e^{-2 alpha r}`.
///
/// Real up to rounding; vanishes at the singular point and tends to
/// `2 sin(k r + delta - pi/2 (l + (D - 3)/2))`.
pub fn scattering_wavefunction(r: f64, state: &ScatteringState, model: &Model) -> Result<Complex64> {
    let p = &model.potential;
    if !r.is_finite() || r <= p.singular_point() {
        return Err(Error::Domain(format!(
            "r = {r} at or below the singular point {}",
            p.singular_point()
        )));
    }
    let log_s = p.q.ln() - 2.0 * p.alpha * r;
    let s = log_s.exp();
    if s == 0.0 {
        return Err(Error::Domain(format!("r = {r} is beyond the representable range")));
    }
    let one_minus_s = -log_s.exp_m1();
    let f = hyp2f1_complement(state.eta.eta1, state.eta.eta2, state.eta.eta3, Complex64::new(s, 0.0))?.value;
    let prefactor = (state.lambda2 * log_s + state.lambda1 * one_minus_s.ln()).exp();
    Ok(state.norm * prefactor * f)
}

/// Large-`r` form `2 sin(k r + delta - pi/2 (l + (D - 3)/2))`.
pub fn scattering_asymptote(r: f64, state: &ScatteringState) -> f64 {
    let qn = state.qn;
    let shift = FRAC_PI_2 * (qn.l as f64 + 0.5 * (qn.d as f64 - 3.0));
    2.0 * (state.k * r + state.delta_raw - shift).sin()
}
