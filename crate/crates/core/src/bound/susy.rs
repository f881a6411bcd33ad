use serde::Serialize;

use super::coefficients::{
    energy_tilde, omega_coeffs, Model, OmegaCoefficients, QuantumNumbers,
};
use crate::error::{Error, Result};
use crate::potential::PotentialParams;

/// Sign in front of the square root in `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    /// `Q = -alpha q (1 + sqrt(...))`; the only branch whose ground state
    /// vanishes at the singular point.
    Minus,
}

/// Superpotential `W = P + Q y / (1 - q y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SusyFactors {
    pub p: f64,
    pub q: f64,
    pub branch: Branch,
}

fn discriminant(om: &OmegaCoefficients, p: &PotentialParams) -> f64 {
    let aq = p.alpha * p.q;
    1.0 + om.sigma_sum(p.q) / (aq * aq)
}

/// Decay constant `(rho^2 - w1 + w3 q^2) / (2 q rho)` attached to a given `rho`.
pub fn decay_constant(rho: f64, om: &OmegaCoefficients, p: &PotentialParams) -> Result<f64> {
    if rho == 0.0 || !rho.is_finite() {
        return Err(Error::Degenerate { index: 0 });
    }
    let q = p.q;
    Ok((rho * rho - om.omega1 + om.omega3 * q * q) / (2.0 * q * rho))
}

pub fn susy_factors_with_branch(
    om: &OmegaCoefficients,
    p: &PotentialParams,
    branch: Branch,
) -> Result<SusyFactors> {
    let disc = discriminant(om, p);
    if !(disc >= 0.0) {
        return Err(Error::Branch { discriminant: disc });
    }
    let root = disc.sqrt();
    let aq = p.alpha * p.q;
    let q = match branch {
        Branch::Plus => aq * (root - 1.0),
        Branch::Minus => -aq * (root + 1.0),
    };
    if q == 0.0 {
        return Err(Error::Degenerate { index: 0 });
    }
    let p_factor = decay_constant(q, om, p)?;
    Ok(SusyFactors { p: p_factor, q, branch })
}

/// Factors on the normalizable branch.
pub fn susy_factors(om: &OmegaCoefficients, p: &PotentialParams) -> Result<SusyFactors> {
    susy_factors_with_branch(om, p, Branch::Minus)
}

fn check_domain(r: f64, p: &PotentialParams) -> Result<(f64, f64)> {
    if !r.is_finite() || r <= p.singular_point() {
        return Err(Error::Domain(format!(
            "r = {r} at or below the singular point {}",
            p.singular_point()
        )));
    }
    let y = p.decay(r);
    Ok((y, 1.0 - p.q * y))
}

pub fn superpotential(r: f64, f: &SusyFactors, p: &PotentialParams) -> Result<f64> {
    let (y, den) = check_domain(r, p)?;
    Ok(f.p + f.q * y / den)
}

/// `dW/dr = -2 alpha Q y / (1 - q y)^2`.
pub fn superpotential_derivative(r: f64, f: &SusyFactors, p: &PotentialParams) -> Result<f64> {
    let (y, den) = check_domain(r, p)?;
    Ok(-2.0 * p.alpha * f.q * y / (den * den))
}

/// `(V+, V-) = (W^2 + W', W^2 - W')`.
pub fn partner_potentials(r: f64, f: &SusyFactors, p: &PotentialParams) -> Result<(f64, f64)> {
    let w = superpotential(r, f, p)?;
    let dw = superpotential_derivative(r, f, p)?;
    Ok((w * w + dw, w * w - dw))
}

/// `rho_k = Q - 2 alpha q k`.
pub fn rho(k: usize, f: &SusyFactors, p: &PotentialParams) -> f64 {
    f.q - 2.0 * p.alpha * p.q * k as f64
}

/// Energy gained between levels `k - 1` and `k`: `P(rho_{k-1})^2 - P(rho_k)^2`.
pub fn shape_invariance_remainder(
    k: usize,
    f: &SusyFactors,
    om: &OmegaCoefficients,
    p: &PotentialParams,
) -> Result<f64> {
    if k == 0 {
        return Err(Error::Parameter("shape-invariance index starts at 1".into()));
    }
    let prev = decay_constant(rho(k - 1, f, p), om, p).map_err(|_| Error::Degenerate { index: k - 1 })?;
    let curr = decay_constant(rho(k, f, p), om, p).map_err(|_| Error::Degenerate { index: k })?;
    Ok(prev * prev - curr * curr)
}

/// Factors of the `k`-th partner in the hierarchy: `Q -> rho_k`.
pub fn shifted_factors(k: usize, f: &SusyFactors, om: &OmegaCoefficients, p: &PotentialParams) -> Result<SusyFactors> {
    let r = rho(k, f, p);
    let pk = decay_constant(r, om, p).map_err(|_| Error::Degenerate { index: k })?;
    Ok(SusyFactors { p: pk, q: r, branch: f.branch })
}

/// Ground-state `E~_0 = w3 - P^2` straight from `Q`.
pub fn ground_energy_tilde(f: &SusyFactors, om: &OmegaCoefficients) -> f64 {
    om.omega3 - f.p * f.p
}

/// Pieces of the level condition at a trial energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LevelCondition {
    pub residual: f64,
    /// Decay constant `P_n`; a physical bound state has `P_n > 0`.
    pub decay: f64,
    pub rho: f64,
}

/// `g(E) = w3 - P_n^2 - (E^2 - m0^2)` with every coefficient at `E`.
pub fn level_condition(e: f64, qn: &QuantumNumbers, model: &Model) -> Result<LevelCondition> {
    let om = omega_coeffs(e, qn, model);
    let f = susy_factors(&om, &model.potential)?;
    let rho_n = rho(qn.n, &f, &model.potential);
    let decay = decay_constant(rho_n, &om, &model.potential).map_err(|_| Error::Degenerate { index: qn.n })?;
    let residual = om.omega3 - decay * decay - energy_tilde(e, &model.mass);
    Ok(LevelCondition { residual, decay, rho: rho_n })
}

pub fn energy_residual(e: f64, qn: &QuantumNumbers, model: &Model) -> Result<f64> {
    level_condition(e, qn, model).map(|c| c.residual)
}

/// `sigma = (q/2)(1 + sqrt(1 + (w1 + w2 q + w3 q^2)/(alpha q)^2))`.
pub fn sigma(om: &OmegaCoefficients, p: &PotentialParams) -> Result<f64> {
    let disc = discriminant(om, p);
    if !(disc >= 0.0) {
        return Err(Error::Branch { discriminant: disc });
    }
    Ok(0.5 * p.q * (1.0 + disc.sqrt()))
}

/// The level condition written through `sigma`:
/// `E^2 - m0^2 = w3 - [(w3 q^2 - w1)/(2 alpha (q n + sigma)) + 2 alpha (q n + sigma)]^2 / (4 q^2)`.
pub fn energy_residual_sigma(e: f64, qn: &QuantumNumbers, model: &Model) -> Result<f64> {
    let om = omega_coeffs(e, qn, model);
    let p = &model.potential;
    let s = sigma(&om, p)?;
    let x = 2.0 * p.alpha * (p.q * qn.n as f64 + s);
    if x == 0.0 {
        return Err(Error::Degenerate { index: qn.n });
    }
    let bracket = (om.omega3 * p.q * p.q - om.omega1) / x + x;
    Ok(om.omega3 - bracket * bracket / (4.0 * p.q * p.q) - energy_tilde(e, &model.mass))
}

/// `W^2 - W' - [V_eff(r) - E~_0]`, zero for every `r` when the factors solve the Riccati equation.
pub fn riccati_residual(
    r: f64,
    f: &SusyFactors,
    om: &OmegaCoefficients,
    p: &PotentialParams,
) -> Result<f64> {
    let (_, minus) = partner_potentials(r, f, p)?;
    let veff = om.effective(p.decay(r), p.q);
    Ok(minus - (veff - ground_energy_tilde(f, om)))
}
