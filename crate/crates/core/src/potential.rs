//! q-deformed hyperbolic functions and the potential family.
//!
//! With `y = e^{-2 alpha r}` every radial function here is a rational function
//! of `y` with denominator `1 - q y`, which vanishes at the singular point
//! `r_s = ln(q) / (2 alpha)`. For `q <= 1` that point is at or left of the
//! origin, so the whole half-line `r > 0` is usable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialParams {
    pub v0: f64,
    pub v1: f64,
    pub s0: f64,
    pub s1: f64,
    pub q: f64,
    pub alpha: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassParams {
    pub m0: f64,
    pub m1: f64,
}

impl PotentialParams {
    pub fn validate(&self) -> Result<()> {
        let all = [self.v0, self.v1, self.s0, self.s1, self.q, self.alpha];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::Parameter("potential parameters must be finite".into()));
        }
        if self.alpha <= 0.0 {
            return Err(Error::Parameter(format!("alpha must be positive, got {}", self.alpha)));
        }
        if self.q <= 0.0 {
            return Err(Error::Parameter(format!("q must be positive, got {}", self.q)));
        }
        Ok(())
    }

    /// Zero of `1 - q e^{-2 alpha r}`.
    pub fn singular_point(&self) -> f64 {
        self.q.ln() / (2.0 * self.alpha)
    }

    /// Lower edge of the physical domain: the origin, or the singular point when `q > 1`.
    pub fn r_floor(&self) -> f64 {
        self.singular_point().max(0.0)
    }

    /// `e^{-2 alpha r}`.
    pub fn decay(&self, r: f64) -> f64 {
        (-2.0 * self.alpha * r).exp()
    }

    pub(crate) fn check_r(&self, r: f64) -> Result<()> {
        if !r.is_finite() || r < 0.0 || r <= self.singular_point() {
            return Err(Error::Domain(format!(
                "r = {r} outside the domain (floor {})",
                self.r_floor()
            )));
        }
        Ok(())
    }

    /// Hulthén-family couplings `-c0 y/(1-qy) + c1 (1+qy)/(1-qy)`.
    fn coupling(&self, r: f64, c0: f64, c1: f64) -> Result<f64> {
        self.check_r(r)?;
        let y = self.decay(r);
        let den = 1.0 - self.q * y;
        Ok((-c0 * y + c1 * (1.0 + self.q * y)) / den)
    }
}

impl MassParams {
    pub fn validate(&self) -> Result<()> {
        if !self.m0.is_finite() || !self.m1.is_finite() {
            return Err(Error::Parameter("mass parameters must be finite".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QHyperbolic {
    Sinh,
    Cosh,
    Tanh,
    Coth,
    Csch,
}

/// q-deformed hyperbolic functions, `sinh_q x = (e^x - q e^{-x}) / 2`.
pub fn q_hyperbolic(kind: QHyperbolic, x: f64, q: f64) -> Result<f64> {
    let (ep, em) = (x.exp(), q * (-x).exp());
    let sinh = 0.5 * (ep - em);
    let cosh = 0.5 * (ep + em);
    let nonzero_sinh = || {
        if sinh == 0.0 || (x - 0.5 * q.ln()).abs() <= 1e-14 * (1.0 + x.abs()) {
            Err(Error::Domain(format!("sinh_q vanishes at x = {x} for q = {q}")))
        } else {
            Ok(sinh)
        }
    };
    match kind {
        QHyperbolic::Sinh => Ok(sinh),
        QHyperbolic::Cosh => Ok(cosh),
        QHyperbolic::Tanh => Ok(sinh / cosh),
        QHyperbolic::Coth => Ok(cosh / nonzero_sinh()?),
        QHyperbolic::Csch => Ok(1.0 / nonzero_sinh()?),
    }
}

/// `V(r) = -V0 y/(1-qy) + V1 (1+qy)/(1-qy)`.
pub fn vector_potential(r: f64, p: &PotentialParams) -> Result<f64> {
    p.coupling(r, p.v0, p.v1)
}

/// `S(r)`, same form as [`vector_potential`] with `S0`, `S1`.
pub fn scalar_potential(r: f64, p: &PotentialParams) -> Result<f64> {
    p.coupling(r, p.s0, p.s1)
}

/// Position-dependent mass `m0 + m1 / (1 - q y)`.
pub fn mass_at(r: f64, m: &MassParams, p: &PotentialParams) -> Result<f64> {
    p.check_r(r)?;
    Ok(m.m0 + m.m1 / (1.0 - p.q * p.decay(r)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CentrifugalScheme {
    /// `1 / r^2`.
    Exact,
    /// `4 alpha^2 [c0 + y/(1-y) + (y/(1-y))^2]`, the q = 1 form.
    GreeneAldrich { c0: f64 },
    /// `alpha^2 / sinh_q^2(alpha r)`.
    Hyperbolic,
}

impl CentrifugalScheme {
    pub const DEFAULT_C0: f64 = 1.0 / 12.0;

    pub fn greene_aldrich() -> Self {
        CentrifugalScheme::GreeneAldrich { c0: Self::DEFAULT_C0 }
    }
}

/// Approximations to `1 / r^2`.
pub fn centrifugal(r: f64, p: &PotentialParams, scheme: CentrifugalScheme) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!("centrifugal term needs r > 0, got {r}")));
    }
    let a = p.alpha;
    match scheme {
        CentrifugalScheme::Exact => Ok(1.0 / (r * r)),
        CentrifugalScheme::GreeneAldrich { c0 } => {
            let y = (-2.0 * a * r).exp();
            let u = y / (1.0 - y);
            Ok(4.0 * a * a * (c0 + u + u * u))
        }
        CentrifugalScheme::Hyperbolic => {
            let s = q_hyperbolic(QHyperbolic::Sinh, a * r, p.q)?;
            if s == 0.0 {
                return Err(Error::Domain(format!("sinh_q vanishes at r = {r}")));
            }
            Ok(a * a / (s * s))
        }
    }
}
