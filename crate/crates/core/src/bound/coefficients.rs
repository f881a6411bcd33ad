use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{MassParams, PotentialParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantumNumbers {
    pub n: usize,
    pub l: usize,
    /// Spatial dimension.
    pub d: usize,
}

impl QuantumNumbers {
    pub fn new(n: usize, l: usize, d: usize) -> Self {
        QuantumNumbers { n, l, d }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::Parameter("dimension D must be at least 1".into()));
        }
        Ok(())
    }

    /// Centrifugal constant `(D + 2l - 1)(D + 2l - 3) / 4`; depends on `D + 2l` only.
    pub fn gamma(&self) -> f64 {
        let k = (self.d + 2 * self.l) as f64;
        (k - 1.0) * (k - 3.0) / 4.0
    }
}

/// Which expansion of the radial coefficients to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientScheme {
    /// Coefficients obtained by expanding the radial equation directly.
    #[default]
    Reduced,
    /// The coefficient table in its published form, kept for comparison.
    Printed,
}

/// Everything that defines the interaction: potentials, mass, coefficient scheme.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Model {
    pub potential: PotentialParams,
    pub mass: MassParams,
    #[serde(default)]
    pub scheme: CoefficientScheme,
}

impl Model {
    pub fn new(potential: PotentialParams, mass: MassParams) -> Self {
        Model { potential, mass, scheme: CoefficientScheme::Reduced }
    }

    pub fn with_scheme(mut self, scheme: CoefficientScheme) -> Self {
        self.scheme = scheme;
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.potential.validate()?;
        self.mass.validate()
    }
}

/// Coefficients of `(w1 y^2 + w2 y + w3) / (1 - q y)^2`, `y = e^{-2 alpha r}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OmegaCoefficients {
    pub omega1: f64,
    pub omega2: f64,
    pub omega3: f64,
    pub gamma: f64,
}

impl OmegaCoefficients {
    /// `w1 + w2 q + w3 q^2`, the coefficient that fixes `Q`.
    pub fn sigma_sum(&self, q: f64) -> f64 {
        self.omega1 + self.omega2 * q + self.omega3 * q * q
    }

    /// The effective potential at `y`.
    pub fn effective(&self, y: f64, q: f64) -> f64 {
        let den = 1.0 - q * y;
        (self.omega1 * y * y + self.omega2 * y + self.omega3) / (den * den)
    }
}

/// Radial coefficients at energy `e`.
pub fn omega_coeffs(e: f64, qn: &QuantumNumbers, model: &Model) -> OmegaCoefficients {
    let PotentialParams { v0, v1, s0, s1, q, alpha } = model.potential;
    let MassParams { m0, m1 } = model.mass;
    let gamma = qn.gamma();
    let centrifugal = 4.0 * gamma * alpha * alpha;
    let (omega1, omega2, omega3) = match model.scheme {
        CoefficientScheme::Reduced => {
            let w1 = -v0 * v0 - q * q * v1 * v1 + 2.0 * q * e * v0 + 2.0 * q * v0 * v1
                - 2.0 * q * q * e * v1
                + s1 * s1 * q * q
                + s0 * s0
                - 2.0 * s0 * s1 * q
                - 2.0 * m0 * s1 * q * q
                + 2.0 * m0 * s0 * q;
            let w2 = -2.0 * e * v0 + 2.0 * v0 * v1 - 2.0 * q * v1 * v1 - 2.0 * m0 * s0
                + 2.0 * m1 * s1 * q
                - 2.0 * m1 * s0
                - 2.0 * m0 * m1 * q
                + 2.0 * s1 * s1 * q
                - 2.0 * s0 * s1
                + centrifugal;
            let w3 = 2.0 * e * v1 - v1 * v1 + (m1 + s1) * (m1 + s1) + 2.0 * m0 * (m1 + s1);
            (w1, w2, w3)
        }
        CoefficientScheme::Printed => {
            let w1 = 2.0 * m0 * s0 * q - 2.0 * m0 * s1 * q * q + 2.0 * e * v0 * q
                - 2.0 * e * v1 * q * q
                + s0 * s0
                + s1 * s1 * q * q
                - v0 * v0
                + v1 * v1 * q * q;
            let w2 = -2.0 * m0 * s0 - 2.0 * m1 * s0 + 2.0 * m1 * s1 * q - 2.0 * e * v0
                - 2.0 * s0 * s1 * q
                + 2.0 * s1 * s1 * q
                + 2.0 * v0 * v1 * q
                + 2.0 * v1 * v1 * q
                - 2.0 * m0 * m1 * q
                + centrifugal;
            // the m0 m2 product of the published table is read as m0 m1
            let w3 = 2.0 * m1 * s1 + 2.0 * m0 * s1 + 2.0 * e * v1 - 2.0 * s0 * s1 + s1 * s1
                + 2.0 * v0 * v1
                + v1 * v1
                + 2.0 * m0 * m1
                + m1 * m1;
            (w1, w2, w3)
        }
    };
    OmegaCoefficients { omega1, omega2, omega3, gamma }
}

/// `E^2 - m0^2`.
pub fn energy_tilde(e: f64, mass: &MassParams) -> f64 {
    e * e - mass.m0 * mass.m0
}

/// Coefficients of the equation in `s = q e^{-2 alpha r}`, signed so that
/// `chi3 > 0` for a bound state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiCoefficients {
    pub chi1: f64,
    pub chi2: f64,
    pub chi3: f64,
}

impl ChiCoefficients {
    /// `1/4 + chi1 - chi2 + chi3`, the radicand of the exponent at the singular point.
    pub fn origin_radicand(&self) -> f64 {
        0.25 + self.chi1 - self.chi2 + self.chi3
    }
}

pub fn chi_from_omegas(om: &OmegaCoefficients, e_tilde: f64, p: &PotentialParams) -> ChiCoefficients {
    let four_a2 = 4.0 * p.alpha * p.alpha;
    let q = p.q;
    ChiCoefficients {
        chi1: (om.omega1 / (q * q) - e_tilde) / four_a2,
        chi2: (-om.omega2 / q - 2.0 * e_tilde) / four_a2,
        chi3: (om.omega3 - e_tilde) / four_a2,
    }
}

pub fn chi_coeffs(e: f64, qn: &QuantumNumbers, model: &Model) -> ChiCoefficients {
    let om = omega_coeffs(e, qn, model);
    chi_from_omegas(&om, energy_tilde(e, &model.mass), &model.potential)
}
