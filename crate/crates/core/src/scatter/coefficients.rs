use num_complex::Complex64;
use serde::Serialize;

use crate::bound::{chi_coeffs, ChiCoefficients, Model, QuantumNumbers};
use crate::error::{Error, Result};

/// Coefficients of the equation in `x = 1 - s`, signed so that
/// `k^2 = 4 alpha^2 xi2` above threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XiCoefficients {
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
}

impl XiCoefficients {
    pub fn from_chis(chi: &ChiCoefficients) -> Self {
        XiCoefficients {
            xi1: chi.chi2 - chi.chi1 - chi.chi3,
            xi2: -chi.chi3,
            xi3: chi.chi1,
        }
    }

    /// `sqrt(xi3)` on the principal branch; imaginary when `xi3 < 0`.
    pub fn sqrt_xi3(&self) -> Complex64 {
        Complex64::new(self.xi3, 0.0).sqrt()
    }

    /// `lambda1 = (1 + sqrt(1 - 4 xi1)) / 2`, the exponent at the singular point.
    pub fn lambda1(&self) -> Result<f64> {
        let radicand = 1.0 - 4.0 * self.xi1;
        if radicand < 0.0 {
            return Err(Error::Parameter(format!(
                "1 - 4 xi1 = {radicand} < 0: complex exponent at the singular point"
            )));
        }
        Ok(0.5 * (1.0 + radicand.sqrt()))
    }
}

pub fn xi_coeffs(e: f64, qn: &QuantumNumbers, model: &Model) -> XiCoefficients {
    XiCoefficients::from_chis(&chi_coeffs(e, qn, model))
}

/// Scale of the exponential variable: `s = q e^{-rate r}`, i.e. `rate = 2 alpha`.
pub fn rate(model: &Model) -> f64 {
    2.0 * model.potential.alpha
}

/// `k = sqrt(4 alpha^2 xi2)`.
pub fn wave_number(e: f64, qn: &QuantumNumbers, model: &Model) -> Result<f64> {
    let xi = xi_coeffs(e, qn, model);
    let a = model.potential.alpha;
    let k2 = 4.0 * a * a * xi.xi2;
    if !(k2 > 0.0) {
        return Err(Error::BelowThreshold { energy: e });
    }
    Ok(k2.sqrt())
}

/// `(eta1, eta2, eta3)` and `lambda1` for wave number `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaParams {
    pub eta1: Complex64,
    pub eta2: Complex64,
    pub eta3: Complex64,
    pub lambda1: f64,
}

/// `eta_{1,2} = lambda1 - i k/rate +- sqrt(xi3)`, `eta3 = 2 lambda1`.
pub fn eta_params(xi: &XiCoefficients, k: f64, rate: f64) -> Result<EtaParams> {
    let lambda1 = xi.lambda1()?;
    let shift = Complex64::new(lambda1, -k / rate);
    let root = xi.sqrt_xi3();
    Ok(EtaParams {
        eta1: shift + root,
        eta2: shift - root,
        eta3: Complex64::new(2.0 * lambda1, 0.0),
        lambda1,
    })
}
