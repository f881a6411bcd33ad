use super::coefficients::Model;
use super::solve::BoundState;
use crate::error::{Error, Result};
use crate::potential::PotentialParams;
use crate::quadrature::tanh_sinh;
use crate::specfun::jacobi_poly;

const NORM_TOL: f64 = 1e-10;

/// Normalized bound-state radial function
/// `U = N s^a (1 - s)^b P_n^{(2a, 2b - 1)}(1 - 2s)`, `s = q e^{-2 alpha r}`,
/// with `a = sqrt(chi3)` and `b = 1/2 + sqrt(1/4 + chi1 - chi2 + chi3)`.
///
/// The domain is `r > ln(q) / (2 alpha)`, where `s < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundWavefunction {
    pub n: usize,
    /// Exponent of `s`.
    pub tail: f64,
    /// Exponent of `1 - s`.
    pub origin: f64,
    pub norm: f64,
    potential: PotentialParams,
}

impl BoundWavefunction {
    pub fn new(state: &BoundState, model: &Model) -> Result<Self> {
        let chi3 = state.chis.chi3;
        let radicand = state.chis.origin_radicand();
        if !(chi3 > 0.0) || !(radicand >= 0.0) {
            return Err(Error::Invariant(format!(
                "non-real exponents: chi3 = {chi3}, 1/4 + chi1 - chi2 + chi3 = {radicand}"
            )));
        }
        let mut wf = BoundWavefunction {
            n: state.qn.n,
            tail: chi3.sqrt(),
            origin: 0.5 + radicand.sqrt(),
            norm: 1.0,
            potential: model.potential,
        };
        // int U^2 dr = int_0^1 U(s)^2 ds / (2 alpha s)
        let integral = tanh_sinh(
            |_, s, one_minus_s| {
                let u = wf.unnormalized(s, one_minus_s);
                u * u / (2.0 * wf.potential.alpha * s)
            },
            0.0,
            1.0,
            NORM_TOL,
        )?;
        if !(integral > 0.0) || !integral.is_finite() {
            return Err(Error::Invariant(format!("normalization integral is {integral}")));
        }
        wf.norm = 1.0 / integral.sqrt();
        Ok(wf)
    }

    /// `s^a (1 - s)^b P_n(1 - 2s)` given `s` and `1 - s` separately.
    fn unnormalized(&self, s: f64, one_minus_s: f64) -> f64 {
        let log_env = self.tail * s.ln() + self.origin * one_minus_s.ln();
        let x = one_minus_s - s;
        let poly = jacobi_poly(self.n, 2.0 * self.tail, 2.0 * self.origin - 1.0, x).unwrap_or(f64::NAN);
        log_env.exp() * poly
    }

    pub fn eval(&self, r: f64) -> Result<f64> {
        let p = &self.potential;
        if !r.is_finite() || r <= p.singular_point() {
            return Err(Error::Domain(format!(
                "r = {r} at or below the singular point {}",
                p.singular_point()
            )));
        }
        // 1 - s computed without cancellation: -expm1(ln q - 2 alpha r)
        let log_s = p.q.ln() - 2.0 * p.alpha * r;
        let s = log_s.exp();
        let one_minus_s = -log_s.exp_m1();
        Ok(self.norm * self.unnormalized(s, one_minus_s))
    }

    /// Lower edge of the domain.
    pub fn domain_start(&self) -> f64 {
        self.potential.singular_point()
    }
}
