use num_complex::Complex64;

use super::gamma::{log_gamma, POLE_TOLERANCE};
use crate::error::{Error, Result};

/// Radius inside which the Gauss series is summed directly.
pub const SERIES_RADIUS: f64 = 0.5;
/// Maximum number of series terms before giving up.
pub const MAX_TERMS: usize = 100_000;
/// `c - a - b` closer than this to an integer triggers the `c` perturbation.
pub const DEGENERATE_GAP: f64 = 1e-8;
/// Size of the perturbation applied to `c` on the degenerate manifold.
pub const C_PERTURBATION: f64 = 1e-6;

const SERIES_EPS: f64 = 1e-17;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hyp2f1Route {
    /// `z = 0` or a vanishing upper parameter.
    Trivial,
    /// Gauss series in `z`.
    Series,
    /// Connection formula to argument `1 - z`.
    OneMinusZ,
    /// Pfaff transformation to `z / (z - 1)`.
    Pfaff,
    /// Gauss summation at `z = 1`.
    UnitArgument,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp2f1 {
    pub value: Complex64,
    pub route: Hyp2f1Route,
    /// Shift applied to `c` when `c - a - b` sat on an integer; zero otherwise.
    pub c_shift: f64,
}

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im.abs() < POLE_TOLERANCE && z.re < POLE_TOLERANCE && (z.re - z.re.round()).abs() < POLE_TOLERANCE
}

fn check_finite(label: &str, z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{label} is not finite: {z}")))
    }
}

/// Direct Gauss series `sum (a)_k (b)_k / ((c)_k k!) z^k`.
///
/// Converges for `|z| < 1`; callers are expected to keep `|z|` well inside
/// the disc.
pub fn hyp2f1_series(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(c) {
        return Err(Error::Parameter(format!("c = {c} is a pole of 2F1")));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut quiet = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term.norm() == 0.0 {
            return Ok(sum);
        }
        if term.norm() <= SERIES_EPS * sum.norm() {
            quiet += 1;
            if quiet >= 2 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence { terms: MAX_TERMS })
}

/// `Gamma(num...) / Gamma(den...)`; zero when any denominator sits on a pole.
fn gamma_ratio(num: &[Complex64], den: &[Complex64]) -> Result<Complex64> {
    if den.iter().any(|d| is_nonpositive_integer(*d)) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut log = Complex64::new(0.0, 0.0);
    for n in num {
        log += log_gamma(*n)?;
    }
    for d in den {
        log -= log_gamma(*d)?;
    }
    Ok(log.exp())
}

/// Connection formula mapping argument `z` to `1 - z`.
///
/// `c - a - b` must not be an integer.
pub fn hyp2f1_connection(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    connection_from_complement(a, b, c, 1.0 - z)
}

fn connection_from_complement(a: Complex64, b: Complex64, c: Complex64, w: Complex64) -> Result<Complex64> {
    let s = c - a - b;
    let first = gamma_ratio(&[c, s], &[c - a, c - b])?;
    let second = gamma_ratio(&[c, -s], &[a, b])?;
    let mut value = Complex64::new(0.0, 0.0);
    if first.norm() != 0.0 {
        value += first * hyp2f1_series(a, b, 1.0 - s, w)?;
    }
    if second.norm() != 0.0 {
        value += second * w.powc(s) * hyp2f1_series(c - a, c - b, s + 1.0, w)?;
    }
    Ok(value)
}

/// `2F1(a, b; c; 1 - w)` with `w` supplied directly, for arguments so close
/// to 1 that forming `1 - w` would lose the digits of `w`.
pub fn hyp2f1_complement(a: Complex64, b: Complex64, c: Complex64, w: Complex64) -> Result<Hyp2f1> {
    check_finite("w", w)?;
    if w.norm() > SERIES_RADIUS || w == Complex64::new(0.0, 0.0) {
        return hyp2f1_detailed(a, b, c, 1.0 - w);
    }
    check_finite("a", a)?;
    check_finite("b", b)?;
    check_finite("c", c)?;
    if is_nonpositive_integer(c) {
        return Err(Error::Parameter(format!("c = {c} is a pole of 2F1")));
    }
    if (1.0 - w).norm() > 1.0 + 1e-14 {
        return Err(Error::Domain(format!("|1 - w| = {} exceeds 1", (1.0 - w).norm())));
    }
    let s = c - a - b;
    let degenerate = s.im.abs() < DEGENERATE_GAP && (s.re - s.re.round()).abs() < DEGENERATE_GAP;
    let c_shift = if degenerate { C_PERTURBATION } else { 0.0 };
    let value = connection_from_complement(a, b, c + c_shift, w)?;
    Ok(Hyp2f1 { value, route: Hyp2f1Route::OneMinusZ, c_shift })
}

/// Gauss hypergeometric function on the closed unit disc.
pub fn hyp2f1(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    hyp2f1_detailed(a, b, c, z).map(|h| h.value)
}

/// [`hyp2f1`] together with the evaluation route and any `c` perturbation.
pub fn hyp2f1_detailed(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Hyp2f1> {
    check_finite("a", a)?;
    check_finite("b", b)?;
    check_finite("c", c)?;
    check_finite("z", z)?;
    if is_nonpositive_integer(c) {
        return Err(Error::Parameter(format!("c = {c} is a pole of 2F1")));
    }
    let modulus = z.norm();
    if modulus > 1.0 + 1e-14 {
        return Err(Error::Domain(format!("|z| = {modulus} exceeds 1")));
    }
    let one = Complex64::new(1.0, 0.0);
    if z == Complex64::new(0.0, 0.0) || a == Complex64::new(0.0, 0.0) || b == Complex64::new(0.0, 0.0) {
        return Ok(Hyp2f1 { value: one, route: Hyp2f1Route::Trivial, c_shift: 0.0 });
    }
    if modulus <= SERIES_RADIUS {
        let value = hyp2f1_series(a, b, c, z)?;
        return Ok(Hyp2f1 { value, route: Hyp2f1Route::Series, c_shift: 0.0 });
    }

    let s = c - a - b;
    let degenerate = s.im.abs() < DEGENERATE_GAP && (s.re - s.re.round()).abs() < DEGENERATE_GAP;

    if (z - 1.0).norm() < 1e-15 {
        if s.re <= 0.0 {
            return Err(Error::Domain(format!("z = 1 requires Re(c - a - b) > 0, got {}", s.re)));
        }
        let value = gamma_ratio(&[c, s], &[c - a, c - b])?;
        return Ok(Hyp2f1 { value, route: Hyp2f1Route::UnitArgument, c_shift: 0.0 });
    }

    let pfaff_arg = z / (z - 1.0);
    if (1.0 - z).norm() <= pfaff_arg.norm() {
        let c_shift = if degenerate { C_PERTURBATION } else { 0.0 };
        let value = hyp2f1_connection(a, b, c + c_shift, z)?;
        Ok(Hyp2f1 { value, route: Hyp2f1Route::OneMinusZ, c_shift })
    } else {
        let value = (1.0 - z).powc(-a) * hyp2f1_series(a, c - b, c, pfaff_arg)?;
        Ok(Hyp2f1 { value, route: Hyp2f1Route::Pfaff, c_shift: 0.0 })
    }
}
