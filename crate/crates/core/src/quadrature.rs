//! Double-exponential (tanh-sinh) quadrature.
//!
//! This is the trapezoidal rule applied after the substitution
//! `x = tanh(pi/2 sinh t)`, refined by halving the step until two successive
//! levels agree. Integrable endpoint singularities are handled without special
//! casing, which is what the wavefunction normalizations and the Jacobi weight
//! need.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

const MAX_LEVEL: usize = 14;
const T_MAX: f64 = 4.5;

/// `int_a^b f(x) dx`, converged to `tol` relative to `int_a^b |f(x)| dx`.
///
/// `f` receives the abscissa together with its distances to `a` and `b`,
/// which stay accurate where `x` itself rounds onto an endpoint.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64, f64, f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) || b <= a {
        return Err(Error::Domain(format!("bad interval [{a}, {b}]")));
    }
    let half = 0.5 * (b - a);
    let node = |t: f64| -> (f64, f64) {
        let u = FRAC_PI_2 * t.sinh();
        let cu = u.cosh();
        let w = half * FRAC_PI_2 * t.cosh() / (cu * cu);
        if w == 0.0 {
            return (0.0, 0.0);
        }
        // distance to the nearer endpoint: half * e^{-|u|} / cosh u
        let near = half * (-u.abs()).exp() / cu;
        let far = (b - a) - near;
        let (da, db) = if u < 0.0 { (near, far) } else { (far, near) };
        let x = if u < 0.0 { a + da } else { b - db };
        if da <= 0.0 || db <= 0.0 {
            return (0.0, 0.0);
        }
        let v = w * f(x, da, db);
        (v, v.abs())
    };
    let add = |acc: &mut (f64, f64), t: f64| {
        let (a, b) = node(t);
        let (c, d) = node(-t);
        acc.0 += a + c;
        acc.1 += b + d;
    };

    let mut h = 1.0;
    let mut sum = node(0.0);
    let mut k = 1;
    while (k as f64) * h <= T_MAX {
        add(&mut sum, k as f64 * h);
        k += 1;
    }
    let mut estimate = h * sum.0;
    for _ in 0..MAX_LEVEL {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= T_MAX {
            add(&mut sum, k as f64 * h);
            k += 2;
        }
        let next = h * sum.0;
        let scale = h * sum.1;
        if !next.is_finite() {
            return Err(Error::Domain("integrand is not finite".into()));
        }
        if (next - estimate).abs() <= tol * scale || scale == 0.0 {
            return Ok(next);
        }
        estimate = next;
    }
    Err(Error::NonConvergence { terms: 1 << MAX_LEVEL })
}
