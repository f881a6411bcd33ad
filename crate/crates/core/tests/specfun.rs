use std::f64::consts::PI;

use kgspec::quadrature::tanh_sinh;
use kgspec::specfun::{
    gamma, gamma_arg, hyp2f1, hyp2f1_connection, hyp2f1_detailed, hyp2f1_series, jacobi_poly, log_gamma, Complex,
    Hyp2f1Route, C_PERTURBATION,
};
use kgspec::Error;

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Stirling series after shifting the argument up by 20 with the recurrence.
fn stirling_log_gamma(z: Complex) -> Complex {
    const SHIFT: usize = 20;
    // B_{2k} / (2k (2k - 1)), k = 1..10
    const COEFFS: [f64; 10] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360360.0,
        1.0 / 156.0,
        -3617.0 / 122400.0,
        43867.0 / 244188.0,
        -174611.0 / 125400.0,
    ];
    let w = z + SHIFT as f64;
    let mut s = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln();
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut p = inv;
    for a in COEFFS {
        s += a * p;
        p *= inv2;
    }
    for k in 0..SHIFT {
        s -= (z + k as f64).ln();
    }
    s
}

/// Small deterministic generator for the random grids.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> f64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }

    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next()
    }
}

#[test]
fn log_gamma_matches_stirling() {
    let z = c(2.3, 1.7);
    let oracle = stirling_log_gamma(z);
    // frozen from the Stirling evaluation above
    let expected = c(-0.5481359172186004, 1.214946281238399);
    assert!((oracle - expected).norm() < 1e-13);
    assert!((log_gamma(z).unwrap() - expected).norm() < 1e-12);
}

#[test]
fn gamma_matches_stirling() {
    let z = c(1.0, 2.0);
    let expected = c(0.15190400267003614, 0.019804880161854982);
    assert!((stirling_log_gamma(z).exp() - expected).norm() < 1e-13);
    assert!((gamma(z).unwrap() - expected).norm() < 1e-12);
}

#[test]
fn log_gamma_agrees_with_stirling_on_a_grid() {
    let mut rng = Lcg(7);
    for _ in 0..50 {
        let z = c(rng.range(0.1, 10.0), rng.range(-10.0, 10.0));
        let d = log_gamma(z).unwrap() - stirling_log_gamma(z);
        assert!(d.norm() < 1e-11 * stirling_log_gamma(z).norm().max(1.0), "{z}: {d}");
    }
}

#[test]
fn recurrence_on_random_grid() {
    let mut rng = Lcg(1);
    for _ in 0..100 {
        let z = c(rng.range(0.1, 10.0), rng.range(-10.0, 10.0));
        let lhs = log_gamma(z + 1.0).unwrap().exp();
        let rhs = z * log_gamma(z).unwrap().exp();
        assert!((lhs - rhs).norm() <= 1e-11 * rhs.norm(), "{z}");
    }
}

#[test]
fn reflection() {
    for z in [c(0.3, 0.4), c(-2.7, 1.1), c(-0.5, -3.0), c(0.25, 0.0)] {
        let lhs = gamma(z).unwrap() * gamma(1.0 - z).unwrap();
        let rhs = PI / (PI * z).sin();
        assert!((lhs - rhs).norm() <= 1e-11 * rhs.norm(), "{z}");
    }
}

#[test]
fn modulus_on_imaginary_axis() {
    for y in [0.5, 1.0, 2.0, 5.0] {
        let g = gamma(c(0.0, y)).unwrap();
        let exact = PI / (y * (PI * y).sinh());
        assert!((g.norm_sqr() - exact).abs() <= 1e-11 * exact);
    }
}

#[test]
fn gamma_poles() {
    for z in [0.0, -1.0, -7.0] {
        assert!(matches!(gamma(c(z, 0.0)), Err(Error::Pole { .. })));
    }
    assert!(matches!(gamma(c(-3.0 + 1e-13, 0.0)), Err(Error::Pole { .. })));
    assert!(gamma(c(-3.0 + 1e-6, 0.0)).is_ok());
}

#[test]
fn gamma_arg_is_continuous_along_a_line() {
    // arg Gamma(1 + i y) unwrapped versus summed increments of Im log Gamma
    let mut prev = gamma_arg(c(1.0, 0.0)).unwrap();
    for i in 1..200 {
        let y = i as f64 * 0.05;
        let a = gamma_arg(c(1.0, y)).unwrap();
        assert!((a - prev).abs() < 0.2, "jump at y = {y}");
        prev = a;
    }
}

#[test]
fn hyp2f1_at_zero_is_one() {
    for (a, b, cc) in [(c(0.3, 1.0), c(2.0, -1.0), c(1.5, 0.2)), (c(-4.0, 0.0), c(7.0, 0.0), c(0.5, 0.0))] {
        assert_eq!(hyp2f1(a, b, cc, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
    }
}

#[test]
fn connection_formula_at_seven_tenths() {
    let mut rng = Lcg(3);
    for _ in 0..20 {
        let a = c(rng.range(-1.5, 1.5), rng.range(-1.0, 1.0));
        let b = c(rng.range(-1.5, 1.5), rng.range(-1.0, 1.0));
        let cc = c(rng.range(0.5, 3.0), rng.range(-1.0, 1.0));
        let z = c(0.7, 0.0);
        let series = hyp2f1_series(a, b, cc, z).unwrap();
        let connection = hyp2f1_connection(a, b, cc, z).unwrap();
        assert!((series - connection).norm() <= 1e-10 * series.norm().max(1.0), "{a} {b} {cc}");
    }
}

#[test]
fn frozen_connection_value() {
    let (a, b, cc) = (c(0.3, 0.2), c(1.1, -0.4), c(2.2, 0.1));
    let z = c(0.7, 0.0);
    // frozen from the direct series
    let expected = c(1.2048591803700805, 0.03137807452018045);
    assert!((hyp2f1_series(a, b, cc, z).unwrap() - expected).norm() < 1e-12);
    assert!((hyp2f1(a, b, cc, z).unwrap() - expected).norm() < 1e-10);
}

#[test]
fn symmetric_in_upper_parameters() {
    let mut rng = Lcg(11);
    for _ in 0..30 {
        let a = c(rng.range(-2.0, 2.0), rng.range(-1.0, 1.0));
        let b = c(rng.range(-2.0, 2.0), rng.range(-1.0, 1.0));
        let cc = c(rng.range(0.5, 3.0), rng.range(-1.0, 1.0));
        let z = c(rng.range(-0.9, 0.95), 0.0);
        let f = hyp2f1(a, b, cc, z).unwrap();
        let g = hyp2f1(b, a, cc, z).unwrap();
        assert!((f - g).norm() <= 1e-12 * f.norm().max(1.0));
    }
}

#[test]
fn derivative_identity() {
    let (a, b, cc) = (c(0.4, 0.3), c(1.2, -0.5), c(2.1, 0.2));
    for x in [0.2, 0.45, 0.6, 0.8, -0.6] {
        let h = 1e-5;
        let fd = (hyp2f1(a, b, cc, c(x + h, 0.0)).unwrap() - hyp2f1(a, b, cc, c(x - h, 0.0)).unwrap()) / (2.0 * h);
        let exact = a * b / cc * hyp2f1(a + 1.0, b + 1.0, cc + 1.0, c(x, 0.0)).unwrap();
        assert!((fd - exact).norm() <= 1e-6 * exact.norm(), "x = {x}");
    }
}

#[test]
fn elementary_closed_forms() {
    for x in [0.3, 0.7, 0.95, -0.8] {
        // 2F1(a, b; b; z) = (1 - z)^{-a}
        let f = hyp2f1(c(0.3, 0.0), c(1.7, 0.0), c(1.7, 0.0), c(x, 0.0)).unwrap();
        let exact = (1.0 - x).powf(-0.3);
        assert!((f.re - exact).abs() < 1e-12 * exact && f.im.abs() < 1e-12, "x = {x}: {f}");
        // 2F1(1/2, 1/2; 3/2; z^2) = asin(z) / z
        let s = x.abs().sqrt();
        let f = hyp2f1(c(0.5, 0.0), c(0.5, 0.0), c(1.5, 0.0), c(s * s, 0.0)).unwrap();
        let exact = s.asin() / s;
        assert!((f.re - exact).abs() < 1e-12 * exact, "x = {x}: {f}");
    }
}

#[test]
fn degenerate_connection_is_perturbed() {
    // c - a - b = 0: 2F1(1, 1; 2; z) = -ln(1 - z) / z, reached with c shifted
    let r = hyp2f1_detailed(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(0.7, 0.0)).unwrap();
    assert_eq!(r.route, Hyp2f1Route::OneMinusZ);
    assert_eq!(r.c_shift, C_PERTURBATION);
    let exact = -(0.3f64).ln() / 0.7;
    assert!((r.value.re - exact).abs() < 1e-5);
}

#[test]
fn outside_unit_disc_is_an_error() {
    assert!(matches!(hyp2f1(c(0.5, 0.0), c(0.5, 0.0), c(1.5, 0.0), c(1.2, 0.0)), Err(Error::Domain(_))));
}

/// Explicit finite sum for `P_n^{(mu, nu)}(x)`.
fn jacobi_sum(n: usize, mu: f64, nu: f64, x: f64) -> f64 {
    let binom = |top: f64, k: usize| (0..k).fold(1.0, |acc, j| acc * (top - j as f64) / (j + 1) as f64);
    (0..=n)
        .map(|s| binom(n as f64 + mu, n - s) * binom(n as f64 + nu, s) * ((x - 1.0) / 2.0).powi(s as i32) * ((x + 1.0) / 2.0).powi((n - s) as i32))
        .sum()
}

#[test]
fn jacobi_matches_finite_sum() {
    for n in 0..=8 {
        for (mu, nu) in [(0.0, 0.0), (1.5, 0.3), (2.0, 4.7), (0.2, -0.4)] {
            for x in [-0.9, -0.3, 0.0, 0.55, 1.0] {
                let p = jacobi_poly(n, mu, nu, x).unwrap();
                let q = jacobi_sum(n, mu, nu, x);
                assert!((p - q).abs() < 1e-12 * q.abs().max(1.0), "n={n} mu={mu} nu={nu} x={x}");
            }
        }
    }
}

#[test]
fn jacobi_endpoint() {
    for n in 0..=6 {
        for mu in [0.0, 0.7, 2.5] {
            let binom = (0..n).fold(1.0, |acc, j| acc * (n as f64 + mu - j as f64) / (j + 1) as f64);
            let p = jacobi_poly(n, mu, 1.3, 1.0).unwrap();
            assert!((p - binom).abs() < 1e-12 * binom.max(1.0));
        }
    }
}

#[test]
fn jacobi_orthogonality() {
    let (mu, nu) = (0.8, 1.6);
    for n in 0..=6 {
        for m in 0..n {
            let v = tanh_sinh(
                |x, da, db| db.powf(mu) * da.powf(nu) * jacobi_poly(n, mu, nu, x).unwrap() * jacobi_poly(m, mu, nu, x).unwrap(),
                -1.0,
                1.0,
                1e-12,
            )
            .unwrap();
            assert!(v.abs() < 1e-8, "n={n} m={m}: {v}");
        }
    }
}
