use std::f64::consts::PI;

use kgspec::bound::{omega_coeffs, riccati_residual, susy_factors, Model, OmegaCoefficients, QuantumNumbers};
use kgspec::potential::{MassParams, PotentialParams};
use kgspec::scatter::{distance_mod_pi, reduce_angle};
use kgspec::specfun::{hyp2f1, log_gamma, Complex};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = PotentialParams> {
    (-3.0f64..3.0, -1.0f64..1.0, -1.0f64..1.0, -3.0f64..3.0, 0.2f64..2.0, 0.01f64..1.0)
        .prop_map(|(v0, v1, s0, s1, q, alpha)| PotentialParams { v0, v1, s0, s1, q, alpha })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn riccati_holds_for_any_coefficients(
        p in params(),
        w1 in -2.0f64..2.0,
        w2 in -2.0f64..2.0,
        w3 in -2.0f64..2.0,
        t in 0.05f64..10.0,
    ) {
        let om = OmegaCoefficients { omega1: w1, omega2: w2, omega3: w3, gamma: 0.0 };
        prop_assume!(om.sigma_sum(p.q) / (p.alpha * p.q).powi(2) > -1.0);
        let f = susy_factors(&om, &p).unwrap();
        let r = p.r_floor() + t / p.alpha;
        let residual = riccati_residual(r, &f, &om, &p).unwrap();
        let scale = 1.0 + f.p * f.p + f.q * f.q + om.effective(p.decay(r), p.q).abs();
        prop_assert!(residual.abs() < 1e-10 * scale);
    }

    #[test]
    fn coefficients_depend_on_d_plus_2l(
        p in params(),
        m0 in -5.0f64..5.0,
        m1 in -1.0f64..1.0,
        e in -3.0f64..3.0,
        n in 0usize..4,
        l in 1usize..5,
        d in 1usize..6,
    ) {
        let model = Model::new(p, MassParams { m0, m1 });
        let a = omega_coeffs(e, &QuantumNumbers::new(n, l, d), &model);
        let b = omega_coeffs(e, &QuantumNumbers::new(n, l - 1, d + 2), &model);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn hyp2f1_symmetry(
        ar in -2.0f64..2.0, ai in -1.0f64..1.0,
        br in -2.0f64..2.0, bi in -1.0f64..1.0,
        cr in 0.5f64..3.0, ci in -1.0f64..1.0,
        x in -0.9f64..0.95,
    ) {
        let (a, b, c) = (Complex::new(ar, ai), Complex::new(br, bi), Complex::new(cr, ci));
        let z = Complex::new(x, 0.0);
        let f = hyp2f1(a, b, c, z).unwrap();
        let g = hyp2f1(b, a, c, z).unwrap();
        prop_assert!((f - g).norm() <= 1e-12 * f.norm().max(1.0));
    }

    #[test]
    fn log_gamma_conjugate_symmetry(re in -6.0f64..10.0, im in 0.1f64..10.0) {
        let z = Complex::new(re, im);
        let a = log_gamma(z).unwrap();
        let b = log_gamma(z.conj()).unwrap();
        prop_assert!((a - b.conj()).norm() < 1e-11 * a.norm().max(1.0));
    }

    #[test]
    fn angle_reduction(x in -100.0f64..100.0) {
        let y = reduce_angle(x);
        prop_assert!(y > -PI && y <= PI);
        prop_assert!(distance_mod_pi(x, y) < 1e-12);
    }
}
