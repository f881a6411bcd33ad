use kgspec::potential::{
    centrifugal, mass_at, q_hyperbolic, scalar_potential, vector_potential, CentrifugalScheme, MassParams,
    PotentialParams, QHyperbolic,
};
use kgspec::scatter::{HulthenParams, WoodsSaxonParams};
use kgspec::Error;
use proptest::prelude::*;

fn params(q: f64, alpha: f64) -> PotentialParams {
    PotentialParams { v0: 2.0, v1: 0.5, s0: 0.7, s1: 3.0, q, alpha }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]
    #[test]
    fn deformed_pythagoras(x in -5.0f64..5.0, q in 1e-3f64..=1.0) {
        let s = q_hyperbolic(QHyperbolic::Sinh, x, q).unwrap();
        let c = q_hyperbolic(QHyperbolic::Cosh, x, q).unwrap();
        prop_assert!((c * c - s * s - q).abs() < 1e-12 * c * c);
    }
}

#[test]
fn ratios_of_sinh_and_cosh() {
    let (x, q) = (0.8, 0.4);
    let s = q_hyperbolic(QHyperbolic::Sinh, x, q).unwrap();
    let c = q_hyperbolic(QHyperbolic::Cosh, x, q).unwrap();
    assert_eq!(q_hyperbolic(QHyperbolic::Tanh, x, q).unwrap(), s / c);
    assert_eq!(q_hyperbolic(QHyperbolic::Coth, x, q).unwrap(), c / s);
    assert_eq!(q_hyperbolic(QHyperbolic::Csch, x, q).unwrap(), 1.0 / s);
    // sinh_q vanishes at x = ln(q)/2
    assert!(matches!(q_hyperbolic(QHyperbolic::Csch, 0.5 * q.ln(), q), Err(Error::Domain(_))));
}

#[test]
fn far_field_limits() {
    for (q, alpha) in [(1.0, 0.01), (0.5, 0.3), (2.0, 1.0)] {
        let p = params(q, alpha);
        let m = MassParams { m0: -5.0, m1: -0.2 };
        let r = 50.0 / alpha;
        assert!((vector_potential(r, &p).unwrap() - p.v1).abs() < 1e-10);
        assert!((scalar_potential(r, &p).unwrap() - p.s1).abs() < 1e-10);
        assert!((mass_at(r, &m, &p).unwrap() - (m.m0 + m.m1)).abs() < 1e-10);
    }
}

#[test]
fn weak_screening_mass() {
    let p = params(0.5, 1e-8);
    let m = MassParams { m0: -5.0, m1: -0.2 };
    let expected = m.m0 + m.m1 / (1.0 - p.q);
    assert!((mass_at(1.0, &m, &p).unwrap() - expected).abs() < 1e-4);
}

#[test]
fn hulthen_form() {
    let h = HulthenParams { v0: 0.7, q: 0.6, alpha: 0.4, m0: 1.0 };
    let p = h.to_model().potential;
    for i in 1..=100 {
        let r = 0.1 * i as f64;
        let v = vector_potential(r, &p).unwrap();
        assert!((v - h.potential(r)).abs() <= 1e-14 * v.abs().max(1.0));
    }
}

#[test]
fn woods_saxon_form() {
    let ws = WoodsSaxonParams { v0: 0.3, radius: 2.0, theta: 1.5, m0: 1.0 };
    let h = ws.to_hulthen();
    for i in 1..=100 {
        let r = ws.theta + 0.07 * i as f64;
        let a = h.potential(r);
        let b = ws.potential(r).unwrap();
        assert!((a - b).abs() <= 1e-14 * b.abs().max(1.0), "r = {r}: {a} vs {b}");
    }
    assert!(ws.potential(ws.theta).is_err());
}

#[test]
fn domain_edges() {
    let p = params(2.0, 0.5);
    let rs = p.singular_point();
    assert!(rs > 0.0);
    assert_eq!(p.r_floor(), rs);
    assert!(matches!(vector_potential(rs, &p), Err(Error::Domain(_))));
    assert!(vector_potential(rs + 1e-6, &p).is_ok());
    let p = params(0.5, 0.5);
    assert!(p.singular_point() < 0.0);
    assert_eq!(p.r_floor(), 0.0);
    assert!(matches!(vector_potential(-0.1, &p), Err(Error::Domain(_))));
}

#[test]
fn invalid_parameters() {
    assert!(params(0.0, 0.1).validate().is_err());
    assert!(params(1.0, -0.1).validate().is_err());
    assert!(params(f64::NAN, 0.1).validate().is_err());
    assert!(MassParams { m0: f64::INFINITY, m1: 0.0 }.validate().is_err());
}

#[test]
fn centrifugal_approximations_near_origin() {
    let p = params(1.0, 0.05);
    for r in [0.05, 0.2, 1.0] {
        let exact = centrifugal(r, &p, CentrifugalScheme::Exact).unwrap();
        for scheme in [CentrifugalScheme::greene_aldrich(), CentrifugalScheme::Hyperbolic] {
            let approx = centrifugal(r, &p, scheme).unwrap();
            assert!((approx - exact).abs() < 1e-2 * exact, "{scheme:?} at r = {r}");
        }
    }
    assert!(centrifugal(0.0, &p, CentrifugalScheme::Exact).is_err());
}
