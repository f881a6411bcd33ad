use kgspec::bound::*;
use kgspec::oracle::{oracle_bound_energies, oracle_eigenvector, OracleScan, RadialGrid};
use kgspec::potential::{MassParams, PotentialParams};
use kgspec::reference::{panel, table1_model};
use kgspec::roots::brent;

fn grid(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| a + (b - a) * i as f64 / (n - 1) as f64)
}

fn spectrum(qn: QuantumNumbers, model: &Model) -> BoundSpectrum {
    solve_bound_energies(&qn, model, &SearchWindow::default()).unwrap()
}

#[test]
fn table1_fixture_energies() {
    // frozen from the finite-difference oracle, which agrees to better than 1e-8
    let s = spectrum(QuantumNumbers::new(0, 0, 3), &table1_model());
    let e = s.energies();
    assert_eq!(e.len(), 2);
    assert!((e[0] - -0.11678679016616972).abs() < 1e-9);
    assert!((e[1] - 0.3641296690138699).abs() < 1e-9);
    assert_eq!(s.lower(), Some(e[0]));
    assert_eq!(s.upper(), Some(e[1]));
    for state in &s.states {
        assert!(state.decay > 0.0);
        assert!(state.residual.abs() < 1e-10);
    }
}

#[test]
fn table1_fixture_against_oracle() {
    let model = table1_model();
    let qn = QuantumNumbers::new(0, 0, 3);
    let analytic = spectrum(qn, &model).energies();
    let oracle = oracle_bound_energies(&qn, &model, &RadialGrid::for_potential(&model.potential), &OracleScan::default())
        .unwrap()
        .energies;
    assert_eq!(analytic.len(), oracle.len());
    for (a, o) in analytic.iter().zip(&oracle) {
        assert!((a - o).abs() < 1e-4 * a.abs(), "{a} vs {o}");
    }
}

#[test]
fn printed_table_is_not_a_root() {
    // the published n = 0, l = 0, D = 3 pair, read with S0 = 0
    let model = table1_model();
    let qn = QuantumNumbers::new(0, 0, 3);
    for e in [2.569172676, -2.203041203] {
        assert!(energy_residual(e, &qn, &model).map_or(true, |g| g.abs() > 1e-3));
    }
}

#[test]
fn riccati_on_panel() {
    for pt in panel() {
        let p = &pt.model.potential;
        let ground = QuantumNumbers { n: 0, ..pt.qn };
        for state in spectrum(ground, &pt.model).states {
            let worst = grid(0.01 / p.alpha, 20.0 / p.alpha, 1000)
                .map(|r| riccati_residual(r, &state.factors, &state.omegas, p).unwrap().abs())
                .fold(0.0, f64::max);
            assert!(worst < 1e-9, "{:?} E = {}: {worst}", pt.qn, state.energy);
        }
    }
}

#[test]
fn shape_invariance_on_table1() {
    let model = table1_model();
    let p = &model.potential;
    let state = &spectrum(QuantumNumbers::new(0, 0, 3), &model).states[1];
    let f0 = state.factors;
    let f1 = shifted_factors(1, &f0, &state.omegas, p).unwrap();
    let diffs: Vec<f64> = grid(0.01 / p.alpha, 20.0 / p.alpha, 1000)
        .map(|r| partner_potentials(r, &f0, p).unwrap().0 - partner_potentials(r, &f1, p).unwrap().1)
        .collect();
    let mean = diffs.iter().sum::<f64>() / diffs.len() as f64;
    let std = (diffs.iter().map(|d| (d - mean).powi(2)).sum::<f64>() / diffs.len() as f64).sqrt();
    let remainder = shape_invariance_remainder(1, &f0, &state.omegas, p).unwrap();
    assert!(std < 1e-9, "{std}");
    assert!((mean - remainder).abs() < 1e-9, "{mean} vs {remainder}");
}

#[test]
fn ground_level_two_routes() {
    for pt in panel() {
        let qn = QuantumNumbers { n: 0, ..pt.qn };
        let route = |e: f64| -> kgspec::Result<f64> {
            let om = omega_coeffs(e, &qn, &pt.model);
            let f = susy_factors(&om, &pt.model.potential)?;
            Ok(ground_energy_tilde(&f, &om) - energy_tilde(e, &pt.model.mass))
        };
        for state in spectrum(qn, &pt.model).states {
            let e = state.energy;
            let h = 1e-6 * e.abs().max(1.0);
            let root = brent(route, e - h, e + h, 1e-15, 0.0).unwrap();
            assert!((root - e).abs() < 1e-10, "{:?}: {root} vs {e}", pt.qn);
        }
    }
}

#[test]
fn sigma_route_agrees() {
    for pt in panel() {
        for state in spectrum(pt.qn, &pt.model).states {
            let e = state.energy;
            let h = 1e-6 * e.abs().max(1.0);
            let root = brent(|x| energy_residual_sigma(x, &pt.qn, &pt.model), e - h, e + h, 1e-15, 0.0).unwrap();
            assert!((root - e).abs() < 1e-8, "{:?}: {root} vs {e}", pt.qn);
        }
    }
}

#[test]
fn interdimensional_degeneracy() {
    let model = table1_model();
    for n in 0..3 {
        for l in 1..4 {
            for d in 1..5 {
                let a = spectrum(QuantumNumbers::new(n, l, d), &model).energies();
                let b = spectrum(QuantumNumbers::new(n, l - 1, d + 2), &model).energies();
                assert_eq!(a.len(), b.len());
                for (x, y) in a.iter().zip(&b) {
                    assert!((x - y).abs() < 1e-10);
                }
            }
        }
    }
}

#[test]
fn chi_omega_cross_relation() {
    for pt in panel() {
        let p = &pt.model.potential;
        for e in [-1.3, 0.2, 1.7] {
            let om = omega_coeffs(e, &pt.qn, &pt.model);
            let chi = chi_coeffs(e, &pt.qn, &pt.model);
            let et = energy_tilde(e, &pt.model.mass);
            let lhs = 4.0 * p.alpha * p.alpha * p.q * p.q * chi.chi1 + et * p.q * p.q;
            assert!((lhs - om.omega1).abs() < 1e-10 * om.omega1.abs().max(1.0));
        }
    }
}

#[test]
fn roots_with_negative_decay_are_rejected() {
    let model = Model::new(PotentialParams { alpha: 0.5, ..table1_model().potential }, table1_model().mass);
    let s = spectrum(QuantumNumbers::new(2, 0, 3), &model);
    assert!(s.is_empty());
    assert_eq!(s.rejected.len(), 2);
    assert!(s.rejected.iter().all(|r| r.decay <= 0.0));
}

#[test]
fn explicit_search_window() {
    let model = table1_model();
    let qn = QuantumNumbers::new(0, 0, 3);
    let window = SearchWindow { bounds: Some((0.0, 1.0)), ..SearchWindow::default() };
    let s = solve_bound_energies(&qn, &model, &window).unwrap();
    assert_eq!(s.energies().len(), 1);
    let bad = SearchWindow { grid_points: 10, ..SearchWindow::default() };
    assert!(solve_bound_energies(&qn, &model, &bad).is_err());
}

#[test]
fn parallel_and_sequential_agree() {
    let model = table1_model();
    let qns: Vec<QuantumNumbers> = (0..3).flat_map(|n| (1..5).map(move |d| QuantumNumbers::new(n, 1, d))).collect();
    let seq = solve_many(&qns, &model, &SearchWindow::default(), kgspec::par::Execution::Sequential);
    let par = solve_many(&qns, &model, &SearchWindow::default(), kgspec::par::Execution::Parallel);
    for (a, b) in seq.iter().zip(&par) {
        assert_eq!(a.as_ref().unwrap(), b.as_ref().unwrap());
    }
}

#[test]
fn wavefunction_boundaries_and_norm() {
    let base = table1_model();
    for (q, alpha, n) in [(1.0, 0.1, 0), (0.5, 0.1, 2), (1.0, 0.5, 1)] {
        let model = Model::new(PotentialParams { q, alpha, ..base.potential }, base.mass);
        let qn = QuantumNumbers::new(n, 0, 3);
        let state = spectrum(qn, &model).states.pop().unwrap();
        let wf = BoundWavefunction::new(&state, &model).unwrap();
        let r0 = wf.domain_start();
        let h = 0.002 / alpha;
        let values: Vec<f64> = (1..30_000).map(|i| wf.eval(r0 + i as f64 * h).unwrap()).collect();
        let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!(wf.eval(r0 + 1e-9 / alpha).unwrap().abs() < 1e-8 * peak);
        assert!(wf.eval(r0 + 60.0 / alpha).unwrap().abs() < 1e-8 * peak);
        // trapezoid in r as an independent check of the s-space quadrature
        let norm: f64 = values.iter().map(|v| v * v).sum::<f64>() * h;
        assert!((norm - 1.0).abs() < 1e-6, "norm {norm}");
        let significant: Vec<f64> = values.iter().cloned().filter(|v| v.abs() > 1e-6 * peak).collect();
        let nodes = significant.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
        assert_eq!(nodes, n);
        assert!(wf.eval(r0).is_err());
    }
}

#[test]
fn wavefunction_matches_oracle_eigenvector() {
    let base = table1_model();
    let model = Model::new(PotentialParams { q: 0.5, alpha: 0.1, ..base.potential }, base.mass);
    let qn = QuantumNumbers::new(1, 0, 3);
    let state = spectrum(qn, &model).states.pop().unwrap();
    let wf = BoundWavefunction::new(&state, &model).unwrap();
    let grid = RadialGrid::for_potential(&model.potential);
    let oracle = oracle_eigenvector(state.energy, &qn, &model, &grid).unwrap();
    assert_eq!(oracle.nodes, 1);
    assert!(!oracle.tail_flagged());
    let h = grid.step(grid.points);
    let overlap: f64 = oracle.r.iter().zip(&oracle.values).map(|(&r, v)| wf.eval(r).unwrap() * v).sum::<f64>() * h;
    assert!(overlap.abs() > 1.0 - 1e-6, "overlap {overlap}");
}

#[test]
fn printed_scheme_is_selectable() {
    let model = table1_model().with_scheme(CoefficientScheme::Printed);
    let om_printed = omega_coeffs(0.3, &QuantumNumbers::new(0, 0, 3), &model);
    let om_reduced = omega_coeffs(0.3, &QuantumNumbers::new(0, 0, 3), &table1_model());
    assert_ne!(om_printed, om_reduced);
    assert!(solve_bound_energies(&QuantumNumbers::new(0, 0, 3), &model, &SearchWindow::default()).is_ok());
}

#[test]
fn invalid_inputs() {
    let mut model = table1_model();
    assert!(solve_bound_energies(&QuantumNumbers::new(0, 0, 0), &model, &SearchWindow::default()).is_err());
    model.mass = MassParams { m0: f64::NAN, m1: 0.0 };
    assert!(solve_bound_energies(&QuantumNumbers::new(0, 0, 3), &model, &SearchWindow::default()).is_err());
}
