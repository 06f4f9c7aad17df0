mod common;

use common::*;
use proptest::prelude::*;
use quorbit_core::invariants::{
    is_positive_semidefinite, quatrit_casimirs_from_angles, quatrit_traces_from_casimirs, t2_from_radius, PSD_TOL,
};
use quorbit_core::state_space::sampling::spectrum_haar_state;
use quorbit_core::state_space::{hermitian_eigenvalues, to_bloch};
use quorbit_core::{
    bezoutian, casimirs, char_coefficients, discriminant, gell_mann_basis, grad_matrix, newton_extend,
    quatrit_trace_from_angles, qutrit_t3_bloch, structure_constants, trace_invariants, weight_vectors,
    OrbitCoordinates, TraceInvariants,
};

fn close_rel(a: f64, b: f64, rel: f64, abs: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(a.abs()) + abs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn coefficients_are_elementary_symmetric(n in 2usize..=6, seed in any::<u64>()) {
        let mut g = rng(seed);
        let (_, rho) = ball_matrix(n, 1.0, &mut g);
        let ev = hermitian_eigenvalues(&rho).unwrap();
        let t = trace_invariants(&rho, n).unwrap();
        let s = char_coefficients(&t).unwrap();
        let e = elementary_symmetric(&ev);
        for (k, (&got, &want)) in s.values().iter().zip(&e).enumerate() {
            prop_assert!(close_rel(got, want, 1e-8, 1e-12), "k={} {} vs {}", k + 1, got, want);
        }
    }

    #[test]
    fn newton_extension_matches_direct_powers(n in 2usize..=5, seed in any::<u64>()) {
        let mut g = rng(seed);
        let (_, rho) = spectrum_haar_state(n, &mut g);
        let direct = trace_invariants(&rho, 2 * n + 1).unwrap();
        let short = TraceInvariants::new(n, direct.values()[..n].to_vec()).unwrap();
        let ext = newton_extend(&short, 2 * n + 1).unwrap();
        for k in 1..=2 * n + 1 {
            prop_assert!((ext.t(k) - direct.t(k)).abs() < 1e-12);
        }
    }

    #[test]
    fn discriminant_is_vandermonde(n in 2usize..=4, seed in any::<u64>()) {
        let mut g = rng(seed);
        let (spec, rho) = spectrum_haar_state(n, &mut g);
        let t = trace_invariants(&rho, n).unwrap();
        let disc = discriminant(&t).unwrap();
        let v = vandermonde_sq(&spec);
        prop_assert!(close_rel(disc, v, 1e-8, 1e-12), "{disc} vs {v}");
    }

    #[test]
    fn bezoutian_rank_counts_distinct_levels(n in 2usize..=5, levels in 1usize..=5, seed in any::<u64>()) {
        let levels = levels.min(n);
        let mut g = rng(seed);
        // well separated levels, each repeated
        let values: Vec<f64> = (0..levels).map(|i| 1.0 + i as f64 + rand::Rng::random::<f64>(&mut g) * 0.5).collect();
        let mut spec = Vec::with_capacity(n);
        for i in 0..n {
            spec.push(values[i % levels]);
        }
        let total: f64 = spec.iter().sum();
        for x in spec.iter_mut() {
            *x /= total;
        }
        let rho = conjugated(&spec, &mut g);
        let ev = hermitian_eigenvalues(&rho).unwrap();
        let b = bezoutian(&trace_invariants(&rho, n).unwrap()).unwrap();
        prop_assert_eq!(b.rank().unwrap(), distinct_count(&ev, 1e-7));
        prop_assert_eq!(b.rank().unwrap(), levels);
    }

    #[test]
    fn grad_and_bezoutian_share_definiteness(n in 2usize..=5, seed in any::<u64>(), complex in any::<bool>()) {
        let mut g = rng(seed);
        let mut roots: Vec<(f64, f64)> = (0..n).map(|_| (rand::Rng::random::<f64>(&mut g), 0.0)).collect();
        if complex {
            let b = 0.05 + 0.3 * rand::Rng::random::<f64>(&mut g);
            roots[0].1 = b;
            roots[1] = (roots[0].0, -b);
        }
        let t: Vec<f64> = (1..=n)
            .map(|k| roots.iter().map(|&(a, b)| num_complex::Complex64::new(a, b).powi(k as i32).re).sum())
            .collect();
        let t = TraceInvariants::new(n, t).unwrap();
        let b = bezoutian(&t).unwrap();
        let psd_b = b.is_positive_semidefinite(PSD_TOL).unwrap();
        let psd_g = is_positive_semidefinite(&grad_matrix(&t).unwrap(), PSD_TOL).unwrap();
        prop_assert_eq!(psd_b, psd_g);
        prop_assert_eq!(psd_b, !complex);
    }

    #[test]
    fn quatrit_casimir_chain(seed in any::<u64>()) {
        let tensors = structure_constants(&gell_mann_basis(4).unwrap()).unwrap();
        let mut g = rng(seed);
        let (_, rho) = spectrum_haar_state(4, &mut g);
        let xi = to_bloch(&rho).unwrap();
        let c = casimirs(xi.components(), &tensors).unwrap();
        let t = trace_invariants(&rho, 4).unwrap();
        let (t2, t3, t4) = quatrit_traces_from_casimirs(&c);
        prop_assert!((t2 - t.t(2)).abs() < 1e-9);
        prop_assert!((t3 - t.t(3)).abs() < 1e-9);
        prop_assert!((t4 - t.t(4)).abs() < 1e-9);
    }

    #[test]
    fn casimirs_are_unitarily_invariant(n in 2usize..=5, seed in any::<u64>()) {
        let tensors = structure_constants(&gell_mann_basis(n).unwrap()).unwrap();
        let mut g = rng(seed);
        let (xi, rho) = ball_matrix(n, 0.8, &mut g);
        let u = quorbit_core::state_space::haar_unitary(n, &mut g);
        let xi2 = to_bloch(&rho.conjugate_by(&u)).unwrap();
        let a = casimirs(xi.components(), &tensors).unwrap();
        let b = casimirs(xi2.components(), &tensors).unwrap();
        for (x, y) in [(a.c2, b.c2), (a.c3, b.c3), (a.c4, b.c4), (a.c5, b.c5), (a.c6, b.c6)] {
            prop_assert!((x - y).abs() < 1e-10, "{x} vs {y}");
        }
        prop_assert!(a.c2 >= 0.0);
    }

    #[test]
    fn qutrit_bloch_expansion_matches_trace(seed in any::<u64>()) {
        let mut g = rng(seed);
        let (xi, rho) = ball_matrix(3, 1.0, &mut g);
        let direct = trace_invariants(&rho, 3).unwrap().t(3);
        prop_assert!((qutrit_t3_bloch(xi.components()).unwrap() - direct).abs() < 1e-10);
    }

    #[test]
    fn quatrit_angles_match_direct_traces(r in 0.0f64..=1.0, theta in 0.0f64..std::f64::consts::PI, phi in 0.0f64..6.3) {
        let coords = OrbitCoordinates::new(4, r, vec![theta, phi]).unwrap();
        let spec = quorbit_core::spectrum_from_orbit(&coords, &weight_vectors(4).unwrap()).unwrap();
        let rho = quorbit_core::HermitianMatrix::diagonal(&spec.raw);
        let t = trace_invariants(&rho, 4).unwrap();
        let (t2, t3, t4) = quatrit_trace_from_angles(r, theta, phi);
        prop_assert!((t2 - t.t(2)).abs() < 1e-10);
        prop_assert!((t3 - t.t(3)).abs() < 1e-10);
        prop_assert!((t4 - t.t(4)).abs() < 1e-10);
        prop_assert!((t2 - t2_from_radius(4, r)).abs() < 1e-15);
        let (c3, c4) = quatrit_casimirs_from_angles(r, theta, phi);
        let xi = to_bloch(&rho).unwrap();
        let c = casimirs(xi.components(), &structure_constants(&gell_mann_basis(4).unwrap()).unwrap()).unwrap();
        prop_assert!((c.c3 - c3).abs() < 1e-10 && (c.c4 - c4).abs() < 1e-10);
    }
}

#[test]
fn trace_tuple_of_valid_states_is_bounded() {
    let mut g = rng(5);
    for n in 2..=6 {
        for _ in 0..50 {
            let (_, rho) = spectrum_haar_state(n, &mut g);
            let t = trace_invariants(&rho, n).unwrap();
            assert!((t.t(1) - 1.0).abs() < 1e-12);
            assert!(t.t(2) >= 1.0 / n as f64 - 1e-12 && t.t(2) <= 1.0 + 1e-12);
            assert!(char_coefficients(&t).unwrap().min() >= -1e-10);
            let b = bezoutian(&t).unwrap();
            assert_eq!(b.matrix()[(0, 0)], n as f64);
            assert_eq!(b.matrix()[(0, 1)], t.t(1));
        }
    }
}
