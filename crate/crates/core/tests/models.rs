mod common;
#[path = "../examples/support/profile_grid.rs"]
mod profile_grid;

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64 as C;
use rand::Rng;

use qubench::circuits::{
    build_ising_circuit, build_jc_circuit, circuit_unitary, exact_profile, ising_default, jc_default,
    phase_distance, JcPair, Model, TrotterPlan,
};
use qubench::hamiltonians::{
    cooper_pair_matrix, cooper_pair_spectrum, jc_excited_population, jc_hamiltonian, jc_spectrum, CpbParams,
    IsingParams, JcDynamics, JcParams,
};

use common::{evolve, phase_frobenius, ising_operator, jc_pair_operator, max_abs_diff, oracle_unitary, rng, simulated_unitary};

#[test]
fn cpb_bisection_matches_dense_eigensolver() {
    for (e_j, n_g) in [(0.3, 0.0), (1.0, 0.25), (5.0, 0.5), (50.0, 0.1), (120.0, 0.77)] {
        let p = CpbParams::new(1.0, e_j, n_g, 15).unwrap();
        let mut want: Vec<f64> = cooper_pair_matrix(&p).unwrap().symmetric_eigen().eigenvalues.iter().copied().collect();
        want.sort_by(f64::total_cmp);
        let got = cooper_pair_spectrum(&p, 8).unwrap();
        for (a, b) in got.iter().zip(&want) {
            assert!((a - b).abs() < 1e-9 * (1.0 + b.abs()), "{e_j} {n_g}: {a} vs {b}");
        }
    }
}

#[test]
fn jc_spectrum_matches_dense_eigensolver() {
    let p = JcParams::new(5.3, 5.0, 0.2, 12).unwrap();
    let mut want: Vec<f64> = jc_hamiltonian(&p).unwrap().symmetric_eigen().eigenvalues.iter().copied().collect();
    want.sort_by(f64::total_cmp);
    let got = jc_spectrum(&p).unwrap();
    assert_eq!(got.len(), want.len());
    for (a, b) in got.iter().zip(&want) {
        assert!((a - b).abs() < 1e-10, "{a} vs {b}");
    }
}

#[test]
fn jc_dynamics_against_matrix_exponential() {
    let p = JcParams::new(1.7, 1.0, 0.3, 6).unwrap();
    let h = jc_hamiltonian(&p).unwrap().map(|x| C::new(x, 0.0));
    let start = p.index(true, 0);
    let dyn_ = JcDynamics::new(&p).unwrap();
    for k in 0..20 {
        let t = k as f64 * 0.7;
        let u = evolve(&h, t);
        let want = u[(start, start)].norm_sqr();
        assert!((dyn_.excited_population(t).unwrap() - want).abs() < 1e-10);
    }
}

#[test]
fn jc_resonant_and_detuned_populations() {
    let g = 0.1;
    let res = JcParams::new(5.0, 5.0, g, 10).unwrap();
    for k in 0..=100 {
        let t = k as f64 * PI / g / 100.0;
        let p = jc_excited_population(&res, t).unwrap();
        assert!((p - (g * t).cos().powi(2)).abs() < 1e-9);
    }
    let det = JcParams::new(5.0 + 10.0 * g, 5.0, g, 10).unwrap();
    let omega = (100.0f64 * g * g + 4.0 * g * g).sqrt();
    let p = jc_excited_population(&det, PI / omega).unwrap();
    assert!((p - (1.0 - 1.0 / 26.0)).abs() < 1e-9);
}

#[test]
fn ising_circuit_is_exact_for_any_step_count() {
    let mut r = rng(5);
    for _ in 0..50 {
        let n = r.random_range(2..=5);
        let h: Vec<f64> = (0..n).map(|_| r.random_range(-1.0..1.0)).collect();
        let j: Vec<f64> = (0..n - 1).map(|_| r.random_range(-1.0..1.0)).collect();
        let t = r.random_range(0.0..2.0);
        let want = evolve(&ising_operator(&h, &j), t);
        let params = IsingParams::new(h, j).unwrap();
        for steps in 1..=8 {
            let c = build_ising_circuit(&params, &TrotterPlan::new(t, steps).unwrap(), false);
            assert!(phase_frobenius(&simulated_unitary(&c), &want) < 1e-10);
        }
    }
}

#[test]
fn jc_circuit_matches_pair_hamiltonian() {
    // resonant: XX and YY commute, so any step count is exact
    let want = evolve(&jc_pair_operator(0.8, 0.0), 1.9);
    for steps in [1, 3, 10] {
        let c = build_jc_circuit(&[JcPair { g: 0.8, delta: 0.0 }], &TrotterPlan::new(1.9, steps).unwrap()).unwrap();
        assert!(phase_frobenius(&oracle_unitary(&c), &want) < 1e-10);
    }
    // detuned: first-order Trotter error, so 8x the steps gives 1/8 the error
    let want = evolve(&jc_pair_operator(0.8, 0.6), 1.9);
    let err = |steps| {
        let c = build_jc_circuit(&[JcPair { g: 0.8, delta: 0.6 }], &TrotterPlan::new(1.9, steps).unwrap()).unwrap();
        phase_distance(&circuit_unitary(&c).unwrap(), &want)
    };
    let (e8, e64) = (err(8), err(64));
    let ratio = e8 / e64;
    assert!((7.0..9.0).contains(&ratio), "{e8} {e64}");
}

#[test]
fn jc_swap_at_quarter_period() {
    let g = 1.3;
    let t = PI / 2.0 / g;
    let c = build_jc_circuit(&[JcPair { g, delta: 0.0 }], &TrotterPlan::new(t, 64).unwrap()).unwrap();
    let u = simulated_unitary(&c);
    // |e,0⟩ = index 0b01 → |g,1⟩ = 0b10
    let infidelity = 1.0 - u[(0b10, 0b01)].norm_sqr();
    assert!(infidelity < 1e-3, "{infidelity}");
}

#[test]
fn both_unitary_routes_agree() {
    let mut r = rng(8);
    for _ in 0..20 {
        let n = r.random_range(1..=5);
        let c = common::random_circuit(&mut r, n, 40);
        let a: DMatrix<C> = circuit_unitary(&c).unwrap();
        assert!(max_abs_diff(&a, &oracle_unitary(&c)) < 1e-10);
        assert!(max_abs_diff(&a, &simulated_unitary(&c)) < 1e-10);
    }
}

#[test]
fn committed_profile_defaults_are_the_grid_optimum() {
    let (jc, jc_margin) = profile_grid::best_jc();
    assert_eq!(jc.prep, (jc_default::PREP_QUBIT, jc_default::PREP_CAVITY));
    assert_eq!(jc.delta, jc_default::DELTA);
    assert_eq!(jc.time, jc_default::TIME);
    assert_eq!(jc.steps, jc_default::STEPS);
    assert!(jc_margin > 0.1);

    let (is, is_margin) = profile_grid::best_ising();
    assert_eq!((is.field_even, is.field_odd, is.j), (ising_default::FIELD_EVEN, ising_default::FIELD_ODD, ising_default::J));
    assert_eq!(is.time, ising_default::TIME);
    assert!(is_margin > 0.01);

    let jc_p = exact_profile(Model::Jc).unwrap();
    assert_eq!(profile_grid::monotone_margin(jc_p.probs(), true), jc_margin);
    let is_p = exact_profile(Model::Ising).unwrap();
    assert_eq!(profile_grid::monotone_margin(is_p.probs(), false), is_margin);
}
