mod common;

use proptest::prelude::*;
use qubench::statevec::{run_circuit, Circuit, Gate, StateVector};

use common::{oracle_state, random_circuit, rng};

#[test]
fn random_circuits_match_dense_oracle() {
    let mut r = rng(11);
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let n = 1 + i % 6;
        let depth = 1 + (i * 7) % 60;
        let circ = random_circuit(&mut r, n, depth);
        let sim = run_circuit(&circ, None).unwrap();
        let want = oracle_state(&circ);
        for (a, b) in sim.amplitudes().iter().zip(want.iter()) {
            worst = worst.max((a - b).norm());
        }
    }
    assert!(worst < 1e-10, "max amplitude error {worst:e}");
}

#[test]
fn wide_register_uses_parallel_kernels() {
    // 15 qubits crosses the parallel threshold; compare against a run that
    // applies the same gates on a 14-qubit prefix and a spectator qubit
    let mut r = rng(3);
    let narrow = random_circuit(&mut r, 14, 200);
    let mut wide = Circuit::new(15);
    for g in narrow.gates() {
        wide.push(*g).unwrap();
    }
    let a = run_circuit(&narrow, None).unwrap();
    let b = run_circuit(&wide, None).unwrap();
    for (i, x) in a.amplitudes().iter().enumerate() {
        assert!((x - b.amplitudes()[i]).norm() < 1e-12);
    }
    assert!(b.amplitudes()[1 << 14..].iter().all(|x| x.norm() == 0.0));
}

#[test]
fn ghz_sampling_only_hits_extremes() {
    let n = 10;
    let mut c = Circuit::new(n);
    c.push(Gate::h(0)).unwrap();
    for q in 1..n {
        c.push(Gate::cnot(q - 1, q)).unwrap();
    }
    c.measure_all();
    let s = run_circuit(&c, None).unwrap();
    let counts = s.sample_counts(c.measured_qubits(), 100_000, 9).unwrap();
    assert_eq!(counts.counts.len(), 2);
    let zeros = counts.get(&"0".repeat(n)) as f64;
    assert!((zeros - 50_000.0).abs() < 3.0 * (100_000.0f64 * 0.25).sqrt());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_preserved(seed in any::<u64>(), n in 1usize..8, depth in 0usize..80) {
        let mut r = rng(seed);
        let c = random_circuit(&mut r, n, depth);
        let s = run_circuit(&c, None).unwrap();
        prop_assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn circuit_then_inverse_is_identity(seed in any::<u64>(), n in 1usize..6) {
        let mut r = rng(seed);
        let c = random_circuit(&mut r, n, 30);
        // each gate's inverse within the gate set
        let mut inv = Circuit::new(n);
        for g in c.gates().iter().rev() {
            let gates = match *g {
                Gate::Rz { target, theta } => vec![Gate::rz(target, -theta)],
                Gate::P { target, theta } => vec![Gate::p(target, -theta)],
                Gate::SqrtX { target } => vec![Gate::sx(target), Gate::sx(target), Gate::sx(target)],
                other => vec![other],
            };
            for g in gates {
                inv.push(g).unwrap();
            }
        }
        let start = StateVector::basis(n, (seed as usize) % (1 << n)).unwrap();
        let mid = run_circuit(&c, Some(start.clone())).unwrap();
        let end = run_circuit(&inv, Some(mid)).unwrap();
        for (a, b) in end.amplitudes().iter().zip(start.amplitudes()) {
            prop_assert!((a - b).norm() < 1e-10);
        }
    }
}
