use qubench::bench::{anchor_growth, consistency_report, reference_results};
use qubench::circuits::Model;
use qubench::noise::{census_of, fidelity, inject_pauli_noise, predict, total_error, ErrorRates};
use qubench::statevec::{run_circuit, Circuit, Gate};

#[test]
fn reference_table_is_self_consistent() {
    let report = consistency_report(&reference_results()).unwrap();
    assert_eq!(report.rows.len(), 28);
    assert!(report.max_residual <= 2.1);
    assert!(report.tight_rows >= 22);
}

#[test]
fn anchor_fit_predicts_published_exponents() {
    let rows = reference_results();
    for (model, up_to) in [(Model::Jc, 62), (Model::Ising, 102)] {
        let g = anchor_growth(&rows, model).unwrap();
        for r in rows.iter().filter(|r| r.model == model && r.qubits <= up_to) {
            let (e, _) = predict(&g, r.qubits).unwrap();
            assert!((e - r.error_total).abs() <= 5e-4 + 1e-12, "{model} n={}: {e}", r.qubits);
        }
    }
}

#[test]
fn fault_free_fraction_tracks_survival_probability() {
    let mut c = Circuit::from_gates(3, [Gate::h(0), Gate::cnot(0, 1), Gate::sx(2), Gate::cnot(1, 2)]).unwrap();
    c.measure_all();
    let rates = ErrorRates::new(0.02, 0.04, 0.05).unwrap();
    let trials = 40_000u64;
    let clean = (0..trials)
        .filter(|&s| inject_pauli_noise(&c, &rates, s).unwrap().events.is_empty())
        .count() as f64;
    let p = 0.98f64.powi(2) * 0.96f64.powi(2) * 0.95;
    let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
    assert!((clean - p * trials as f64).abs() < 4.0 * sigma, "{clean} vs {}", p * trials as f64);
    // e^{−E} is the small-rate limit of the same product
    let e = total_error(&census_of(&c), &rates);
    assert!((fidelity(e).unwrap() - p).abs() < 5e-3);
}

#[test]
fn injected_faults_are_paulis() {
    // on a classical input every Pauli fault leaves a classical output
    let mut c = Circuit::from_gates(2, [Gate::x(0), Gate::cnot(0, 1)]).unwrap();
    c.measure_all();
    let rates = ErrorRates::new(0.5, 0.5, 0.5).unwrap();
    for seed in 0..200 {
        let noisy = inject_pauli_noise(&c, &rates, seed).unwrap();
        let probs = run_circuit(&noisy.circuit, None).unwrap().probabilities(&[0, 1]).unwrap();
        let max = probs.probs().iter().cloned().fold(0.0, f64::max);
        assert!((max - 1.0).abs() < 1e-12);
    }
}
