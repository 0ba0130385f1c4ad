//! Monte-Carlo Pauli noise on a Bell circuit: the fraction of fault-free
//! trajectories tracks the product of per-gate survival probabilities, and
//! e^{−E} approximates it for small rates.
//!
//! Run: `cargo run --release --example pauli_noise`

use qubench::noise::{census_of, fidelity, inject_pauli_noise, total_error, ErrorRates};
use qubench::statevec::{run_circuit, Circuit, Gate};

fn main() -> qubench::Result<()> {
    let mut bell = Circuit::from_gates(2, [Gate::h(0), Gate::cnot(0, 1)])?;
    bell.measure_all();
    let ideal = run_circuit(&bell, None)?.probabilities(bell.measured_qubits())?;

    let rates = ErrorRates::new(0.01, 0.05, 0.03)?;
    let trials = 20_000u64;
    let mut clean = 0u64;
    let mut mean_probs = [0.0; 4];
    for seed in 0..trials {
        let noisy = inject_pauli_noise(&bell, &rates, seed)?;
        if noisy.events.is_empty() {
            clean += 1;
        }
        let p = run_circuit(&noisy.circuit, None)?.probabilities(bell.measured_qubits())?;
        for (m, x) in mean_probs.iter_mut().zip(p.probs()) {
            *m += x / trials as f64;
        }
    }

    let survival = (1.0 - rates.eps_single) * (1.0 - rates.eps_two) * (1.0 - rates.eps_meas);
    let e = total_error(&census_of(&bell), &rates);
    println!("fault-free fraction  {:.4}", clean as f64 / trials as f64);
    println!("product (1 - eps)    {survival:.4}");
    println!("e^-E                 {:.4}", fidelity(e)?);
    println!("ideal  {:?}", ideal.probs());
    println!("noisy  {mean_probs:.4?}");
    Ok(())
}
