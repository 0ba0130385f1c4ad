//! Prepare a Bell pair, print its exact outcome distribution, and sample it.
//!
//! Run: `cargo run --release --example bell_state`

use qubench::statevec::{run_circuit, Circuit, Gate};

fn main() -> qubench::Result<()> {
    let mut circuit = Circuit::from_gates(2, [Gate::h(0), Gate::cnot(0, 1)])?;
    circuit.measure_all();

    let state = run_circuit(&circuit, None)?;
    let exact = state.probabilities(circuit.measured_qubits())?;
    for (bits, p) in exact.iter() {
        println!("p({bits}) = {p:.6}");
    }

    let counts = state.sample_counts(circuit.measured_qubits(), 10_000, 2024)?;
    println!("10000 shots: {:?}", counts.counts);
    println!("total-variation distance to exact: {:.4}", counts.tv_distance(&exact));
    Ok(())
}
