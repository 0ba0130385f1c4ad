//! Vacuum Rabi oscillation: exact Jaynes–Cummings dynamics against the
//! Trotterized two-wire circuit.
//!
//! Run: `cargo run --release --example vacuum_rabi`

use std::f64::consts::PI;

use qubench::circuits::{build_jc_circuit, JcPair, TrotterPlan};
use qubench::hamiltonians::{JcDynamics, JcParams};
use qubench::statevec::{run_circuit, StateVector};

fn circuit_population(pair: JcPair, t: f64, steps: usize) -> qubench::Result<f64> {
    let c = build_jc_circuit(&[pair], &TrotterPlan::new(t, steps)?)?;
    // |qubit excited, cavity empty⟩
    let state = run_circuit(&c, Some(StateVector::basis(2, 0b01)?))?;
    Ok(state.probabilities(&[0])?.probs()[1])
}

fn main() -> qubench::Result<()> {
    let g = 1.0;
    for delta in [0.0, 2.0] {
        let params = JcParams::new(10.0 + delta, 10.0, g, 8)?;
        let exact = JcDynamics::new(&params)?;
        let pair = JcPair { g, delta };
        println!("detuning {delta}: t, exact P_e, circuit (16 steps), circuit (64 steps)");
        for k in 0..=8 {
            let t = k as f64 * PI / 8.0;
            println!(
                "  {t:6.3}  {:.6}  {:.6}  {:.6}",
                exact.excited_population(t)?,
                circuit_population(pair, t, 16)?,
                circuit_population(pair, t, 64)?
            );
        }
    }
    Ok(())
}
