//! Longitudinal Ising chain: diagonal spectrum, circuit compilation, and a
//! check that the compiled unitary is exp(−iHt) for any step count.
//!
//! Run: `cargo run --release --example ising_chain`

use nalgebra::DMatrix;
use num_complex::Complex64;

use qubench::circuits::{build_ising_circuit, circuit_unitary, phase_distance, TrotterPlan};
use qubench::hamiltonians::{ising_energies, IsingParams};
use qubench::noise::census_of;

fn main() -> qubench::Result<()> {
    let params = IsingParams::new(vec![0.4, -0.3, 0.7, 0.1], vec![1.0, -0.6, 0.8])?;
    let energies = ising_energies(&params)?;
    let ground = energies
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .unwrap();
    println!("ground configuration {:04b} with E = {:.3}", ground.0, ground.1);

    let t = 1.3;
    let exact = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        energies.len(),
        energies.iter().map(|e| Complex64::from_polar(1.0, -e * t)),
    ));
    for steps in [1, 2, 4, 8] {
        let c = build_ising_circuit(&params, &TrotterPlan::new(t, steps)?, false);
        let u = circuit_unitary(&c)?;
        let census = census_of(&c);
        println!(
            "steps {steps}: {} single, {} CNOT, ||U - exp(-iHt)|| = {:.2e}",
            census.n_single,
            census.n_two,
            phase_distance(&u, &exact)
        );
    }
    Ok(())
}
