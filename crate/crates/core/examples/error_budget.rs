//! Gate-census error budget: the two-qubit anchor, the linear growth fit, and
//! predictions at widths beyond simulation.
//!
//! Run: `cargo run --release --example error_budget`

use qubench::bench::{anchor_growth, reference_results};
use qubench::circuits::{benchmark_circuit, Model};
use qubench::noise::{census_of, fidelity, predict, total_error, ErrorRates, GateCensus};

fn main() -> qubench::Result<()> {
    let rates = ErrorRates::REFERENCE;
    let worked = GateCensus { n_single: 12, n_two: 2, measured: true };
    let e = total_error(&worked, &rates);
    println!("12 single + 2 CNOT + readout: E = {e:.5}, F = {:.2}%", 100.0 * fidelity(e)?);
    println!("readout only: F = {:.2}%", 100.0 * fidelity(rates.eps_meas)?);

    for model in Model::ALL {
        let c = benchmark_circuit(model, 2)?;
        let census = census_of(&c);
        let e = total_error(&census, &rates);
        println!(
            "{model} benchmark, 2 qubits: {} single, {} CNOT, E = {e:.4}, F = {:.2}%",
            census.n_single,
            census.n_two,
            100.0 * fidelity(e)?
        );
    }

    let table = reference_results();
    for model in Model::ALL {
        let g = anchor_growth(&table, model)?;
        println!("\n{model}: E(n) = {:.4} + {:.5}·(n − 2)", g.base_error, g.slope);
        for n in [2, 12, 62, 127] {
            let (e, f) = predict(&g, n)?;
            println!("  n = {n:3}: E = {e:.4}, F = {:.2}%", 100.0 * f);
        }
    }
    Ok(())
}
