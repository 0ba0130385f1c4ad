//! Load the bundled 127-qubit calibration, summarize it, and check benchmark
//! circuits against its coupling map.
//!
//! Run: `cargo run --release --example calibration_layout`

use std::path::Path;

use qubench::bench::load_calibration;
use qubench::circuits::{benchmark_circuit, validate_layout, Model};

fn main() -> qubench::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/brisbane_like.json");
    let cal = load_calibration(&path)?;
    let f = &cal.frequencies_ghz;
    let (lo, hi) = f.iter().fold((f64::INFINITY, 0.0f64), |(a, b), &x| (a.min(x), b.max(x)));
    println!("{} qubits, {} couplers", cal.num_qubits(), cal.coupling_map.num_edges());
    println!("frequencies {lo:.3}–{hi:.3} GHz");
    let r = cal.mean_rates()?;
    println!(
        "mean errors: single {:.4e}, CNOT {:.4e}, readout {:.4}",
        r.eps_single, r.eps_two, r.eps_meas
    );

    for model in Model::ALL {
        for n in [2, 8, 16] {
            let c = benchmark_circuit(model, n)?;
            let bad = validate_layout(&c, &cal.coupling_map)?;
            println!("{model} on qubits 0..{n}: {} illegal CNOTs", bad.len());
            if let Some(v) = bad.first() {
                println!("  first: gate {} on ({}, {})", v.gate_index, v.control, v.target);
            }
        }
    }
    Ok(())
}
