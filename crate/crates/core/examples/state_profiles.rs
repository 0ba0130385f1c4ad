//! Two-qubit state-frequency profiles of the default benchmarks, sampled as
//! 298 runs of 10⁵ shots and aggregated, with SVG histograms.
//!
//! Run: `cargo run --release --example state_profiles -- [outdir]`

use std::path::PathBuf;

use qubench::bench::{aggregate_shots, emit_plot, PlotInput, PlotKind};
use qubench::circuits::{exact_profile, state_frequency_profile, Model};
use qubench::rng::derive_seed;

const RUNS: u64 = 298;
const SHOTS_PER_RUN: u64 = 100_000;

fn main() -> qubench::Result<()> {
    let outdir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| "profiles".into());
    std::fs::create_dir_all(&outdir).expect("create output directory");

    for model in Model::ALL {
        let exact = exact_profile(model)?;
        let runs = (0..RUNS)
            .map(|k| state_frequency_profile(model, SHOTS_PER_RUN, derive_seed(4, k)))
            .collect::<qubench::Result<Vec<_>>>()?;
        let total = aggregate_shots(&runs)?;
        println!("{model} ({} shots)", total.total_shots);
        for (bits, p) in exact.iter() {
            println!("  {bits}: exact {p:.4}  counts {}", total.get(&bits));
        }
        let name = format!("{}_profile.svg", model.label().to_lowercase());
        emit_plot(PlotInput::Counts(&total), PlotKind::StateHistogram, outdir.join(&name))?;
        println!("  wrote {}", outdir.join(name).display());
    }
    Ok(())
}
