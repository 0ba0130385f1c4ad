//! Sweep both models over the reference widths: simulate up to the
//! simulation cutoff, extrapolate beyond it, and write CSV, JSON and charts.
//!
//! Run: `cargo run --release --example table1_sweep -- [outdir]`

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use qubench::bench::{
    anchor_growth, emit_plot, emit_table, load_calibration, rates_matching_growth, reference_results, run_sweep,
    PlotInput, PlotKind, SweepConfig, TableFormat, REFERENCE_TABLE,
};
use qubench::circuits::Model;
use qubench::noise::ErrorRates;

fn main() -> qubench::Result<()> {
    let outdir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| "table1_sweep".into());
    std::fs::create_dir_all(&outdir).expect("create output directory");

    let reference = reference_results();
    let growth: BTreeMap<Model, _> = Model::ALL
        .iter()
        .map(|&m| Ok((m, anchor_growth(&reference, m)?)))
        .collect::<qubench::Result<_>>()?;
    let widths = REFERENCE_TABLE.iter().map(|r| r.qubits).collect();
    let mut config = SweepConfig::new(widths, Model::ALL.to_vec(), ErrorRates::REFERENCE, growth.clone());
    for m in Model::ALL {
        config.model_rates.insert(m, rates_matching_growth(m, &growth[&m])?);
    }
    config.max_sim_qubits = 12;
    config.calibration = Some(load_calibration(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data/brisbane_like.json"),
    )?);

    let run = run_sweep(&config)?;
    println!("qubits model  backend    E        F(%)    table F(%)");
    for (r, t) in run.results.iter().zip(&reference) {
        println!(
            "{:>6} {:<6} {:<9} {:>7.4} {:>8.2} {:>9.2}",
            r.qubits,
            r.model.label(),
            format!("{:?}", r.backend),
            r.error_total,
            r.fidelity_pct,
            t.fidelity_pct
        );
    }
    emit_table(&run.results, outdir.join("sweep.csv"), TableFormat::Csv)?;
    emit_table(&run.results, outdir.join("sweep.json"), TableFormat::Json)?;
    for kind in [PlotKind::FidelityVsQubits, PlotKind::ErrorVsQubits, PlotKind::FreqVsQubits] {
        emit_plot(PlotInput::Results(&run.results), kind, outdir.join(format!("{kind}.svg")))?;
    }
    emit_plot(PlotInput::Results(&reference), PlotKind::FreqVsQubits, outdir.join("reference_freq.svg"))?;
    println!("wrote {}", outdir.display());
    Ok(())
}
