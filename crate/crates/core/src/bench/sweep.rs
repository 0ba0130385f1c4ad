//! Qubit-count sweeps over the benchmark circuits.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::calibration::CalibrationData;
use super::table::{reference_row, Backend, SweepResult};
use crate::circuits::{benchmark_circuit, Model};
use crate::error::{Error, Result};
use crate::noise::{census_of, fidelity, predict, total_error, ErrorGrowthModel, ErrorRates};
use crate::rng::derive_seed;
use crate::statevec::{max_sim_qubits, run_circuit, ShotCounts};

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub qubit_counts: Vec<usize>,
    pub models: Vec<Model>,
    pub rates: ErrorRates,
    /// Per-model overrides of `rates`.
    pub model_rates: BTreeMap<Model, ErrorRates>,
    pub growth: BTreeMap<Model, ErrorGrowthModel>,
    /// Shots sampled from each simulated row; zero skips simulation.
    pub shots: u64,
    pub seed: u64,
    /// Widest row run on the simulator; wider rows use the growth model.
    pub max_sim_qubits: usize,
    /// Source of the hardware frequency column.
    pub calibration: Option<CalibrationData>,
}

impl SweepConfig {
    pub fn new(
        qubit_counts: Vec<usize>,
        models: Vec<Model>,
        rates: ErrorRates,
        growth: BTreeMap<Model, ErrorGrowthModel>,
    ) -> Self {
        SweepConfig {
            qubit_counts,
            models,
            rates,
            model_rates: BTreeMap::new(),
            growth,
            shots: 0,
            seed: 0,
            max_sim_qubits: max_sim_qubits(),
            calibration: None,
        }
    }
}

/// Register counts of one simulated row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowCounts {
    pub qubits: usize,
    pub model: Model,
    pub seed: u64,
    pub counts: ShotCounts,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRun {
    pub results: Vec<SweepResult>,
    pub counts: Vec<RowCounts>,
}

/// Run every (width, model) row, widths outermost, in input order.
///
/// Row `i` samples with seed `derive_seed(seed, i + 1)`, so rows are
/// independent of scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepRun> {
    if config.qubit_counts.is_empty() {
        return Err(Error::param("sweep needs at least one qubit count"));
    }
    if config.models.is_empty() {
        return Err(Error::param("sweep needs at least one model"));
    }
    if let Some(&n) = config.qubit_counts.iter().find(|&&n| n < 2) {
        return Err(Error::param(format!("qubit counts must be at least 2, got {n}")));
    }
    config.rates.validate()?;
    for r in config.model_rates.values() {
        r.validate()?;
    }

    let rows: Vec<(usize, Model)> = config
        .qubit_counts
        .iter()
        .flat_map(|&n| config.models.iter().map(move |&m| (n, m)))
        .collect();
    let done = rows
        .par_iter()
        .enumerate()
        .map(|(i, &(n, model))| run_row(config, n, model, derive_seed(config.seed, i as u64 + 1)))
        .collect::<Result<Vec<_>>>()?;

    let mut run = SweepRun { results: Vec::with_capacity(done.len()), counts: Vec::new() };
    for (result, counts) in done {
        run.results.push(result);
        run.counts.extend(counts);
    }
    Ok(run)
}

fn run_row(config: &SweepConfig, n: usize, model: Model, seed: u64) -> Result<(SweepResult, Option<RowCounts>)> {
    let (error_total, f, backend, counts) = if n <= config.max_sim_qubits {
        let circuit = benchmark_circuit(model, n)?;
        let rates = config.model_rates.get(&model).unwrap_or(&config.rates);
        let e = total_error(&census_of(&circuit), rates);
        let counts = if config.shots > 0 {
            let state = run_circuit(&circuit, None)?;
            let counts = state.sample_counts(circuit.measured_qubits(), config.shots, seed)?;
            Some(RowCounts { qubits: n, model, seed, counts })
        } else {
            None
        };
        (e, fidelity(e)?, Backend::ExactSim, counts)
    } else {
        let growth = config
            .growth
            .get(&model)
            .ok_or_else(|| Error::param(format!("no growth model for {model} at {n} qubits")))?;
        let (e, f) = predict(growth, n)?;
        (e, f, Backend::Analytic, None)
    };
    let result = SweepResult {
        qubits: n,
        model,
        freq_theory_ghz: reference_row(n).map(|r| r.freq_theory_ghz),
        freq_hw_ghz: config.calibration.as_ref().map(|c| c.mean_frequency_ghz(n)),
        fidelity_pct: 100.0 * f,
        error_total,
        backend,
    };
    Ok((result, counts))
}

/// Rates whose census exponent on the benchmark circuit of `model` follows
/// `growth` at 2 and 12 qubits, keeping the reference CNOT/single ratio.
pub fn rates_matching_growth(model: Model, growth: &ErrorGrowthModel) -> Result<ErrorRates> {
    let anchor = |n| -> Result<_> { Ok((n, census_of(&benchmark_circuit(model, n)?))) };
    let r = ErrorRates::REFERENCE;
    ErrorRates::matching_growth(growth, anchor(2)?, anchor(12)?, r.eps_two / r.eps_single)
}

/// Sum several runs' tallies.
pub fn aggregate_shots(runs: &[ShotCounts]) -> Result<ShotCounts> {
    let first = runs
        .first()
        .ok_or_else(|| Error::param("nothing to aggregate"))?;
    let mut total = ShotCounts::new(first.width);
    for r in runs {
        total.merge(r)?;
    }
    Ok(total)
}
