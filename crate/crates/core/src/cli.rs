//! Command-line front end.
//!
//! Machine-readable results go to stdout (or files); human summaries go to
//! stderr. Exit codes: 0 success, 1 parameter/domain error or bad usage,
//! 2 I/O or parse error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bench::{
    self, anchor_growth, consistency_report, load_calibration, load_table, rates_matching_growth,
    reference_results, run_sweep, write_table, PlotInput, PlotKind, RunDir, RunManifest, SweepConfig,
    SweepResult, TableFormat, REFERENCE_TABLE,
};
use crate::circuits::{
    benchmark_circuit, build_ising_circuit, build_jc_circuit, circuit_unitary, phase_distance, JcPair, Model,
    TrotterPlan, MAX_UNITARY_QUBITS,
};
use crate::error::{Error, Result};
use crate::hamiltonians::{cooper_pair_spectrum, ghz_to_angular, CpbParams, IsingParams, JcDynamics, JcParams};
use crate::noise::{census_of, fidelity, predict, total_error, ErrorRates, GateCensus};
use crate::statevec::{bitstring, max_sim_qubits, run_circuit, ShotCounts, StateVector};

/// Widest register whose full probability table `ising` prints.
const DENSE_OUTPUT_QUBITS: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "qubench", version, about = "Superconducting-qubit model simulation and benchmarking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lowest Cooper-pair-box levels (energies in GHz).
    Spectrum(SpectrumArgs),
    /// Qubit excited-state population in a Jaynes–Cummings system.
    Jc(JcArgs),
    /// Simulate the Trotterized longitudinal Ising chain.
    Ising(IsingArgs),
    /// Gate-census error budget and fidelity.
    Noise(NoiseArgs),
    /// Qubit-count sweep written to a run directory.
    Bench(BenchArgs),
    /// Print or check the bundled reference table.
    Table1(Table1Args),
    /// Render an SVG chart.
    Plot(PlotArgs),
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    /// Charging energy E_C [GHz]
    #[arg(long)]
    ec: f64,
    /// Josephson energy E_J [GHz]
    #[arg(long)]
    ej: f64,
    /// Gate charge n_g
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    ng: f64,
    /// Charge-basis cutoff N_c (basis n = -N_c..=N_c)
    #[arg(long, default_value_t = 20)]
    cutoff: usize,
    /// Number of levels to report
    #[arg(long, default_value_t = 5)]
    levels: usize,
}

#[derive(Args, Debug)]
struct JcArgs {
    /// Qubit frequency [GHz]
    #[arg(long)]
    wq: f64,
    /// Resonator frequency [GHz]
    #[arg(long)]
    wr: f64,
    /// Coupling g [GHz]
    #[arg(long)]
    g: f64,
    /// End time [ns]
    #[arg(long)]
    tmax: f64,
    /// Number of evenly spaced samples in [0, tmax]
    #[arg(long, default_value_t = 101)]
    points: usize,
    /// Photon-number cutoff of the exact model
    #[arg(long, default_value_t = 10)]
    fock_cutoff: usize,
    /// Also run the Trotterized two-wire circuit
    #[arg(long)]
    circuit: bool,
    /// Trotter steps per sample for --circuit
    #[arg(long, default_value_t = 64)]
    steps: usize,
}

#[derive(Args, Debug)]
struct IsingArgs {
    /// Number of spins
    #[arg(long)]
    n: usize,
    /// Fields h_l: one value (broadcast) or n comma-separated values
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0")]
    h: Vec<f64>,
    /// Couplings J_l: one value (broadcast) or n-1 comma-separated values
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0")]
    j: Vec<f64>,
    /// Evolution time
    #[arg(long)]
    time: f64,
    /// Trotter steps
    #[arg(long, default_value_t = 1)]
    steps: usize,
    /// Start from the uniform superposition instead of |0…0⟩
    #[arg(long)]
    hadamard: bool,
    /// Shots to sample from the final state (0 = none)
    #[arg(long, default_value_t = 0)]
    shots: u64,
    /// Sampling seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct NoiseArgs {
    /// Error rates as JSON ({"eps_single", "eps_two", "eps_meas"}) or a calibration file
    #[arg(long, conflicts_with_all = ["eps1", "eps2", "epsm"])]
    rates_file: Option<PathBuf>,
    /// Single-qubit gate error [default: 2.596e-4]
    #[arg(long)]
    eps1: Option<f64>,
    /// CNOT error [default: 6.560e-3]
    #[arg(long)]
    eps2: Option<f64>,
    /// Measurement error [default: 0.0534]
    #[arg(long)]
    epsm: Option<f64>,
    /// `single,two,measured` counts, or `jc:N` / `ising:N` for a benchmark circuit
    #[arg(long, default_value = "12,2,true")]
    circuit_census: String,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Qubit counts [default: the reference table widths]
    #[arg(long, value_delimiter = ',')]
    counts: Vec<usize>,
    /// Models to run
    #[arg(long, value_delimiter = ',', default_value = "JC,Ising")]
    models: Vec<Model>,
    /// Calibration JSON; supplies error rates and the hardware frequency column
    #[arg(long)]
    calibration: Option<PathBuf>,
    /// Shots per simulated row
    #[arg(long, default_value_t = 1024)]
    shots: u64,
    /// Master seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Parent directory for run directories
    #[arg(long, default_value = "runs")]
    outdir: PathBuf,
    /// Widest simulated row [default: $QUBENCH_MAX_SIM_QUBITS or 24]
    #[arg(long)]
    max_sim: Option<usize>,
}

#[derive(Args, Debug)]
struct Table1Args {
    /// Check fidelity/error consistency and the linear growth fit
    #[arg(long)]
    check: bool,
    /// Table to use instead of the bundled reference values (.csv or .json)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output format when printing
    #[arg(long, default_value = "csv")]
    format: TableFormat,
}

#[derive(Args, Debug)]
struct PlotArgs {
    /// fidelity_vs_qubits | error_vs_qubits | freq_vs_qubits | state_histogram
    #[arg(long)]
    kind: PlotKind,
    /// Result table (.csv/.json), or counts JSON for state_histogram
    #[arg(long)]
    input: PathBuf,
    /// SVG file to write
    #[arg(long)]
    output: PathBuf,
}

/// Parse `args` (including the program name) and run, returning the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    let result = match cli.command {
        Command::Spectrum(a) => spectrum(a, out, err),
        Command::Jc(a) => jc(a, out, err),
        Command::Ising(a) => ising(a, out, err),
        Command::Noise(a) => noise(a, out, err),
        Command::Bench(a) => bench_cmd(a, out, err),
        Command::Table1(a) => table1(a, out, err),
        Command::Plot(a) => plot(a, err),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn stdout_err(e: std::io::Error) -> Error {
    Error::io("<stdout>", e)
}

fn print_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("json value serializes");
    writeln!(out, "{text}").map_err(stdout_err)
}

fn spectrum(a: SpectrumArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    // the spectrum is linear in (E_C, E_J), so GHz in gives GHz out
    let params = CpbParams::new(a.ec, a.ej, a.ng, a.cutoff)?;
    let levels = cooper_pair_spectrum(&params, a.levels)?;
    let transitions: Vec<f64> = levels.iter().skip(1).map(|e| e - levels[0]).collect();
    if let Some(f01) = transitions.first() {
        let _ = writeln!(err, "E1 - E0 = {f01:.6} GHz (E_J/E_C = {:.3})", a.ej / a.ec);
    }
    print_json(
        out,
        &json!({
            "e_c_ghz": a.ec,
            "e_j_ghz": a.ej,
            "n_g": a.ng,
            "charge_cutoff": a.cutoff,
            "levels_ghz": levels,
            "transitions_ghz": transitions,
        }),
    )
}

fn jc(a: JcArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    if a.points < 2 {
        return Err(Error::param("--points must be at least 2"));
    }
    if !(a.tmax >= 0.0 && a.tmax.is_finite()) {
        return Err(Error::param(format!("--tmax must be non-negative, got {}", a.tmax)));
    }
    let params = JcParams::new(ghz_to_angular(a.wq), ghz_to_angular(a.wr), ghz_to_angular(a.g), a.fock_cutoff)?;
    let dynamics = JcDynamics::new(&params)?;
    let pair = JcPair { g: params.g, delta: params.detuning() };
    let _ = writeln!(
        err,
        "detuning {:.6} GHz, coupling {:.6} GHz, {} samples over {} ns",
        a.wq - a.wr,
        a.g,
        a.points,
        a.tmax
    );

    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::io("<stdout>", e.into());
    if a.circuit {
        w.write_record(["t_ns", "p_excited", "p_excited_circuit"]).map_err(io)?;
    } else {
        w.write_record(["t_ns", "p_excited"]).map_err(io)?;
    }
    let mut worst: f64 = 0.0;
    for k in 0..a.points {
        let t_ns = a.tmax * k as f64 / (a.points - 1) as f64;
        let t = t_ns * 1e-9;
        let p = dynamics.excited_population(t)?;
        if a.circuit {
            let c = build_jc_circuit(&[pair], &TrotterPlan::new(t, a.steps)?)?;
            let state = run_circuit(&c, Some(StateVector::basis(2, 0b01)?))?;
            let pc = state.probabilities(&[0])?.probs()[1];
            worst = worst.max((pc - p).abs());
            w.serialize((t_ns, p, pc)).map_err(io)?;
        } else {
            w.serialize((t_ns, p)).map_err(io)?;
        }
    }
    if a.circuit {
        let _ = writeln!(err, "max |circuit - exact| = {worst:.3e} ({} Trotter steps)", a.steps);
    }
    let bytes = w.into_inner().map_err(|e| Error::io("<stdout>", e.into_error()))?;
    out.write_all(&bytes).map_err(stdout_err)
}

fn broadcast(values: &[f64], len: usize, flag: &str) -> Result<Vec<f64>> {
    match values {
        [v] => Ok(vec![*v; len]),
        v if v.len() == len => Ok(v.to_vec()),
        v => Err(Error::param(format!("{flag} takes 1 or {len} values, got {}", v.len()))),
    }
}

fn ising(a: IsingArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    if a.n < 1 {
        return Err(Error::param("--n must be at least 1"));
    }
    let params = IsingParams::new(broadcast(&a.h, a.n, "--h")?, broadcast(&a.j, a.n - 1, "--j")?)?;
    let plan = TrotterPlan::new(a.time, a.steps)?;
    let circuit = build_ising_circuit(&params, &plan, a.hadamard);
    let evolution = build_ising_circuit(&params, &plan, false);
    let state = run_circuit(&circuit, None)?;

    let mut report = json!({
        "num_qubits": a.n,
        "time": a.time,
        "steps": a.steps,
        "gates": circuit.len(),
        "census": census_of(&circuit),
    });
    if a.n <= MAX_UNITARY_QUBITS {
        let u = circuit_unitary(&evolution)?;
        let identity = nalgebra::DMatrix::identity(u.nrows(), u.ncols());
        let is_identity = phase_distance(&u, &identity) < 1e-10;
        report["identity"] = json!(is_identity);
        if is_identity {
            let _ = writeln!(err, "evolution is the identity (up to global phase)");
        }
    }
    if a.n <= DENSE_OUTPUT_QUBITS {
        let all: Vec<usize> = (0..a.n).collect();
        let probs: BTreeMap<String, f64> = state
            .probabilities(&all)?
            .probs()
            .iter()
            .enumerate()
            .map(|(i, &p)| (bitstring(i, a.n), p))
            .collect();
        report["probabilities"] = json!(probs);
    }
    if a.shots > 0 {
        let counts = state.sample_counts(circuit.measured_qubits(), a.shots, a.seed)?;
        report["counts"] = json!(counts);
    }
    let _ = writeln!(err, "{} spins, {} gates, t = {}", a.n, circuit.len(), a.time);
    print_json(out, &report)
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn load_rates(path: &Path) -> Result<ErrorRates> {
    let text = read_file(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::parse("<root>", e.to_string()))?;
    if value.get("qubits").is_some() {
        return bench::CalibrationData::parse(&text)?.mean_rates();
    }
    let rates: ErrorRates =
        serde_json::from_value(value).map_err(|e| Error::parse("<root>", e.to_string()))?;
    rates.validate()?;
    Ok(rates)
}

fn parse_census(spec: &str) -> Result<GateCensus> {
    if let Some((model, n)) = spec.split_once(':') {
        let model: Model = model.parse()?;
        let n: usize = n
            .parse()
            .map_err(|_| Error::param(format!("bad qubit count in --circuit-census `{spec}`")))?;
        return Ok(census_of(&benchmark_circuit(model, n)?));
    }
    let bad = || Error::param(format!("--circuit-census expects `single,two,measured`, got `{spec}`"));
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [single, two, measured] = parts[..] else {
        return Err(bad());
    };
    Ok(GateCensus {
        n_single: single.parse().map_err(|_| bad())?,
        n_two: two.parse().map_err(|_| bad())?,
        measured: measured.parse().map_err(|_| bad())?,
    })
}

fn noise(a: NoiseArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let rates = match &a.rates_file {
        Some(p) => load_rates(p)?,
        None => {
            let d = ErrorRates::REFERENCE;
            ErrorRates::new(
                a.eps1.unwrap_or(d.eps_single),
                a.eps2.unwrap_or(d.eps_two),
                a.epsm.unwrap_or(d.eps_meas),
            )?
        }
    };
    let census = parse_census(&a.circuit_census)?;
    let e = total_error(&census, &rates);
    let f = fidelity(e)?;
    let _ = writeln!(err, "E = {e:.4}, F = {:.2}%", 100.0 * f);
    print_json(
        out,
        &json!({
            "rates": rates,
            "census": census,
            "error_total": e,
            "fidelity": f,
            "fidelity_pct": 100.0 * f,
        }),
    )
}

const BENCH_PLOTS: [PlotKind; 3] = [PlotKind::FidelityVsQubits, PlotKind::ErrorVsQubits, PlotKind::FreqVsQubits];

fn counts_file(model: Model, n: usize) -> String {
    format!("counts-{}-{n}.json", model.label())
}

fn bench_cmd(a: BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let counts = if a.counts.is_empty() {
        REFERENCE_TABLE.iter().map(|r| r.qubits).collect()
    } else {
        a.counts.clone()
    };
    let reference = reference_results();
    let growth: BTreeMap<Model, _> = Model::ALL
        .iter()
        .map(|&m| Ok((m, anchor_growth(&reference, m)?)))
        .collect::<Result<_>>()?;
    let calibration = a.calibration.as_deref().map(load_calibration).transpose()?;

    let mut config = SweepConfig::new(counts.clone(), a.models.clone(), ErrorRates::REFERENCE, growth.clone());
    match &calibration {
        Some(c) => config.rates = c.mean_rates()?,
        None => {
            for &m in &a.models {
                config.model_rates.insert(m, rates_matching_growth(m, &growth[&m])?);
            }
        }
    }
    config.shots = a.shots;
    config.seed = a.seed;
    config.max_sim_qubits = a.max_sim.unwrap_or_else(max_sim_qubits);
    config.calibration = calibration;

    let mut outputs: Vec<String> = vec!["results.csv".into(), "results.json".into()];
    outputs.extend(BENCH_PLOTS.iter().map(|k| format!("{k}.svg")));
    if a.shots > 0 {
        for &n in counts.iter().filter(|&&n| n <= config.max_sim_qubits) {
            outputs.extend(a.models.iter().map(|&m| counts_file(m, n)));
        }
    }
    let parameters = json!({
        "counts": counts,
        "models": a.models,
        "calibration": a.calibration,
        "shots": a.shots,
        "max_sim_qubits": config.max_sim_qubits,
        "rates": if config.model_rates.is_empty() {
            json!(config.rates)
        } else {
            json!(config.model_rates.iter().map(|(m, r)| (m.label(), r)).collect::<BTreeMap<_, _>>())
        },
        "growth": growth.iter().map(|(m, g)| (m.label(), g)).collect::<BTreeMap<_, _>>(),
    });
    let dir = RunDir::create(&a.outdir, RunManifest::new(bench::run_timestamp(), a.seed, parameters, outputs))?;

    let run = run_sweep(&config)?;
    bench::emit_table(&run.results, dir.file("results.csv"), TableFormat::Csv)?;
    bench::emit_table(&run.results, dir.file("results.json"), TableFormat::Json)?;
    for kind in BENCH_PLOTS {
        match bench::emit_plot(PlotInput::Results(&run.results), kind, dir.file(&format!("{kind}.svg"))) {
            // no frequency column without calibration or reference widths
            Err(Error::Parameter(_)) if kind == PlotKind::FreqVsQubits => {}
            other => other?,
        }
    }
    for rc in &run.counts {
        let path = dir.file(&counts_file(rc.model, rc.qubits));
        let mut text = serde_json::to_string_pretty(rc).expect("counts serialize");
        text.push('\n');
        std::fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
    }
    write_table(&run.results, &mut *out, TableFormat::Csv).map_err(|e| match e {
        Error::Io { source, .. } => stdout_err(source),
        other => other,
    })?;
    let simulated = run.results.iter().filter(|r| r.backend == bench::Backend::ExactSim).count();
    let _ = writeln!(
        err,
        "{} rows ({simulated} simulated, {} analytic) written to {}",
        run.results.len(),
        run.results.len() - simulated,
        dir.path.display()
    );
    Ok(())
}

fn table1(a: Table1Args, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let rows: Vec<SweepResult> = match &a.input {
        Some(p) => load_table(p)?,
        None => reference_results(),
    };
    if !a.check {
        return write_table(&rows, &mut *out, a.format).map_err(|e| match e {
            Error::Io { source, .. } => stdout_err(source),
            other => other,
        });
    }

    let report = consistency_report(&rows)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &report.rows {
        w.serialize(r).map_err(|e| Error::io("<stdout>", e.into()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::io("<stdout>", e.into_error()))?;
    out.write_all(&bytes).map_err(stdout_err)?;
    let _ = writeln!(
        err,
        "{} rows; max |100e^-E - F| = {:.4} (limit {}); {} rows within {} (need {})",
        report.rows.len(),
        report.max_residual,
        bench::table::MAX_GAP_PCT,
        report.tight_rows,
        bench::table::TIGHT_GAP_PCT,
        bench::table::MIN_TIGHT_ROWS
    );
    for model in Model::ALL {
        let Ok(g) = anchor_growth(&rows, model) else { continue };
        let _ = writeln!(err, "{model}: E2 = {:.4}, slope = {:.5} per qubit", g.base_error, g.slope);
        for r in rows.iter().filter(|r| r.model == model) {
            let (e, _) = predict(&g, r.qubits)?;
            let _ = writeln!(err, "  n = {:3}: fit {e:.4}, table {:.4}, |dE| = {:.1e}", r.qubits, r.error_total, (e - r.error_total).abs());
        }
    }
    if report.passes() {
        let _ = writeln!(err, "consistency check passed");
        Ok(())
    } else {
        Err(Error::Domain("table consistency check failed".into()))
    }
}

/// Counts JSON: either a bare tally or a sweep row record with a `counts`
/// field.
fn load_counts(path: &Path) -> Result<ShotCounts> {
    let text = read_file(path)?;
    let mut value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::parse("<root>", e.to_string()))?;
    if value.get("total_shots").is_none() {
        if let Some(inner) = value.get_mut("counts").filter(|v| v.get("total_shots").is_some()) {
            value = inner.take();
        }
    }
    let counts: ShotCounts =
        serde_json::from_value(value).map_err(|e| Error::parse("counts", e.to_string()))?;
    // re-validate keys and totals
    let checked = ShotCounts::from_counts(counts.width, counts.counts.iter().map(|(k, &v)| (k.as_str(), v)))?;
    if checked.total_shots != counts.total_shots {
        return Err(Error::parse("total_shots", "does not equal the sum of counts"));
    }
    Ok(checked)
}

fn plot(a: PlotArgs, err: &mut dyn Write) -> Result<()> {
    if a.kind == PlotKind::StateHistogram {
        let counts = load_counts(&a.input)?;
        bench::emit_plot(PlotInput::Counts(&counts), a.kind, &a.output)?;
    } else {
        let rows = load_table(&a.input)?;
        bench::emit_plot(PlotInput::Results(&rows), a.kind, &a.output)?;
    }
    let _ = writeln!(err, "wrote {}", a.output.display());
    Ok(())
}
