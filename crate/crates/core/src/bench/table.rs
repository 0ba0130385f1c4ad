//! Sweep result records, their CSV/JSON persistence, and the published
//! reference table.

use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::circuits::Model;
use crate::error::{Error, Result};
use crate::noise::{fidelity, fit_growth_model, ErrorGrowthModel};

/// Output column order for both formats.
pub const COLUMNS: [&str; 7] = [
    "qubits",
    "model",
    "freq_theory_ghz",
    "freq_hw_ghz",
    "fidelity_pct",
    "error_total",
    "backend",
];

/// How a row's numbers were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Backend {
    #[serde(rename = "exact-sim")]
    ExactSim,
    #[serde(rename = "analytic")]
    Analytic,
    /// Transcribed published values.
    #[serde(rename = "reference")]
    Reference,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub qubits: usize,
    pub model: Model,
    pub freq_theory_ghz: Option<f64>,
    pub freq_hw_ghz: Option<f64>,
    pub fidelity_pct: f64,
    pub error_total: f64,
    pub backend: Backend,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl TableFormat {
    /// Format implied by a `.csv` or `.json` extension.
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => Ok(TableFormat::Csv),
            Some(e) if e.eq_ignore_ascii_case("json") => Ok(TableFormat::Json),
            _ => Err(Error::param(format!(
                "cannot infer table format from {}",
                path.display()
            ))),
        }
    }
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => Err(Error::param(format!("unknown table format `{s}`"))),
        }
    }
}

impl fmt::Display for TableFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableFormat::Csv => "csv",
            TableFormat::Json => "json",
        })
    }
}

pub fn write_table(results: &[SweepResult], out: impl Write, format: TableFormat) -> Result<()> {
    let io = |e: std::io::Error| Error::io("<table output>", e);
    match format {
        TableFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(COLUMNS).map_err(|e| io(e.into()))?;
            for r in results {
                w.serialize(r).map_err(|e| io(e.into()))?;
            }
            w.flush().map_err(io)
        }
        TableFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, results).map_err(|e| io(e.into()))?;
            out.write_all(b"\n").map_err(io)
        }
    }
}

pub fn emit_table(results: &[SweepResult], path: impl AsRef<Path>, format: TableFormat) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    write_table(results, &mut w, format).map_err(|e| retag(e, path))?;
    w.flush().map_err(|e| Error::io(path, e))
}

fn retag(e: Error, path: &Path) -> Error {
    match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    }
}

pub fn read_table(mut input: impl Read, format: TableFormat) -> Result<Vec<SweepResult>> {
    match format {
        TableFormat::Csv => {
            let mut r = csv::Reader::from_reader(input);
            let headers = r.headers().map_err(|e| Error::parse("header", e.to_string()))?;
            if headers.iter().ne(COLUMNS) {
                return Err(Error::parse(
                    "header",
                    format!("expected columns {}", COLUMNS.join(",")),
                ));
            }
            r.deserialize()
                .enumerate()
                .map(|(i, row)| row.map_err(|e| Error::parse(format!("row {}", i + 1), e.to_string())))
                .collect()
        }
        TableFormat::Json => {
            let mut text = String::new();
            input
                .read_to_string(&mut text)
                .map_err(|e| Error::io("<table input>", e))?;
            serde_json::from_str(&text).map_err(|e| Error::parse("<root>", e.to_string()))
        }
    }
}

/// Load a table, choosing the format by extension.
pub fn load_table(path: impl AsRef<Path>) -> Result<Vec<SweepResult>> {
    let path = path.as_ref();
    let format = TableFormat::from_path(path)?;
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_table(file, format).map_err(|e| retag(e, path))
}

/// One published row: frequencies in GHz, fidelities in percent, and the
/// error exponents of both models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub qubits: usize,
    pub freq_theory_ghz: f64,
    pub freq_hw_ghz: f64,
    pub fidelity_jc: f64,
    pub fidelity_ising: f64,
    pub error_jc: f64,
    pub error_ising: f64,
}

const fn row(
    qubits: usize,
    freq_theory_ghz: f64,
    freq_hw_ghz: f64,
    fidelity_jc: f64,
    fidelity_ising: f64,
    error_jc: f64,
    error_ising: f64,
) -> ReferenceRow {
    ReferenceRow { qubits, freq_theory_ghz, freq_hw_ghz, fidelity_jc, fidelity_ising, error_jc, error_ising }
}

/// Published fidelity/error/frequency table, 2 to 126 qubits.
pub const REFERENCE_TABLE: [ReferenceRow; 14] = [
    row(2, 5.00, 4.60, 94.79, 94.29, 0.0534, 0.0587),
    row(12, 4.80, 4.98, 72.55, 70.29, 0.3208, 0.3525),
    row(22, 4.68, 5.03, 53.53, 52.40, 0.5882, 0.6462),
    row(32, 4.65, 4.91, 42.50, 39.06, 0.8556, 0.9400),
    row(42, 4.54, 5.06, 32.53, 29.11, 1.1229, 1.2337),
    row(52, 4.44, 4.91, 24.89, 22.14, 1.3903, 1.5275),
    row(62, 4.33, 4.93, 19.05, 16.18, 1.6575, 1.8212),
    row(72, 4.22, 5.05, 15.41, 12.06, 1.8696, 2.1153),
    row(82, 4.12, 4.89, 11.16, 8.99, 2.1924, 2.4087),
    row(92, 4.03, 4.91, 8.54, 6.70, 2.4958, 2.7025),
    row(102, 3.94, 4.80, 6.53, 4.99, 2.7272, 2.9962),
    row(112, 3.85, 5.00, 5.45, 3.91, 2.9082, 3.2395),
    row(122, 3.76, 4.93, 3.83, 2.77, 3.2619, 3.5837),
    row(126, 1.17, 4.90, 3.36, 2.39, 3.3923, 3.7305),
];

pub fn reference_row(qubits: usize) -> Option<&'static ReferenceRow> {
    REFERENCE_TABLE.iter().find(|r| r.qubits == qubits)
}

/// The reference table as 28 records, JC before Ising at each width.
pub fn reference_results() -> Vec<SweepResult> {
    REFERENCE_TABLE
        .iter()
        .flat_map(|r| {
            [
                (Model::Jc, r.fidelity_jc, r.error_jc),
                (Model::Ising, r.fidelity_ising, r.error_ising),
            ]
            .map(|(model, fidelity_pct, error_total)| SweepResult {
                qubits: r.qubits,
                model,
                freq_theory_ghz: Some(r.freq_theory_ghz),
                freq_hw_ghz: Some(r.freq_hw_ghz),
                fidelity_pct,
                error_total,
                backend: Backend::Reference,
            })
        })
        .collect()
}

/// Largest allowed `|100·e^{−E} − F|` on any row.
pub const MAX_GAP_PCT: f64 = 2.1;
/// Gap bound met by most rows.
pub const TIGHT_GAP_PCT: f64 = 0.05;
pub const MIN_TIGHT_ROWS: usize = 22;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyRow {
    pub qubits: usize,
    pub model: Model,
    pub error_total: f64,
    pub fidelity_pct: f64,
    pub predicted_pct: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyReport {
    pub rows: Vec<ConsistencyRow>,
    pub max_residual: f64,
    pub tight_rows: usize,
}

impl ConsistencyReport {
    pub fn passes(&self) -> bool {
        self.max_residual <= MAX_GAP_PCT && self.tight_rows >= MIN_TIGHT_ROWS.min(self.rows.len())
    }
}

/// Compare each row's fidelity with `100·e^{−E}` from its own error column.
pub fn consistency_report(results: &[SweepResult]) -> Result<ConsistencyReport> {
    let rows = results
        .iter()
        .map(|r| {
            let predicted_pct = 100.0 * fidelity(r.error_total)?;
            Ok(ConsistencyRow {
                qubits: r.qubits,
                model: r.model,
                error_total: r.error_total,
                fidelity_pct: r.fidelity_pct,
                predicted_pct,
                residual: (predicted_pct - r.fidelity_pct).abs(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let max_residual = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    let tight_rows = rows.iter().filter(|r| r.residual <= TIGHT_GAP_PCT).count();
    Ok(ConsistencyReport { rows, max_residual, tight_rows })
}

/// Two-point growth fit on the 2- and 12-qubit rows of `model`.
pub fn anchor_growth(results: &[SweepResult], model: Model) -> Result<ErrorGrowthModel> {
    let pts: Vec<(usize, f64)> = results
        .iter()
        .filter(|r| r.model == model)
        .map(|r| (r.qubits, r.error_total))
        .collect();
    fit_growth_model(&pts, 2..=12, model)
}
