//! Device calibration snapshots.
//!
//! JSON schema:
//!
//! ```json
//! {
//!   "qubits": 3,
//!   "frequencies_ghz": [4.91, 4.97, 5.02],
//!   "single_gate_error": [2.4e-4, 2.7e-4, 2.6e-4],
//!   "two_qubit_error": { "0-1": 6.1e-3, "1-2": 7.0e-3 },
//!   "readout_error": [0.05, 0.06, 0.05],
//!   "coupling_map": [[0, 1], [1, 2]],
//!   "timestamp": "2024-05-01T00:00:00Z"
//! }
//! ```
//!
//! `timestamp` is optional. Every other key is required; per-qubit arrays hold
//! exactly `qubits` entries and every `two_qubit_error` key must name an edge
//! of `coupling_map`, in either orientation.

use std::collections::BTreeMap;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::circuits::CouplingMap;
use crate::error::{Error, Result};
use crate::noise::ErrorRates;

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationData {
    pub frequencies_ghz: Vec<f64>,
    pub single_gate_error: Vec<f64>,
    /// Keyed by `(min, max)` qubit pair.
    pub two_qubit_error: BTreeMap<(usize, usize), f64>,
    pub readout_error: Vec<f64>,
    pub coupling_map: CouplingMap,
    pub timestamp: Option<String>,
}

#[derive(Serialize)]
struct CalibrationFile<'a> {
    qubits: usize,
    frequencies_ghz: &'a [f64],
    single_gate_error: &'a [f64],
    two_qubit_error: BTreeMap<String, f64>,
    readout_error: &'a [f64],
    coupling_map: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timestamp: Option<&'a str>,
}

fn field<T: DeserializeOwned>(obj: &Map<String, Value>, key: &str) -> Result<T> {
    let v = obj
        .get(key)
        .ok_or_else(|| Error::parse(key, format!("missing field: {key}")))?;
    serde_json::from_value(v.clone()).map_err(|e| Error::parse(key, e.to_string()))
}

fn per_qubit(obj: &Map<String, Value>, key: &str, n: usize) -> Result<Vec<f64>> {
    let v: Vec<f64> = field(obj, key)?;
    if v.len() != n {
        return Err(Error::parse(key, format!("expected {n} entries, found {}", v.len())));
    }
    Ok(v)
}

fn check_rate(key: String, v: f64) -> Result<()> {
    if (0.0..1.0).contains(&v) {
        Ok(())
    } else {
        Err(Error::parse(key, format!("error rate {v} outside [0, 1)")))
    }
}

fn parse_edge_key(key: &str) -> Option<(usize, usize)> {
    let (u, v) = key.split_once('-')?;
    Some((u.trim().parse().ok()?, v.trim().parse().ok()?))
}

impl CalibrationData {
    pub fn num_qubits(&self) -> usize {
        self.frequencies_ghz.len()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let root: Value = if text.trim().is_empty() {
            Value::Object(Map::new())
        } else {
            serde_json::from_str(text).map_err(|e| Error::parse("<root>", e.to_string()))?
        };
        let obj = root
            .as_object()
            .ok_or_else(|| Error::parse("<root>", "expected a JSON object"))?;

        let n: usize = field(obj, "qubits")?;
        if n == 0 {
            return Err(Error::parse("qubits", "must be at least 1"));
        }
        let frequencies_ghz = per_qubit(obj, "frequencies_ghz", n)?;
        for (q, &f) in frequencies_ghz.iter().enumerate() {
            if !(f > 0.0 && f.is_finite()) {
                return Err(Error::parse(
                    format!("frequencies_ghz[{q}]"),
                    format!("qubit {q} frequency {f} GHz must be positive"),
                ));
            }
        }
        let single_gate_error = per_qubit(obj, "single_gate_error", n)?;
        for (q, &e) in single_gate_error.iter().enumerate() {
            check_rate(format!("single_gate_error[{q}]"), e)?;
        }
        let readout_error = per_qubit(obj, "readout_error", n)?;
        for (q, &e) in readout_error.iter().enumerate() {
            check_rate(format!("readout_error[{q}]"), e)?;
        }

        let edges: Vec<[usize; 2]> = field(obj, "coupling_map")?;
        let mut coupling_map = CouplingMap::new(n);
        for (i, [u, v]) in edges.into_iter().enumerate() {
            coupling_map
                .add_edge(u, v)
                .map_err(|e| Error::parse(format!("coupling_map[{i}]"), e.to_string()))?;
        }

        let raw: BTreeMap<String, f64> = field(obj, "two_qubit_error")?;
        let mut two_qubit_error = BTreeMap::new();
        for (key, e) in raw {
            let path = format!("two_qubit_error.{key}");
            let (u, v) = parse_edge_key(&key)
                .ok_or_else(|| Error::parse(path.clone(), "edge keys have the form `u-v`"))?;
            if !coupling_map.contains(u, v) {
                return Err(Error::parse(path, format!("unknown edge ({u}, {v})")));
            }
            check_rate(path, e)?;
            two_qubit_error.insert((u.min(v), u.max(v)), e);
        }

        let timestamp = match obj.get("timestamp") {
            None | Some(Value::Null) => None,
            Some(_) => Some(field::<String>(obj, "timestamp")?),
        };

        Ok(CalibrationData {
            frequencies_ghz,
            single_gate_error,
            two_qubit_error,
            readout_error,
            coupling_map,
            timestamp,
        })
    }

    pub fn to_json(&self) -> String {
        let file = CalibrationFile {
            qubits: self.num_qubits(),
            frequencies_ghz: &self.frequencies_ghz,
            single_gate_error: &self.single_gate_error,
            two_qubit_error: self
                .two_qubit_error
                .iter()
                .map(|(&(u, v), &e)| (format!("{u}-{v}"), e))
                .collect(),
            readout_error: &self.readout_error,
            coupling_map: self.coupling_map.edges().map(|(u, v)| [u, v]).collect(),
            timestamp: self.timestamp.as_deref(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("calibration serializes");
        s.push('\n');
        s
    }

    /// Device-average error rates. Without any two-qubit entries the CNOT
    /// rate is zero.
    pub fn mean_rates(&self) -> Result<ErrorRates> {
        let mean = |v: &mut dyn Iterator<Item = f64>| {
            let (sum, n) = v.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
            if n == 0 { 0.0 } else { sum / n as f64 }
        };
        ErrorRates::new(
            mean(&mut self.single_gate_error.iter().copied()),
            mean(&mut self.two_qubit_error.values().copied()),
            mean(&mut self.readout_error.iter().copied()),
        )
    }

    /// Mean frequency of qubits `0..n`, capped at the device size.
    pub fn mean_frequency_ghz(&self, n: usize) -> f64 {
        let f = &self.frequencies_ghz[..n.clamp(1, self.num_qubits())];
        f.iter().sum::<f64>() / f.len() as f64
    }
}

pub fn load_calibration(path: impl AsRef<Path>) -> Result<CalibrationData> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    CalibrationData::parse(&text)
}
