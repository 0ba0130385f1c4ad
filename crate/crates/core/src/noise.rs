//! Gate-census error budget.
//!
//! A circuit's total error exponent is
//! `E = n_single·ε₁ + n_two·ε₂ + ε_m·[measured]` and its fidelity is
//! `F = e^{−E}`. Across register widths the exponent is modelled as linear,
//! `E(n) = E₂ + s·(n − 2)`, anchored at the two-qubit value.

use std::ops::RangeInclusive;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::circuits::Model;
use crate::error::{Error, Result};
use crate::rng;
use crate::statevec::{Circuit, Gate};

/// Per-class error probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorRates {
    pub eps_single: f64,
    pub eps_two: f64,
    pub eps_meas: f64,
}

impl ErrorRates {
    /// Average single-qubit, CNOT and measurement errors of the reference
    /// 127-qubit device.
    pub const REFERENCE: ErrorRates = ErrorRates {
        eps_single: 2.596e-4,
        eps_two: 6.560e-3,
        eps_meas: 0.0534,
    };

    pub const ZERO: ErrorRates = ErrorRates {
        eps_single: 0.0,
        eps_two: 0.0,
        eps_meas: 0.0,
    };

    pub fn new(eps_single: f64, eps_two: f64, eps_meas: f64) -> Result<Self> {
        let r = ErrorRates { eps_single, eps_two, eps_meas };
        r.validate()?;
        Ok(r)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("eps_single", self.eps_single),
            ("eps_two", self.eps_two),
            ("eps_meas", self.eps_meas),
        ] {
            if !(0.0..1.0).contains(&v) {
                return Err(Error::param(format!("{name} must lie in [0, 1), got {v}")));
            }
        }
        Ok(())
    }

    /// Rates under which the census exponent of a circuit family reproduces
    /// `growth` exactly at two widths.
    ///
    /// The CNOT/single-gate ratio is held at `two_over_single`; the common
    /// scale and the measurement error are solved from the two anchors. When
    /// that solution needs a negative measurement error, `eps_meas` is pinned
    /// at zero and the scale is the least-squares fit to both anchors, so the
    /// match is then approximate.
    pub fn matching_growth(
        growth: &ErrorGrowthModel,
        (n_a, census_a): (usize, GateCensus),
        (n_b, census_b): (usize, GateCensus),
        two_over_single: f64,
    ) -> Result<Self> {
        let weight = |c: &GateCensus| c.n_single as f64 + two_over_single * c.n_two as f64;
        let (wa, wb) = (weight(&census_a), weight(&census_b));
        if wa == wb {
            return Err(Error::param("anchor circuits have identical gate weight"));
        }
        let (ea, eb) = (growth.error_at(n_a), growth.error_at(n_b));
        let mut scale = (eb - ea) / (wb - wa);
        let mut eps_meas = ea - scale * wa;
        if eps_meas < 0.0 {
            eps_meas = 0.0;
            scale = (wa * ea + wb * eb) / (wa * wa + wb * wb);
        }
        ErrorRates::new(scale, scale * two_over_single, eps_meas).map_err(|e| {
            Error::Domain(format!("growth model not realizable by gate rates: {e}"))
        })
    }
}

impl Default for ErrorRates {
    fn default() -> Self {
        ErrorRates::REFERENCE
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GateCensus {
    pub n_single: u64,
    pub n_two: u64,
    pub measured: bool,
}

/// CNOTs count as two-qubit gates, everything else as single-qubit.
pub fn census_of(circuit: &Circuit) -> GateCensus {
    let n_two = circuit.gates().iter().filter(|g| g.is_two_qubit()).count() as u64;
    GateCensus {
        n_single: circuit.len() as u64 - n_two,
        n_two,
        measured: !circuit.measured_qubits().is_empty(),
    }
}

pub fn total_error(census: &GateCensus, rates: &ErrorRates) -> f64 {
    let meas = if census.measured { rates.eps_meas } else { 0.0 };
    census.n_single as f64 * rates.eps_single + census.n_two as f64 * rates.eps_two + meas
}

/// `F = e^{−E}`.
pub fn fidelity(error: f64) -> Result<f64> {
    if !(error >= 0.0) {
        return Err(Error::param(format!("error exponent must be non-negative, got {error}")));
    }
    Ok((-error).exp())
}

/// Linear error growth `E(n) = E₂ + s·(n − 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorGrowthModel {
    pub base_error: f64,
    pub slope: f64,
    pub model: Model,
}

impl ErrorGrowthModel {
    pub fn error_at(&self, n: usize) -> f64 {
        self.base_error + self.slope * (n as f64 - 2.0)
    }
}

/// Least-squares line through the `(n, E)` rows with `n` in `fit_range`.
pub fn fit_growth_model(
    rows: &[(usize, f64)],
    fit_range: RangeInclusive<usize>,
    model: Model,
) -> Result<ErrorGrowthModel> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|(n, _)| fit_range.contains(n))
        .map(|&(n, e)| (n as f64 - 2.0, e))
        .collect();
    if pts.len() < 2 {
        return Err(Error::param(format!(
            "need at least 2 rows in {fit_range:?}, found {}",
            pts.len()
        )));
    }
    let m = pts.len() as f64;
    let mean_x = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::param("fit rows share a single qubit count"));
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let slope = sxy / sxx;
    let base_error = mean_y - slope * mean_x;
    if base_error < 0.0 || slope < 0.0 {
        return Err(Error::Domain(format!(
            "fitted growth E₂ = {base_error}, s = {slope} is negative"
        )));
    }
    Ok(ErrorGrowthModel { base_error, slope, model })
}

/// Predicted `(E, F)` at `n` qubits.
pub fn predict(model: &ErrorGrowthModel, n: usize) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::param(format!("growth model starts at 2 qubits, got {n}")));
    }
    let e = model.error_at(n);
    Ok((e, fidelity(e)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pauli {
    X,
    Y,
    Z,
}

/// One stochastic error inserted by [`inject_pauli_noise`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectedPauli {
    /// Index of the faulty gate in the source circuit, or `None` for a
    /// readout fault.
    pub after_gate: Option<usize>,
    pub qubit: usize,
    pub pauli: Pauli,
}

/// A sampled noisy circuit and the faults that were inserted.
#[derive(Debug, Clone, PartialEq)]
pub struct NoisyCircuit {
    pub circuit: Circuit,
    pub events: Vec<InjectedPauli>,
}

impl From<NoisyCircuit> for Circuit {
    fn from(n: NoisyCircuit) -> Circuit {
        n.circuit
    }
}

fn push_pauli(c: &mut Circuit, q: usize, p: Pauli) {
    match p {
        Pauli::X => c.push_valid(Gate::x(q)),
        // Z = P(π); Y ≅ X·Z up to global phase
        Pauli::Z => c.push_valid(Gate::p(q, std::f64::consts::PI)),
        Pauli::Y => {
            c.push_valid(Gate::p(q, std::f64::consts::PI));
            c.push_valid(Gate::x(q));
        }
    }
}

/// Sample a stochastic Pauli channel.
///
/// Each gate fails independently with `eps_single` (single-qubit) or
/// `eps_two` (CNOT); a failed gate is followed by an independent uniformly
/// chosen Pauli on each qubit it touches. A measured circuit additionally
/// suffers, with probability `eps_meas`, an X on one uniformly chosen
/// measured qubit just before readout.
pub fn inject_pauli_noise(circuit: &Circuit, rates: &ErrorRates, seed: u64) -> Result<NoisyCircuit> {
    rates.validate()?;
    let mut rng = rng::stream(seed, rng::PAULI_STREAM);
    let mut out = Circuit::new(circuit.num_qubits());
    let mut events = Vec::new();
    let pick = |rng: &mut rand_chacha::ChaCha8Rng| match rng.random_range(0..3) {
        0 => Pauli::X,
        1 => Pauli::Y,
        _ => Pauli::Z,
    };
    for (i, gate) in circuit.gates().iter().enumerate() {
        out.push_valid(*gate);
        let eps = if gate.is_two_qubit() { rates.eps_two } else { rates.eps_single };
        if eps > 0.0 && rng.random::<f64>() < eps {
            for q in gate.qubits() {
                let pauli = pick(&mut rng);
                push_pauli(&mut out, q, pauli);
                events.push(InjectedPauli { after_gate: Some(i), qubit: q, pauli });
            }
        }
    }
    let measured = circuit.measured_qubits();
    if !measured.is_empty() && rates.eps_meas > 0.0 && rng.random::<f64>() < rates.eps_meas {
        let q = measured[rng.random_range(0..measured.len())];
        push_pauli(&mut out, q, Pauli::X);
        events.push(InjectedPauli { after_gate: None, qubit: q, pauli: Pauli::X });
    }
    out.set_measured(measured)?;
    Ok(NoisyCircuit { circuit: out, events })
}
