//! Exact pure-state simulation.
//!
//! Amplitudes are stored densely, `2^n` complex doubles for `n` qubits. Qubit 0
//! is the least-significant bit of the basis index; bitstrings are printed with
//! the most-significant qubit first, so on two qubits `"10"` means qubit 1 is
//! set and qubit 0 is clear.
//!
//! Gate conventions (fixed because unitary comparisons depend on them):
//!
//! * `Rz(θ) = diag(e^{-iθ/2}, e^{iθ/2})`
//! * `P(θ)  = diag(1, e^{iθ})`
//! * `SqrtX = ½ [[1+i, 1-i], [1-i, 1+i]]`

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64 as C64;
use rand_distr::{Binomial, Distribution as _};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng;

/// Width limit when `QUBENCH_MAX_SIM_QUBITS` is unset.
pub const DEFAULT_MAX_SIM_QUBITS: usize = 24;
/// Environment variable overriding [`DEFAULT_MAX_SIM_QUBITS`].
pub const MAX_SIM_QUBITS_ENV: &str = "QUBENCH_MAX_SIM_QUBITS";

/// Largest register the dense simulator will allocate.
pub fn max_sim_qubits() -> usize {
    std::env::var(MAX_SIM_QUBITS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n >= 1 && n < usize::BITS as usize - 5)
        .unwrap_or(DEFAULT_MAX_SIM_QUBITS)
}

/// Tolerance on `Σ|a|² − 1` for any state the simulator accepts or produces.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Below this many amplitudes kernels run on the calling thread.
const PARALLEL_THRESHOLD: usize = 1 << 14;

/// One gate application from the supported set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "gate", rename_all = "lowercase")]
pub enum Gate {
    H { target: usize },
    X { target: usize },
    #[serde(rename = "sx")]
    SqrtX { target: usize },
    P { target: usize, theta: f64 },
    Rz { target: usize, theta: f64 },
    Cnot { control: usize, target: usize },
}

impl Gate {
    pub fn h(target: usize) -> Self {
        Gate::H { target }
    }
    pub fn x(target: usize) -> Self {
        Gate::X { target }
    }
    pub fn sx(target: usize) -> Self {
        Gate::SqrtX { target }
    }
    pub fn p(target: usize, theta: f64) -> Self {
        Gate::P { target, theta }
    }
    pub fn rz(target: usize, theta: f64) -> Self {
        Gate::Rz { target, theta }
    }
    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::Cnot { control, target }
    }

    pub fn target(&self) -> usize {
        match *self {
            Gate::H { target }
            | Gate::X { target }
            | Gate::SqrtX { target }
            | Gate::P { target, .. }
            | Gate::Rz { target, .. }
            | Gate::Cnot { target, .. } => target,
        }
    }

    pub fn control(&self) -> Option<usize> {
        match *self {
            Gate::Cnot { control, .. } => Some(control),
            _ => None,
        }
    }

    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::Cnot { .. })
    }

    /// Qubits the gate acts on, control first.
    pub fn qubits(&self) -> Vec<usize> {
        match self.control() {
            Some(c) => vec![c, self.target()],
            None => vec![self.target()],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::H { .. } => "h",
            Gate::X { .. } => "x",
            Gate::SqrtX { .. } => "sx",
            Gate::P { .. } => "p",
            Gate::Rz { .. } => "rz",
            Gate::Cnot { .. } => "cx",
        }
    }

    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        let target = self.target();
        if target >= num_qubits {
            return Err(Error::param(format!(
                "{} target {target} out of range for {num_qubits} qubits",
                self.name()
            )));
        }
        if let Some(control) = self.control() {
            if control >= num_qubits {
                return Err(Error::param(format!(
                    "cx control {control} out of range for {num_qubits} qubits"
                )));
            }
            if control == target {
                return Err(Error::param(format!("cx control and target are both {target}")));
            }
        }
        Ok(())
    }

    /// Row-major 2×2 matrix of a single-qubit gate; `None` for CNOT.
    pub fn matrix(&self) -> Option<[[C64; 2]; 2]> {
        let zero = C64::new(0.0, 0.0);
        let one = C64::new(1.0, 0.0);
        Some(match *self {
            Gate::H { .. } => {
                let s = C64::new(FRAC_1_SQRT_2, 0.0);
                [[s, s], [s, -s]]
            }
            Gate::X { .. } => [[zero, one], [one, zero]],
            Gate::SqrtX { .. } => {
                let a = C64::new(0.5, 0.5);
                let b = C64::new(0.5, -0.5);
                [[a, b], [b, a]]
            }
            Gate::P { theta, .. } => [[one, zero], [zero, C64::from_polar(1.0, theta)]],
            Gate::Rz { theta, .. } => [
                [C64::from_polar(1.0, -theta / 2.0), zero],
                [zero, C64::from_polar(1.0, theta / 2.0)],
            ],
            Gate::Cnot { .. } => return None,
        })
    }
}

/// An ordered gate list over a fixed register, plus the measured register.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
    measured: Vec<usize>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Circuit {
            num_qubits,
            gates: Vec::new(),
            measured: Vec::new(),
        }
    }

    pub fn from_gates(num_qubits: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self> {
        let mut c = Circuit::new(num_qubits);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn measured_qubits(&self) -> &[usize] {
        &self.measured
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<&mut Self> {
        gate.validate(self.num_qubits)?;
        self.gates.push(gate);
        Ok(self)
    }

    /// Append a gate already known to be in range (builder internals).
    pub(crate) fn push_valid(&mut self, gate: Gate) {
        debug_assert!(gate.validate(self.num_qubits).is_ok(), "{gate:?}");
        self.gates.push(gate);
    }

    pub fn set_measured(&mut self, qubits: &[usize]) -> Result<&mut Self> {
        validate_register(qubits, self.num_qubits)?;
        self.measured = qubits.to_vec();
        Ok(self)
    }

    pub fn measure_all(&mut self) -> &mut Self {
        self.measured = (0..self.num_qubits).collect();
        self
    }

    pub fn validate(&self) -> Result<()> {
        for g in &self.gates {
            g.validate(self.num_qubits)?;
        }
        validate_register(&self.measured, self.num_qubits)
    }
}

fn validate_register(qubits: &[usize], num_qubits: usize) -> Result<()> {
    let mut seen = vec![false; num_qubits];
    for &q in qubits {
        if q >= num_qubits {
            return Err(Error::param(format!(
                "qubit {q} out of range for {num_qubits} qubits"
            )));
        }
        if std::mem::replace(&mut seen[q], true) {
            return Err(Error::param(format!("qubit {q} listed twice")));
        }
    }
    Ok(())
}

/// Dense `n`-qubit pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<C64>,
}

impl StateVector {
    /// `|0…0⟩` on `num_qubits` qubits.
    pub fn zero(num_qubits: usize) -> Result<Self> {
        Self::basis(num_qubits, 0)
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        check_width(num_qubits)?;
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::param(format!(
                "basis index {index} out of range for {num_qubits} qubits"
            )));
        }
        let mut amps = vec![C64::new(0.0, 0.0); dim];
        amps[index] = C64::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amps })
    }

    /// Wrap raw amplitudes; the length must be a power of two ≥ 2 and the
    /// state normalized within [`NORM_TOLERANCE`].
    pub fn from_amplitudes(amps: Vec<C64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::param(format!(
                "amplitude count {len} is not a power of two >= 2"
            )));
        }
        let num_qubits = len.trailing_zeros() as usize;
        check_width(num_qubits)?;
        let s = StateVector { num_qubits, amps };
        let norm = s.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::param(format!("state norm² is {norm}, expected 1")));
        }
        Ok(s)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        if self.amps.len() >= PARALLEL_THRESHOLD {
            self.amps.par_iter().map(|a| a.norm_sqr()).sum()
        } else {
            self.amps.iter().map(|a| a.norm_sqr()).sum()
        }
    }

    /// Apply one gate in place.
    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.num_qubits)?;
        let amps = &mut self.amps;
        match *gate {
            Gate::H { target } => {
                let s = FRAC_1_SQRT_2;
                for_each_pair(amps, 1 << target, |_, a, b| {
                    let (x, y) = (*a, *b);
                    *a = (x + y) * s;
                    *b = (x - y) * s;
                });
            }
            Gate::X { target } => for_each_pair(amps, 1 << target, |_, a, b| std::mem::swap(a, b)),
            Gate::SqrtX { target } => {
                let p = C64::new(0.5, 0.5);
                let m = C64::new(0.5, -0.5);
                for_each_pair(amps, 1 << target, |_, a, b| {
                    let (x, y) = (*a, *b);
                    *a = p * x + m * y;
                    *b = m * x + p * y;
                });
            }
            Gate::P { target, theta } => {
                let phase = C64::from_polar(1.0, theta);
                for_each_pair(amps, 1 << target, |_, _, b| *b *= phase);
            }
            Gate::Rz { target, theta } => {
                let lo = C64::from_polar(1.0, -theta / 2.0);
                let hi = C64::from_polar(1.0, theta / 2.0);
                for_each_pair(amps, 1 << target, |_, a, b| {
                    *a *= lo;
                    *b *= hi;
                });
            }
            Gate::Cnot { control, target } => {
                let cmask = 1usize << control;
                for_each_pair(amps, 1 << target, |idx, a, b| {
                    if idx & cmask != 0 {
                        std::mem::swap(a, b);
                    }
                });
            }
        }
        Ok(())
    }

    /// Apply every gate of `circuit` in order.
    pub fn run(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.num_qubits() != self.num_qubits {
            return Err(Error::param(format!(
                "circuit has {} qubits but state has {}",
                circuit.num_qubits(),
                self.num_qubits
            )));
        }
        circuit.validate()?;
        for g in circuit.gates() {
            self.apply(g)?;
        }
        Ok(())
    }

    /// Born-rule marginal over `qubits`; outcome bit `k` is `qubits[k]`.
    pub fn probabilities(&self, qubits: &[usize]) -> Result<Distribution> {
        validate_register(qubits, self.num_qubits)?;
        if qubits.is_empty() {
            return Err(Error::param("probability register is empty"));
        }
        let width = qubits.len();
        let outcome_of = |index: usize| -> usize {
            qubits
                .iter()
                .enumerate()
                .fold(0, |acc, (k, &q)| acc | (((index >> q) & 1) << k))
        };
        let outcomes = 1usize << width;
        let probs = if self.amps.len() >= PARALLEL_THRESHOLD {
            self.amps
                .par_chunks(PARALLEL_THRESHOLD)
                .enumerate()
                .fold(
                    || vec![0.0; outcomes],
                    |mut acc, (c, chunk)| {
                        let base = c * PARALLEL_THRESHOLD;
                        for (j, a) in chunk.iter().enumerate() {
                            acc[outcome_of(base + j)] += a.norm_sqr();
                        }
                        acc
                    },
                )
                .reduce(
                    || vec![0.0; outcomes],
                    |mut x, y| {
                        x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                        x
                    },
                )
        } else {
            let mut acc = vec![0.0; outcomes];
            for (i, a) in self.amps.iter().enumerate() {
                acc[outcome_of(i)] += a.norm_sqr();
            }
            acc
        };
        Ok(Distribution {
            qubits: qubits.to_vec(),
            probs,
        })
    }

    /// Draw `shots` measurement outcomes of `qubits`.
    ///
    /// The counts are one multinomial draw, realized as a chain of
    /// conditional binomials over outcomes in index order, from the stream
    /// [`rng::SAMPLE_STREAM`] of `seed`.
    pub fn sample_counts(&self, qubits: &[usize], shots: u64, seed: u64) -> Result<ShotCounts> {
        if shots == 0 {
            return Err(Error::param("shots must be at least 1"));
        }
        let dist = self.probabilities(qubits)?;
        dist.sample(shots, seed)
    }
}

fn check_width(num_qubits: usize) -> Result<()> {
    let limit = max_sim_qubits();
    if num_qubits == 0 {
        return Err(Error::param("a register needs at least one qubit"));
    }
    if num_qubits > limit {
        return Err(Error::Resource(format!(
            "{num_qubits} qubits exceeds the simulation limit of {limit}"
        )));
    }
    Ok(())
}

/// Call `f(lo_index, &mut amp[lo], &mut amp[lo + stride])` for every index
/// pair differing only in the bit `stride`.
fn for_each_pair<F>(amps: &mut [C64], stride: usize, f: F)
where
    F: Fn(usize, &mut C64, &mut C64) + Sync + Send,
{
    let block = stride << 1;
    let serial_block = |b: usize, chunk: &mut [C64]| {
        let (lo, hi) = chunk.split_at_mut(stride);
        let base = b * block;
        for (j, (x, y)) in lo.iter_mut().zip(hi).enumerate() {
            f(base + j, x, y);
        }
    };
    if amps.len() < PARALLEL_THRESHOLD {
        amps.chunks_mut(block)
            .enumerate()
            .for_each(|(b, c)| serial_block(b, c));
    } else if amps.len() / block >= 64 {
        amps.par_chunks_mut(block)
            .enumerate()
            .for_each(|(b, c)| serial_block(b, c));
    } else {
        // few large blocks: parallelize inside each block instead
        for (b, chunk) in amps.chunks_mut(block).enumerate() {
            let (lo, hi) = chunk.split_at_mut(stride);
            let base = b * block;
            lo.par_iter_mut()
                .zip(hi.par_iter_mut())
                .enumerate()
                .for_each(|(j, (x, y))| f(base + j, x, y));
        }
    }
}

/// Apply one gate to a state, returning the new state.
pub fn apply_gate(mut state: StateVector, gate: &Gate) -> Result<StateVector> {
    state.apply(gate)?;
    Ok(state)
}

/// Run `circuit` from `initial`, or from `|0…0⟩` when `None`.
pub fn run_circuit(circuit: &Circuit, initial: Option<StateVector>) -> Result<StateVector> {
    let mut state = match initial {
        Some(s) => s,
        None => StateVector::zero(circuit.num_qubits())?,
    };
    state.run(circuit)?;
    Ok(state)
}

/// Dense outcome probabilities over a measured register.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    qubits: Vec<usize>,
    probs: Vec<f64>,
}

impl Distribution {
    pub fn qubits(&self) -> &[usize] {
        &self.qubits
    }

    pub fn width(&self) -> usize {
        self.qubits.len()
    }

    /// Probabilities indexed by outcome (bit `k` ↔ `qubits[k]`).
    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Probability of a printed bitstring (most-significant outcome bit first).
    pub fn get(&self, bits: &str) -> Option<f64> {
        parse_bitstring(bits, self.width()).map(|i| self.probs[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (String, f64)> + '_ {
        self.probs
            .iter()
            .enumerate()
            .map(|(i, &p)| (bitstring(i, self.width()), p))
    }

    /// Multinomial draw of `shots` outcomes from stream [`rng::SAMPLE_STREAM`].
    pub fn sample(&self, shots: u64, seed: u64) -> Result<ShotCounts> {
        if shots == 0 {
            return Err(Error::param("shots must be at least 1"));
        }
        let mut rng = rng::stream(seed, rng::SAMPLE_STREAM);
        let mut counts = BTreeMap::new();
        let mut remaining = shots;
        let mut mass = 1.0f64;
        let last = self.probs.len() - 1;
        for (i, &p) in self.probs.iter().enumerate() {
            if remaining == 0 {
                break;
            }
            let k = if i == last {
                remaining
            } else if p <= 0.0 {
                0
            } else {
                let q = (p / mass).clamp(0.0, 1.0);
                Binomial::new(remaining, q)
                    .map_err(|e| Error::param(format!("binomial draw: {e}")))?
                    .sample(&mut rng)
            };
            if k > 0 {
                counts.insert(bitstring(i, self.width()), k);
            }
            remaining -= k;
            mass -= p;
        }
        Ok(ShotCounts {
            width: self.width(),
            counts,
            total_shots: shots,
        })
    }
}

/// Measurement tallies keyed by printed bitstring. Outcomes never observed
/// are absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShotCounts {
    pub width: usize,
    pub counts: BTreeMap<String, u64>,
    pub total_shots: u64,
}

impl ShotCounts {
    pub fn new(width: usize) -> Self {
        ShotCounts {
            width,
            counts: BTreeMap::new(),
            total_shots: 0,
        }
    }

    /// Build from explicit tallies, checking key widths and binary digits.
    pub fn from_counts<'a>(width: usize, entries: impl IntoIterator<Item = (&'a str, u64)>) -> Result<Self> {
        let mut out = ShotCounts::new(width);
        for (bits, n) in entries {
            if parse_bitstring(bits, width).is_none() {
                return Err(Error::param(format!(
                    "outcome `{bits}` is not a {width}-bit string"
                )));
            }
            if n > 0 {
                *out.counts.entry(bits.to_string()).or_insert(0) += n;
                out.total_shots += n;
            }
        }
        Ok(out)
    }

    pub fn get(&self, bits: &str) -> u64 {
        self.counts.get(bits).copied().unwrap_or(0)
    }

    /// Counts for every outcome in index order, zeros included.
    pub fn dense(&self) -> Vec<u64> {
        (0..1usize << self.width)
            .map(|i| self.get(&bitstring(i, self.width)))
            .collect()
    }

    /// Sum another tally into this one.
    pub fn merge(&mut self, other: &ShotCounts) -> Result<()> {
        if other.width != self.width {
            return Err(Error::param(format!(
                "cannot merge {}-bit counts into {}-bit counts",
                other.width, self.width
            )));
        }
        for (k, v) in &other.counts {
            *self.counts.entry(k.clone()).or_insert(0) += v;
        }
        self.total_shots += other.total_shots;
        Ok(())
    }

    /// Total-variation distance between the empirical frequencies and `dist`.
    pub fn tv_distance(&self, dist: &Distribution) -> f64 {
        let n = self.total_shots as f64;
        self.dense()
            .iter()
            .zip(dist.probs())
            .map(|(&c, &p)| (c as f64 / n - p).abs())
            .sum::<f64>()
            / 2.0
    }
}

/// Print outcome `index` as `width` bits, most-significant first.
pub fn bitstring(index: usize, width: usize) -> String {
    (0..width)
        .rev()
        .map(|k| if (index >> k) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Inverse of [`bitstring`].
pub fn parse_bitstring(bits: &str, width: usize) -> Option<usize> {
    if bits.len() != width {
        return None;
    }
    bits.bytes().try_fold(0usize, |acc, b| match b {
        b'0' => Some(acc << 1),
        b'1' => Some((acc << 1) | 1),
        _ => None,
    })
}
