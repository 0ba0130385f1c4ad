//! Gate-level compilation of the Jaynes–Cummings and longitudinal Ising
//! models, a dense-unitary route for small circuits, and coupling-map
//! legality checks.
//!
//! # Ising circuit
//!
//! Optional Hadamard layer, then per first-order Trotter step of length
//! `dt = t / steps`:
//!
//! * `Rz(−2 h_l dt)` on every site (the `−h_l σ_z` field),
//! * `CNOT(l, l+1) · Rz(2 J_l dt) on l+1 · CNOT(l, l+1)` for every bond.
//!
//! Every term is diagonal, so the product is exact for any step count.
//!
//! # Jaynes–Cummings circuit
//!
//! Each qubit/cavity pair occupies wires `(2k, 2k+1)`. The cavity is truncated
//! to a single photon, the excited qubit and the one-photon cavity are both
//! `|1⟩`, and the evolution runs in the frame rotating at `ω_r` per
//! excitation. The pair Hamiltonian is then
//! `−(Δ/2) Z_q + (g/2)(X_q X_c + Y_q Y_c)`, and one step applies
//!
//! 1. `Rz(−Δ dt)` on the qubit wire,
//! 2. `exp(−i (g dt/2) XX)`: `H ⊗ H`, `CNOT · Rz(g dt) · CNOT`, `H ⊗ H`,
//! 3. `exp(−i (g dt/2) YY)`: `√X†` on both wires (emitted as
//!    `Rz(π) √X Rz(π)`), `CNOT · Rz(g dt) · CNOT`, `√X` on both wires.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonians::IsingParams;
use crate::statevec::{run_circuit, Circuit, Distribution, Gate, ShotCounts, StateVector};

/// Largest circuit [`circuit_unitary`] will expand.
pub const MAX_UNITARY_QUBITS: usize = 10;

/// First-order Trotter schedule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrotterPlan {
    pub total_time: f64,
    pub steps: usize,
}

impl TrotterPlan {
    pub fn new(total_time: f64, steps: usize) -> Result<Self> {
        if !(total_time >= 0.0 && total_time.is_finite()) {
            return Err(Error::param(format!(
                "evolution time must be non-negative, got {total_time}"
            )));
        }
        if steps < 1 {
            return Err(Error::param("Trotter steps must be at least 1"));
        }
        Ok(TrotterPlan { total_time, steps })
    }

    pub fn dt(&self) -> f64 {
        self.total_time / self.steps as f64
    }
}

/// Interaction model of a benchmark circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Model {
    #[serde(rename = "JC")]
    Jc,
    #[serde(rename = "Ising")]
    Ising,
}

impl Model {
    pub const ALL: [Model; 2] = [Model::Jc, Model::Ising];

    pub fn label(&self) -> &'static str {
        match self {
            Model::Jc => "JC",
            Model::Ising => "Ising",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "jc" | "jaynes-cummings" => Ok(Model::Jc),
            "ising" => Ok(Model::Ising),
            _ => Err(Error::param(format!("unknown model `{s}` (expected JC or Ising)"))),
        }
    }
}

/// Ising chain evolution; see the module docs for the emitted sequence.
pub fn build_ising_circuit(params: &IsingParams, plan: &TrotterPlan, prepare_superposition: bool) -> Circuit {
    let n = params.num_spins();
    let dt = plan.dt();
    let mut c = Circuit::new(n);
    if prepare_superposition {
        (0..n).for_each(|q| c.push_valid(Gate::h(q)));
    }
    for _ in 0..plan.steps {
        for (q, h) in params.fields().iter().enumerate() {
            c.push_valid(Gate::rz(q, -2.0 * h * dt));
        }
        for (l, j) in params.couplings().iter().enumerate() {
            append_zz(&mut c, l, l + 1, j * dt);
        }
    }
    c.measure_all();
    c
}

/// `exp(−i θ Z_a Z_b)`.
fn append_zz(c: &mut Circuit, a: usize, b: usize, theta: f64) {
    c.push_valid(Gate::cnot(a, b));
    c.push_valid(Gate::rz(b, 2.0 * theta));
    c.push_valid(Gate::cnot(a, b));
}

/// Coupling and detuning of one qubit/cavity pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JcPair {
    pub g: f64,
    pub delta: f64,
}

/// Trotterized single-excitation JC evolution for `pairs.len()` independent
/// qubit/cavity pairs; see the module docs for the gate sequence.
pub fn build_jc_circuit(pairs: &[JcPair], plan: &TrotterPlan) -> Result<Circuit> {
    if pairs.is_empty() {
        return Err(Error::param("JC circuit needs at least one pair"));
    }
    let mut c = Circuit::new(2 * pairs.len());
    append_jc_steps(&mut c, pairs, plan);
    c.measure_all();
    Ok(c)
}

fn append_jc_steps(c: &mut Circuit, pairs: &[JcPair], plan: &TrotterPlan) {
    let dt = plan.dt();
    for _ in 0..plan.steps {
        for (k, pair) in pairs.iter().enumerate() {
            let (q, r) = (2 * k, 2 * k + 1);
            let theta = pair.g * dt / 2.0;
            c.push_valid(Gate::rz(q, -pair.delta * dt));
            // XX
            c.push_valid(Gate::h(q));
            c.push_valid(Gate::h(r));
            append_zz(c, q, r, theta);
            c.push_valid(Gate::h(q));
            c.push_valid(Gate::h(r));
            // YY
            for w in [q, r] {
                c.push_valid(Gate::rz(w, PI));
                c.push_valid(Gate::sx(w));
                c.push_valid(Gate::rz(w, PI));
            }
            append_zz(c, q, r, theta);
            c.push_valid(Gate::sx(q));
            c.push_valid(Gate::sx(r));
        }
    }
}

/// Dense unitary of a circuit of at most [`MAX_UNITARY_QUBITS`] qubits,
/// accumulated as a product of embedded gate matrices.
pub fn circuit_unitary(circuit: &Circuit) -> Result<DMatrix<C64>> {
    let n = circuit.num_qubits();
    if n > MAX_UNITARY_QUBITS {
        return Err(Error::Resource(format!(
            "{n} qubits exceeds the dense-unitary limit of {MAX_UNITARY_QUBITS}"
        )));
    }
    circuit.validate()?;
    let dim = 1usize << n;
    let mut u = DMatrix::<C64>::identity(dim, dim);
    for gate in circuit.gates() {
        let bit = 1usize << gate.target();
        match gate.matrix() {
            Some(m) => {
                for mut col in u.column_iter_mut() {
                    for i0 in (0..dim).filter(|i| i & bit == 0) {
                        let i1 = i0 | bit;
                        let (a, b) = (col[i0], col[i1]);
                        col[i0] = m[0][0] * a + m[0][1] * b;
                        col[i1] = m[1][0] * a + m[1][1] * b;
                    }
                }
            }
            None => {
                let cbit = 1usize << gate.control().expect("two-qubit gate has a control");
                for i0 in (0..dim).filter(|i| i & bit == 0 && i & cbit != 0) {
                    u.swap_rows(i0, i0 | bit);
                }
            }
        }
    }
    Ok(u)
}

/// `min_φ ‖a − e^{iφ} b‖_F`.
pub fn phase_distance(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    // optimal phase is arg tr(b†a); evaluate the norm directly rather than
    // via ‖a‖² + ‖b‖² − 2|tr(b†a)|, which cancels catastrophically
    let overlap: C64 = a.iter().zip(b.iter()).map(|(x, y)| y.conj() * x).sum();
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        C64::new(1.0, 0.0)
    };
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - phase * y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Qubit connectivity graph; edges are unordered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CouplingMap {
    num_qubits: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// A CNOT on a pair the coupling map does not connect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LayoutViolation {
    pub gate_index: usize,
    pub control: usize,
    pub target: usize,
}

impl CouplingMap {
    pub fn new(num_qubits: usize) -> Self {
        CouplingMap {
            num_qubits,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(num_qubits: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut m = CouplingMap::new(num_qubits);
        for (u, v) in edges {
            m.add_edge(u, v)?;
        }
        Ok(m)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::param(format!("self-loop on qubit {u}")));
        }
        if u >= self.num_qubits || v >= self.num_qubits {
            return Err(Error::param(format!(
                "edge ({u}, {v}) out of range for {} qubits",
                self.num_qubits
            )));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, q: usize) -> usize {
        self.edges.iter().filter(|&&(u, v)| u == q || v == q).count()
    }

    pub fn linear_chain(n: usize) -> Self {
        let mut m = CouplingMap::new(n);
        for q in 1..n {
            m.edges.insert((q - 1, q));
        }
        m
    }

    pub fn ring(n: usize) -> Self {
        let mut m = CouplingMap::linear_chain(n);
        if n > 2 {
            m.edges.insert((0, n - 1));
        }
        m
    }

    /// 127-qubit heavy-hex lattice: seven rows (14, 15, 15, 15, 15, 15, 14
    /// qubits) joined by six groups of four bridge qubits. Bridges alternate
    /// between columns {0, 4, 8, 12} and {2, 6, 10, 14}.
    pub fn heavy_hex_127() -> Self {
        let mut m = CouplingMap::new(127);
        // (first index, first column, length) of each row
        let mut rows = Vec::new();
        let mut next = 0usize;
        let mut bridges = Vec::new();
        for r in 0..7 {
            let (col0, len) = match r {
                0 => (0, 14),
                6 => (1, 14),
                _ => (0, 15),
            };
            rows.push((next, col0, len));
            next += len;
            if r < 6 {
                bridges.push(next);
                next += 4;
            }
        }
        debug_assert_eq!(next, 127);
        let at = |(start, col0, len): (usize, usize, usize), col: usize| -> usize {
            debug_assert!(col >= col0 && col < col0 + len);
            start + col - col0
        };
        for &(start, _, len) in &rows {
            for i in 1..len {
                m.edges.insert((start + i - 1, start + i));
            }
        }
        for (r, &b) in bridges.iter().enumerate() {
            let offset = if r % 2 == 0 { 0 } else { 2 };
            for k in 0..4 {
                let col = offset + 4 * k;
                let bridge = b + k;
                let (above, below) = (at(rows[r], col), at(rows[r + 1], col));
                m.edges.insert((above.min(bridge), above.max(bridge)));
                m.edges.insert((below.min(bridge), below.max(bridge)));
            }
        }
        m
    }

    /// Parse the text format: a `qubits N` header, then one `u v` pair per
    /// line. `#` starts a comment; blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut map: Option<CouplingMap> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let key = format!("line {}", lineno + 1);
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match (&mut map, fields.as_slice()) {
                (None, ["qubits", n]) => {
                    let n = n
                        .parse()
                        .map_err(|_| Error::parse(&key, format!("bad qubit count `{n}`")))?;
                    map = Some(CouplingMap::new(n));
                }
                (None, _) => return Err(Error::parse(&key, "expected `qubits N` header")),
                (Some(m), [u, v]) => {
                    let parse = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|_| Error::parse(&key, format!("bad qubit index `{s}`")))
                    };
                    let (u, v) = (parse(u)?, parse(v)?);
                    m.add_edge(u, v).map_err(|e| Error::parse(&key, e.to_string()))?;
                }
                (Some(_), _) => return Err(Error::parse(&key, "expected `u v` edge")),
            }
        }
        map.ok_or_else(|| Error::parse("qubits", "missing `qubits N` header"))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("qubits {}\n", self.num_qubits);
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Every CNOT whose qubit pair is not an edge of `map`.
pub fn validate_layout(circuit: &Circuit, map: &CouplingMap) -> Result<Vec<LayoutViolation>> {
    if map.num_qubits() < circuit.num_qubits() {
        return Err(Error::param(format!(
            "coupling map has {} qubits, circuit needs {}",
            map.num_qubits(),
            circuit.num_qubits()
        )));
    }
    Ok(circuit
        .gates()
        .iter()
        .enumerate()
        .filter_map(|(i, g)| {
            let control = g.control()?;
            let target = g.target();
            (!map.contains(control, target)).then_some(LayoutViolation {
                gate_index: i,
                control,
                target,
            })
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Two-qubit frequency-profile benchmarks

/// Default JC benchmark: per-wire preparation angles, coupling, detuning and
/// schedule. Chosen by the coarse grid search in
/// `examples/calibrate_profiles.rs` (re-run in the test suite).
pub mod jc_default {
    use std::f64::consts::PI;
    /// `√X · Rz(φ) · √X` preparation leaves `|1⟩` with probability `cos²(φ/2)`.
    pub const PREP_QUBIT: f64 = PI;
    pub const PREP_CAVITY: f64 = PI / 2.0;
    pub const G: f64 = 1.0;
    pub const DELTA: f64 = 0.5;
    pub const TIME: f64 = 5.0 * PI / 16.0;
    pub const STEPS: usize = 4;
}

/// Default Ising benchmark: fields on even/odd sites, uniform coupling and
/// schedule, read out after a closing Hadamard layer.
pub mod ising_default {
    use std::f64::consts::PI;
    pub const FIELD_EVEN: f64 = -0.5;
    pub const FIELD_ODD: f64 = -0.25;
    pub const J: f64 = -1.0;
    pub const TIME: f64 = 7.0 * PI / 16.0;
    pub const STEPS: usize = 1;
}

/// Qubits read out by the frequency-profile benchmarks.
pub const PROFILE_REGISTER: [usize; 2] = [0, 1];

/// Append `√X · Rz(φ) · √X`.
fn append_prep(c: &mut Circuit, q: usize, phi: f64) {
    c.push_valid(Gate::sx(q));
    c.push_valid(Gate::rz(q, phi));
    c.push_valid(Gate::sx(q));
}

/// JC benchmark circuit on `num_qubits ≥ 2` wires with explicit settings.
pub fn jc_benchmark_circuit_with(
    num_qubits: usize,
    prep: (f64, f64),
    pair: JcPair,
    plan: &TrotterPlan,
) -> Result<Circuit> {
    if num_qubits < 2 {
        return Err(Error::param("benchmark circuits need at least 2 qubits"));
    }
    let mut c = Circuit::new(num_qubits);
    for q in 0..num_qubits {
        append_prep(&mut c, q, if q % 2 == 0 { prep.0 } else { prep.1 });
    }
    let pairs = vec![pair; num_qubits / 2];
    append_jc_steps(&mut c, &pairs, plan);
    c.set_measured(&PROFILE_REGISTER)?;
    Ok(c)
}

/// Ising benchmark circuit: Hadamard layer, Trotterized evolution, closing
/// Hadamard layer.
pub fn ising_benchmark_circuit_with(params: &IsingParams, plan: &TrotterPlan) -> Result<Circuit> {
    let n = params.num_spins();
    if n < 2 {
        return Err(Error::param("benchmark circuits need at least 2 qubits"));
    }
    let mut c = build_ising_circuit(params, plan, true);
    (0..n).for_each(|q| c.push_valid(Gate::h(q)));
    c.set_measured(&PROFILE_REGISTER)?;
    Ok(c)
}

/// Ising parameters of the default benchmark at width `n`.
pub fn ising_default_params(n: usize) -> Result<IsingParams> {
    use ising_default::*;
    let fields = (0..n)
        .map(|q| if q % 2 == 0 { FIELD_EVEN } else { FIELD_ODD })
        .collect();
    IsingParams::new(fields, vec![J; n.saturating_sub(1)])
}

/// The default benchmark circuit of `model` on `num_qubits` wires, measuring
/// [`PROFILE_REGISTER`].
pub fn benchmark_circuit(model: Model, num_qubits: usize) -> Result<Circuit> {
    match model {
        Model::Jc => {
            use jc_default::*;
            jc_benchmark_circuit_with(
                num_qubits,
                (PREP_QUBIT, PREP_CAVITY),
                JcPair { g: G, delta: DELTA },
                &TrotterPlan::new(TIME, STEPS)?,
            )
        }
        Model::Ising => {
            use ising_default::*;
            ising_benchmark_circuit_with(
                &ising_default_params(num_qubits)?,
                &TrotterPlan::new(TIME, STEPS)?,
            )
        }
    }
}

/// Exact two-qubit outcome probabilities of the default benchmark.
pub fn exact_profile(model: Model) -> Result<Distribution> {
    let c = benchmark_circuit(model, 2)?;
    run_circuit(&c, None)?.probabilities(c.measured_qubits())
}

/// Seeded shot counts of the default two-qubit benchmark.
pub fn state_frequency_profile(model: Model, shots: u64, seed: u64) -> Result<ShotCounts> {
    let c = benchmark_circuit(model, 2)?;
    let state: StateVector = run_circuit(&c, None)?;
    state.sample_counts(c.measured_qubits(), shots, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trotter_plan_validation() {
        assert!(TrotterPlan::new(1.0, 0).is_err());
        assert!(TrotterPlan::new(-1.0, 3).is_err());
        assert_eq!(TrotterPlan::new(2.0, 4).unwrap().dt(), 0.5);
    }

    #[test]
    fn model_parsing() {
        assert_eq!("jc".parse::<Model>().unwrap(), Model::Jc);
        assert_eq!("Ising".parse::<Model>().unwrap(), Model::Ising);
        assert!("heisenberg".parse::<Model>().is_err());
    }

    #[test]
    fn ising_builder_emission_rule() {
        let p = IsingParams::uniform(3, 0.4, 1.0).unwrap();
        let c = build_ising_circuit(&p, &TrotterPlan::new(1.0, 2).unwrap(), true);
        // 3 H, then per step 3 field Rz and 2 × (CNOT, Rz, CNOT)
        assert_eq!(c.len(), 3 + 2 * (3 + 2 * 3));
        assert!(matches!(c.gates()[0], Gate::H { target: 0 }));
        assert_eq!(c.gates()[3], Gate::rz(0, -2.0 * 0.4 * 0.5));
        assert_eq!(c.gates()[6], Gate::cnot(0, 1));
        assert_eq!(c.gates()[7], Gate::rz(1, 2.0 * 0.5));
    }

    #[test]
    fn jc_builder_width_and_gate_set() {
        let pairs = [JcPair { g: 1.0, delta: 0.2 }, JcPair { g: 0.5, delta: 0.0 }];
        let c = build_jc_circuit(&pairs, &TrotterPlan::new(1.0, 3).unwrap()).unwrap();
        assert_eq!(c.num_qubits(), 4);
        assert_eq!(c.len(), 3 * 2 * 19);
        assert!(c.gates().iter().all(|g| g.control().map_or(true, |ctl| ctl / 2 == g.target() / 2)));
        assert!(build_jc_circuit(&[], &TrotterPlan::new(1.0, 1).unwrap()).is_err());
    }

    #[test]
    fn unitary_of_small_circuits() {
        let u = circuit_unitary(&Circuit::new(2)).unwrap();
        assert_eq!(u, DMatrix::identity(4, 4));

        let x = circuit_unitary(&Circuit::from_gates(1, [Gate::x(0)]).unwrap()).unwrap();
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        assert_eq!(x, DMatrix::from_row_slice(2, 2, &[zero, one, one, zero]));

        assert!(matches!(
            circuit_unitary(&Circuit::new(MAX_UNITARY_QUBITS + 1)),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn phase_distance_ignores_global_phase() {
        let c = Circuit::from_gates(2, [Gate::h(0), Gate::cnot(0, 1), Gate::rz(1, 0.3)]).unwrap();
        let u = circuit_unitary(&c).unwrap();
        let v = &u * C64::from_polar(1.0, 1.234);
        assert!(phase_distance(&u, &v) < 1e-12);
        assert!(phase_distance(&u, &DMatrix::identity(4, 4)) > 0.5);
    }

    #[test]
    fn layout_examples() {
        let p = IsingParams::uniform(5, 0.1, 1.0).unwrap();
        let c = build_ising_circuit(&p, &TrotterPlan::new(1.0, 2).unwrap(), true);
        assert!(validate_layout(&c, &CouplingMap::linear_chain(5)).unwrap().is_empty());

        let c = Circuit::from_gates(6, [Gate::cnot(0, 5)]).unwrap();
        assert!(validate_layout(&c, &CouplingMap::ring(6)).unwrap().is_empty());

        let c = Circuit::from_gates(6, [Gate::h(1), Gate::cnot(0, 3)]).unwrap();
        let v = validate_layout(&c, &CouplingMap::linear_chain(6)).unwrap();
        assert_eq!(v, vec![LayoutViolation { gate_index: 1, control: 0, target: 3 }]);

        assert!(validate_layout(&c, &CouplingMap::linear_chain(4)).is_err());
    }

    #[test]
    fn heavy_hex_shape() {
        let m = CouplingMap::heavy_hex_127();
        assert_eq!(m.num_qubits(), 127);
        assert_eq!(m.num_edges(), 144);
        assert!((0..127).all(|q| (1..=3).contains(&m.degree(q))));
        // bridge qubits have degree 2
        for b in [14, 15, 16, 17, 33, 52, 71, 90, 109, 112] {
            assert_eq!(m.degree(b), 2, "bridge {b}");
        }
        assert!(m.contains(0, 14) && m.contains(14, 18));
        assert!(m.contains(112, 126) && m.contains(108, 112));
    }

    #[test]
    fn coupling_map_text_round_trip() {
        let text = "# ring\nqubits 4\n0 1 # first\n1 2\n\n2 3\n3 0\n";
        let m = CouplingMap::parse(text).unwrap();
        assert_eq!(m, CouplingMap::ring(4));
        assert_eq!(CouplingMap::parse(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn coupling_map_parse_errors() {
        for (text, key) in [
            ("0 1\n", "line 1"),
            ("qubits x\n", "line 1"),
            ("qubits 3\n0 3\n", "line 2"),
            ("qubits 3\n1 1\n", "line 2"),
            ("qubits 3\n0 1 2\n", "line 2"),
            ("", "qubits"),
        ] {
            match CouplingMap::parse(text) {
                Err(Error::Parse { key: k, .. }) => assert_eq!(k, key, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
