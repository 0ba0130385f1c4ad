//! Independent dense-matrix oracles for the integration suites.
//!
//! Gate matrices are written out here from their definitions rather than
//! taken from the library, and full operators are built by Kronecker
//! products with qubit 0 as the least-significant factor.

#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qubench::statevec::{Circuit, Gate};

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn m2(a: C, b: C, cc: C, d: C) -> DMatrix<C> {
    DMatrix::from_row_slice(2, 2, &[a, b, cc, d])
}

pub fn id2() -> DMatrix<C> {
    DMatrix::identity(2, 2)
}

pub fn pauli_x() -> DMatrix<C> {
    m2(c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.))
}

pub fn pauli_y() -> DMatrix<C> {
    m2(c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.))
}

pub fn pauli_z() -> DMatrix<C> {
    m2(c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.))
}

fn single_matrix(g: &Gate) -> DMatrix<C> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    match *g {
        Gate::H { .. } => m2(c(s, 0.), c(s, 0.), c(s, 0.), c(-s, 0.)),
        Gate::X { .. } => pauli_x(),
        Gate::SqrtX { .. } => m2(c(0.5, 0.5), c(0.5, -0.5), c(0.5, -0.5), c(0.5, 0.5)),
        Gate::P { theta, .. } => m2(c(1., 0.), c(0., 0.), c(0., 0.), C::from_polar(1.0, theta)),
        Gate::Rz { theta, .. } => m2(
            C::from_polar(1.0, -theta / 2.0),
            c(0., 0.),
            c(0., 0.),
            C::from_polar(1.0, theta / 2.0),
        ),
        Gate::Cnot { .. } => unreachable!(),
    }
}

/// `⊗_{q = n−1..0} ops[q]`.
pub fn kron_all(ops: &[DMatrix<C>]) -> DMatrix<C> {
    ops.iter()
        .rev()
        .fold(DMatrix::identity(1, 1), |acc, m| acc.kronecker(m))
}

/// `op` on qubit `q` of an `n`-qubit register.
pub fn embed(op: &DMatrix<C>, q: usize, n: usize) -> DMatrix<C> {
    let ops: Vec<_> = (0..n).map(|k| if k == q { op.clone() } else { id2() }).collect();
    kron_all(&ops)
}

pub fn gate_operator(g: &Gate, n: usize) -> DMatrix<C> {
    match *g {
        Gate::Cnot { control, target } => {
            let p0 = m2(c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.));
            let p1 = m2(c(0., 0.), c(0., 0.), c(0., 0.), c(1., 0.));
            let keep: Vec<_> = (0..n).map(|k| if k == control { p0.clone() } else { id2() }).collect();
            let flip: Vec<_> = (0..n)
                .map(|k| {
                    if k == control {
                        p1.clone()
                    } else if k == target {
                        pauli_x()
                    } else {
                        id2()
                    }
                })
                .collect();
            kron_all(&keep) + kron_all(&flip)
        }
        _ => embed(&single_matrix(g), g.target(), n),
    }
}

pub fn oracle_unitary(circuit: &Circuit) -> DMatrix<C> {
    let n = circuit.num_qubits();
    circuit
        .gates()
        .iter()
        .fold(DMatrix::identity(1 << n, 1 << n), |u, g| gate_operator(g, n) * u)
}

pub fn oracle_state(circuit: &Circuit) -> DVector<C> {
    let n = circuit.num_qubits();
    let mut psi = DVector::zeros(1 << n);
    psi[0] = c(1., 0.);
    oracle_unitary(circuit) * psi
}

/// `exp(A)` by scaling and squaring with a degree-24 Taylor polynomial.
pub fn expm(a: &DMatrix<C>) -> DMatrix<C> {
    let norm = a.iter().map(|x| x.norm()).sum::<f64>();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a / C::new(2f64.powi(squarings as i32), 0.0);
    let dim = a.nrows();
    let mut term = DMatrix::<C>::identity(dim, dim);
    let mut sum = term.clone();
    for k in 1..=24 {
        term = &term * &scaled / C::new(k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// `exp(−i H t)`.
pub fn evolve(h: &DMatrix<C>, t: f64) -> DMatrix<C> {
    expm(&(h * C::new(0.0, -t)))
}

/// `−Σ h_l Z_l + Σ J_l Z_l Z_{l+1}` built from Pauli products.
pub fn ising_operator(fields: &[f64], couplings: &[f64]) -> DMatrix<C> {
    let n = fields.len();
    let mut h = DMatrix::<C>::zeros(1 << n, 1 << n);
    for (l, &hl) in fields.iter().enumerate() {
        h -= embed(&pauli_z(), l, n) * C::new(hl, 0.0);
    }
    for (l, &jl) in couplings.iter().enumerate() {
        h += embed(&pauli_z(), l, n) * embed(&pauli_z(), l + 1, n) * C::new(jl, 0.0);
    }
    h
}

/// Two-wire rotating-frame JC pair: `−(Δ/2) Z_q + (g/2)(X_q X_c + Y_q Y_c)`,
/// qubit on wire 0.
pub fn jc_pair_operator(g: f64, delta: f64) -> DMatrix<C> {
    let zq = embed(&pauli_z(), 0, 2);
    let xx = kron_all(&[pauli_x(), pauli_x()]);
    let yy = kron_all(&[pauli_y(), pauli_y()]);
    zq * C::new(-delta / 2.0, 0.0) + (xx + yy) * C::new(g / 2.0, 0.0)
}

pub fn max_abs_diff(a: &DMatrix<C>, b: &DMatrix<C>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Random circuit over the full gate set.
pub fn random_circuit(rng: &mut ChaCha8Rng, n: usize, depth: usize) -> Circuit {
    let mut circ = Circuit::new(n);
    for _ in 0..depth {
        let q = rng.random_range(0..n);
        let g = match rng.random_range(0..if n > 1 { 6 } else { 5 }) {
            0 => Gate::h(q),
            1 => Gate::x(q),
            2 => Gate::sx(q),
            3 => Gate::p(q, rng.random_range(-6.3..6.3)),
            4 => Gate::rz(q, rng.random_range(-6.3..6.3)),
            _ => Gate::cnot(q, (q + rng.random_range(1..n)) % n),
        };
        circ.push(g).unwrap();
    }
    circ
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Unitary of `circuit` as seen by the simulator: column `k` is the
/// simulated image of basis state `k`.
pub fn simulated_unitary(circuit: &Circuit) -> DMatrix<C> {
    use qubench::statevec::{run_circuit, StateVector};
    let n = circuit.num_qubits();
    let dim = 1 << n;
    let mut u = DMatrix::zeros(dim, dim);
    for k in 0..dim {
        let out = run_circuit(circuit, Some(StateVector::basis(n, k).unwrap())).unwrap();
        for (i, a) in out.amplitudes().iter().enumerate() {
            u[(i, k)] = *a;
        }
    }
    u
}

/// `min_φ ‖a − e^{iφ} b‖_F`; the optimal phase aligns `tr(b†a)`.
pub fn phase_frobenius(a: &DMatrix<C>, b: &DMatrix<C>) -> f64 {
    let overlap = (b.adjoint() * a).trace();
    let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { c(1., 0.) };
    (a - b * phase).norm()
}
