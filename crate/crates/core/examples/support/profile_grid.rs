//! Coarse grid search for two-qubit benchmark settings whose exact outcome
//! probabilities are strictly monotone over (00, 01, 10, 11).
//!
//! Shared by `examples/calibrate_profiles.rs` and the test suite, which uses
//! it to confirm the committed defaults.

#![allow(dead_code)]

use std::f64::consts::PI;

use qubench::circuits::{
    ising_benchmark_circuit_with, jc_benchmark_circuit_with, JcPair, TrotterPlan,
};
use qubench::hamiltonians::IsingParams;
use qubench::statevec::{run_circuit, Circuit};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JcCandidate {
    pub prep: (f64, f64),
    pub delta: f64,
    pub time: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsingCandidate {
    pub field_even: f64,
    pub field_odd: f64,
    pub j: f64,
    pub time: f64,
}

/// Smallest step in the required direction; positive iff strictly monotone.
pub fn monotone_margin(probs: &[f64], descending: bool) -> f64 {
    probs
        .windows(2)
        .map(|w| if descending { w[0] - w[1] } else { w[1] - w[0] })
        .fold(f64::INFINITY, f64::min)
}

fn exact_probs(c: &Circuit) -> Vec<f64> {
    run_circuit(c, None)
        .unwrap()
        .probabilities(c.measured_qubits())
        .unwrap()
        .probs()
        .to_vec()
}

pub fn jc_probs(c: &JcCandidate) -> Vec<f64> {
    let circ = jc_benchmark_circuit_with(
        2,
        c.prep,
        JcPair { g: 1.0, delta: c.delta },
        &TrotterPlan::new(c.time, c.steps).unwrap(),
    )
    .unwrap();
    exact_probs(&circ)
}

pub fn ising_probs(c: &IsingCandidate) -> Vec<f64> {
    let p = IsingParams::new(vec![c.field_even, c.field_odd], vec![c.j]).unwrap();
    let circ = ising_benchmark_circuit_with(&p, &TrotterPlan::new(c.time, 1).unwrap()).unwrap();
    exact_probs(&circ)
}

/// Grid: preparation angles k·π/8, detuning Δ/g ∈ {0, 0.5, 1, 2}, g·t = k·π/16,
/// 4 Trotter steps, g = 1.
pub fn jc_grid() -> Vec<JcCandidate> {
    let angles: Vec<f64> = (0..=8).map(|k| k as f64 * PI / 8.0).collect();
    let mut out = Vec::new();
    for &a in &angles {
        for &b in &angles {
            for delta in [0.0, 0.5, 1.0, 2.0] {
                for k in 1..=8 {
                    out.push(JcCandidate {
                        prep: (a, b),
                        delta,
                        time: k as f64 * PI / 16.0,
                        steps: 4,
                    });
                }
            }
        }
    }
    out
}

/// Grid: fields in steps of 0.25 over [−1, 1], J ∈ {±0.5, ±1}, t = k·π/16.
pub fn ising_grid() -> Vec<IsingCandidate> {
    let fields: Vec<f64> = (-4..=4).map(|k| k as f64 * 0.25).collect();
    let mut out = Vec::new();
    for &he in &fields {
        for &ho in &fields {
            for j in [-1.0, -0.5, 0.5, 1.0] {
                for k in 1..=8 {
                    out.push(IsingCandidate {
                        field_even: he,
                        field_odd: ho,
                        j,
                        time: k as f64 * PI / 16.0,
                    });
                }
            }
        }
    }
    out
}

/// Grid point with the largest descending margin (first one on ties).
pub fn best_jc() -> (JcCandidate, f64) {
    jc_grid()
        .into_iter()
        .map(|c| (c, monotone_margin(&jc_probs(&c), true)))
        .fold(None, |best: Option<(JcCandidate, f64)>, cur| match best {
            Some(b) if b.1 >= cur.1 => Some(b),
            _ => Some(cur),
        })
        .unwrap()
}

/// Grid point with the largest ascending margin (first one on ties).
pub fn best_ising() -> (IsingCandidate, f64) {
    ising_grid()
        .into_iter()
        .map(|c| (c, monotone_margin(&ising_probs(&c), false)))
        .fold(None, |best: Option<(IsingCandidate, f64)>, cur| match best {
            Some(b) if b.1 >= cur.1 => Some(b),
            _ => Some(cur),
        })
        .unwrap()
}
