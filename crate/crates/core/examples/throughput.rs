//! Simulator throughput: random 1000-gate circuits at increasing width.
//!
//! Run: `cargo run --release --example throughput`

use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qubench::statevec::{run_circuit, Circuit, Gate};

fn random_circuit(n: usize, depth: usize, seed: u64) -> Circuit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Circuit::new(n);
    for _ in 0..depth {
        let q = rng.random_range(0..n);
        let gate = match rng.random_range(0..6) {
            0 => Gate::h(q),
            1 => Gate::x(q),
            2 => Gate::sx(q),
            3 => Gate::p(q, rng.random_range(-3.0..3.0)),
            4 => Gate::rz(q, rng.random_range(-3.0..3.0)),
            _ => {
                let t = (q + rng.random_range(1..n)) % n;
                Gate::cnot(q, t)
            }
        };
        c.push(gate).expect("valid gate");
    }
    c
}

fn main() {
    let gates = 1000;
    println!("| qubits | gates | seconds | gates/s | amplitude updates/s |");
    println!("|---:|---:|---:|---:|---:|");
    for n in [10, 14, 16, 18, 20, 22] {
        let c = random_circuit(n, gates, n as u64);
        let start = Instant::now();
        let state = run_circuit(&c, None).expect("simulate");
        let secs = start.elapsed().as_secs_f64();
        assert!((state.norm_sqr() - 1.0).abs() < 1e-9);
        println!(
            "| {n} | {gates} | {secs:.3} | {:.0} | {:.2e} |",
            gates as f64 / secs,
            gates as f64 * (1u64 << n) as f64 / secs
        );
    }
}
