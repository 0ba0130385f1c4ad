//! Grid search behind the default two-qubit frequency-profile benchmarks.
//!
//! Run: `cargo run --release --example calibrate_profiles`

mod support;

use support::profile_grid::{best_ising, best_jc, ising_probs, jc_probs};

fn main() {
    let (jc, margin) = best_jc();
    println!("JC    best {jc:?}");
    println!("      probs {:?}  margin {margin:.4}", jc_probs(&jc));
    let (ising, margin) = best_ising();
    println!("Ising best {ising:?}");
    println!("      probs {:?}  margin {margin:.4}", ising_probs(&ising));
}
