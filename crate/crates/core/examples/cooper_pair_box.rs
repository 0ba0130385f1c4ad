//! Cooper-pair box levels across the charge-qubit to transmon crossover.
//!
//! Run: `cargo run --release --example cooper_pair_box`

use qubench::hamiltonians::{charge_dispersion, cooper_pair_spectrum, CpbParams};

fn main() -> qubench::Result<()> {
    let e_c = 1.0;
    println!("{:>8} {:>12} {:>14} {:>14}", "EJ/EC", "E1-E0", "sqrt(8EcEj)-Ec", "dispersion");
    for ratio in [1.0, 5.0, 10.0, 20.0, 50.0, 100.0] {
        let e_j = ratio * e_c;
        let levels = cooper_pair_spectrum(&CpbParams::new(e_c, e_j, 0.0, 25)?, 2)?;
        let transmon = (8.0 * e_c * e_j).sqrt() - e_c;
        let dispersion = charge_dispersion(e_c, e_j, 25, 41)?;
        println!(
            "{ratio:>8.0} {:>12.6} {transmon:>14.6} {dispersion:>14.3e}",
            levels[1] - levels[0]
        );
    }

    // gate-charge dependence of the lowest three bands in the charge regime
    println!("\nn_g     E0        E1        E2   (EJ/EC = 1)");
    for k in 0..=10 {
        let n_g = k as f64 / 10.0;
        let e = cooper_pair_spectrum(&CpbParams::new(e_c, 1.0, n_g, 25)?, 3)?;
        println!("{n_g:.1} {:>9.4} {:>9.4} {:>9.4}", e[0], e[1], e[2]);
    }
    Ok(())
}
