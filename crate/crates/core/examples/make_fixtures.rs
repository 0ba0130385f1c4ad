//! Regenerate the bundled data files under `data/`.
//!
//! * `table1.csv`: the published reference table in the harness's own CSV
//!   format, so load/emit round-trips are byte-exact.
//! * `brisbane_like.json`: a synthetic 127-qubit heavy-hex calibration whose
//!   frequencies span the published hardware range and whose mean error rates
//!   equal the reference averages.
//!
//! Run: `cargo run --example make_fixtures`

use std::path::Path;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qubench::bench::{emit_table, reference_results, CalibrationData, TableFormat};
use qubench::circuits::CouplingMap;
use qubench::noise::ErrorRates;

const FREQ_RANGE_GHZ: (f64, f64) = (4.60, 5.06);

/// `n` positive draws rescaled to the given mean.
fn with_mean(rng: &mut ChaCha8Rng, n: usize, mean: f64) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| rng.random_range(0.5..1.5)).collect();
    let scale = mean * n as f64 / raw.iter().sum::<f64>();
    raw.into_iter().map(|x| x * scale).collect()
}

fn brisbane_like() -> CalibrationData {
    let mut rng = ChaCha8Rng::seed_from_u64(127);
    let map = CouplingMap::heavy_hex_127();
    let n = map.num_qubits();
    let (lo, hi) = FREQ_RANGE_GHZ;
    let mut frequencies_ghz: Vec<f64> = (0..n)
        .map(|_| (rng.random_range(lo..=hi) * 1000.0).round() / 1000.0)
        .collect();
    // pin both ends of the range
    frequencies_ghz[0] = lo;
    frequencies_ghz[n - 1] = hi;

    let r = ErrorRates::REFERENCE;
    let edges: Vec<(usize, usize)> = map.edges().collect();
    let two = with_mean(&mut rng, edges.len(), r.eps_two);
    CalibrationData {
        frequencies_ghz,
        single_gate_error: with_mean(&mut rng, n, r.eps_single),
        two_qubit_error: edges.into_iter().zip(two).collect(),
        readout_error: with_mean(&mut rng, n, r.eps_meas),
        coupling_map: map,
        timestamp: Some("2024-06-01T00:00:00Z".into()),
    }
}

fn main() -> qubench::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    std::fs::create_dir_all(&data).expect("create data dir");

    let table = data.join("table1.csv");
    emit_table(&reference_results(), &table, TableFormat::Csv)?;
    println!("wrote {}", table.display());

    let cal = data.join("brisbane_like.json");
    std::fs::write(&cal, brisbane_like().to_json()).expect("write calibration");
    println!("wrote {}", cal.display());
    Ok(())
}
