//! Benchmark harness: calibration ingest, width sweeps, result tables, and
//! charts.

pub mod calibration;
pub mod manifest;
pub mod plot;
pub mod sweep;
pub mod table;

pub use calibration::{load_calibration, CalibrationData};
pub use manifest::{run_timestamp, RunDir, RunManifest};
pub use plot::{emit_plot, figure, render_plot, Figure, PlotInput, PlotKind};
pub use sweep::{aggregate_shots, rates_matching_growth, run_sweep, RowCounts, SweepConfig, SweepRun};
pub use table::{
    anchor_growth, consistency_report, emit_table, load_table, read_table, reference_results, write_table,
    Backend, ConsistencyReport, SweepResult, TableFormat, REFERENCE_TABLE,
};
