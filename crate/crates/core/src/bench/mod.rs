//! Test grids, error sweeps against the oracle, accuracy tables, timings and
//! CSV/JSON output.

mod emit;
mod grid;
mod sweep;
mod table;
mod timing;

pub use emit::{emit, Cell, Format, Tabular};
pub use grid::{gen_cart_grid, gen_polar_grid, GridKind, GridSpec};
pub use sweep::{error_sweep, error_sweep_serial, Precision, SweepRecord};
pub use table::{accuracy_table, parse_methods, AccuracyRow, Method, MethodSpec};
pub use timing::{timing_run, TimingRecord};
