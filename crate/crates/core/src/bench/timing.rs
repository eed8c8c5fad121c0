use std::hint::black_box;
use std::time::Instant;

use num_complex::Complex64;

use super::emit::{Cell, Tabular};
use super::grid::GridSpec;
use super::table::Method;
use crate::error::{FaddeevaError, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct TimingRecord {
    pub method: String,
    pub mean_seconds: f64,
    pub sd_seconds: f64,
    pub reps: usize,
    pub grid: String,
    /// Points evaluated per repetition.
    pub points: usize,
}

impl Tabular for TimingRecord {
    fn header() -> &'static [&'static str] {
        &[
            "method",
            "mean_seconds",
            "sd_seconds",
            "reps",
            "grid",
            "points",
        ]
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Text(self.method.clone()),
            Cell::Real(self.mean_seconds),
            Cell::Real(self.sd_seconds),
            Cell::Int(self.reps as u64),
            Cell::Text(self.grid.clone()),
            Cell::Int(self.points as u64),
        ]
    }
}

/// Wall-clock time of evaluating `method` at every rated grid point, on the
/// calling thread, after one discarded warm-up pass.
pub fn timing_run(method: &Method, grid: &GridSpec, reps: usize) -> Result<TimingRecord> {
    if reps < 3 {
        return Err(FaddeevaError::Parameter(format!(
            "timing needs at least 3 repetitions, got {reps}"
        )));
    }
    let points: Vec<Complex64> = grid.iter().filter(|&z| method.rated(z)).collect();
    let pass = || {
        let mut acc = Complex64::new(0.0, 0.0);
        for &z in &points {
            acc += method.eval_fast(black_box(z));
        }
        black_box(acc);
    };
    pass();
    let mut times = Vec::with_capacity(reps);
    for _ in 0..reps {
        let t = Instant::now();
        pass();
        times.push(t.elapsed().as_secs_f64());
    }
    let mean = times.iter().sum::<f64>() / reps as f64;
    let var = times.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / (reps - 1) as f64;
    Ok(TimingRecord {
        method: method.spec().to_string(),
        mean_seconds: mean,
        sd_seconds: var.sqrt(),
        reps,
        grid: grid.to_string(),
        points: points.len(),
    })
}
