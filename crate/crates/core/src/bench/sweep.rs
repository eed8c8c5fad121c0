use num_complex::Complex64;
use rayon::prelude::*;

use super::emit::{Cell, Tabular};
use super::grid::GridSpec;
use crate::bounds::{abs_bound, rel_bound};
use crate::error::{FaddeevaError, Result};
use crate::params::{EvalParams, DEFAULT_ORDER};
use crate::trap::plane_unchecked;
use crate::xprec::{w_oracle, w_xprec, XComplex, XParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precision {
    Binary64,
    Xprec,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub n: u32,
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    pub bound_abs: f64,
    pub bound_rel: f64,
    pub argmax_abs: Complex64,
    pub argmax_rel: Complex64,
    /// Points skipped because the reference value is not finite.
    pub excluded: usize,
    /// Points left out of the relative maximum because `|w|` is zero in binary64.
    pub rel_excluded: usize,
}

impl Tabular for SweepRecord {
    fn header() -> &'static [&'static str] {
        &[
            "n",
            "max_abs_err",
            "max_rel_err",
            "bound_abs",
            "bound_rel",
            "argmax_abs_re",
            "argmax_abs_im",
            "argmax_rel_re",
            "argmax_rel_im",
        ]
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Int(u64::from(self.n)),
            Cell::Real(self.max_abs_err),
            Cell::Real(self.max_rel_err),
            Cell::Real(self.bound_abs),
            Cell::Real(self.bound_rel),
            Cell::Real(self.argmax_abs.re),
            Cell::Real(self.argmax_abs.im),
            Cell::Real(self.argmax_rel.re),
            Cell::Real(self.argmax_rel.im),
        ]
    }
}

/// Running maximum with the first point in stream order winning ties.
#[derive(Clone, Copy, Debug)]
struct Peak {
    err: f64,
    idx: usize,
}

impl Peak {
    const NONE: Self = Self {
        err: f64::NEG_INFINITY,
        idx: usize::MAX,
    };

    #[inline]
    fn offer(&mut self, err: f64, idx: usize) {
        // a NaN error is a failure, not something to hide
        let err = if err.is_nan() { f64::INFINITY } else { err };
        if err > self.err || (err == self.err && idx < self.idx) {
            *self = Self { err, idx };
        }
    }

    fn merge(mut self, o: Self) -> Self {
        self.offer(o.err, o.idx);
        self
    }
}

#[derive(Clone, Debug)]
struct Partial {
    abs: Vec<Peak>,
    rel: Vec<Peak>,
    excluded: usize,
    rel_excluded: usize,
}

impl Partial {
    fn new(k: usize) -> Self {
        Self {
            abs: vec![Peak::NONE; k],
            rel: vec![Peak::NONE; k],
            excluded: 0,
            rel_excluded: 0,
        }
    }

    fn merge(mut self, o: Self) -> Self {
        for (a, b) in self.abs.iter_mut().zip(o.abs) {
            *a = a.merge(b);
        }
        for (a, b) in self.rel.iter_mut().zip(o.rel) {
            *a = a.merge(b);
        }
        self.excluded += o.excluded;
        self.rel_excluded += o.rel_excluded;
        self
    }
}

enum Evaluators {
    Binary64(Vec<EvalParams>),
    Xprec(Vec<XParams>),
}

impl Evaluators {
    fn new(n_values: &[u32], precision: Precision) -> Result<Self> {
        if n_values.is_empty() {
            return Err(FaddeevaError::Parameter(
                "sweep needs at least one N".into(),
            ));
        }
        Ok(match precision {
            Precision::Binary64 => {
                if let Some(&n) = n_values.iter().find(|&&n| n > DEFAULT_ORDER) {
                    return Err(FaddeevaError::Parameter(format!(
                        "N = {n} is below the binary64 rounding floor; use double-double precision"
                    )));
                }
                Self::Binary64(
                    n_values
                        .iter()
                        .map(|&n| EvalParams::new(n))
                        .collect::<Result<_>>()?,
                )
            }
            Precision::Xprec => Self::Xprec(
                n_values
                    .iter()
                    .map(|&n| XParams::new(n))
                    .collect::<Result<_>>()?,
            ),
        })
    }
}

fn visit(ev: &Evaluators, grid: &GridSpec, mut acc: Partial, i: usize) -> Partial {
    let z = grid.point(i);
    let exact = match w_oracle(z) {
        Ok(v) if v.is_finite() && v.to_c64().norm().is_finite() => v,
        _ => {
            acc.excluded += 1;
            return acc;
        }
    };
    let exact_norm = exact.norm().to_f64();
    let rated_rel = z.im >= 0.0;
    if rated_rel && exact_norm == 0.0 {
        acc.rel_excluded += 1;
    }
    let use_rel = rated_rel && exact_norm > 0.0;
    match ev {
        Evaluators::Binary64(ps) => {
            for (k, p) in ps.iter().enumerate() {
                let err = (XComplex::from_c64(plane_unchecked(z, p)) - exact)
                    .norm()
                    .to_f64();
                acc.abs[k].offer(err, i);
                if use_rel {
                    acc.rel[k].offer(err / exact_norm, i);
                }
            }
        }
        Evaluators::Xprec(ps) => {
            for (k, p) in ps.iter().enumerate() {
                let err = (w_xprec(z, p) - exact).norm().to_f64();
                acc.abs[k].offer(err, i);
                if use_rel {
                    acc.rel[k].offer(err / exact_norm, i);
                }
            }
        }
    }
    acc
}

fn finish(n_values: &[u32], grid: &GridSpec, part: Partial) -> Vec<SweepRecord> {
    let at = |p: Peak| {
        if p.idx == usize::MAX {
            Complex64::new(f64::NAN, f64::NAN)
        } else {
            grid.point(p.idx)
        }
    };
    let val = |p: Peak| if p.idx == usize::MAX { f64::NAN } else { p.err };
    n_values
        .iter()
        .enumerate()
        .map(|(k, &n)| SweepRecord {
            n,
            max_abs_err: val(part.abs[k]),
            max_rel_err: val(part.rel[k]),
            bound_abs: abs_bound(n),
            bound_rel: rel_bound(n),
            argmax_abs: at(part.abs[k]),
            argmax_rel: at(part.rel[k]),
            excluded: part.excluded,
            rel_excluded: part.rel_excluded,
        })
        .collect()
}

/// Maximum absolute and relative (`Im z >= 0`) errors of `w_N` against the
/// oracle over `grid`, one record per `N`, evaluated in parallel.
///
/// Binary64 sweeps accept `N <= 11`; double-double sweeps accept any `N <= 25`.
pub fn error_sweep(
    n_values: &[u32],
    grid: &GridSpec,
    precision: Precision,
) -> Result<Vec<SweepRecord>> {
    let ev = Evaluators::new(n_values, precision)?;
    let k = n_values.len();
    let part = (0..grid.len())
        .into_par_iter()
        .fold(|| Partial::new(k), |acc, i| visit(&ev, grid, acc, i))
        .reduce(|| Partial::new(k), Partial::merge);
    Ok(finish(n_values, grid, part))
}

/// [`error_sweep`] on the calling thread only.
pub fn error_sweep_serial(
    n_values: &[u32],
    grid: &GridSpec,
    precision: Precision,
) -> Result<Vec<SweepRecord>> {
    let ev = Evaluators::new(n_values, precision)?;
    let part = (0..grid.len()).fold(Partial::new(n_values.len()), |acc, i| {
        visit(&ev, grid, acc, i)
    });
    Ok(finish(n_values, grid, part))
}
