//! Quadrature order, step size and the branch tags of the evaluator.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{FaddeevaError, Result};

/// Order used when none is given; the binary64 result is at its rounding
/// floor (about 1e-15) from here on.
pub const DEFAULT_ORDER: u32 = 11;

/// Largest accepted order. Beyond N = 20 a binary64 evaluation gains nothing,
/// and beyond 25 the error drops under what the double-double oracle resolves.
pub const MAX_ORDER: u32 = 25;

const MAX_NODES: usize = MAX_ORDER as usize + 2;

/// Fractional part `t - floor(t)`, always in `[0, 1)`.
pub fn frac_part(t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(FaddeevaError::Domain(format!("frac_part of {t}")));
    }
    let f = t - t.floor();
    // t - floor(t) rounds up to 1.0 for tiny negative t
    Ok(if f >= 1.0 { 0.0 } else { f })
}

/// Step size `h = sqrt(pi / (N + 1))` for order `n`.
pub fn step_size(n: u32) -> Result<f64> {
    check_order(n)?;
    Ok(raw_step(n))
}

fn raw_step(n: u32) -> f64 {
    (PI / f64::from(n + 1)).sqrt()
}

fn check_order(n: u32) -> Result<()> {
    if n > MAX_ORDER {
        return Err(FaddeevaError::Parameter(format!(
            "quadrature order {n} outside 0..={MAX_ORDER}"
        )));
    }
    Ok(())
}

/// Quadrature order `N` with its step and precomputed node tables.
///
/// Midpoint nodes are `t_k = (k + 1/2) h` for `k = 0..=N`; trapezoidal nodes
/// are `tau_k = k h` for `k = 1..=N` (plus `tau_0 = 0`, handled separately).
#[derive(Clone, Debug, PartialEq)]
pub struct EvalParams {
    n: u32,
    h: f64,
    pi_over_h: f64,
    mid_sq: [f64; MAX_NODES],
    mid_weight: [f64; MAX_NODES],
    trap_sq: [f64; MAX_NODES],
    trap_weight: [f64; MAX_NODES],
}

impl EvalParams {
    pub fn new(n: u32) -> Result<Self> {
        check_order(n)?;
        let h = raw_step(n);
        let mut mid_sq = [0.0; MAX_NODES];
        let mut mid_weight = [0.0; MAX_NODES];
        let mut trap_sq = [0.0; MAX_NODES];
        let mut trap_weight = [0.0; MAX_NODES];
        for k in 0..=n as usize {
            let t = (k as f64 + 0.5) * h;
            mid_sq[k] = t * t;
            mid_weight[k] = (-t * t).exp();
            let tau = k as f64 * h;
            trap_sq[k] = tau * tau;
            trap_weight[k] = (-tau * tau).exp();
        }
        Ok(Self {
            n,
            h,
            pi_over_h: PI / h,
            mid_sq,
            mid_weight,
            trap_sq,
            trap_weight,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// `pi / h`, which equals `tau_{N+1} = sqrt((N + 1) pi)`.
    pub fn pi_over_h(&self) -> f64 {
        self.pi_over_h
    }

    /// Midpoint node `t_k = (k + 1/2) h`.
    pub fn t(&self, k: u32) -> f64 {
        (f64::from(k) + 0.5) * self.h
    }

    /// Trapezoidal node `tau_k = k h`.
    pub fn tau(&self, k: u32) -> f64 {
        f64::from(k) * self.h
    }

    /// `(t_k^2, exp(-t_k^2))` for `k = 0..=N`.
    pub(crate) fn mid_nodes(&self) -> impl DoubleEndedIterator<Item = (f64, f64)> + '_ {
        let m = self.n as usize + 1;
        self.mid_sq[..m]
            .iter()
            .copied()
            .zip(self.mid_weight[..m].iter().copied())
    }

    /// `(tau_k^2, exp(-tau_k^2))` for `k = 1..=N`.
    pub(crate) fn trap_nodes(&self) -> impl DoubleEndedIterator<Item = (f64, f64)> + '_ {
        let m = self.n as usize + 1;
        self.trap_sq[1..m]
            .iter()
            .copied()
            .zip(self.trap_weight[1..m].iter().copied())
    }
}

impl Default for EvalParams {
    fn default() -> Self {
        Self::new(DEFAULT_ORDER).expect("default order is in range")
    }
}

/// Which of the three truncated rules the dispatcher picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchTag {
    /// Plain midpoint rule, far above the real axis.
    M,
    /// Midpoint rule with the pole-residue correction.
    MM,
    /// Trapezoidal rule with the pole-residue correction.
    MT,
}

impl fmt::Display for BranchTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::M => "M",
            Self::MM => "MM",
            Self::MT => "MT",
        })
    }
}
