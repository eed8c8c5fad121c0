//! Zaghloul and Ali's approximation `w(z) ~ u(x, y) + i v(x, y)` for `x, y >= 0`:
//!
//! ```text
//! u = e^{-x^2} erfcx(y) cos(2xy) + 2a sin^2(xy) e^{-x^2} / (pi y) + (a y / pi) (-2 cos(2xy) S1 + S2 + S3)
//! v = -e^{-x^2} erfcx(y) sin(2xy) + a sin(2xy) e^{-x^2} / (pi y) + (a / pi) (2y sin(2xy) S1 - S4 + S5)
//! ```
//!
//! with `S1..S5` sums over `k >= 1` of Gaussians centred at `ak = 0`, `-x` and `x`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{check_finite, FaddeevaError, Result};
use crate::params::{EvalParams, DEFAULT_ORDER};
use crate::special::erfcx_real;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZaghloulParams {
    /// Spacing of the sums.
    pub a: f64,
    /// Terms kept on each side of the peak of every sum.
    pub terms: u32,
}

impl Default for ZaghloulParams {
    fn default() -> Self {
        Self { a: 0.5, terms: 38 }
    }
}

impl ZaghloulParams {
    pub fn new(a: f64, terms: u32) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() || terms == 0 {
            return Err(FaddeevaError::Parameter(format!(
                "Zaghloul parameters need a > 0 and K >= 1, got a = {a}, K = {terms}"
            )));
        }
        Ok(Self { a, terms })
    }
}

/// `(S1, S2, S3, S4, S5)`.
///
/// `S1`, `S2`, `S4` use `k = 1..=K`. The terms of `S3` and `S5` peak at
/// `k0 = round(x / a)`, so those run over `max(1, k0 - K)..=k0 + K`.
pub fn zaghloul_sums(x: f64, y: f64, p: ZaghloulParams) -> [f64; 5] {
    let a = p.a;
    let k_max = u64::from(p.terms);
    let y2 = y * y;
    let ex2 = (-x * x).exp();
    let (mut s1, mut s2, mut s4) = (0.0, 0.0, 0.0);
    for k in (1..=k_max).rev() {
        let ak = a * k as f64;
        let den = ak * ak + y2;
        s1 += (-ak * ak).exp() * ex2 / den;
        let e = (-(ak + x) * (ak + x)).exp();
        s2 += e / den;
        s4 += ak * e / den;
    }
    let k0 = (x / a).round() as u64;
    let lo = k0.saturating_sub(k_max).max(1);
    let hi = k0 + k_max;
    let (mut s3, mut s5) = (0.0, 0.0);
    // outer terms first
    let order = (lo..=hi).map(|k| (k.abs_diff(k0), k));
    let mut ks: Vec<(u64, u64)> = order.collect();
    ks.sort_unstable_by(|a, b| b.cmp(a));
    for (_, k) in ks {
        let ak = a * k as f64;
        let den = ak * ak + y2;
        let e = (-(ak - x) * (ak - x)).exp();
        s3 += e / den;
        s5 += ak * e / den;
    }
    [s1, s2, s3, s4, s5]
}

fn erfcx_params() -> &'static EvalParams {
    static P: OnceLock<EvalParams> = OnceLock::new();
    P.get_or_init(|| EvalParams::new(DEFAULT_ORDER).expect("default order is valid"))
}

/// `u(x, y) + i v(x, y)` for `z` in the closed first quadrant.
pub fn zaghloul_eval(z: Complex64, p: ZaghloulParams) -> Result<Complex64> {
    check_finite(z)?;
    let (x, y) = (z.re, z.im);
    if x < 0.0 || y < 0.0 {
        return Err(FaddeevaError::Domain(format!(
            "Zaghloul approximation needs Re z >= 0 and Im z >= 0, got {z}"
        )));
    }
    let a = p.a;
    let [s1, s2, s3, s4, s5] = zaghloul_sums(x, y, p);
    let ex2 = (-x * x).exp();
    // one rounding of xy shared by every trigonometric term keeps their cancellation exact
    let t = x * y;
    let (s, c) = (2.0 * t).sin_cos();
    let st = t.sin();
    let ey = erfcx_real(y, erfcx_params());
    let (lim_u, lim_v) = if y == 0.0 {
        (0.0, 2.0 * a * x * ex2 / PI)
    } else {
        (2.0 * a * st * st * ex2 / (PI * y), a * s * ex2 / (PI * y))
    };
    let u = ex2 * ey * c + lim_u + a * y / PI * (-2.0 * c * s1 + s2 + s3);
    let v = -ex2 * ey * s + lim_v + a / PI * (2.0 * y * s * s1 - s4 + s5);
    Ok(Complex64::new(u, v))
}
