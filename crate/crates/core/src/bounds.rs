//! Closed-form error bounds for `w_N`.
//!
//! With `h = sqrt(pi / (N + 1))` the discretisation error of the infinite
//! modified rule and the truncation error of cutting it at `N` terms both
//! decay like `exp(-(N + 1) pi)`; adding them gives
//!
//! ```text
//! |w(z) - w_N(z)|          <= C1 exp(-pi N)                 for all z
//! |w(z) - w_N(z)| / |w(z)| <= C2 sqrt(N + 1) exp(-pi N)     for Im z >= 0
//! ```

use std::f64::consts::{E, PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{FaddeevaError, Result};

/// The constants appearing in the bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundConstants {
    /// Absolute discretisation constant, about 4.934.
    pub c_a: f64,
    /// Relative discretisation constant, about 60.77.
    pub c_r: f64,
    /// `1 / (1 - exp(-2 pi + sqrt(2 pi)))`, about 1.0234.
    pub c_star: f64,
    /// About 0.6692.
    pub big_c1: f64,
    /// About 3.971.
    pub big_c2: f64,
}

pub fn constants() -> BoundConstants {
    let sqrt_pi = PI.sqrt();
    let sqrt_e = E.sqrt();
    let e_pi = PI.exp();
    let two_e_sqrt_pi = 2.0 * E + sqrt_pi;
    let c_a = 2.0 * two_e_sqrt_pi / (E * PI).sqrt();
    let c_r = 2.0 * (2.0 * PI).sqrt() * (1.0 + sqrt_pi) * two_e_sqrt_pi / sqrt_e;
    let c_star = 1.0 / (1.0 - (-2.0 * PI + (2.0 * PI).sqrt()).exp());
    let big_c1 = c_a * c_star / e_pi + 10.0 * SQRT_2 * (1.0 + 2.0 * PI) / (e_pi * PI * PI);
    let big_c2 = 2.0 * SQRT_2 * (1.0 + sqrt_pi) * two_e_sqrt_pi * c_star / (e_pi * sqrt_e)
        + 10.0 * (1.0 + 2.0 * PI) * (2.0 * PI + SQRT_2) / (e_pi * PI * PI);
    BoundConstants {
        c_a,
        c_r,
        c_star,
        big_c1,
        big_c2,
    }
}

/// `C1 exp(-pi N)`: bound on `|w(z) - w_N(z)|` over the whole plane.
pub fn abs_bound(n: u32) -> f64 {
    constants().big_c1 * (-PI * f64::from(n)).exp()
}

/// `C2 sqrt(N + 1) exp(-pi N)`: bound on the relative error for `Im z >= 0`.
pub fn rel_bound(n: u32) -> f64 {
    constants().big_c2 * f64::from(n + 1).sqrt() * (-PI * f64::from(n)).exp()
}

/// The two ingredients of the absolute bound before simplification:
/// `(discretisation, truncation)`.
///
/// `discretisation = c_a exp(-pi^2/h^2) / (1 - exp(-2 pi^2/h^2 + sqrt(2) pi/h))`,
/// `truncation = 2 sqrt(2) (1 + 2 h tau) (h + 4 tau) / (pi h tau^2) exp(-tau^2)`
/// with `tau = tau_{N+1} = pi / h`.
pub fn component_bounds(n: u32) -> (f64, f64) {
    let h = (PI / f64::from(n + 1)).sqrt();
    let tau = PI / h;
    let a = tau * tau;
    let trap = constants().c_a * (-a).exp() / (1.0 - (-2.0 * a + SQRT_2 * tau).exp());
    let trunc =
        2.0 * SQRT_2 * (1.0 + 2.0 * h * tau) * (h + 4.0 * tau) / (PI * h * tau * tau) * (-a).exp();
    (trap, trunc)
}

/// Older pointwise bound on the modified trapezoidal rule error,
/// `2 |z exp(-z^2)| exp(-pi^2/h^2) / (sqrt(pi) (1 - exp(-2 pi^2/h^2)) |x^2 - pi^2/h^2|)`.
///
/// It ignores truncation and blows up at `x = pi / h`; kept for comparison plots.
pub fn hunter_regan_bound(z: Complex64, h: f64) -> Result<f64> {
    let x = z.re;
    if !(x > 0.0) || !(h > 0.0) || !z.im.is_finite() {
        return Err(FaddeevaError::Domain(format!(
            "Hunter-Regan bound needs Re z > 0 and h > 0, got z = {z}, h = {h}"
        )));
    }
    let a = (PI / h).powi(2);
    let gap = (x * x - a).abs();
    if gap == 0.0 {
        return Err(FaddeevaError::Parameter(format!(
            "Hunter-Regan bound is singular at x = pi/h = {x}"
        )));
    }
    let mag = (z * (-z * z).exp()).norm();
    Ok(2.0 * mag * (-a).exp() / (PI.sqrt() * (1.0 - (-2.0 * a).exp()) * gap))
}
