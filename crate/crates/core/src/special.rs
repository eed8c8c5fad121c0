//! Functions derived from `w_N`: complementary error function, error
//! function, scaled complement, Dawson's integral and the Voigt functions.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{check_finite, FaddeevaError, Result};
use crate::params::EvalParams;
use crate::trap::{exp_neg_square, plane_unchecked, w_quadrant1};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `erfc(z) = exp(-z^2) w(iz)`.
///
/// For `Re z < 0` the reflection `erfc(z) = 2 - erfc(-z)` is used so the
/// result stays finite where `exp(-z^2)` and `w(iz)` would overflow
/// separately. Large positive `Re z` underflows to 0. Large `|Im z|` with
/// small `Re z` overflows to infinity, as `erfc` itself does.
pub fn erfc_c(z: Complex64, p: &EvalParams) -> Result<Complex64> {
    check_finite(z)?;
    Ok(erfc_unchecked(z, p))
}

fn erfc_unchecked(z: Complex64, p: &EvalParams) -> Complex64 {
    if z.re < 0.0 {
        return 2.0 - erfc_unchecked(-z, p);
    }
    let e = exp_neg_square(z);
    if e == Complex64::new(0.0, 0.0) {
        // w(iz) is bounded for Re z >= 0
        return e;
    }
    e * plane_unchecked(I * z, p)
}

/// `erf(z) = 1 - erfc(z)`.
pub fn erf_c(z: Complex64, p: &EvalParams) -> Result<Complex64> {
    Ok(1.0 - erfc_c(z, p)?)
}

/// Scaled complementary error function `erfcx(z) = exp(z^2) erfc(z) = w(iz)`.
pub fn erfcx_c(z: Complex64, p: &EvalParams) -> Result<Complex64> {
    check_finite(z)?;
    Ok(plane_unchecked(I * z, p))
}

/// Real scaled complement `erfcx(y)` for real `y`.
pub(crate) fn erfcx_real(y: f64, p: &EvalParams) -> f64 {
    plane_unchecked(Complex64::new(0.0, y), p).re
}

/// Dawson's integral `D(x) = exp(-x^2) * integral_0^x exp(t^2) dt = (sqrt(pi)/2) Im w(x)`.
pub fn dawson_real(x: f64, p: &EvalParams) -> Result<f64> {
    if !x.is_finite() {
        return Err(FaddeevaError::Domain(format!("Dawson integral at {x}")));
    }
    let d = 0.5 * PI.sqrt() * w_quadrant1(Complex64::new(x.abs(), 0.0), p).im;
    Ok(if x < 0.0 { -d } else { d })
}

/// Voigt functions `(K(x, y), L(x, y)) = (Re w(x + iy), Im w(x + iy))` for `y > 0`.
pub fn voigt_kl(x: f64, y: f64, p: &EvalParams) -> Result<(f64, f64)> {
    if !(y > 0.0) {
        return Err(FaddeevaError::Parameter(format!(
            "Voigt functions need y > 0, got {y}"
        )));
    }
    let z = Complex64::new(x, y);
    check_finite(z)?;
    let w = plane_unchecked(z, p);
    Ok((w.re, w.im))
}
