//! Weideman's single rational approximation
//!
//! ```text
//! w(z) ~ 1 / (sqrt(pi) (L - iz)) + 2 / (L - iz)^2 * sum_{n=0}^{N-1} a_{n+1} Z^n,
//! Z = (L + iz) / (L - iz),  L = 2^{-1/4} sqrt(N),  Im z >= 0.
//! ```
//!
//! The coefficients are the Taylor coefficients of
//! `F(Z) = (L - iz)^2 (w(z) - 1 / (sqrt(pi) (L - iz))) / 2`, analytic in the
//! unit disc. They are obtained by discrete Fourier analysis of `F` on the unit
//! circle, which is the image of the real `z` axis.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{check_finite, FaddeevaError, Result};
use crate::xprec::{XComplex, XReal};

/// Largest accepted defect `|w_fit(z_j) - w(z_j)|` at the sample points.
pub const WEIDEMAN_MAX_DEFECT: f64 = 1e-14;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeidemanModel {
    n: usize,
    l: f64,
    coeffs: Vec<f64>,
    imag_residue: f64,
    defect: f64,
}

impl WeidemanModel {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Scale `L = 2^{-1/4} sqrt(N)`.
    pub fn l(&self) -> f64 {
        self.l
    }

    /// `a_1, ..., a_N`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Largest imaginary part discarded from the Fourier coefficients.
    pub fn imag_residue(&self) -> f64 {
        self.imag_residue
    }

    /// Largest defect at the sample points, measured on `w`.
    pub fn defect(&self) -> f64 {
        self.defect
    }

    /// The `2N` sample points `z_j = L tan(theta_j / 2)`, `theta_j = pi (2j + 1 - 2N) / (2N)`.
    pub fn sample_points(&self) -> Vec<f64> {
        let l = XReal::from_f64(self.l);
        (0..2 * self.n)
            .map(|j| sample_point(l, self.n, j).to_f64())
            .collect()
    }
}

fn sample_point(l: XReal, n: usize, j: usize) -> XReal {
    let m = 2 * n;
    let half_theta = XReal::PI
        .mul_f64((2 * j + 1) as f64 - m as f64)
        .div_f64(2.0 * m as f64);
    let (s, c) = half_theta.sin_cos();
    l * s / c
}

/// Fits the `n` coefficients from values of `w` on the real axis supplied by `oracle`.
pub fn weideman_fit_coeffs<F>(n: usize, oracle: F) -> Result<WeidemanModel>
where
    F: Fn(Complex64) -> Result<XComplex>,
{
    if n < 8 {
        return Err(FaddeevaError::Parameter(format!(
            "Weideman approximation needs N >= 8, got {n}"
        )));
    }
    let m = 2 * n;
    let l = XReal::from_f64(2f64.powf(-0.25) * (n as f64).sqrt());
    let l_f64 = l.to_f64();
    let inv_sqrt_pi = XReal::ONE / XReal::SQRT_PI;
    let two_over_sqrt_pi = inv_sqrt_pi.scale(2.0);

    let mut samples = Vec::with_capacity(m);
    for j in 0..m {
        let x = sample_point(l, n, j);
        let xr = x.to_f64();
        let w0 = oracle(Complex64::new(xr, 0.0))?;
        // move from the rounded point to the exact one: w' = -2 z w + 2i/sqrt(pi)
        let dz = x - xr;
        let dw = XComplex::new(
            -(w0.re * x).scale(2.0),
            two_over_sqrt_pi - (w0.im * x).scale(2.0),
        );
        let w = w0 + dw.scale(dz);
        let d = XComplex::new(l, -x);
        let f =
            (d * d * (w - XComplex::new(inv_sqrt_pi, XReal::ZERO) / d)).scale(XReal::from_f64(0.5));
        samples.push(f);
    }

    let mut coeffs = Vec::with_capacity(n);
    let mut imag_residue: f64 = 0.0;
    for k in 0..n {
        let mut acc = XComplex::ZERO;
        for (j, f) in samples.iter().enumerate() {
            let num = (k as f64) * ((2 * j + 1) as f64 - m as f64);
            let (s, c) = XReal::PI.mul_f64(num).div_f64(m as f64).sin_cos();
            acc += *f * XComplex::new(c, -s);
        }
        let c = acc.scale(XReal::ONE.div_f64(m as f64));
        imag_residue = imag_residue.max(c.im.abs().to_f64());
        coeffs.push(c.re.to_f64());
    }

    let mut model = WeidemanModel {
        n,
        l: l_f64,
        coeffs,
        imag_residue,
        defect: 0.0,
    };
    let mut defect: f64 = 0.0;
    for x in model.sample_points() {
        let z = Complex64::new(x, 0.0);
        let exact = oracle(z)?.to_c64();
        defect = defect.max((weideman_eval(z, &model)? - exact).norm());
    }
    model.defect = defect;
    if !(defect <= WEIDEMAN_MAX_DEFECT) {
        return Err(FaddeevaError::Construction(format!(
            "Weideman fit with N = {n} has defect {defect:e} at the sample points"
        )));
    }
    Ok(model)
}

/// Evaluates the rational approximation for `Im z >= 0`.
pub fn weideman_eval(z: Complex64, m: &WeidemanModel) -> Result<Complex64> {
    check_finite(z)?;
    if z.im < 0.0 {
        return Err(FaddeevaError::Domain(format!(
            "Weideman approximation needs Im z >= 0, got {z}"
        )));
    }
    let iz = Complex64::new(-z.im, z.re);
    let d = m.l - iz;
    let zz = (m.l + iz) / d;
    let mut p = Complex64::new(0.0, 0.0);
    for &a in m.coeffs.iter().rev() {
        p = p * zz + a;
    }
    let r = 1.0 / d;
    Ok(r / PI.sqrt() + 2.0 * p * r * r)
}
