//! Convergents of the Laplace continued fraction
//! `w(z) ~ (i/sqrt(pi)) / (z - (1/2) / (z - (2/2) / (z - ... ((n-1)/2) / z)))`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{check_finite, FaddeevaError, Result};

fn check_order(n: u32) -> Result<()> {
    if n == 0 {
        return Err(FaddeevaError::Parameter(
            "continued fraction needs n >= 1".into(),
        ));
    }
    Ok(())
}

fn singular(z: Complex64, n: u32) -> FaddeevaError {
    FaddeevaError::Evaluation(format!(
        "continued fraction convergent {n} is singular at z = {z}"
    ))
}

/// The `n`th convergent by backward recurrence. Accurate for `|z| >= 8`.
pub fn cf_convergent(z: Complex64, n: u32) -> Result<Complex64> {
    check_order(n)?;
    check_finite(z)?;
    let mut r = z;
    for m in (1..n).rev() {
        if r == Complex64::new(0.0, 0.0) {
            return Err(singular(z, n));
        }
        r = z - 0.5 * f64::from(m) / r;
    }
    if r == Complex64::new(0.0, 0.0) {
        return Err(singular(z, n));
    }
    Ok(Complex64::new(0.0, 1.0 / PI.sqrt()) / r)
}

/// The same convergent from the forward three-term recurrence for numerators
/// and denominators. Only used to cross-check [`cf_convergent`].
pub fn cf_top_down(z: Complex64, n: u32) -> Result<Complex64> {
    check_order(n)?;
    check_finite(z)?;
    // A_k = b_k A_{k-1} + a_k A_{k-2}, with b_k = z and a_1 = i/sqrt(pi), a_k = -(k-1)/2
    let (mut a_prev, mut a_cur) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    let (mut b_prev, mut b_cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    for k in 1..=n {
        let a_k = if k == 1 {
            Complex64::new(0.0, 1.0 / PI.sqrt())
        } else {
            Complex64::new(-0.5 * f64::from(k - 1), 0.0)
        };
        let a_next = z * a_cur + a_k * a_prev;
        let b_next = z * b_cur + a_k * b_prev;
        a_prev = a_cur;
        a_cur = a_next;
        b_prev = b_cur;
        b_cur = b_next;
    }
    if b_cur == Complex64::new(0.0, 0.0) {
        return Err(singular(z, n));
    }
    Ok(a_cur / b_cur)
}
