//! Adaptive Gauss–Legendre quadrature in double-double arithmetic.
//!
//! Used as an oracle independent of the trapezoidal-rule code: `w(z)` from its
//! integral representation over the real line, and `erfc(x)` from its
//! defining integral.

use std::sync::OnceLock;

use num_complex::Complex64;

use super::complex::XComplex;
use super::dd::XReal;
use crate::error::{FaddeevaError, Result};

const GL_POINTS: usize = 20;
const MAX_DEPTH: u32 = 50;
/// Panel differences below this multiple of the panel value are rounding noise.
const ROUNDING_FLOOR: f64 = 1e-31;
/// Integrals of `exp(-t^2)` are truncated at this `|t|` (tail below 1e-62).
const CUTOFF: f64 = 12.0;

/// Gauss–Legendre rule on `[-1, 1]`: `(node, weight)` for the non-negative nodes.
#[derive(Debug)]
pub struct GaussLegendre {
    half: Vec<(XReal, XReal)>,
    points: usize,
}

impl GaussLegendre {
    /// Nodes by Newton iteration on `P_n` in double-double arithmetic.
    pub fn new(points: usize) -> Self {
        let n = points as f64;
        let mut half = Vec::with_capacity(points.div_ceil(2));
        for i in 0..points.div_ceil(2) {
            let mut x =
                XReal::from_f64((std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos());
            let mut dp = XReal::ONE;
            for _ in 0..8 {
                let (p, d) = legendre(points, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs().hi() < 1e-34 {
                    let (_, d) = legendre(points, x);
                    dp = d;
                    break;
                }
            }
            let w = XReal::from_f64(2.0) / ((XReal::ONE - x.square()) * dp.square());
            half.push((x, w));
        }
        Self { half, points }
    }

    /// Rule on `[a, b]` applied to `f`.
    pub fn apply<F>(&self, f: &F, a: XReal, b: XReal) -> XComplex
    where
        F: Fn(XReal) -> XComplex,
    {
        let mid = (a + b).scale(0.5);
        let rad = (b - a).scale(0.5);
        let mut acc = XComplex::ZERO;
        for (k, &(x, w)) in self.half.iter().enumerate() {
            let dx = rad * x;
            if self.points % 2 == 1 && k == self.half.len() - 1 {
                acc += f(mid).scale(w);
            } else {
                acc += (f(mid + dx) + f(mid - dx)).scale(w);
            }
        }
        acc.scale(rad)
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: XReal) -> (XReal, XReal) {
    let mut p0 = XReal::ONE;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = (x * p1).mul_f64(2.0 * kf - 1.0) - p0.mul_f64(kf - 1.0);
        p0 = p1;
        p1 = p2.div_f64(kf);
    }
    let d = (x * p1 - p0).mul_f64(n as f64) / (x.square() - 1.0);
    (p1, d)
}

fn rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(GL_POINTS))
}

/// Adaptive bisection: a panel is accepted when the one-panel and two-panel
/// estimates differ by at most `tol` (halved at each level) or by rounding
/// noise, returning the two-panel value.
pub fn integrate<F>(f: &F, a: XReal, b: XReal, tol: f64) -> Result<XComplex>
where
    F: Fn(XReal) -> XComplex,
{
    let gl = rule();
    let whole = gl.apply(f, a, b);
    refine(gl, f, a, b, whole, tol, 0)
}

fn refine<F>(
    gl: &GaussLegendre,
    f: &F,
    a: XReal,
    b: XReal,
    whole: XComplex,
    tol: f64,
    depth: u32,
) -> Result<XComplex>
where
    F: Fn(XReal) -> XComplex,
{
    let m = (a + b).scale(0.5);
    let left = gl.apply(f, a, m);
    let right = gl.apply(f, m, b);
    let halves = left + right;
    let diff = (halves - whole).norm().hi();
    if diff <= tol || diff <= ROUNDING_FLOOR * halves.norm().hi() {
        return Ok(halves);
    }
    if depth >= MAX_DEPTH {
        return Err(FaddeevaError::Evaluation(format!(
            "adaptive quadrature did not converge on [{}, {}]",
            a.to_f64(),
            b.to_f64()
        )));
    }
    let l = refine(gl, f, a, m, left, 0.5 * tol, depth + 1)?;
    let r = refine(gl, f, m, b, right, 0.5 * tol, depth + 1)?;
    Ok(l + r)
}

/// `w(z) = (2 i z / pi) * integral_0^12 exp(-t^2) / (z^2 - t^2) dt` for `Im z > 0`.
///
/// `rel_tol` is relative to the size of the integrand scale `1/|z|`.
pub fn w_by_quadrature(z: Complex64, rel_tol: f64) -> Result<XComplex> {
    if !(z.im > 0.0) || !z.re.is_finite() || !z.im.is_finite() {
        return Err(FaddeevaError::Domain(format!(
            "integral representation needs Im z > 0, got {z}"
        )));
    }
    let zx = XComplex::from_c64(z);
    let z2 = zx * zx;
    let f = |t: XReal| {
        let d = z2 - t.square();
        XComplex::ONE.scale((-t.square()).exp()) / d
    };
    let tol = rel_tol / (1.0 + z.norm());
    // split at Re z where the integrand peaks
    let peak = z.re.abs().min(CUTOFF);
    let mut integral = XComplex::ZERO;
    let pieces = [0.0, peak, CUTOFF];
    for w in pieces.windows(2) {
        if w[1] > w[0] {
            integral += integrate(&f, XReal::from_f64(w[0]), XReal::from_f64(w[1]), tol)?;
        }
    }
    Ok((zx * integral)
        .mul_i()
        .scale(XReal::from_f64(2.0) / XReal::PI))
}

/// `erfc(x) = (2 / sqrt(pi)) * integral_x^inf exp(-t^2) dt` for real `x >= 0`.
pub fn erfc_by_quadrature(x: f64, tol: f64) -> Result<XReal> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(FaddeevaError::Domain(format!(
            "erfc quadrature needs finite x >= 0, got {x}"
        )));
    }
    let f = |t: XReal| XComplex::new((-t.square()).exp(), XReal::ZERO);
    let i = integrate(&f, XReal::from_f64(x), XReal::from_f64(x + CUTOFF), tol)?;
    Ok(i.re.scale(2.0) / XReal::SQRT_PI)
}
