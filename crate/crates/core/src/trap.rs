//! The truncated rules `w_N^M`, `w_N^MM`, `w_N^MT` and the dispatch that
//! extends them to the whole complex plane.
//!
//! All three rules discretise
//!
//! ```text
//! w(z) = (i z / pi) * integral over R of exp(-t^2) / (z^2 - t^2) dt,   Im z > 0
//! ```
//!
//! with `N + 1` nodes on the half line. The midpoint rule alone is accurate
//! far from the real axis; closer in, the poles of the integrand at `t = +-z`
//! are compensated by the residue term `2 exp(-z^2) / (1 +- exp(-2 i pi z / h))`.
//! The dispatcher picks the rule whose nodes stay at least `h/4` away from `z`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{check_finite, FaddeevaError, Result};
use crate::params::{frac_part, BranchTag, EvalParams};

/// Direct calls closer than `h * POLE_GUARD` to a node are rejected.
const POLE_GUARD: f64 = 1e-3;

/// Beyond this the residue term is below the smallest subnormal.
const EXP_UNDERFLOW: f64 = -746.0;

/// `z^2` with the real part formed as `(x - y)(x + y)`.
#[inline]
pub(crate) fn square(z: Complex64) -> Complex64 {
    Complex64::new((z.re - z.im) * (z.re + z.im), 2.0 * z.re * z.im)
}

/// `exp(-z^2)`. On the axes the phase is exactly zero, so an overflowing
/// modulus gives `inf + 0i` rather than `inf * sin(0) = NaN`.
#[inline]
pub(crate) fn exp_neg_square(z: Complex64) -> Complex64 {
    let s = square(z);
    if s.im == 0.0 {
        return Complex64::new((-s.re).exp(), -s.im);
    }
    Complex64::new(-s.re, -s.im).exp()
}

/// `(2 i h z / pi) * sum_k w_k / (z^2 - s_k^2)` over the given `(s_k^2, w_k)`,
/// accumulated from the last (smallest) term to the first.
#[inline]
fn node_sum<I>(z: Complex64, h: f64, nodes: I) -> Complex64
where
    I: DoubleEndedIterator<Item = (f64, f64)>,
{
    let z2 = square(z);
    let scale = Complex64::new(0.0, 2.0 * h / PI);
    if z2.re.is_finite() && z2.im.is_finite() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (s2, weight) in nodes.rev() {
            acc += weight / Complex64::new(z2.re - s2, z2.im);
        }
        scale * z * acc
    } else {
        // |z| beyond ~1e154: divide through by z instead of forming z^2
        let zinv = z.inv();
        let mut acc = Complex64::new(0.0, 0.0);
        for (s2, weight) in nodes.rev() {
            acc += weight / (z - s2 * zinv);
        }
        scale * acc
    }
}

/// Residue correction `2 exp(-z^2) / (1 + sign * exp(-2 i pi z / h))`.
///
/// Rewritten as `2 P / (q + sign)` with `q = exp(2 i pi z / h)` and
/// `P = exp(-z^2 + 2 i pi z / h)`, so that for `Im z >= 0` neither factor
/// overflows; `P` is formed from a single exponent.
#[inline]
fn residue_term(z: Complex64, p: &EvalParams, sign: f64) -> Complex64 {
    let two_pi_over_h = 2.0 * p.pi_over_h();
    let log_mag = -(z.re - z.im) * (z.re + z.im) - two_pi_over_h * z.im;
    if log_mag < EXP_UNDERFLOW {
        return Complex64::new(0.0, 0.0);
    }
    let phase = -2.0 * z.re * z.im + two_pi_over_h * z.re;
    let big_p = Complex64::from_polar(log_mag.exp(), phase);
    let q = Complex64::from_polar((-two_pi_over_h * z.im).exp(), two_pi_over_h * z.re);
    2.0 * big_p / (q + sign)
}

#[inline]
fn mid_sum_unchecked(z: Complex64, p: &EvalParams) -> Complex64 {
    node_sum(z, p.h(), p.mid_nodes())
}

#[inline]
fn mod_mid_unchecked(z: Complex64, p: &EvalParams) -> Complex64 {
    residue_term(z, p, 1.0) + mid_sum_unchecked(z, p)
}

#[inline]
fn mod_trap_unchecked(z: Complex64, p: &EvalParams) -> Complex64 {
    let origin = Complex64::new(0.0, p.h() / PI) / z;
    residue_term(z, p, -1.0) + origin + node_sum(z, p.h(), p.trap_nodes())
}

/// Nearest of `+-node` to `z`, as `(signed node, distance)`.
fn nearest_node(z: Complex64, nodes: impl Iterator<Item = f64>) -> Option<(f64, f64)> {
    nodes
        .flat_map(|s| [s, -s])
        .map(|s| (s, (z - s).norm()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
}

fn guard_nodes(z: Complex64, p: &EvalParams, nodes: impl Iterator<Item = f64>) -> Result<()> {
    match nearest_node(z, nodes) {
        Some((node, distance)) if distance < POLE_GUARD * p.h() => {
            Err(FaddeevaError::PoleProximity { z, node, distance })
        }
        _ => Ok(()),
    }
}

fn mid_nodes(p: &EvalParams) -> impl Iterator<Item = f64> + '_ {
    (0..=p.n()).map(|k| p.t(k))
}

fn trap_nodes(p: &EvalParams) -> impl Iterator<Item = f64> + '_ {
    (0..=p.n()).map(|k| p.tau(k))
}

/// Truncated midpoint rule `w_N^M(z) = (2 i h z / pi) sum_{k=0}^{N} exp(-t_k^2) / (z^2 - t_k^2)`.
///
/// Valid anywhere away from the nodes `+-t_k`; a call within `h/1000` of one
/// is rejected.
pub fn w_mid_sum(z: Complex64, p: &EvalParams) -> Result<Complex64> {
    check_finite(z)?;
    guard_nodes(z, p, mid_nodes(p))?;
    Ok(mid_sum_unchecked(z, p))
}

/// Modified midpoint rule `w_N^MM(z) = 2 exp(-z^2) / (1 + exp(-2 i pi z / h)) + w_N^M(z)`.
///
/// Requires `z` in the closed first quadrant. Far up the imaginary axis
/// (`y^2 - 2 pi y / h - x^2 > 709`) the residue term overflows and an
/// [`FaddeevaError::Overflow`] is returned; the dispatcher never goes there.
pub fn w_mod_mid(z: Complex64, p: &EvalParams) -> Result<Complex64> {
    check_finite(z)?;
    require_first_quadrant(z)?;
    guard_nodes(z, p, mid_nodes(p))?;
    let log_mag = (z.im - z.re) * (z.im + z.re) - 2.0 * p.pi_over_h() * z.im;
    if log_mag > f64::MAX_EXP as f64 * std::f64::consts::LN_2 {
        return Err(FaddeevaError::Overflow(format!(
            "residue term of the modified midpoint rule at z = {z}"
        )));
    }
    Ok(mod_mid_unchecked(z, p))
}

/// Modified trapezoidal rule
/// `w_N^MT(z) = 2 exp(-z^2) / (1 - exp(-2 i pi z / h)) + i h / (pi z) + (2 i h z / pi) sum_{k=1}^{N} exp(-tau_k^2) / (z^2 - tau_k^2)`.
///
/// Requires `Re z > 0`. Intended for `0 <= Im z < Re z` with
/// `frac(Re z / h)` in `[1/4, 3/4]`.
pub fn w_mod_trap(z: Complex64, p: &EvalParams) -> Result<Complex64> {
    check_finite(z)?;
    if !(z.re > 0.0) {
        return Err(FaddeevaError::Domain(format!(
            "modified trapezoidal rule needs Re z > 0, got z = {z}"
        )));
    }
    guard_nodes(z, p, trap_nodes(p))?;
    Ok(mod_trap_unchecked(z, p))
}

fn require_first_quadrant(z: Complex64) -> Result<()> {
    if z.re >= 0.0 && z.im >= 0.0 {
        Ok(())
    } else {
        Err(FaddeevaError::Domain(format!(
            "expected z in the closed first quadrant, got {z}"
        )))
    }
}

/// Branch rule for `z` in the closed first quadrant:
/// `M` if `y >= max(x, pi/h)`, `MT` if `y < x` and `1/4 <= frac(x/h) <= 3/4`,
/// `MM` otherwise.
pub fn select_branch(z: Complex64, p: &EvalParams) -> BranchTag {
    debug_assert!(
        z.re >= 0.0 && z.im >= 0.0,
        "select_branch outside first quadrant: {z}"
    );
    branch_rule(z.re, z.im, p.h(), p.pi_over_h())
}

#[inline]
pub(crate) fn branch_rule(x: f64, y: f64, h: f64, pi_over_h: f64) -> BranchTag {
    if y >= x.max(pi_over_h) {
        return BranchTag::M;
    }
    if y < x {
        // x / h only fails to be finite for x near f64::MAX
        let phi = frac_part(x / h).unwrap_or(0.0);
        if (0.25..=0.75).contains(&phi) {
            return BranchTag::MT;
        }
    }
    BranchTag::MM
}

/// `w_N(z)` for `z` in the closed first quadrant, dispatched by [`select_branch`].
///
/// The chosen rule keeps every node at distance at least `h/4` from `z`
/// (checked in debug builds).
#[inline]
pub fn w_quadrant1(z: Complex64, p: &EvalParams) -> Complex64 {
    let branch = select_branch(z, p);
    debug_assert!(
        node_distance(z, p, branch) >= 0.25 * p.h() * (1.0 - 1e-9),
        "dispatched {branch} too close to a node at z = {z}"
    );
    match branch {
        BranchTag::M => mid_sum_unchecked(z, p),
        BranchTag::MM => mod_mid_unchecked(z, p),
        BranchTag::MT => mod_trap_unchecked(z, p),
    }
}

/// Distance from `z` to the nearest node of the given rule.
pub(crate) fn node_distance(z: Complex64, p: &EvalParams, branch: BranchTag) -> f64 {
    let nearest = match branch {
        BranchTag::M | BranchTag::MM => nearest_node(z, mid_nodes(p)),
        BranchTag::MT => nearest_node(z, trap_nodes(p)),
    };
    nearest.map_or(f64::INFINITY, |(_, d)| d)
}

/// `w_N(z)` anywhere in the complex plane.
///
/// Left half of the upper half-plane: `conj(w_N(-conj z))`. Lower
/// half-plane: `2 exp(-z^2) - w_N(-z)`, which overflows to infinities once
/// `y^2 - x^2` exceeds about 709, as the true function does.
pub fn w_plane(z: Complex64, p: &EvalParams) -> Result<Complex64> {
    check_finite(z)?;
    Ok(plane_unchecked(z, p))
}

#[inline]
pub(crate) fn plane_unchecked(z: Complex64, p: &EvalParams) -> Complex64 {
    if z.im < 0.0 {
        2.0 * exp_neg_square(z) - upper_half(-z, p)
    } else {
        upper_half(z, p)
    }
}

#[inline]
fn upper_half(z: Complex64, p: &EvalParams) -> Complex64 {
    if z.re < 0.0 {
        w_quadrant1(Complex64::new(-z.re, z.im), p).conj()
    } else {
        w_quadrant1(z, p)
    }
}
