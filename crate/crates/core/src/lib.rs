//! Faddeeva function `w(z) = exp(-z^2) erfc(-iz)` over the whole complex
//! plane, computed with truncated modified trapezoidal and midpoint rules
//! whose step is tied to the number of quadrature points.
//!
//! The crate is organised as:
//!
//! * [`params`] and [`trap`]: the evaluator `w_N(z)` with its three rules and
//!   the branch/symmetry dispatch.
//! * [`special`]: erfc, erf, erfcx, Dawson and Voigt functions built on `w_N`.
//! * [`xprec`]: double-double arithmetic and the high-precision oracle.
//! * [`bounds`]: closed-form error bounds for `w_N`.
//! * [`reference`]: competitor methods (continued fraction, Weideman's
//!   rational approximation, Zaghloul–Ali series).
//! * [`bench`]: grids, error sweeps, accuracy tables, timings and CSV/JSON output.
//!
//! ```
//! use faddeeva::{w_plane, EvalParams};
//! use num_complex::Complex64;
//!
//! let p = EvalParams::default(); // N = 11
//! let w = w_plane(Complex64::new(1.0, 1.0), &p).unwrap();
//! assert!((w.re - 0.304_744_205_256_912_6).abs() < 2e-15);
//! assert!((w.im - 0.208_218_938_202_831_6).abs() < 2e-15);
//! ```

// NaN must fail these range checks, so `!(x > 0.0)` is deliberate
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bench;
pub mod bounds;
mod error;
pub mod params;
pub mod reference;
pub mod special;
pub mod trap;
pub mod xprec;

pub use error::{FaddeevaError, Result};
pub use num_complex::Complex64;
pub use params::{frac_part, step_size, BranchTag, EvalParams, DEFAULT_ORDER, MAX_ORDER};
pub use special::{dawson_real, erf_c, erfc_c, erfcx_c, voigt_kl};
pub use trap::{select_branch, w_mid_sum, w_mod_mid, w_mod_trap, w_plane, w_quadrant1};

/// Complex argument or value. Components are binary64.
pub type ComplexValue = Complex64;
