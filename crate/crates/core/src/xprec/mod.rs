//! Double-double arithmetic (about 31 significant digits) and the reference
//! evaluations built on it.
//!
//! * [`XReal`] / [`XComplex`]: the arithmetic.
//! * [`w_oracle`]: `w_20(z)` evaluated in double-double, the reference value
//!   for every error measurement in this crate.
//! * [`quad`]: an adaptive Gauss–Legendre integrator, used to certify the
//!   oracle independently of the trapezoidal-rule code.

mod complex;
mod dd;
mod oracle;
pub mod quad;

pub use complex::XComplex;
pub use dd::{quick_two_sum, two_prod, two_sum, XReal};
pub use oracle::{erfc_oracle, w_oracle, w_xprec, w_xprec_branch, XParams, ORACLE_ORDER};
