//! Competing methods for `w(z)`, used for accuracy and timing comparisons.

mod cf;
mod weideman;
mod zaghloul;

pub use cf::{cf_convergent, cf_top_down};
pub use weideman::{weideman_eval, weideman_fit_coeffs, WeidemanModel, WEIDEMAN_MAX_DEFECT};
pub use zaghloul::{zaghloul_eval, zaghloul_sums, ZaghloulParams};
