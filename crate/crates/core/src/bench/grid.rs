use std::f64::consts::FRAC_PI_2;
use std::fmt;

use num_complex::Complex64;

use crate::error::{FaddeevaError, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GridKind {
    /// `z = 10^p e^{i theta}`, `p = p_min(p_step)p_max`, `theta_count` angles spanning `[0, pi/2]`.
    Polar {
        p_min: f64,
        p_max: f64,
        p_step: f64,
        theta_count: usize,
    },
    /// `z = x + iy` with `x, y = min(step)max`.
    Cartesian { min: f64, max: f64, step: f64 },
}

/// A grid together with a deterministic `1`-in-`stride` subsample.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub kind: GridKind,
    pub stride: usize,
}

fn count(lo: f64, hi: f64, step: f64) -> Result<usize> {
    if !(step > 0.0) || !step.is_finite() || !lo.is_finite() || !hi.is_finite() || hi < lo {
        return Err(FaddeevaError::Parameter(format!(
            "grid range {lo}({step}){hi} needs a positive step and min <= max"
        )));
    }
    let n = ((hi - lo) / step).round();
    if (lo + n * step - hi).abs() > 1e-9 * step.max(hi.abs()) {
        return Err(FaddeevaError::Parameter(format!(
            "step {step} does not divide [{lo}, {hi}]"
        )));
    }
    Ok(n as usize + 1)
}

/// `k`th of `n` equispaced values from `lo` to `hi`, with both ends exact.
#[inline]
fn lattice(lo: f64, hi: f64, n: usize, k: usize) -> f64 {
    if n == 1 || k == 0 {
        lo
    } else if k == n - 1 {
        hi
    } else {
        lo + (hi - lo) * (k as f64 / (n - 1) as f64)
    }
}

impl GridSpec {
    pub fn polar(p_min: f64, p_max: f64, p_step: f64, theta_count: usize) -> Result<Self> {
        count(p_min, p_max, p_step)?;
        if theta_count < 2 {
            return Err(FaddeevaError::Parameter(
                "polar grid needs at least 2 angles".into(),
            ));
        }
        Ok(Self {
            kind: GridKind::Polar {
                p_min,
                p_max,
                p_step,
                theta_count,
            },
            stride: 1,
        })
    }

    pub fn cartesian(min: f64, max: f64, step: f64) -> Result<Self> {
        count(min, max, step)?;
        Ok(Self {
            kind: GridKind::Cartesian { min, max, step },
            stride: 1,
        })
    }

    /// `p = -6(0.006)6`, `theta = 0(pi/1600)pi/2`: 2001 x 801 points.
    pub fn default_polar() -> Self {
        Self::polar(-6.0, 6.0, 0.006, 801).expect("default polar grid")
    }

    /// `x, y = 0(0.0025)10`: 4001^2 points.
    pub fn default_cartesian() -> Self {
        Self::cartesian(0.0, 10.0, 0.0025).expect("default cartesian grid")
    }

    pub fn with_stride(self, stride: usize) -> Result<Self> {
        if stride == 0 {
            return Err(FaddeevaError::Parameter("grid stride must be >= 1".into()));
        }
        Ok(Self { stride, ..self })
    }

    /// `(outer, inner)` point counts of the full grid.
    pub fn shape(&self) -> (usize, usize) {
        match self.kind {
            GridKind::Polar {
                p_min,
                p_max,
                p_step,
                theta_count,
            } => (count(p_min, p_max, p_step).unwrap_or(0), theta_count),
            GridKind::Cartesian { min, max, step } => {
                let n = count(min, max, step).unwrap_or(0);
                (n, n)
            }
        }
    }

    pub fn full_len(&self) -> usize {
        let (a, b) = self.shape();
        a * b
    }

    /// Number of points after subsampling.
    pub fn len(&self) -> usize {
        self.full_len().div_ceil(self.stride)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The `i`th point of the subsampled stream.
    pub fn point(&self, i: usize) -> Complex64 {
        let k = i * self.stride;
        let (outer, inner) = self.shape();
        let (a, b) = (k / inner, k % inner);
        match self.kind {
            GridKind::Polar { p_min, p_max, .. } => {
                let r = 10f64.powf(lattice(p_min, p_max, outer, a));
                if b == 0 {
                    Complex64::new(r, 0.0)
                } else if b == inner - 1 {
                    Complex64::new(0.0, r)
                } else {
                    let (s, c) = lattice(0.0, FRAC_PI_2, inner, b).sin_cos();
                    Complex64::new(r * c, r * s)
                }
            }
            GridKind::Cartesian { min, max, .. } => {
                Complex64::new(lattice(min, max, outer, a), lattice(min, max, inner, b))
            }
        }
    }

    /// Points in row-major order (`p` or `x` outer).
    pub fn iter(&self) -> impl ExactSizeIterator<Item = Complex64> + '_ {
        (0..self.len()).map(|i| self.point(i))
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GridKind::Polar {
                p_min,
                p_max,
                p_step,
                theta_count,
            } => write!(f, "polar p={p_min}({p_step}){p_max} theta={theta_count}")?,
            GridKind::Cartesian { min, max, step } => write!(f, "cartesian {min}({step}){max}")?,
        }
        if self.stride > 1 {
            write!(f, " stride={}", self.stride)?;
        }
        write!(f, " points={}", self.len())
    }
}

pub fn gen_polar_grid(spec: &GridSpec) -> Result<impl ExactSizeIterator<Item = Complex64> + '_> {
    match spec.kind {
        GridKind::Polar { .. } => Ok(spec.iter()),
        GridKind::Cartesian { .. } => Err(FaddeevaError::Parameter("expected a polar grid".into())),
    }
}

pub fn gen_cart_grid(spec: &GridSpec) -> Result<impl ExactSizeIterator<Item = Complex64> + '_> {
    match spec.kind {
        GridKind::Cartesian { .. } => Ok(spec.iter()),
        GridKind::Polar { .. } => Err(FaddeevaError::Parameter("expected a cartesian grid".into())),
    }
}
