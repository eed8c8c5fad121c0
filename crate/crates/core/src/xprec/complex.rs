use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use super::dd::XReal;

/// Complex number with double-double components.
#[derive(Clone, Copy, Default, PartialEq)]
pub struct XComplex {
    pub re: XReal,
    pub im: XReal,
}

impl XComplex {
    pub const ZERO: Self = Self {
        re: XReal::ZERO,
        im: XReal::ZERO,
    };
    pub const ONE: Self = Self {
        re: XReal::ONE,
        im: XReal::ZERO,
    };
    pub const I: Self = Self {
        re: XReal::ZERO,
        im: XReal::ONE,
    };

    #[inline]
    pub const fn new(re: XReal, im: XReal) -> Self {
        Self { re, im }
    }

    #[inline]
    pub fn from_c64(z: Complex64) -> Self {
        Self {
            re: XReal::from_f64(z.re),
            im: XReal::from_f64(z.im),
        }
    }

    #[inline]
    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    /// Multiplication by `i`.
    #[inline]
    pub fn mul_i(self) -> Self {
        Self {
            re: -self.im,
            im: self.re,
        }
    }

    #[inline]
    pub fn scale(self, k: XReal) -> Self {
        Self {
            re: self.re * k,
            im: self.im * k,
        }
    }

    #[inline]
    pub fn scale_f64(self, k: f64) -> Self {
        Self {
            re: self.re.mul_f64(k),
            im: self.im.mul_f64(k),
        }
    }

    #[inline]
    pub fn norm_sqr(self) -> XReal {
        self.re.square() + self.im.square()
    }

    /// Modulus, scaled to avoid overflow in the squares.
    pub fn norm(self) -> XReal {
        let m = self.re.hi().abs().max(self.im.hi().abs());
        if m == 0.0 || !m.is_finite() {
            return XReal::from_f64(m);
        }
        let s = 2f64.powi(-(m.log2().floor() as i32));
        let t = Self {
            re: self.re.scale(s),
            im: self.im.scale(s),
        };
        t.norm_sqr().sqrt().scale(1.0 / s)
    }

    #[inline]
    pub fn recip(self) -> Self {
        let d = self.norm_sqr();
        Self {
            re: self.re / d,
            im: -(self.im / d),
        }
    }

    /// `exp(z)`. Returns zero without touching the phase when the modulus underflows.
    pub fn exp(self) -> Self {
        let m = self.re.exp();
        if m == XReal::ZERO {
            return Self::ZERO;
        }
        let (s, c) = self.im.sin_cos();
        Self {
            re: m * c,
            im: m * s,
        }
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl From<Complex64> for XComplex {
    fn from(z: Complex64) -> Self {
        Self::from_c64(z)
    }
}

impl fmt::Debug for XComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XComplex({:?}, {:?})", self.re, self.im)
    }
}

impl fmt::Display for XComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {} i)", self.re, self.im)
    }
}

impl Neg for XComplex {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Add for XComplex {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        Self {
            re: self.re + b.re,
            im: self.im + b.im,
        }
    }
}

impl AddAssign for XComplex {
    #[inline]
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl Sub for XComplex {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        Self {
            re: self.re - b.re,
            im: self.im - b.im,
        }
    }
}

impl Mul for XComplex {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        Self {
            re: self.re * b.re - self.im * b.im,
            im: self.re * b.im + self.im * b.re,
        }
    }
}

impl Div for XComplex {
    type Output = Self;
    #[inline]
    fn div(self, b: Self) -> Self {
        let d = b.norm_sqr();
        let n = self * b.conj();
        Self {
            re: n.re / d,
            im: n.im / d,
        }
    }
}

impl Add<XReal> for XComplex {
    type Output = Self;
    #[inline]
    fn add(self, b: XReal) -> Self {
        Self {
            re: self.re + b,
            im: self.im,
        }
    }
}

impl Sub<XReal> for XComplex {
    type Output = Self;
    #[inline]
    fn sub(self, b: XReal) -> Self {
        Self {
            re: self.re - b,
            im: self.im,
        }
    }
}

impl Mul<XReal> for XComplex {
    type Output = Self;
    #[inline]
    fn mul(self, b: XReal) -> Self {
        self.scale(b)
    }
}

impl Div<XReal> for XComplex {
    type Output = Self;
    #[inline]
    fn div(self, b: XReal) -> Self {
        Self {
            re: self.re / b,
            im: self.im / b,
        }
    }
}
