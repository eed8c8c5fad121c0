//! Double-double reals: an unevaluated sum `hi + lo` of two binary64 values
//! with `|lo| <= ulp(hi)/2`, giving about 106 bits of significand.
//!
//! Arithmetic follows the usual error-free transformations (two-sum,
//! two-product via fused multiply-add). Non-finite results are carried in
//! `hi` with `lo = 0`.

use std::cmp::Ordering;
use std::f64::consts;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{FaddeevaError, Result};

/// Error-free `a + b = s + e`.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free `a + b = s + e`, valid when `|a| >= |b|` (or `a == 0`).
#[inline]
pub fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free `a * b = p + e`.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

#[derive(Clone, Copy, Default, PartialEq)]
pub struct XReal {
    hi: f64,
    lo: f64,
}

// Constants split into binary64 words (each word is the rounding of the remainder).
const PI_W: [f64; 3] = [
    consts::PI,
    1.224_646_799_147_353_2e-16,
    -2.994_769_809_718_339_7e-33,
];
const FRAC_PI_2_W: [f64; 3] = [
    consts::FRAC_PI_2,
    6.123_233_995_736_766e-17,
    -1.497_384_904_859_169_8e-33,
];
const LN_2_W: [f64; 3] = [
    consts::LN_2,
    2.319_046_813_846_299_6e-17,
    5.707_708_438_416_212e-34,
];
const SQRT_PI_W: [f64; 2] = [1.772_453_850_905_516, -7.666_586_499_825_799e-17];
const E_W: [f64; 2] = [consts::E, 1.445_646_891_729_250_2e-16];

/// Largest argument for which `exp` is finite.
const EXP_MAX: f64 = 709.782_712_893_384;
/// Below this `exp` is zero.
const EXP_MIN: f64 = -745.2;

impl XReal {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };
    pub const PI: Self = Self {
        hi: PI_W[0],
        lo: PI_W[1],
    };
    pub const FRAC_PI_2: Self = Self {
        hi: FRAC_PI_2_W[0],
        lo: FRAC_PI_2_W[1],
    };
    pub const LN_2: Self = Self {
        hi: LN_2_W[0],
        lo: LN_2_W[1],
    };
    pub const SQRT_PI: Self = Self {
        hi: SQRT_PI_W[0],
        lo: SQRT_PI_W[1],
    };
    pub const E: Self = Self {
        hi: E_W[0],
        lo: E_W[1],
    };

    /// Normalises `hi + lo` into a non-overlapping pair.
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = two_sum(hi, lo);
        Self::finish(s, e)
    }

    #[inline]
    fn finish(s: f64, e: f64) -> Self {
        if s.is_finite() {
            Self { hi: s, lo: e }
        } else {
            Self { hi: s, lo: 0.0 }
        }
    }

    #[inline]
    fn renorm(s: f64, e: f64) -> Self {
        let (s, e) = quick_two_sum(s, e);
        Self::finish(s, e)
    }

    #[inline]
    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    /// Nearest binary64 value.
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    /// The pair is non-overlapping: `hi + lo` rounds to `hi`.
    pub fn is_normalized(self) -> bool {
        !self.hi.is_finite() || (self.hi + self.lo == self.hi && (self.hi != 0.0 || self.lo == 0.0))
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn signum_f64(self) -> f64 {
        if self.hi == 0.0 {
            0.0
        } else {
            self.hi.signum()
        }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Self {
        let (s1, s2) = two_sum(self.hi, b);
        Self::renorm(s1, s2 + self.lo)
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, b);
        Self::renorm(p1, p2 + self.lo * b)
    }

    /// Exact product of two binary64 values.
    #[inline]
    pub fn prod(a: f64, b: f64) -> Self {
        let (p, e) = two_prod(a, b);
        Self::finish(p, e)
    }

    /// Exact sum of two binary64 values.
    #[inline]
    pub fn sum(a: f64, b: f64) -> Self {
        let (s, e) = two_sum(a, b);
        Self::finish(s, e)
    }

    /// Multiplication by a power of two (exact barring over/underflow).
    #[inline]
    pub fn scale(self, pow2: f64) -> Self {
        Self {
            hi: self.hi * pow2,
            lo: self.lo * pow2,
        }
    }

    #[inline]
    pub fn square(self) -> Self {
        let (p1, p2) = two_prod(self.hi, self.hi);
        Self::renorm(p1, p2 + 2.0 * self.hi * self.lo)
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p1, p2) = two_prod(q1, b);
        let (s, e) = two_sum(self.hi, -p1);
        let e = e + self.lo - p2;
        let q2 = (s + e) / b;
        Self::renorm(q1, q2)
    }

    /// Division, rejecting a zero divisor.
    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.hi == 0.0 {
            return Err(FaddeevaError::Arithmetic(
                "double-double division by zero".into(),
            ));
        }
        Ok(self / rhs)
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 {
                Self::ZERO
            } else {
                Self::from_f64(f64::NAN)
            };
        }
        if !self.hi.is_finite() {
            return self;
        }
        // one Newton step on the binary64 root
        let x = self.hi.sqrt();
        let r = self - Self::prod(x, x);
        Self::renorm(x, r.hi / (2.0 * x))
    }

    /// `exp(x)`; returns `+inf` above about 709.78 and 0 below about -745.
    pub fn exp(self) -> Self {
        if self.hi > EXP_MAX {
            return Self::from_f64(f64::INFINITY);
        }
        if self.hi < EXP_MIN {
            return Self::ZERO;
        }
        if self.hi == 0.0 && self.lo == 0.0 {
            return Self::ONE;
        }
        let k = (self.hi / LN_2_W[0]).round();
        // x - k ln2 with a three-word ln2
        let r = self - Self::prod(k, LN_2_W[0]);
        let r = r - Self::prod(k, LN_2_W[1]);
        let r = r.add_f64(-k * LN_2_W[2]);
        // exp(r) = (1 + s)^(2^10) with s = expm1(r / 2^10)
        let r = r.scale(1.0 / 1024.0);
        let mut s = r.div_f64(11.0).add_f64(1.0);
        for n in (2..=10).rev() {
            s = (r * s).div_f64(f64::from(n)).add_f64(1.0);
        }
        let mut s = r * s;
        for _ in 0..10 {
            // (1 + s)^2 - 1 = 2s + s^2
            s = s.scale(2.0) + s.square();
        }
        let m = s.add_f64(1.0);
        ldexp(m, k as i32)
    }

    /// `exp(x)`, rejecting arguments whose result is not a normal finite number.
    pub fn checked_exp(self) -> Result<Self> {
        if self.hi > EXP_MAX {
            return Err(FaddeevaError::Overflow(format!(
                "exp({}) overflows",
                self.hi
            )));
        }
        if self.hi < -708.0 {
            return Err(FaddeevaError::Arithmetic(format!(
                "exp({}) underflows",
                self.hi
            )));
        }
        Ok(self.exp())
    }

    /// `(sin x, cos x)`. Accurate for `|x|` up to about 2^50.
    pub fn sin_cos(self) -> (Self, Self) {
        if self.hi == 0.0 {
            return (self, Self::ONE);
        }
        if !self.hi.is_finite() {
            let nan = Self::from_f64(f64::NAN);
            return (nan, nan);
        }
        let j = (self.hi / FRAC_PI_2_W[0]).round();
        let r = self - Self::prod(j, FRAC_PI_2_W[0]);
        let r = r - Self::prod(j, FRAC_PI_2_W[1]);
        let r = r - Self::prod(j, FRAC_PI_2_W[2]);
        let (s, c) = sin_cos_reduced(r);
        match (j as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sin(self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(self) -> Self {
        self.sin_cos().1
    }
}

/// `m * 2^k`, split to avoid overflowing the scale factor.
fn ldexp(m: XReal, k: i32) -> XReal {
    let half = k / 2;
    m.scale(2f64.powi(half)).scale(2f64.powi(k - half))
}

/// sin and cos for `|r| <= pi/4` (slightly beyond is fine).
fn sin_cos_reduced(r: XReal) -> (XReal, XReal) {
    // evaluate at r/8, then apply the double-angle formulas three times
    let a = r.scale(0.125);
    let a2 = a.square();
    // sin a = a (1 - a^2/(2*3) (1 - a^2/(4*5) (...)))
    let mut s = XReal::ONE;
    for n in (1..=12).rev() {
        let d = f64::from(2 * n * (2 * n + 1));
        s = XReal::ONE - (a2 * s).div_f64(d);
    }
    let mut s = a * s;
    // cos a = 1 - a^2/(1*2) (1 - a^2/(3*4) (...))
    let mut c = XReal::ONE;
    for n in (1..=12).rev() {
        let d = f64::from((2 * n - 1) * (2 * n));
        c = XReal::ONE - (a2 * c).div_f64(d);
    }
    for _ in 0..3 {
        let s2 = (s * c).scale(2.0);
        c = (c - s) * (c + s);
        s = s2;
    }
    (s, c)
}

impl From<f64> for XReal {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl fmt::Debug for XReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XReal({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for XReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.hi.is_finite() || self.hi == 0.0 {
            return write!(f, "{}", self.hi);
        }
        // print 32 significant digits by peeling off decimal digits
        let neg = self.hi < 0.0;
        let mut x = self.abs();
        let mut e10 = x.hi.log10().floor() as i32;
        x *= pow10(-e10);
        if x.hi >= 10.0 {
            x = x.div_f64(10.0);
            e10 += 1;
        } else if x.hi < 1.0 {
            x = x.mul_f64(10.0);
            e10 -= 1;
        }
        let mut digits = String::with_capacity(34);
        for i in 0..32 {
            let d = x.hi.floor().clamp(0.0, 9.0);
            x = (x.add_f64(-d)).mul_f64(10.0);
            digits.push(char::from(b'0' + d as u8));
            if i == 0 {
                digits.push('.');
            }
        }
        write!(f, "{}{}e{}", if neg { "-" } else { "" }, digits, e10)
    }
}

fn pow10(e: i32) -> XReal {
    let mut r = XReal::ONE;
    let base = if e < 0 {
        XReal::ONE.div_f64(10.0)
    } else {
        XReal::from_f64(10.0)
    };
    for _ in 0..e.unsigned_abs() {
        r *= base;
    }
    r
}

impl PartialOrd for XReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            o => Some(o),
        }
    }
}

impl Neg for XReal {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for XReal {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        Self::renorm(s1, s2 + t2)
    }
}

impl Sub for XReal {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for XReal {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p1, p2) = two_prod(self.hi, b.hi);
        Self::renorm(p1, p2 + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Div for XReal {
    type Output = Self;
    #[inline]
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() {
            return Self::from_f64(q1);
        }
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        Self::finish(q1, q2).add_f64(q3)
    }
}

impl Add<f64> for XReal {
    type Output = Self;
    #[inline]
    fn add(self, b: f64) -> Self {
        self.add_f64(b)
    }
}

impl Sub<f64> for XReal {
    type Output = Self;
    #[inline]
    fn sub(self, b: f64) -> Self {
        self.add_f64(-b)
    }
}

impl Mul<f64> for XReal {
    type Output = Self;
    #[inline]
    fn mul(self, b: f64) -> Self {
        self.mul_f64(b)
    }
}

impl Div<f64> for XReal {
    type Output = Self;
    #[inline]
    fn div(self, b: f64) -> Self {
        self.div_f64(b)
    }
}

impl AddAssign for XReal {
    #[inline]
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for XReal {
    #[inline]
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for XReal {
    #[inline]
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}
