//! Scalar fields the algebra kernel is generic over.
//!
//! `f64` is the plain numeric field. [`Dual`] adjoins a nilpotent `ε`
//! (`ε² = 0`), so evaluating a map at `t = Dual::variable(t0)` carries the
//! exact first derivative in the `de` part.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Field operations required by [`Multivector`](crate::Multivector).
pub trait Scalar:
    Copy
    + fmt::Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;

    /// Real (value) part.
    fn re(self) -> f64;

    /// Largest absolute component; used for tolerant zero tests.
    fn magnitude(self) -> f64;

    fn is_negligible(self, tol: f64) -> bool {
        self.magnitude() <= tol
    }

    fn abs(self) -> Self {
        if self.re() < 0.0 {
            -self
        } else {
            self
        }
    }

    fn sqrt(self) -> Self;
    fn exp(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
}

impl Scalar for f64 {
    #[inline]
    fn zero() -> Self {
        0.0
    }
    #[inline]
    fn one() -> Self {
        1.0
    }
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
    #[inline]
    fn re(self) -> f64 {
        self
    }
    #[inline]
    fn magnitude(self) -> f64 {
        f64::abs(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
}

/// Dual number `re + de·ε` with `ε² = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dual {
    pub re: f64,
    pub de: f64,
}

impl Dual {
    pub const fn new(re: f64, de: f64) -> Self {
        Dual { re, de }
    }

    /// A constant: derivative part zero.
    pub const fn constant(re: f64) -> Self {
        Dual { re, de: 0.0 }
    }

    /// The independent variable at `re`: derivative part one.
    pub const fn variable(re: f64) -> Self {
        Dual { re, de: 1.0 }
    }
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.re, self.de)
    }
}

impl Add for Dual {
    type Output = Dual;
    #[inline]
    fn add(self, rhs: Dual) -> Dual {
        Dual::new(self.re + rhs.re, self.de + rhs.de)
    }
}

impl Sub for Dual {
    type Output = Dual;
    #[inline]
    fn sub(self, rhs: Dual) -> Dual {
        Dual::new(self.re - rhs.re, self.de - rhs.de)
    }
}

impl Mul for Dual {
    type Output = Dual;
    #[inline]
    fn mul(self, rhs: Dual) -> Dual {
        Dual::new(self.re * rhs.re, self.re * rhs.de + self.de * rhs.re)
    }
}

impl Div for Dual {
    type Output = Dual;
    /// Only meaningful when `rhs.re != 0`; callers test that first.
    #[inline]
    fn div(self, rhs: Dual) -> Dual {
        let inv = 1.0 / rhs.re;
        Dual::new(
            self.re * inv,
            (self.de * rhs.re - self.re * rhs.de) * inv * inv,
        )
    }
}

impl Neg for Dual {
    type Output = Dual;
    #[inline]
    fn neg(self) -> Dual {
        Dual::new(-self.re, -self.de)
    }
}

impl Scalar for Dual {
    fn zero() -> Self {
        Dual::constant(0.0)
    }
    fn one() -> Self {
        Dual::constant(1.0)
    }
    fn from_f64(x: f64) -> Self {
        Dual::constant(x)
    }
    fn re(self) -> f64 {
        self.re
    }
    fn magnitude(self) -> f64 {
        self.re.abs().max(self.de.abs())
    }
    fn sqrt(self) -> Self {
        let r = self.re.sqrt();
        Dual::new(r, self.de / (2.0 * r))
    }
    fn exp(self) -> Self {
        let e = self.re.exp();
        Dual::new(e, self.de * e)
    }
    fn sin(self) -> Self {
        Dual::new(self.re.sin(), self.de * self.re.cos())
    }
    fn cos(self) -> Self {
        Dual::new(self.re.cos(), -self.de * self.re.sin())
    }
}
