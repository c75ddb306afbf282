//! Hyper-dual numbers for exact first and second derivatives.
//!
//! A hyper-dual number `a + b ε₁ + c ε₂ + d ε₁ε₂` with `ε₁² = ε₂² = 0`
//! carries the value, two independent directional derivatives, and the mixed
//! second derivative of a program evaluated on it. Seeding `ε₁` along
//! coordinate `i` and `ε₂` along coordinate `j` yields `∂²f/∂xⁱ∂xʲ` in the
//! `ε₁ε₂` slot with no truncation error.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arithmetic needed by coordinate programs, implemented for `f64` and [`HyperDual`].
pub trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn constant(x: f64) -> Self;
    fn value(self) -> f64;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn exp(self) -> Self;
    fn sqrt(self) -> Self;
    fn powi(self, n: i32) -> Self;
}

impl Scalar for f64 {
    fn constant(x: f64) -> Self {
        x
    }
    fn value(self) -> f64 {
        self
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn sinh(self) -> Self {
        f64::sinh(self)
    }
    fn cosh(self) -> Self {
        f64::cosh(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HyperDual {
    pub re: f64,
    pub e1: f64,
    pub e2: f64,
    pub e12: f64,
}

impl HyperDual {
    pub const fn new(re: f64, e1: f64, e2: f64, e12: f64) -> Self {
        Self { re, e1, e2, e12 }
    }

    /// Variable seeded with unit perturbations in the requested slots.
    pub fn variable(re: f64, seed1: bool, seed2: bool) -> Self {
        Self::new(re, f64::from(u8::from(seed1)), f64::from(u8::from(seed2)), 0.0)
    }

    /// Applies a scalar function given its value and first two derivatives at `self.re`.
    #[inline]
    fn lift(self, f: f64, df: f64, d2f: f64) -> Self {
        Self {
            re: f,
            e1: df * self.e1,
            e2: df * self.e2,
            e12: df * self.e12 + d2f * self.e1 * self.e2,
        }
    }

    fn recip(self) -> Self {
        let r = 1.0 / self.re;
        self.lift(r, -r * r, 2.0 * r * r * r)
    }
}

impl Add for HyperDual {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.e1 + o.e1, self.e2 + o.e2, self.e12 + o.e12)
    }
}

impl Sub for HyperDual {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.e1 - o.e1, self.e2 - o.e2, self.e12 - o.e12)
    }
}

impl Mul for HyperDual {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.re * o.re,
            self.re * o.e1 + self.e1 * o.re,
            self.re * o.e2 + self.e2 * o.re,
            self.re * o.e12 + self.e1 * o.e2 + self.e2 * o.e1 + self.e12 * o.re,
        )
    }
}

impl Div for HyperDual {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}

impl Neg for HyperDual {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.e1, -self.e2, -self.e12)
    }
}

impl Scalar for HyperDual {
    fn constant(x: f64) -> Self {
        Self::new(x, 0.0, 0.0, 0.0)
    }
    fn value(self) -> f64 {
        self.re
    }
    fn sin(self) -> Self {
        let (s, c) = self.re.sin_cos();
        self.lift(s, c, -s)
    }
    fn cos(self) -> Self {
        let (s, c) = self.re.sin_cos();
        self.lift(c, -s, -c)
    }
    fn sinh(self) -> Self {
        let (s, c) = (self.re.sinh(), self.re.cosh());
        self.lift(s, c, s)
    }
    fn cosh(self) -> Self {
        let (s, c) = (self.re.sinh(), self.re.cosh());
        self.lift(c, s, c)
    }
    fn exp(self) -> Self {
        let e = self.re.exp();
        self.lift(e, e, e)
    }
    fn sqrt(self) -> Self {
        let r = self.re.sqrt();
        self.lift(r, 0.5 / r, -0.25 / (r * self.re))
    }
    fn powi(self, n: i32) -> Self {
        match n {
            0 => Self::constant(1.0),
            1 => self,
            _ => {
                let nf = f64::from(n);
                let pm2 = self.re.powi(n - 2);
                let pm1 = pm2 * self.re;
                self.lift(pm1 * self.re, nf * pm1, nf * (nf - 1.0) * pm2)
            }
        }
    }
}
