//! Exact scalar types: arbitrary-precision rationals and Gaussian rationals.
//!
//! `Rational` is a re-export of `num::BigRational`, which already maintains the
//! invariants we need (reduced form, positive denominator). `GaussianRational`
//! adds the complex field Q(i) on top of it, used wherever complexified Lie
//! algebra computations must stay exact.

use crate::error::{CoreError, Result};
use num::complex::Complex64;
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::{BigInt, BigRational};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

pub type Rational = BigRational;

/// Shorthand for small rational constants (`rat(1, 2)` is one half).
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim())
        .map_err(|e| CoreError::Parse(format!("bad rational {s:?}: {e}")))
}

/// Converts a finite `f64` into the exact rational it denotes.
pub fn rational_from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| CoreError::Parse(format!("non-finite number {x}")))
}

pub fn rational_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// An element of Q(i), kept exact through complexified bracket computations.
#[derive(Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm_sqr();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        let c = rhs.conj();
        let p = self * c;
        GaussianRational::new(p.re / &n, p.im / &n)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::from_rational(Rational::one())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, -self.im.clone())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
