//! Scalar abstraction shared by the exact and floating evaluation paths.
//!
//! Every evaluator in this crate is written once against [`Scalar`] and then
//! instantiated with [`Rational`] (exact, canonical form after every
//! operation) or `f64`.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always gcd-reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Field operations plus the few hooks the recurrences need.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// `true` for exact arithmetic.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    fn from_rational(r: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    fn magnitude(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Sign as -1, 0 or 1. NaN maps to 0.
    fn signum_i8(&self) -> i8 {
        let z = Self::zero();
        if *self > z {
            1
        } else if *self < z {
            -1
        } else {
            0
        }
    }

    /// Rescales `values` jointly by a power of two when they grow too large
    /// and returns the exponent that was removed. Exact scalars never rescale.
    fn rescale(_values: &mut [Self]) -> i32 {
        0
    }

    /// Integer power, negative exponents allowed for nonzero bases.
    fn powi(&self, e: i32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * self.clone();
        }
        if e < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn magnitude(&self) -> Self {
        Signed::abs(self)
    }
}

/// Power of two removed per rescaling step, triggered once any value exceeds
/// `RESCALE_AT` in magnitude.
const RESCALE_STEP: i32 = 512;
const RESCALE_AT: f64 = 1.0e150;

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn rescale(values: &mut [Self]) -> i32 {
        let big = values.iter().fold(0.0f64, |m, v| m.max(f64::abs(*v)));
        if big > RESCALE_AT {
            let factor = 2f64.powi(-RESCALE_STEP);
            for v in values.iter_mut() {
                *v *= factor;
            }
            RESCALE_STEP
        } else {
            0
        }
    }

    fn powi(&self, e: i32) -> Self {
        f64::powi(*self, e)
    }
}

/// `p/q` shorthand for small literals.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `"p/q"` or an integer literal `"p"` as an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
    }
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
