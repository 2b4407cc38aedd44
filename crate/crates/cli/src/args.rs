//! Parsing of the numeric command-line arguments.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rasa_core::scalar::{parse_rational, rat};
use rasa_core::{Rational, Scalar};

/// A single degree `N` or an inclusive range `a..b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degrees {
    pub lo: usize,
    pub hi: usize,
}

impl Degrees {
    pub fn range(&self) -> RangeInclusive<usize> {
        self.lo..=self.hi
    }

    pub fn single(&self) -> Option<usize> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

impl FromStr for Degrees {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid degree {t:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                (num(a)?, num(b)?)
            }
            None => {
                let n = num(s)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("empty degree range {s:?}"));
        }
        Ok(Self { lo, hi })
    }
}

/// A number given either as an exact rational (`p/q` or an integer) or as
/// a decimal literal.
#[derive(Clone, Debug, PartialEq)]
pub enum Number {
    Exact(Rational),
    Float(f64),
}

impl Number {
    pub fn to_f64(&self) -> f64 {
        match self {
            Self::Exact(r) => r.to_f64(),
            Self::Float(v) => *v,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Self::Exact(r) => Some(r),
            Self::Float(_) => None,
        }
    }
}

impl FromStr for Number {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if let Ok(r) = parse_rational(s) {
            return Ok(Self::Exact(r));
        }
        match s.trim().parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(Self::Float(v)),
            _ => Err(format!("invalid number {s:?}")),
        }
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(r) => write!(f, "{r}"),
            Self::Float(v) => write!(f, "{v}"),
        }
    }
}

/// Checks `λ > -1/2`.
pub fn validate_lambda(l: &Number) -> Result<(), String> {
    let ok = match l {
        Number::Exact(r) => *r > rat(-1, 2),
        Number::Float(v) => *v > -0.5,
    };
    if ok {
        Ok(())
    } else {
        Err(format!("lambda must exceed -1/2, got {l}"))
    }
}

/// An exact value for a width given as `p/q` or as a decimal.
pub fn exact_width(w: &Number) -> Result<Rational, String> {
    match w {
        Number::Exact(r) => Ok(r.clone()),
        Number::Float(v) => Rational::from_float(*v).ok_or_else(|| format!("invalid width {v}")),
    }
}
