//! Sturm sequences and exact real-root counting.

use num_traits::Zero;

use super::poly::RationalPoly;
use crate::error::{Error, Result};
use crate::scalar::{rat, Rational, Scalar};

/// Sturm chain of the square-free part of a polynomial.
///
/// Each element is stored as a primitive integer polynomial; positive
/// rescaling does not change any sign pattern, so Sturm's theorem
/// applies unchanged.
#[derive(Clone, Debug)]
pub struct SturmChain {
    sequence: Vec<RationalPoly>,
}

impl SturmChain {
    pub fn new(p: &RationalPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut sequence = Self::remainder_chain(&p.primitive());
        // A non-constant tail is gcd(p, p'); strip it and start over.
        if sequence.last().and_then(RationalPoly::degree).unwrap_or(0) > 0 {
            let sqfree = p.div_rem(sequence.last().unwrap()).0.primitive();
            sequence = Self::remainder_chain(&sqfree);
        }
        Ok(Self { sequence })
    }

    fn remainder_chain(p: &RationalPoly) -> Vec<RationalPoly> {
        let mut seq = vec![p.clone()];
        let d = p.derivative().primitive();
        if d.is_zero() {
            return seq;
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push((-r).primitive());
        }
        seq
    }

    pub fn sequence(&self) -> &[RationalPoly] {
        &self.sequence
    }

    /// The square-free polynomial the chain starts from.
    pub fn head(&self) -> &RationalPoly {
        &self.sequence[0]
    }

    /// Sign changes of the chain at `t`, zeros skipped.
    pub fn variations(&self, t: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for q in &self.sequence {
            let s = q.eval_rational(t).signum_i8();
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> Result<usize> {
        if a >= b {
            return Err(Error::EmptyInterval {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        Ok(self.variations(a) - self.variations(b))
    }
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn count_roots_in(p: &RationalPoly, a: &Rational, b: &Rational) -> Result<usize> {
    SturmChain::new(p)?.count(a, b)
}

/// Half-open interval `(lo, hi]` holding exactly one distinct root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_int(2)
    }

    pub fn contains(&self, t: &Rational) -> bool {
        &self.lo < t && t <= &self.hi
    }
}

/// Isolates every distinct root of `p` in `(a, b]` into disjoint, ordered
/// intervals of width at most `width` by Sturm-guided bisection.
pub fn isolate_roots(
    p: &RationalPoly,
    a: &Rational,
    b: &Rational,
    width: &Rational,
) -> Result<Vec<RootInterval>> {
    SturmChain::new(p)?.isolate(a, b, width)
}

impl SturmChain {
    /// See [`isolate_roots`].
    pub fn isolate(
        &self,
        a: &Rational,
        b: &Rational,
        width: &Rational,
    ) -> Result<Vec<RootInterval>> {
        let total = self.count(a, b)?;
        let mut out = Vec::with_capacity(total);
        let mut stack = vec![(a.clone(), b.clone(), total)];
        let half = rat(1, 2);
        // Depth-first, right half pushed first so results come out ordered.
        while let Some((lo, hi, k)) = stack.pop() {
            if k == 0 {
                continue;
            }
            if k == 1 && (&hi - &lo) <= *width {
                out.push(RootInterval { lo, hi });
                continue;
            }
            let mid = (&lo + &hi) * &half;
            let left = self.count(&lo, &mid)?;
            stack.push((mid.clone(), hi, k - left));
            stack.push((lo, mid, left));
        }
        debug_assert!(out.windows(2).all(|w| w[0].hi <= w[1].lo));
        debug_assert!(out.iter().all(|r| !r.width().is_zero()));
        Ok(out)
    }

    /// A point `m` in `(c, h)` with no root in `(c, m]`.
    pub fn root_free_step(&self, c: &Rational, h: &Rational) -> Result<Rational> {
        let half = rat(1, 2);
        let mut m = (c + h) * &half;
        while self.count(c, &m)? > 0 {
            m = (c + &m) * &half;
        }
        Ok(m)
    }
}
