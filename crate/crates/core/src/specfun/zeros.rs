use super::{eval_with_derivative, UltraParams};
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Zeros of `p_n` in `(-1, 1)`, ascending. Each entry is the midpoint of a
/// bracket of width at most `width` around the true zero.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroSet<S> {
    pub zeros: Vec<S>,
    pub width: S,
}

impl<S: Scalar> ZeroSet<S> {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn largest(&self) -> Option<&S> {
        self.zeros.last()
    }
}

/// 1e-30 for exact bisection, 1e-14 for floating point.
pub fn default_width<S: Scalar>() -> S {
    if S::EXACT {
        S::from_rational(&Rational::new(
            1.into(),
            num_bigint::BigInt::from(10u32).pow(30),
        ))
    } else {
        S::from_rational(&Rational::new(
            1.into(),
            num_bigint::BigInt::from(10u32).pow(14),
        ))
    }
}

/// Brackets for lower degrees only need to separate neighbouring zeros.
fn coarse_width<S: Scalar>(width: &S) -> S {
    let coarse = S::one() / S::from_int(1 << 30);
    if *width > coarse {
        width.clone()
    } else {
        coarse
    }
}

fn sign_at<S: Scalar>(params: &UltraParams<S>, x: &S) -> i8 {
    eval_with_derivative(params, x).value.signum_i8()
}

/// Bisects `[lo, hi]` (with `sign(p(lo)) = s_lo`, opposite sign at `hi`)
/// down to `width`. Returns the final bracket.
fn bisect<S: Scalar>(
    params: &UltraParams<S>,
    mut lo: S,
    mut hi: S,
    s_lo: i8,
    width: &S,
) -> Result<(S, S)> {
    let half = S::one() / S::from_int(2);
    while hi.clone() - lo.clone() > *width {
        let mid = (lo.clone() + hi.clone()) * half.clone();
        if mid <= lo || mid >= hi {
            return Err(Error::NotConverged {
                achieved: (hi - lo).to_string(),
                requested: width.to_string(),
            });
        }
        match sign_at(params, &mid) {
            0 => return Ok((mid.clone(), mid)),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok((lo, hi))
}

fn midpoint<S: Scalar>(b: &(S, S)) -> S {
    (b.0.clone() + b.1.clone()) / S::from_int(2)
}

/// Brackets for all zeros of `p_m`, given brackets for `p_{m-1}`.
fn next_level<S: Scalar>(
    params: &UltraParams<S>,
    prev: &mut [(S, S)],
    width: &S,
) -> Result<Vec<(S, S)>> {
    let m = params.n();
    let neg_one = -S::one();
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let mut refinements = 0;
        loop {
            let lo = if k == 0 {
                neg_one.clone()
            } else {
                midpoint(&prev[k - 1])
            };
            let hi = if k + 1 == m {
                S::one()
            } else {
                midpoint(&prev[k])
            };
            let (s_lo, s_hi) = (sign_at(params, &lo), sign_at(params, &hi));
            if s_lo == 0 {
                out.push((lo.clone(), lo));
                break;
            }
            if s_hi == 0 {
                out.push((hi.clone(), hi));
                break;
            }
            if s_lo != s_hi {
                out.push(bisect(params, lo, hi, s_lo, width)?);
                break;
            }
            // An endpoint from degree m-1 was not accurate enough; tighten
            // the offending brackets and retry.
            refinements += 1;
            if refinements > 8 {
                return Err(Error::BracketLost { n: m, index: k });
            }
            let lower = params.with_degree(m - 1);
            for j in [k.checked_sub(1), (k + 1 < m).then_some(k)]
                .into_iter()
                .flatten()
            {
                let (a, b) = prev[j].clone();
                let w = (b.clone() - a.clone()) / S::from_int(1 << 16);
                if w.is_zero() {
                    continue;
                }
                let s_a = sign_at(&lower, &a);
                prev[j] = bisect(&lower, a, b, s_a, &w)?;
            }
        }
    }
    Ok(out)
}

/// Zeros of `p_n` by interlacing: the zeros of `p_{n-1}` together with
/// `±1` bracket those of `p_n`, and each bracket is bisected on exact
/// (or floating) signs. Floating results are finished with Newton steps
/// that never leave their bracket.
pub fn zeros<S: Scalar>(params: &UltraParams<S>, width: &S) -> Result<ZeroSet<S>> {
    if params.n() == 0 {
        return Err(Error::DegreeTooSmall { n: 0, min: 1 });
    }
    let coarse = coarse_width(width);
    let mut level: Vec<(S, S)> = Vec::new();
    for m in 1..=params.n() {
        let w = if m == params.n() { width } else { &coarse };
        level = next_level(&params.with_degree(m), &mut level, w)?;
    }
    let achieved = level
        .iter()
        .map(|(a, b)| b.clone() - a.clone())
        .fold(S::zero(), |acc, w| if w > acc { w } else { acc });
    let mut zeros: Vec<S> = level.iter().map(midpoint).collect();
    if !S::EXACT {
        for (z, (lo, hi)) in zeros.iter_mut().zip(&level) {
            polish(params, z, lo, hi);
        }
    }
    Ok(ZeroSet {
        zeros,
        width: achieved,
    })
}

fn polish<S: Scalar>(params: &UltraParams<S>, z: &mut S, lo: &S, hi: &S) {
    for _ in 0..3 {
        let pair = eval_with_derivative(params, z);
        if pair.derivative.is_zero() || pair.value.is_zero() {
            return;
        }
        let next = z.clone() - pair.value / pair.derivative;
        if next < *lo || next > *hi {
            return;
        }
        *z = next;
    }
}
