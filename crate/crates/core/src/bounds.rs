//! Closed-form bounds for `u_n(x) = p_n'(x)/p_n(x)` on `x ≥ 1` and the
//! checks that compare them with `u_n`.
//!
//! Each bound is a rational expression in `x` and `s = √(x²-1)`. On points
//! produced by [`ConjugateMap`] both are rational, so in exact mode every
//! check is a proof of one instance of the inequality. In floating mode a
//! margin may dip to `-1e-12·|u|` before it counts as a failure.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rasa::ConjugateMap;
use crate::scalar::{rat, Rational, Scalar};
use crate::specfun::{ratio_sequence, UltraParams};

/// Relative slack for floating-point margins.
pub const FLOAT_MARGIN_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BoundId {
    /// `2n² / (x + (2n-1)s)`, Legendre only; equivalent to convexity of `F_n`.
    #[serde(rename = "RASA_1_1")]
    Rasa11,
    /// `n(n+2λ) / ((2λ+1)x + (n-1)s)`.
    #[serde(rename = "LOWER_1_2")]
    Lower12,
    /// `n²(n+λ) / (λ(n+1)x + (n²-λ)s)`, for `0 ≤ λ ≤ 1`.
    #[serde(rename = "UPPER_1_3")]
    Upper13,
    /// `n(1/x + (n-1)/(2(n+λ-1)x³))`.
    #[serde(rename = "LOWER_1_4")]
    Lower14,
    /// `n(1/x + (n-1)/((2λ+1)x³))`.
    #[serde(rename = "UPPER_1_4")]
    Upper14,
    /// `τ(n, c_n, x) = n² / (c_n x + (n - c_n)s)` with `c_n = λ(n+1)/(n+λ)`.
    #[serde(rename = "TAU_3_3")]
    Tau33,
    /// `n² / (x + (n-1)s)`, for `λ ≥ 1`.
    #[serde(rename = "UPPER_5_1")]
    Upper51,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Upper,
    Lower,
}

impl BoundId {
    pub const ALL: [BoundId; 7] = [
        Self::Rasa11,
        Self::Lower12,
        Self::Upper13,
        Self::Lower14,
        Self::Upper14,
        Self::Tau33,
        Self::Upper51,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Rasa11 => "RASA_1_1",
            Self::Lower12 => "LOWER_1_2",
            Self::Upper13 => "UPPER_1_3",
            Self::Lower14 => "LOWER_1_4",
            Self::Upper14 => "UPPER_1_4",
            Self::Tau33 => "TAU_3_3",
            Self::Upper51 => "UPPER_5_1",
        }
    }

    pub fn kind(self) -> BoundKind {
        match self {
            Self::Lower12 | Self::Lower14 => BoundKind::Lower,
            _ => BoundKind::Upper,
        }
    }

    pub fn requirement(self) -> &'static str {
        match self {
            Self::Rasa11 => "lambda = 1/2",
            Self::Upper13 | Self::Tau33 => "0 <= lambda <= 1",
            Self::Upper51 => "lambda >= 1",
            Self::Lower12 | Self::Lower14 | Self::Upper14 => "lambda > -1/2",
        }
    }

    /// Whether `(n, λ)` lies in the stated validity domain.
    pub fn is_valid<S: Scalar>(self, n: usize, lambda: &S) -> bool {
        let (zero, one) = (S::zero(), S::one());
        n >= 1
            && *lambda > S::from_rational(&rat(-1, 2))
            && match self {
                Self::Rasa11 => *lambda == S::from_rational(&rat(1, 2)),
                Self::Upper13 | Self::Tau33 => *lambda >= zero && *lambda <= one,
                Self::Upper51 => *lambda >= one,
                Self::Lower12 | Self::Lower14 | Self::Upper14 => true,
            }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// A point `x ≥ 1` carried together with `s = √(x²-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Abscissa<S> {
    pub x: S,
    pub s: S,
}

impl<S: Scalar> From<&ConjugateMap<S>> for Abscissa<S> {
    fn from(m: &ConjugateMap<S>) -> Self {
        Self {
            x: m.x().clone(),
            s: m.s().clone(),
        }
    }
}

impl Abscissa<f64> {
    pub fn from_x(x: f64) -> Result<Self> {
        if !(x >= 1.0) {
            return Err(Error::AbscissaBelowOne(x.to_string()));
        }
        Ok(Self {
            x,
            s: ((x - 1.0) * (x + 1.0)).sqrt(),
        })
    }
}

/// Exact abscissae `x(t)` for `t = j/(2m)`, `j = 0..m`.
pub fn exact_grid(m: usize) -> Vec<Abscissa<Rational>> {
    crate::rasa::t_grid(m)
        .into_iter()
        .map(|t| Abscissa::from(&ConjugateMap::new(t).expect("grid lies in [0, 1/2)")))
        .collect()
}

/// The same grid in floating point, followed by any `extra` abscissae.
pub fn float_grid(m: usize, extra: &[f64]) -> Result<Vec<Abscissa<f64>>> {
    let mut out: Vec<Abscissa<f64>> = crate::rasa::t_grid(m)
        .into_iter()
        .map(|t| {
            let map = ConjugateMap::new(t.to_f64()).expect("grid lies in [0, 1/2)");
            Abscissa::from(&map)
        })
        .collect();
    for &x in extra {
        out.push(Abscissa::from_x(x)?);
    }
    Ok(out)
}

fn divide<S: Scalar>(id: BoundId, num: S, den: S) -> Result<S> {
    if den.is_zero() {
        Err(Error::SingularBound(id.name()))
    } else {
        Ok(num / den)
    }
}

/// `τ(n, c, x) = n² / (c x + (n - c) s)`.
pub fn tau<S: Scalar>(n: usize, c: &S, p: &Abscissa<S>) -> Result<S> {
    let nn = S::from_int(n as i64);
    divide(
        BoundId::Tau33,
        nn.clone() * nn.clone(),
        c.clone() * p.x.clone() + (nn - c.clone()) * p.s.clone(),
    )
}

fn c_n<S: Scalar>(n: usize, lambda: &S) -> S {
    let nn = S::from_int(n as i64);
    lambda.clone() * (nn.clone() + S::one()) / (nn + lambda.clone())
}

/// Evaluates a bound without checking its validity domain; used to exhibit
/// failures outside it.
pub fn eval_bound_unchecked<S: Scalar>(
    id: BoundId,
    n: usize,
    lambda: &S,
    p: &Abscissa<S>,
) -> Result<S> {
    let nn = S::from_int(n as i64);
    let one = S::one();
    let two = S::from_int(2);
    let (x, s) = (p.x.clone(), p.s.clone());
    let n2 = nn.clone() * nn.clone();
    let two_lambda = two.clone() * lambda.clone();
    match id {
        BoundId::Rasa11 => divide(id, two * n2, x + (S::from_int(2 * n as i64 - 1)) * s),
        BoundId::Lower12 => divide(
            id,
            nn.clone() * (nn.clone() + two_lambda.clone()),
            (two_lambda + one.clone()) * x + (nn - one) * s,
        ),
        BoundId::Upper13 => divide(
            id,
            n2.clone() * (nn.clone() + lambda.clone()),
            lambda.clone() * (nn + one) * x + (n2 - lambda.clone()) * s,
        ),
        BoundId::Lower14 | BoundId::Upper14 => {
            let x3 = x.clone() * x.clone() * x.clone();
            let tail = if n == 1 {
                S::zero()
            } else {
                let den = if id == BoundId::Lower14 {
                    two * (nn.clone() + lambda.clone() - one.clone())
                } else {
                    two_lambda + one.clone()
                };
                divide(id, nn.clone() - one.clone(), den * x3)?
            };
            Ok(nn * (one / x + tail))
        }
        BoundId::Tau33 => tau(n, &c_n(n, lambda), p),
        BoundId::Upper51 => divide(id, n2, x + (nn - one) * s),
    }
}

/// Evaluates a bound, rejecting `(n, λ)` outside its validity domain.
pub fn eval_bound<S: Scalar>(id: BoundId, n: usize, lambda: &S, p: &Abscissa<S>) -> Result<S> {
    if !id.is_valid(n, lambda) {
        return Err(Error::OutsideValidity {
            bound: id.name(),
            requirement: id.requirement(),
        });
    }
    if !(p.x >= S::one()) {
        return Err(Error::AbscissaBelowOne(p.x.to_string()));
    }
    eval_bound_unchecked(id, n, lambda, p)
}

/// `c_n = λ(n+1)/(n+λ)`, defined for `0 ≤ λ ≤ 1`.
pub fn optimal_c(n: usize, lambda: &Rational) -> Result<Rational> {
    if !BoundId::Tau33.is_valid(n, lambda) {
        return Err(Error::OutsideValidity {
            bound: BoundId::Tau33.name(),
            requirement: BoundId::Tau33.requirement(),
        });
    }
    Ok(c_n(n, lambda))
}

/// Admissible `c` for the induction step of `τ(n, c, x)`:
/// `0 ≤ c ≤ min{(2λ(n+1)+n)/(n+2λ), λ(n+1)/(n+λ)}`, or `None` when empty.
pub fn admissible_c_range(n: usize, lambda: &Rational) -> Option<(Rational, Rational)> {
    let nn = Rational::from_int(n as i64);
    let two_lambda = lambda * Rational::from_int(2);
    let first = (&two_lambda * (&nn + Rational::from_int(1)) + &nn) / (&nn + &two_lambda);
    let second = c_n(n, lambda);
    let hi = if first < second { first } else { second };
    if hi < Rational::from_int(0) {
        None
    } else {
        Some((Rational::from_int(0), hi))
    }
}

/// `(2λ+1)n/(n+2λ)`: the largest `c` for which `τ(n, c, 1) ≥ u_n(1)`.
pub fn endpoint_c_cap(n: usize, lambda: &Rational) -> Rational {
    let nn = Rational::from_int(n as i64);
    let two_lambda = lambda * Rational::from_int(2);
    (&two_lambda + Rational::from_int(1)) * &nn / (&nn + &two_lambda)
}

/// `(n-1)(n+2λ+1)/(n+λ)²`, an upper bound for the squared extreme zero.
pub fn extreme_zero_bound<S: Scalar>(n: usize, lambda: &S) -> S {
    let nn = S::from_int(n as i64);
    let d = nn.clone() + lambda.clone();
    (nn.clone() - S::one()) * (nn + S::from_int(2) * lambda.clone() + S::one()) / (d.clone() * d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn of<S: Scalar>() -> Self {
        if S::EXACT {
            Self::Exact
        } else {
            Self::Float
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointMargin<S> {
    pub x: S,
    pub u: S,
    /// `None` where the bound's denominator vanishes. This happens only for
    /// upper bounds at `x = 1, λ = 0`, where the denominator tends to zero
    /// from above and the bound is `+∞`.
    pub bound: Option<S>,
    /// `bound - u` for upper bounds, `u - bound` for lower bounds.
    pub margin: Option<S>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundCheckReport<S> {
    pub bound: BoundId,
    pub n: usize,
    pub lambda: S,
    pub mode: Mode,
    pub in_domain: bool,
    pub points: Vec<PointMargin<S>>,
}

impl<S: Scalar> BoundCheckReport<S> {
    pub fn passed(&self) -> bool {
        self.points.iter().all(|p| p.pass)
    }

    pub fn failures(&self) -> usize {
        self.points.iter().filter(|p| !p.pass).count()
    }

    /// Smallest finite margin over the grid.
    pub fn worst_margin(&self) -> Option<S> {
        let mut worst: Option<S> = None;
        for p in &self.points {
            let Some(m) = p.margin.clone() else { continue };
            worst = match worst {
                Some(w) if w <= m => Some(w),
                _ => Some(m),
            };
        }
        worst
    }
}

fn margin_for<S: Scalar>(
    id: BoundId,
    n: usize,
    lambda: &S,
    p: &Abscissa<S>,
    u: &S,
) -> PointMargin<S> {
    let bound = eval_bound_unchecked(id, n, lambda, p).ok();
    let margin = bound.clone().map(|b| match id.kind() {
        BoundKind::Upper => b - u.clone(),
        BoundKind::Lower => u.clone() - b,
    });
    let pass = match &margin {
        None => id.kind() == BoundKind::Upper,
        Some(m) if S::EXACT => *m >= S::zero(),
        Some(m) => m.to_f64() >= -FLOAT_MARGIN_TOLERANCE * u.to_f64().abs(),
    };
    PointMargin {
        x: p.x.clone(),
        u: u.clone(),
        bound,
        margin,
        pass,
    }
}

/// Checks one bound for one `(n, λ)` on a grid. Points outside the bound's
/// validity domain are still evaluated; `in_domain` records which case
/// applies.
pub fn check_bound<S: Scalar>(
    id: BoundId,
    params: &UltraParams<S>,
    grid: &[Abscissa<S>],
) -> Result<BoundCheckReport<S>> {
    let mut reports = check_sweep(&[id], params.lambda(), params.n()..=params.n(), grid)?;
    Ok(reports.pop().expect("one report per (n, bound)"))
}

/// Checks several bounds for every `n` in a range, sharing one pass of the
/// ratio recursion per grid point. Reports are ordered by `n`, then by the
/// order of `ids`.
pub fn check_sweep<S: Scalar>(
    ids: &[BoundId],
    lambda: &S,
    degrees: std::ops::RangeInclusive<usize>,
    grid: &[Abscissa<S>],
) -> Result<Vec<BoundCheckReport<S>>> {
    let (lo, hi) = (*degrees.start(), *degrees.end());
    if lo == 0 {
        return Err(Error::DegreeTooSmall { n: 0, min: 1 });
    }
    UltraParams::new(hi, lambda.clone())?;
    let ratios: Vec<Vec<S>> = grid
        .iter()
        .map(|p| ratio_sequence(lambda, &p.x, hi))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity((hi + 1 - lo) * ids.len());
    for n in lo..=hi {
        for &id in ids {
            let points = grid
                .iter()
                .zip(&ratios)
                .map(|(p, us)| margin_for(id, n, lambda, p, &us[n - 1]))
                .collect();
            out.push(BoundCheckReport {
                bound: id,
                n,
                lambda: lambda.clone(),
                mode: Mode::of::<S>(),
                in_domain: id.is_valid(n, lambda),
                points,
            });
        }
    }
    Ok(out)
}

/// Bounds ranked in comparisons, in tie-break order.
const COMPARED_UPPER: [BoundId; 4] = [
    BoundId::Upper13,
    BoundId::Upper14,
    BoundId::Upper51,
    BoundId::Rasa11,
];
const COMPARED_LOWER: [BoundId; 2] = [BoundId::Lower12, BoundId::Lower14];

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonRow<S> {
    pub x: S,
    pub u: S,
    /// Every in-domain bound, in [`BoundId::ALL`] order.
    pub values: Vec<(BoundId, S)>,
    pub tightest_upper: Option<BoundId>,
    pub tightest_lower: Option<BoundId>,
}

/// Bound ids valid for `(n, λ)`, in [`BoundId::ALL`] order.
pub fn in_domain_bounds<S: Scalar>(n: usize, lambda: &S) -> Vec<BoundId> {
    BoundId::ALL
        .into_iter()
        .filter(|b| b.is_valid(n, lambda))
        .collect()
}

/// For each grid point, the smallest valid upper bound and the largest
/// valid lower bound (`TAU_3_3` duplicates `UPPER_1_3` and is not ranked).
/// Ties go to the earlier id.
pub fn compare_bounds<S: Scalar>(
    params: &UltraParams<S>,
    grid: &[Abscissa<S>],
) -> Result<Vec<ComparisonRow<S>>> {
    let n = params.n();
    if n == 0 {
        return Err(Error::DegreeTooSmall { n, min: 1 });
    }
    let lambda = params.lambda();
    let ids = in_domain_bounds(n, lambda);
    grid.iter()
        .map(|p| {
            let u = ratio_sequence(lambda, &p.x, n)?.pop().expect("n >= 1");
            let values: Vec<(BoundId, S)> = ids
                .iter()
                .filter_map(|&id| eval_bound(id, n, lambda, p).ok().map(|v| (id, v)))
                .collect();
            let pick = |cands: &[BoundId], better: fn(&S, &S) -> bool| {
                let mut best: Option<(BoundId, S)> = None;
                for &c in cands {
                    if let Some((_, v)) = values.iter().find(|(id, _)| *id == c) {
                        if best.as_ref().is_none_or(|(_, b)| better(v, b)) {
                            best = Some((c, v.clone()));
                        }
                    }
                }
                best.map(|(id, _)| id)
            };
            Ok(ComparisonRow {
                x: p.x.clone(),
                u,
                tightest_upper: pick(&COMPARED_UPPER, |a, b| a < b),
                tightest_lower: pick(&COMPARED_LOWER, |a, b| a > b),
                values,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::specfun::endpoint_u;

    fn at_one() -> Abscissa<Rational> {
        Abscissa {
            x: int(1),
            s: int(0),
        }
    }

    #[test]
    fn parse_ids() {
        assert_eq!("upper_1_3".parse::<BoundId>().unwrap(), BoundId::Upper13);
        assert_eq!("RASA_1_1".parse::<BoundId>().unwrap(), BoundId::Rasa11);
        assert!("upper".parse::<BoundId>().is_err());
    }

    #[test]
    fn lower_bound_is_exact_for_degree_one() {
        for t in crate::rasa::t_grid(8) {
            let p = Abscissa::from(&ConjugateMap::new(t).unwrap());
            for l in [rat(-1, 4), int(0), int(3)] {
                let b = eval_bound(BoundId::Lower12, 1, &l, &p).unwrap();
                assert_eq!(b, int(1) / &p.x);
            }
        }
    }

    #[test]
    fn sharp_at_one() {
        let l = rat(1, 2);
        let b = eval_bound(BoundId::Upper14, 2, &l, &at_one()).unwrap();
        assert_eq!(b, int(3));
        assert_eq!(b, endpoint_u(&UltraParams::new(2, l.clone()).unwrap()));
        let b13 = eval_bound(BoundId::Upper13, 2, &l, &at_one()).unwrap();
        assert_eq!(b13, rat(20, 3));
    }

    #[test]
    fn validity_enforced() {
        let e = eval_bound(BoundId::Upper13, 1, &int(2), &at_one());
        assert!(matches!(
            e,
            Err(Error::OutsideValidity {
                bound: "UPPER_1_3",
                ..
            })
        ));
        assert!(eval_bound(BoundId::Rasa11, 3, &int(1), &at_one()).is_err());
        assert!(eval_bound(BoundId::Upper51, 3, &rat(1, 2), &at_one()).is_err());
        assert!(eval_bound(BoundId::Upper51, 3, &int(1), &at_one()).is_ok());
    }

    #[test]
    fn c_n_examples() {
        assert_eq!(optimal_c(2, &rat(1, 2)).unwrap(), rat(3, 5));
        assert_eq!(optimal_c(7, &int(0)).unwrap(), int(0));
        assert_eq!(optimal_c(7, &int(1)).unwrap(), int(1));
        assert!(optimal_c(2, &rat(-1, 4)).is_err());
        assert!(optimal_c(2, &rat(3, 2)).is_err());
    }

    #[test]
    fn tau_with_unit_c_matches_upper_5_1() {
        let p = Abscissa::from(&ConjugateMap::new(rat(1, 5)).unwrap());
        for n in 1..8 {
            let a = tau(n, &int(1), &p).unwrap();
            let b = eval_bound(BoundId::Upper51, n, &int(1), &p).unwrap();
            assert_eq!(a, b);
            let c = eval_bound(BoundId::Tau33, n, &int(1), &p).unwrap();
            assert_eq!(c, b);
        }
    }

    #[test]
    fn admissible_ranges() {
        assert_eq!(admissible_c_range(2, &rat(-1, 4)), None);
        assert_eq!(admissible_c_range(2, &rat(1, 2)), Some((int(0), rat(3, 5))));
        for n in 1..10 {
            assert_eq!(admissible_c_range(n, &int(0)), Some((int(0), int(0))));
        }
    }

    #[test]
    fn c_n_sequence_non_increasing_and_capped() {
        for l in [int(0), rat(1, 4), rat(1, 2), rat(3, 4), int(1)] {
            let cs: Vec<Rational> = (1..40).map(|n| optimal_c(n, &l).unwrap()).collect();
            assert!(cs.windows(2).all(|w| w[0] >= w[1]));
            for n in 1..40 {
                let (_, hi) = admissible_c_range(n, &l).unwrap();
                assert_eq!(hi, cs[n - 1]);
                assert!(cs[n - 1] <= endpoint_c_cap(n, &l));
            }
        }
    }

    #[test]
    fn singular_upper_bound_passes() {
        let params = UltraParams::new(1, int(0)).unwrap();
        let r = check_bound(BoundId::Upper13, &params, &exact_grid(4)).unwrap();
        assert!(matches!(
            eval_bound(BoundId::Upper13, 1, &int(0), &at_one()),
            Err(Error::SingularBound("UPPER_1_3"))
        ));
        assert_eq!(r.points[0].bound, None);
        assert!(r.passed());
        assert!(r.worst_margin().unwrap() > int(0));
    }

    #[test]
    fn documented_failures() {
        let params = UltraParams::new(1, int(2)).unwrap();
        let r = check_bound(BoundId::Upper13, &params, &[at_one()]).unwrap();
        assert!(!r.in_domain);
        assert!(!r.passed());
        assert_eq!(r.points[0].bound, Some(rat(3, 4)));
        assert_eq!(r.points[0].margin, Some(rat(-1, 4)));

        let params = UltraParams::new(2, rat(-1, 4)).unwrap();
        let r = check_bound(BoundId::Upper13, &params, &[at_one()]).unwrap();
        assert!(r.points[0].bound.clone().unwrap() < int(0));
        assert!(!r.passed());
    }

    #[test]
    fn comparison_examples() {
        let params = UltraParams::new(2, rat(1, 2)).unwrap();
        let rows = compare_bounds(&params, &[at_one()]).unwrap();
        assert_eq!(rows[0].tightest_upper, Some(BoundId::Upper14));

        let params = UltraParams::new(1, rat(1, 2)).unwrap();
        let grid = exact_grid(8);
        for row in compare_bounds(&params, &grid).unwrap() {
            assert_eq!(row.tightest_lower, Some(BoundId::Lower12));
        }

        // n = 5, λ = 1/2, x = 1000: 0.0050000022… (1.3) vs 0.00500001 (1.4)
        let params = UltraParams::new(5, 0.5).unwrap();
        let rows = compare_bounds(&params, &[Abscissa::from_x(1e3).unwrap()]).unwrap();
        assert_eq!(rows[0].tightest_upper, Some(BoundId::Upper13));
        let v13 = rows[0]
            .values
            .iter()
            .find(|(b, _)| *b == BoundId::Upper13)
            .unwrap()
            .1;
        assert!((v13 - 0.005000002227274276).abs() < 1e-15);
    }

    #[test]
    fn extreme_zero_spot() {
        assert_eq!(extreme_zero_bound(2, &rat(1, 2)), rat(16, 25));
    }

    #[test]
    fn float_tolerance_applies() {
        let params = UltraParams::new(3, 0.5).unwrap();
        let grid = float_grid(16, &[1e3, 1e6]).unwrap();
        let r = check_bound(BoundId::Upper14, &params, &grid).unwrap();
        assert!(r.passed());
        assert_eq!(r.mode, Mode::Float);
        // equality at x = 1 survives rounding
        assert!(r.points[0].margin.unwrap().abs() < 1e-12);
    }
}
