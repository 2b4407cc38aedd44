//! The sum of squared Bernstein basis polynomials
//! `F_n(t) = Σ_k b_{n,k}(t)²` and its convexity on `[0, 1]`.
//!
//! Under the substitution `x(t) = (1 - 2t + 1/(1 - 2t)) / 2`, which maps
//! `[0, 1/2)` onto `[1, ∞)` with `x - √(x²-1) = 1 - 2t`, `F_n` becomes
//! `(x - √(x²-1))^n P_n(x)` for the Legendre polynomial `P_n`. Every surd is
//! rational at rational `t`, so sign questions about `F_n''` reduce to exact
//! rational comparisons. Convexity for a concrete `n` is certified by
//! expanding `F_n''` exactly and counting its roots in `(0, 1)` with a Sturm
//! chain.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{RationalPoly, RootInterval, SturmChain};
use crate::scalar::{binomial, format_rational, int, rat, Rational, Scalar};
use crate::specfun::{eval_with_derivative, UltraParams};

/// Default t-grid density: `t = j/128` for `j = 0..64`.
pub const DEFAULT_GRID_DENSITY: usize = 64;

/// `t = j/(2m)` for `j = 0..m`; the endpoint `t = 1/2` is excluded.
pub fn t_grid(m: usize) -> Vec<Rational> {
    (0..m).map(|j| rat(j as i64, 2 * m as i64)).collect()
}

/// `b_{n,k}(t) = C(n,k) t^k (1-t)^{n-k}`.
pub fn bernstein<S: Scalar>(n: usize, k: usize, t: &S) -> Result<S> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let c = S::from_rational(&Rational::from_integer(binomial(n as u64, k as u64)));
    let u = S::one() - t.clone();
    Ok(c * t.powi(k as i32) * u.powi((n - k) as i32))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BernsteinBasis {
    pub n: usize,
}

impl BernsteinBasis {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    /// All `n + 1` basis values at `t`.
    pub fn eval_all<S: Scalar>(&self, t: &S) -> Vec<S> {
        (0..=self.n)
            .map(|k| bernstein(self.n, k, t).expect("k <= n"))
            .collect()
    }
}

/// `F_n(t)` by direct summation.
pub fn f_value<S: Scalar>(n: usize, t: &S) -> S {
    BernsteinBasis::new(n)
        .eval_all(t)
        .into_iter()
        .fold(S::zero(), |acc, b| acc + b.clone() * b)
}

/// `F_n = Σ C(n,k)² t^{2k} (1-t)^{2n-2k}` expanded exactly (degree `2n`).
pub fn f_exact(n: usize) -> RationalPoly {
    let t2 = RationalPoly::from_ints(&[0, 0, 1]);
    let u2 = RationalPoly::from_ints(&[1, -2, 1]);
    (0..=n).fold(RationalPoly::zero(), |acc, k| {
        let c = binomial(n as u64, k as u64);
        let term = &t2.pow(k as u32) * &u2.pow((n - k) as u32);
        &acc + &term.scale(&Rational::from_integer(&c * &c))
    })
}

/// `F_n(1/2) = C(2n, n) / 4^n`, the minimum value.
pub fn f_central_value(n: usize) -> Rational {
    Rational::new(
        binomial(2 * n as u64, n as u64),
        BigInt::from(4).pow(n as u32),
    )
}

/// The point `x(t) ≥ 1` together with the surd `s = √(x²-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugateMap<S> {
    t: S,
    x: S,
    s: S,
}

impl<S: Scalar> ConjugateMap<S> {
    pub fn new(t: S) -> Result<Self> {
        let half = S::from_rational(&rat(1, 2));
        if !(t >= S::zero() && t < half) {
            return Err(Error::ConjugateOutOfRange(t.to_string()));
        }
        let q = S::one() - S::from_int(2) * t.clone();
        let x = (q.clone() + S::one() / q.clone()) * half;
        let s = x.clone() - q;
        Ok(Self { t, x, s })
    }

    pub fn t(&self) -> &S {
        &self.t
    }

    pub fn x(&self) -> &S {
        &self.x
    }

    /// `√(x² - 1)`.
    pub fn s(&self) -> &S {
        &self.s
    }

    /// `x - √(x²-1) = 1 - 2t`.
    pub fn x_minus_s(&self) -> S {
        S::one() - S::from_int(2) * self.t.clone()
    }
}

/// Legendre value and derivative at `x`, unscaled.
fn legendre_pair<S: Scalar>(n: usize, x: &S) -> (S, S) {
    let params = UltraParams::new(n, S::from_rational(&rat(1, 2))).expect("1/2 > -1/2");
    let pair = eval_with_derivative(&params, x);
    let scale = S::from_int(2).powi(pair.scale_exponent);
    (pair.value * scale.clone(), pair.derivative * scale)
}

/// `F_n(t) = (x - √(x²-1))^n P_n(x)` for `t ∈ [0, 1/2)`.
pub fn f_via_legendre<S: Scalar>(n: usize, t: &S) -> Result<S> {
    let map = ConjugateMap::new(t.clone())?;
    let (p, _) = legendre_pair(n, map.x());
    Ok(map.x_minus_s().powi(n as i32) * p)
}

/// `F_n'(t) = 2 (x - s)^{n-1} (s P_n'(x) - n P_n(x))`.
pub fn f_prime<S: Scalar>(n: usize, t: &S) -> Result<S> {
    let map = ConjugateMap::new(t.clone())?;
    let (p, dp) = legendre_pair(n, map.x());
    let nn = S::from_int(n as i64);
    Ok(S::from_int(2) * map.x_minus_s().powi(n as i32 - 1) * (map.s().clone() * dp - nn * p))
}

/// The bracket `2n² P_n(x) - (x + (2n-1)s) P_n'(x)`; its sign is the sign
/// of `F_n''(t)`.
pub fn second_derivative_bracket<S: Scalar>(n: usize, map: &ConjugateMap<S>) -> S {
    let (p, dp) = legendre_pair(n, map.x());
    let nn = S::from_int(n as i64);
    S::from_int(2) * nn.clone() * nn.clone() * p
        - (map.x().clone() + (S::from_int(2) * nn - S::one()) * map.s().clone()) * dp
}

/// `F_n''(t) = 4 (x - s)^{n-2} [2n² P_n(x) - (x + (2n-1)s) P_n'(x)]`.
pub fn f_second<S: Scalar>(n: usize, t: &S) -> Result<S> {
    let map = ConjugateMap::new(t.clone())?;
    Ok(S::from_int(4) * map.x_minus_s().powi(n as i32 - 2) * second_derivative_bracket(n, &map))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ConvexCertified,
    NotCertified,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::ConvexCertified => "convex-certified",
            Self::NotCertified => "not-certified",
        }
    }
}

/// Exact record that `F_n'' ≥ 0` on `[0, 1]` for one `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexityCertificate {
    pub n: usize,
    /// `F_n''` in ascending powers.
    pub second_derivative: RationalPoly,
    /// Distinct roots of `F_n''` in the open interval `(0, 1)`.
    pub roots_in_open_unit: usize,
    pub root_intervals: Vec<RootInterval>,
    /// `(point, sign of F_n'')` at one root-free point in each gap between
    /// consecutive roots.
    pub sign_pattern: Vec<(Rational, i8)>,
    pub at_zero: Rational,
    pub at_half: Rational,
    pub verdict: Verdict,
}

/// Flat, string-valued layout of a certificate for JSON output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateRecord {
    pub n: usize,
    pub f2_coeffs: Vec<String>,
    pub roots_in_open_unit: usize,
    pub root_intervals: Vec<[String; 2]>,
    pub sign_pattern: Vec<(String, i8)>,
    pub f2_at_0: String,
    pub f2_at_half: String,
    pub verdict: Verdict,
}

impl ConvexityCertificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::ConvexCertified
    }

    pub fn record(&self) -> CertificateRecord {
        CertificateRecord {
            n: self.n,
            f2_coeffs: self
                .second_derivative
                .coeffs()
                .iter()
                .map(format_rational)
                .collect(),
            roots_in_open_unit: self.roots_in_open_unit,
            root_intervals: self
                .root_intervals
                .iter()
                .map(|r| [format_rational(&r.lo), format_rational(&r.hi)])
                .collect(),
            sign_pattern: self
                .sign_pattern
                .iter()
                .map(|(t, s)| (format_rational(t), *s))
                .collect(),
            f2_at_0: format_rational(&self.at_zero),
            f2_at_half: format_rational(&self.at_half),
            verdict: self.verdict,
        }
    }
}

const ISOLATION_WIDTH_LOG2: u32 = 32;

/// Sturm-certified sign pattern of `p` on `(0, 1)`: one root-free sample
/// point per gap between consecutive distinct roots.
fn sign_pattern(
    chain: &SturmChain,
    p: &RationalPoly,
    roots: &[RootInterval],
) -> Result<Vec<(Rational, i8)>> {
    let mut out = Vec::with_capacity(roots.len() + 1);
    let mut c = Rational::zero();
    for i in 0..=roots.len() {
        let h = match roots.get(i) {
            Some(r) if r.lo > c => r.lo.clone(),
            Some(r) => r.hi.clone(),
            None => Rational::one(),
        };
        let m = chain.root_free_step(&c, &h)?;
        out.push((m.clone(), p.eval_rational(&m).signum_i8()));
        if let Some(r) = roots.get(i) {
            c = r.hi.clone();
        }
    }
    Ok(out)
}

/// Expands `F_n''` exactly and certifies `F_n'' ≥ 0` on `[0, 1]`: the
/// verdict is positive iff every gap between distinct roots in `(0, 1)`
/// carries a positive sign.
pub fn certify_convexity(n: usize) -> Result<ConvexityCertificate> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { n, min: 1 });
    }
    let f2 = f_exact(n).derivative().derivative();
    let (zero, one) = (Rational::zero(), Rational::one());
    let chain = SturmChain::new(&f2)?;
    let mut roots = chain.isolate(
        &zero,
        &one,
        &Rational::new(BigInt::one(), BigInt::from(2).pow(ISOLATION_WIDTH_LOG2)),
    )?;
    // (0, 1] minus a possible root at t = 1
    if f2.eval_rational(&one).is_zero() {
        roots.pop();
    }
    let pattern = sign_pattern(&chain, &f2, &roots)?;
    let verdict = if pattern.iter().all(|&(_, s)| s > 0) {
        Verdict::ConvexCertified
    } else {
        Verdict::NotCertified
    };
    Ok(ConvexityCertificate {
        n,
        at_zero: f2.eval_rational(&zero),
        at_half: f2.eval_rational(&rat(1, 2)),
        roots_in_open_unit: roots.len(),
        root_intervals: roots,
        sign_pattern: pattern,
        second_derivative: f2,
        verdict,
    })
}

/// One grid point of the equivalence check.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalencePoint {
    pub t: Rational,
    pub x: Rational,
    /// `F_n''(t)` from the expanded polynomial.
    pub f2: Rational,
    /// `2n² P_n(x) - (x + (2n-1)s) P_n'(x)`.
    pub bracket: Rational,
    /// `P_n'(x)/P_n(x) ≤ 2n²/(x + (2n-1)s)` at this point.
    pub ratio_bound_holds: bool,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceReport {
    pub n: usize,
    pub points: Vec<EquivalencePoint>,
}

impl EquivalenceReport {
    pub fn consistent(&self) -> bool {
        self.points.iter().all(|p| p.consistent)
    }
}

/// Checks, exactly at each grid point, that the expanded `F_n''(t)` equals
/// `4(1-2t)^{n-2}` times the Legendre bracket at `x(t)` (so their signs
/// agree), and that the ratio bound at `x(t)` implies `F_n''(t) ≥ 0`.
pub fn equivalence_check(n: usize, grid: &[Rational]) -> Result<EquivalenceReport> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { n, min: 1 });
    }
    let f2 = f_exact(n).derivative().derivative();
    let nn = int(n as i64);
    let points = grid
        .iter()
        .map(|t| {
            let map = ConjugateMap::new(t.clone())?;
            let value = f2.eval_rational(t);
            let bracket = second_derivative_bracket(n, &map);
            let via_legendre = int(4) * map.x_minus_s().powi(n as i32 - 2) * &bracket;
            let (p, dp) = legendre_pair(n, map.x());
            let rhs = int(2) * &nn * &nn / (map.x() + (int(2) * &nn - int(1)) * map.s());
            let ratio_bound_holds = dp / p <= rhs;
            let consistent = value == via_legendre
                && value.signum_i8() == bracket.signum_i8()
                && (!ratio_bound_holds || value.signum_i8() >= 0);
            Ok(EquivalencePoint {
                t: t.clone(),
                x: map.x().clone(),
                f2: value,
                bracket,
                ratio_bound_holds,
                consistent,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivalenceReport { n, points })
}

/// Checks that `F_n` decreases on `[0, 1/2]`, increases on
/// `[1/2, 1]`, and attains its minimum `C(2n,n)/4^n` at `t = 1/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityReport {
    pub n: usize,
    /// Distinct roots of `F_n'` in `(0, 1)`.
    pub derivative_roots_in_open_unit: usize,
    pub derivative_vanishes_at_half: bool,
    /// No root of `F_n'` in `(0, 1/2)` and `F_n'(1/4) < 0`.
    pub decreasing_on_left_half: bool,
    pub minimum_value: Rational,
    pub minimum_is_central_binomial: bool,
}

impl MonotonicityReport {
    pub fn holds(&self) -> bool {
        self.derivative_roots_in_open_unit == 1
            && self.derivative_vanishes_at_half
            && self.decreasing_on_left_half
            && self.minimum_is_central_binomial
    }
}

pub fn monotonicity_check(n: usize) -> Result<MonotonicityReport> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { n, min: 1 });
    }
    let f = f_exact(n);
    let f1 = f.derivative();
    let chain = SturmChain::new(&f1)?;
    let (zero, half, one) = (Rational::zero(), rat(1, 2), Rational::one());
    let at_one_is_root = f1.eval_rational(&one).is_zero();
    let in_open_unit = chain.count(&zero, &one)? - usize::from(at_one_is_root);
    let vanishes_at_half = f1.eval_rational(&half).is_zero();
    let left = chain.count(&zero, &half)? - usize::from(vanishes_at_half);
    let decreasing = left == 0 && f1.eval_rational(&rat(1, 4)).signum_i8() < 0;
    let minimum_value = f.eval_rational(&half);
    Ok(MonotonicityReport {
        n,
        derivative_roots_in_open_unit: in_open_unit,
        derivative_vanishes_at_half: vanishes_at_half,
        decreasing_on_left_half: decreasing,
        minimum_is_central_binomial: minimum_value == f_central_value(n),
        minimum_value,
    })
}
