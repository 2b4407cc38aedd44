//! Ultraspherical polynomials `p_n = P_n^(λ)` and the logarithmic-derivative
//! ratio `u_n(x) = p_n'(x) / p_n(x)` on `[1, ∞)`.
//!
//! All evaluators are generic over [`Scalar`], so the same code runs exactly
//! on rationals and approximately on `f64`. At `λ = 0` the standard
//! normalization degenerates; that path evaluates Chebyshev `T_n` instead,
//! which leaves every ratio `u_n` unchanged.

mod chebyshev;
mod polys;
mod zeros;

pub use chebyshev::{chebyshev_closed_form, ChebyshevKind};
pub use polys::{exact_poly, exact_poly_family, legendre_rodrigues};
pub use zeros::{default_width, zeros, ZeroSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{rat, Rational, Scalar};

/// Degree and family parameter, with `λ > -1/2` enforced on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct UltraParams<S> {
    n: usize,
    lambda: S,
}

impl<S: Scalar> UltraParams<S> {
    pub fn new(n: usize, lambda: S) -> Result<Self> {
        if !(lambda > S::from_rational(&rat(-1, 2))) {
            return Err(Error::LambdaOutOfRange(lambda.to_string()));
        }
        Ok(Self { n, lambda })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &S {
        &self.lambda
    }

    pub fn with_degree(&self, n: usize) -> Self {
        Self {
            n,
            lambda: self.lambda.clone(),
        }
    }

    /// `λ = 0`, evaluated through Chebyshev `T_n`.
    pub fn is_chebyshev_t(&self) -> bool {
        self.lambda.is_zero()
    }

    fn require_degree(&self, min: usize) -> Result<()> {
        if self.n < min {
            Err(Error::DegreeTooSmall { n: self.n, min })
        } else {
            Ok(())
        }
    }
}

impl UltraParams<Rational> {
    pub fn to_f64(&self) -> UltraParams<f64> {
        UltraParams {
            n: self.n,
            lambda: self.lambda.to_f64(),
        }
    }
}

/// `p_n(x)` and `p_n'(x)`, both divided by `2^scale_exponent`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyValuePair<S> {
    pub value: S,
    pub derivative: S,
    pub scale_exponent: i32,
}

impl PolyValuePair<f64> {
    /// True value, which may overflow to infinity.
    pub fn unscaled_value(&self) -> f64 {
        self.value * 2f64.powi(self.scale_exponent)
    }

    pub fn unscaled_derivative(&self) -> f64 {
        self.derivative * 2f64.powi(self.scale_exponent)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RatioMethod {
    /// `p_n' / p_n` from the joint forward recurrence.
    Direct,
    /// Iterate `u_{m+1}` from `u_m`, starting at `u_1 = 1/x`.
    RatioRecursion,
    /// `(n + Σ x_k²/(x² - x_k²)) / x` over the zeros of `p_n`.
    ZeroSum,
}

impl RatioMethod {
    pub const ALL: [RatioMethod; 3] = [Self::Direct, Self::RatioRecursion, Self::ZeroSum];

    pub fn name(self) -> &'static str {
        match self {
            Self::Direct => "direct",
            Self::RatioRecursion => "ratio-recursion",
            Self::ZeroSum => "zero-sum",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioSample<S> {
    pub x: S,
    pub u: S,
    pub method: RatioMethod,
}

/// Values and derivatives of `p_{n-1}` and `p_n`, sharing one scale.
struct Ladder<S> {
    prev_derivative: S,
    value: S,
    derivative: S,
    scale_exponent: i32,
}

fn ladder<S: Scalar>(params: &UltraParams<S>, x: &S) -> Ladder<S> {
    let two = S::from_int(2);
    let lambda = params.lambda.clone();
    // degree -1 and degree 0
    let (mut pv, mut pd) = (S::zero(), S::zero());
    let (mut cv, mut cd) = (S::one(), S::zero());
    let mut exponent = 0;
    let cheb = params.is_chebyshev_t();
    for m in 0..params.n {
        let mm = S::from_int(m as i64);
        let (nv, nd) = if cheb {
            if m == 0 {
                (x.clone(), S::one())
            } else {
                (
                    two.clone() * x.clone() * cv.clone() - pv.clone(),
                    two.clone() * cv.clone() + two.clone() * x.clone() * cd.clone() - pd.clone(),
                )
            }
        } else {
            // (m+1) p_{m+1} = 2(m+λ) x p_m - (m+2λ-1) p_{m-1}
            // p_{m+1}' = (m+2λ) p_m + x p_m'
            let v = (two.clone() * (mm.clone() + lambda.clone()) * x.clone() * cv.clone()
                - (mm.clone() + two.clone() * lambda.clone() - S::one()) * pv.clone())
                / (mm.clone() + S::one());
            let d = (mm + two.clone() * lambda.clone()) * cv.clone() + x.clone() * cd.clone();
            (v, d)
        };
        pv = cv;
        pd = cd;
        cv = nv;
        cd = nd;
        let mut buf = [pv, pd, cv, cd];
        exponent += S::rescale(&mut buf);
        [pv, pd, cv, cd] = buf;
    }
    Ladder {
        prev_derivative: pd,
        value: cv,
        derivative: cd,
        scale_exponent: exponent,
    }
}

/// `p_n(x)` and `p_n'(x)` by the joint three-term recurrence.
pub fn eval_with_derivative<S: Scalar>(params: &UltraParams<S>, x: &S) -> PolyValuePair<S> {
    let l = ladder(params, x);
    PolyValuePair {
        value: l.value,
        derivative: l.derivative,
        scale_exponent: l.scale_exponent,
    }
}

fn require_x_at_least_one<S: Scalar>(x: &S) -> Result<()> {
    // NaN fails this comparison as well.
    if *x >= S::one() {
        Ok(())
    } else {
        Err(Error::AbscissaBelowOne(x.to_string()))
    }
}

/// One step of the ratio recursion: `u_{m+1}` from `u_m`.
fn ratio_step<S: Scalar>(m: usize, lambda: &S, x: &S, u: S) -> S {
    let a = S::from_int(m as i64) + S::from_int(2) * lambda.clone();
    let x2m1 = x.clone() * x.clone() - S::one();
    S::from_int(m as i64 + 1) * (a.clone() + x.clone() * u.clone()) / (a * x.clone() + x2m1 * u)
}

/// `u_1(x), …, u_{n_max}(x)` in one pass of the ratio recursion.
pub fn ratio_sequence<S: Scalar>(lambda: &S, x: &S, n_max: usize) -> Result<Vec<S>> {
    require_x_at_least_one(x)?;
    let mut out = Vec::with_capacity(n_max);
    if n_max == 0 {
        return Ok(out);
    }
    let mut u = S::one() / x.clone();
    out.push(u.clone());
    for m in 1..n_max {
        u = ratio_step(m, lambda, x, u);
        out.push(u.clone());
    }
    Ok(out)
}

/// `u_n(x)` by the requested method.
pub fn ratio_u<S: Scalar>(
    params: &UltraParams<S>,
    x: &S,
    method: RatioMethod,
) -> Result<RatioSample<S>> {
    params.require_degree(1)?;
    let u = match method {
        RatioMethod::Direct => {
            let pair = eval_with_derivative(params, x);
            if pair.value.is_zero() {
                return Err(Error::DivisionByZero("p_n(x)"));
            }
            pair.derivative / pair.value
        }
        RatioMethod::RatioRecursion => ratio_sequence(&params.lambda, x, params.n)?
            .pop()
            .expect("n >= 1"),
        RatioMethod::ZeroSum => {
            require_x_at_least_one(x)?;
            if S::EXACT {
                return Err(Error::MethodUnavailable(method.name()));
            }
            let zs = zeros(params, &default_width::<S>())?;
            let x2 = x.clone() * x.clone();
            let sum = zs.zeros.iter().fold(S::zero(), |acc, z| {
                let z2 = z.clone() * z.clone();
                acc + z2.clone() / (x2.clone() - z2)
            });
            (S::from_int(params.n as i64) + sum) / x.clone()
        }
    };
    Ok(RatioSample {
        x: x.clone(),
        u,
        method,
    })
}

/// `u_n(1) = n(n+2λ)/(2λ+1)`.
pub fn endpoint_u<S: Scalar>(params: &UltraParams<S>) -> S {
    let n = S::from_int(params.n as i64);
    let two_lambda = S::from_int(2) * params.lambda.clone();
    n.clone() * (n + two_lambda.clone()) / (two_lambda + S::one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiMethod {
    /// `x² p_{n-1}'(x) / p_n(x)`.
    Direct,
    /// `Σ x_k² / (1 - (x_k/x)²)`.
    ZeroSum,
}

/// `ψ(x) = x² p_{n-1}'(x) / p_n(x)`, decreasing on `[1, ∞)`.
pub fn psi<S: Scalar>(params: &UltraParams<S>, x: &S, method: PsiMethod) -> Result<S> {
    params.require_degree(1)?;
    require_x_at_least_one(x)?;
    if params.n == 1 {
        return Ok(S::zero());
    }
    let x2 = x.clone() * x.clone();
    match method {
        PsiMethod::Direct => {
            let l = ladder(params, x);
            let mut r = x2 * l.prev_derivative / l.value;
            if params.is_chebyshev_t() {
                // limit normalization of p_m^(λ)/λ is (2/m) T_m
                let n = params.n as i64;
                r = r * S::from_int(n) / S::from_int(n - 1);
            }
            Ok(r)
        }
        PsiMethod::ZeroSum => {
            if S::EXACT {
                return Err(Error::MethodUnavailable("zero-sum"));
            }
            let zs = zeros(params, &default_width::<S>())?;
            Ok(zs.zeros.iter().fold(S::zero(), |acc, z| {
                let q = z.clone() / x.clone();
                acc + z.clone() * z.clone() / (S::one() - q.clone() * q)
            }))
        }
    }
}

/// `ψ(1) = n(n-1)/(2λ+1)`.
pub fn psi_at_one<S: Scalar>(params: &UltraParams<S>) -> S {
    let n = S::from_int(params.n as i64);
    n.clone() * (n - S::one()) / (S::from_int(2) * params.lambda.clone() + S::one())
}

/// `lim_{x→∞} ψ(x) = n(n-1)/(2(n+λ-1))`.
pub fn psi_limit<S: Scalar>(params: &UltraParams<S>) -> S {
    if params.n <= 1 {
        return S::zero();
    }
    let n = S::from_int(params.n as i64);
    n.clone() * (n.clone() - S::one()) / (S::from_int(2) * (n + params.lambda.clone() - S::one()))
}

/// Leading coefficient `a_m = 2^m λ(λ+1)⋯(λ+m-1)/m!` of `p_m`.
pub fn leading_coefficient<S: Scalar>(m: usize, lambda: &S) -> S {
    (0..m).fold(S::one(), |acc, i| {
        let i = i as i64;
        acc * S::from_int(2) * (lambda.clone() + S::from_int(i)) / S::from_int(i + 1)
    })
}
