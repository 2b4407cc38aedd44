use num_traits::Zero;

use super::UltraParams;
use crate::exact::RationalPoly;
use crate::scalar::{binomial, int, Rational};

/// `p_0, …, p_n` as exact polynomials from the three-term recurrence
/// (Chebyshev `T_m` when `λ = 0`).
pub fn exact_poly_family(params: &UltraParams<Rational>) -> Vec<RationalPoly> {
    let lambda = params.lambda().clone();
    let x = RationalPoly::x();
    let mut out = vec![RationalPoly::one()];
    if params.n() == 0 {
        return out;
    }
    if lambda.is_zero() {
        out.push(x.clone());
        let two_x = x.scale(&int(2));
        for m in 1..params.n() {
            let next = &(&two_x * &out[m]) - &out[m - 1];
            out.push(next);
        }
        return out;
    }
    out.push(x.scale(&(int(2) * &lambda)));
    for m in 1..params.n() {
        let mm = int(m as i64);
        let a = int(2) * (&mm + &lambda) / (&mm + int(1));
        let b = (&mm + int(2) * &lambda - int(1)) / (&mm + int(1));
        let next = &(&x * &out[m]).scale(&a) - &out[m - 1].scale(&b);
        out.push(next);
    }
    out
}

/// Exact coefficients of `p_n`.
pub fn exact_poly(params: &UltraParams<Rational>) -> RationalPoly {
    exact_poly_family(params)
        .pop()
        .expect("family is never empty")
}

/// Legendre `P_n` from `2^{-n} Σ C(n,k)² (x-1)^k (x+1)^{n-k}`.
pub fn legendre_rodrigues(n: usize) -> RationalPoly {
    let xm1 = RationalPoly::from_ints(&[-1, 1]);
    let xp1 = RationalPoly::from_ints(&[1, 1]);
    let mut acc = RationalPoly::zero();
    for k in 0..=n {
        let c = binomial(n as u64, k as u64);
        let term = &xm1.pow(k as u32) * &xp1.pow((n - k) as u32);
        acc = &acc + &term.scale(&Rational::from_integer(&c * &c));
    }
    acc.scale(&Rational::new(
        1.into(),
        num_bigint::BigInt::from(2).pow(n as u32),
    ))
}
