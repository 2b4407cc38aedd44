//! Certified numerics for ultraspherical polynomials.
//!
//! * [`exact`]: rational polynomials, Sturm chains, root isolation.
//! * [`specfun`]: `P_n^(λ)`, the ratio `u_n = p_n'/p_n`, `ψ`, zeros.
//! * [`bounds`]: closed-form upper and lower bounds for `u_n` on `[1, ∞)`
//!   and sweeps that check them, exactly or in floating point.
//! * [`rasa`]: the sum of squared Bernstein basis polynomials `F_n`, its
//!   link to Legendre polynomials, and exact convexity certificates.

// `!(x >= a)` is used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod exact;
pub mod rasa;
pub mod scalar;
pub mod specfun;

pub use error::{Error, Result};
pub use exact::RationalPoly;
pub use scalar::{Rational, Scalar};
