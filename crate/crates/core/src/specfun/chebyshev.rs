use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevKind {
    /// `T_n`
    First,
    /// `U_n`
    Second,
}

/// `T_n(x) = cosh(nθ)` or `U_n(x) = sinh((n+1)θ)/sinh θ` with `x = cosh θ`,
/// for `x >= 1`.
pub fn chebyshev_closed_form(kind: ChebyshevKind, n: usize, x: f64) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(Error::AbscissaBelowOne(x.to_string()));
    }
    // acosh without the cancellation in x - 1 near the endpoint
    let d = x - 1.0;
    let theta = (d + (d * (x + 1.0)).sqrt()).ln_1p();
    let n = n as f64;
    Ok(match kind {
        ChebyshevKind::First => (n * theta).cosh(),
        // removable singularity at x = 1: U_n(1) = n + 1
        ChebyshevKind::Second if theta == 0.0 => n + 1.0,
        ChebyshevKind::Second => ((n + 1.0) * theta).sinh() / theta.sinh(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_values() {
        assert!((chebyshev_closed_form(ChebyshevKind::First, 2, 2.0).unwrap() - 7.0).abs() < 1e-14);
        assert_eq!(
            chebyshev_closed_form(ChebyshevKind::Second, 2, 1.0).unwrap(),
            3.0
        );
        for n in 0..30 {
            assert_eq!(
                chebyshev_closed_form(ChebyshevKind::First, n, 1.0).unwrap(),
                1.0
            );
        }
        let u3 = chebyshev_closed_form(ChebyshevKind::Second, 3, 1.5).unwrap();
        let near = 1.0 + 1e-9;
        let u2 = chebyshev_closed_form(ChebyshevKind::Second, 2, near).unwrap();
        assert!((u2 - (4.0 * near * near - 1.0)).abs() < 1e-14);
        // U_3 = 8x^3 - 4x
        assert!((u3 - (8.0 * 3.375 - 6.0)).abs() < 1e-12);
    }

    #[test]
    fn rejects_interior_points() {
        assert!(chebyshev_closed_form(ChebyshevKind::First, 2, 0.5).is_err());
        assert!(chebyshev_closed_form(ChebyshevKind::First, 2, f64::NAN).is_err());
    }
}
