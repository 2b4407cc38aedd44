use proptest::prelude::*;
use rasa_core::bounds::{extreme_zero_bound, float_grid};
use rasa_core::rasa::{t_grid, ConjugateMap};
use rasa_core::scalar::{int, rat};
use rasa_core::specfun::{
    eval_with_derivative, exact_poly_family, psi, psi_at_one, psi_limit, ratio_sequence, ratio_u,
    zeros, PsiMethod, RatioMethod, UltraParams,
};
use rasa_core::{Rational, RationalPoly, Scalar};

fn lambda_grid() -> Vec<Rational> {
    vec![
        rat(-2, 5),
        rat(-1, 4),
        int(0),
        rat(1, 4),
        rat(1, 2),
        int(1),
        rat(3, 2),
        int(2),
        int(5),
        int(20),
    ]
}

fn exact_x_grid(m: usize) -> Vec<Rational> {
    t_grid(m)
        .into_iter()
        .map(|t| ConjugateMap::new(t).unwrap().x().clone())
        .collect()
}

fn float_x_sample() -> Vec<f64> {
    let mut xs: Vec<f64> = float_grid(16, &[1e3, 1e6])
        .unwrap()
        .into_iter()
        .map(|a| a.x)
        .collect();
    xs.extend([1.0 + 1e-9, 1.25, 3.0, 42.0]);
    xs
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

#[test]
fn recurrence_identities_hold_as_polynomials() {
    let one_minus_x2 = RationalPoly::from_ints(&[1, 0, -1]);
    let x = RationalPoly::x();
    for lambda in lambda_grid().into_iter().filter(|l| *l != int(0)) {
        let fam = exact_poly_family(&UltraParams::new(25, lambda.clone()).unwrap());
        let two_l = &lambda * int(2);
        for n in 0..25usize {
            let nn = int(n as i64);
            let p = &fam[n];
            let dp = p.derivative();
            // differential equation
            let de = &(&one_minus_x2 * &dp.derivative()) - &(&x * &dp).scale(&(&two_l + int(1)))
                + p.scale(&(&nn * (&nn + &two_l)));
            assert!(de.is_zero(), "ode n={n} λ={lambda}");
            // derivative step
            let rhs = &p.scale(&(&nn + &two_l)) + &(&x * &dp);
            assert_eq!(
                fam[n + 1].derivative(),
                rhs,
                "derivative step n={n} λ={lambda}"
            );
            // raising step
            let rhs = &(&x * p).scale(&(&nn + &two_l)) - &(&one_minus_x2 * &dp);
            assert_eq!(
                fam[n + 1].scale(&int(n as i64 + 1)),
                rhs,
                "raising step n={n} λ={lambda}"
            );
            // lowering step
            if n >= 1 {
                let rhs = &(&x * &dp) - &fam[n - 1].derivative();
                assert_eq!(p.scale(&nn), rhs, "lowering step n={n} λ={lambda}");
            }
        }
    }
}

#[test]
fn exact_methods_agree() {
    for lambda in lambda_grid() {
        for x in exact_x_grid(8) {
            let seq = ratio_sequence(&lambda, &x, 25).unwrap();
            for n in 1..=25 {
                let p = UltraParams::new(n, lambda.clone()).unwrap();
                let d = ratio_u(&p, &x, RatioMethod::Direct).unwrap().u;
                assert_eq!(d, seq[n - 1], "n={n} λ={lambda} x={x}");
            }
        }
    }
}

#[test]
fn float_methods_agree() {
    for lambda in lambda_grid() {
        let l = lambda.to_f64();
        for &x in &float_x_sample() {
            let seq = ratio_sequence(&l, &x, 40).unwrap();
            for n in [1, 2, 3, 7, 15, 24, 40] {
                let p = UltraParams::new(n, l).unwrap();
                let d = ratio_u(&p, &x, RatioMethod::Direct).unwrap().u;
                let z = ratio_u(&p, &x, RatioMethod::ZeroSum).unwrap().u;
                let r = seq[n - 1];
                assert!(rel(d, r) < 1e-10, "direct n={n} λ={l} x={x}: {d} vs {r}");
                assert!(rel(z, r) < 1e-10, "zero-sum n={n} λ={l} x={x}: {z} vs {r}");
            }
        }
    }
}

#[test]
fn psi_decreasing_and_sandwiched() {
    for lambda in lambda_grid() {
        let xs = exact_x_grid(16);
        for n in 2..=20 {
            let p = UltraParams::new(n, lambda.clone()).unwrap();
            let vals: Vec<Rational> = xs
                .iter()
                .map(|x| psi(&p, x, PsiMethod::Direct).unwrap())
                .collect();
            assert_eq!(vals[0], psi_at_one(&p), "n={n} λ={lambda}");
            assert!(vals.windows(2).all(|w| w[0] >= w[1]), "n={n} λ={lambda}");
            let (lo, hi) = (psi_limit(&p), psi_at_one(&p));
            for v in &vals {
                assert!(lo <= *v && *v <= hi, "n={n} λ={lambda}");
            }
        }
    }
}

#[test]
fn psi_zero_sum_matches_direct() {
    for lambda in lambda_grid() {
        let l = lambda.to_f64();
        for n in [2, 5, 13] {
            let p = UltraParams::new(n, l).unwrap();
            for x in [1.0, 1.7, 30.0, 1e6] {
                let a = psi(&p, &x, PsiMethod::Direct).unwrap();
                let b = psi(&p, &x, PsiMethod::ZeroSum).unwrap();
                assert!(rel(a, b) < 1e-9, "n={n} λ={l} x={x}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn zeros_symmetric_and_interlacing() {
    for lambda in lambda_grid() {
        let l = lambda.to_f64();
        let mut prev: Vec<f64> = Vec::new();
        for n in 1..=20 {
            let zs = zeros(&UltraParams::new(n, l).unwrap(), &1e-14)
                .unwrap()
                .zeros;
            assert_eq!(zs.len(), n);
            for k in 0..n {
                assert!((zs[k] + zs[n - 1 - k]).abs() < 1e-13, "n={n} λ={l}");
                assert!(zs[k] > -1.0 && zs[k] < 1.0);
            }
            assert!(zs.windows(2).all(|w| w[0] < w[1]));
            for (k, z) in prev.iter().enumerate() {
                assert!(zs[k] < *z && *z < zs[k + 1], "interlacing n={n} λ={l}");
            }
            let bound = extreme_zero_bound(n, &l);
            assert!(
                zs[n - 1] * zs[n - 1] <= bound + 1e-14,
                "extreme zero n={n} λ={l}"
            );
            prev = zs;
        }
    }
}

#[test]
fn extreme_zero_spot_exact() {
    let p = UltraParams::new(2, rat(1, 2)).unwrap();
    let zs = zeros(&p, &rasa_core::specfun::default_width::<Rational>()).unwrap();
    let top = zs.largest().unwrap();
    let b = extreme_zero_bound(2, &rat(1, 2));
    assert_eq!(b, rat(16, 25));
    assert!(top * top <= b);
    assert!(((top * top).to_f64() - 1.0 / 3.0).abs() < 1e-25);
}

#[test]
fn ratio_decreases_in_lambda() {
    let lambdas = lambda_grid();
    for x in exact_x_grid(16) {
        let seqs: Vec<Vec<Rational>> = lambdas
            .iter()
            .map(|l| ratio_sequence(l, &x, 20).unwrap())
            .collect();
        for n in 0..20 {
            for w in seqs.windows(2) {
                assert!(w[0][n] >= w[1][n], "n={} x={x}", n + 1);
            }
        }
    }
    let x = int(2);
    assert_eq!(ratio_sequence(&rat(1, 2), &x, 2).unwrap()[1], rat(12, 11));
    assert_eq!(ratio_sequence(&int(1), &x, 2).unwrap()[1], rat(16, 15));
}

#[test]
fn x_times_u_tends_to_n() {
    for lambda in lambda_grid() {
        let seq = ratio_sequence(&lambda.to_f64(), &1e6, 20).unwrap();
        for (i, u) in seq.iter().enumerate() {
            let n = (i + 1) as f64;
            assert!((1e6 * u - n).abs() <= 1e-5 * n);
        }
    }
}

#[test]
fn float_scaling_survives_large_arguments() {
    let p = UltraParams::new(40, 20.0).unwrap();
    let pair = eval_with_derivative(&p, &1e6);
    assert!(pair.scale_exponent > 0);
    let u = ratio_sequence(&20.0, &1e6, 40).unwrap()[39];
    assert!(rel(pair.derivative / pair.value, u) < 1e-12);
}

proptest! {
    #[test]
    fn recursion_matches_direct_at_random_points(
        n in 1usize..=30,
        lp in -9i64..=60,
        x in 1.0f64..1e4,
    ) {
        let l = lp as f64 / 20.0;
        let p = UltraParams::new(n, l).unwrap();
        let d = ratio_u(&p, &x, RatioMethod::Direct).unwrap().u;
        let r = ratio_u(&p, &x, RatioMethod::RatioRecursion).unwrap().u;
        prop_assert!(rel(d, r) < 1e-10);
    }

    #[test]
    fn endpoint_value_exact(n in 1usize..=30, lp in -9i64..=60) {
        let l = rat(lp, 20);
        let p = UltraParams::new(n, l.clone()).unwrap();
        let u = ratio_u(&p, &int(1), RatioMethod::RatioRecursion).unwrap().u;
        prop_assert_eq!(u, rasa_core::specfun::endpoint_u(&p));
        prop_assert_eq!(psi(&p, &int(1), PsiMethod::Direct).unwrap(), psi_at_one(&p));
    }
}
