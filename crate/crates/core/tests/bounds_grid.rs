use proptest::prelude::*;
use rasa_core::bounds::{
    admissible_c_range, check_sweep, endpoint_c_cap, eval_bound, exact_grid, float_grid, optimal_c,
    Abscissa, BoundId,
};
use rasa_core::rasa::ConjugateMap;
use rasa_core::scalar::{int, rat};
use rasa_core::specfun::{endpoint_u, ratio_sequence, UltraParams};
use rasa_core::{Rational, Scalar};

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

fn assert_all_pass(
    ids: &[BoundId],
    lambdas: &[Rational],
    n_max: usize,
    grid: &[Abscissa<Rational>],
) {
    for l in lambdas {
        for r in check_sweep(ids, l, 1..=n_max, grid).unwrap() {
            assert!(r.in_domain);
            assert!(
                r.passed(),
                "{} n={} λ={l}: {} failures",
                r.bound,
                r.n,
                r.failures()
            );
        }
    }
}

#[test]
fn lower_and_upper_bounds_on_exact_grid() {
    let grid = exact_grid(16);
    assert_all_pass(
        &[BoundId::Lower12, BoundId::Lower14, BoundId::Upper14],
        &lambda_grid(),
        40,
        &grid,
    );
    let unit: Vec<Rational> = vec![int(0), rat(1, 4), rat(1, 2), rat(3, 4), int(1)];
    assert_all_pass(&[BoundId::Upper13, BoundId::Tau33], &unit, 40, &grid);
    let big: Vec<Rational> = lambda_grid().into_iter().filter(|l| *l >= int(1)).collect();
    assert_all_pass(&[BoundId::Upper51], &big, 40, &grid);
    assert_all_pass(&[BoundId::Rasa11], &[rat(1, 2)], 40, &grid);
}

#[test]
fn upper_1_4_is_sharp_at_one() {
    let one = Abscissa {
        x: int(1),
        s: int(0),
    };
    for l in lambda_grid() {
        for r in check_sweep(&[BoundId::Upper14], &l, 1..=40, std::slice::from_ref(&one)).unwrap() {
            assert_eq!(r.points[0].margin, Some(int(0)), "n={} λ={l}", r.n);
            assert!(r.passed());
            let p = UltraParams::new(r.n, l.clone()).unwrap();
            assert_eq!(r.points[0].u, endpoint_u(&p));
        }
    }
}

#[test]
fn upper_1_3_refines_upper_1_1() {
    let l = rat(1, 2);
    for a in exact_grid(32) {
        for n in 1..=30 {
            let b13 = eval_bound(BoundId::Upper13, n, &l, &a).unwrap();
            let b11 = eval_bound(BoundId::Rasa11, n, &l, &a).unwrap();
            assert!(b13 <= b11, "n={n} x={}", a.x);
        }
    }
}

#[test]
fn bounds_collapse_for_large_lambda() {
    let l = 1e4;
    for x in [1.5, 2.0, 10.0] {
        let a = Abscissa::from_x(x).unwrap();
        let us = ratio_sequence(&l, &x, 10).unwrap();
        for n in 1..=10 {
            let target = n as f64 / x;
            let vals = [
                us[n - 1],
                eval_bound(BoundId::Lower12, n, &l, &a).unwrap(),
                eval_bound(BoundId::Lower14, n, &l, &a).unwrap(),
                eval_bound(BoundId::Upper14, n, &l, &a).unwrap(),
            ];
            for v in vals {
                assert!((v - target).abs() <= 1e-3 * target, "n={n} x={x}: {v}");
            }
        }
    }
}

#[test]
fn float_sweep_respects_tolerance() {
    let grid = float_grid(64, &[1e3, 1e6]).unwrap();
    for l in lambda_grid() {
        let l = l.to_f64();
        let ids: Vec<BoundId> = BoundId::ALL
            .into_iter()
            .filter(|b| b.is_valid(1, &l))
            .collect();
        for r in check_sweep(&ids, &l, 1..=40, &grid).unwrap() {
            assert!(r.passed(), "{} n={} λ={l}", r.bound, r.n);
        }
    }
}

#[test]
fn c_n_against_endpoint_cap() {
    for l in [int(0), rat(1, 10), rat(1, 2), rat(9, 10), int(1)] {
        for n in 1..=60 {
            let c = optimal_c(n, &l).unwrap();
            let (lo, hi) = admissible_c_range(n, &l).unwrap();
            assert_eq!(lo, int(0));
            assert_eq!(hi, c);
            assert!(c <= endpoint_c_cap(n, &l));
        }
    }
    for l in [rat(-2, 5), rat(-1, 4), rat(-1, 100)] {
        for n in 1..=20 {
            assert!(admissible_c_range(n, &l).is_none());
        }
    }
}

proptest! {
    #[test]
    fn sandwich_at_random_rational_points(
        j in 0i64..1000,
        n in 1usize..=25,
        lp in 0i64..=12,
    ) {
        let map = ConjugateMap::new(rat(j, 2001)).unwrap();
        let a = Abscissa::from(&map);
        let l = rat(lp, 12);
        let u = ratio_sequence(&l, &a.x, n).unwrap().pop().unwrap();
        prop_assert!(eval_bound(BoundId::Lower12, n, &l, &a).unwrap() <= u);
        prop_assert!(u <= eval_bound(BoundId::Upper13, n, &l, &a).unwrap());
        prop_assert!(eval_bound(BoundId::Lower14, n, &l, &a).unwrap() <= u);
        prop_assert!(u <= eval_bound(BoundId::Upper14, n, &l, &a).unwrap());
    }
}
