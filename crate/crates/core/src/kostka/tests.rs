use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::koornwinder::oracle_p;
use crate::scalar::{Rational, UPoly};
use crate::symlaurent::monomial_m;

type Q = Rational;

fn rq(rng: &mut ChaCha8Rng) -> Q {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    Q::new(sign * rng.gen_range(2..=97), rng.gen_range(2..=97)).unwrap()
}

fn bb(seed: u64) -> ParamSet<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rq(&mut rng);
    let tau = rq(&mut rng);
    bb_t_params(p, tau).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `sum_l v[l] P_{r-l}` rewritten in the `E` basis, given `P_s = sum_i w(s)[i] E_{s-i}`.
fn compose<F: ExactScalar>(r: usize, v: &[F], w: impl Fn(usize) -> Vec<F>) -> Vec<F> {
    let mut out = vec![F::zero(); r + 1];
    for (l, c) in v.iter().enumerate() {
        for (i, x) in w(r - l).iter().enumerate() {
            out[l + i] = out[l + i].clone() + &(c.clone() * x);
        }
    }
    out
}

fn unit<F: ExactScalar>(r: usize) -> Vec<F> {
    let mut u = vec![F::zero(); r + 1];
    u[0] = F::one();
    u
}

#[test]
fn column_zero_is_one() {
    let ps = bb(1);
    for n in 0..4 {
        assert!(macdonald_bb_t(n, 0, &ps).unwrap() == LaurentPoly::one(n));
        assert!(schur_b::<Q>(n, 0).unwrap() == LaurentPoly::one(n));
        assert!(hall_littlewood_b(n, 0, &Q::from(3)).unwrap() == LaurentPoly::one(n));
    }
}

#[test]
fn bb_t_matches_oracle() {
    for seed in 0..2 {
        let ps = bb(seed);
        for n in 1..=3 {
            for r in 0..=n {
                assert_eq!(macdonald_bb_t(n, r, &ps).unwrap(), oracle_p(n, r, &ps).unwrap(), "n={n} r={r}");
            }
        }
    }
}

#[test]
fn bb_t_rejects_other_parameters() {
    let mut ps = bb(3);
    ps.c = Q::from(2);
    assert!(matches!(bb_t_e_coeffs(2, 1, &ps), Err(Error::Domain(_))));
}

#[test]
fn bb_t_displays_are_inverse() {
    for seed in 0..3 {
        let ps = bb(seed);
        for n in 0..=5 {
            for r in 0..=n {
                let v = bb_t_inverse_coeffs(n, r, &ps).unwrap();
                let back = compose(r, &v, |s| bb_t_e_coeffs(n, s, &ps).unwrap());
                assert_eq!(back, unit::<Q>(r), "n={n} r={r}");
            }
        }
    }
    let ps = bb(7);
    assert_eq!(e_via_bb_t(2, 2, &ps).unwrap(), elementary_e::<Q>(2, 2));
}

#[test]
fn schur_is_t_equal_q() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let p = rq(&mut rng);
    let ps = bb_t_params(p.clone(), p).unwrap();
    for n in 1..=5 {
        for r in 0..=n {
            let mut want = vec![Q::zero(); r + 1];
            want[0] = Q::one();
            if r >= 1 {
                want[1] = Q::one();
            }
            assert_eq!(bb_t_e_coeffs(n, r, &ps).unwrap(), want);
        }
    }
}

#[test]
fn schur_m_expansion() {
    for n in 0..=6 {
        for r in 0..=n {
            assert_eq!(schur_b_m_expansion(n, r).unwrap(), schur_b_m_coeffs(n, r).unwrap(), "n={n} r={r}");
        }
    }
    // s_(1) = m_(1) + 1
    let s1 = schur_b::<Q>(3, 1).unwrap();
    assert_eq!(s1, monomial_m::<Q>(3, 1).unwrap() + &LaurentPoly::one(3));
    assert_eq!(schur_b_m_coeffs(9, 9).unwrap(), ints(&[1, 1, 2, 3, 6, 10, 20, 35, 70, 126]));
    assert_eq!(schur_b_m_coeffs(9, 6).unwrap(), ints(&[1, 1, 5, 6, 21, 28, 84]));
}

#[test]
fn hall_littlewood_leading_term() {
    let t = RatFunc::indeterminate();
    for n in 1..=4 {
        for r in 0..=n {
            let mc = hall_littlewood_b(n, r, &t).unwrap().m_coefficients().unwrap();
            assert!(mc[r].is_one(), "n={n} r={r}");
            assert!(mc[r + 1..].iter().all(|c| c.is_zero()));
        }
    }
}

#[test]
fn hall_littlewood_is_q_to_zero_limit() {
    // the (p, -p, -1, t) family with p as the live variable, then p -> 0
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let tau = rq(&mut rng);
    let t = tau.square();
    let ps = bb_t_params(RatFunc::indeterminate(), RatFunc::from_rational(&tau.0)).unwrap();
    let zero = BigRational::zero();
    for n in 1..=4 {
        for r in 0..=n {
            let lim = |v: Vec<RatFunc>| -> Vec<Q> { v.iter().map(|x| Rational(x.eval(&zero).unwrap())).collect() };
            assert_eq!(lim(bb_t_e_coeffs(n, r, &ps).unwrap()), hall_littlewood_b_e_coeffs(n, r, &t).unwrap());
            assert_eq!(
                lim(bb_t_inverse_coeffs(n, r, &ps).unwrap()),
                hall_littlewood_b_inverse_coeffs(n, r, &t).unwrap()
            );
        }
    }
}

#[test]
fn hall_littlewood_round_trip() {
    let t = RatFunc::indeterminate();
    for n in 0..=4 {
        for r in 0..=n {
            let v = hall_littlewood_b_inverse_coeffs(n, r, &t).unwrap();
            let back = compose(r, &v, |s| hall_littlewood_b_e_coeffs(n, s, &t).unwrap());
            assert_eq!(back, unit::<RatFunc>(r), "n={n} r={r}");
        }
    }
}

#[test]
fn kostka_sum_equals_closed() {
    for n in 0..=6 {
        for r in 0..=n {
            for l in 0..=r {
                let s = kostka_sum(n, r, l).unwrap();
                let c = kostka_closed(n, r, l).unwrap();
                assert_eq!(s, c, "n={n} r={r} l={l}");
                assert!(c.is_nonnegative_integral());
                let big_l = l / 2;
                let low = if l % 2 == 0 { big_l } else { big_l + n - r + 1 };
                assert_eq!(c.lowest_degree(), Some(low));
            }
        }
    }
}

#[test]
fn kostka_examples() {
    let t = RatFunc::indeterminate();
    for n in 1..=5 {
        for r in 1..=n {
            assert!(kostka_closed(n, r, 0).unwrap().value.is_one());
            assert_eq!(kostka_sum(n, r, 1).unwrap().value, t.powu((n - r + 1) as u64));
        }
    }
    let k = kostka_sum(3, 2, 2).unwrap();
    assert_eq!(k.coefficients().unwrap(), ints(&[0, 1, 0, 1, 0, 1]));
    assert_eq!(k.to_latex().unwrap(), "t + t^{3} + t^{5}");
    assert_eq!(k.degree(), Some(5));
    assert!(kostka_closed(2, 1, 2).is_err());
}

#[test]
fn kostka_defines_schur_in_hall_littlewood() {
    for n in 0..=3 {
        for r in 0..=n {
            assert!(kostka_defining_check(n, r).unwrap(), "n={n} r={r}");
        }
    }
}

#[test]
fn non_polynomial_value_is_reported() {
    let k = KostkaPolynomial {
        n: 1,
        r: 1,
        l: 1,
        value: RatFunc::new(UPoly::one(), UPoly::x()).unwrap(),
    };
    assert!(k.coefficients().is_err());
    assert!(!k.is_nonnegative_integral());
}

proptest! {
    #[test]
    fn hall_littlewood_round_trip_at_rational_t(num in 2i64..60, den in 2i64..60, n in 1usize..5) {
        let t = Q::new(num, den).unwrap();
        prop_assume!(!t.is_one());
        for r in 0..=n {
            let v = hall_littlewood_b_inverse_coeffs(n, r, &t).unwrap();
            let back = compose(r, &v, |s| hall_littlewood_b_e_coeffs(n, s, &t).unwrap());
            prop_assert_eq!(back, unit::<Q>(r));
        }
    }
}
