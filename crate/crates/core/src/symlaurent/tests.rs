use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::scalar::Rational;

type P = LaurentPoly<Rational>;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn rand_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| q(rng.gen_range(2..=97), rng.gen_range(2..=97))).collect()
}

#[test]
fn small_monomials() {
    assert_eq!(monomial_m::<Rational>(2, 0).unwrap(), P::one(2));
    let m1 = monomial_m::<Rational>(2, 1).unwrap();
    assert_eq!(m1.len(), 4);
    for e in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
        assert!(m1.coeff(&e).is_one());
    }
    let m2 = monomial_m::<Rational>(2, 2).unwrap();
    assert_eq!(m2.len(), 4);
    for e in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
        assert!(m2.coeff(&e).is_one());
    }
    assert!(monomial_m::<Rational>(2, 3).is_err());
}

#[test]
fn elementary_examples() {
    assert_eq!(elementary_e::<Rational>(3, 0), P::one(3));
    assert_eq!(elementary_e::<Rational>(3, 1), monomial_m(3, 1).unwrap());
    let two = P::constant(2, Rational::from_i64(2));
    assert_eq!(elementary_e::<Rational>(2, 2), monomial_m(2, 2).unwrap() + &two);
    assert!(elementary_e::<Rational>(2, 5).is_zero());
    assert!(elementary_e::<Rational>(2, -1).is_zero());
}

#[test]
fn e_in_m_matches_expansion() {
    let e43 = e_in_m(4, 3).unwrap();
    assert_eq!(e43, vec![(1.into(), ColumnPartition { n: 4, r: 3 }), (3.into(), ColumnPartition { n: 4, r: 1 })]);
    for n in 1..=6 {
        for r in 0..=n {
            let mut built = P::zero(n);
            for (c, col) in e_in_m(n, r).unwrap() {
                built = built + &monomial_m(n, col.r).unwrap().scale(&Rational(c.into()));
            }
            assert_eq!(built, elementary_e(n, r as i64), "n={n} r={r}");
        }
    }
}

#[test]
fn elementary_is_invariant() {
    for n in 1..=5 {
        for r in 0..=n {
            assert!(elementary_e::<Rational>(n, r as i64).is_w_invariant());
        }
    }
    assert!(P::one(2).is_w_invariant());
    assert!(monomial_m::<Rational>(2, 1).unwrap().is_w_invariant());
    assert!(!P::var(2, 0).is_w_invariant());
}

#[test]
fn generating_function_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=4 {
        for _ in 0..3 {
            let y = q(rng.gen_range(2..=97), rng.gen_range(2..=97));
            let x = rand_point(&mut rng, n);
            let mut lhs = Rational::one();
            for xi in &x {
                lhs = lhs * &(y.clone() * xi).one_minus() * &(y.clone() * &xi.inv().unwrap()).one_minus();
            }
            let mut rhs = Rational::zero();
            for r in 0..=2 * n {
                let term = elementary_e::<Rational>(n, r as i64).eval(&x).unwrap() * &y.powu(r as u64);
                rhs = if r % 2 == 0 { rhs + &term } else { rhs - &term };
            }
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn basis_expansion() {
    let basis: Vec<P> = (0..=2).rev().map(|r| monomial_m(2, r).unwrap()).collect();
    let c = express_in_basis(&elementary_e(2, 2), &basis).unwrap();
    assert_eq!(c, vec![Rational::one(), Rational::zero(), Rational::from_i64(2)]);
    let c = express_in_basis(&P::one(2), &basis).unwrap();
    assert_eq!(c, vec![Rational::zero(), Rational::zero(), Rational::one()]);
    assert_eq!(express_in_basis(&P::var(2, 0), &basis), Err(Error::NotInSpan));
    assert_eq!(elementary_e::<Rational>(2, 2).m_coefficients().unwrap(), vec![
        Rational::from_i64(2),
        Rational::zero(),
        Rational::one()
    ]);
}

#[test]
fn binomial_division_roundtrip_and_failure() {
    let f = elementary_e::<Rational>(3, 2);
    let c = q(-7, 3);
    for v in [vec![2, 0, 0], vec![0, -2, 0], vec![1, -1, 0], vec![0, 1, 1]] {
        let g = f.mul_binomial(&c, &v);
        assert_eq!(g.div_binomial(&c, &v).unwrap(), f);
    }
    assert!(matches!(f.div_binomial(&c, &[1, 0, 0]), Err(Error::OperatorNotPolynomial(_))));
}

#[test]
fn json_roundtrip() {
    let p = elementary_e::<Rational>(2, 2).scale(&q(3, 4));
    let v = p.to_json();
    assert_eq!(v["n"], 2);
    assert_eq!(v["terms"][0]["coeff"], "3/4");
    assert_eq!(P::from_json(&v).unwrap(), p);
}

proptest! {
    #[test]
    fn arithmetic_commutes_with_evaluation(
        seed in 0u64..1000,
        n in 1usize..=3,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rand_poly = |rng: &mut ChaCha8Rng| {
            let terms: Vec<(Vec<i32>, Rational)> = (0..5)
                .map(|_| ((0..n).map(|_| rng.gen_range(-2..=2)).collect(), q(rng.gen_range(-9..=9), rng.gen_range(1..=9))))
                .collect();
            P::from_terms(n, terms)
        };
        let f = rand_poly(&mut rng);
        let g = rand_poly(&mut rng);
        let x = rand_point(&mut rng, n);
        let (fx, gx) = (f.eval(&x).unwrap(), g.eval(&x).unwrap());
        prop_assert_eq!((&f * &g).eval(&x).unwrap(), fx.clone() * &gx);
        prop_assert_eq!((f.clone() + &g).eval(&x).unwrap(), fx.clone() + &gx);
        prop_assert_eq!((f - &g).eval(&x).unwrap(), fx - &gx);
    }
}
