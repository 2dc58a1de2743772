use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::error::Error;
use crate::qkernel::{qpoch, ParamSet};
use crate::scalar::{ExactScalar, Rational};
use crate::symlaurent::{elementary_e, monomial_m, LaurentPoly};

type Q = Rational;

fn params(seed: u64, n: usize) -> ParamSet<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ParamSet::random(&mut rng, &blacklist(n))
}

fn rq(rng: &mut ChaCha8Rng) -> Q {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    Q::new(sign * rng.gen_range(2..=97), rng.gen_range(2..=97)).unwrap()
}

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d).unwrap()
}

#[test]
fn operator_kills_constants() {
    let ps = params(1, 3);
    assert!(apply_operator(&LaurentPoly::<Q>::one(3), &ps).unwrap().is_zero());
}

#[test]
fn operator_rejects_non_invariant_input() {
    let ps = params(2, 2);
    let err = apply_operator(&LaurentPoly::<Q>::var(2, 0), &ps).unwrap_err();
    assert!(matches!(err, Error::OperatorNotPolynomial(_)));
}

#[test]
fn eigenvalue_examples() {
    let ps = params(3, 3);
    assert!(eigenvalue(3, 0, &ps).is_zero());
    let qq = ps.q();
    let want = ps.alpha_sq() * &(qq.clone() - &Q::one()) + &(qq.inv().unwrap() - &Q::one());
    assert_eq!(eigenvalue(1, 1, &ps), want);
    let ev: Vec<Q> = (0..=3).map(|r| eigenvalue(3, r, &ps)).collect();
    for i in 0..4 {
        for j in 0..i {
            assert_ne!(ev[i], ev[j]);
        }
    }
}

#[test]
fn rank_one_polynomial() {
    let ps = params(4, 1);
    let ParamSet { a, b, c, d, .. } = ps.clone();
    let e1 = a.clone() + &b + &c + &d;
    let e3 = a.clone() * &b * &c + &(a.clone() * &b * &d) + &(a.clone() * &c * &d) + &(b.clone() * &c * &d);
    let shift = (e1 - &e3).checked_div(&ps.abcd().one_minus()).unwrap();
    let want = monomial_m::<Q>(1, 1).unwrap() - &LaurentPoly::constant(1, shift);
    assert_eq!(oracle_p(1, 1, &ps).unwrap(), want);
    assert_eq!(oracle_p(1, 0, &ps).unwrap(), LaurentPoly::one(1));
}

#[test]
fn eigen_residual_and_invariance() {
    for n in 1..=3 {
        let ps = params(5 + n as u64, n);
        for (r, p) in oracle_all(n, &ps).unwrap().into_iter().enumerate() {
            let lhs = apply_operator(&p, &ps).unwrap();
            assert_eq!(lhs, p.scale(&eigenvalue(n, r, &ps)), "n={n} r={r}");
            assert!(p.is_w_invariant());
        }
    }
}

#[test]
fn fourfold_variants_match_oracle() {
    for seed in 0..2 {
        for n in 1..=3 {
            let ps = params(10 + seed * 7 + n as u64, n);
            let all = oracle_all(n, &ps).unwrap();
            for r in 0..=n {
                assert_eq!(p_via_fourfold(n, r, &ps, Variant::Hs).unwrap(), all[r], "HS n={n} r={r}");
                assert_eq!(p_via_fourfold(n, r, &ps, Variant::HsNew).unwrap(), all[r], "HSnew n={n} r={r}");
            }
        }
    }
}

#[test]
fn coefficient_basics() {
    let ps = params(20, 3);
    let cb = CoefficientBundle::new(ps.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..3 {
        let s = rq(&mut rng);
        assert!(cb.chat_e(0, 0, &s).unwrap().is_one());
        assert!(cb.chat_o(0, 0, &s).unwrap().is_one());
        assert!(cb.chat_o_new(0, 0, &s).unwrap().is_one());
        assert_eq!(cb.g(&s).unwrap(), cb.g1(&s).unwrap() - &cb.g1(&(s.clone() * &ps.t())).unwrap());
        let (a, c, tau) = (ps.a.clone(), ps.c.clone(), ps.tau.clone());
        let two = CoefficientBundle::new(ps.with_abcd(a.clone(), -a, c.clone(), -c).unwrap());
        assert!(two.g(&s).unwrap().is_zero());
        let bottom = CoefficientBundle::new(ps.with_abcd(tau.clone(), -tau, Q::one(), -Q::one()).unwrap());
        assert!(bottom.f(&s).unwrap().is_one());
    }
    assert!(cb.g1(&Q::one()).unwrap().is_zero());
}

#[test]
fn watson_bridge() {
    let ps = params(22, 3);
    let cb = CoefficientBundle::new(ps);
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..3 {
        let s = rq(&mut rng);
        for m in 0..=6 {
            let new: Q = (0..=m).fold(Q::zero(), |acc, i| acc + &cb.chat_o_new(i, m - i, &s).unwrap());
            let old: Q = (0..=m).fold(Q::zero(), |acc, i| acc + &cb.chat_o(i, m - i, &s).unwrap());
            assert_eq!(new, old, "m={m}");
        }
    }
}

#[test]
fn recursive_structure() {
    let ps = params(24, 3);
    let cb = CoefficientBundle::new(ps.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..3 {
        let s = rq(&mut rng);
        for x in 0..=3 {
            for y in 0..=3 {
                let e = cb.chat_e(x, 0, &s).unwrap() * &cb.chat_e(0, y, &(s.clone() * &ps.t_pow(2 * x))).unwrap();
                assert_eq!(cb.chat_e(x, y, &s).unwrap(), e);
                let o = cb.chat_o_new(x, 0, &s).unwrap() * &cb.chat_o_new(0, y, &(s.clone() * &ps.t_pow(x))).unwrap();
                assert_eq!(cb.chat_o_new(x, y, &s).unwrap(), o);
            }
        }
    }
}

/// The coefficient products exactly as displayed, with no cancellation.
fn raw_chat_e(ps: &ParamSet<Q>, k: i64, l: i64, s: &Q) -> Q {
    let (a, c) = (&ps.a, &ps.c);
    let t = ps.t();
    let t2 = t.square();
    let c2 = c.square();
    let a2 = a.square();
    let u = |x: Q, b: &Q, m: i64| qpoch(&x, b, m).unwrap();
    let num = u(t.clone() * &c2 * &a2.inv().unwrap(), &t2, k)
        * &u(s.clone() * &c2 * &t, &t2, k)
        * &u(s.square() * &c2.square() * &t2.inv().unwrap(), &t2, k)
        * &u(c2.inv().unwrap(), &t, l)
        * &u(s.clone() * &t.inv().unwrap(), &t, 2 * k + l)
        * &(s.clone() * &ps.t_pow(2 * k + 2 * l - 1)).one_minus()
        * &a2.powu(k as u64)
        * &c2.powu(l as u64);
    let den = u(t2.clone(), &t2, k)
        * &u(s.clone() * &c2 * &t.inv().unwrap(), &t2, k)
        * &u(s.square() * &a2 * &c2 * &t.inv().unwrap(), &t2, k)
        * &u(t.clone(), &t, l)
        * &u(s.clone() * &c2, &t, 2 * k + l)
        * &(s.clone() * &t.inv().unwrap()).one_minus();
    num.checked_div(&den).unwrap()
}

fn raw_chat_o_new(ps: &ParamSet<Q>, i: i64, j: i64, s: &Q) -> Q {
    let ParamSet { a, b, c, d, .. } = ps;
    let t = ps.t();
    let t2 = t.square();
    let u = |x: Q, base: &Q, m: i64| qpoch(&x, base, m).unwrap();
    let ti = |k: i64| ps.t_pow(k);
    let a2 = a.square();
    let v = -(s.square() * &a2 * c * d * &ti(-3));
    let head = (u(-(a.clone() * &b.inv().unwrap()), &t, i)
        * &u(s.clone(), &t, i)
        * &u(s.clone() * a * c * &ti(-1), &t, i)
        * &u(s.clone() * a * d * &ti(-1), &t, i)
        * &u(s.clone() * c * d * &ti(-1), &t, i)
        * &u(v.clone(), &t, i)
        * &b.powu(i as u64))
        .checked_div(
            &(u(t.clone(), &t, i)
                * &u(s.square() * &ps.abcd() * &ti(-2), &t, i)
                * &u(v.clone(), &t2, i)
                * &u(v * &t, &t2, i)),
        )
        .unwrap();
    let s2 = s.clone() * &ti(i);
    let w = s2.square() * &a2 * &c.square() * &ti(-3);
    let tail = (u(-(c.clone() * &d.inv().unwrap()), &t, j)
        * &u(s2.clone(), &t, j)
        * &u(-(s2.clone() * &a2 * &ti(-1)), &t, j)
        * &u(w.clone(), &t, j)
        * &d.powu(j as u64))
        .checked_div(&(u(t.clone(), &t, j) * &u(-(s2.square() * &a2 * c * d * &ti(-2)), &t, j) * &u(w, &t2, j)))
        .unwrap();
    head * &tail
}

#[test]
fn cancelled_forms_equal_raw_displays() {
    let ps = params(26, 3);
    let cb = CoefficientBundle::new(ps.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    for _ in 0..3 {
        let s = rq(&mut rng);
        for x in 0..=3 {
            for y in 0..=3 {
                assert_eq!(cb.chat_e(x, y, &s).unwrap(), raw_chat_e(&ps, x, y, &s));
                assert_eq!(cb.chat_o_new(x, y, &s).unwrap(), raw_chat_o_new(&ps, x, y, &s));
            }
        }
    }
    // at s = t the raw display is 0/0, the cancelled one is finite
    let t = ps.t();
    assert!(cb.chat_e(1, 1, &t).is_ok());
}

#[test]
fn vanishing_pattern_on_strata() {
    let ps = params(28, 3);
    let s = q(-17, 31);
    let at = |st: Stratum| CoefficientBundle::new(st.params(&ps).unwrap());
    for i in 1..=3 {
        assert!(at(Stratum::III).chat_o_new(i, 0, &s).unwrap().is_zero());
        assert!(at(Stratum::II).chat_o_new(i, 0, &s).unwrap().is_zero());
        assert!(at(Stratum::II).chat_o_new(0, i, &s).unwrap().is_zero());
        assert!(at(Stratum::I).chat_e(i, 0, &s).unwrap().is_zero());
        assert!(at(Stratum::E).chat_e(0, i, &s).unwrap().is_zero());
        assert!(!at(Stratum::IV).chat_o_new(i, 0, &s).unwrap().is_zero());
    }
}

#[test]
fn bottom_stratum_gives_elementary_polynomials() {
    for n in 1..=3 {
        let ps = params(29 + n as u64, n);
        for r in 0..=n {
            assert_eq!(strata_p(n, r, &ps, Stratum::E).unwrap(), elementary_e::<Q>(n, r as i64));
        }
    }
}

#[test]
fn strata_chain_both_directions() {
    for n in 1..=3 {
        let ps = params(33 + n as u64, n);
        for upper in [Stratum::IV, Stratum::III, Stratum::II, Stratum::I] {
            let (fwd, inv) = check_step(n, &ps, upper).unwrap();
            assert!(fwd, "step {} n={n}", upper.label());
            assert!(inv, "inverse {} n={n}", upper.label());
        }
    }
}

/// At `(p, -p, -1, a)` only the `l = 0` and `i = 0` terms survive.
#[test]
fn bb_family_collapses_to_twofold_sum() {
    let base = params(40, 3);
    let p = base.p.clone();
    let ps = base.with_abcd(p.clone(), -p, -Q::one(), base.a.clone()).unwrap();
    let cb = CoefficientBundle::new(ps.clone());
    let s = q(23, 19);
    for x in 0..=3 {
        for y in 1..=3 {
            assert!(cb.chat_e(x, y, &s).unwrap().is_zero());
            assert!(cb.chat_o_new(y, x, &s).unwrap().is_zero());
        }
    }
    let n = 3;
    for r in 0..=n {
        let mut twofold = LaurentPoly::zero(n);
        let s0 = ps.t_pow(n as i64 - r as i64 + 1);
        for j in 0..=r as i64 {
            for k in 0..=(r as i64 - j) / 2 {
                let sign = if j % 2 == 0 { Q::one() } else { -Q::one() };
                let w = sign
                    * &cb.chat_o_new(0, j, &s0).unwrap()
                    * &cb.chat_e(k, 0, &(s0.clone() * &ps.t_pow(j))).unwrap();
                twofold = twofold + &elementary_e::<Q>(n, r as i64 - j - 2 * k).scale(&w);
            }
        }
        assert_eq!(twofold, p_via_fourfold(n, r, &ps, Variant::HsNew).unwrap());
        assert_eq!(twofold, oracle_p(n, r, &ps).unwrap());
    }
}

#[test]
fn blacklist_rejects_special_points() {
    let ps = params(41, 2);
    let cert = blacklist::<Q>(2);
    assert!(cert.check(&ps).is_ok());
    // c^2 = t makes sc^2/t = 1 at s = 1
    let bad = ps.with_abcd(ps.a.clone(), ps.b.clone(), ps.tau.clone(), ps.d.clone()).unwrap();
    assert!(matches!(cert.check(&bad), Err(Error::NonGeneric(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn factorization_at_random_points(num in -90i64..90, den in 2i64..90, x in 0i64..4, y in 0i64..4) {
        prop_assume!(num != 0 && num.abs() != den);
        let ps = params(42, 2);
        let cb = CoefficientBundle::new(ps.clone());
        let s = q(num, den);
        if let (Ok(full), Ok(head), Ok(tail)) = (
            cb.chat_o_new(x, y, &s),
            cb.chat_o_new_i(x, &s),
            cb.chat_o_new_j(y, &(s.clone() * &ps.t_pow(x))),
        ) {
            prop_assert_eq!(full, head * &tail);
        }
    }
}
