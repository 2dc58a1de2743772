use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::scalar::{RatFunc, Rational};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn brute_phi(nums: &[Rational], dens: &[Rational], q: &Rational, z: &Rational, terms: usize) -> Rational {
    let mut sum = Rational::zero();
    for n in 0..=terms as i64 {
        let top = qpoch_multi(nums, q, n).unwrap();
        if top.is_zero() {
            continue;
        }
        let mut bottom = qpoch(q, q, n).unwrap();
        bottom = bottom * &qpoch_multi(dens, q, n).unwrap();
        sum = sum + &(top * &z.powu(n as u64)).checked_div(&bottom).unwrap();
    }
    sum
}

#[test]
fn pochhammer_examples() {
    let (z, q) = (r(2, 1), r(3, 1));
    assert_eq!(qpoch(&z, &q, 0).unwrap(), Rational::one());
    assert_eq!(qpoch(&z, &q, 2).unwrap(), r(5, 1));
    let (z, q) = (r(5, 7), r(3, 11));
    assert_eq!(qpoch(&z, &q, -1).unwrap(), (z.clone() * &q.inv().unwrap()).one_minus().inv().unwrap());
    // (q;q)_{-1} has the factor 1 - q^{-1} q = 0
    assert!(matches!(qpoch(&q, &q, -1), Err(Error::PochhammerPole(_))));
}

#[test]
fn qbinom_examples() {
    let t = RatFunc::indeterminate();
    assert!(qbinom(5, 0, &t).unwrap().is_one());
    assert_eq!(qbinom(2, 1, &t).unwrap().to_string(), "t + 1");
    assert_eq!(qbinom(4, 2, &t).unwrap().to_string(), "t^4 + t^3 + 2*t^2 + t + 1");
    assert!(matches!(qbinom(3, -1, &t), Err(Error::Domain(_))));
    // outside 0 <= j <= m the product formula takes over
    assert_eq!(qbinom(2, 3, &t).unwrap(), RatFunc::zero());
    assert_eq!(qbinom(-1, 2, &t).unwrap(), qbinom_product(-1, 2, &t));
}

fn qbinom_product(m: i64, j: i64, q: &RatFunc) -> RatFunc {
    let mut acc = RatFunc::one();
    for k in 1..=j {
        acc = acc * &qint(m - k + 1, q).unwrap().checked_div(&qint(k, q).unwrap()).unwrap();
    }
    acc
}

#[test]
fn ordinary_binomial_falling_factorial() {
    assert_eq!(binom(5, 2).unwrap(), 10.into());
    assert_eq!(binom(3, 5).unwrap(), 0.into());
    assert_eq!(binom(-2, 3).unwrap(), (-4).into());
    assert!(binom(4, -1).is_err());
}

#[test]
fn qbinom_factorial_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        let q = r(rand::Rng::gen_range(&mut rng, 2..=97), rand::Rng::gen_range(&mut rng, 2..=97));
        for m in 0..=8 {
            for j in 0..=m {
                let lhs = qbinom(m, j, &q).unwrap() * &qfact(j, &q).unwrap() * &qfact(m - j, &q).unwrap();
                assert_eq!(lhs, qfact(m, &q).unwrap());
            }
        }
    }
}

#[test]
fn terminating_phi_matches_brute_force_and_vandermonde() {
    let q = r(3, 5);
    let b = r(7, 2);
    let c = r(-4, 9);
    for n in 0..6 {
        let top = q.powi(-n).unwrap();
        let z = c.clone() * &q.powu(n as u64) * &b.inv().unwrap();
        let s = phi(&[top.clone(), b.clone()], std::slice::from_ref(&c), &q, &z, 50).unwrap();
        assert_eq!(s, brute_phi(&[top, b.clone()], std::slice::from_ref(&c), &q, &z, 50));
        let rhs = qpoch(&(c.clone() * &b.inv().unwrap()), &q, n).unwrap() * &qpoch(&c, &q, n).unwrap().inv().unwrap();
        assert_eq!(s, rhs);
    }
    // a unit numerator kills every term beyond n = 0
    assert!(phi(&[Rational::one(), r(2, 3)], &[r(5, 7)], &q, &r(9, 4), 10).unwrap().is_one());
}

#[test]
fn phi_reports_poles() {
    let q = r(1, 2);
    // denominator parameter q^{-1} vanishes at n = 1
    assert!(matches!(phi(&[r(1, 3)], &[r(2, 1)], &q, &r(1, 5), 4), Err(Error::HypergeometricPole(2))));
}

#[test]
fn well_poised_root_free_matches_root_expansion() {
    let q = r(2, 7);
    let root = r(-3, 5);
    let a1 = root.square();
    for m in 0..5 {
        let upper = [r(11, 3), r(-2, 9), r(5, 4), r(7, 6), q.powi(-m).unwrap()];
        let z = r(3, 13);
        let lhs = very_well_poised_w(&a1, &upper, &q, &z, 30).unwrap();
        let rhs = very_well_poised_w_from_root(&root, &upper, &q, &z, 30).unwrap();
        assert_eq!(lhs, rhs);
        if m == 0 {
            assert!(lhs.is_one());
        }
    }
}

/// Watson's 8W7 to 4phi3 transformation at the instance used to relate the two
/// odd coefficient families.
#[test]
fn watson_instance() {
    let cert = GenericityCertificate::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..3 {
        let ps = ParamSet::random(&mut rng, &cert);
        let (a, b, c, d, t) = (&ps.a, &ps.b, &ps.c, &ps.d, ps.t());
        let s = r(rand::Rng::gen_range(&mut rng, 2..=97), rand::Rng::gen_range(&mut rng, 2..=97));
        let t2 = t.square();
        let t3 = t2.clone() * &t;
        let tinv = t.inv().unwrap();
        let sq = s.square();
        for m in 0..=6i64 {
            let tm = t.powi(m).unwrap();
            let tmi = tm.inv().unwrap();
            let big_a = -(sq.clone() * &a.square() * c * d * &t3.inv().unwrap());
            let upper = [
                tm.clone() * &sq * &a.square() * &c.square() * &t3.inv().unwrap(),
                s.clone() * a * d * &tinv,
                -(a.clone() * &b.inv().unwrap()),
                s.clone() * c * d * &tinv,
                tmi.clone(),
            ];
            let z = -(t.clone() * b * &c.inv().unwrap());
            let lhs = very_well_poised_w(&big_a, &upper, &t, &z, 40).unwrap();

            let sab = s.clone() * a * b * &tinv;
            let pre_num = qpoch_multi(&[big_a.clone() * &t, sab.clone()], &t, m).unwrap();
            let pre_den = qpoch_multi(
                &[sq.clone() * &ps.abcd() * &t2.inv().unwrap(), -(s.clone() * &a.square() * &tinv)],
                &t,
                m,
            )
            .unwrap();
            let sac = s.clone() * a * c;
            let nums = [
                tmi.clone(),
                -(a.clone() * &b.inv().unwrap()),
                s.clone() * c * d * &tinv,
                -(tmi.clone() * &t2 * &sac.inv().unwrap()),
            ];
            let dens = [
                -(tmi.clone() * &t * d * &c.inv().unwrap()),
                -(sac.clone() * &tinv),
                tmi.clone() * &t2 * &(s.clone() * a * b).inv().unwrap(),
            ];
            let rhs = pre_num.checked_div(&pre_den).unwrap() * &phi(&nums, &dens, &t, &t, 40).unwrap();
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }
}

#[test]
fn ratfunc_multiply_divide_roundtrip() {
    let x = RatFunc::indeterminate();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let rand_rf = |rng: &mut ChaCha8Rng| {
        let mut num = RatFunc::zero();
        let mut den = RatFunc::zero();
        for k in 0..4u64 {
            num = num + &(RatFunc::from_i64(rand::Rng::gen_range(rng, -9..=9)) * &x.powu(k));
            den = den + &(RatFunc::from_i64(rand::Rng::gen_range(rng, 1..=9)) * &x.powu(k));
        }
        num.checked_div(&den).unwrap()
    };
    let mut seen = 0;
    while seen < 20 {
        let f = rand_rf(&mut rng);
        let g = rand_rf(&mut rng);
        if g.is_zero() {
            continue;
        }
        assert_eq!((f.clone() * &g).checked_div(&g).unwrap(), f);
        seen += 1;
    }
}

#[test]
fn certificate_rejects_blacklisted_points() {
    let cert = GenericityCertificate::new().family(BlacklistFamily::new("1 - ab t^k", 1, [0, 1, 1, 0, 0], 4));
    let ok = ParamSet::new(r(2, 3), r(5, 7), r(3, 1), r(5, 1), r(7, 1), r(11, 1)).unwrap();
    assert!(cert.check(&ok).is_ok());
    // ab = tau^{-2}
    let bad = ParamSet::new(r(2, 3), r(5, 7), r(7, 5), r(7, 5), r(7, 1), r(11, 1)).unwrap();
    assert!(matches!(cert.check(&bad), Err(Error::NonGeneric(_))));
    assert!(ParamSet::new(r(0, 1), r(1, 2), r(1, 3), r(1, 4), r(1, 5), r(1, 6)).is_err());
}

proptest! {
    #[test]
    fn pochhammer_splits(k in -3i64..=3, l in -3i64..=3, zn in 2i64..=97, zd in 2i64..=97, qn in 2i64..=97, qd in 2i64..=97) {
        let z = r(zn, zd);
        let q = r(qn, qd);
        prop_assume!(q != Rational::one());
        let lhs = qpoch(&z, &q, k + l);
        let rhs = qpoch(&z, &q, k).and_then(|a| Ok(a * &qpoch(&(q.powi(k)? * &z), &q, l)?));
        if let (Ok(x), Ok(y)) = (lhs, rhs) { prop_assert_eq!(x, y) }
    }
}
