use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::koornwinder::{blacklist, CoefficientBundle};
use crate::scalar::Rational;

type Q = Rational;

fn rq(rng: &mut ChaCha8Rng) -> Q {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    Q::new(sign * rng.gen_range(2..=97), rng.gen_range(2..=97)).unwrap()
}

fn params(seed: u64, n: usize) -> ParamSet<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ParamSet::random(&mut rng, &blacklist(n))
}

const SIZE: usize = 8;

#[test]
fn mutual_inversions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let (u, v, x, y, q) = (rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng));
        let m = mat_m(&u, &v, &x, &y, &q, SIZE).unwrap();
        assert!(m.mul(&mat_m(&u, &v, &y, &x, &q, SIZE).unwrap()).unwrap().is_identity());
        let mt = mat_mtilde(&u, &v, &x, &y, &q, SIZE).unwrap();
        assert!(mt.mul(&mat_mtilde(&u, &v, &y, &x, &q, SIZE).unwrap()).unwrap().is_identity());
        let k = mat_k(&x, &y, &q, SIZE).unwrap();
        assert!(k.mul(&mat_k(&y, &x, &q, SIZE).unwrap()).unwrap().is_identity());
        let us = [rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng)];
        let nn = mat_n(&us, &v, &x, &y, &q, SIZE).unwrap();
        assert!(nn.mul(&mat_n(&us, &v, &y, &x, &q, SIZE).unwrap()).unwrap().is_identity());
    }
}

#[test]
fn composition_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..3 {
        let (u, v, x, y, z, q) = (rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng));
        let lhs = mat_m(&u, &v, &x, &y, &q, SIZE).unwrap().mul(&mat_m(&u, &v, &y, &z, &q, SIZE).unwrap()).unwrap();
        assert_eq!(lhs, mat_m(&u, &v, &x, &z, &q, SIZE).unwrap());
        let lhs = mat_k(&x, &y, &q, SIZE).unwrap().mul(&mat_k(&y, &z, &q, SIZE).unwrap()).unwrap();
        assert_eq!(lhs, mat_k(&x, &z, &q, SIZE).unwrap());
    }
}

#[test]
fn closed_forms_match_conjugations() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        let (uh, vh, x, y, t) = (rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng));
        assert_eq!(
            mat_mtilde(&uh, &vh, &x, &y, &t, SIZE).unwrap(),
            mtilde_by_conjugation(&uh, &vh, &x, &y, &t, SIZE).unwrap()
        );
        let us = [rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng)];
        assert_eq!(mat_n(&us, &vh, &x, &y, &t, SIZE).unwrap(), n_by_conjugation(&us, &vh, &x, &y, &t, SIZE).unwrap());
    }
}

#[test]
fn small_entries() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (u, v, x, y, q) = (rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng), rq(&mut rng));
    let m = mat_m(&u, &v, &x, &y, &q, 4).unwrap();
    assert!((0..4).all(|i| m.get(i, i).is_one()));
    assert!(m.get(1, 0).is_zero() && m.get(3, 0).is_zero());
    let want = y.clone() * &v * &(x.clone() * &y.inv().unwrap()).one_minus() * &q.one_minus().inv().unwrap()
        * &u.one_minus()
        * &(u.clone() * &q).one_minus()
        * &(u.clone() * &x * &q).one_minus().inv().unwrap()
        * &(u.clone() * &y * &q).one_minus().inv().unwrap();
    assert_eq!(*m.get(2, 0), want);
}

/// Entries of the four chain matrices against the coefficient functions.
#[test]
fn chain_entries_are_transition_coefficients() {
    for n in 1..=5 {
        let ps = params(20 + n as u64, n);
        let cb = CoefficientBundle::new(ps.clone());
        let subs = chain_substitutions(n, &ps).unwrap();
        let mats: Vec<_> = subs.iter().map(|s| s.matrix(&ps, n + 1).unwrap()).collect();
        for r in 0..=n {
            let s = ps.t_pow(n as i64 - r as i64 + 1);
            for i in 0..=r {
                let sign = if i % 2 == 0 { Q::one() } else { -Q::one() };
                let ii = i as i64;
                assert_eq!(*mats[0].get(r, r - i), sign.clone() * &cb.chat_o_new(ii, 0, &s).unwrap(), "N1 n={n} r={r} i={i}");
                assert_eq!(*mats[1].get(r, r - i), sign * &cb.chat_o_new(0, ii, &s).unwrap(), "N2 n={n} r={r} i={i}");
                if 2 * i <= r {
                    assert_eq!(*mats[2].get(r, r - 2 * i), cb.chat_e(ii, 0, &s).unwrap(), "M~ n={n} r={r} i={i}");
                    assert_eq!(*mats[3].get(r, r - 2 * i), cb.chat_e(0, ii, &s).unwrap(), "M n={n} r={r} i={i}");
                }
            }
        }
    }
}

#[test]
fn sans_entries_match_coefficient_sums() {
    for n in 1..=4 {
        let ps = params(30 + n as u64, n);
        let cb = CoefficientBundle::new(ps.clone());
        let sm = sans_m(n, &ps, n + 1).unwrap();
        let sn = sans_n(n, &ps, n + 1).unwrap();
        for i in 0..=n {
            assert!(sm.get(i, i).is_one() && sn.get(i, i).is_one());
            let t_at = |k: i64| ps.t_pow(n as i64 - i as i64 + 1 + k);
            for j in 0..=i {
                let d = (i - j) as i64;
                let mut want_m = Q::zero();
                if d % 2 == 0 {
                    for l in 0..=d / 2 {
                        want_m = want_m + &(cb.chat_e(l, 0, &t_at(0)).unwrap() * &cb.chat_e(0, d / 2 - l, &t_at(2 * l)).unwrap());
                    }
                }
                assert_eq!(*sm.get(i, j), want_m);
                let mut want_n = Q::zero();
                for l in 0..=d {
                    want_n = want_n + &(cb.chat_o_new(l, 0, &t_at(0)).unwrap() * &cb.chat_o_new(0, d - l, &t_at(l)).unwrap());
                }
                if d % 2 == 1 {
                    want_n = -want_n;
                }
                assert_eq!(*sn.get(i, j), want_n);
            }
        }
    }
}

/// Row `r` of `N M` holds `B(n, r, p)`; the reversed product does not.
#[test]
fn b_series_is_the_n_times_m_product() {
    let mut orders_differ = false;
    for n in 1..=4 {
        let ps = params(40 + n as u64, n);
        let nm = b_matrix(n, &ps, n + 1).unwrap();
        let mn = sans_m(n, &ps, n + 1).unwrap().mul(&sans_n(n, &ps, n + 1).unwrap()).unwrap();
        for r in 0..=n {
            assert!(b_series(n, r as i64, 0, &ps).unwrap().is_one());
            for p in 0..=r {
                let b = b_series(n, r as i64, p as i64, &ps).unwrap();
                assert_eq!(*nm.get(r, r - p), b, "n={n} r={r} p={p}");
                orders_differ |= *mn.get(r, r - p) != b;
            }
        }
    }
    assert!(orders_differ);
}

#[test]
fn series_match_sans_entries_and_sums() {
    for n in 1..=5 {
        let ps = params(50 + n as u64, n);
        let sm = sans_m(n, &ps, n + 1).unwrap();
        let sn = sans_n(n, &ps, n + 1).unwrap();
        for r in 0..=n {
            let s = ps.t_pow(n as i64 - r as i64 + 1);
            for l in 0..=(r / 2) {
                assert_eq!(m_series(&s, l as i64, &ps).unwrap(), *sm.get(r, r - 2 * l));
            }
            for j in 0..=r {
                assert_eq!(n_series(&s, j as i64, &ps).unwrap(), *sn.get(r, r - j));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let ps = params(59, 3);
    for _ in 0..3 {
        let s = rq(&mut rng);
        for l in 0..=5 {
            assert_eq!(m_series(&s, l, &ps).unwrap(), m_series_by_sum(&s, l, &ps).unwrap());
            assert_eq!(n_series(&s, l, &ps).unwrap(), n_series_by_sum(&s, l, &ps).unwrap());
        }
        assert!(m_series(&s, 0, &ps).unwrap().is_one() && n_series(&s, 0, &ps).unwrap().is_one());
    }
}

#[test]
fn four_and_five_term_relations() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for seed in 0..3 {
        let ps = params(60 + seed, 3);
        let s = rq(&mut rng);
        for l in 0..=6 {
            assert!(four_term_residual(&s, l, &ps).unwrap().is_zero(), "four-term l={l}");
            let (r1, r0) = mformula_residuals(&s, l, &ps).unwrap();
            assert!(r1.is_zero() && r0.is_zero(), "mformula k={l}");
            assert!(five_term_residual(&s, l, &ps).unwrap().is_zero(), "five-term j={l}");
            let (n1r, n0r) = nrel_residuals(&s, l, &ps).unwrap();
            assert!(n1r.is_zero() && n0r.is_zero(), "nrel i={l}");
        }
    }
}

#[test]
fn printed_n0_differs_and_breaks_its_recurrence() {
    let ps = params(70, 3);
    let s = Q::new(-13, 29).unwrap();
    assert_ne!(n0_printed(&s, 2, &ps).unwrap(), n0(&s, 2, &ps).unwrap());
    assert!(!n0rel_residual(&s, 2, &ps, n0_printed).unwrap().is_zero());
    assert!(n0rel_residual(&s, 2, &ps, n0).unwrap().is_zero());
}

#[test]
fn strb_relation() {
    for n in 1..=6 {
        let ps = params(80 + n as u64, n);
        for r in 0..=n as i64 {
            for p in 0..=r {
                assert!(strb_residual(n, r, p, &ps).unwrap().is_zero(), "n={n} r={r} p={p}");
            }
        }
    }
}


