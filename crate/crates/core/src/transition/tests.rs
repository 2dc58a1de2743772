use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::koornwinder::{blacklist, oracle_all};
use crate::scalar::{RatFunc, Rational};
use crate::symlaurent::monomial_m;

type Q = Rational;

fn params(seed: u64, n: usize) -> ParamSet<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ParamSet::random(&mut rng, &blacklist(n))
}

/// `tau` is the indeterminate; `p, a, b, c, d` are random rationals.
fn symbolic(seed: u64) -> ParamSet<RatFunc> {
    let ps = params(seed, 4);
    let mut out: ParamSet<RatFunc> = ps.lift();
    out.tau = RatFunc::indeterminate();
    out
}

#[test]
fn first_entries_symbolically() {
    let ps = symbolic(1);
    let cb = CoefficientBundle::new(ps.clone());
    let c = build_c(5, &ps).unwrap();
    let t = ps.t();
    let g1 = |k: i64| cb.g1(&ps.t_pow(k)).unwrap();
    let f = |k: i64| cb.f(&ps.t_pow(k)).unwrap();
    let g = |k: i64| cb.g(&ps.t_pow(k)).unwrap();
    assert!(t == ps.t_pow(1));
    for i in 0..5 {
        assert!(c.get(i, i).is_one());
    }
    assert_eq!(*c.get(0, 1), -g1(1));
    assert_eq!(*c.get(1, 2), -g1(2));
    assert_eq!(*c.get(2, 3), -g1(3));
    assert_eq!(*c.get(0, 2), g1(1).square() + &f(0));
    assert_eq!(*c.get(0, 3), -(g1(1).powu(3)) - &(g1(1) * &f(0)) - &(g1(2) * &f(0)));
    assert_eq!(*c.get(1, 3), g1(1).square() + &f(0) - &(g1(2) * &g(1)) + &f(1));
    assert!(c.recursion_holds().unwrap());
}

#[test]
fn binomial_construction_matches_recursion() {
    for seed in 0..3 {
        let big = build_c(7, &params(10 + seed, 6)).unwrap();
        for n in 0..=5 {
            let ps = params(10 + seed, 6);
            let cn = build_cn_from_b(n, &ps).unwrap();
            assert!(cn.agrees_with_block_of(&big), "n={n}");
            assert!(cn.recursion_holds().unwrap(), "n={n}");
        }
    }
}

#[test]
fn rank_blocks_are_stable() {
    let ps = params(20, 5);
    for n in 0..=4 {
        let small = build_cn_from_b(n, &ps).unwrap();
        let large = build_cn_from_b(n + 1, &ps).unwrap();
        assert!(small.agrees_with_block_of(&large), "n={n}");
    }
}

#[test]
fn combinatorial_entries() {
    for seed in 0..3 {
        let ps = params(30 + seed, 4);
        let c = build_c(9, &ps).unwrap();
        for r in 0..=4 {
            assert!(c_combinatorial(r, 0, &ps).unwrap().is_one());
            for l in 1..=4 {
                assert_eq!(c_combinatorial(r, l, &ps).unwrap(), *c.get(r, r + l), "r={r} l={l}");
            }
        }
    }
}

#[test]
fn polynomials_from_the_matrix() {
    let ps = params(40, 3);
    let cb = CoefficientBundle::new(ps.clone());
    let p11 = p_via_c(1, 1, &ps).unwrap();
    let want = monomial_m::<Q>(1, 1).unwrap() - &LaurentPoly::constant(1, cb.g1(&ps.t()).unwrap());
    assert_eq!(p11, want);
    for n in 1..=3 {
        let all = oracle_all(n, &ps).unwrap();
        for r in 0..=n {
            assert_eq!(p_via_c(n, r, &ps).unwrap(), all[r], "n={n} r={r}");
        }
    }
}

#[test]
fn branching_rule() {
    for n in 2..=3 {
        let ps = params(50 + n as u64, n);
        for r in 0..=n {
            assert!(branch_check(n, r, &ps).unwrap(), "n={n} r={r}");
        }
    }
}

#[test]
fn latex_block() {
    let ps = params(60, 2);
    let s = build_c(2, &ps).unwrap().to_latex();
    assert!(s.starts_with("\\begin{pmatrix}\n1 & "));
    assert!(s.ends_with("0 & 1\n\\end{pmatrix}"));
}
