//! The rank-one case: the Askey-Wilson operator and its eigenfunction
//! `f(x; s) = x^{-lambda} sum_n c_n x^n` with `q^{-lambda} = s`.
//!
//! The prefactor `x^{-lambda}` is never materialized: `T_{q,x}` acts on
//! `x^{-lambda} x^n` as multiplication by `s q^n`, which is folded into the
//! coefficients of the series operator.

use crate::error::Result;
use crate::koornwinder::Variant;
use crate::qkernel::{qpoch, ParamSet};
use crate::scalar::ExactScalar;

use super::operator::{Factor, OpTerm, SeriesOperator};
use super::series::TruncatedSeries;

/// The rank-one parameters `(a, b, c, d; q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AwParams<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
    pub q: F,
}

impl<F: ExactScalar> AwParams<F> {
    pub fn new(a: F, b: F, c: F, d: F, q: F) -> Self {
        AwParams { a, b, c, d, q }
    }

    /// `(a, b, c, d; p^2)` read off a Koornwinder parameter set.
    pub fn from_params(ps: &ParamSet<F>) -> Self {
        AwParams { a: ps.a.clone(), b: ps.b.clone(), c: ps.c.clone(), d: ps.d.clone(), q: ps.q() }
    }

    /// `(t/a, t/b, t/c, t/d; t)`, the substitution turning the degree-one
    /// coefficient into the function `g_1`.
    pub fn dual(ps: &ParamSet<F>) -> Result<Self> {
        let t = ps.t();
        Ok(AwParams {
            a: t.checked_div(&ps.a)?,
            b: t.checked_div(&ps.b)?,
            c: t.checked_div(&ps.c)?,
            d: t.checked_div(&ps.d)?,
            q: t,
        })
    }

    fn abcd(&self) -> F {
        self.a.clone() * &self.b * &self.c * &self.d
    }
}

/// `s + abcd/(q s) - 1 - abcd/q`.
pub fn aw_eigenvalue<F: ExactScalar>(s: &F, aw: &AwParams<F>) -> Result<F> {
    let r = aw.abcd().checked_div(&aw.q)?;
    Ok(s.clone() + &r.checked_div(s)? - &F::one() - &r)
}

/// The Askey-Wilson operator conjugated by `x^{-lambda}`, in the variable `x`.
pub fn aw_operator<F: ExactScalar>(s: &F, aw: &AwParams<F>) -> Result<SeriesOperator<F>> {
    let x = vec![1u32];
    let x2 = vec![2u32];
    let plus: Vec<Factor<F>> = [&aw.a, &aw.b, &aw.c, &aw.d]
        .iter()
        .map(|u| Factor::linear((*u).clone(), x.clone()))
        .chain([Factor::ratio(F::zero(), F::one(), x2.clone()), Factor::ratio(F::zero(), aw.q.clone(), x2.clone())])
        .collect();
    // (1 - u/x) ... / ((1 - 1/x^2)(1 - q/x^2)) = (abcd/q) prod (1 - x/u) / ((1 - x^2)(1 - x^2/q))
    let mut minus = Vec::new();
    for u in [&aw.a, &aw.b, &aw.c, &aw.d] {
        minus.push(Factor::linear(u.inv()?, x.clone()));
    }
    minus.push(Factor::ratio(F::zero(), F::one(), x2.clone()));
    minus.push(Factor::ratio(F::zero(), aw.q.inv()?, x2));
    let r = aw.abcd().checked_div(&aw.q)?;
    Ok(SeriesOperator {
        nvars: 1,
        q: aw.q.clone(),
        terms: vec![
            OpTerm { coeff: s.clone(), factors: plus.clone(), charge: vec![1] },
            OpTerm { coeff: -F::one(), factors: plus, charge: vec![0] },
            OpTerm { coeff: r.clone() * &s.inv()?, factors: minus.clone(), charge: vec![-1] },
            OpTerm { coeff: -r, factors: minus, charge: vec![0] },
        ],
    })
}

/// `c_0, ..., c_N` solved from the eigen-equation with `c_0 = 1`.
pub fn aw_series_by_recursion<F: ExactScalar>(s: &F, aw: &AwParams<F>, degree: usize) -> Result<TruncatedSeries<F>> {
    aw_operator(s, aw)?.solve_eigen(&aw_eigenvalue(s, aw)?, degree)
}

fn prod<F: ExactScalar>(xs: &[F]) -> F {
    xs.iter().fold(F::one(), |acc, x| acc * x)
}

/// The even coefficient function `c_e(k, l; s | a, c | q)`.
pub fn aw_c_e<F: ExactScalar>(k: i64, l: i64, s: &F, aw: &AwParams<F>) -> Result<F> {
    let AwParams { a, c, q, .. } = aw;
    let q2 = q.square();
    let a2 = a.square();
    let c2 = c.square();
    let s2 = s.square();
    let q4l = q.powu(4 * l as u64);
    let num = prod(&[
        qpoch(&a2, &q2, k)?,
        qpoch(&(q4l.clone() * &s2), &q2, k)?,
        q2.checked_div(&a2)?.powu(k as u64),
        qpoch(&c2.checked_div(q)?, &q2, l)?,
        qpoch(&s2.checked_div(&a2)?, &q2, l)?,
        qpoch(s, q, 2 * l)?,
        qpoch(&(q2.clone() * &s2).checked_div(&a2.square())?, &q2, 2 * l)?,
        q2.checked_div(&c2)?.powu(l as u64),
    ]);
    let den = prod(&[
        qpoch(&q2, &q2, k)?,
        qpoch(&(q4l * &q2 * &s2).checked_div(&a2)?, &q2, k)?,
        qpoch(&q2, &q2, l)?,
        qpoch(&(q.powu(3) * &s2).checked_div(&(a2.clone() * &c2))?, &q2, l)?,
        qpoch(&(q.clone() * s).checked_div(&a2)?, q, 2 * l)?,
        qpoch(&s2.checked_div(&a2)?, &q2, 2 * l)?,
    ]);
    num.checked_div(&den)
}

/// The odd coefficient function `c_o(i, j; s)`.
pub fn aw_c_o<F: ExactScalar>(i: i64, j: i64, s: &F, aw: &AwParams<F>) -> Result<F> {
    let AwParams { a, b, c, d, q } = aw;
    let q2 = q.square();
    let s2 = s.square();
    let ac = a.clone() * c;
    let a2c2 = ac.square();
    let abcd = aw.abcd();
    let qi = q.powu(i as u64);
    let num = prod(&[
        qpoch(&-(b.checked_div(a)?), q, i)?,
        qpoch(s, q, i)?,
        qpoch(&(q.clone() * s).checked_div(&(c.clone() * d))?, q, i)?,
        qpoch(&(q.clone() * &s2).checked_div(&a2c2)?, q, i)?,
        q.checked_div(b)?.powu(i as u64),
        qpoch(&-(d.checked_div(c)?), q, j)?,
        qpoch(&(qi.clone() * s), q, j)?,
        qpoch(&(q.clone() * s).checked_div(&(a.clone() * b))?, q, j)?,
        qpoch(&-(qi.clone() * q * s).checked_div(&ac)?, q, j)?,
        qpoch(&(qi.clone() * q * &s2).checked_div(&a2c2)?, q, j)?,
        q.checked_div(d)?.powu(j as u64),
    ]);
    let den = prod(&[
        qpoch(q, q, i)?,
        qpoch(&(q2.clone() * &s2).checked_div(&abcd)?, q, i)?,
        qpoch(&(q.clone() * &s2).checked_div(&a2c2)?, &q2, i)?,
        qpoch(q, q, j)?,
        qpoch(&(qi.clone() * &q2 * &s2).checked_div(&abcd)?, q, j)?,
        qpoch(&-(q.clone() * s).checked_div(&ac)?, q, j)?,
        qpoch(&(qi.square() * q * &s2).checked_div(&a2c2)?, &q2, j)?,
    ]);
    num.checked_div(&den)
}

/// The factorized odd coefficient function `c_o^new(i, j; s)`.
pub fn aw_c_o_new<F: ExactScalar>(i: i64, j: i64, s: &F, aw: &AwParams<F>) -> Result<F> {
    let AwParams { a, b, c, d, q } = aw;
    let q2 = q.square();
    let s2 = s.square();
    let a2 = a.square();
    let a2cd = a2.clone() * c * d;
    let a2c2 = a2.clone() * &c.square();
    let abcd = aw.abcd();
    let qi = q.powu(i as u64);
    let q2i = qi.square();
    let num = prod(&[
        qpoch(&-(b.checked_div(a)?), q, i)?,
        qpoch(s, q, i)?,
        qpoch(&(q.clone() * s).checked_div(&(a.clone() * c))?, q, i)?,
        qpoch(&(q.clone() * s).checked_div(&(a.clone() * d))?, q, i)?,
        qpoch(&(q.clone() * s).checked_div(&(c.clone() * d))?, q, i)?,
        qpoch(&-(q.clone() * &s2).checked_div(&a2cd)?, q, i)?,
        q.checked_div(b)?.powu(i as u64),
        qpoch(&-(d.checked_div(c)?), q, j)?,
        qpoch(&(qi.clone() * s), q, j)?,
        qpoch(&-(qi.clone() * q * s).checked_div(&a2)?, q, j)?,
        qpoch(&(q2i.clone() * q * &s2).checked_div(&a2c2)?, q, j)?,
        q.checked_div(d)?.powu(j as u64),
    ]);
    let den = prod(&[
        qpoch(q, q, i)?,
        qpoch(&(q2.clone() * &s2).checked_div(&abcd)?, q, i)?,
        qpoch(&-(q.clone() * &s2).checked_div(&a2cd)?, &q2, i)?,
        qpoch(&-(q2.clone() * &s2).checked_div(&a2cd)?, &q2, i)?,
        qpoch(q, q, j)?,
        qpoch(&-(q2i.clone() * &q2 * &s2).checked_div(&a2cd)?, q, j)?,
        qpoch(&(q2i * q * &s2).checked_div(&a2c2)?, &q2, j)?,
    ]);
    num.checked_div(&den)
}

/// `c_n = sum_{2k + 2l + i + j = n} c_e(k, l; q^{i+j} s) c_o(i, j; s)` for `n <= degree`.
pub fn aw_series_by_fourfold<F: ExactScalar>(
    s: &F,
    aw: &AwParams<F>,
    degree: usize,
    variant: Variant,
) -> Result<TruncatedSeries<F>> {
    let mut out = TruncatedSeries::zero(1, degree);
    let nmax = degree as i64;
    for i in 0..=nmax {
        for j in 0..=(nmax - i) {
            let odd = match variant {
                Variant::Hs => aw_c_o(i, j, s, aw)?,
                Variant::HsNew => aw_c_o_new(i, j, s, aw)?,
            };
            if odd.is_zero() {
                continue;
            }
            let shifted = aw.q.powu((i + j) as u64) * s;
            for k in 0..=((nmax - i - j) / 2) {
                for l in 0..=((nmax - i - j) / 2 - k) {
                    let e = aw_c_e(k, l, &shifted, aw)?;
                    out.add_term(vec![(2 * k + 2 * l + i + j) as u32], e * &odd);
                }
            }
        }
    }
    Ok(out)
}
