use crate::error::Result;
use crate::qkernel::{qpoch, ParamSet};
use crate::scalar::ExactScalar;

/// The coefficient functions attached to one parameter set.
///
/// All of `chat_e`, `chat_o`, `chat_o_new` are evaluated in cancelled form:
/// removable `0/0` factors of the displayed products are divided out (see the
/// `raw_*` functions in the tests for the uncancelled versions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientBundle<F> {
    pub params: ParamSet<F>,
}

fn prod<F: ExactScalar>(xs: &[F]) -> F {
    xs.iter().fold(F::one(), |acc, x| acc * x)
}

impl<F: ExactScalar> CoefficientBundle<F> {
    pub fn new(params: ParamSet<F>) -> Self {
        CoefficientBundle { params }
    }

    fn t(&self) -> F {
        self.params.t()
    }

    /// `f(s)`: the coefficient of the second-neighbour term in the column recursion.
    pub fn f(&self, s: &F) -> Result<F> {
        let ParamSet { a, b, c, d, .. } = &self.params;
        let t = self.t();
        let abcd = self.params.abcd();
        let tinv = t.inv()?;
        let num = prod(&[
            (abcd.clone() * s * &tinv).one_minus(),
            (t.clone() * s).one_minus(),
            (a.clone() * b * s).one_minus(),
            (a.clone() * c * s).one_minus(),
            (a.clone() * d * s).one_minus(),
            (b.clone() * c * s).one_minus(),
            (b.clone() * d * s).one_minus(),
            (c.clone() * d * s).one_minus(),
        ]);
        let s2 = s.square();
        let mid = (abcd.clone() * &s2).one_minus();
        let den = prod(&[
            (abcd.clone() * &s2 * &tinv).one_minus(),
            mid.square(),
            (abcd * &t * &s2).one_minus(),
        ]);
        num.checked_div(&den)
    }

    /// `g_1(s)`, vanishing at `s = 1`.
    pub fn g1(&self, s: &F) -> Result<F> {
        let ParamSet { a, b, c, d, .. } = &self.params;
        let t = self.t();
        let e1 = a.clone() + b + c + d;
        let e3 = a.clone() * b * c + &(a.clone() * b * d) + &(a.clone() * c * d) + &(b.clone() * c * d);
        let num = (e1 - &(e3 * s * &t.inv()?)) * &s.one_minus();
        let den = (self.params.abcd() * &s.square() * &t.square().inv()?).one_minus() * &t.one_minus();
        num.checked_div(&den)
    }

    /// `g(s) = g_1(s) - g_1(st)`.
    pub fn g(&self, s: &F) -> Result<F> {
        Ok(self.g1(s)? - &self.g1(&(s.clone() * &self.t()))?)
    }

    /// `ĉ'_e(k, l; s)`.
    pub fn chat_e(&self, k: i64, l: i64, s: &F) -> Result<F> {
        let ParamSet { a, c, .. } = &self.params;
        let t = self.t();
        let t2 = t.square();
        let tinv = t.inv()?;
        let c2 = c.square();
        let a2 = a.square();
        let x = s.clone() * &c2 * &tinv;
        let top = prod(&[
            qpoch(&(t.clone() * &c2 * &a2.inv()?), &t2, k)?,
            qpoch(&(s.clone() * &c2 * &t), &t2, k)?,
            sq_over_pochhammer(&x, &t2, k)?,
        ]);
        let bottom = qpoch(&t2, &t2, k)? * &qpoch(&(s.clone().square() * &a2 * &c2 * &tinv), &t2, k)?;
        let m = 2 * k + l;
        // (s/t;t)_m (1 - s t^{2k+2l-1}) / (1 - s/t), which is 1 when m = 0
        let shifted = if m >= 1 {
            qpoch(s, &t, m - 1)? * &(s.clone() * &t.powi(2 * k + 2 * l - 1)?).one_minus()
        } else {
            F::one()
        };
        let tail = qpoch(&c2.inv()?, &t, l)? * &shifted;
        let tail_den = qpoch(&t, &t, l)? * &qpoch(&(s.clone() * &c2), &t, m)?;
        let pw = a2.powu(k as u64) * &c2.powu(l as u64);
        Ok(top.checked_div(&bottom)? * &tail.checked_div(&tail_den)? * &pw)
    }

    /// `ĉ_o(i, j; s)`, the odd coefficient of the original fourfold sum.
    pub fn chat_o(&self, i: i64, j: i64, s: &F) -> Result<F> {
        let ParamSet { a, b, c, d, tau, .. } = &self.params;
        let t = self.t();
        let tinv = t.inv()?;
        let tau3 = tau.powu(3);
        let sac = s.clone() * a * c;
        let m = i + j;
        let num = prod(&[
            qpoch(&-(a.clone() * &b.inv()?), &t, i)?,
            qpoch(&(s.clone() * c * d * &tinv), &t, i)?,
            qpoch(s, &t, m)?,
            qpoch(&-(sac.clone() * &tinv), &t, m)?,
            qpoch(&(sac.square() * &tau3.square().inv()?), &t, m)?,
            qpoch(&-(c.clone() * &d.inv()?), &t, j)?,
            qpoch(&(s.clone() * a * b * &tinv), &t, j)?,
            b.powu(i as u64),
            d.powu(j as u64),
        ]);
        let den = prod(&[
            qpoch(&t, &t, i)?,
            qpoch(&-(sac.clone() * &tinv), &t, i)?,
            qpoch(&(s.square() * &self.params.abcd() * &t.square().inv()?), &t, m)?,
            qpoch(&(sac.clone() * &tau3.inv()?), &t, m)?,
            qpoch(&-(sac.clone() * &tau3.inv()?), &t, m)?,
            qpoch(&t, &t, j)?,
            qpoch(&-(sac * &tinv), &t, j)?,
        ]);
        num.checked_div(&den)
    }

    /// `ĉ_o^new(i, 0; s)`.
    pub fn chat_o_new_i(&self, i: i64, s: &F) -> Result<F> {
        let ParamSet { a, b, c, d, .. } = &self.params;
        let t = self.t();
        let tinv = t.inv()?;
        let t3inv = t.powi(-3)?;
        // (V;t)_i / ((V;t^2)_i (Vt;t^2)_i) = 1/(V t^i; t)_i
        let v = -(s.square() * &a.square() * c * d * &t3inv);
        let num = prod(&[
            qpoch(&-(a.clone() * &b.inv()?), &t, i)?,
            qpoch(s, &t, i)?,
            qpoch(&(s.clone() * a * c * &tinv), &t, i)?,
            qpoch(&(s.clone() * a * d * &tinv), &t, i)?,
            qpoch(&(s.clone() * c * d * &tinv), &t, i)?,
            b.powu(i as u64),
        ]);
        let den = prod(&[
            qpoch(&t, &t, i)?,
            qpoch(&(s.square() * &self.params.abcd() * &t.square().inv()?), &t, i)?,
            qpoch(&(v * &t.powi(i)?), &t, i)?,
        ]);
        num.checked_div(&den)
    }

    /// `ĉ_o^new(0, j; s)`.
    pub fn chat_o_new_j(&self, j: i64, s: &F) -> Result<F> {
        let ParamSet { a, c, d, .. } = &self.params;
        let t = self.t();
        let tinv = t.inv()?;
        let a2 = a.square();
        let w = s.square() * &a2 * &c.square() * &t.powi(-3)?;
        // (W;t)_j / (W;t^2)_j with the common factor 1 - W removed
        let mut ratio = F::one();
        for m in 1..j {
            ratio = ratio * &(w.clone() * &t.powi(m)?).one_minus();
            ratio = ratio.checked_div(&(w.clone() * &t.powi(2 * m)?).one_minus())?;
        }
        let num = prod(&[
            qpoch(&-(c.clone() * &d.inv()?), &t, j)?,
            qpoch(s, &t, j)?,
            qpoch(&-(s.clone() * &a2 * &tinv), &t, j)?,
            d.powu(j as u64),
        ]);
        let den = qpoch(&t, &t, j)? * &qpoch(&-(s.square() * &a2 * c * d * &t.square().inv()?), &t, j)?;
        Ok(num.checked_div(&den)? * &ratio)
    }

    /// `ĉ_o^new(i, j; s) = ĉ_o^new(i, 0; s) ĉ_o^new(0, j; t^i s)`.
    pub fn chat_o_new(&self, i: i64, j: i64, s: &F) -> Result<F> {
        let head = self.chat_o_new_i(i, s)?;
        if head.is_zero() {
            return Ok(head);
        }
        Ok(head * &self.chat_o_new_j(j, &(s.clone() * &self.params.t_pow(i)))?)
    }
}

/// `(X^2; q)_k / (X; q)_k` with the leading `(1 - X)` cancelled against `(1 - X^2)`.
pub(crate) fn sq_over_pochhammer<F: ExactScalar>(x: &F, q: &F, k: i64) -> Result<F> {
    if k == 0 {
        return Ok(F::one());
    }
    let mut acc = F::one() + x;
    let x2 = x.square();
    let mut qi = F::one();
    for _ in 1..k {
        qi = qi * q;
        acc = acc * &(x2.clone() * &qi).one_minus();
        acc = acc.checked_div(&(x.clone() * &qi).one_minus())?;
    }
    Ok(acc)
}
