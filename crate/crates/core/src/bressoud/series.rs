use crate::error::Result;
use crate::koornwinder::{fourfold_coeffs_at, CoefficientBundle, Variant};
use crate::qkernel::{phi, qpoch, ParamSet};
use crate::scalar::ExactScalar;

fn neg_one_pow<F: ExactScalar>(k: i64) -> F {
    if k % 2 == 0 {
        F::one()
    } else {
        -F::one()
    }
}

fn bundle<F: ExactScalar>(ps: &ParamSet<F>, a: F, b: F, c: F, d: F) -> Result<CoefficientBundle<F>> {
    Ok(CoefficientBundle::new(ps.with_abcd(a, b, c, d)?))
}

/// `m_1(s, k) = ĉ'_e(k, 0; s)`; zero for negative `k`.
pub fn m1<F: ExactScalar>(s: &F, k: i64, ps: &ParamSet<F>) -> Result<F> {
    if k < 0 {
        return Ok(F::zero());
    }
    CoefficientBundle::new(ps.clone()).chat_e(k, 0, s)
}

/// `m_0(s, l) = ĉ'_e(0, l; s)`; zero for negative `l`.
pub fn m0<F: ExactScalar>(s: &F, l: i64, ps: &ParamSet<F>) -> Result<F> {
    if l < 0 {
        return Ok(F::zero());
    }
    CoefficientBundle::new(ps.clone()).chat_e(0, l, s)
}

/// `n_1(s, i) = (-1)^i ĉ_o^new(i, 0; s)`; zero for negative `i`.
pub fn n1<F: ExactScalar>(s: &F, i: i64, ps: &ParamSet<F>) -> Result<F> {
    if i < 0 {
        return Ok(F::zero());
    }
    Ok(neg_one_pow::<F>(i) * &CoefficientBundle::new(ps.clone()).chat_o_new_i(i, s)?)
}

/// `n_0(s, j) = (-1)^j ĉ_o^new(0, j; s)`; zero for negative `j`.
pub fn n0<F: ExactScalar>(s: &F, j: i64, ps: &ParamSet<F>) -> Result<F> {
    if j < 0 {
        return Ok(F::zero());
    }
    Ok(neg_one_pow::<F>(j) * &CoefficientBundle::new(ps.clone()).chat_o_new_j(j, s)?)
}

/// The product form of `n_0(s, j)` exactly as it is usually printed. It does
/// not agree with `(-1)^j ĉ_o^new(0, j; s)` and does not satisfy the five-term
/// recurrence; kept only so the discrepancy stays checkable.
pub fn n0_printed<F: ExactScalar>(s: &F, j: i64, ps: &ParamSet<F>) -> Result<F> {
    let ParamSet { a, c, d, .. } = ps;
    let t = ps.t();
    let a2 = a.square();
    let w = s.square() * &a2 * &c.square() * &ps.t_pow(-3);
    let num = qpoch(&-(c.clone() * &d.inv()?), &t, j)?
        * &qpoch(s, &t, j)?
        * &qpoch(&-(s.clone() * &a2 * &ps.t_pow(-1)), &t, j)?
        * &qpoch(&w, &t, j)?
        * &qpoch(&w, &t.square(), j)?
        * &(-d.clone()).powu(j as u64);
    let den = qpoch(&t, &t, j)?
        * &qpoch(&-(s.clone() * &a2 * c * d * &ps.t_pow(-2)), &t, j)?
        * &qpoch(&(s.clone() * &a2 * &c.square() * &ps.t_pow(-3)), &t, 2 * j)?;
    num.checked_div(&den)
}

/// `M(s, l)` through its terminating balanced `4phi3` in base `t^2`.
pub fn m_series<F: ExactScalar>(s: &F, l: i64, ps: &ParamSet<F>) -> Result<F> {
    if l < 0 {
        return Ok(F::zero());
    }
    let ParamSet { a, c, .. } = ps;
    let t = ps.t();
    let t2 = t.square();
    let s2 = s.square();
    // (s^2/t^2; t^2)_l (1 - s^2 t^{4l-2}) / (1 - s^2/t^2), cancelled
    let lead = if l == 0 {
        F::one()
    } else {
        qpoch(&s2, &t2, l - 1)? * &(s2.clone() * &ps.t_pow(4 * l - 2)).one_minus()
    };
    let pre = neg_one_pow::<F>(l) * &s.powi(-l)? * &lead.checked_div(&qpoch(&t2, &t2, l)?)?;
    let nums = [
        -(s.clone() * &a.square()),
        -(s.clone() * &c.square()),
        s2.clone() * &ps.t_pow(2 * l - 2),
        ps.t_pow(-2 * l),
    ];
    let dens = [-s.clone(), -(s.clone() * &t), s2 * &a.square() * &c.square() * &ps.t_pow(-1)];
    Ok(pre * &phi(&nums, &dens, &t2, &t2, l as usize)?)
}

/// `sum_k m_1(s, k) m_0(s t^{2k}, l - k)`.
pub fn m_series_by_sum<F: ExactScalar>(s: &F, l: i64, ps: &ParamSet<F>) -> Result<F> {
    let mut acc = F::zero();
    for k in 0..=l {
        acc = acc + &(m1(s, k, ps)? * &m0(&(s.clone() * &ps.t_pow(2 * k)), l - k, ps)?);
    }
    Ok(acc)
}

/// `N(s, j)` through its terminating `4phi3` in base `t`.
pub fn n_series<F: ExactScalar>(s: &F, j: i64, ps: &ParamSet<F>) -> Result<F> {
    if j < 0 {
        return Ok(F::zero());
    }
    let ParamSet { a, b, c, d, .. } = ps;
    let t = ps.t();
    let tau3 = ps.tau_pow(3);
    let sac = s.clone() * a * c;
    let sab = s.clone() * a * b;
    let pre_num = qpoch(&-(c.clone() * &d.inv()?), &t, j)?
        * &qpoch(s, &t, j)?
        * &qpoch(&(sac.square() * &ps.t_pow(-3)), &t, j)?
        * &qpoch(&(sab.clone() * &ps.t_pow(-1)), &t, j)?
        * &(-d.clone()).powu(j as u64);
    let pre_den = qpoch(&t, &t, j)?
        * &qpoch(&sac.checked_div(&tau3)?, &t, j)?
        * &qpoch(&-sac.checked_div(&tau3)?, &t, j)?
        * &qpoch(&(s.square() * &ps.abcd() * &ps.t_pow(-2)), &t, j)?;
    let nums = [
        ps.t_pow(-j),
        -a.checked_div(b)?,
        s.clone() * c * d * &ps.t_pow(-1),
        -(ps.t_pow(2 - j).checked_div(&sac)?),
    ];
    let dens = [
        -(ps.t_pow(1 - j) * d).checked_div(c)?,
        -(sac.clone() * &ps.t_pow(-1)),
        ps.t_pow(2 - j).checked_div(&sab)?,
    ];
    Ok(pre_num.checked_div(&pre_den)? * &phi(&nums, &dens, &t, &t, j as usize)?)
}

/// `sum_i n_1(s, i) n_0(s t^i, j - i)`.
pub fn n_series_by_sum<F: ExactScalar>(s: &F, j: i64, ps: &ParamSet<F>) -> Result<F> {
    let mut acc = F::zero();
    for i in 0..=j {
        acc = acc + &(n1(s, i, ps)? * &n0(&(s.clone() * &ps.t_pow(i)), j - i, ps)?);
    }
    Ok(acc)
}

/// `B(n, r, p)`: the coefficient of `E_{r-p}` in `P_(1^r)`, from the explicit
/// fourfold sum at `s = t^{n-r+1}`. Defined for `0 <= r <= n + 1`, zero for
/// `p` outside `0..=r`.
pub fn b_series<F: ExactScalar>(n: usize, r: i64, p: i64, ps: &ParamSet<F>) -> Result<F> {
    if p < 0 || r < 0 || p > r {
        return Ok(F::zero());
    }
    let s = ps.t_pow(n as i64 - r + 1);
    let w = fourfold_coeffs_at(&s, r as usize, ps, Variant::HsNew)?;
    Ok(w[p as usize].clone())
}

/// `M(st, l) + M(st, l-1) - M(s, l) - f(s|a,-a,c,-c) M(st^2, l-1)`.
pub fn four_term_residual<F: ExactScalar>(s: &F, l: i64, ps: &ParamSet<F>) -> Result<F> {
    let ParamSet { a, c, .. } = ps;
    let t = ps.t();
    let st = s.clone() * &t;
    let f2 = bundle(ps, a.clone(), -a.clone(), c.clone(), -c.clone())?.f(s)?;
    Ok(m_series(&st, l, ps)? + &m_series(&st, l - 1, ps)?
        - &m_series(s, l, ps)?
        - &(f2 * &m_series(&(st * &t), l - 1, ps)?))
}

/// Residuals of the two recurrences for `m_1` and `m_0`.
///
/// The `m_1` recurrence carries `f(s|a,-a,c,-c)` in its second term; `m_1`
/// depends on `a, c` only, so no coefficient involving `b` or `d` can work.
pub fn mformula_residuals<F: ExactScalar>(s: &F, k: i64, ps: &ParamSet<F>) -> Result<(F, F)> {
    let ParamSet { a, c, tau, .. } = ps;
    let t = ps.t();
    let st = s.clone() * &t;
    let st2 = st.clone() * &t;
    let f_ab = bundle(ps, a.clone(), -a.clone(), c.clone(), -c.clone())?;
    let f_one = bundle(ps, tau.clone() * c, -(tau.clone() * c), c.clone(), -c.clone())?;
    let r1 = m1(s, k, ps)? + &(f_ab.f(s)? * &m1(&st2, k - 1, ps)?)
        - &m1(&st, k, ps)?
        - &(f_one.f(&(s.clone() * &ps.t_pow(2 * k - 2)))? * &m1(&st, k - 1, ps)?);
    let r0 = m0(s, k, ps)? + &(f_one.f(s)? * &m0(&st2, k - 1, ps)?) - &m0(&st, k, ps)? - &m0(&st, k - 1, ps)?;
    Ok((r1, r0))
}

/// `N(s,j) + g(s) N(st,j-1) + f(s) N(st^2,j-2) - N(st,j) - f(st^{j-2}|a,-a,c,-c) N(st,j-2)`.
pub fn five_term_residual<F: ExactScalar>(s: &F, j: i64, ps: &ParamSet<F>) -> Result<F> {
    let ParamSet { a, c, .. } = ps;
    let cb = CoefficientBundle::new(ps.clone());
    let t = ps.t();
    let st = s.clone() * &t;
    let f2 = bundle(ps, a.clone(), -a.clone(), c.clone(), -c.clone())?;
    Ok(n_series(s, j, ps)?
        + &(cb.g(s)? * &n_series(&st, j - 1, ps)?)
        + &(cb.f(s)? * &n_series(&(st.clone() * &t), j - 2, ps)?)
        - &n_series(&st, j, ps)?
        - &(f2.f(&(s.clone() * &ps.t_pow(j - 2)))? * &n_series(&st, j - 2, ps)?))
}

/// Residuals of the two recurrences for `n_1` and `n_0`.
pub fn nrel_residuals<F: ExactScalar>(s: &F, i: i64, ps: &ParamSet<F>) -> Result<(F, F)> {
    Ok((n1rel_residual(s, i, ps, n1)?, n0rel_residual(s, i, ps, n0)?))
}

type Coef<F> = fn(&F, i64, &ParamSet<F>) -> Result<F>;

fn n1rel_residual<F: ExactScalar>(s: &F, i: i64, ps: &ParamSet<F>, n1: Coef<F>) -> Result<F> {
    let ParamSet { a, c, d, .. } = ps;
    let cb = CoefficientBundle::new(ps.clone());
    let t = ps.t();
    let st = s.clone() * &t;
    // both corrections on the right are taken at the lower stratum (a,-a,c,d)
    let g3 = bundle(ps, a.clone(), -a.clone(), c.clone(), d.clone())?;
    let f3 = g3.clone();
    Ok(n1(s, i, ps)? + &(cb.g(s)? * &n1(&st, i - 1, ps)?) + &(cb.f(s)? * &n1(&(st.clone() * &t), i - 2, ps)?)
        - &n1(&st, i, ps)?
        - &(g3.g(&(s.clone() * &ps.t_pow(i - 1)))? * &n1(&st, i - 1, ps)?)
        - &(f3.f(&(s.clone() * &ps.t_pow(i - 2)))? * &n1(&st, i - 2, ps)?))
}

/// The `n_0` recurrence evaluated with an arbitrary candidate for `n_0`.
pub fn n0rel_residual<F: ExactScalar>(s: &F, j: i64, ps: &ParamSet<F>, n0: Coef<F>) -> Result<F> {
    let ParamSet { a, c, d, .. } = ps;
    let t = ps.t();
    let st = s.clone() * &t;
    let b3 = bundle(ps, a.clone(), -a.clone(), c.clone(), d.clone())?;
    let b2 = bundle(ps, a.clone(), -a.clone(), c.clone(), -c.clone())?;
    Ok(n0(s, j, ps)? + &(b3.g(s)? * &n0(&st, j - 1, ps)?) + &(b3.f(s)? * &n0(&(st.clone() * &t), j - 2, ps)?)
        - &n0(&st, j, ps)?
        - &(b2.f(&(s.clone() * &ps.t_pow(j - 2)))? * &n0(&st, j - 2, ps)?))
}

/// `B(n,r,p) + B(n,r,p-2) - B(n,r+1,p) - f(t^{n-r}) B(n,r-1,p-2) - g(t^{n-r}) B(n,r,p-1)`.
pub fn strb_residual<F: ExactScalar>(n: usize, r: i64, p: i64, ps: &ParamSet<F>) -> Result<F> {
    let cb = CoefficientBundle::new(ps.clone());
    let s = ps.t_pow(n as i64 - r);
    Ok(b_series(n, r, p, ps)? + &b_series(n, r, p - 2, ps)?
        - &b_series(n, r + 1, p, ps)?
        - &(cb.f(&s)? * &b_series(n, r - 1, p - 2, ps)?)
        - &(cb.g(&s)? * &b_series(n, r, p - 1, ps)?))
}
