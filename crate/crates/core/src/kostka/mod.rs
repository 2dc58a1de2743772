//! One-column polynomials of type `B_n`: the `(B_n, B_n)` Macdonald family with
//! its `a`-slot pinned to `t`, the Schur (`t = q`) and Hall-Littlewood (`q = 0`)
//! specializations, and the type-`B_n` Kostka polynomials connecting the last two.
//!
//! Every explicit expansion is produced twice: as a coefficient vector against
//! `E_r, E_{r-1}, ...` (or against the target family), and as a Laurent polynomial.
//! Quotients whose numerator and denominator both vanish at `r = n` are stored in
//! cancelled form, e.g. `(t^{2m}; t^2)_{2k} / (t^m; t)_{2k} = (-t^m; t)_{2k}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::koornwinder::{combine_e, sq_over_pochhammer};
use crate::qkernel::{binom, qbinom, qpoch, ParamSet};
use crate::scalar::{ExactScalar, RatFunc};
use crate::symlaurent::{elementary_e, LaurentPoly};

#[cfg(test)]
mod tests;

/// `(a, b, c, d) = (p, -p, -1, t)`: the `(B_n, B_n)` family at `a = t`.
pub fn bb_t_params<F: ExactScalar>(p: F, tau: F) -> Result<ParamSet<F>> {
    let t = tau.square();
    ParamSet::new(p.clone(), tau, p.clone(), -p, -F::one(), t)
}

fn check_bb_t<F: ExactScalar>(ps: &ParamSet<F>) -> Result<()> {
    if ps.a != ps.p || ps.b != -ps.p.clone() || ps.c != -F::one() || ps.d != ps.t() {
        return Err(Error::Domain("parameters are not of the form (p, -p, -1, t)".into()));
    }
    Ok(())
}

fn check_column(n: usize, r: usize) -> Result<i64> {
    if r > n {
        return Err(Error::Domain(format!("column length {r} exceeds rank {n}")));
    }
    Ok((n - r) as i64)
}

/// Coefficients `w` with `P_(1^r)(x | t; q, t) = sum_i w[i] E_{r-i}`.
///
/// The outer index `j` only contributes for `j <= 1` since `(1/t; t)_j` vanishes
/// beyond. For those `j` the factors `(t^{2m-1} q; t)_j / (t^{2m-1} q; t^2)_j` cancel
/// (they are 0/0 at `t = q`, `r = n`), and the product `(t^{m+j}; t)_{2k} (1 - t^{m+j+2k}) / ((t^{m+j+1}; t)_{2k} (1 - t^{m+j}))`
/// with `m = n - r` is identically one, so it is omitted.
pub fn bb_t_e_coeffs<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>) -> Result<Vec<F>> {
    check_bb_t(ps)?;
    let m = check_column(n, r)?;
    let (q, t) = (ps.q(), ps.t());
    let t2 = t.square();
    let tp = |k: i64| ps.t_pow(k);
    let mut w = vec![F::zero(); r + 1];
    for j in 0..=(r as i64).min(1) {
        let num = qpoch(&tp(-1), &t, j)? * &qpoch(&tp(m + 1), &t, j)? * &qpoch(&-(tp(m) * &q), &t, j)?;
        let den = qpoch(&t, &t, j)? * &qpoch(&(tp(2 * m + 1) * &q), &t, j)?;
        let head = num.checked_div(&den)? * &(-t.clone()).powu(j as u64);
        let x = tp(m + j);
        let t_over_q = t.checked_div(&q)?;
        for k in 0..=((r as i64 - j) / 2) {
            let num = qpoch(&t_over_q, &t2, k)? * &qpoch(&tp(m + 2 + j), &t2, k)? * &sq_over_pochhammer(&x, &t2, k)?;
            let den = qpoch(&t2, &t2, k)? * &qpoch(&(tp(2 * m + 1 + 2 * j) * &q), &t2, k)?;
            let term = num.checked_div(&den)? * &q.powu(k as u64);
            let slot = (2 * k + j) as usize;
            w[slot] = w[slot].clone() + &(head.clone() * &term);
        }
    }
    Ok(w)
}

/// Coefficients `v` with `E_r = sum_l v[l] P_(1^{r-l})(x | t; q, t)`.
pub fn bb_t_inverse_coeffs<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>) -> Result<Vec<F>> {
    check_bb_t(ps)?;
    let m = check_column(n, r)?;
    let (p, q, t) = (&ps.p, ps.q(), ps.t());
    let t2 = t.square();
    let tp = |k: i64| ps.t_pow(k);
    let mut v = vec![F::zero(); r + 1];
    for k in 0..=(r as i64 / 2) {
        let num = qpoch(&tp(m + 1), &t, 2 * k)? * &qpoch(&-tp(m), &t, 2 * k)? * &qpoch(&q.checked_div(&t)?, &t2, k)?;
        // (Y; t^2)_k / (Y; t^2)_{2k} = 1 / (Y t^{2k}; t^2)_k with Y = t^{2m-1} q
        let den = qpoch(&t2, &t2, k)? * &qpoch(&tp(2 * m + 2), &t2, k)? * &qpoch(&(tp(2 * m - 1 + 2 * k) * &q), &t2, k)?;
        let outer = num.checked_div(&den)? * &t.powu(k as u64);
        let z = tp(m + 2 * k);
        for j in 0..=(r as i64 - 2 * k) {
            let num = qpoch(&(z.clone() * &t), &t, j)?
                * &qpoch(&-(z.clone() * &q), &t, j)?
                * &qpoch(&-(z.clone() * p), &t, j)?
                * &qpoch(&(z.clone() * p), &t, j)?;
            let den = qpoch(&(z.square() * &q), &t, 2 * j)?;
            let mut term = num.checked_div(&den)?;
            if j % 2 == 1 {
                term = -term;
            }
            let slot = (2 * k + j) as usize;
            v[slot] = v[slot].clone() + &(outer.clone() * &term);
        }
    }
    Ok(v)
}

/// `P_(1^r)(x | t; q, t)` from its explicit expansion in the `E_r`.
pub fn macdonald_bb_t<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>) -> Result<LaurentPoly<F>> {
    Ok(combine_e(n, r, &bb_t_e_coeffs(n, r, ps)?))
}

/// `sum_l v[l] P_(1^{r-l})` with the inverse coefficients; reproduces `E_r`.
pub fn e_via_bb_t<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>) -> Result<LaurentPoly<F>> {
    let v = bb_t_inverse_coeffs(n, r, ps)?;
    let mut out = LaurentPoly::zero(n);
    for (l, c) in v.iter().enumerate() {
        out = out + &macdonald_bb_t(n, r - l, ps)?.scale(c);
    }
    Ok(out)
}

/// `s^{B_n}_(1^r) = E_r + E_{r-1}`.
pub fn schur_b<F: ExactScalar>(n: usize, r: usize) -> Result<LaurentPoly<F>> {
    check_column(n, r)?;
    Ok(elementary_e::<F>(n, r as i64) + &elementary_e::<F>(n, r as i64 - 1))
}

/// Coefficients of `s^{B_n}_(1^r)` against `m_(1^r), m_(1^{r-1}), ..., m_()`, in closed form.
pub fn schur_b_m_coeffs(n: usize, r: usize) -> Result<Vec<BigInt>> {
    let m = check_column(n, r)?;
    (0..=r as i64)
        .map(|i| {
            let (j, odd) = (i / 2, i % 2);
            binom(m + 2 * j + odd, j)
        })
        .collect()
}

/// The same coefficients read off the Laurent polynomial `E_r + E_{r-1}`.
pub fn schur_b_m_expansion(n: usize, r: usize) -> Result<Vec<BigInt>> {
    let mc = schur_b::<crate::Rational>(n, r)?.m_coefficients()?;
    (0..=r)
        .map(|i| {
            let c = &mc[r - i];
            if !c.is_integer() {
                return Err(Error::Domain(format!("non-integral m-coefficient {c}")));
            }
            Ok(c.numer().clone())
        })
        .collect()
}

/// `[m + 2k]_t / [m]_t * [m + k - 1 over k]_{t^2}` with `X = t^m`, written so `m = 0` is regular.
fn hl_ratio<F: ExactScalar>(m: i64, k: i64, t: &F) -> Result<F> {
    if k == 0 {
        return Ok(F::one());
    }
    let x = t.powi(m)?;
    let t2 = t.square();
    let mut num = (x.clone() * &t.powu(2 * k as u64)).one_minus() * &(F::one() + &x);
    let x2 = x.square();
    for i in 1..k {
        num = num * &(x2.clone() * &t2.powu(i as u64)).one_minus();
    }
    num.checked_div(&qpoch(&t2, &t2, k)?)
}

/// Coefficients `w` with `P_(1^r)(x | t; 0, t) = sum_i w[i] E_{r-i}`.
pub fn hall_littlewood_b_e_coeffs<F: ExactScalar>(n: usize, r: usize, t: &F) -> Result<Vec<F>> {
    let m = check_column(n, r)?;
    let mut w = vec![F::zero(); r + 1];
    let sign_tk2 = |k: i64| {
        let v = t.powu((k * k) as u64);
        if k % 2 == 1 {
            -v
        } else {
            v
        }
    };
    for k in 0..=(r as i64 / 2) {
        w[2 * k as usize] = sign_tk2(k) * &hl_ratio(m, k, t)?;
    }
    if r >= 1 {
        let lead = t.powu((m + 1) as u64).one_minus();
        for k in 0..=((r as i64 - 1) / 2) {
            w[(2 * k + 1) as usize] = lead.clone() * &sign_tk2(k) * &hl_ratio(m + 1, k, t)?;
        }
    }
    Ok(w)
}

/// `P^{(B_n, B_n)}_(1^r)(x | t; 0, t)`; pass `RatFunc::indeterminate()` for a live `t`.
pub fn hall_littlewood_b<F: ExactScalar>(n: usize, r: usize, t: &F) -> Result<LaurentPoly<F>> {
    Ok(combine_e(n, r, &hall_littlewood_b_e_coeffs(n, r, t)?))
}

/// `sum_{k <= l/2} (-t^m; t)_{2k} t^k / ((t^2; t^2)_k (t^{2m+2}; t^2)_k)`.
fn inner_sum<F: ExactScalar>(m: i64, l: i64, t: &F) -> Result<F> {
    let t2 = t.square();
    let mut acc = F::zero();
    for k in 0..=(l / 2) {
        let num = qpoch(&-t.powi(m)?, t, 2 * k)? * &t.powu(k as u64);
        let den = qpoch(&t2, &t2, k)? * &qpoch(&t.powi(2 * m + 2)?, &t2, k)?;
        acc = acc + &num.checked_div(&den)?;
    }
    Ok(acc)
}

/// Coefficients `v` with `E_r = sum_l v[l] P_(1^{r-l})(x | t; 0, t)`.
pub fn hall_littlewood_b_inverse_coeffs<F: ExactScalar>(n: usize, r: usize, t: &F) -> Result<Vec<F>> {
    let m = check_column(n, r)?;
    (0..=r as i64)
        .map(|l| {
            let v = qpoch(&t.powi(m + 1)?, t, l)? * &inner_sum(m, l, t)?;
            Ok(if l % 2 == 1 { -v } else { v })
        })
        .collect()
}

/// A type-`B_n` Kostka polynomial `K_{(1^r)(1^{r-l})}(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaPolynomial {
    pub n: usize,
    pub r: usize,
    pub l: usize,
    pub value: RatFunc,
}

impl KostkaPolynomial {
    /// Integer coefficients from the constant term up; fails unless the value
    /// is a polynomial with integral coefficients.
    pub fn coefficients(&self) -> Result<Vec<BigInt>> {
        if !self.value.is_polynomial() {
            return Err(Error::Domain(format!("K({}, {}, {}) is not a polynomial", self.n, self.r, self.l)));
        }
        self.value
            .numer()
            .coeffs()
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::Domain(format!("non-integral coefficient {c}")))
                }
            })
            .collect()
    }

    pub fn is_nonnegative_integral(&self) -> bool {
        self.coefficients().map(|cs| cs.iter().all(|c| *c >= BigInt::zero())).unwrap_or(false)
    }

    /// Lowest power of `t` present, `None` for the zero polynomial.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.value.numer().coeffs().iter().position(|c| !c.is_zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.value.numer().degree()
    }

    /// Ascending powers, e.g. `t + t^{3} + t^{5}`.
    pub fn to_latex(&self) -> Result<String> {
        let cs = self.coefficients()?;
        let mut out = String::new();
        for (k, c) in cs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < BigInt::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{{{k}}}"),
            };
            if mono.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        if out.is_empty() {
            out.push('0');
        }
        Ok(out)
    }
}

fn check_kostka(n: usize, r: usize, l: usize) -> Result<i64> {
    let m = check_column(n, r)?;
    if l > r {
        return Err(Error::Domain(format!("l = {l} exceeds r = {r}")));
    }
    Ok(m)
}

/// The two-sum expression: the `E_r` and `E_{r-1}` parts of the Schur polynomial
/// each re-expanded in Hall-Littlewood polynomials.
pub fn kostka_sum(n: usize, r: usize, l: usize) -> Result<KostkaPolynomial> {
    let m = check_kostka(n, r, l)?;
    let t = RatFunc::indeterminate();
    let li = l as i64;
    let sign = |e: i64| if e % 2 == 0 { RatFunc::one() } else { -RatFunc::one() };
    let mut value = qpoch(&t.powi(m + 1)?, &t, li)? * &inner_sum(m, li, &t)? * &sign(li);
    if l >= 1 {
        value = value + &(qpoch(&t.powi(m + 2)?, &t, li - 1)? * &inner_sum(m + 1, li - 1, &t)? * &sign(li - 1));
    }
    Ok(KostkaPolynomial { n, r, l, value })
}

/// `t^L [m + 2L over L]_{t^2}` for `l = 2L`, `t^{L + m + 1} [m + 2L + 1 over L]_{t^2}` for `l = 2L + 1`.
pub fn kostka_closed(n: usize, r: usize, l: usize) -> Result<KostkaPolynomial> {
    let m = check_kostka(n, r, l)?;
    let t = RatFunc::indeterminate();
    let t2 = t.square();
    let big_l = (l / 2) as i64;
    let value = if l.is_multiple_of(2) {
        t.powu(big_l as u64) * &qbinom(m + 2 * big_l, big_l, &t2)?
    } else {
        t.powu((big_l + m + 1) as u64) * &qbinom(m + 2 * big_l + 1, big_l, &t2)?
    };
    Ok(KostkaPolynomial { n, r, l, value })
}

/// Whether `s^{B_n}_(1^r) = sum_l K_{(1^r)(1^{r-l})}(t) P_(1^{r-l})(x | t; 0, t)`
/// holds identically in `x` and `t`.
pub fn kostka_defining_check(n: usize, r: usize) -> Result<bool> {
    let t = RatFunc::indeterminate();
    let mut rhs = LaurentPoly::zero(n);
    for l in 0..=r {
        let k = kostka_closed(n, r, l)?;
        rhs = rhs + &hall_littlewood_b(n, r - l, &t)?.scale(&k.value);
    }
    Ok(rhs == schur_b::<RatFunc>(n, r)?)
}
