//! Eigenfunctions of the `A_{n-1}` and `B_n` q-Toda operators and their
//! Macdonald-type deformations, and the branching expansion of the `B_n`
//! eigenfunction into shifted `A_{n-1}` ones.
//!
//! Series live in `z_m = x_{m+1}/x_m` (`m = 1, ..., n-1`), plus `z_n = 1/x_n`
//! for type `B_n`. Indices in this file are 0-based; `s[i]` is `s_{i+1}`.

use crate::error::{Error, Result};
use crate::qkernel::qpoch;
use crate::scalar::ExactScalar;
use crate::symlaurent::LaurentPoly;

use super::operator::{charge, x_to_z, Factor, OpTerm, SeriesOperator};
use super::series::TruncatedSeries;

/// A strictly upper triangular matrix of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl ThetaMatrix {
    pub fn zero(n: usize) -> Self {
        ThetaMatrix { n, entries: vec![0; n * n] }
    }

    /// Fails unless every entry on or below the diagonal is zero.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        let mut th = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Domain("theta must be square".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                if i >= j && v != 0 {
                    return Err(Error::Domain(format!("theta[{i}][{j}] = {v} is not strictly upper")));
                }
                th.entries[i * n + j] = v;
            }
        }
        Ok(th)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 0-based; zero off the strict upper triangle or out of range.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i < j && j < self.n {
            self.entries[i * self.n + j]
        } else {
            0
        }
    }

    /// Total degree `sum (j - i) theta_{i,j}` of `prod (x_j/x_i)^{theta_{i,j}}`.
    pub fn weight(&self) -> usize {
        let mut w = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                w += (j - i) * self.get(i, j) as usize;
            }
        }
        w
    }

    /// Exponent of `prod (x_j/x_i)^{theta_{i,j}}` in the `n - 1` ratio coordinates.
    pub fn z_exponent(&self) -> Vec<u32> {
        let mut e = vec![0u32; self.n.saturating_sub(1)];
        for i in 0..self.n {
            for j in i + 1..self.n {
                for m in e.iter_mut().take(j).skip(i) {
                    *m += self.get(i, j);
                }
            }
        }
        e
    }

    /// Every theta of weight at most `degree`.
    pub fn enumerate(n: usize, degree: usize) -> Vec<ThetaMatrix> {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut out = Vec::new();
        let mut cur = Self::zero(n);
        fn go(slots: &[(usize, usize)], k: usize, left: usize, cur: &mut ThetaMatrix, out: &mut Vec<ThetaMatrix>) {
            if k == slots.len() {
                out.push(cur.clone());
                return;
            }
            let (i, j) = slots[k];
            let w = j - i;
            for v in 0..=(left / w) {
                cur.entries[i * cur.n + j] = v as u32;
                go(slots, k + 1, left - v * w, cur, out);
            }
            cur.entries[i * cur.n + j] = 0;
        }
        go(&slots, 0, degree, &mut cur, &mut out);
        out
    }
}

/// `sum_{a >= from} (theta_{i,a} - theta_{j,a})` (0-based, `j` may equal `n`).
fn tail_diff(th: &ThetaMatrix, i: usize, j: usize, from: usize) -> i64 {
    (from..th.n()).map(|a| th.get(i, a) as i64 - th.get(j, a) as i64).sum()
}

/// The coefficient `c_n(theta; s; q, t)` of the `A_{n-1}` Macdonald eigenfunction.
pub fn c_macdonald<F: ExactScalar>(th: &ThetaMatrix, s: &[F], q: &F, t: &F) -> Result<F> {
    let n = th.n();
    let mut num = F::one();
    let mut den = F::one();
    // paper indices k in 2..=n and 1 <= i <= j <= k-1, shifted down by one
    for k in 1..n {
        for i in 0..k {
            let m = th.get(i, k) as i64;
            if m == 0 {
                continue;
            }
            for j in i..k {
                let qa = q.powi(tail_diff(th, i, j + 1, k + 1))?;
                let ratio = s[j + 1].checked_div(&s[i])?;
                num = num * &qpoch(&(qa.clone() * t * &ratio), q, m)?;
                den = den * &qpoch(&(qa * q * &ratio), q, m)?;
                let qb = q.powi(-(th.get(j, k) as i64) + tail_diff(th, i, j, k + 1))?;
                let r2 = s[j].checked_div(&s[i])?;
                num = num * &qpoch(&(qb.clone() * q * &r2).checked_div(t)?, q, m)?;
                den = den * &qpoch(&(qb * &r2), q, m)?;
            }
        }
    }
    num.checked_div(&den)
}

/// `c^Toda_n(theta; s; q)`, the `t -> 0` limit of `c_n prod t^{(j-i) theta_{i,j}}`.
pub fn c_toda<F: ExactScalar>(th: &ThetaMatrix, s: &[F], q: &F) -> Result<F> {
    let n = th.n();
    let mut num = F::one();
    let mut den = F::one();
    for k in 1..n {
        for i in 0..k {
            let m = th.get(i, k) as i64;
            if m == 0 {
                continue;
            }
            for j in i..k {
                let qa = q.powi(tail_diff(th, i, j + 1, k + 1))?;
                den = den * &qpoch(&(qa * q * &s[j + 1].checked_div(&s[i])?), q, m)?;
                let e = th.get(j, k) as i64 - m - tail_diff(th, i, j, k + 1);
                num = num * &q.powu(m as u64);
                den = den * &qpoch(&(q.powi(e)? * q * &s[i].checked_div(&s[j])?), q, m)?;
            }
        }
    }
    num.checked_div(&den)
}

fn sum_over_theta<F: ExactScalar>(
    n: usize,
    degree: usize,
    mut coeff: impl FnMut(&ThetaMatrix) -> Result<F>,
) -> Result<TruncatedSeries<F>> {
    let mut out = TruncatedSeries::zero(n.saturating_sub(1), degree);
    for th in ThetaMatrix::enumerate(n, degree) {
        let c = coeff(&th)?;
        out.add_term(th.z_exponent(), c);
    }
    Ok(out)
}

/// `f^{A_{n-1}}(x | s | q, t)` through total degree `degree`.
pub fn todaa_macdonald_f<F: ExactScalar>(s: &[F], q: &F, t: &F, degree: usize) -> Result<TruncatedSeries<F>> {
    sum_over_theta(s.len(), degree, |th| c_macdonald(th, s, q, t))
}

/// `f^{A_{n-1} Toda}(x | s | q)` through total degree `degree`.
pub fn todaa_f<F: ExactScalar>(s: &[F], q: &F, degree: usize) -> Result<TruncatedSeries<F>> {
    sum_over_theta(s.len(), degree, |th| c_toda(th, s, q))
}

/// x-exponent vector of `x_num / x_den`, either index optional.
fn xratio(n: usize, num: Option<usize>, den: &[usize]) -> Vec<i32> {
    let mut k = vec![0; n];
    if let Some(i) = num {
        k[i] += 1;
    }
    for &j in den {
        k[j] -= 1;
    }
    k
}

/// Value of the monomial `x^k` at the scaled point, for the dilations `x_i -> w_i x_i`.
fn weight_of<F: ExactScalar>(k: &[i32], w: &[F]) -> Result<F> {
    let mut acc = F::one();
    for (ki, wi) in k.iter().zip(w) {
        acc = acc * &wi.powi(*ki as i64)?;
    }
    Ok(acc)
}

/// `(1 - u x^k) / (1 - x^k)` after `x_i -> w_i x_i`.
fn factor<F: ExactScalar>(k: Vec<i32>, u: &F, w: &[F], nvars: usize) -> Result<Factor<F>> {
    let mono = x_to_z(&k, nvars).ok_or_else(|| Error::Domain(format!("{k:?} is not a small monomial")))?;
    let rho = weight_of(&k, w)?;
    Ok(Factor::ratio(rho.clone() * u, rho, mono))
}

fn ones<F: ExactScalar>(n: usize) -> Vec<F> {
    vec![F::one(); n]
}

/// `D^{A_{n-1}}(x | s | q, t)` at the dilated point `x_i -> w_i x_i`.
pub fn todaa_macdonald_operator<F: ExactScalar>(s: &[F], q: &F, t: &F, w: Option<&[F]>) -> Result<SeriesOperator<F>> {
    let n = s.len();
    let nv = n.saturating_sub(1);
    let w = w.map(|w| w.to_vec()).unwrap_or_else(|| ones(n));
    let tinv = t.inv()?;
    let mut terms = Vec::new();
    for i in 0..n {
        let mut fs = Vec::new();
        for j in 0..i {
            fs.push(factor(xratio(n, Some(i), &[j]), t, &w, nv)?);
        }
        for k in i + 1..n {
            fs.push(factor(xratio(n, Some(k), &[i]), &tinv, &w, nv)?);
        }
        terms.push(OpTerm { coeff: s[i].clone(), factors: fs, charge: charge(i, nv, 1) });
    }
    Ok(SeriesOperator { nvars: nv, q: q.clone(), terms })
}

/// `D^{A_{n-1} Toda}(x | s | q)`.
pub fn todaa_operator<F: ExactScalar>(s: &[F], q: &F) -> Result<SeriesOperator<F>> {
    let n = s.len();
    let nv = n.saturating_sub(1);
    let mut terms = Vec::new();
    for i in 0..n {
        let mut fs = Vec::new();
        if i + 1 < n {
            let mono = x_to_z(&xratio(n, Some(i + 1), &[i]), nv).expect("adjacent ratio");
            fs.push(Factor::linear(F::one(), mono));
        }
        terms.push(OpTerm { coeff: s[i].clone(), factors: fs, charge: charge(i, nv, 1) });
    }
    Ok(SeriesOperator { nvars: nv, q: q.clone(), terms })
}

/// `D^{B_n}(x | s | q, t)` at the dilated point `x_i -> w_i x_i`.
pub fn todab_macdonald_operator<F: ExactScalar>(s: &[F], q: &F, t: &F, w: Option<&[F]>) -> Result<SeriesOperator<F>> {
    let n = s.len();
    let w = w.map(|w| w.to_vec()).unwrap_or_else(|| ones(n));
    let tinv = t.inv()?;
    let mut terms = Vec::new();
    for i in 0..n {
        let mut plus = vec![factor(xratio(n, None, &[i]), &tinv, &w, n)?];
        let mut minus = vec![factor(xratio(n, None, &[i]), t, &w, n)?];
        for j in 0..i {
            plus.push(factor(xratio(n, None, &[i, j]), &tinv, &w, n)?);
            plus.push(factor(xratio(n, Some(i), &[j]), t, &w, n)?);
            minus.push(factor(xratio(n, Some(i), &[j]), &tinv, &w, n)?);
            minus.push(factor(xratio(n, None, &[i, j]), t, &w, n)?);
        }
        for k in i + 1..n {
            plus.push(factor(xratio(n, None, &[i, k]), &tinv, &w, n)?);
            plus.push(factor(xratio(n, Some(k), &[i]), &tinv, &w, n)?);
            minus.push(factor(xratio(n, Some(k), &[i]), t, &w, n)?);
            minus.push(factor(xratio(n, None, &[i, k]), t, &w, n)?);
        }
        terms.push(OpTerm { coeff: s[i].clone(), factors: plus, charge: charge(i, n, 1) });
        terms.push(OpTerm { coeff: s[i].inv()?, factors: minus, charge: charge(i, n, -1) });
    }
    Ok(SeriesOperator { nvars: n, q: q.clone(), terms })
}

/// `D^{B_n Toda}(x | s | q)`.
pub fn todab_operator<F: ExactScalar>(s: &[F], q: &F) -> Result<SeriesOperator<F>> {
    let n = s.len();
    let lin = |k: Vec<i32>| -> Result<Factor<F>> {
        let mono = x_to_z(&k, n).ok_or_else(|| Error::Domain(format!("{k:?} is not a small monomial")))?;
        Ok(Factor::linear(F::one(), mono))
    };
    let mut terms = Vec::new();
    for i in 0..n {
        let up = if i + 1 < n { xratio(n, Some(i + 1), &[i]) } else { xratio(n, None, &[i]) };
        terms.push(OpTerm { coeff: s[i].clone(), factors: vec![lin(up)?], charge: charge(i, n, 1) });
        let down = if i == 0 { vec![] } else { vec![lin(xratio(n, Some(i), &[i - 1]))?] };
        terms.push(OpTerm { coeff: s[i].inv()?, factors: down, charge: charge(i, n, -1) });
    }
    Ok(SeriesOperator { nvars: n, q: q.clone(), terms })
}

/// Apply `D^{B_n Toda}(x | s | q)` to a series in the `B_n` coordinates.
pub fn todab_operator_apply<F: ExactScalar>(f: &TruncatedSeries<F>, s: &[F], q: &F) -> Result<TruncatedSeries<F>> {
    todab_operator(s, q)?.apply(f)
}

/// `s_1 + ... + s_n + 1/s_1 + ... + 1/s_n`.
pub fn todab_eigenvalue<F: ExactScalar>(s: &[F]) -> Result<F> {
    let mut acc = F::zero();
    for si in s {
        acc = acc + si + &si.inv()?;
    }
    Ok(acc)
}

/// `f^{B_n Toda}(x | s | q)`, solved degree by degree with constant term one.
pub fn todab_f<F: ExactScalar>(s: &[F], q: &F, degree: usize) -> Result<TruncatedSeries<F>> {
    todab_operator(s, q)?.solve_eigen(&todab_eigenvalue(s)?, degree)
}

/// The conjectured branching coefficient `e^{B_n/A_{n-1}}_theta(s | q)`.
pub fn branching_e<F: ExactScalar>(theta: &[u32], s: &[F], q: &F) -> Result<F> {
    let n = s.len();
    if theta.len() != n {
        return Err(Error::Domain("theta and s differ in length".into()));
    }
    let th: Vec<i64> = theta.iter().map(|&x| x as i64).collect();
    let mut num = F::one();
    let mut den = F::one();
    for k in 0..n {
        num = num * &q.powu(((n - k) as i64 * th[k]) as u64);
        den = den * &qpoch(q, q, th[k])? * &qpoch(&q.checked_div(&s[k].square())?, q, th[k])?;
    }
    for i in 0..n {
        for j in i + 1..n {
            den = den * &qpoch(&(q.clone() * &s[j].checked_div(&s[i])?), q, th[i])?;
            den = den * &qpoch(&(q.powi(th[j] - th[i])? * q * &s[i].checked_div(&s[j])?), q, th[i])?;
            let u = q.checked_div(&(s[i].clone() * &s[j]))?;
            num = num * &qpoch(&u, q, th[i] + th[j])?;
            den = den * &qpoch(&u, q, th[i])? * &qpoch(&u, q, th[j])?;
        }
    }
    num.checked_div(&den)
}

/// Every `theta` in `Z_{>=0}^n` with `sum theta_i (n - i) <= degree` (0-based `i`),
/// the z-degree of `prod x_i^{-theta_i}`.
pub fn branching_thetas(n: usize, degree: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn go(n: usize, i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        let w = n - i;
        for v in 0..=(left / w) {
            cur.push(v as u32);
            go(n, i + 1, left - v * w, cur, out);
            cur.pop();
        }
    }
    go(n, 0, degree, &mut Vec::new(), &mut out);
    out
}

/// `f^{B_n Toda}(s) - sum_theta e_theta(s) prod x_i^{-theta_i} f^{A_{n-1} Toda}(q^{-theta} s)`,
/// truncated at `degree`. The conjecture asserts it vanishes.
pub fn conjecture_residual<F: ExactScalar>(s: &[F], q: &F, degree: usize) -> Result<TruncatedSeries<F>> {
    let n = s.len();
    let mut rhs = TruncatedSeries::zero(n, degree);
    for theta in branching_thetas(n, degree) {
        let e = branching_e(&theta, s, q)?;
        if e.is_zero() {
            continue;
        }
        let shifted: Vec<F> = s
            .iter()
            .zip(&theta)
            .map(|(si, &th)| Ok(q.powi(-(th as i64))? * si))
            .collect::<Result<_>>()?;
        // prod x_i^{-theta_i} = prod_i (z_i ... z_n)^{theta_i}
        let mut mono = vec![0u32; n];
        let mut acc = 0;
        for (m, th) in theta.iter().enumerate() {
            acc += th;
            mono[m] = acc;
        }
        let w: usize = mono.iter().map(|&x| x as usize).sum();
        for (exp, c) in todaa_f(&shifted, q, degree - w)?.pad(n).terms() {
            let ne: Vec<u32> = exp.iter().zip(&mono).map(|(a, b)| a + b).collect();
            rhs.add_term(ne, c.clone() * &e);
        }
    }
    Ok(todab_f(s, q, degree)?.sub(&rhs))
}

/// `D^{B_n}(x | q, t) f` evaluated at a point, with `t = tau^2`.
pub fn d_bn_at_point<F: ExactScalar>(f: &LaurentPoly<F>, x: &[F], q: &F, tau: &F) -> Result<F> {
    let n = x.len();
    let t = tau.square();
    let norm = tau.powu(2 * n as u64 - 1);
    let mut acc = F::zero();
    for i in 0..n {
        let xi = &x[i];
        let xinv = xi.inv()?;
        let mut up = t.clone() * xi;
        up = up.one_minus().checked_div(&xi.one_minus())?;
        let mut down = (t.clone() * &xinv).one_minus().checked_div(&xinv.one_minus())?;
        for (_, xj) in x.iter().enumerate().filter(|&(j, _)| j != i) {
            let p = xi.clone() * xj;
            let r = xi.checked_div(xj)?;
            up = up * &(t.clone() * &p).one_minus() * &(t.clone() * &r).one_minus();
            up = up.checked_div(&(p.one_minus() * &r.one_minus()))?;
            let pinv = p.inv()?;
            let rinv = r.inv()?;
            down = down * &(t.clone() * &rinv).one_minus() * &(t.clone() * &pinv).one_minus();
            down = down.checked_div(&(rinv.one_minus() * &pinv.one_minus()))?;
        }
        let mut xp = x.to_vec();
        xp[i] = xi.clone() * q;
        let mut xm = x.to_vec();
        xm[i] = xi.checked_div(q)?;
        acc = acc + &(up * &f.eval(&xp)?) + &(down * &f.eval(&xm)?);
    }
    acc.checked_div(&norm)
}
