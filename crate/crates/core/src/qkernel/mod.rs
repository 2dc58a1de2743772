//! q-Pochhammer symbols, q-integers and binomials, terminating basic
//! hypergeometric sums, and the six-parameter set shared by every module.

mod params;

pub use params::{BlacklistFamily, GenericityCertificate, ParamSet, Predicate};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

/// `(z;q)_k` for any integer `k`; negative `k` uses the infinite-product quotient
/// `1 / prod_{j=1}^{-k} (1 - q^{-j} z)`.
pub fn qpoch<F: ExactScalar>(z: &F, q: &F, k: i64) -> Result<F> {
    if k >= 0 {
        let mut acc = F::one();
        let mut w = z.clone();
        for j in 0..k {
            acc = acc * &w.one_minus();
            if acc.is_zero() {
                return Ok(acc);
            }
            if j + 1 < k {
                w = w * q;
            }
        }
        Ok(acc)
    } else {
        let qinv = q.inv()?;
        let mut den = F::one();
        let mut w = z.clone();
        for _ in 0..(-k) {
            w = w * &qinv;
            den = den * &w.one_minus();
        }
        den.inv().map_err(|_| Error::PochhammerPole(format!("({z};{q})_{k}")))
    }
}

/// `(z_1, ..., z_m; q)_k`.
pub fn qpoch_multi<F: ExactScalar>(zs: &[F], q: &F, k: i64) -> Result<F> {
    let mut acc = F::one();
    for z in zs {
        acc = acc * &qpoch(z, q, k)?;
    }
    Ok(acc)
}

/// `[n]_q = (1 - q^n)/(1 - q)`, expanded as a geometric sum so `q = 1` is allowed.
pub fn qint<F: ExactScalar>(n: i64, q: &F) -> Result<F> {
    if n >= 0 {
        let mut acc = F::zero();
        let mut w = F::one();
        for _ in 0..n {
            acc = acc + &w;
            w = w * q;
        }
        Ok(acc)
    } else {
        // [-m]_q = -q^{-m} [m]_q
        Ok(-(q.powi(n)? * &qint(-n, q)?))
    }
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn qfact<F: ExactScalar>(n: i64, q: &F) -> Result<F> {
    if n < 0 {
        return Err(Error::Domain(format!("q-factorial of negative {n}")));
    }
    let mut acc = F::one();
    for k in 1..=n {
        acc = acc * &qint(k, q)?;
    }
    Ok(acc)
}

/// `[m over j]_q = prod_{k=1}^j [m-k+1]_q / [k]_q`.
pub fn qbinom<F: ExactScalar>(m: i64, j: i64, q: &F) -> Result<F> {
    if j < 0 {
        return Err(Error::Domain(format!("q-binomial with negative lower index {j}")));
    }
    if (0..=m).contains(&j) {
        // polynomial case: build the coefficient list exactly by Pascal's rule
        return Ok(eval_int_poly(&qbinom_coeffs(m as usize, j as usize), q));
    }
    let mut num = F::one();
    let mut den = F::one();
    for k in 1..=j {
        num = num * &qint(m - k + 1, q)?;
        den = den * &qint(k, q)?;
    }
    num.checked_div(&den)
}

/// Integer coefficients (low to high) of the Gaussian binomial `[m over j]_q`.
pub fn qbinom_coeffs(m: usize, j: usize) -> Vec<BigInt> {
    if j > m {
        return Vec::new();
    }
    // row[k] holds [i over k]_q as a coefficient vector
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=m {
        let mut next = Vec::with_capacity(i + 1);
        for k in 0..=i.min(j) {
            // [i over k] = [i-1 over k-1] + q^k [i-1 over k]
            let mut c: Vec<BigInt> = if k >= 1 && k - 1 < row.len() { row[k - 1].clone() } else { Vec::new() };
            if k < row.len() {
                let shifted = &row[k];
                if c.len() < shifted.len() + k {
                    c.resize(shifted.len() + k, BigInt::zero());
                }
                for (d, v) in shifted.iter().enumerate() {
                    c[d + k] += v;
                }
            }
            next.push(c);
        }
        row = next;
    }
    row.swap_remove(j)
}

fn eval_int_poly<F: ExactScalar>(coeffs: &[BigInt], x: &F) -> F {
    coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x + &F::from_rational(&c.clone().into()))
}

/// Ordinary binomial `m(m-1)...(m-j+1)/j!` for any integer `m` and `j >= 0`.
pub fn binom(m: i64, j: i64) -> Result<BigInt> {
    if j < 0 {
        return Err(Error::Domain(format!("binomial with negative lower index {j}")));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..j {
        num *= BigInt::from(m - k);
        den *= BigInt::from(k + 1);
    }
    Ok(num / den)
}

/// Partial or terminating `_{r+1}phi_r` sum over `0 <= n <= terms`.
///
/// Summation stops early once a numerator Pochhammer vanishes, so terminating
/// series never touch denominator poles beyond their last term.
pub fn phi<F: ExactScalar>(numerators: &[F], denominators: &[F], q: &F, z: &F, terms: usize) -> Result<F> {
    let mut sum = F::one();
    let mut term = F::one();
    let mut qn = F::one();
    for n in 0..terms {
        let mut num = z.clone();
        for a in numerators {
            num = num * &(a.clone() * &qn).one_minus();
        }
        if num.is_zero() {
            break;
        }
        let qn1 = qn.clone() * q;
        let mut den = qn1.one_minus();
        for b in denominators {
            den = den * &(b.clone() * &qn).one_minus();
        }
        if den.is_zero() {
            return Err(Error::HypergeometricPole(n + 1));
        }
        term = term * &num.checked_div(&den)?;
        sum = sum + &term;
        qn = qn1;
    }
    Ok(sum)
}

/// Very-well-poised `_{r+1}W_r(a1; upper; q, z)`, summed to `terms`.
///
/// The pair `(q a1^{1/2}, -q a1^{1/2}; q)_n / (a1^{1/2}, -a1^{1/2}; q)_n` is
/// replaced by `(1 - a1 q^{2n})/(1 - a1)`, so no square root of `a1` is needed.
pub fn very_well_poised_w<F: ExactScalar>(a1: &F, upper: &[F], q: &F, z: &F, terms: usize) -> Result<F> {
    let lead = a1.one_minus();
    if lead.is_zero() {
        return Err(Error::HypergeometricPole(0));
    }
    let lowers = upper.iter().map(|u| (q.clone() * a1).checked_div(u)).collect::<Result<Vec<_>>>()?;
    let mut sum = F::one();
    let mut term = F::one();
    let mut qn = F::one();
    for n in 0..terms {
        let mut num = z.clone() * &(a1.clone() * &qn).one_minus();
        for u in upper {
            num = num * &(u.clone() * &qn).one_minus();
        }
        if num.is_zero() {
            break;
        }
        let qn1 = qn.clone() * q;
        let mut den = qn1.one_minus();
        for b in &lowers {
            den = den * &(b.clone() * &qn).one_minus();
        }
        if den.is_zero() {
            return Err(Error::HypergeometricPole(n + 1));
        }
        term = term * &num.checked_div(&den)?;
        let n1 = (n + 1) as u64;
        let vwp = (a1.clone() * &q.powu(2 * n1)).one_minus().checked_div(&lead)?;
        sum = sum + &(term.clone() * &vwp);
        qn = qn1;
    }
    Ok(sum)
}

/// The same series through its defining `phi` expansion, given a square root of `a1`.
pub fn very_well_poised_w_from_root<F: ExactScalar>(
    root: &F,
    upper: &[F],
    q: &F,
    z: &F,
    terms: usize,
) -> Result<F> {
    let a1 = root.square();
    let qr = q.clone() * root;
    let mut nums = vec![a1.clone(), qr.clone(), -qr];
    nums.extend(upper.iter().cloned());
    let mut dens = vec![root.clone(), -root.clone()];
    for u in upper {
        dens.push((q.clone() * &a1).checked_div(u)?);
    }
    phi(&nums, &dens, q, z, terms)
}

#[cfg(test)]
mod tests;
