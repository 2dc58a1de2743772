use crate::error::{Error, Result};
use crate::qkernel::ParamSet;
use crate::scalar::ExactScalar;
use crate::symlaurent::{monomial_m, ExponentVector, LaurentPoly};

fn unit(n: usize, i: usize, s: i32) -> ExponentVector {
    let mut v = vec![0; n];
    v[i] = s;
    v
}

fn pair(n: usize, i: usize, si: i32, j: usize, sj: i32) -> ExponentVector {
    let mut v = vec![0; n];
    v[i] += si;
    v[j] += sj;
    v
}

fn lex_positive(v: &[i32]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// The factors `1 - x^w` of the common denominator, each with `w` lex-positive.
fn delta_factors(n: usize) -> Vec<ExponentVector> {
    let mut out: Vec<ExponentVector> = (0..n).map(|i| unit(n, i, 2)).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(pair(n, i, 1, j, 1));
            out.push(pair(n, i, 1, j, -1));
        }
    }
    out
}

/// The rescaled Koornwinder operator applied to a symmetric Laurent polynomial.
///
/// The computation stays inside Laurent polynomials: each of the `2n` shift
/// terms is brought over the common denominator
/// `prod_i (1 - x_i^2) prod_{i<j} (1 - x_i x_j)(1 - x_i / x_j)`, summed, and the
/// sum is divided by that denominator one factor at a time. Any nonzero
/// remainder means the input was not an admissible symmetric polynomial.
pub fn apply_operator<F: ExactScalar>(f: &LaurentPoly<F>, ps: &ParamSet<F>) -> Result<LaurentPoly<F>> {
    let n = f.n();
    let q = ps.q();
    let t = ps.t();
    let one = F::one();
    let delta = delta_factors(n);
    let mut total = LaurentPoly::zero(n);
    for i in 0..n {
        for sigma in [1i32, -1] {
            let qs = if sigma == 1 { q.clone() } else { q.inv()? };
            let mut g = f.dilate(i, &qs)? - f;
            if g.is_zero() {
                continue;
            }
            g = g.div_binomial(&q, &unit(n, i, 2 * sigma))?;
            for u in [&ps.a, &ps.b, &ps.c, &ps.d] {
                g = g.mul_binomial(u, &unit(n, i, sigma));
            }
            // denominator factors 1 - x^w of this shift term
            let mut den = vec![unit(n, i, 2 * sigma)];
            for j in (0..n).filter(|&j| j != i) {
                g = g.mul_binomial(&t, &pair(n, i, sigma, j, 1));
                g = g.mul_binomial(&t, &pair(n, i, sigma, j, -1));
                den.push(pair(n, i, sigma, j, 1));
                den.push(pair(n, i, sigma, j, -1));
            }
            // 1 - x^w = -x^w (1 - x^{-w}) for lex-negative w
            let mut canon = Vec::with_capacity(den.len());
            for w in den {
                if lex_positive(&w) {
                    canon.push(w);
                } else {
                    let neg: ExponentVector = w.iter().map(|x| -x).collect();
                    g = g.shift(&neg, &-one.clone());
                    canon.push(neg);
                }
            }
            for w in delta.iter().filter(|w| !canon.contains(w)) {
                g = g.mul_binomial(&one, w);
            }
            total = total + &g;
        }
    }
    for w in &delta {
        total = total.div_binomial(&one, w)?;
    }
    Ok(total.scale(&ps.t_pow(1 - n as i64)))
}

/// The eigenvalue of the rescaled operator on the one-column polynomial `P_(1^r)`.
pub fn eigenvalue<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>) -> F {
    let q = ps.q();
    let qinv = q.inv().expect("q is nonzero");
    let a2 = ps.alpha_sq();
    let mut sum = F::zero();
    for j in 1..=r {
        let k = (n - j) as i64;
        sum = sum + &(a2.clone() * &ps.t_pow(k) * &(q.clone() - &F::one()));
        sum = sum + &(ps.t_pow(-k) * &(qinv.clone() - &F::one()));
    }
    sum
}

/// Matrix `A` with `D m_(1^k) = sum_j A[k][j] m_(1^j)`, rows `k = 0..=rmax`.
pub fn operator_matrix<F: ExactScalar>(n: usize, rmax: usize, ps: &ParamSet<F>) -> Result<Vec<Vec<F>>> {
    (0..=rmax)
        .map(|k| {
            let row = apply_operator(&monomial_m::<F>(n, k)?, ps)?.m_coefficients()?;
            if row.iter().skip(k + 1).any(|x| !x.is_zero()) {
                return Err(Error::OperatorNotPolynomial(format!("D m_(1^{k}) is not triangular")));
            }
            Ok(row)
        })
        .collect()
}

/// Monomial coefficients of `P_(1^r)` (indices `0..=r`, the last equal to one)
/// from a precomputed operator matrix.
pub fn p_coeffs_from_matrix<F: ExactScalar>(mat: &[Vec<F>], r: usize) -> Result<Vec<F>> {
    let lam = mat[r][r].clone();
    let mut c = vec![F::zero(); r + 1];
    c[r] = F::one();
    for j in (0..r).rev() {
        let mut rhs = F::zero();
        for k in j + 1..=r {
            rhs = rhs + &(c[k].clone() * &mat[k][j]);
        }
        let gap = lam.clone() - &mat[j][j];
        if gap.is_zero() {
            return Err(Error::NonGeneric(format!("eigenvalues of rows {j} and {r} coincide")));
        }
        c[j] = rhs.checked_div(&gap)?;
    }
    Ok(c)
}

/// Assemble `sum_k c_k m_(1^k)`.
pub fn from_m_coeffs<F: ExactScalar>(n: usize, c: &[F]) -> Result<LaurentPoly<F>> {
    let mut out = LaurentPoly::zero(n);
    for (k, x) in c.iter().enumerate() {
        if !x.is_zero() {
            out = out + &monomial_m::<F>(n, k)?.scale(x);
        }
    }
    Ok(out)
}

/// `P_(1^r)` as the monic triangular eigenfunction of the operator.
pub fn oracle_p<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>) -> Result<LaurentPoly<F>> {
    if r > n {
        return Err(Error::Domain(format!("column length {r} exceeds rank {n}")));
    }
    let mat = operator_matrix(n, r, ps)?;
    from_m_coeffs(n, &p_coeffs_from_matrix(&mat, r)?)
}

/// All of `P_(1^0), ..., P_(1^n)` from a single operator matrix.
pub fn oracle_all<F: ExactScalar>(n: usize, ps: &ParamSet<F>) -> Result<Vec<LaurentPoly<F>>> {
    let mat = operator_matrix(n, n, ps)?;
    (0..=n).map(|r| from_m_coeffs(n, &p_coeffs_from_matrix(&mat, r)?)).collect()
}
