//! The transition matrix `C` from one-column monomials to one-column
//! Koornwinder polynomials.
//!
//! Rows and columns are indexed so that, at rank `n`,
//! `P_(1^r) = sum_k C[n-r][n-r+k] m_(1^{r-k})`. For `n = 2` this reads
//!
//! ```text
//! P_(1^2) = m_(1^2) + C[0][1] m_(1) + C[0][2]
//! P_(1)   = m_(1)   + C[1][2]
//! P_()    = 1
//! ```
//!
//! The entries do not depend on `n`; they are fixed by the recursion
//! `C[i][j] = C[i-1][j-1] + g(t^i) C[i][j-1] + f(t^i) C[i+1][j-1]`.

use crate::bressoud::{b_series, Orientation, TriangularMatrix};
use crate::error::{Error, Result};
use crate::koornwinder::{from_m_coeffs, oracle_p, CoefficientBundle};
use crate::qkernel::{binom, ParamSet};
use crate::scalar::ExactScalar;
use crate::symlaurent::LaurentPoly;

/// A finite block of the transition matrix together with its parameters.
#[derive(Clone, Debug)]
pub struct TransitionMatrixC<F: ExactScalar> {
    pub params: ParamSet<F>,
    matrix: TriangularMatrix<F>,
}

impl<F: ExactScalar> TransitionMatrixC<F> {
    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        self.matrix.get(i, j)
    }

    pub fn matrix(&self) -> &TriangularMatrix<F> {
        &self.matrix
    }

    /// Entry with out-of-range indices read as zero.
    fn at(&self, i: i64, j: i64) -> F {
        let n = self.size() as i64;
        if i < 0 || j < 0 || i >= n || j >= n || i > j {
            F::zero()
        } else {
            self.get(i as usize, j as usize).clone()
        }
    }

    /// Unit diagonal plus the three-term recursion at every entry whose
    /// neighbours all lie inside the block.
    pub fn recursion_holds(&self) -> Result<bool> {
        let cb = CoefficientBundle::new(self.params.clone());
        for i in 0..self.size() {
            if !self.get(i, i).is_one() {
                return Ok(false);
            }
            let s = self.params.t_pow(i as i64);
            let (g, f) = (cb.g(&s)?, cb.f(&s)?);
            for j in i + 1..self.size() {
                let (i, j) = (i as i64, j as i64);
                let rhs = self.at(i - 1, j - 1) + &(g.clone() * &self.at(i, j - 1)) + &(f.clone() * &self.at(i + 1, j - 1));
                if rhs != self.at(i, j) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Does this block agree with the top-left corner of `other`?
    pub fn agrees_with_block_of(&self, other: &Self) -> bool {
        let n = self.size().min(other.size());
        (0..n).all(|i| (i..n).all(|j| self.get(i, j) == other.get(i, j)))
    }

    /// LaTeX `pmatrix` source of the block.
    pub fn to_latex(&self) -> String {
        let rows: Vec<String> = self
            .matrix
            .rows()
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" & "))
            .collect();
        format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
    }
}

/// The `size x size` block from the recursion, filled column by column.
pub fn build_c<F: ExactScalar>(size: usize, ps: &ParamSet<F>) -> Result<TransitionMatrixC<F>> {
    let cb = CoefficientBundle::new(ps.clone());
    let fg: Vec<(F, F)> =
        (0..size).map(|i| Ok((cb.f(&ps.t_pow(i as i64))?, cb.g(&ps.t_pow(i as i64))?))).collect::<Result<_>>()?;
    let mut c = vec![vec![F::zero(); size]; size];
    for j in 0..size {
        c[j][j] = F::one();
        for i in (0..j).rev() {
            let (f, g) = &fg[i];
            let mut x = g.clone() * &c[i][j - 1];
            if i >= 1 {
                x = x + &c[i - 1][j - 1];
            }
            if i < j - 1 {
                x = x + &(f.clone() * &c[i + 1][j - 1]);
            }
            c[i][j] = x;
        }
    }
    let matrix = TriangularMatrix::from_fn(size, Orientation::Upper, |i, j| Ok(c[i][j].clone()))?;
    Ok(TransitionMatrixC { params: ps.clone(), matrix })
}

/// The rank-`n` block `C^(n)` (size `n + 1`) assembled from the `B` series and
/// ordinary binomials.
pub fn build_cn_from_b<F: ExactScalar>(n: usize, ps: &ParamSet<F>) -> Result<TransitionMatrixC<F>> {
    let n_i = n as i64;
    let matrix = TriangularMatrix::from_fn(n + 1, Orientation::Upper, |i, j| {
        let r = n_i - i as i64;
        let k = (j - i) as i64;
        let h = k / 2;
        let odd = k % 2;
        let mut acc = F::zero();
        for p in 0..=h {
            let w = binom(n_i - r + k, h - p)?;
            let b = b_series(n, r, 2 * p + odd, ps)?;
            acc = acc + &(b * &F::from_rational(&w.into()));
        }
        Ok(acc)
    })?;
    Ok(TransitionMatrixC { params: ps.clone(), matrix })
}

#[derive(Clone, Copy)]
enum Letter {
    F,
    G,
}

/// `C[r][r+l]` as a sum over admissible words in `f(t^{r-d})`, `g(t^{r-d})`.
///
/// A word of length `m + n'` has `m` letters `f` and `n'` letters `g` with
/// `l = 2m + n'`. The first index satisfies `0 <= d_1 <= r`; after an `f`
/// the next index lies in `[d - 1, r]`, after a `g` in `[d, r]`.
pub fn c_combinatorial<F: ExactScalar>(r: usize, l: usize, ps: &ParamSet<F>) -> Result<F> {
    let cb = CoefficientBundle::new(ps.clone());
    let r_i = r as i64;
    // d ranges over [-l, r]; cache f and g at t^{r-d}
    let span = (r + l + 1) as i64;
    let mut fv = Vec::with_capacity(span as usize);
    let mut gv = Vec::with_capacity(span as usize);
    for d in -(l as i64)..=r_i {
        let s = ps.t_pow(r_i - d);
        fv.push(cb.f(&s)?);
        gv.push(cb.g(&s)?);
    }
    let offset = l as i64;
    let mut total = F::zero();
    for m in 0..=l / 2 {
        let ng = l - 2 * m;
        let mut acc = F::zero();
        walk(r_i, m, ng, None, &fv, &gv, offset, &F::one(), &mut acc);
        total = total + &acc;
    }
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn walk<F: ExactScalar>(
    r: i64,
    f_left: usize,
    g_left: usize,
    prev: Option<(Letter, i64)>,
    fv: &[F],
    gv: &[F],
    offset: i64,
    prod: &F,
    acc: &mut F,
) {
    if f_left == 0 && g_left == 0 {
        *acc = acc.clone() + prod;
        return;
    }
    let lo = match prev {
        None => 0,
        Some((Letter::F, d)) => d - 1,
        Some((Letter::G, d)) => d,
    };
    for d in lo..=r {
        let idx = (d + offset) as usize;
        if f_left > 0 {
            walk(r, f_left - 1, g_left, Some((Letter::F, d)), fv, gv, offset, &(prod.clone() * &fv[idx]), acc);
        }
        if g_left > 0 {
            walk(r, f_left, g_left - 1, Some((Letter::G, d)), fv, gv, offset, &(prod.clone() * &gv[idx]), acc);
        }
    }
}

/// `P_(1^r)` at rank `n` read off row `n - r` of the transition matrix.
pub fn p_via_c<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>) -> Result<LaurentPoly<F>> {
    if r > n {
        return Err(Error::Domain(format!("column length {r} exceeds rank {n}")));
    }
    let c = build_c(n + 1, ps)?;
    let row = n - r;
    // m-coefficients indexed by column length
    let mut coeffs = vec![F::zero(); r + 1];
    for k in 0..=r {
        coeffs[r - k] = c.get(row, row + k).clone();
    }
    from_m_coeffs(n, &coeffs)
}

/// The branching rule from rank `n` to rank `n - 1`, both sides from the
/// operator.
pub fn branch_check<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>) -> Result<bool> {
    if n < 2 || r > n {
        return Err(Error::Domain(format!("branching needs 2 <= n and r <= n, got n={n}, r={r}")));
    }
    let cb = CoefficientBundle::new(ps.clone());
    let s = ps.t_pow(n as i64 - r as i64);
    let lower = |k: i64| -> Result<LaurentPoly<F>> {
        if k < 0 || k as usize > n - 1 {
            Ok(LaurentPoly::zero(n))
        } else {
            Ok(oracle_p(n - 1, k as usize, ps)?.embed(n))
        }
    };
    let r_i = r as i64;
    let xn = LaurentPoly::var(n, n - 1);
    let xinv = LaurentPoly::monomial(n, { let mut e = vec![0; n]; e[n - 1] = -1; e }, F::one());
    let mid = xn + &xinv + &LaurentPoly::constant(n, cb.g(&s)?);
    let rhs = lower(r_i)? + &(&mid * &lower(r_i - 1)?) + &lower(r_i - 2)?.scale(&cb.f(&s)?);
    Ok(rhs == oracle_p(n, r, ps)?)
}

#[cfg(test)]
mod tests;
