//! Sparse Laurent polynomials in `x_1..x_n` and the one-column bases
//! `m_(1^r)` and `E_r` of the hyperoctahedral-invariant ring.

mod json;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qkernel::binom;
use crate::scalar::ExactScalar;

pub type ExponentVector = Vec<i32>;

/// `(1^r)` inside rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnPartition {
    pub n: usize,
    pub r: usize,
}

impl ColumnPartition {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r > n {
            return Err(Error::Domain(format!("column (1^{r}) does not fit rank {n}")));
        }
        Ok(ColumnPartition { n, r })
    }
}

/// Laurent polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly<F> {
    n: usize,
    terms: BTreeMap<ExponentVector, F>,
}

impl<F: ExactScalar> LaurentPoly<F> {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: F) -> Self {
        Self::monomial(n, vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, F::one())
    }

    pub fn monomial(n: usize, exp: ExponentVector, c: F) -> Self {
        assert_eq!(exp.len(), n, "exponent length must match rank");
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(n, e, F::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (ExponentVector, F)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> F {
        self.terms.get(exp).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, exp: ExponentVector, c: F) {
        debug_assert_eq!(exp.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c)).collect() }
    }

    /// Multiply by the monomial `c x^v`.
    pub fn shift(&self, v: &[i32], c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let terms =
            self.terms.iter().map(|(e, x)| (e.iter().zip(v).map(|(a, b)| a + b).collect(), x.clone() * c)).collect();
        LaurentPoly { n: self.n, terms }
    }

    /// Coefficient of `x^e` scaled by `factor^{e_i}`: the substitution `x_i -> factor * x_i`.
    pub fn dilate(&self, i: usize, factor: &F) -> Result<Self> {
        let mut cache: BTreeMap<i32, F> = BTreeMap::new();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[i];
            let w = match cache.get(&k) {
                Some(w) => w.clone(),
                None => {
                    let w = factor.powi(k as i64)?;
                    cache.insert(k, w.clone());
                    w
                }
            };
            terms.insert(e.clone(), c.clone() * &w);
        }
        Ok(LaurentPoly { n: self.n, terms })
    }

    /// Value at a point; every coordinate must be nonzero when negative powers occur.
    pub fn eval(&self, x: &[F]) -> Result<F> {
        assert_eq!(x.len(), self.n);
        let mut sum = F::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (xi, &k) in x.iter().zip(e.iter()) {
                if k != 0 {
                    term = term * &xi.powi(k as i64)?;
                }
            }
            sum = sum + &term;
        }
        Ok(sum)
    }

    /// `self * (1 - c x^v)`.
    pub fn mul_binomial(&self, c: &F, v: &[i32]) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            return out;
        }
        for (e, x) in &self.terms {
            let e2: ExponentVector = e.iter().zip(v).map(|(a, b)| a + b).collect();
            out.add_term(e2, -(x.clone() * c));
        }
        out
    }

    /// Exact quotient by `1 - c x^v`; a nonzero remainder is reported as an error.
    ///
    /// Monomials are grouped into lines `e + k v` and each line is divided by
    /// synthetic division `g_k = N_k + c g_{k-1}`.
    pub fn div_binomial(&self, c: &F, v: &[i32]) -> Result<Self> {
        let piv = v.iter().position(|&x| x != 0).ok_or_else(|| Error::Domain("division by constant binomial".into()))?;
        if c.is_zero() {
            return Ok(self.clone());
        }
        let step = v[piv];
        let mut lines: BTreeMap<ExponentVector, BTreeMap<i64, F>> = BTreeMap::new();
        for (e, x) in &self.terms {
            let k = e[piv].div_euclid(step) as i64;
            let rep: ExponentVector = e.iter().zip(v).map(|(a, b)| a - (k as i32) * b).collect();
            lines.entry(rep).or_default().insert(k, x.clone());
        }
        let mut out = Self::zero(self.n);
        for (rep, line) in lines {
            let (&k0, _) = line.iter().next().expect("nonempty line");
            let (&k1, _) = line.iter().next_back().expect("nonempty line");
            let mut prev = F::zero();
            for k in k0..=k1 {
                let nk = line.get(&k).cloned().unwrap_or_else(F::zero);
                let g = nk + &(c.clone() * &prev);
                if k == k1 {
                    if !g.is_zero() {
                        return Err(Error::OperatorNotPolynomial(format!(
                            "remainder modulo (1 - ({c}) x^{v:?}) along {rep:?}"
                        )));
                    }
                } else if !g.is_zero() {
                    let e: ExponentVector = rep.iter().zip(v).map(|(a, b)| a + (k as i32) * b).collect();
                    out.terms.insert(e, g.clone());
                }
                prev = g;
            }
        }
        Ok(out)
    }

    /// Re-embed into rank `m >= n` by appending zero exponents.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.n);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2.resize(m, 0);
                (e2, c.clone())
            })
            .collect();
        LaurentPoly { n: m, terms }
    }

    /// Apply a signed permutation: `x_i -> x_{perm[i]}^{sign[i]}`.
    fn act(&self, perm: &[usize], sign: &[i32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = vec![0; self.n];
                for (i, &k) in e.iter().enumerate() {
                    e2[perm[i]] += sign[i] * k;
                }
                (e2, c.clone())
            })
            .collect();
        LaurentPoly { n: self.n, terms }
    }

    /// Invariance under the hyperoctahedral group, tested on its generators.
    pub fn is_w_invariant(&self) -> bool {
        let n = self.n;
        let id: Vec<usize> = (0..n).collect();
        let mut flip = vec![1; n];
        if n > 0 {
            flip[0] = -1;
            if self.act(&id, &flip) != *self {
                return false;
            }
        }
        flip = vec![1; n];
        for i in 0..n.saturating_sub(1) {
            let mut perm = id.clone();
            perm.swap(i, i + 1);
            if self.act(&perm, &flip) != *self {
                return false;
            }
        }
        true
    }

    /// Coefficients of `f` in the one-column monomial basis `m_(1^0), ..., m_(1^n)`.
    ///
    /// Fails with [`Error::NotInSpan`] unless `f` lies in that span exactly.
    pub fn m_coefficients(&self) -> Result<Vec<F>> {
        let n = self.n;
        let coeffs: Vec<F> = (0..=n)
            .map(|k| {
                let mut e = vec![0; n];
                e[..k].iter_mut().for_each(|x| *x = 1);
                self.coeff(&e)
            })
            .collect();
        let mut rebuilt = Self::zero(n);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                rebuilt = rebuilt + &monomial_m::<F>(n, k)?.scale(c);
            }
        }
        if rebuilt != *self {
            return Err(Error::NotInSpan);
        }
        Ok(coeffs)
    }
}

impl<F: ExactScalar> Add<&LaurentPoly<F>> for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn add(mut self, rhs: &LaurentPoly<F>) -> LaurentPoly<F> {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
        self
    }
}

impl<F: ExactScalar> Sub<&LaurentPoly<F>> for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn sub(mut self, rhs: &LaurentPoly<F>) -> LaurentPoly<F> {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
        self
    }
}

impl<F: ExactScalar> Neg for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn neg(self) -> LaurentPoly<F> {
        LaurentPoly { n: self.n, terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<F: ExactScalar> Mul<&LaurentPoly<F>> for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn mul(self, rhs: &LaurentPoly<F>) -> LaurentPoly<F> {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = LaurentPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: ExponentVector = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2);
            }
        }
        out
    }
}

impl<F: ExactScalar> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<F: ExactScalar> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `m_(1^r)` in rank `n`: every signed placement of `r` ones, coefficient 1.
pub fn monomial_m<F: ExactScalar>(n: usize, r: usize) -> Result<LaurentPoly<F>> {
    ColumnPartition::new(n, r)?;
    let mut out = LaurentPoly::zero(n);
    let mut e = vec![0i32; n];
    fill_orbit(&mut out, &mut e, 0, r);
    Ok(out)
}

fn fill_orbit<F: ExactScalar>(out: &mut LaurentPoly<F>, e: &mut Vec<i32>, start: usize, left: usize) {
    if left == 0 {
        out.terms.insert(e.clone(), F::one());
        return;
    }
    let n = e.len();
    for i in start..n {
        if n - i < left {
            break;
        }
        for s in [1, -1] {
            e[i] = s;
            fill_orbit(out, e, i + 1, left - 1);
        }
        e[i] = 0;
    }
}

/// `E_r` from the generating product `prod (1 - y x_i)(1 - y/x_i) = sum (-1)^r E_r y^r`.
///
/// Indices outside `0..=2n` give zero.
pub fn elementary_e<F: ExactScalar>(n: usize, r: i64) -> LaurentPoly<F> {
    if r < 0 || r as usize > 2 * n {
        return LaurentPoly::zero(n);
    }
    // coefficients of y^k, built one variable at a time (signs dropped: the
    // factor 1 + y(x + 1/x) + y^2 yields E_k directly)
    let mut poly: Vec<LaurentPoly<F>> = vec![LaurentPoly::one(n)];
    for i in 0..n {
        let mut x = vec![0; n];
        x[i] = 1;
        let mut xi = vec![0; n];
        xi[i] = -1;
        let mut next = vec![LaurentPoly::zero(n); poly.len() + 2];
        for (k, c) in poly.iter().enumerate() {
            next[k] = next[k].clone() + c;
            next[k + 1] = next[k + 1].clone() + &c.shift(&x, &F::one()) + &c.shift(&xi, &F::one());
            next[k + 2] = next[k + 2].clone() + c;
        }
        poly = next;
    }
    poly.swap_remove(r as usize)
}

/// `E_r = sum_k binom(n - r + 2k, k) m_(1^{r-2k})`, as `(coefficient, column)` pairs.
pub fn e_in_m(n: usize, r: usize) -> Result<Vec<(BigInt, ColumnPartition)>> {
    ColumnPartition::new(n, r)?;
    (0..=r / 2)
        .map(|k| Ok((binom((n - r + 2 * k) as i64, k as i64)?, ColumnPartition::new(n, r - 2 * k)?)))
        .collect()
}

/// Triangular solve `f = sum c_i basis_i`, each basis element led by its
/// lexicographically largest exponent with the list ordered from the top down.
pub fn express_in_basis<F: ExactScalar>(f: &LaurentPoly<F>, basis: &[LaurentPoly<F>]) -> Result<Vec<F>> {
    let mut residual = f.clone();
    let mut out = Vec::with_capacity(basis.len());
    for b in basis {
        let (lead, lc) = b.terms.iter().next_back().ok_or(Error::NotInSpan)?;
        let c = residual.coeff(lead).checked_div(lc)?;
        if !c.is_zero() {
            residual = residual - &b.scale(&c);
        }
        out.push(c);
    }
    if residual.is_zero() {
        Ok(out)
    } else {
        Err(Error::NotInSpan)
    }
}

#[cfg(test)]
mod tests;
