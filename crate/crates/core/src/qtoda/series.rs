use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::ExactScalar;

/// A power series in `nvars` variables with every term of total degree above
/// `degree` discarded. Exponents are nonnegative; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<F> {
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Vec<u32>, F>,
}

fn total(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

impl<F: ExactScalar> TruncatedSeries<F> {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        TruncatedSeries { nvars, degree, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, degree: usize) -> Self {
        Self::monomial(nvars, degree, vec![0; nvars], F::one())
    }

    pub fn monomial(nvars: usize, degree: usize, exp: Vec<u32>, c: F) -> Self {
        let mut s = Self::zero(nvars, degree);
        s.add_term(exp, c);
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> F {
        self.terms.get(exp).cloned().unwrap_or_else(F::zero)
    }

    /// Adds `c z^exp`, silently dropping it beyond the truncation degree.
    pub fn add_term(&mut self, exp: Vec<u32>, c: F) {
        assert_eq!(exp.len(), self.nvars, "exponent length");
        if c.is_zero() || total(&exp) > self.degree {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                let s = v.clone() + &c;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    /// Same series cut down to a lower truncation degree.
    pub fn truncate(&self, degree: usize) -> Self {
        let degree = degree.min(self.degree);
        let terms = self.terms.iter().filter(|(e, _)| total(e) <= degree).map(|(e, c)| (e.clone(), c.clone())).collect();
        TruncatedSeries { nvars: self.nvars, degree, terms }
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> impl Iterator<Item = (&Vec<u32>, &F)> {
        self.terms.iter().filter(move |(e, _)| total(e) == d)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.degree);
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x.clone() * c)).collect();
        TruncatedSeries { nvars: self.nvars, degree: self.degree, terms }
    }

    /// Coefficientwise map; zero images are dropped.
    pub fn map_coeffs<G: ExactScalar>(&self, mut f: impl FnMut(&[u32], &F) -> G) -> TruncatedSeries<G> {
        let mut out = TruncatedSeries::zero(self.nvars, self.degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(e, c));
        }
        out
    }

    /// Like [`map_coeffs`](Self::map_coeffs) with a fallible map.
    pub fn try_map_coeffs<G: ExactScalar, E>(
        &self,
        mut f: impl FnMut(&[u32], &F) -> std::result::Result<G, E>,
    ) -> std::result::Result<TruncatedSeries<G>, E> {
        let mut out = TruncatedSeries::zero(self.nvars, self.degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(e, c)?);
        }
        Ok(out)
    }

    /// Multiply by `c z^exp`.
    pub fn mul_monomial(&self, exp: &[u32], c: &F) -> Self {
        let mut out = Self::zero(self.nvars, self.degree);
        for (e, x) in &self.terms {
            let ne: Vec<u32> = e.iter().zip(exp).map(|(a, b)| a + b).collect();
            out.add_term(ne, x.clone() * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count");
        let mut out = self.truncate(other.degree);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    /// Product truncated at the smaller of the two degrees.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count");
        let degree = self.degree.min(other.degree);
        let mut out = Self::zero(self.nvars, degree);
        for (e1, c1) in &self.terms {
            let d1 = total(e1);
            for (e2, c2) in &other.terms {
                if d1 + total(e2) > degree {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2);
            }
        }
        out
    }

    /// Embed into more variables, the new ones carrying exponent zero.
    pub fn pad(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne.resize(nvars, 0);
                (ne, c.clone())
            })
            .collect();
        TruncatedSeries { nvars, degree: self.degree, terms }
    }
}

impl<F: ExactScalar> fmt::Debug for TruncatedSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries(deg <= {}) {{", self.degree)?;
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {e:?}: {c}")?;
        }
        write!(f, " }}")
    }
}
