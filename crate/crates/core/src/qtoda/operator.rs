use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

use super::series::TruncatedSeries;

/// `(1 - alpha z^mono) / (1 - beta z^mono)`, expanded as a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor<F> {
    pub alpha: F,
    pub beta: F,
    pub mono: Vec<u32>,
}

impl<F: ExactScalar> Factor<F> {
    pub fn ratio(alpha: F, beta: F, mono: Vec<u32>) -> Self {
        Factor { alpha, beta, mono }
    }

    /// A bare numerator `1 - alpha z^mono`.
    pub fn linear(alpha: F, mono: Vec<u32>) -> Self {
        Factor { alpha, beta: F::zero(), mono }
    }

    pub fn series(&self, degree: usize) -> TruncatedSeries<F> {
        let n = self.mono.len();
        let step: usize = self.mono.iter().map(|&x| x as usize).sum();
        assert!(step > 0, "factor monomial must be nonconstant");
        let mut out = TruncatedSeries::one(n, degree);
        // coefficient of z^{k mono} is beta^k - alpha beta^{k-1}
        let mut bk_1 = F::one();
        let mut k = 1u32;
        while (k as usize) * step <= degree {
            let bk = bk_1.clone() * &self.beta;
            let e: Vec<u32> = self.mono.iter().map(|&x| x * k).collect();
            out.add_term(e, bk.clone() - &(self.alpha.clone() * &bk_1));
            bk_1 = bk;
            k += 1;
        }
        out
    }
}

/// One summand `coeff * prod(factors) * T`, where `T` rescales `z^e` by `q^{<charge, e>}`.
#[derive(Clone, Debug)]
pub struct OpTerm<F> {
    pub coeff: F,
    pub factors: Vec<Factor<F>>,
    pub charge: Vec<i64>,
}

/// A q-difference operator written in the series coordinates.
///
/// Every factor has constant term one, so on `z^e` the operator acts as
/// `diagonal(e) z^e` plus terms of strictly higher degree.
#[derive(Clone, Debug)]
pub struct SeriesOperator<F> {
    pub nvars: usize,
    pub q: F,
    pub terms: Vec<OpTerm<F>>,
}

impl<F: ExactScalar> SeriesOperator<F> {
    fn shift_factor(&self, charge: &[i64], e: &[u32]) -> Result<F> {
        let k: i64 = charge.iter().zip(e).map(|(c, &x)| c * x as i64).sum();
        self.q.powi(k)
    }

    pub fn apply(&self, f: &TruncatedSeries<F>) -> Result<TruncatedSeries<F>> {
        let mut out = TruncatedSeries::zero(self.nvars, f.degree());
        for term in &self.terms {
            let mut g = f.try_map_coeffs(|e, c| Ok::<F, Error>(c.clone() * &term.coeff * &self.shift_factor(&term.charge, e)?))?;
            for fac in &term.factors {
                g = g.mul(&fac.series(f.degree()));
            }
            out = out.add(&g);
        }
        Ok(out)
    }

    /// Coefficient of `z^e` in the image of `z^e`.
    pub fn diagonal(&self, e: &[u32]) -> Result<F> {
        let mut acc = F::zero();
        for term in &self.terms {
            acc = acc + &(term.coeff.clone() * &self.shift_factor(&term.charge, e)?);
        }
        Ok(acc)
    }

    /// The eigenfunction with constant term one, solved one total degree at a time.
    ///
    /// A vanishing `eigenvalue - diagonal(e)` at some `e` of degree `d > 0` reports
    /// [`Error::Resonant`]`(d)`.
    pub fn solve_eigen(&self, eigenvalue: &F, degree: usize) -> Result<TruncatedSeries<F>> {
        let mut f = TruncatedSeries::one(self.nvars, degree);
        for d in 1..=degree {
            let image = self.apply(&f.truncate(d))?;
            for e in compositions(self.nvars, d) {
                let gap = eigenvalue.clone() - &self.diagonal(&e)?;
                if gap.is_zero() {
                    return Err(Error::Resonant(d));
                }
                let c = image.coeff(&e).checked_div(&gap)?;
                f.add_term(e, c);
            }
        }
        Ok(f)
    }

    /// `(D - eigenvalue) f`.
    pub fn residual(&self, f: &TruncatedSeries<F>, eigenvalue: &F) -> Result<TruncatedSeries<F>> {
        Ok(self.apply(f)?.sub(&f.scale(eigenvalue)))
    }
}

/// All exponent vectors of `nvars` entries with total `d`.
pub fn compositions(nvars: usize, d: usize) -> Vec<Vec<u32>> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            go(i + 1, left - v, cur, out);
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(0, d as u32, &mut vec![0; nvars], &mut out);
    out
}

/// Series exponent of the `x`-monomial `prod x_i^{k_i}` (0-based `i`) in the
/// coordinates `z_m = x_{m+1}/x_m` (`m < n - 1`) and, when `nvars = n`,
/// `z_{n-1} = 1/x_n`. `None` if the monomial is not a power product of the `z`.
pub fn x_to_z(k: &[i32], nvars: usize) -> Option<Vec<u32>> {
    let n = k.len();
    let mut e = Vec::with_capacity(nvars);
    let mut partial = 0i32;
    for (m, &km) in k.iter().enumerate() {
        partial += km;
        if m < nvars {
            if partial > 0 {
                return None;
            }
            e.push((-partial) as u32);
        }
    }
    if nvars < n && partial != 0 {
        return None;
    }
    Some(e)
}

/// Charge of `x_i` on the series coordinates: `T_{q, x_i} z^e = q^{e_{i-1} - e_i} z^e`.
pub fn charge(i: usize, nvars: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; nvars];
    if i >= 1 {
        v[i - 1] = sign;
    }
    if i < nvars {
        v[i] = -sign;
    }
    v
}
