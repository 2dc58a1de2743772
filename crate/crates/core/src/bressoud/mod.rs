//! Bressoud-type lower triangular matrices and the five-term relations of the
//! one-column transition coefficients.
//!
//! The four families are `M` (even offsets, base `q`), its diagonal conjugate
//! `M~` (base `t`), `K`, and its conjugate `N`. Each is inverted by swapping
//! its `x` and `y` slots. At the rank-`n` substitutions in [`Substitution`] the
//! entries reproduce the coefficient functions of the degeneration chain.

mod families;
mod matrix;
mod series;

pub use families::{mat_k, mat_m, mat_mtilde, mat_n, mtilde_by_conjugation, n_by_conjugation};
pub use matrix::{Orientation, TriangularMatrix};
pub use series::{
    b_series, five_term_residual, four_term_residual, m0, m1, m_series, m_series_by_sum, mformula_residuals, n0,
    n0_printed, n0rel_residual, n1, n_series, n_series_by_sum, nrel_residuals, strb_residual,
};

use crate::error::Result;
use crate::qkernel::ParamSet;
use crate::scalar::ExactScalar;

/// Arguments of one Bressoud matrix at a rank-`n` substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution<F> {
    /// `N(u_1..u_4, v; x, y; t)`.
    N { us: [F; 4], v: F, x: F, y: F },
    /// `M~(u, v; x, y; t)` with `u` and `v` given by square roots.
    Mtilde { u_half: F, v_half: F, x: F, y: F },
    /// `M(u, v; x, y; t)`.
    M { u: F, v: F, x: F, y: F },
}

impl<F: ExactScalar> Substitution<F> {
    /// The same matrix with `x` and `y` exchanged, i.e. its inverse.
    pub fn swapped(&self) -> Self {
        match self.clone() {
            Substitution::N { us, v, x, y } => Substitution::N { us, v, x: y, y: x },
            Substitution::Mtilde { u_half, v_half, x, y } => Substitution::Mtilde { u_half, v_half, x: y, y: x },
            Substitution::M { u, v, x, y } => Substitution::M { u, v, x: y, y: x },
        }
    }

    pub fn matrix(&self, ps: &ParamSet<F>, size: usize) -> Result<TriangularMatrix<F>> {
        let t = ps.t();
        match self {
            Substitution::N { us, v, x, y } => mat_n(us, v, x, y, &t, size),
            Substitution::Mtilde { u_half, v_half, x, y } => mat_mtilde(u_half, v_half, x, y, &t, size),
            Substitution::M { u, v, x, y } => mat_m(u, v, x, y, &t, size),
        }
    }
}

/// The four substitutions at rank `n`, ordered from the top step
/// (`IV -> III`) to the bottom step (`I -> E`).
pub fn chain_substitutions<F: ExactScalar>(n: usize, ps: &ParamSet<F>) -> Result<[Substitution<F>; 4]> {
    let ParamSet { a, b, c, d, .. } = ps;
    let n = n as i64;
    let t = ps.t();
    let tn = ps.t_pow(-n);
    let tn1 = ps.t_pow(1 - n);
    let ac = a.clone() * c;
    let a2 = a.square();
    let c2 = c.square();
    let top = Substitution::N {
        us: [tn.clone(), tn1.checked_div(&ac)?, tn1.checked_div(&(a.clone() * d))?, tn1.checked_div(&(c.clone() * d))?],
        v: -ps.t_pow(-2 * n).checked_div(&(ac.clone() * d))?,
        x: -t.checked_div(b)?,
        y: t.checked_div(a)?,
    };
    let second = Substitution::N {
        us: [tn.clone(), -tn1.checked_div(&a2)?, tn1.checked_div(&ac)?, -tn1.checked_div(&ac)?],
        v: ps.t_pow(-2 * n).checked_div(&(a2.clone() * c))?,
        x: -t.checked_div(d)?,
        y: t.checked_div(c)?,
    };
    let third = Substitution::Mtilde {
        u_half: tn1.checked_div(&c2)?,
        v_half: ps.t_pow(-n - 2),
        x: c2.checked_div(&(t.clone() * &a2))?,
        y: ps.t_pow(-2),
    };
    let bottom = Substitution::M { u: tn, v: t, x: c2.inv()?, y: F::one() };
    Ok([top, second, third, bottom])
}

/// `M = M~ M` at rank `n`.
pub fn sans_m<F: ExactScalar>(n: usize, ps: &ParamSet<F>, size: usize) -> Result<TriangularMatrix<F>> {
    let [_, _, third, bottom] = chain_substitutions(n, ps)?;
    third.matrix(ps, size)?.mul(&bottom.matrix(ps, size)?)
}

/// `N = N N` at rank `n`.
pub fn sans_n<F: ExactScalar>(n: usize, ps: &ParamSet<F>, size: usize) -> Result<TriangularMatrix<F>> {
    let [top, second, _, _] = chain_substitutions(n, ps)?;
    top.matrix(ps, size)?.mul(&second.matrix(ps, size)?)
}

/// The full transition block `N M`: row `r` holds the coefficients of
/// `P_(1^r)` on `E_{r-p}` in column `r - p`.
pub fn b_matrix<F: ExactScalar>(n: usize, ps: &ParamSet<F>, size: usize) -> Result<TriangularMatrix<F>> {
    sans_n(n, ps, size)?.mul(&sans_m(n, ps, size)?)
}

#[cfg(test)]
mod tests;
