use crate::error::{Error, Result};
use crate::qkernel::ParamSet;
use crate::scalar::ExactScalar;
use crate::symlaurent::{elementary_e, LaurentPoly};

use super::CoefficientBundle;

/// Which odd coefficient function drives the fourfold sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `ĉ_o`, the original form.
    Hs,
    /// `ĉ_o^new`, the factorized form.
    HsNew,
}

/// Coefficients `w_p` with `P_(1^r) = sum_p w_p E_{r-p}`, `p = 0..=r`.
pub fn fourfold_e_coeffs<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>, variant: Variant) -> Result<Vec<F>> {
    if r > n {
        return Err(Error::Domain(format!("column length {r} exceeds rank {n}")));
    }
    fourfold_coeffs_at(&ps.t_pow(n as i64 - r as i64 + 1), r, ps, variant)
}

/// The fourfold coefficients with the spectral point `s = t^{n-r+1}` left free.
pub fn fourfold_coeffs_at<F: ExactScalar>(s0: &F, r: usize, ps: &ParamSet<F>, variant: Variant) -> Result<Vec<F>> {
    let cb = CoefficientBundle::new(ps.clone());
    let r = r as i64;
    let mut w = vec![F::zero(); r as usize + 1];
    for i in 0..=r {
        for j in 0..=r - i {
            let odd = match variant {
                Variant::Hs => cb.chat_o(i, j, s0)?,
                Variant::HsNew => cb.chat_o_new(i, j, s0)?,
            };
            if odd.is_zero() {
                continue;
            }
            let sign = if (i + j) % 2 == 0 { odd } else { -odd };
            let s = s0.clone() * &ps.t_pow(i + j);
            for k in 0..=(r - i - j) / 2 {
                for l in 0..=(r - i - j - 2 * k) / 2 {
                    let even = cb.chat_e(k, l, &s)?;
                    let p = (2 * k + 2 * l + i + j) as usize;
                    w[p] = w[p].clone() + &(even * &sign);
                }
            }
        }
    }
    Ok(w)
}

/// `sum_p w_p E_{r-p}` as a Laurent polynomial.
pub fn combine_e<F: ExactScalar>(n: usize, r: usize, w: &[F]) -> LaurentPoly<F> {
    let mut out = LaurentPoly::zero(n);
    for (p, x) in w.iter().enumerate() {
        if !x.is_zero() {
            out = out + &elementary_e::<F>(n, r as i64 - p as i64).scale(x);
        }
    }
    out
}

/// `P_(1^r)` from the fourfold summation formula.
pub fn p_via_fourfold<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>, variant: Variant) -> Result<LaurentPoly<F>> {
    Ok(combine_e(n, r, &fourfold_e_coeffs(n, r, ps, variant)?))
}
