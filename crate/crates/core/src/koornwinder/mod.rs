//! One-column Koornwinder polynomials: the operator, its eigenfunctions, and
//! the explicit fourfold-sum and stratified constructions.

mod certificate;
mod coeffs;
mod fourfold;
mod operator;
mod strata;

pub use certificate::blacklist;
pub use coeffs::CoefficientBundle;
pub(crate) use coeffs::sq_over_pochhammer;
pub use fourfold::{combine_e, fourfold_coeffs_at, fourfold_e_coeffs, p_via_fourfold, Variant};
pub use strata::{check_step, strata_p, strata_step, strata_step_inverse, Stratum};
pub use operator::{apply_operator, eigenvalue, from_m_coeffs, operator_matrix, oracle_all, oracle_p, p_coeffs_from_matrix};

#[cfg(test)]
mod tests;
