//! Rank-one Askey-Wilson eigenfunctions and the `A_{n-1}` / `B_n` q-Toda
//! eigenfunctions, with a mechanical check of the branching expansion of the
//! `B_n` Toda eigenfunction.
//!
//! The branching formula is an unproved conjecture; [`conjecture_residual`]
//! only confirms it through a finite total degree.

mod askey_wilson;
mod operator;
mod series;
mod toda;

pub use askey_wilson::{
    aw_c_e, aw_c_o, aw_c_o_new, aw_eigenvalue, aw_operator, aw_series_by_fourfold, aw_series_by_recursion, AwParams,
};
pub use operator::{charge, compositions, x_to_z, Factor, OpTerm, SeriesOperator};
pub use series::TruncatedSeries;
pub use toda::{
    branching_e, branching_thetas, c_macdonald, c_toda, conjecture_residual, d_bn_at_point, todaa_f, todaa_macdonald_f,
    todaa_macdonald_operator, todaa_operator, todab_eigenvalue, todab_f, todab_macdonald_operator, todab_operator,
    todab_operator_apply, ThetaMatrix,
};
