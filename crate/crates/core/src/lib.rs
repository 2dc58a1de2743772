//! Exact arithmetic for one-column Koornwinder polynomials of type BC_n and
//! mechanical checking of the identities relating their expansions.

pub mod bressoud;
pub mod error;
pub mod koornwinder;
pub mod kostka;
pub mod qkernel;
pub mod qtoda;
pub mod symlaurent;
pub mod transition;
pub mod verify;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{ExactScalar, RatFunc, Rational, UPoly};
