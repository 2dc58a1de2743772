//! Exact coefficient fields.
//!
//! Everything downstream is generic over [`ExactScalar`]; the two instances are
//! [`Rational`] (arbitrary-precision rationals) and [`RatFunc`] (reduced ratios of
//! univariate polynomials over the rationals in one indeterminate).

mod poly;
mod ratfunc;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::error::{Error, Result};

pub use poly::UPoly;
pub use ratfunc::RatFunc;
pub use rational::Rational;

/// A commutative field with exact, canonical equality.
pub trait ExactScalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse; the zero element reports [`Error::DivisionByZero`].
    fn inv(&self) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * &other.inv()?)
    }

    fn powu(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }

    fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.powu(e as u64))
        } else {
            Ok(self.inv()?.powu(e.unsigned_abs()))
        }
    }

    fn square(&self) -> Self {
        self.clone() * self
    }

    /// `1 - self`, the ubiquitous Pochhammer factor.
    fn one_minus(&self) -> Self {
        Self::one() - self
    }

    /// Text form used in JSON output.
    fn to_wire(&self) -> String {
        self.to_string()
    }
}

/// Product of a list of factors divided by another list, with a single
/// inversion at the end.
pub fn ratio<F: ExactScalar>(num: &[F], den: &[F]) -> Result<F> {
    let n = num.iter().fold(F::one(), |acc, x| acc * x);
    let d = den.iter().fold(F::one(), |acc, x| acc * x);
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    n.checked_div(&d)
}
