use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExactScalar, UPoly};
use crate::error::{Error, Result};

/// Reduced ratio of polynomials in one indeterminate, written `t` when printed.
///
/// Invariant: numerator and denominator are coprime, the denominator is
/// monic, and zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    /// The indeterminate itself.
    pub fn indeterminate() -> Self {
        RatFunc { num: UPoly::x(), den: UPoly::one() }
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc { num: p, den: UPoly::one() }
    }

    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: UPoly::one() };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        let lc = den.leading().cloned().expect("nonzero denominator");
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Coefficient of `t^k` in the numerator, meaningful when polynomial.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.num.coeffs().get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Value at a rational point; a pole reports [`Error::DivisionByZero`].
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num.render("t");
        if self.den.is_one() {
            return write!(f, "{n}");
        }
        let wrap = |s: String, p: &UPoly| if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 { format!("({s})") } else { s };
        write!(f, "{}/{}", wrap(n, &self.num), wrap(self.den.render("t"), &self.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if rhs.num.is_zero() {
            return self;
        }
        if self.num.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den);
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc::reduce(num, &self.den * &rhs.den);
        }
        let b = self.den.div_rem(&g).0;
        let d = rhs.den.div_rem(&g).0;
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        RatFunc::reduce(num, &(&b * &d) * &g)
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: UPoly::one() };
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.div_rem(&g1).0;
        let d = rhs.den.div_rem(&g1).0;
        let c = rhs.num.div_rem(&g2).0;
        let b = self.den.div_rem(&g2).0;
        let num = &a * &c;
        let den = &b * &d;
        let lc = den.leading().cloned().expect("nonzero denominator");
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

impl<'a> Sub<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den }
    }
}

impl ExactScalar for RatFunc {
    fn zero() -> Self {
        RatFunc { num: UPoly::zero(), den: UPoly::one() }
    }

    fn one() -> Self {
        RatFunc { num: UPoly::one(), den: UPoly::one() }
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    fn from_rational(r: &BigRational) -> Self {
        RatFunc { num: UPoly::constant(r.clone()), den: UPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.leading().cloned().expect("nonzero numerator");
        let inv = lc.recip();
        Ok(RatFunc { num: self.den.scale(&inv), den: self.num.scale(&inv) })
    }
}
