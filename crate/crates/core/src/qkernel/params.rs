use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, Rational};

/// The six parameters `(p, tau, a, b, c, d)` with `q = p^2` and `t = tau^2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamSet<F> {
    pub p: F,
    pub tau: F,
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
}

impl<F: ExactScalar> ParamSet<F> {
    /// Rejects zero `p`, `tau` or a zero among `a, b, c, d` (all appear inverted somewhere).
    pub fn new(p: F, tau: F, a: F, b: F, c: F, d: F) -> Result<Self> {
        for (name, v) in [("p", &p), ("tau", &tau), ("a", &a), ("b", &b), ("c", &c), ("d", &d)] {
            if v.is_zero() {
                return Err(Error::Domain(format!("parameter {name} must be nonzero")));
            }
        }
        Ok(ParamSet { p, tau, a, b, c, d })
    }

    /// Builds the set and checks it against `cert`.
    pub fn certified(p: F, tau: F, a: F, b: F, c: F, d: F, cert: &GenericityCertificate<F>) -> Result<Self> {
        let ps = Self::new(p, tau, a, b, c, d)?;
        cert.check(&ps)?;
        Ok(ps)
    }

    pub fn q(&self) -> F {
        self.p.square()
    }

    pub fn t(&self) -> F {
        self.tau.square()
    }

    pub fn abcd(&self) -> F {
        self.a.clone() * &self.b * &self.c * &self.d
    }

    /// `alpha^2 = abcd/q`.
    pub fn alpha_sq(&self) -> F {
        self.abcd() * &self.q().inv().expect("q is nonzero by construction")
    }

    /// Same `p, tau` with new `(a, b, c, d)`.
    pub fn with_abcd(&self, a: F, b: F, c: F, d: F) -> Result<Self> {
        Self::new(self.p.clone(), self.tau.clone(), a, b, c, d)
    }

    /// `tau^k` for any integer `k`.
    pub fn tau_pow(&self, k: i64) -> F {
        self.tau.powi(k).expect("tau is nonzero by construction")
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(&self, k: i64) -> F {
        self.tau_pow(2 * k)
    }
}

impl ParamSet<Rational> {
    /// Draws `p, tau, a, b, c, d` as signed ratios with numerator and
    /// denominator in `[2, 97]`, redrawing until `cert` passes.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, cert: &GenericityCertificate<Rational>) -> Self {
        loop {
            let mut draw = |signed: bool| {
                let n: i64 = rng.gen_range(2..=97);
                let d: i64 = rng.gen_range(2..=97);
                let s = if signed && rng.gen_bool(0.5) { -1 } else { 1 };
                Rational::new(s * n, d).expect("nonzero denominator")
            };
            let (p, tau) = (draw(false), draw(false));
            let (a, b, c, d) = (draw(true), draw(true), draw(true), draw(true));
            if let Ok(ps) = Self::certified(p, tau, a, b, c, d, cert) {
                return ps;
            }
        }
    }

    /// Lossless conversion into another coefficient field.
    pub fn lift<G: ExactScalar>(&self) -> ParamSet<G> {
        let l = |r: &Rational| G::from_rational(&r.0);
        ParamSet { p: l(&self.p), tau: l(&self.tau), a: l(&self.a), b: l(&self.b), c: l(&self.c), d: l(&self.d) }
    }
}

/// A family of forbidden values `eps * p^e0 a^e1 b^e2 c^e3 d^e4 * tau^k = 1`
/// for every `k` in `-tau_range..=tau_range` (skipping `k = 0` when the
/// monomial is trivial).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlacklistFamily {
    pub label: String,
    pub sign: i8,
    /// Exponents of `p, a, b, c, d`.
    pub exps: [i32; 5],
    pub tau_range: i64,
}

impl BlacklistFamily {
    pub fn new(label: impl Into<String>, sign: i8, exps: [i32; 5], tau_range: i64) -> Self {
        BlacklistFamily { label: label.into(), sign, exps, tau_range }
    }

    fn check<F: ExactScalar>(&self, ps: &ParamSet<F>) -> Result<()> {
        let bases = [&ps.p, &ps.a, &ps.b, &ps.c, &ps.d];
        let mut m = if self.sign < 0 { -F::one() } else { F::one() };
        for (b, &e) in bases.iter().zip(self.exps.iter()) {
            m = m * &b.powi(e as i64)?;
        }
        let trivial = self.sign > 0 && self.exps.iter().all(|&e| e == 0);
        let tinv = ps.tau.inv()?;
        let mut up = m.clone();
        let mut down = m;
        for k in 0..=self.tau_range {
            if !(trivial && k == 0) && (up.is_one() || down.is_one()) {
                return Err(Error::NonGeneric(format!("{} vanishes at tau^{k}", self.label)));
            }
            up = up * &ps.tau;
            down = down * &tinv;
        }
        Ok(())
    }
}

/// A labeled scalar that must be nonzero.
pub type Predicate<F> = Arc<dyn Fn(&ParamSet<F>) -> Result<F> + Send + Sync>;

/// Denominator blacklist a parameter set has to avoid.
#[derive(Clone, Default)]
pub struct GenericityCertificate<F> {
    pub families: Vec<BlacklistFamily>,
    pub predicates: Vec<(String, Predicate<F>)>,
}

impl<F: ExactScalar> GenericityCertificate<F> {
    pub fn new() -> Self {
        GenericityCertificate { families: Vec::new(), predicates: Vec::new() }
    }

    pub fn family(mut self, fam: BlacklistFamily) -> Self {
        self.families.push(fam);
        self
    }

    pub fn predicate(mut self, label: impl Into<String>, pred: Predicate<F>) -> Self {
        self.predicates.push((label.into(), pred));
        self
    }

    pub fn extend(mut self, other: GenericityCertificate<F>) -> Self {
        self.families.extend(other.families);
        self.predicates.extend(other.predicates);
        self
    }

    pub fn check(&self, ps: &ParamSet<F>) -> Result<()> {
        for fam in &self.families {
            fam.check(ps)?;
        }
        for (label, pred) in &self.predicates {
            match pred(ps) {
                Ok(v) if !v.is_zero() => {}
                _ => return Err(Error::NonGeneric(label.clone())),
            }
        }
        Ok(())
    }
}

impl<F> fmt::Debug for GenericityCertificate<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GenericityCertificate")
            .field("families", &self.families)
            .field("predicates", &self.predicates.iter().map(|(l, _)| l.as_str()).collect::<Vec<_>>())
            .finish()
    }
}
