use crate::bressoud::chain_substitutions;
use crate::error::{Error, Result};
use crate::qkernel::ParamSet;
use crate::scalar::ExactScalar;
use crate::symlaurent::{elementary_e, LaurentPoly};

use super::{oracle_p, CoefficientBundle};

/// The nested parameter strata, from generic (`IV`) down to the one whose
/// polynomials are the `E_r` themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stratum {
    E,
    I,
    II,
    III,
    IV,
}

impl Stratum {
    pub const ALL: [Stratum; 5] = [Stratum::IV, Stratum::III, Stratum::II, Stratum::I, Stratum::E];

    pub fn below(self) -> Option<Stratum> {
        match self {
            Stratum::IV => Some(Stratum::III),
            Stratum::III => Some(Stratum::II),
            Stratum::II => Some(Stratum::I),
            Stratum::I => Some(Stratum::E),
            Stratum::E => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Stratum::IV => "IV",
            Stratum::III => "III",
            Stratum::II => "II",
            Stratum::I => "I",
            Stratum::E => "E",
        }
    }

    /// `(a, b, c, d)` specialized to this stratum; `p` and `tau` are kept.
    pub fn params<F: ExactScalar>(self, ps: &ParamSet<F>) -> Result<ParamSet<F>> {
        let ParamSet { a, b, c, d, tau, .. } = ps.clone();
        match self {
            Stratum::IV => ps.with_abcd(a, b, c, d),
            Stratum::III => ps.with_abcd(a.clone(), -a, c, d),
            Stratum::II => ps.with_abcd(a.clone(), -a, c.clone(), -c),
            Stratum::I => ps.with_abcd(tau.clone() * &c, -(tau * &c), c.clone(), -c),
            Stratum::E => ps.with_abcd(tau.clone(), -tau, F::one(), -F::one()),
        }
    }
}

/// `P_(1^r)` at a stratum, straight from the operator.
pub fn strata_p<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>, stratum: Stratum) -> Result<LaurentPoly<F>> {
    oracle_p(n, r, &stratum.params(ps)?)
}

/// Coefficients `w_i` of `P_(1^r)` at `upper` on `P_(1^{r-i})` one stratum
/// lower, `i = 0..=r`. The coefficient functions are evaluated at the upper
/// stratum's parameters; odd offsets vanish for the two even steps.
pub fn strata_step<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>, upper: Stratum) -> Result<Vec<F>> {
    let cb = CoefficientBundle::new(upper.params(ps)?);
    let s = ps.t_pow(n as i64 - r as i64 + 1);
    (0..=r as i64)
        .map(|i| {
            let sign = if i % 2 == 0 { F::one() } else { -F::one() };
            match upper {
                Stratum::IV => Ok(sign * &cb.chat_o_new(i, 0, &s)?),
                Stratum::III => Ok(sign * &cb.chat_o_new(0, i, &s)?),
                Stratum::II if i % 2 == 0 => cb.chat_e(i / 2, 0, &s),
                Stratum::I if i % 2 == 0 => cb.chat_e(0, i / 2, &s),
                Stratum::II | Stratum::I => Ok(F::zero()),
                Stratum::E => Err(Error::Domain("the E stratum has no lower neighbour".into())),
            }
        })
        .collect()
}

/// Coefficients `v_i` of `P_(1^r)` one stratum below `upper` on `P_(1^{r-i})`
/// at `upper`: row `r` of the swapped Bressoud matrix of that step.
pub fn strata_step_inverse<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>, upper: Stratum) -> Result<Vec<F>> {
    let slot = match upper {
        Stratum::IV => 0,
        Stratum::III => 1,
        Stratum::II => 2,
        Stratum::I => 3,
        Stratum::E => return Err(Error::Domain("the E stratum has no lower neighbour".into())),
    };
    let up = upper.params(ps)?;
    let sub = chain_substitutions(n, &up)?[slot].swapped();
    let mat = sub.matrix(&up, r + 1)?;
    Ok((0..=r).map(|i| mat.get(r, r - i).clone()).collect())
}

/// `P_(1^k)` for `k = 0..=r` at a stratum, from the operator (`E` uses the
/// elementary polynomials directly).
fn family<F: ExactScalar>(n: usize, r: usize, ps: &ParamSet<F>, stratum: Stratum) -> Result<Vec<LaurentPoly<F>>> {
    match stratum {
        Stratum::E => Ok((0..=r).map(|k| elementary_e(n, k as i64)).collect()),
        _ => (0..=r).map(|k| strata_p(n, k, ps, stratum)).collect(),
    }
}

fn combine<F: ExactScalar>(n: usize, r: usize, w: &[F], basis: &[LaurentPoly<F>]) -> LaurentPoly<F> {
    let mut out = LaurentPoly::zero(n);
    for (i, x) in w.iter().enumerate() {
        if !x.is_zero() {
            out = out + &basis[r - i].scale(x);
        }
    }
    out
}

/// Checks one step both ways at rank `n`: the expansion of `upper` over the
/// stratum below, and the inverse expansion, for every `r <= n`.
pub fn check_step<F: ExactScalar>(n: usize, ps: &ParamSet<F>, upper: Stratum) -> Result<(bool, bool)> {
    let lower = upper.below().ok_or_else(|| Error::Domain("the E stratum has no lower neighbour".into()))?;
    let hi = family(n, n, ps, upper)?;
    let lo = family(n, n, ps, lower)?;
    let mut forward = true;
    let mut inverse = true;
    for r in 0..=n {
        forward &= combine(n, r, &strata_step(n, r, ps, upper)?, &lo) == hi[r];
        inverse &= combine(n, r, &strata_step_inverse(n, r, ps, upper)?, &hi) == lo[r];
    }
    Ok((forward, inverse))
}
