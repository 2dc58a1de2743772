use serde::{Deserialize, Serialize};

use super::LaurentPoly;
use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, Rational};

#[derive(Serialize, Deserialize)]
struct WireTerm {
    exp: Vec<i32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct WirePoly {
    n: usize,
    terms: Vec<WireTerm>,
}

impl<F: ExactScalar> LaurentPoly<F> {
    /// `{"n": n, "terms": [{"exp": [...], "coeff": "num/den"}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let wire = WirePoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| WireTerm { exp: e.clone(), coeff: c.to_wire() }).collect(),
        };
        serde_json::to_value(wire).expect("plain data serializes")
    }
}

impl LaurentPoly<Rational> {
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let wire: WirePoly = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut p = LaurentPoly::zero(wire.n);
        for t in wire.terms {
            if t.exp.len() != wire.n {
                return Err(Error::Parse(format!("exponent {:?} has wrong length", t.exp)));
            }
            p.add_term(t.exp, t.coeff.parse()?);
        }
        Ok(p)
    }
}
