use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole in q-Pochhammer symbol ({0})")]
    PochhammerPole(String),
    #[error("pole in hypergeometric term n = {0}")]
    HypergeometricPole(usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not in span of the supplied basis")]
    NotInSpan,
    #[error("operator output not polynomial: {0}")]
    OperatorNotPolynomial(String),
    #[error("non-generic parameters: {0}")]
    NonGeneric(String),
    #[error("resonant spectral parameter at degree {0}")]
    Resonant(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
