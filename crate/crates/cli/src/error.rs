use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] koornwinder::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        use koornwinder::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::DivisionByZero => "division-by-zero",
                E::PochhammerPole(_) | E::HypergeometricPole(_) => "pole",
                E::Domain(_) => "domain",
                E::NotInSpan => "not-in-span",
                E::OperatorNotPolynomial(_) => "operator",
                E::NonGeneric(_) => "non-generic",
                E::Resonant(_) => "resonant",
                E::Parse(_) => "parse",
            },
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
        }
    }

    /// `{"error": {"kind": ..., "message": ...}}`.
    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}
