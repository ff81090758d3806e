use thiserror::Error;

use crate::linalg::Counterexample;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("space mismatch: expected `{expected}`, found `{found}`")]
    SpaceMismatch { expected: String, found: String },

    #[error("law `{law}` violated at {counterexample}")]
    LawViolation {
        law: String,
        counterexample: Box<Counterexample>,
    },

    #[error("illegal comodule: {0}")]
    IllegalComodule(String),

    #[error("illegal chain complex: {0}")]
    IllegalChain(String),

    #[error("carrier is not admissible as a differential object: {0}")]
    NotAdmissible(String),

    #[error("rank mismatch: carrier has rank {carrier}, bicharacter has rank {bicharacter}")]
    RankMismatch { carrier: usize, bicharacter: usize },

    #[error("square law violated at bidegree ({n}, {m})")]
    SquareViolation { n: i64, m: i64 },

    #[error("malformed label `{input}`: {reason}")]
    LabelParse { input: String, reason: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn mismatch(expected: impl ToString, found: impl ToString) -> Self {
        Error::SpaceMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn violation(law: impl Into<String>, counterexample: Counterexample) -> Self {
        Error::LawViolation {
            law: law.into(),
            counterexample: Box::new(counterexample),
        }
    }
}
