use thiserror::Error;

use crate::graph::PropellerParams;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parameters {0} do not have the required shape: {1}")]
    Shape(PropellerParams, String),

    #[error("schema constraint not satisfied: {0}")]
    Constraint(String),

    #[error("schema modulus {modulus} does not divide n = {n}")]
    Divisibility { modulus: usize, n: usize },

    #[error("schema image is not a bijection: vertex {missing} has no preimage")]
    NotBijective { missing: usize },

    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("graph has no cycle")]
    NoCycle,

    #[error("operation requires girth at least 5, graph has girth {0}")]
    GirthTooSmall(usize),

    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),

    #[error("graph carries no edge kinds")]
    Unlabeled,

    #[error(
        "classification inconsistency at {params}: edge-transitive = {edge_transitive}, families = {families}"
    )]
    ClassificationInconsistency {
        params: PropellerParams,
        edge_transitive: bool,
        families: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
