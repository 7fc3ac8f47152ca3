use thiserror::Error;

use crate::poset::Diagnostic;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("poset has no elements")]
    EmptyPoset,

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("cover relations contain a cycle: {}", .0.join(" < "))]
    Cycle(Vec<String>),

    #[error("invalid ranked poset: {}", join_diagnostics(.0))]
    Invalid(Vec<Diagnostic>),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("fixed subposet empty")]
    EmptyFixedSubposet,

    #[error("fixed subposet is not a generalized ranked poset: {0}")]
    FixedSubposetRank(String),

    #[error("not unitriangular: {0}")]
    NotUnitriangular(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("series undefined at 0: denominator has zero constant term")]
    SeriesUndefined,

    #[error("series denominator must have constant term 1 or -1, found {0}")]
    NonUnitDenominator(String),

    #[error("{what} must be at most {max}, got {got}")]
    TooLarge {
        what: &'static str,
        max: u64,
        got: u64,
    },

    #[error("{0}")]
    OutOfRange(String),

    #[error("Hilbert theorem requires ranked poset: {0}")]
    NotRanked(String),

    #[error("theorem requires a unique minimal element, found {}: {}", .0.len(), .0.join(", "))]
    NotUniqueMinimum(Vec<String>),

    #[error("invalid factor permutation: {0}")]
    InvalidPermutation(String),

    #[error("factors {0} and {1} are not isomorphic")]
    NonIsomorphicFactors(usize, usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

fn join_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
