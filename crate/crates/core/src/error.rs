//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FsaError {
    #[error("bad alphabet: {0}")]
    BadAlphabet(String),
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),
    #[error("alphabet mismatch between operands")]
    AlphabetMismatch,
    #[error("malformed automaton: {0}")]
    BadAutomaton(String),
    #[error("state budget exceeded ({0} states)")]
    StateBudget(usize),
}

#[derive(Debug, Error)]
pub enum SeriesError {
    #[error("denominator vanishes at 0")]
    PoleAtZero,
    #[error("division by zero polynomial")]
    DivisionByZero,
}

#[derive(Debug, Error)]
pub enum LangError {
    #[error(transparent)]
    Fsa(#[from] FsaError),
    #[error("element budget exceeded while growing ball ({0} elements)")]
    BallBudget(usize),
    #[error("oracle has no exact conjugacy key; refusing conjugacy-dependent language (pass force=true for a bounded inexact search)")]
    InexactConjugacy,
    #[error("supplied geodesic automaton disagrees with the oracle: {0}")]
    InvalidGeodesicDfa(String),
}

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("unknown group tag {0:?}")]
    UnknownTag(String),
    #[error("unknown expression tag {0:?}")]
    UnknownExpression(String),
    #[error("unknown witness pattern {0:?}")]
    UnknownPattern(String),
    #[error(transparent)]
    Lang(#[from] LangError),
    #[error(transparent)]
    Fsa(#[from] FsaError),
}

#[derive(Debug, Error)]
pub enum GarsideError {
    #[error("unknown atom {0:?}")]
    UnknownAtom(String),
    #[error("element is a power of the twist element; no factors to cycle")]
    NoFactors,
    #[error("parameters out of the validated range: {0}")]
    OutOfValidatedRange(String),
    #[error("malformed input word: {0}")]
    BadWord(String),
}

#[derive(Debug, Error)]
pub enum GraphProductError {
    #[error("bad graph specification: {0}")]
    BadSpec(String),
    #[error(transparent)]
    Fsa(#[from] FsaError),
}
