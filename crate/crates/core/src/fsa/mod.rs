//! Finite-state automata over inverse-closed ordered alphabets.
//!
//! Everything here is an immutable value; operations are pure functions.
//! [`Dfa`]s are always complete, and [`minimize`] produces a canonical
//! machine so that structural equality decides language equality.

mod alphabet;
mod dfa;
mod io;
mod nfa;
mod regex;

pub use alphabet::{Alphabet, LetterDescriptor, LetterId, Word};
pub use dfa::{
    boolean_op, complement, determinize, equivalent, minimize, piecewise_excluding, quotient,
    BoolOp, Dfa, QuotientSide,
};
pub use io::{dfa_from_json, dfa_to_dot, dfa_to_json, nfa_from_json, nfa_to_dot, nfa_to_json};
pub use nfa::{concatenate, cyclic_closure, insertion, Nfa};
pub use regex::{compile_regex, Regex};

/// Compile, determinize, and minimize in one step.
pub fn dfa_of_regex(expr: &Regex, alphabet: &Alphabet) -> Result<Dfa, crate::error::FsaError> {
    Ok(minimize(&determinize(&compile_regex(expr, alphabet)?)))
}
