//! Regular expression trees and Thompson compilation.
//!
//! Expressions are built programmatically; there is no concrete syntax here.
//! Sub-expressions are ordinary values, so shared pieces are reused with
//! `clone()` on named bindings.

use super::alphabet::Alphabet;
use super::nfa::Nfa;
use crate::error::FsaError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    /// The empty language.
    Empty,
    /// The language `{ε}`.
    Epsilon,
    /// A single letter, by name; resolved against the alphabet at compile time.
    Literal(String),
    Union(Vec<Regex>),
    Concat(Vec<Regex>),
    Star(Box<Regex>),
    Plus(Box<Regex>),
    Optional(Box<Regex>),
}

impl Regex {
    pub fn lit(name: &str) -> Regex {
        Regex::Literal(name.to_string())
    }

    /// Concatenation of a word given letter by letter, e.g. `word("ab")` for
    /// single-character letter names.
    pub fn letters(names: &[&str]) -> Regex {
        Regex::Concat(names.iter().map(|n| Regex::lit(n)).collect())
    }

    pub fn alt<I: IntoIterator<Item = Regex>>(items: I) -> Regex {
        Regex::Union(items.into_iter().collect())
    }

    pub fn cat<I: IntoIterator<Item = Regex>>(items: I) -> Regex {
        Regex::Concat(items.into_iter().collect())
    }

    pub fn star(self) -> Regex {
        Regex::Star(Box::new(self))
    }

    pub fn plus(self) -> Regex {
        Regex::Plus(Box::new(self))
    }

    pub fn optional(self) -> Regex {
        Regex::Optional(Box::new(self))
    }
}

/// Thompson construction; `L(result)` is exactly the denoted language.
pub fn compile_regex(expr: &Regex, alphabet: &Alphabet) -> Result<Nfa, FsaError> {
    let mut nfa = Nfa::empty(alphabet.clone());
    let (start, accept) = build(expr, alphabet, &mut nfa)?;
    nfa.start.insert(start);
    nfa.accept.insert(accept);
    Ok(nfa)
}

/// Returns the (entry, exit) states of the fragment for `expr`.
fn build(expr: &Regex, alphabet: &Alphabet, nfa: &mut Nfa) -> Result<(usize, usize), FsaError> {
    match expr {
        Regex::Empty => {
            let s = nfa.add_state();
            let t = nfa.add_state();
            Ok((s, t))
        }
        Regex::Epsilon => {
            let s = nfa.add_state();
            Ok((s, s))
        }
        Regex::Literal(name) => {
            let id = alphabet
                .id_of(name)
                .ok_or_else(|| FsaError::UnknownLetter(name.clone()))?;
            let s = nfa.add_state();
            let t = nfa.add_state();
            nfa.add_transition(s, id, t);
            Ok((s, t))
        }
        Regex::Union(items) => {
            let s = nfa.add_state();
            let t = nfa.add_state();
            for item in items {
                let (is, it) = build(item, alphabet, nfa)?;
                nfa.add_epsilon(s, is);
                nfa.add_epsilon(it, t);
            }
            Ok((s, t))
        }
        Regex::Concat(items) => {
            let s = nfa.add_state();
            let mut cur = s;
            for item in items {
                let (is, it) = build(item, alphabet, nfa)?;
                nfa.add_epsilon(cur, is);
                cur = it;
            }
            Ok((s, cur))
        }
        Regex::Star(inner) => {
            let s = nfa.add_state();
            let (is, it) = build(inner, alphabet, nfa)?;
            nfa.add_epsilon(s, is);
            nfa.add_epsilon(it, s);
            Ok((s, s))
        }
        Regex::Plus(inner) => {
            let (is, it) = build(inner, alphabet, nfa)?;
            nfa.add_epsilon(it, is);
            Ok((is, it))
        }
        Regex::Optional(inner) => {
            let s = nfa.add_state();
            let t = nfa.add_state();
            let (is, it) = build(inner, alphabet, nfa)?;
            nfa.add_epsilon(s, is);
            nfa.add_epsilon(it, t);
            nfa.add_epsilon(s, t);
            Ok((s, t))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsa::dfa::determinize;

    #[test]
    fn a_star_b() {
        let a = Alphabet::self_inverse(&["a", "b"]).unwrap();
        let r = Regex::cat([Regex::lit("a").star(), Regex::lit("b")]);
        let d = determinize(&compile_regex(&r, &a).unwrap());
        assert!(d.accepts(&a.parse_word("aaab").unwrap()));
        assert!(!d.accepts(&a.parse_word("ba").unwrap()));
    }

    #[test]
    fn universal_union_star() {
        let a = Alphabet::self_inverse(&["a", "b"]).unwrap();
        let r = Regex::alt([Regex::lit("a"), Regex::lit("b")]).star();
        let d = determinize(&compile_regex(&r, &a).unwrap());
        for w in ["", "a", "ab", "bbba"] {
            assert!(d.accepts(&a.parse_word(w).unwrap()));
        }
    }

    #[test]
    fn unknown_literal_is_an_error() {
        let a = Alphabet::self_inverse(&["a"]).unwrap();
        assert!(compile_regex(&Regex::lit("z"), &a).is_err());
    }

    #[test]
    fn plus_and_optional() {
        let a = Alphabet::self_inverse(&["a"]).unwrap();
        let d = determinize(&compile_regex(&Regex::lit("a").plus(), &a).unwrap());
        assert!(!d.accepts(&Word::empty()));
        assert!(d.accepts(&a.parse_word("aa").unwrap()));
        let d = determinize(&compile_regex(&Regex::lit("a").optional(), &a).unwrap());
        assert!(d.accepts(&Word::empty()));
        assert!(d.accepts(&a.parse_word("a").unwrap()));
        assert!(!d.accepts(&a.parse_word("aa").unwrap()));
    }

    use crate::fsa::alphabet::Word;
}
