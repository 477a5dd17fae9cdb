//! Inverse-closed ordered alphabets and words over them.
//!
//! An [`Alphabet`] is a finite ordered list of distinct letter names together
//! with an involution pairing each letter with its inverse (a letter may be
//! its own inverse).  The storage order *is* the total order used for all
//! lexicographic and shortlex comparisons in this crate.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::FsaError;

/// Index of a letter within its alphabet.  Letters are compared by index,
/// which coincides with the alphabet's total order.
pub type LetterId = u16;

#[derive(Debug, PartialEq, Eq)]
struct AlphabetInner {
    names: Vec<String>,
    inverse: Vec<LetterId>,
    single_char: bool,
}

/// An ordered, inverse-closed alphabet.
///
/// Cheap to clone (shared internally); two alphabets compare equal when they
/// have the same letters, in the same order, with the same involution.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet(Arc<AlphabetInner>);

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet[")?;
        for (i, n) in self.0.names.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "]")
    }
}

impl Alphabet {
    /// Builds an alphabet from `(letter, inverse letter)` name pairs, in
    /// order.  Every letter must appear exactly once and the pairing must be
    /// an involution.
    pub fn new(pairs: &[(&str, &str)]) -> Result<Alphabet, FsaError> {
        let names: Vec<String> = pairs.iter().map(|(n, _)| n.to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(FsaError::BadAlphabet("empty letter name".into()));
            }
            if names[..i].contains(n) {
                return Err(FsaError::BadAlphabet(format!("duplicate letter {n:?}")));
            }
        }
        let mut inverse = Vec::with_capacity(pairs.len());
        for (_, inv) in pairs {
            let id = names
                .iter()
                .position(|n| n == inv)
                .ok_or_else(|| FsaError::BadAlphabet(format!("inverse {inv:?} is not a letter")))?;
            inverse.push(id as LetterId);
        }
        for (i, &inv) in inverse.iter().enumerate() {
            if inverse[inv as usize] != i as LetterId {
                return Err(FsaError::BadAlphabet(format!(
                    "involution broken at letter {:?}",
                    names[i]
                )));
            }
        }
        let single_char = names.iter().all(|n| n.chars().count() == 1);
        Ok(Alphabet(Arc::new(AlphabetInner {
            names,
            inverse,
            single_char,
        })))
    }

    /// Alphabet in which every letter is its own inverse.
    pub fn self_inverse(names: &[&str]) -> Result<Alphabet, FsaError> {
        let pairs: Vec<(&str, &str)> = names.iter().map(|&n| (n, n)).collect();
        Alphabet::new(&pairs)
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = LetterId> {
        (0..self.len() as LetterId).map(|i| i as LetterId)
    }

    pub fn name(&self, id: LetterId) -> &str {
        &self.0.names[id as usize]
    }

    pub fn inverse(&self, id: LetterId) -> LetterId {
        self.0.inverse[id as usize]
    }

    pub fn id_of(&self, name: &str) -> Option<LetterId> {
        self.0.names.iter().position(|n| n == name).map(|i| i as LetterId)
    }

    /// Parses a word.  For alphabets whose letters are all single characters
    /// the word is read character by character; otherwise letters must be
    /// whitespace-separated.  Whitespace is always allowed between letters.
    pub fn parse_word(&self, text: &str) -> Result<Word, FsaError> {
        let mut letters = Vec::new();
        if self.0.single_char {
            for ch in text.chars() {
                if ch.is_whitespace() {
                    continue;
                }
                let s = ch.to_string();
                let id = self
                    .id_of(&s)
                    .ok_or_else(|| FsaError::UnknownLetter(s.clone()))?;
                letters.push(id);
            }
        } else {
            for tok in text.split_whitespace() {
                let id = self
                    .id_of(tok)
                    .ok_or_else(|| FsaError::UnknownLetter(tok.to_string()))?;
                letters.push(id);
            }
        }
        Ok(Word(letters))
    }

    /// Renders a word using this alphabet's letter names.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return String::new();
        }
        let sep = if self.0.single_char { "" } else { " " };
        w.0.iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Serializable description: `(name, inverse name)` per letter, in order.
    pub fn descriptor(&self) -> Vec<LetterDescriptor> {
        self.letters()
            .map(|l| LetterDescriptor {
                name: self.name(l).to_string(),
                inverse: self.name(self.inverse(l)).to_string(),
            })
            .collect()
    }

    pub fn from_descriptor(desc: &[LetterDescriptor]) -> Result<Alphabet, FsaError> {
        let pairs: Vec<(&str, &str)> = desc
            .iter()
            .map(|d| (d.name.as_str(), d.inverse.as_str()))
            .collect();
        Alphabet::new(&pairs)
    }
}

/// JSON form of one alphabet letter.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LetterDescriptor {
    pub name: String,
    pub inverse: String,
}

/// A finite sequence of letters over some alphabet.
///
/// Words do not carry their alphabet; operations that need letter names or
/// the involution take the alphabet as an argument.  Comparison order is
/// positional (= lexicographic in the alphabet order for equal lengths).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<LetterId>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[LetterId] {
        &self.0
    }

    pub fn push(&mut self, l: LetterId) {
        self.0.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Rotation moving the first `i` letters to the end.
    pub fn rotate(&self, i: usize) -> Word {
        assert!(i <= self.len());
        let mut v = Vec::with_capacity(self.len());
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&self.0[..i]);
        Word(v)
    }

    /// All distinct rotations of this word.
    pub fn rotations(&self) -> Vec<Word> {
        let mut out: Vec<Word> = (0..self.len().max(1)).map(|i| self.rotate(i % self.len().max(1))).collect();
        out.sort();
        out.dedup();
        out
    }

    /// The formal inverse `x_k^{-1} ... x_1^{-1}` under the involution of `a`.
    pub fn inverse(&self, a: &Alphabet) -> Word {
        Word(self.0.iter().rev().map(|&l| a.inverse(l)).collect())
    }

    /// Shortlex comparison: by length first, then positionally.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.0)
    }
}

impl FromIterator<LetterId> for Word {
    fn from_iter<T: IntoIterator<Item = LetterId>>(iter: T) -> Word {
        Word(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(&[("a", "A"), ("A", "a"), ("b", "B"), ("B", "b")]).unwrap()
    }

    #[test]
    fn involution_is_checked() {
        assert!(Alphabet::new(&[("a", "b"), ("b", "b")]).is_err());
        assert!(Alphabet::new(&[("a", "a"), ("a", "a")]).is_err());
        assert!(Alphabet::new(&[("a", "z")]).is_err());
    }

    #[test]
    fn parse_and_format_roundtrip() {
        let a = ab();
        let w = a.parse_word("aAbB").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(a.format_word(&w), "aAbB");
        assert!(a.parse_word("x").is_err());
    }

    #[test]
    fn multichar_letters_need_spaces() {
        let a = Alphabet::new(&[("s1", "S1"), ("S1", "s1")]).unwrap();
        let w = a.parse_word("s1 S1 s1").unwrap();
        assert_eq!(a.format_word(&w), "s1 S1 s1");
    }

    #[test]
    fn rotations_dedup() {
        let a = ab();
        let w = a.parse_word("abab").unwrap();
        assert_eq!(w.rotations().len(), 2);
        let e = Word::empty();
        assert_eq!(e.rotations(), vec![Word::empty()]);
    }

    #[test]
    fn formal_inverse() {
        let a = ab();
        let w = a.parse_word("abA").unwrap();
        assert_eq!(a.format_word(&w.inverse(&a)), "aBA");
    }
}
