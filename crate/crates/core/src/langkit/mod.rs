//! Group oracles, ball enumeration, and the six languages attached to a
//! pair (group, ordered generating set): geodesics, cyclic geodesics,
//! conjugacy geodesics, shortlex normal forms, minimal-class normal forms,
//! and conjugacy shortlex normal forms.

mod ball;
mod conj;
mod localtest;
mod ngeo;
mod sample;

pub use ball::Ball;
pub use conj::{conj_min_length, ConjMin};
pub use localtest::{local_testability_report, LtViolation};
pub use ngeo::{conjgeo_pipeline, ngeo_automaton, PipelineConfig};
pub use sample::{
    compare_sample_to_dfa, language_sample, language_sample_forced, CompareReport,
    LanguageContext, LanguageKind, LanguageSample,
};

use crate::fsa::{Alphabet, LetterId, Word};

/// A canonical group element value supplied by an oracle.
///
/// Two values produced by the same oracle are equal exactly when the group
/// elements are equal.  The two shapes cover all shipped oracles: lattice
/// coordinates plus a finite-part index, or a canonical letter sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Ints { coords: Vec<i64>, finite: u8 },
    Letters(Vec<LetterId>),
}

impl Element {
    pub fn ints(coords: Vec<i64>, finite: u8) -> Element {
        Element::Ints { coords, finite }
    }

    pub fn letters(ls: Vec<LetterId>) -> Element {
        Element::Letters(ls)
    }
}

/// Pluggable group arithmetic over an inverse-closed ordered alphabet.
///
/// `right_multiply` must respect the involution: multiplying by a letter and
/// then by its inverse returns to the original element.  `conj_key`, when
/// provided, must be a complete conjugacy invariant: equal keys exactly when
/// the elements are conjugate.
pub trait GroupOracle {
    fn name(&self) -> String;
    fn alphabet(&self) -> &Alphabet;
    fn identity(&self) -> Element;
    fn right_multiply(&self, g: &Element, letter: LetterId) -> Element;
    fn invert(&self, g: &Element) -> Element;

    /// Canonical conjugacy-class key, for oracles with solved conjugacy.
    fn conj_key(&self, _g: &Element) -> Option<Element> {
        None
    }

    fn has_conj_key(&self) -> bool {
        self.conj_key(&self.identity()).is_some()
    }

    /// The image of a word under the natural projection onto the group.
    fn evaluate(&self, w: &Word) -> Element {
        w.letters()
            .iter()
            .fold(self.identity(), |g, &l| self.right_multiply(&g, l))
    }

    /// Left multiplication by a letter, derived from inversion:
    /// `x·g = (g⁻¹·x⁻¹)⁻¹`.
    fn left_multiply(&self, letter: LetterId, g: &Element) -> Element {
        let inv = self.invert(g);
        let prod = self.right_multiply(&inv, self.alphabet().inverse(letter));
        self.invert(&prod)
    }

    /// `h⁻¹ g h` for a conjugator given as a word.
    fn conjugate_by_word(&self, g: &Element, h: &Word) -> Element {
        let mut cur = g.clone();
        for &l in h.letters() {
            cur = self.right_multiply(&cur, l);
            cur = self.left_multiply(self.alphabet().inverse(l), &cur);
        }
        cur
    }
}
