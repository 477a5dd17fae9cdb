//! Free and free abelian groups on up to four generators.

use crate::fsa::{Alphabet, LetterId};
use crate::langkit::{Element, GroupOracle};

const NAMES: [(&str, &str); 4] = [("a", "A"), ("b", "B"), ("c", "C"), ("d", "D")];

fn paired_alphabet(rank: usize) -> Alphabet {
    assert!((1..=4).contains(&rank), "rank must be between 1 and 4");
    let mut pairs = Vec::new();
    for &(lo, up) in &NAMES[..rank] {
        pairs.push((lo, up));
        pairs.push((up, lo));
    }
    Alphabet::new(&pairs).unwrap()
}

/// Free group of the given rank; elements are freely reduced words.
pub struct FreeGroup {
    rank: usize,
    alphabet: Alphabet,
}

impl FreeGroup {
    pub fn new(rank: usize) -> FreeGroup {
        FreeGroup {
            rank,
            alphabet: paired_alphabet(rank),
        }
    }
}

impl GroupOracle for FreeGroup {
    fn name(&self) -> String {
        format!("free:{}", self.rank)
    }

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> Element {
        Element::letters(Vec::new())
    }

    fn right_multiply(&self, g: &Element, letter: LetterId) -> Element {
        let Element::Letters(ls) = g else {
            panic!("foreign element")
        };
        let mut ls = ls.clone();
        if ls.last() == Some(&self.alphabet.inverse(letter)) {
            ls.pop();
        } else {
            ls.push(letter);
        }
        Element::Letters(ls)
    }

    fn invert(&self, g: &Element) -> Element {
        let Element::Letters(ls) = g else {
            panic!("foreign element")
        };
        Element::Letters(ls.iter().rev().map(|&l| self.alphabet.inverse(l)).collect())
    }

    /// Conjugacy classes of a free group are cyclic words: cyclically reduce,
    /// then take the lexicographically least rotation.
    fn conj_key(&self, g: &Element) -> Option<Element> {
        let Element::Letters(ls) = g else {
            panic!("foreign element")
        };
        let mut v = ls.clone();
        while v.len() >= 2 && *v.first().unwrap() == self.alphabet.inverse(*v.last().unwrap()) {
            v.pop();
            v.remove(0);
        }
        let min_rot = (0..v.len())
            .map(|i| {
                let mut r = Vec::with_capacity(v.len());
                r.extend_from_slice(&v[i..]);
                r.extend_from_slice(&v[..i]);
                r
            })
            .min()
            .unwrap_or_default();
        Some(Element::Letters(min_rot))
    }
}

/// Free abelian group ℤ^rank; elements are coordinate vectors.
pub struct FreeAbelian {
    rank: usize,
    alphabet: Alphabet,
}

impl FreeAbelian {
    pub fn new(rank: usize) -> FreeAbelian {
        FreeAbelian {
            rank,
            alphabet: paired_alphabet(rank),
        }
    }
}

impl GroupOracle for FreeAbelian {
    fn name(&self) -> String {
        format!("free_abelian:{}", self.rank)
    }

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> Element {
        Element::ints(vec![0; self.rank], 0)
    }

    fn right_multiply(&self, g: &Element, letter: LetterId) -> Element {
        let Element::Ints { coords, .. } = g else {
            panic!("foreign element")
        };
        let mut coords = coords.clone();
        let gen = (letter / 2) as usize;
        coords[gen] += if letter % 2 == 0 { 1 } else { -1 };
        Element::ints(coords, 0)
    }

    fn invert(&self, g: &Element) -> Element {
        let Element::Ints { coords, .. } = g else {
            panic!("foreign element")
        };
        Element::ints(coords.iter().map(|c| -c).collect(), 0)
    }

    /// Conjugation is trivial: the element is its own class key.
    fn conj_key(&self, g: &Element) -> Option<Element> {
        Some(g.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let f = FreeGroup::new(2);
        let a = f.alphabet().clone();
        let e = f.evaluate(&a.parse_word("aA").unwrap());
        assert_eq!(e, f.identity());
        let g = f.evaluate(&a.parse_word("abBA").unwrap());
        assert_eq!(g, f.identity());
        assert_ne!(f.evaluate(&a.parse_word("ab").unwrap()), f.evaluate(&a.parse_word("ba").unwrap()));
    }

    #[test]
    fn free_conj_key_is_cyclic_reduction_up_to_rotation() {
        let f = FreeGroup::new(2);
        let a = f.alphabet().clone();
        let key = |s: &str| f.conj_key(&f.evaluate(&a.parse_word(s).unwrap())).unwrap();
        assert_eq!(key("abA"), key("b"));
        assert_eq!(key("ab"), key("ba"));
        assert_ne!(key("ab"), key("aB"));
        // Classes of g and g⁻¹ differ in general.
        assert_ne!(key("aab"), key("BAA"));
    }

    #[test]
    fn abelian_commutes() {
        let z2 = FreeAbelian::new(2);
        let a = z2.alphabet().clone();
        assert_eq!(
            z2.evaluate(&a.parse_word("ab").unwrap()),
            z2.evaluate(&a.parse_word("ba").unwrap())
        );
        assert_eq!(z2.evaluate(&a.parse_word("aAbB").unwrap()), z2.identity());
    }
}
