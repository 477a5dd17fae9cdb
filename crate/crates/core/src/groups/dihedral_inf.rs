//! The infinite dihedral group ℤ ⋊ ℤ/2 over {x, x⁻¹, s}, with s x s = x⁻¹.

use crate::fsa::{Alphabet, LetterId};
use crate::langkit::{Element, GroupOracle};

pub struct InfiniteDihedral {
    alphabet: Alphabet,
}

impl InfiniteDihedral {
    pub fn new() -> InfiniteDihedral {
        InfiniteDihedral {
            alphabet: Alphabet::new(&[("x", "X"), ("X", "x"), ("s", "s")]).unwrap(),
        }
    }
}

impl Default for InfiniteDihedral {
    fn default() -> Self {
        Self::new()
    }
}

impl GroupOracle for InfiniteDihedral {
    fn name(&self) -> String {
        "inf_dihedral".to_string()
    }

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> Element {
        Element::ints(vec![0], 0)
    }

    fn right_multiply(&self, g: &Element, letter: LetterId) -> Element {
        let Element::Ints { coords, finite } = g else {
            panic!("foreign element")
        };
        let k = coords[0];
        let sign = if *finite == 0 { 1 } else { -1 };
        match letter {
            0 => Element::ints(vec![k + sign], *finite),
            1 => Element::ints(vec![k - sign], *finite),
            2 => Element::ints(vec![k], finite ^ 1),
            _ => unreachable!(),
        }
    }

    fn invert(&self, g: &Element) -> Element {
        let Element::Ints { coords, finite } = g else {
            panic!("foreign element")
        };
        if *finite == 0 {
            Element::ints(vec![-coords[0]], 0)
        } else {
            // Reflections are involutions: (x^k s)² = x^k (s x^k s) = 1.
            g.clone()
        }
    }

    /// Rotations x^k pair with x^{-k}; reflections fall into two classes by
    /// the parity of k.
    fn conj_key(&self, g: &Element) -> Option<Element> {
        let Element::Ints { coords, finite } = g else {
            panic!("foreign element")
        };
        Some(if *finite == 0 {
            Element::ints(vec![coords[0].abs()], 0)
        } else {
            Element::ints(vec![coords[0].rem_euclid(2)], 1)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        let d = InfiniteDihedral::new();
        let a = d.alphabet().clone();
        let e = |s: &str| d.evaluate(&a.parse_word(s).unwrap());
        assert_eq!(e("ss"), d.identity());
        assert_eq!(e("sxs"), e("X"));
        assert_eq!(e("xX"), d.identity());
        assert_eq!(d.invert(&e("xxs")), e("xxs"));
    }

    #[test]
    fn conjugacy_classes() {
        let d = InfiniteDihedral::new();
        let a = d.alphabet().clone();
        let key = |s: &str| d.conj_key(&d.evaluate(&a.parse_word(s).unwrap())).unwrap();
        assert_eq!(key("xx"), key("XX"));
        assert_ne!(key("x"), key("xx"));
        // Reflections: s ~ xxs, xs ~ xxxs.
        assert_eq!(key("s"), key("xxs"));
        assert_eq!(key("xs"), key("xxxs"));
        assert_ne!(key("s"), key("xs"));
    }
}
