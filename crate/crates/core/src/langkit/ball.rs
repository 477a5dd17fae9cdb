//! Breadth-first balls in the Cayley graph, with geodesic lengths and
//! shortlex normal forms.

use std::collections::HashMap;

use super::{Element, GroupOracle};
use crate::error::LangError;
use crate::fsa::Word;

/// Default cap on stored elements; exceeding it reports an explicit failure
/// rather than exhausting memory.
pub const DEFAULT_ELEMENT_BUDGET: usize = 20_000_000;

/// All elements of length at most `radius`, with `|g|` and the shortlex
/// normal form of each.
///
/// Construction walks the Cayley graph breadth first, extending the previous
/// layer's normal forms by letters in alphabet order; the first word reaching
/// an element is therefore its shortlex normal form (prefixes of shortlex
/// normal forms are shortlex normal forms).
pub struct Ball {
    pub radius: usize,
    elements: HashMap<Element, (usize, Word)>,
    /// Elements in generation order: by length, then lexicographically by
    /// normal form.
    layers: Vec<Vec<Element>>,
}

impl Ball {
    pub fn build(oracle: &dyn GroupOracle, radius: usize) -> Result<Ball, LangError> {
        Ball::build_with_budget(oracle, radius, DEFAULT_ELEMENT_BUDGET)
    }

    pub fn build_with_budget(
        oracle: &dyn GroupOracle,
        radius: usize,
        budget: usize,
    ) -> Result<Ball, LangError> {
        let mut elements = HashMap::new();
        let mut layers: Vec<Vec<Element>> = Vec::with_capacity(radius + 1);
        let id = oracle.identity();
        elements.insert(id.clone(), (0, Word::empty()));
        layers.push(vec![id]);
        for len in 1..=radius {
            let mut layer = Vec::new();
            for g in &layers[len - 1] {
                let nf = elements[g].1.clone();
                for l in oracle.alphabet().letters() {
                    let h = oracle.right_multiply(g, l);
                    if !elements.contains_key(&h) {
                        if elements.len() >= budget {
                            return Err(LangError::BallBudget(budget));
                        }
                        let mut w = nf.clone();
                        w.push(l);
                        elements.insert(h.clone(), (len, w));
                        layer.push(h);
                    }
                }
            }
            layers.push(layer);
        }
        Ok(Ball {
            radius,
            elements,
            layers,
        })
    }

    /// Geodesic length, if the element lies in the ball.
    pub fn length(&self, g: &Element) -> Option<usize> {
        self.elements.get(g).map(|(l, _)| *l)
    }

    /// Shortlex normal form, if the element lies in the ball.
    pub fn normal_form(&self, g: &Element) -> Option<&Word> {
        self.elements.get(g).map(|(_, w)| w)
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.elements.contains_key(g)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Elements of exactly the given length, in shortlex order of their
    /// normal forms.
    pub fn layer(&self, len: usize) -> &[Element] {
        &self.layers[len]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Element, usize, &Word)> {
        self.elements.iter().map(|(g, (l, w))| (g, *l, w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{FreeAbelian, FreeGroup};
    use crate::langkit::GroupOracle;

    #[test]
    fn free_group_ball_counts() {
        // 1 + 4 + 12 freely reduced words of length ≤ 2.
        let f = FreeGroup::new(2);
        let ball = Ball::build(&f, 2).unwrap();
        assert_eq!(ball.len(), 17);
        assert_eq!(ball.layer(0).len(), 1);
        assert_eq!(ball.layer(1).len(), 4);
        assert_eq!(ball.layer(2).len(), 12);
    }

    #[test]
    fn z2_ball_radius_one() {
        let z2 = FreeAbelian::new(2);
        let ball = Ball::build(&z2, 1).unwrap();
        assert_eq!(ball.len(), 5);
    }

    #[test]
    fn normal_forms_are_shortlex_least() {
        // Exhaustive cross-check at small radius: evaluate every word of
        // length ≤ 3 and confirm the stored normal form is shortlex-least.
        let z2 = FreeAbelian::new(2);
        let a = z2.alphabet().clone();
        let ball = Ball::build(&z2, 3).unwrap();
        let mut best: HashMap<Element, Word> = HashMap::new();
        let mut frontier = vec![Word::empty()];
        for _ in 0..=3usize {
            let mut next = Vec::new();
            for w in &frontier {
                let g = z2.evaluate(w);
                best.entry(g).or_insert_with(|| w.clone());
                for l in a.letters() {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            frontier = next;
        }
        for (g, nf) in best {
            if let Some(stored) = ball.normal_form(&g) {
                assert_eq!(stored, &nf, "normal form mismatch");
                assert_eq!(z2.evaluate(stored), g);
            }
        }
    }

    #[test]
    fn budget_failure_is_reported() {
        let f = FreeGroup::new(2);
        assert!(matches!(
            Ball::build_with_budget(&f, 5, 10),
            Err(LangError::BallBudget(_))
        ));
    }
}
