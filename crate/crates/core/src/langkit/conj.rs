//! Minimum length over a conjugacy class, with a conjugating certificate.

use std::collections::{HashMap, HashSet};

use super::ball::Ball;
use super::{Element, GroupOracle};
use crate::error::LangError;
use crate::fsa::Word;

/// Result of a conjugacy-minimum query.
#[derive(Debug, Clone)]
pub struct ConjMin {
    /// Minimum class length when `exact`, otherwise a sound upper bound.
    pub length: usize,
    /// A word `h` with `|h⁻¹ g h| = length`, when the search found one
    /// within the conjugator budget.
    pub certificate: Option<Word>,
    pub exact: bool,
}

/// Minimum length over the conjugacy class of `g`.
///
/// With an exact conjugacy key the length is exact: a ball of radius `|g|`
/// contains every element of length at most `|g|`, in particular all
/// minimal-length class members; the radius is grown one step further to
/// witness stability.  Without a key the result is the best length reached
/// by conjugating with words of length at most `budget`, flagged inexact.
/// Either way the certificate comes from a breadth-first search over
/// generator conjugations of depth at most `budget`.
pub fn conj_min_length(
    oracle: &dyn GroupOracle,
    g: &Element,
    budget: usize,
) -> Result<ConjMin, LangError> {
    // Locate |g| by growing the ball.
    let mut radius = 0;
    let mut ball = Ball::build(oracle, 0)?;
    while !ball.contains(g) {
        radius += 1;
        ball = Ball::build(oracle, radius)?;
    }
    let g_len = ball.length(g).unwrap();

    if oracle.has_conj_key() {
        let key = oracle.conj_key(g).unwrap();
        let min_at = |b: &Ball| -> usize {
            (0..=b.radius)
                .find(|&len| {
                    b.layer(len)
                        .iter()
                        .any(|h| oracle.conj_key(h).unwrap() == key)
                })
                .expect("class contains g itself")
        };
        let candidate = min_at(&ball);
        let grown = Ball::build(oracle, ball.radius + 1)?;
        let stable = min_at(&grown);
        debug_assert_eq!(candidate, stable, "class minimum must be stable");
        let certificate = certificate_search(oracle, g, stable, budget, &grown);
        Ok(ConjMin {
            length: stable,
            certificate,
            exact: true,
        })
    } else {
        // Bounded conjugation search; lengths of conjugates looked up in a
        // ball wide enough to hold everything the search can reach.
        let wide = Ball::build(oracle, g_len + 2 * budget)?;
        let mut best = (g_len, Word::empty());
        let mut seen = HashSet::from([g.clone()]);
        let mut frontier: Vec<(Element, Word)> = vec![(g.clone(), Word::empty())];
        for _ in 0..budget {
            let mut next = Vec::new();
            for (h, conj_word) in &frontier {
                for l in oracle.alphabet().letters() {
                    let c = oracle.left_multiply(
                        oracle.alphabet().inverse(l),
                        &oracle.right_multiply(h, l),
                    );
                    if seen.insert(c.clone()) {
                        let mut cw = conj_word.clone();
                        cw.push(l);
                        if let Some(cl) = wide.length(&c) {
                            if cl < best.0 {
                                best = (cl, cw.clone());
                            }
                        }
                        next.push((c, cw));
                    }
                }
            }
            frontier = next;
        }
        let (length, cert) = best;
        Ok(ConjMin {
            length,
            certificate: Some(cert),
            exact: false,
        })
    }
}

/// Breadth-first search over generator conjugations for a word `h` with
/// `|h⁻¹ g h|` equal to the target length.
fn certificate_search(
    oracle: &dyn GroupOracle,
    g: &Element,
    target: usize,
    budget: usize,
    ball: &Ball,
) -> Option<Word> {
    let mut parents: HashMap<Element, (Element, crate::fsa::LetterId)> = HashMap::new();
    let mut frontier = vec![g.clone()];
    let reconstruct = |h: &Element, parents: &HashMap<Element, (Element, crate::fsa::LetterId)>| {
        let mut letters = Vec::new();
        let mut cur = h.clone();
        while let Some((p, l)) = parents.get(&cur) {
            letters.push(*l);
            cur = p.clone();
        }
        letters.reverse();
        Word(letters)
    };
    if ball.length(g) == Some(target) {
        return Some(Word::empty());
    }
    for _ in 0..budget {
        let mut next = Vec::new();
        for h in &frontier {
            for l in oracle.alphabet().letters() {
                let c = oracle.left_multiply(
                    oracle.alphabet().inverse(l),
                    &oracle.right_multiply(h, l),
                );
                if c != *g && !parents.contains_key(&c) {
                    parents.insert(c.clone(), (h.clone(), l));
                    if ball.length(&c) == Some(target) {
                        return Some(reconstruct(&c, &parents));
                    }
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    None
}
