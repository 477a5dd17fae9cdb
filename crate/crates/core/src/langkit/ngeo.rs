//! Almost-geodesic automata from the fellow-traveler construction, and the
//! cyclic-geodesic / conjugacy-geodesic pipeline built on them.

use std::collections::HashMap;

use super::ball::Ball;
use super::{GroupOracle, LanguageKind};
use crate::error::LangError;
use crate::fsa::{
    boolean_op, complement, cyclic_closure, determinize, minimize, quotient, BoolOp, Dfa, Nfa,
    QuotientSide, Word,
};

/// An automaton for `{w : |w| ≥ l(w) − K}` over the oracle's alphabet.
///
/// The complement is recognized directly: a word `w` is out exactly when
/// some strictly shorter word `w'` (shorter by more than `K`) represents the
/// same element while `k`-fellow-traveling with it.  The machine guesses
/// `w'` letter by letter (with end-of-word padding), tracking the word
/// difference inside the ball `N` of radius `(K+1)·k` and counting trailing
/// padded steps; acceptance needs a trivial difference and at least `K+1`
/// padded steps.
///
/// The result is sound for every `k` (everything it rejects truly has a
/// much shorter representative) and equals the almost-geodesic set whenever
/// `k` is a valid fellow-traveler constant for the group, which is what the
/// verification suite checks on the shipped examples.
pub fn ngeo_automaton(
    oracle: &dyn GroupOracle,
    slack: usize,
    fellow_travel: usize,
) -> Result<Dfa, LangError> {
    let alphabet = oracle.alphabet().clone();
    let ball = Ball::build(oracle, (slack + 1) * fellow_travel.max(1))?;
    let mut index: HashMap<super::Element, usize> = HashMap::new();
    let mut elems: Vec<super::Element> = Vec::new();
    for (g, _, _) in ball.iter() {
        index.insert(g.clone(), elems.len());
        elems.push(g.clone());
    }
    let pad_levels = slack + 2; // 0..=slack+1, counting trailing padded steps
    let state_of = |e: usize, j: usize| e * pad_levels + j;

    let mut nfa = Nfa::empty(alphabet.clone());
    nfa.states = elems.len() * pad_levels;
    let start = state_of(index[&oracle.identity()], 0);
    nfa.start.insert(start);
    nfa.accept
        .insert(state_of(index[&oracle.identity()], pad_levels - 1));
    for (e, g) in elems.iter().enumerate() {
        for a in alphabet.letters() {
            let ainv_g = oracle.left_multiply(alphabet.inverse(a), g);
            // Guessed word already ended: only padded steps remain.
            for j in 1..pad_levels {
                if let Some(&e2) = index.get(&ainv_g) {
                    nfa.add_transition(
                        state_of(e, j),
                        a,
                        state_of(e2, (j + 1).min(pad_levels - 1)),
                    );
                }
            }
            // Both words still reading: guess the next letter b of w'.
            for b in alphabet.letters() {
                let d = oracle.right_multiply(&ainv_g, b);
                if let Some(&e2) = index.get(&d) {
                    nfa.add_transition(state_of(e, 0), a, state_of(e2, 0));
                }
            }
            // w' ends here.
            if let Some(&e2) = index.get(&ainv_g) {
                nfa.add_transition(state_of(e, 0), a, state_of(e2, 1));
            }
        }
    }
    Ok(complement(&determinize(&nfa)))
}

/// Parameters for [`conjgeo_pipeline`].
#[derive(Debug, Clone, Copy)]
pub struct PipelineConfig {
    /// Conjugators of length up to this bound are tested.
    pub conjugator_bound: usize,
    /// Fellow-traveler constant for the internal almost-geodesic machines.
    pub fellow_travel: usize,
    /// Word lengths below this are patched from exact sample data.
    pub cutoff: usize,
    /// The supplied geodesic automaton is validated against the oracle up to
    /// this length before anything else runs.
    pub validate_bound: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            conjugator_bound: 1,
            fellow_travel: 2,
            cutoff: 1,
            validate_bound: 5,
        }
    }
}

/// Accepts all words of length at most `min_len`... states `0..=min_len`.
fn length_at_least(alphabet: &crate::fsa::Alphabet, min_len: usize) -> Dfa {
    let k = alphabet.len();
    let states = min_len + 1;
    let mut delta = vec![0usize; states * k];
    let mut accept = vec![false; states];
    for s in 0..states {
        let t = (s + 1).min(min_len);
        for l in 0..k {
            delta[s * k + l] = t;
        }
        accept[s] = s == min_len;
    }
    Dfa {
        alphabet: alphabet.clone(),
        states,
        start: 0,
        accept,
        delta,
    }
}

/// The cyclic-geodesic language of the oracle: words all of whose rotations
/// are geodesic, computed as the complement of the cyclic closure of the
/// non-geodesics.
pub fn cyclic_geodesic_dfa(geo: &Dfa) -> Dfa {
    let non_geo = complement(geo);
    let closure = determinize(&cyclic_closure(&non_geo));
    complement(&minimize(&closure))
}

/// Conjugacy-geodesic automaton for groups where short conjugators decide:
/// removes from the cyclic geodesics every cyclic conjugate of a word that
/// some conjugator of length at most `conjugator_bound` shortens, then
/// patches lengths below `cutoff` from exact sample data.
pub fn conjgeo_pipeline(
    oracle: &dyn GroupOracle,
    geo: &Dfa,
    cfg: PipelineConfig,
) -> Result<Dfa, LangError> {
    // The supplied automaton must agree with the oracle's geodesics.
    let geo_sample = super::language_sample(oracle, LanguageKind::Geo, cfg.validate_bound)?;
    let report = super::compare_sample_to_dfa(&geo_sample, geo)?;
    if !report.is_equal() {
        return Err(LangError::InvalidGeodesicDfa(format!(
            "{:?}",
            report.divergence
        )));
    }

    let alphabet = oracle.alphabet().clone();
    let cycgeo = cyclic_geodesic_dfa(geo);

    // ngeo machines depend only on the conjugator length.
    let mut ngeo_by_len: HashMap<usize, Dfa> = HashMap::new();
    for len in 1..=cfg.conjugator_bound {
        ngeo_by_len.insert(len, ngeo_automaton(oracle, 2 * len, cfg.fellow_travel)?);
    }

    // Words shortened by some conjugator α with 1 ≤ |α| ≤ bound: the cyclic
    // geodesics v with α⁻¹vα in the complement of the almost-geodesic set of
    // slack 2|α|.  (The identity conjugator shortens nothing.)
    let mut shortened: Option<Dfa> = None;
    let mut alpha_stack: Vec<Word> = alphabet.letters().map(|l| Word(vec![l])).collect();
    while let Some(alpha) = alpha_stack.pop() {
        let ngeo = &ngeo_by_len[&alpha.len()];
        let shrinks = complement(ngeo);
        let alpha_inv = alpha.inverse(&alphabet);
        let after_left = quotient(&shrinks, &alpha_inv, QuotientSide::Left);
        let conjugated = quotient(&after_left, &alpha, QuotientSide::Right);
        let bad = boolean_op(&cycgeo, &conjugated, BoolOp::Intersection)?;
        shortened = Some(match shortened {
            None => bad,
            Some(acc) => boolean_op(&acc, &bad, BoolOp::Union)?,
        });
        if alpha.len() < cfg.conjugator_bound {
            for l in alphabet.letters() {
                let mut next = alpha.clone();
                next.push(l);
                alpha_stack.push(next);
            }
        }
    }

    let regular_part = match shortened {
        None => cycgeo,
        Some(bad) => {
            let bad_closure = minimize(&determinize(&cyclic_closure(&bad)));
            boolean_op(&cycgeo, &bad_closure, BoolOp::Difference)?
        }
    };

    if cfg.cutoff == 0 {
        return Ok(minimize(&regular_part));
    }
    // Patch short lengths from the exact sample.
    let short_sample = super::language_sample(oracle, LanguageKind::ConjGeo, cfg.cutoff - 1)?;
    let short_words: Vec<Word> = short_sample.groups.concat();
    let short_dfa = Dfa::from_words(alphabet.clone(), &short_words);
    let long_mask = length_at_least(&alphabet, cfg.cutoff);
    let long_part = boolean_op(&regular_part, &long_mask, BoolOp::Intersection)?;
    boolean_op(&long_part, &short_dfa, BoolOp::Union).map_err(Into::into)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{FreeAbelian, FreeGroup};
    use crate::langkit::{compare_sample_to_dfa, language_sample};

    fn geo_dfa_free() -> Dfa {
        // Freely reduced words: no xx⁻¹ factor.
        let f = FreeGroup::new(2);
        let a = f.alphabet().clone();
        let mut forbidden = Vec::new();
        for l in a.letters() {
            forbidden.push(crate::fsa::Regex::cat([
                crate::fsa::Regex::lit(a.name(l)),
                crate::fsa::Regex::lit(a.name(a.inverse(l))),
            ]));
        }
        let any = crate::fsa::Regex::alt(a.letters().map(|l| crate::fsa::Regex::lit(a.name(l)))).star();
        let bad = crate::fsa::Regex::cat([any.clone(), crate::fsa::Regex::alt(forbidden), any]);
        complement(&crate::fsa::dfa_of_regex(&bad, &a).unwrap())
    }

    #[test]
    fn ngeo_zero_slack_is_geodesics_for_z2() {
        let z2 = FreeAbelian::new(2);
        let d = ngeo_automaton(&z2, 0, 2).unwrap();
        let sample = language_sample(&z2, LanguageKind::Geo, 8).unwrap();
        let report = compare_sample_to_dfa(&sample, &d).unwrap();
        assert!(report.is_equal(), "{report:?}");
    }

    #[test]
    fn ngeo_rejects_conjugated_letter() {
        // aba⁻¹ has length 3 but represents an element of length 1.
        let f = FreeGroup::new(2);
        let d = ngeo_automaton(&f, 0, 2).unwrap();
        let a = f.alphabet().clone();
        assert!(!d.accepts(&a.parse_word("abA").unwrap()));
        assert!(d.accepts(&a.parse_word("ab").unwrap()));
    }

    #[test]
    fn ngeo_slack_dominates_short_words() {
        let f = FreeGroup::new(2);
        let d = ngeo_automaton(&f, 4, 2).unwrap();
        for group in crate::fsa::Dfa::universal(f.alphabet().clone()).enumerate(4) {
            for w in group {
                assert!(d.accepts(&w), "slack 4 accepts all words of length ≤ 4");
            }
        }
    }

    #[test]
    fn ngeo_nesting() {
        let z2 = FreeAbelian::new(2);
        let d0 = ngeo_automaton(&z2, 0, 2).unwrap();
        let d1 = ngeo_automaton(&z2, 1, 2).unwrap();
        let outside = boolean_op(&d0, &d1, BoolOp::Difference).unwrap();
        assert!(
            crate::fsa::equivalent(&outside, &Dfa::empty_language(z2.alphabet().clone()))
                .unwrap()
                .is_none(),
            "ngeo_0 ⊆ ngeo_1"
        );
    }

    #[test]
    fn pipeline_on_free_group_gives_cyclically_reduced_words() {
        let f = FreeGroup::new(2);
        let geo = geo_dfa_free();
        let d = conjgeo_pipeline(&f, &geo, PipelineConfig::default()).unwrap();
        let sample = language_sample(&f, LanguageKind::ConjGeo, 8).unwrap();
        let report = compare_sample_to_dfa(&sample, &d).unwrap();
        assert!(report.is_equal(), "{report:?}");
    }

    #[test]
    fn pipeline_on_z2_equals_geo() {
        let z2 = FreeAbelian::new(2);
        let geo = ngeo_automaton(&z2, 0, 2).unwrap();
        let d = conjgeo_pipeline(&z2, &geo, PipelineConfig::default()).unwrap();
        let report =
            compare_sample_to_dfa(&language_sample(&z2, LanguageKind::Geo, 7).unwrap(), &d)
                .unwrap();
        assert!(report.is_equal(), "{report:?}");
    }

    #[test]
    fn pipeline_rejects_bad_geo_dfa() {
        let f = FreeGroup::new(2);
        let wrong = Dfa::universal(f.alphabet().clone());
        assert!(matches!(
            conjgeo_pipeline(&f, &wrong, PipelineConfig::default()),
            Err(LangError::InvalidGeodesicDfa(_))
        ));
    }
}
