//! Desk-scale evidence for k-local testability: search for sample words
//! with identical (prefix, suffix, factor-set) signatures but opposite
//! membership.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::LanguageSample;
use crate::fsa::{LetterId, Word};

/// A pair of words separating membership despite equal signatures.
#[derive(Debug, Clone)]
pub struct LtViolation {
    pub member: Word,
    pub non_member: Word,
}

type Signature = (Vec<LetterId>, Vec<LetterId>, BTreeSet<Vec<LetterId>>);

fn signature(w: &Word, k: usize) -> Signature {
    let ls = w.letters();
    let take = |n: usize| -> Vec<LetterId> {
        if ls.len() < n {
            ls.to_vec()
        } else {
            ls[..n].to_vec()
        }
    };
    let take_suf = |n: usize| -> Vec<LetterId> {
        if ls.len() < n {
            ls.to_vec()
        } else {
            ls[ls.len() - n..].to_vec()
        }
    };
    let mut subs = BTreeSet::new();
    if ls.len() >= k {
        for i in 0..=ls.len() - k {
            subs.insert(ls[i..i + k].to_vec());
        }
    }
    (take(k.saturating_sub(1)), take_suf(k.saturating_sub(1)), subs)
}

/// All pairs of words (up to the sample bound) related by `~_k` — equal
/// length-(k−1) prefix and suffix and equal length-k factor sets — but on
/// opposite sides of the language.  One witness pair is reported per
/// signature; an empty list is the desk-scale evidence that the language is
/// a union of `~_k` classes at this bound.
pub fn local_testability_report(sample: &LanguageSample, k: usize) -> Vec<LtViolation> {
    assert!(k >= 1, "window size must be at least 1");
    let members: HashSet<&Word> = sample.groups.iter().flatten().collect();
    // signature -> (member exemplar, non-member exemplar)
    let mut table: HashMap<Signature, (Option<Word>, Option<Word>)> = HashMap::new();
    let mut violations = Vec::new();
    let alphabet_len = sample.alphabet.len() as LetterId;
    let mut stack: Vec<LetterId> = Vec::new();
    loop {
        // Iterate all words of length ≤ bound in depth-first letter order.
        let w = Word(stack.clone());
        let sig = signature(&w, k);
        let entry = table.entry(sig).or_default();
        let is_member = members.contains(&w);
        match (is_member, &entry.0, &entry.1) {
            (true, None, witness) => {
                if let Some(nm) = witness {
                    violations.push(LtViolation {
                        member: w.clone(),
                        non_member: nm.clone(),
                    });
                }
                entry.0 = Some(w.clone());
            }
            (false, witness, None) => {
                if let Some(m) = witness {
                    violations.push(LtViolation {
                        member: m.clone(),
                        non_member: w.clone(),
                    });
                }
                entry.1 = Some(w.clone());
            }
            _ => {}
        }
        // Advance the word odometer depth-first.
        if stack.len() < sample.bound {
            stack.push(0);
        } else {
            loop {
                match stack.pop() {
                    None => return violations,
                    Some(l) if l + 1 < alphabet_len => {
                        stack.push(l + 1);
                        break;
                    }
                    Some(_) => {}
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsa::Alphabet;
    use crate::groups::FreeGroup;
    use crate::langkit::{language_sample, LanguageKind};

    #[test]
    fn free_geodesics_are_two_testable() {
        let f = FreeGroup::new(2);
        let sample = language_sample(&f, LanguageKind::Geo, 6).unwrap();
        assert!(local_testability_report(&sample, 2).is_empty());
    }

    #[test]
    fn free_geodesics_are_not_one_testable_at_this_scale() {
        // With k = 1 the signature only sees the letter set, which cannot
        // separate ab from aA-containing words.
        let f = FreeGroup::new(2);
        let sample = language_sample(&f, LanguageKind::Geo, 4).unwrap();
        assert!(!local_testability_report(&sample, 1).is_empty());
    }

    #[test]
    fn constructed_non_lt_language_has_violations() {
        // {ab} alone: aab has the same 2-signature as ab... it does not, but
        // the square language {aa} vs {aaaa} separates at k = 2: both have
        // prefix a, suffix a, factor set {aa}, and only one is a member.
        let a = Alphabet::self_inverse(&["a", "b"]).unwrap();
        let member = a.parse_word("aa").unwrap();
        let sample = LanguageSample {
            alphabet: a,
            kind: "adhoc",
            bound: 4,
            exact: true,
            groups: vec![vec![], vec![], vec![member], vec![], vec![]],
        };
        let vs = local_testability_report(&sample, 2);
        assert!(vs
            .iter()
            .any(|v| v.member.len() == 2 && v.non_member.len() >= 3));
    }
}
