//! Nondeterministic automata and the language operators that naturally
//! produce them: cyclic closure and insertion.

use std::collections::BTreeSet;

use super::alphabet::{Alphabet, LetterId};
use super::dfa::Dfa;

/// A nondeterministic finite automaton with epsilon transitions.
#[derive(Debug, Clone)]
pub struct Nfa {
    pub alphabet: Alphabet,
    pub states: usize,
    pub start: BTreeSet<usize>,
    pub accept: BTreeSet<usize>,
    pub transitions: Vec<(usize, LetterId, usize)>,
    pub epsilon: Vec<(usize, usize)>,
}

impl Nfa {
    pub fn empty(alphabet: Alphabet) -> Nfa {
        Nfa {
            alphabet,
            states: 0,
            start: BTreeSet::new(),
            accept: BTreeSet::new(),
            transitions: Vec::new(),
            epsilon: Vec::new(),
        }
    }

    pub fn add_state(&mut self) -> usize {
        self.states += 1;
        self.states - 1
    }

    pub fn add_transition(&mut self, from: usize, letter: LetterId, to: usize) {
        debug_assert!(from < self.states && to < self.states);
        debug_assert!((letter as usize) < self.alphabet.len());
        self.transitions.push((from, letter, to));
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) {
        debug_assert!(from < self.states && to < self.states);
        self.epsilon.push((from, to));
    }

    /// Disjoint union; accepts `L(self) ∪ L(other)`.
    pub fn union(&self, other: &Nfa) -> Nfa {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        let off = self.states;
        let mut out = self.clone();
        out.states += other.states;
        out.start.extend(other.start.iter().map(|&q| q + off));
        out.accept.extend(other.accept.iter().map(|&q| q + off));
        out.transitions
            .extend(other.transitions.iter().map(|&(f, l, t)| (f + off, l, t + off)));
        out.epsilon
            .extend(other.epsilon.iter().map(|&(f, t)| (f + off, t + off)));
        out
    }
}

/// Concatenation `L(x)·L(y)`.
pub fn concatenate(x: &Dfa, y: &Dfa) -> Nfa {
    assert_eq!(x.alphabet, y.alphabet, "alphabet mismatch");
    let off = x.states;
    let mut out = Nfa::empty(x.alphabet.clone());
    out.states = x.states + y.states;
    out.start.insert(x.start);
    for s in 0..x.states {
        for l in x.alphabet.letters() {
            out.transitions.push((s, l, x.step(s, l)));
        }
        if x.accept[s] {
            out.epsilon.push((s, off + y.start));
        }
    }
    for s in 0..y.states {
        for l in y.alphabet.letters() {
            out.transitions.push((off + s, l, off + y.step(s, l)));
        }
        if y.accept[s] {
            out.accept.insert(off + s);
        }
    }
    out
}

/// Accepts exactly the cyclic permutations of words of `L(d)`.
///
/// For each state `q` of `d` the machine contains two copies of `d`: the run
/// starts at `q` in the first copy, jumps by an epsilon transition from any
/// accepting first-copy state to the original start state in the second copy,
/// and must end back at `q` in the second copy.  The result is the union of
/// these per-state machines.
pub fn cyclic_closure(d: &Dfa) -> Nfa {
    let n = d.states;
    let mut out = Nfa::empty(d.alphabet.clone());
    out.states = 2 * n * n;
    // Block layout for anchor q: copy 1 at [2qn, 2qn+n), copy 2 at [2qn+n, 2qn+2n).
    for q in 0..n {
        let c1 = 2 * q * n;
        let c2 = c1 + n;
        out.start.insert(c1 + q);
        out.accept.insert(c2 + q);
        for s in 0..n {
            for l in d.alphabet.letters() {
                let t = d.step(s, l);
                out.transitions.push((c1 + s, l, c1 + t));
                out.transitions.push((c2 + s, l, c2 + t));
            }
            if d.accept[s] {
                out.epsilon.push((c1 + s, c2 + d.start));
            }
        }
    }
    out
}

/// Insertion of `L(l2)` into `L(l1)`: accepts `{z′wz″ | z′z″ ∈ L(l1), w ∈ L(l2)}`.
///
/// Runs `l1` up to a nondeterministically chosen pause point, remembers the
/// paused state while running `l2` to acceptance, then resumes `l1`.
pub fn insertion(l1: &Dfa, l2: &Dfa) -> Nfa {
    assert_eq!(l1.alphabet, l2.alphabet, "alphabet mismatch");
    let n1 = l1.states;
    let n2 = l2.states;
    let mut out = Nfa::empty(l1.alphabet.clone());
    // Layout: phase 1 copy of l1 at [0, n1); paused pairs (q, p) at
    // n1 + q*n2 + p; phase 3 copy of l1 at [n1 + n1*n2, ...).
    let pair = |q: usize, p: usize| n1 + q * n2 + p;
    let phase3 = |q: usize| n1 + n1 * n2 + q;
    out.states = 2 * n1 + n1 * n2;
    out.start.insert(l1.start);
    for q in 0..n1 {
        for l in l1.alphabet.letters() {
            let t = l1.step(q, l);
            out.transitions.push((q, l, t));
            out.transitions.push((phase3(q), l, phase3(t)));
        }
        out.epsilon.push((q, pair(q, l2.start)));
        if l1.accept[q] {
            out.accept.insert(phase3(q));
        }
        for p in 0..n2 {
            for l in l2.alphabet.letters() {
                out.transitions.push((pair(q, p), l, pair(q, l2.step(p, l))));
            }
            if l2.accept[p] {
                out.epsilon.push((pair(q, p), phase3(q)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsa::dfa::{determinize, equivalent, minimize};
    use crate::fsa::regex::{Regex, compile_regex};

    fn ab() -> Alphabet {
        Alphabet::self_inverse(&["a", "b"]).unwrap()
    }

    fn dfa_of(a: &Alphabet, r: &Regex) -> Dfa {
        minimize(&determinize(&compile_regex(r, a).unwrap()))
    }

    /// Brute-force rotation closure of `enumerate(d, n)`.
    fn rotation_oracle(d: &Dfa, n: usize) -> Vec<Vec<crate::fsa::Word>> {
        let mut groups: Vec<std::collections::BTreeSet<crate::fsa::Word>> =
            vec![Default::default(); n + 1];
        for group in d.enumerate(n) {
            for w in group {
                let len = w.len();
                for r in w.rotations() {
                    groups[len].insert(r);
                }
            }
        }
        groups.into_iter().map(|g| g.into_iter().collect()).collect()
    }

    #[test]
    fn cyc_of_singleton() {
        let a = ab();
        let d = dfa_of(&a, &Regex::cat([Regex::lit("a"), Regex::lit("b")]));
        let c = minimize(&determinize(&cyclic_closure(&d)));
        let words: Vec<String> = c.enumerate(2).concat().iter().map(|w| a.format_word(w)).collect();
        assert_eq!(words, ["ab", "ba"]);
    }

    #[test]
    fn cyc_of_a_star_b() {
        // cyc(a*b) = a*ba*, checked against the rotation oracle to length 6.
        let a = ab();
        let d = dfa_of(&a, &Regex::cat([Regex::lit("a").star(), Regex::lit("b")]));
        let c = determinize(&cyclic_closure(&d));
        assert_eq!(c.enumerate(6), rotation_oracle(&d, 6));
        let expected = dfa_of(
            &a,
            &Regex::cat([Regex::lit("a").star(), Regex::lit("b"), Regex::lit("a").star()]),
        );
        assert!(equivalent(&minimize(&c), &expected).is_ok_and(|r| r.is_none()));
    }

    #[test]
    fn cyc_of_empty_language() {
        let a = ab();
        let d = dfa_of(&a, &Regex::Empty);
        let c = determinize(&cyclic_closure(&d));
        assert!(c.enumerate(5).iter().all(|g| g.is_empty()));
    }

    #[test]
    fn insertion_definition_cases() {
        let a = Alphabet::self_inverse(&["a", "b", "x"]).unwrap();
        let l1 = dfa_of(&a, &Regex::cat([Regex::lit("a"), Regex::lit("b")]));
        let l2 = dfa_of(&a, &Regex::lit("x"));
        let ins = determinize(&insertion(&l1, &l2));
        let words: Vec<String> = ins.enumerate(3).concat().iter().map(|w| a.format_word(w)).collect();
        assert_eq!(words, ["abx", "axb", "xab"]);
    }

    #[test]
    fn insertion_of_epsilon_is_identity() {
        let a = ab();
        let l1 = dfa_of(
            &a,
            &Regex::cat([Regex::lit("a").star(), Regex::lit("b").star()]),
        );
        let l2 = dfa_of(&a, &Regex::Epsilon);
        let ins = minimize(&determinize(&insertion(&l1, &l2)));
        assert!(equivalent(&ins, &l1).is_ok_and(|r| r.is_none()));
    }

    #[test]
    fn insertion_matches_brute_force() {
        // a* ← {b} = a*ba*, and every word of the result decomposes.
        let a = ab();
        let l1 = dfa_of(&a, &Regex::lit("a").star());
        let l2 = dfa_of(&a, &Regex::lit("b"));
        let ins = determinize(&insertion(&l1, &l2));
        let mut brute: Vec<std::collections::BTreeSet<crate::fsa::Word>> = vec![Default::default(); 7];
        for z in l1.enumerate(6).concat() {
            for w in l2.enumerate(6).concat() {
                for cut in 0..=z.len() {
                    let mut v = z.letters()[..cut].to_vec();
                    v.extend_from_slice(w.letters());
                    v.extend_from_slice(&z.letters()[cut..]);
                    if v.len() <= 6 {
                        let len = v.len();
                        brute[len].insert(crate::fsa::Word(v));
                    }
                }
            }
        }
        let brute: Vec<Vec<crate::fsa::Word>> = brute.into_iter().map(|g| g.into_iter().collect()).collect();
        assert_eq!(ins.enumerate(6), brute);
    }
}
