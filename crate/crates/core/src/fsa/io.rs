//! JSON and DOT serialization of automata.

use serde::{Deserialize, Serialize};

use super::alphabet::{Alphabet, LetterDescriptor};
use super::dfa::Dfa;
use super::nfa::Nfa;
use crate::error::FsaError;

#[derive(Debug, Serialize, Deserialize)]
struct NfaJson {
    alphabet: Vec<LetterDescriptor>,
    states: usize,
    start: Vec<usize>,
    accept: Vec<usize>,
    transitions: Vec<(usize, String, usize)>,
    epsilon: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
struct DfaJson {
    alphabet: Vec<LetterDescriptor>,
    states: usize,
    start: usize,
    accept: Vec<usize>,
    transitions: Vec<(usize, String, usize)>,
}

pub fn nfa_to_json(n: &Nfa) -> String {
    let mut transitions: Vec<(usize, String, usize)> = n
        .transitions
        .iter()
        .map(|&(f, l, t)| (f, n.alphabet.name(l).to_string(), t))
        .collect();
    transitions.sort();
    let mut epsilon = n.epsilon.clone();
    epsilon.sort();
    let j = NfaJson {
        alphabet: n.alphabet.descriptor(),
        states: n.states,
        start: n.start.iter().copied().collect(),
        accept: n.accept.iter().copied().collect(),
        transitions,
        epsilon,
    };
    serde_json::to_string(&j).expect("nfa serialization cannot fail")
}

pub fn dfa_to_json(d: &Dfa) -> String {
    let mut transitions = Vec::new();
    for s in 0..d.states {
        for l in d.alphabet.letters() {
            transitions.push((s, d.alphabet.name(l).to_string(), d.step(s, l)));
        }
    }
    let accept: Vec<usize> = (0..d.states).filter(|&s| d.accept[s]).collect();
    let j = DfaJson {
        alphabet: d.alphabet.descriptor(),
        states: d.states,
        start: d.start,
        accept,
        transitions,
    };
    serde_json::to_string(&j).expect("dfa serialization cannot fail")
}

pub fn nfa_from_json(text: &str) -> Result<Nfa, FsaError> {
    let j: NfaJson = serde_json::from_str(text)
        .map_err(|e| FsaError::BadAutomaton(format!("json: {e}")))?;
    let alphabet = Alphabet::from_descriptor(&j.alphabet)?;
    let mut n = Nfa::empty(alphabet.clone());
    n.states = j.states;
    for &s in j.start.iter().chain(&j.accept) {
        if s >= j.states {
            return Err(FsaError::BadAutomaton(format!("state {s} out of range")));
        }
    }
    n.start = j.start.iter().copied().collect();
    n.accept = j.accept.iter().copied().collect();
    for (f, name, t) in &j.transitions {
        if *f >= j.states || *t >= j.states {
            return Err(FsaError::BadAutomaton("transition state out of range".into()));
        }
        let l = alphabet
            .id_of(name)
            .ok_or_else(|| FsaError::UnknownLetter(name.clone()))?;
        n.add_transition(*f, l, *t);
    }
    for &(f, t) in &j.epsilon {
        if f >= j.states || t >= j.states {
            return Err(FsaError::BadAutomaton("epsilon state out of range".into()));
        }
        n.add_epsilon(f, t);
    }
    Ok(n)
}

pub fn dfa_from_json(text: &str) -> Result<Dfa, FsaError> {
    let j: DfaJson = serde_json::from_str(text)
        .map_err(|e| FsaError::BadAutomaton(format!("json: {e}")))?;
    let alphabet = Alphabet::from_descriptor(&j.alphabet)?;
    let k = alphabet.len();
    if j.start >= j.states {
        return Err(FsaError::BadAutomaton("start state out of range".into()));
    }
    let mut delta = vec![usize::MAX; j.states * k];
    for (f, name, t) in &j.transitions {
        if *f >= j.states || *t >= j.states {
            return Err(FsaError::BadAutomaton("transition state out of range".into()));
        }
        let l = alphabet
            .id_of(name)
            .ok_or_else(|| FsaError::UnknownLetter(name.clone()))? as usize;
        if delta[f * k + l] != usize::MAX {
            return Err(FsaError::BadAutomaton(format!(
                "duplicate transition from state {f} on {name:?}"
            )));
        }
        delta[f * k + l] = *t;
    }
    if delta.iter().any(|&t| t == usize::MAX) {
        return Err(FsaError::BadAutomaton(
            "transition function is not total".into(),
        ));
    }
    let mut accept = vec![false; j.states];
    for &s in &j.accept {
        if s >= j.states {
            return Err(FsaError::BadAutomaton(format!("state {s} out of range")));
        }
        accept[s] = true;
    }
    Ok(Dfa {
        alphabet,
        states: j.states,
        start: j.start,
        accept,
        delta,
    })
}

/// GraphViz rendering of a deterministic automaton.
pub fn dfa_to_dot(d: &Dfa, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {name} {{\n  rankdir=LR;\n"));
    out.push_str("  hidden_start [shape=point];\n");
    for s in 0..d.states {
        let shape = if d.accept[s] { "doublecircle" } else { "circle" };
        out.push_str(&format!("  q{s} [shape={shape}];\n"));
    }
    out.push_str(&format!("  hidden_start -> q{};\n", d.start));
    for s in 0..d.states {
        for l in d.alphabet.letters() {
            out.push_str(&format!(
                "  q{s} -> q{} [label=\"{}\"];\n",
                d.step(s, l),
                d.alphabet.name(l)
            ));
        }
    }
    out.push_str("}\n");
    out
}

/// GraphViz rendering of a nondeterministic automaton.
pub fn nfa_to_dot(n: &Nfa, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {name} {{\n  rankdir=LR;\n"));
    for s in 0..n.states {
        let shape = if n.accept.contains(&s) {
            "doublecircle"
        } else {
            "circle"
        };
        out.push_str(&format!("  q{s} [shape={shape}];\n"));
    }
    for (i, &s) in n.start.iter().enumerate() {
        out.push_str(&format!("  hidden_start{i} [shape=point];\n"));
        out.push_str(&format!("  hidden_start{i} -> q{s};\n"));
    }
    for &(f, l, t) in &n.transitions {
        out.push_str(&format!(
            "  q{f} -> q{t} [label=\"{}\"];\n",
            n.alphabet.name(l)
        ));
    }
    for &(f, t) in &n.epsilon {
        out.push_str(&format!("  q{f} -> q{t} [label=\"ε\"];\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsa::dfa::minimize;

    #[test]
    fn dfa_json_roundtrip() {
        let a = Alphabet::new(&[("a", "A"), ("A", "a")]).unwrap();
        let mut d = Dfa::universal(a);
        d.accept[0] = true;
        let text = dfa_to_json(&d);
        assert!(text.contains("\"alphabet\":[{\"name\":\"a\",\"inverse\":\"A\"}"));
        let back = dfa_from_json(&text).unwrap();
        assert_eq!(minimize(&back), minimize(&d));
    }

    #[test]
    fn dfa_json_rejects_partial_delta() {
        let text = r#"{"alphabet":[{"name":"a","inverse":"a"}],"states":2,"start":0,"accept":[1],"transitions":[[0,"a",1]]}"#;
        assert!(dfa_from_json(text).is_err());
    }

    #[test]
    fn nfa_json_roundtrip() {
        let a = Alphabet::self_inverse(&["a", "b"]).unwrap();
        let mut n = Nfa::empty(a);
        let s = n.add_state();
        let t = n.add_state();
        n.start.insert(s);
        n.accept.insert(t);
        n.add_transition(s, 1, t);
        n.add_epsilon(s, t);
        let text = nfa_to_json(&n);
        let back = nfa_from_json(&text).unwrap();
        assert_eq!(back.states, 2);
        assert_eq!(back.transitions, vec![(0, 1, 1)]);
        assert_eq!(back.epsilon, vec![(0, 1)]);
    }
}
