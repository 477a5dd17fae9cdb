//! Deterministic automata: subset construction, canonical minimization,
//! boolean algebra, quotients, enumeration, and equivalence checking.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::alphabet::{Alphabet, LetterId, Word};
use super::nfa::Nfa;
use crate::error::FsaError;

/// A complete deterministic automaton.  The transition function is total: a
/// dead state, when needed, is an ordinary state with no path to acceptance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    pub alphabet: Alphabet,
    pub states: usize,
    pub start: usize,
    pub accept: Vec<bool>,
    /// `delta[state * |Σ| + letter]`.
    pub delta: Vec<usize>,
}

/// Which boolean combination `boolean_op` computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
}

impl Dfa {
    /// Single dead state; accepts the empty language.
    pub fn empty_language(alphabet: Alphabet) -> Dfa {
        let k = alphabet.len();
        Dfa {
            alphabet,
            states: 1,
            start: 0,
            accept: vec![false],
            delta: vec![0; k],
        }
    }

    /// Accepts all of `Σ*`.
    pub fn universal(alphabet: Alphabet) -> Dfa {
        let mut d = Dfa::empty_language(alphabet);
        d.accept[0] = true;
        d
    }

    /// Accepts exactly the given finite set of words.
    pub fn from_words(alphabet: Alphabet, words: &[Word]) -> Dfa {
        // Trie with an explicit dead state.
        let k = alphabet.len();
        let mut delta: Vec<Vec<Option<usize>>> = vec![vec![None; k]];
        let mut accept = vec![false];
        for w in words {
            let mut s = 0usize;
            for &l in w.letters() {
                s = match delta[s][l as usize] {
                    Some(t) => t,
                    None => {
                        delta.push(vec![None; k]);
                        accept.push(false);
                        let t = delta.len() - 1;
                        delta[s][l as usize] = Some(t);
                        t
                    }
                };
            }
            accept[s] = true;
        }
        let dead = delta.len();
        let states = dead + 1;
        let mut flat = vec![dead; states * k];
        for (s, row) in delta.iter().enumerate() {
            for (l, t) in row.iter().enumerate() {
                flat[s * k + l] = t.unwrap_or(dead);
            }
        }
        accept.push(false);
        minimize(&Dfa {
            alphabet,
            states,
            start: 0,
            accept,
            delta: flat,
        })
    }

    #[inline]
    pub fn step(&self, state: usize, letter: LetterId) -> usize {
        self.delta[state * self.alphabet.len() + letter as usize]
    }

    /// State reached from `state` by reading `w`.
    pub fn run(&self, state: usize, w: &Word) -> usize {
        w.letters().iter().fold(state, |s, &l| self.step(s, l))
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.accept[self.run(self.start, w)]
    }

    /// For each state, the length of a shortest accepted suffix (`None` for
    /// dead states).  Computed by BFS on reversed transitions.
    pub fn accept_distance(&self) -> Vec<Option<usize>> {
        let k = self.alphabet.len();
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); self.states];
        for s in 0..self.states {
            for l in 0..k {
                rev[self.delta[s * k + l]].push(s);
            }
        }
        let mut dist = vec![None; self.states];
        let mut queue = VecDeque::new();
        for s in 0..self.states {
            if self.accept[s] {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            let d = dist[s].unwrap();
            for &p in &rev[s] {
                if dist[p].is_none() {
                    dist[p] = Some(d + 1);
                    queue.push_back(p);
                }
            }
        }
        dist
    }

    /// `L(self) ∩ Σ^{≤n}`, grouped by length, each group in lexicographic
    /// order of the alphabet order.
    pub fn enumerate(&self, n: usize) -> Vec<Vec<Word>> {
        let dist = self.accept_distance();
        let mut groups: Vec<Vec<Word>> = vec![Vec::new(); n + 1];
        let mut stack: Vec<LetterId> = Vec::new();
        self.enumerate_rec(self.start, n, &dist, &mut stack, &mut groups);
        groups
    }

    fn enumerate_rec(
        &self,
        state: usize,
        n: usize,
        dist: &[Option<usize>],
        stack: &mut Vec<LetterId>,
        groups: &mut Vec<Vec<Word>>,
    ) {
        if self.accept[state] {
            groups[stack.len()].push(Word(stack.clone()));
        }
        if stack.len() == n {
            return;
        }
        let remaining = n - stack.len() - 1;
        for l in self.alphabet.letters() {
            let t = self.step(state, l);
            // Only descend where some accepted word still fits the budget.
            if matches!(dist[t], Some(d) if d <= remaining) {
                stack.push(l);
                self.enumerate_rec(t, n, dist, stack, groups);
                stack.pop();
            }
        }
    }

    /// States reachable from the start.
    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.states];
        let mut queue = VecDeque::from([self.start]);
        seen[self.start] = true;
        while let Some(s) = queue.pop_front() {
            for l in self.alphabet.letters() {
                let t = self.step(s, l);
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// Indices of live states: reachable and with a path to acceptance.
    pub fn live_states(&self) -> Vec<usize> {
        let reach = self.reachable();
        let dist = self.accept_distance();
        (0..self.states)
            .filter(|&s| reach[s] && dist[s].is_some())
            .collect()
    }
}

/// Epsilon-closure subset construction.  The result is total and has no
/// epsilon transitions; its language equals `L(n)`.
pub fn determinize(n: &Nfa) -> Dfa {
    let k = n.alphabet.len();
    let mut eps: Vec<Vec<usize>> = vec![Vec::new(); n.states];
    for &(f, t) in &n.epsilon {
        eps[f].push(t);
    }
    let mut trans: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); k]; n.states];
    for &(f, l, t) in &n.transitions {
        trans[f][l as usize].push(t);
    }
    let closure = |set: &BTreeSet<usize>| -> BTreeSet<usize> {
        let mut out = set.clone();
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &t in &eps[s] {
                if out.insert(t) {
                    stack.push(t);
                }
            }
        }
        out
    };

    let start_set = closure(&n.start);
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut subsets: Vec<BTreeSet<usize>> = Vec::new();
    let key: Vec<usize> = start_set.iter().copied().collect();
    ids.insert(key, 0);
    subsets.push(start_set);
    let mut delta: Vec<usize> = Vec::new();
    let mut accept: Vec<bool> = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        let cur = subsets[i].clone();
        accept.push(cur.iter().any(|&s| n.accept.contains(&s)));
        for l in 0..k {
            let mut next = BTreeSet::new();
            for &s in &cur {
                next.extend(trans[s][l].iter().copied());
            }
            let next = closure(&next);
            let key: Vec<usize> = next.iter().copied().collect();
            let id = *ids.entry(key).or_insert_with(|| {
                subsets.push(next);
                subsets.len() - 1
            });
            delta.push(id);
        }
        i += 1;
    }
    Dfa {
        alphabet: n.alphabet.clone(),
        states: subsets.len(),
        start: 0,
        accept,
        delta,
    }
}

/// Minimal complete automaton for `L(d)` in canonical form: unreachable
/// states are dropped, equivalent states merged by partition refinement, and
/// states renumbered in BFS order from the start following the letter order.
/// Structural equality of minimized automata therefore decides language
/// equality.
pub fn minimize(d: &Dfa) -> Dfa {
    let k = d.alphabet.len();
    // Restrict to reachable states.
    let reach = d.reachable();
    let mut map = vec![usize::MAX; d.states];
    let mut old_of = Vec::new();
    for s in 0..d.states {
        if reach[s] {
            map[s] = old_of.len();
            old_of.push(s);
        }
    }
    let m = old_of.len();
    let mut delta = Vec::with_capacity(m * k);
    for &old in &old_of {
        for l in 0..k {
            delta.push(map[d.delta[old * k + l]]);
        }
    }
    let accept: Vec<bool> = old_of.iter().map(|&s| d.accept[s]).collect();
    let start = map[d.start];

    // Moore partition refinement.
    let mut class: Vec<usize> = accept.iter().map(|&a| a as usize).collect();
    let mut count = 2;
    loop {
        let mut sig_ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next_class = vec![0usize; m];
        for s in 0..m {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class[s]);
            for l in 0..k {
                sig.push(class[delta[s * k + l]]);
            }
            let next = sig_ids.len();
            next_class[s] = *sig_ids.entry(sig).or_insert(next);
        }
        let new_count = sig_ids.len();
        if new_count == count {
            class = next_class;
            break;
        }
        count = new_count;
        class = next_class;
    }

    // Canonical BFS renumbering of the quotient.
    let mut order = vec![usize::MAX; count];
    let mut seq = Vec::with_capacity(count);
    let mut queue = VecDeque::from([class[start]]);
    order[class[start]] = 0;
    seq.push(class[start]);
    while let Some(c) = queue.pop_front() {
        let rep = (0..m).find(|&s| class[s] == c).unwrap();
        for l in 0..k {
            let t = class[delta[rep * k + l]];
            if order[t] == usize::MAX {
                order[t] = seq.len();
                seq.push(t);
                queue.push_back(t);
            }
        }
    }
    // All classes are reachable from the start class because the input was
    // restricted to reachable states.
    let states = count;
    let mut out_delta = vec![0usize; states * k];
    let mut out_accept = vec![false; states];
    for (new, &c) in seq.iter().enumerate() {
        let rep = (0..m).find(|&s| class[s] == c).unwrap();
        out_accept[new] = accept[rep];
        for l in 0..k {
            out_delta[new * k + l] = order[class[delta[rep * k + l]]];
        }
    }
    Dfa {
        alphabet: d.alphabet.clone(),
        states,
        start: 0,
        accept: out_accept,
        delta: out_delta,
    }
}

/// Product construction for union / intersection / difference.
pub fn boolean_op(x: &Dfa, y: &Dfa, mode: BoolOp) -> Result<Dfa, FsaError> {
    if x.alphabet != y.alphabet {
        return Err(FsaError::AlphabetMismatch);
    }
    let k = x.alphabet.len();
    let states = x.states * y.states;
    let mut delta = vec![0usize; states * k];
    let mut accept = vec![false; states];
    for sx in 0..x.states {
        for sy in 0..y.states {
            let s = sx * y.states + sy;
            accept[s] = match mode {
                BoolOp::Union => x.accept[sx] || y.accept[sy],
                BoolOp::Intersection => x.accept[sx] && y.accept[sy],
                BoolOp::Difference => x.accept[sx] && !y.accept[sy],
            };
            for l in 0..k {
                delta[s * k + l] =
                    x.delta[sx * k + l] * y.states + y.delta[sy * k + l];
            }
        }
    }
    Ok(minimize(&Dfa {
        alphabet: x.alphabet.clone(),
        states,
        start: x.start * y.states + y.start,
        accept,
        delta,
    }))
}

/// Complement over the full `Σ*` (the transition function is total).
pub fn complement(x: &Dfa) -> Dfa {
    let mut out = x.clone();
    for a in out.accept.iter_mut() {
        *a = !*a;
    }
    minimize(&out)
}

/// Which side `quotient` divides on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientSide {
    /// `{v | wv ∈ L}`
    Left,
    /// `{v | vw ∈ L}`
    Right,
}

/// Language quotient by a fixed word.
pub fn quotient(d: &Dfa, w: &Word, side: QuotientSide) -> Dfa {
    match side {
        QuotientSide::Left => {
            let mut out = d.clone();
            out.start = d.run(d.start, w);
            minimize(&out)
        }
        QuotientSide::Right => {
            let mut out = d.clone();
            for s in 0..d.states {
                out.accept[s] = d.accept[d.run(s, w)];
            }
            minimize(&out)
        }
    }
}

/// `Ok(None)` when the languages are equal; otherwise a shortest word of the
/// symmetric difference (lexicographically least among shortest, by BFS in
/// letter order).
pub fn equivalent(x: &Dfa, y: &Dfa) -> Result<Option<Word>, FsaError> {
    if x.alphabet != y.alphabet {
        return Err(FsaError::AlphabetMismatch);
    }
    let k = x.alphabet.len();
    let mut seen: HashMap<(usize, usize), Option<(usize, usize, LetterId)>> = HashMap::new();
    let start = (x.start, y.start);
    seen.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some((sx, sy)) = queue.pop_front() {
        if x.accept[sx] != y.accept[sy] {
            // Reconstruct the witness word.
            let mut letters = Vec::new();
            let mut cur = (sx, sy);
            while let Some(&Some((px, py, l))) = seen.get(&cur) {
                letters.push(l);
                cur = (px, py);
            }
            letters.reverse();
            return Ok(Some(Word(letters)));
        }
        for l in 0..k as LetterId {
            let next = (x.step(sx, l), y.step(sy, l));
            seen.entry(next).or_insert_with(|| {
                queue.push_back(next);
                Some((sx, sy, l))
            });
        }
    }
    Ok(None)
}

/// The piecewise-excluding language of a finite set of forbidden scattered
/// subwords: accepts exactly the words containing none of the `forbidden`
/// words as a (not necessarily consecutive) subword.
pub fn piecewise_excluding(alphabet: &Alphabet, forbidden: &[Word]) -> Dfa {
    // One monotone progress counter per forbidden word; a word is rejected
    // once any counter completes.  Scattered-subword progress never rewinds
    // under extension, so the product of counters is a complete automaton.
    if forbidden.iter().any(|w| w.is_empty()) {
        return Dfa::empty_language(alphabet.clone());
    }
    let k = alphabet.len();
    let dims: Vec<usize> = forbidden.iter().map(|w| w.len()).collect();
    let total: usize = dims.iter().product::<usize>().max(1);
    let encode = |prog: &[usize]| -> usize {
        prog.iter().zip(&dims).fold(0, |acc, (&p, &d)| acc * d + p)
    };
    let decode = |mut s: usize| -> Vec<usize> {
        let mut prog = vec![0usize; dims.len()];
        for i in (0..dims.len()).rev() {
            prog[i] = s % dims[i];
            s /= dims[i];
        }
        prog
    };
    // Dead state at index `total`.
    let states = total + 1;
    let mut delta = vec![total; states * k];
    let mut accept = vec![false; states];
    for s in 0..total {
        accept[s] = true;
        let prog = decode(s);
        for l in alphabet.letters() {
            let mut next = prog.clone();
            let mut dead = false;
            for (i, w) in forbidden.iter().enumerate() {
                if w.letters()[next[i]] == l {
                    next[i] += 1;
                    if next[i] == w.len() {
                        dead = true;
                    }
                }
            }
            delta[s * k + l as usize] = if dead { total } else { encode(&next) };
        }
    }
    minimize(&Dfa {
        alphabet: alphabet.clone(),
        states,
        start: 0,
        accept,
        delta,
    })
}
