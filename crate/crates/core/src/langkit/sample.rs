//! Exact samples of the six languages, computed from a ball, plus
//! sample-versus-automaton comparison.

use std::collections::HashMap;

use serde::Serialize;

use super::ball::Ball;
use super::{Element, GroupOracle};
use crate::error::LangError;
use crate::fsa::{Alphabet, Dfa, Word};

/// The six languages attached to (group, ordered generating set).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LanguageKind {
    /// Words whose length equals the length of the element they represent.
    Geo,
    /// Words all of whose rotations are geodesic.
    CycGeo,
    /// Words whose length equals the minimum length over the conjugacy class.
    ConjGeo,
    /// Shortlex normal forms of all elements.
    Sl,
    /// Shortlex normal forms of elements of minimal length in their class.
    MinCl,
    /// The shortlex-least word over each whole conjugacy class.
    ConjSl,
}

impl LanguageKind {
    pub fn parse(s: &str) -> Option<LanguageKind> {
        Some(match s {
            "geo" => LanguageKind::Geo,
            "cycgeo" => LanguageKind::CycGeo,
            "conjgeo" => LanguageKind::ConjGeo,
            "sl" => LanguageKind::Sl,
            "mincl" => LanguageKind::MinCl,
            "conjsl" => LanguageKind::ConjSl,
        _ => return None,
        })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            LanguageKind::Geo => "geo",
            LanguageKind::CycGeo => "cycgeo",
            LanguageKind::ConjGeo => "conjgeo",
            LanguageKind::Sl => "sl",
            LanguageKind::MinCl => "mincl",
            LanguageKind::ConjSl => "conjsl",
        }
    }

    pub fn needs_conjugacy(&self) -> bool {
        matches!(
            self,
            LanguageKind::ConjGeo | LanguageKind::MinCl | LanguageKind::ConjSl
        )
    }

    pub fn all() -> [LanguageKind; 6] {
        [
            LanguageKind::Geo,
            LanguageKind::CycGeo,
            LanguageKind::ConjGeo,
            LanguageKind::Sl,
            LanguageKind::MinCl,
            LanguageKind::ConjSl,
        ]
    }
}

/// Per-class data: minimal element length and the class shortlex normal form.
struct ConjTable {
    min_len: HashMap<Element, usize>,
    class_nf: HashMap<Element, Word>,
    exact: bool,
}

/// A ball together with the derived conjugacy table; answers membership
/// queries for every language kind at word lengths up to the ball radius.
pub struct LanguageContext<'a> {
    oracle: &'a dyn GroupOracle,
    pub ball: Ball,
    conj: Option<ConjTable>,
}

impl<'a> LanguageContext<'a> {
    /// Builds the context.  Conjugacy data is exact when the oracle has a
    /// conjugacy key; with `force`, a bounded conjugation search of the given
    /// depth supplies sound but possibly non-minimal class lengths, and the
    /// context is flagged inexact.
    pub fn build(
        oracle: &'a dyn GroupOracle,
        radius: usize,
        want_conj: bool,
        force: Option<usize>,
    ) -> Result<LanguageContext<'a>, LangError> {
        let ball = Ball::build(oracle, radius)?;
        let conj = if !want_conj {
            None
        } else if oracle.has_conj_key() {
            // One pass over the layers in shortlex order: the first member of
            // each class seen gives both the class minimum and, being the
            // shortlex-least normal form of least length, the class normal
            // form.
            let mut min_len = HashMap::new();
            let mut class_nf = HashMap::new();
            for len in 0..=radius {
                for g in ball.layer(len) {
                    let key = oracle.conj_key(g).expect("oracle advertised a conj key");
                    min_len.entry(key.clone()).or_insert(len);
                    class_nf
                        .entry(key)
                        .or_insert_with(|| ball.normal_form(g).unwrap().clone());
                }
            }
            Some(ConjTable {
                min_len,
                class_nf,
                exact: true,
            })
        } else if let Some(budget) = force {
            Some(Self::bounded_conj_table(oracle, &ball, radius, budget))
        } else {
            return Err(LangError::InexactConjugacy);
        };
        Ok(LanguageContext { oracle, ball, conj })
    }

    /// Sound upper bounds on class minima via conjugation by words of length
    /// at most `budget`; class normal forms use the best conjugate found.
    fn bounded_conj_table(
        oracle: &dyn GroupOracle,
        ball: &Ball,
        radius: usize,
        budget: usize,
    ) -> ConjTable {
        let mut min_len: HashMap<Element, usize> = HashMap::new();
        let mut class_nf: HashMap<Element, Word> = HashMap::new();
        for len in 0..=radius {
            for g in ball.layer(len) {
                let mut best = (len, ball.normal_form(g).unwrap().clone());
                let mut frontier = vec![g.clone()];
                let mut seen = std::collections::HashSet::new();
                seen.insert(g.clone());
                for _ in 0..budget {
                    let mut next = Vec::new();
                    for h in &frontier {
                        for l in oracle.alphabet().letters() {
                            let inv = oracle.alphabet().inverse(l);
                            let c = oracle
                                .left_multiply(inv, &oracle.right_multiply(h, l));
                            if seen.insert(c.clone()) {
                                if let Some(cl) = ball.length(&c) {
                                    let nf = ball.normal_form(&c).unwrap().clone();
                                    if (cl, nf.clone()) < best.clone() {
                                        best = (cl, nf);
                                    }
                                }
                                next.push(c);
                            }
                        }
                    }
                    frontier = next;
                }
                // Key the table by the element itself: no exact key exists.
                min_len.insert(g.clone(), best.0);
                class_nf.insert(g.clone(), best.1);
            }
        }
        ConjTable {
            min_len,
            class_nf,
            exact: false,
        }
    }

    fn key_of(&self, g: &Element) -> Element {
        match self.oracle.conj_key(g) {
            Some(k) => k,
            None => g.clone(),
        }
    }

    pub fn class_min_length(&self, g: &Element) -> usize {
        let table = self.conj.as_ref().expect("context built without conjugacy");
        table.min_len[&self.key_of(g)]
    }

    pub fn is_geodesic(&self, w: &Word) -> bool {
        self.ball.length(&self.oracle.evaluate(w)) == Some(w.len())
    }

    pub fn is_cyclic_geodesic(&self, w: &Word) -> bool {
        (0..w.len().max(1)).all(|i| self.is_geodesic(&w.rotate(i % w.len().max(1))))
    }

    pub fn is_conj_geodesic(&self, w: &Word) -> bool {
        self.is_geodesic(&w) && self.class_min_length(&self.oracle.evaluate(w)) == w.len()
    }

    pub fn is_shortlex_normal(&self, w: &Word) -> bool {
        self.ball.normal_form(&self.oracle.evaluate(w)) == Some(w)
    }

    pub fn is_min_class_normal(&self, w: &Word) -> bool {
        self.is_shortlex_normal(w) && self.class_min_length(&self.oracle.evaluate(w)) == w.len()
    }

    pub fn is_conj_shortlex(&self, w: &Word) -> bool {
        let table = self.conj.as_ref().expect("context built without conjugacy");
        let g = self.oracle.evaluate(w);
        table.class_nf.get(&self.key_of(&g)) == Some(w)
    }

    pub fn member(&self, kind: LanguageKind, w: &Word) -> bool {
        match kind {
            LanguageKind::Geo => self.is_geodesic(w),
            LanguageKind::CycGeo => self.is_cyclic_geodesic(w),
            LanguageKind::ConjGeo => self.is_conj_geodesic(w),
            LanguageKind::Sl => self.is_shortlex_normal(w),
            LanguageKind::MinCl => self.is_min_class_normal(w),
            LanguageKind::ConjSl => self.is_conj_shortlex(w),
        }
    }
}

/// Words of one language up to a length bound, grouped by length.
#[derive(Debug, Clone, Serialize)]
pub struct LanguageSample {
    #[serde(skip)]
    pub alphabet: Alphabet,
    pub kind: &'static str,
    pub bound: usize,
    /// False when class minima came from a bounded (forced) search.
    pub exact: bool,
    #[serde(skip)]
    pub groups: Vec<Vec<Word>>,
}

impl LanguageSample {
    pub fn total(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.groups.iter().map(Vec::len).collect()
    }

    /// TSV dump `n<TAB>word`, sorted by (n, lex).
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (n, group) in self.groups.iter().enumerate() {
            for w in group {
                out.push_str(&format!("{n}\t{}\n", self.alphabet.format_word(w)));
            }
        }
        out
    }
}

/// Exactly the words of the language up to length `n`.
///
/// Conjugacy-dependent kinds require an exact conjugacy key; see
/// [`language_sample_forced`] for the bounded-search fallback.
pub fn language_sample(
    oracle: &dyn GroupOracle,
    kind: LanguageKind,
    n: usize,
) -> Result<LanguageSample, LangError> {
    let ctx = LanguageContext::build(oracle, n, kind.needs_conjugacy(), None)?;
    Ok(sample_from_context(&ctx, kind, n))
}

/// Like [`language_sample`], but when the oracle has no conjugacy key the
/// class minima come from a conjugation search of the given depth and the
/// sample is flagged inexact.
pub fn language_sample_forced(
    oracle: &dyn GroupOracle,
    kind: LanguageKind,
    n: usize,
    budget: usize,
) -> Result<LanguageSample, LangError> {
    let ctx = LanguageContext::build(oracle, n, kind.needs_conjugacy(), Some(budget))?;
    Ok(sample_from_context(&ctx, kind, n))
}

pub(crate) fn sample_from_context(
    ctx: &LanguageContext,
    kind: LanguageKind,
    n: usize,
) -> LanguageSample {
    let oracle = ctx.oracle;
    let mut groups: Vec<Vec<Word>> = vec![Vec::new(); n + 1];
    match kind {
        LanguageKind::Sl => {
            for len in 0..=n {
                groups[len] = ctx
                    .ball
                    .layer(len)
                    .iter()
                    .map(|g| ctx.ball.normal_form(g).unwrap().clone())
                    .collect();
            }
        }
        LanguageKind::MinCl => {
            for len in 0..=n {
                groups[len] = ctx
                    .ball
                    .layer(len)
                    .iter()
                    .filter(|g| ctx.class_min_length(g) == len)
                    .map(|g| ctx.ball.normal_form(g).unwrap().clone())
                    .collect();
            }
        }
        LanguageKind::ConjSl => {
            let table = ctx.conj.as_ref().expect("conjsl requires conjugacy");
            for w in table.class_nf.values() {
                if w.len() <= n {
                    groups[w.len()].push(w.clone());
                }
            }
            for group in &mut groups {
                group.sort();
                group.dedup();
            }
        }
        LanguageKind::Geo | LanguageKind::CycGeo | LanguageKind::ConjGeo => {
            let mut stack = Word::empty();
            geodesic_dfs(ctx, kind, n, &oracle.identity(), &mut stack, &mut groups);
        }
    }
    LanguageSample {
        alphabet: oracle.alphabet().clone(),
        kind: kind.tag(),
        bound: n,
        exact: ctx.conj.as_ref().map_or(true, |t| t.exact),
        groups,
    }
}

/// Walks the tree of geodesic words in letter order (so each length group
/// comes out lexicographically sorted), filtering by the requested kind.
fn geodesic_dfs(
    ctx: &LanguageContext,
    kind: LanguageKind,
    n: usize,
    g: &Element,
    stack: &mut Word,
    groups: &mut [Vec<Word>],
) {
    let keep = match kind {
        LanguageKind::Geo => true,
        LanguageKind::CycGeo => ctx.is_cyclic_geodesic(stack),
        LanguageKind::ConjGeo => ctx.class_min_length(g) == stack.len(),
        _ => unreachable!(),
    };
    if keep {
        groups[stack.len()].push(stack.clone());
    }
    if stack.len() == n {
        return;
    }
    for l in ctx.oracle.alphabet().letters() {
        let h = ctx.oracle.right_multiply(g, l);
        if ctx.ball.length(&h) == Some(stack.len() + 1) {
            stack.push(l);
            geodesic_dfs(ctx, kind, n, &h, stack, groups);
            stack.0.pop();
        }
    }
}

/// Result of comparing a sample against an automaton.
#[derive(Debug, Clone, Serialize)]
pub struct CompareReport {
    pub kind: String,
    pub bound: usize,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divergence: Option<Divergence>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Divergence {
    pub length: usize,
    pub word: String,
    /// "sample" when the word is in the sample but not the automaton,
    /// "automaton" for the converse.
    pub only_in: String,
}

impl CompareReport {
    pub fn is_equal(&self) -> bool {
        self.status == "equal"
    }
}

/// Set equality per length up to the sample bound; on failure reports the
/// first divergence in shortlex order.
pub fn compare_sample_to_dfa(sample: &LanguageSample, dfa: &Dfa) -> Result<CompareReport, LangError> {
    if sample.alphabet != dfa.alphabet {
        return Err(LangError::Fsa(crate::error::FsaError::AlphabetMismatch));
    }
    let machine_groups = dfa.enumerate(sample.bound);
    for len in 0..=sample.bound {
        let sample_group = &sample.groups[len];
        let machine_group = &machine_groups[len];
        let mut i = 0;
        let mut j = 0;
        while i < sample_group.len() || j < machine_group.len() {
            let diverged = match (sample_group.get(i), machine_group.get(j)) {
                (Some(sw), Some(mw)) => {
                    if sw == mw {
                        i += 1;
                        j += 1;
                        continue;
                    } else if sw < mw {
                        Some((sw, "sample"))
                    } else {
                        Some((mw, "automaton"))
                    }
                }
                (Some(sw), None) => Some((sw, "sample")),
                (None, Some(mw)) => Some((mw, "automaton")),
                (None, None) => unreachable!(),
            };
            let (word, only_in) = diverged.unwrap();
            return Ok(CompareReport {
                kind: sample.kind.to_string(),
                bound: sample.bound,
                status: "diverged".to_string(),
                divergence: Some(Divergence {
                    length: len,
                    word: sample.alphabet.format_word(word),
                    only_in: only_in.to_string(),
                }),
            });
        }
    }
    Ok(CompareReport {
        kind: sample.kind.to_string(),
        bound: sample.bound,
        status: "equal".to_string(),
        divergence: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsa::{dfa_of_regex, piecewise_excluding, Regex};
    use crate::groups::{FreeAbelian, FreeGroup};

    /// Brute-force cyclic-reduction oracle for the free group: a word is a
    /// conjugacy geodesic iff it is freely and cyclically reduced.
    fn cyclically_reduced(a: &Alphabet, w: &Word) -> bool {
        let ls = w.letters();
        for i in 0..ls.len().saturating_sub(1) {
            if ls[i + 1] == a.inverse(ls[i]) {
                return false;
            }
        }
        ls.len() < 2 || ls[0] != a.inverse(*ls.last().unwrap())
    }

    #[test]
    fn free_group_conjgeo_is_cyclically_reduced() {
        let f = FreeGroup::new(2);
        let a = f.alphabet().clone();
        let sample = language_sample(&f, LanguageKind::ConjGeo, 3).unwrap();
        assert!(sample.exact);
        // Independent enumeration over all words of length ≤ 3.
        let mut expected: Vec<Vec<Word>> = vec![Vec::new(); 4];
        let mut frontier = vec![Word::empty()];
        for len in 0..=3usize {
            let mut next = Vec::new();
            for w in &frontier {
                if cyclically_reduced(&a, w) {
                    expected[len].push(w.clone());
                }
                for l in a.letters() {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            frontier = next;
        }
        assert_eq!(sample.groups, expected);
    }

    #[test]
    fn z2_geo_equals_conjgeo() {
        let z2 = FreeAbelian::new(2);
        let geo = language_sample(&z2, LanguageKind::Geo, 6).unwrap();
        let conjgeo = language_sample(&z2, LanguageKind::ConjGeo, 6).unwrap();
        assert_eq!(geo.groups, conjgeo.groups);
    }

    #[test]
    fn z2_geo_matches_piecewise_excluding_dfa() {
        let z2 = FreeAbelian::new(2);
        let a = z2.alphabet().clone();
        let w = |s: &str| a.parse_word(s).unwrap();
        let dfa = piecewise_excluding(&a, &[w("aA"), w("Aa"), w("bB"), w("Bb")]);
        let sample = language_sample(&z2, LanguageKind::Geo, 6).unwrap();
        let report = compare_sample_to_dfa(&sample, &dfa).unwrap();
        assert!(report.is_equal(), "{report:?}");
    }

    #[test]
    fn free_geo_matches_reduced_word_dfa() {
        // Geodesics of the free group avoid the four cancelling factors.
        let f = FreeGroup::new(2);
        let a = f.alphabet().clone();
        let sample = language_sample(&f, LanguageKind::Geo, 6).unwrap();
        let mut forbidden = Vec::new();
        for l in a.letters() {
            forbidden.push(Regex::cat([
                Regex::lit(a.name(l)),
                Regex::lit(a.name(a.inverse(l))),
            ]));
        }
        let anything = Regex::alt(a.letters().map(|l| Regex::lit(a.name(l)))).star();
        let bad = Regex::cat([anything.clone(), Regex::alt(forbidden), anything]);
        let dfa = crate::fsa::complement(&dfa_of_regex(&bad, &a).unwrap());
        let report = compare_sample_to_dfa(&sample, &dfa).unwrap();
        assert!(report.is_equal(), "{report:?}");
    }

    #[test]
    fn divergence_reported_at_first_bad_word() {
        let z2 = FreeAbelian::new(2);
        let sample = language_sample(&z2, LanguageKind::Geo, 4).unwrap();
        let wrong = dfa_of_regex(&Regex::lit("a").star(), &z2.alphabet().clone()).unwrap();
        let report = compare_sample_to_dfa(&sample, &wrong).unwrap();
        assert_eq!(report.status, "diverged");
        let d = report.divergence.unwrap();
        assert_eq!((d.length, d.word.as_str(), d.only_in.as_str()), (1, "A", "sample"));
    }

    #[test]
    fn conjsl_counts_classes() {
        // In ℤ² every element is its own class: ConjSL = SL.
        let z2 = FreeAbelian::new(2);
        let sl = language_sample(&z2, LanguageKind::Sl, 5).unwrap();
        let conjsl = language_sample(&z2, LanguageKind::ConjSl, 5).unwrap();
        assert_eq!(sl.groups, conjsl.groups);
        // Counting semantics: |SL ∩ Σ^n| = #elements of length n.
        let ball = Ball::build(&z2, 5).unwrap();
        for n in 0..=5 {
            assert_eq!(sl.groups[n].len(), ball.layer(n).len());
        }
    }

    #[test]
    fn refuses_conj_kinds_without_key() {
        struct NoKey(FreeGroup);
        impl GroupOracle for NoKey {
            fn name(&self) -> String {
                "nokey".into()
            }
            fn alphabet(&self) -> &Alphabet {
                self.0.alphabet()
            }
            fn identity(&self) -> Element {
                self.0.identity()
            }
            fn right_multiply(&self, g: &Element, l: crate::fsa::LetterId) -> Element {
                self.0.right_multiply(g, l)
            }
            fn invert(&self, g: &Element) -> Element {
                self.0.invert(g)
            }
        }
        let o = NoKey(FreeGroup::new(2));
        assert!(matches!(
            language_sample(&o, LanguageKind::ConjGeo, 3),
            Err(LangError::InexactConjugacy)
        ));
        // Forced mode is sound here: conjugation by single letters already
        // reaches the cyclic reduction at this scale.
        let forced = language_sample_forced(&o, LanguageKind::ConjGeo, 3, 3).unwrap();
        assert!(!forced.exact);
        let exact = language_sample(&FreeGroup::new(2), LanguageKind::ConjGeo, 3).unwrap();
        assert_eq!(forced.groups, exact.groups);
    }
}
