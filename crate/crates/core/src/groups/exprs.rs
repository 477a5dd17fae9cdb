//! Builders for the worked-example regular expressions: the conjugacy
//! languages of the four virtually abelian oracles and the conjugacy
//! shortlex language of the infinite dihedral group, each addressable by a
//! stable tag.

use std::collections::HashMap;

use crate::error::GroupError;
use crate::fsa::{
    boolean_op, concatenate, determinize, dfa_of_regex, insertion, minimize, Alphabet, BoolOp,
    Dfa, Regex, Word,
};
use crate::groups::{make_group, GroupSpec};

/// The small-parameter patch for the mixed-sign classes of ℤ² ⋊ ℤ/2 over
/// {a±, c±, d±, t}: conjugacy classes {a^m b^-n, a^-n b^m} with m, n ∈ {1, 2}
/// contribute finitely many words that the infinite-family expressions miss.
/// Frozen from the oracle; `finite_patch_matches_oracle` below recomputes
/// them from scratch.
const GEOCL_X_PATCH: &[&str] = &[
    // class {a b⁻¹, a⁻¹ b}, length 2
    "cD", "Dc", "Cd", "dC",
    // class {a b⁻², a⁻² b}, length 3 (minimum on the a⁻²b side)
    "ACd", "AdC", "CAd", "CdA", "dAC", "dCA",
    // class {a² b⁻¹, a⁻¹ b²}, length 3 (minimum on the a²b⁻¹ side)
    "acD", "aDc", "caD", "cDa", "Dac", "Dca",
    // class {a² b⁻², a⁻² b²}, length 4, both sides minimal
    "ccDD", "cDcD", "cDDc", "DccD", "DcDc", "DDcc", "ctCt", "tCtc",
    "CCdd", "CdCd", "CddC", "dCCd", "dCdC", "ddCC", "Ctct", "tctC",
];

const MINCL_X_PATCH: &[&str] = &["cD", "Cd", "ACd", "acD", "ccDD", "CCdd"];

const SPHCL_X_PATCH: &[&str] = &["cD", "ACd", "acD", "ccDD"];

struct Builder {
    alphabet: Alphabet,
}

impl Builder {
    fn new(alphabet: Alphabet) -> Builder {
        Builder { alphabet }
    }

    fn re(&self, r: &Regex) -> Dfa {
        dfa_of_regex(r, &self.alphabet).expect("expression literals belong to the alphabet")
    }

    fn ins(&self, host: &Dfa, piece: &Dfa) -> Dfa {
        minimize(&determinize(&insertion(host, piece)))
    }

    fn cat(&self, x: &Dfa, y: &Dfa) -> Dfa {
        minimize(&determinize(&concatenate(x, y)))
    }

    fn union(&self, parts: &[Dfa]) -> Dfa {
        parts
            .iter()
            .cloned()
            .reduce(|a, b| boolean_op(&a, &b, BoolOp::Union).expect("same alphabet"))
            .unwrap_or_else(|| Dfa::empty_language(self.alphabet.clone()))
    }

    fn words(&self, words: &[&str]) -> Dfa {
        let parsed: Vec<Word> = words
            .iter()
            .map(|w| self.alphabet.parse_word(w).expect("patch words parse"))
            .collect();
        Dfa::from_words(self.alphabet.clone(), &parsed)
    }
}

/// Sign-dependent letter names over {a±, b±, …}: `sgn("a", +) = "a"`,
/// `sgn("a", −) = "A"`.
fn sgn(base: &str, positive: bool) -> String {
    if positive {
        base.to_string()
    } else {
        base.to_uppercase()
    }
}

fn lit_s(name: &str) -> Regex {
    Regex::Literal(name.to_string())
}

/// `{x, y}*` for two letters given by name.
fn pair_star(x: &str, y: &str) -> Regex {
    Regex::alt([lit_s(x), lit_s(y)]).star()
}

/// The conjugacy languages of ℤ² ⋊ ℤ/2 over {a±, b±, t}.
mod zd2_z {
    use super::*;

    pub fn conjgeo(b: &Builder) -> Dfa {
        let mut parts = Vec::new();
        for eta in [true, false] {
            for zeta in [true, false] {
                parts.push(b.re(&pair_star(&sgn("a", eta), &sgn("b", zeta))));
            }
        }
        for eta in [true, false] {
            let same = pair_star(&sgn("a", eta), &sgn("b", eta));
            parts.push(b.re(&Regex::cat([same.clone(), lit_s("t"), same])));
        }
        b.union(&parts)
    }

    pub fn mincl(b: &Builder) -> Dfa {
        let mut parts = Vec::new();
        for eta in [true, false] {
            for zeta in [true, false] {
                parts.push(b.re(&Regex::cat([
                    lit_s(&sgn("a", eta)).star(),
                    lit_s(&sgn("b", zeta)).star(),
                ])));
            }
        }
        for eta in [true, false] {
            parts.push(b.re(&Regex::cat([
                lit_s(&sgn("a", eta)).star(),
                lit_s(&sgn("b", eta)).star(),
                lit_s("t"),
            ])));
        }
        b.union(&parts)
    }
}

/// The geodesic, shortlex, and conjugacy languages of ℤ² ⋊ D₈ over
/// {a±, b±, t, u}.
mod zd8_zp {
    use super::*;

    fn opt_u(b: &Builder) -> Dfa {
        b.re(&lit_s("u").optional())
    }

    fn just_u(b: &Builder) -> Dfa {
        b.re(&lit_s("u"))
    }

    /// t · (M ← u) · t
    fn t_block(b: &Builder, middle: &Regex) -> Dfa {
        let inner = b.ins(&b.re(middle), &just_u(b));
        let t = b.re(&lit_s("t"));
        b.cat(&b.cat(&t, &inner), &t)
    }

    pub fn geo(b: &Builder) -> Dfa {
        let mut parts = Vec::new();
        for eta in [true, false] {
            for zeta in [true, false] {
                let fwd = pair_star(&sgn("a", eta), &sgn("b", zeta));
                let swapped = pair_star(&sgn("a", zeta), &sgn("b", eta));
                // words with no t, at most one u
                parts.push(b.ins(&b.re(&fwd), &opt_u(b)));
                // two t's: u may appear once outside and must appear once inside
                let outer = b.ins(&b.re(&fwd), &opt_u(b));
                parts.push(b.ins(&outer, &t_block(b, &swapped)));
                // one t, at most one u anywhere
                let one_t = b.re(&Regex::cat([fwd, lit_s("t"), swapped]));
                parts.push(b.ins(&one_t, &opt_u(b)));
            }
        }
        b.union(&parts)
    }

    pub fn sl(b: &Builder) -> Dfa {
        let finite_tail = Regex::alt(
            ["", "t", "u", "tu", "ut", "tut", "utu", "tutu"]
                .iter()
                .map(|w| {
                    if w.is_empty() {
                        Regex::Epsilon
                    } else {
                        Regex::cat(w.chars().map(|c| lit_s(&c.to_string())))
                    }
                }),
        );
        let mut parts = Vec::new();
        for eta in [true, false] {
            for zeta in [true, false] {
                parts.push(b.re(&Regex::cat([
                    lit_s(&sgn("a", eta)).star(),
                    lit_s(&sgn("b", zeta)).star(),
                    finite_tail.clone(),
                ])));
            }
        }
        b.union(&parts)
    }

    pub fn conjgeo(b: &Builder) -> Dfa {
        let mut parts = Vec::new();
        for eta in [true, false] {
            for zeta in [true, false] {
                let fwd = pair_star(&sgn("a", eta), &sgn("b", zeta));
                let swapped = pair_star(&sgn("a", zeta), &sgn("b", eta));
                parts.push(b.ins(&b.re(&fwd), &opt_u(b)));
                // mandatory u both outside and inside the t-block
                let outer = b.ins(&b.re(&fwd), &just_u(b));
                parts.push(b.ins(&outer, &t_block(b, &swapped)));
            }
        }
        for eta in [true, false] {
            let same = pair_star(&sgn("a", eta), &sgn("b", eta));
            let with_t = b.ins(&b.re(&same), &b.re(&lit_s("t")));
            parts.push(b.ins(&with_t, &opt_u(b)));
        }
        b.union(&parts)
    }

    pub fn mincl(b: &Builder) -> Dfa {
        let tail1 = Regex::alt([
            Regex::Epsilon,
            lit_s("u"),
            Regex::letters(&["t", "u", "t", "u"]),
        ]);
        let tail2 = Regex::alt([
            lit_s("t"),
            Regex::letters(&["t", "u"]),
            Regex::letters(&["u", "t"]),
        ]);
        let mut parts = Vec::new();
        for eta in [true, false] {
            for zeta in [true, false] {
                parts.push(b.re(&Regex::cat([
                    lit_s(&sgn("a", eta)).star(),
                    lit_s(&sgn("b", zeta)).star(),
                    tail1.clone(),
                ])));
            }
        }
        for eta in [true, false] {
            parts.push(b.re(&Regex::cat([
                lit_s(&sgn("a", eta)).star(),
                lit_s(&sgn("b", eta)).star(),
                tail2.clone(),
            ])));
        }
        b.union(&parts)
    }
}

/// The conjugacy languages of ℤ² ⋊ ℤ/2 over {a±, c±, d±, t} (where the
/// geodesic and shortlex languages are not regular).
mod zd2_x {
    use super::*;

    /// One of the five infinite mixed-class pieces, with `pos` selecting the
    /// plain or inverted generator names.
    pub fn piece(b: &Builder, which: usize, pos: bool) -> Dfa {
        let a = sgn("a", pos);
        let c = sgn("c", pos);
        let ai = sgn("a", !pos);
        let ci = sgn("c", !pos);
        let d = sgn("d", pos);
        let di = sgn("d", !pos);
        let cplus = lit_s(&c).plus();
        let cciplus = lit_s(&ci).plus();
        let c2cstar = Regex::cat([lit_s(&c), lit_s(&c), lit_s(&c).star()]);
        match which {
            // [c⁺ ← {a,c}] ← [t (C⁺ ← {A,C}) t]
            1 => {
                let host = b.ins(&b.re(&cplus), &b.re(&Regex::alt([lit_s(&a), lit_s(&c)])));
                let inner = b.ins(
                    &b.re(&cciplus),
                    &b.re(&Regex::alt([lit_s(&ai), lit_s(&ci)])),
                );
                let t = b.re(&lit_s("t"));
                let block = b.cat(&b.cat(&t, &inner), &t);
                b.ins(&host, &block)
            }
            // (c⁺ ← t C² C* t) ← d
            2 => {
                let block = b.re(&Regex::cat([
                    lit_s("t"),
                    lit_s(&ci),
                    lit_s(&ci),
                    lit_s(&ci).star(),
                    lit_s("t"),
                ]));
                let host = b.ins(&b.re(&cplus), &block);
                b.ins(&host, &b.re(&lit_s(&d)))
            }
            // (c² c* ← t C⁺ t) ← D
            3 => {
                let block = b.re(&Regex::cat([lit_s("t"), cciplus, lit_s("t")]));
                let host = b.ins(&b.re(&c2cstar), &block);
                b.ins(&host, &b.re(&lit_s(&di)))
            }
            // (c² c* ← D) ← {1, a}
            4 => {
                let host = b.ins(&b.re(&c2cstar), &b.re(&lit_s(&di)));
                b.ins(&host, &b.re(&lit_s(&a).optional()))
            }
            // ((c² c* ← D) ← D) ← {a, c}
            5 => {
                let host = b.ins(&b.re(&c2cstar), &b.re(&lit_s(&di)));
                let host = b.ins(&host, &b.re(&lit_s(&di)));
                b.ins(&host, &b.re(&Regex::alt([lit_s(&a), lit_s(&c)])))
            }
            _ => unreachable!(),
        }
    }

    pub fn conjgeo(b: &Builder) -> Dfa {
        let mut parts = Vec::new();
        for pos in [true, false] {
            let c = sgn("c", pos);
            let d = sgn("d", pos);
            let a_opt = b.re(&lit_s(&sgn("a", pos)).optional());
            // classes with both exponents of one sign
            parts.push(b.ins(&b.re(&pair_star(&c, &d)), &a_opt));
            // classes over t
            let t_host = b.re(&Regex::cat([
                pair_star(&c, &d),
                lit_s("t"),
                pair_star(&c, &d),
            ]));
            parts.push(b.ins(&t_host, &a_opt));
            for which in 1..=5 {
                parts.push(piece(b, which, pos));
            }
        }
        parts.push(b.words(GEOCL_X_PATCH));
        b.union(&parts)
    }

    pub fn mincl(b: &Builder) -> Dfa {
        let mut parts = vec![b.words(MINCL_X_PATCH)];
        for pos in [true, false] {
            let a = sgn("a", pos);
            let c = sgn("c", pos);
            let d = sgn("d", pos);
            let ci = sgn("c", !pos);
            let ai = sgn("a", !pos);
            let di = sgn("d", !pos);
            // {1,a} c* d*
            parts.push(b.re(&Regex::cat([
                lit_s(&a).optional(),
                lit_s(&c).star(),
                lit_s(&d).star(),
            ])));
            // {c², ac} c* t {C², AC} C* t
            let head = Regex::alt([
                Regex::cat([lit_s(&c), lit_s(&c)]),
                Regex::cat([lit_s(&a), lit_s(&c)]),
            ]);
            let head_inv = Regex::alt([
                Regex::cat([lit_s(&ci), lit_s(&ci)]),
                Regex::cat([lit_s(&ai), lit_s(&ci)]),
            ]);
            parts.push(b.re(&Regex::cat([
                head.clone(),
                lit_s(&c).star(),
                lit_s("t"),
                head_inv.clone(),
                lit_s(&ci).star(),
                lit_s("t"),
            ])));
            // {a,1} c² c* D  and  {a,c} c² c* D²
            parts.push(b.re(&Regex::cat([
                lit_s(&a).optional(),
                lit_s(&c),
                lit_s(&c),
                lit_s(&c).star(),
                lit_s(&di),
            ])));
            parts.push(b.re(&Regex::cat([
                Regex::alt([lit_s(&a), lit_s(&c)]),
                lit_s(&c),
                lit_s(&c),
                lit_s(&c).star(),
                lit_s(&di),
                lit_s(&di),
            ])));
            // {1,a} c* {1,d} t c*  and  t a c*
            parts.push(b.re(&Regex::cat([
                lit_s(&a).optional(),
                lit_s(&c).star(),
                lit_s(&d).optional(),
                lit_s("t"),
                lit_s(&c).star(),
            ])));
            parts.push(b.re(&Regex::cat([lit_s("t"), lit_s(&a), lit_s(&c).star()])));
        }
        b.union(&parts)
    }

    pub fn conjsl(b: &Builder) -> Dfa {
        let mut parts = vec![b.words(SPHCL_X_PATCH)];
        for pos in [true, false] {
            let a = sgn("a", pos);
            let c = sgn("c", pos);
            let d = sgn("d", pos);
            let ci = sgn("c", !pos);
            let ai = sgn("a", !pos);
            let di = sgn("d", !pos);
            parts.push(b.re(&Regex::cat([
                lit_s(&a).optional(),
                lit_s(&c).star(),
                lit_s(&d).star(),
            ])));
            parts.push(b.re(&Regex::cat([
                lit_s(&a).optional(),
                lit_s(&c),
                lit_s(&c),
                lit_s(&c).star(),
                lit_s(&di),
            ])));
            parts.push(b.re(&Regex::cat([
                Regex::alt([lit_s(&a), lit_s(&c)]),
                lit_s(&c),
                lit_s(&c),
                lit_s(&c).star(),
                lit_s(&di),
                lit_s(&di),
            ])));
            parts.push(b.re(&Regex::cat([
                lit_s(&a).optional(),
                lit_s(&c).star(),
                lit_s("t"),
            ])));
            // only the positive-letter half survives the shortlex minimum
            if pos {
                let head = Regex::alt([
                    Regex::cat([lit_s(&c), lit_s(&c)]),
                    Regex::cat([lit_s(&a), lit_s(&c)]),
                ]);
                let head_inv = Regex::alt([
                    Regex::cat([lit_s(&ci), lit_s(&ci)]),
                    Regex::cat([lit_s(&ai), lit_s(&ci)]),
                ]);
                parts.push(b.re(&Regex::cat([
                    head,
                    lit_s(&c).star(),
                    lit_s("t"),
                    head_inv,
                    lit_s(&ci).star(),
                    lit_s("t"),
                ])));
            }
        }
        b.union(&parts)
    }
}

/// Conjugacy shortlex normal forms of the infinite dihedral group:
/// {ε, s} ∪ x x* ∪ {xs}.
fn conjsl_inf_dihedral(b: &Builder) -> Dfa {
    b.re(&Regex::alt([
        Regex::Epsilon,
        lit_s("s"),
        Regex::cat([lit_s("x"), lit_s("x").star()]),
        Regex::cat([lit_s("x"), lit_s("s")]),
    ]))
}

/// Stable tags for every buildable expression.
pub fn expression_tags() -> Vec<&'static str> {
    vec![
        "conjgeo_zd2_Z",
        "mincl_zd2_Z",
        "geo_zd8_Zp",
        "sl_zd8_Zp",
        "conjgeo_zd8_Zp",
        "mincl_zd8_Zp",
        "conjgeo_zd2_X",
        "mincl_zd2_X",
        "conjsl_zd2_X",
        "L1_zd2_X",
        "L2_zd2_X",
        "L3_zd2_X",
        "L4_zd2_X",
        "L5_zd2_X",
        "conjsl_inf_dihedral",
    ]
}

/// Builds the named expression as a minimal automaton.
pub fn expression_dfa(tag: &str) -> Result<Dfa, GroupError> {
    let mut cache: HashMap<&str, GroupSpec> = HashMap::new();
    cache.insert("zd2_Z", GroupSpec::Zd2Z);
    cache.insert("zd8_Zp", GroupSpec::Zd8Zp);
    cache.insert("zd2_X", GroupSpec::Zd2X);
    let alphabet_of = |spec: GroupSpec| make_group(spec).alphabet().clone();
    let d = match tag {
        "conjgeo_zd2_Z" => zd2_z::conjgeo(&Builder::new(alphabet_of(GroupSpec::Zd2Z))),
        "mincl_zd2_Z" => zd2_z::mincl(&Builder::new(alphabet_of(GroupSpec::Zd2Z))),
        "geo_zd8_Zp" => zd8_zp::geo(&Builder::new(alphabet_of(GroupSpec::Zd8Zp))),
        "sl_zd8_Zp" => zd8_zp::sl(&Builder::new(alphabet_of(GroupSpec::Zd8Zp))),
        "conjgeo_zd8_Zp" => zd8_zp::conjgeo(&Builder::new(alphabet_of(GroupSpec::Zd8Zp))),
        "mincl_zd8_Zp" => zd8_zp::mincl(&Builder::new(alphabet_of(GroupSpec::Zd8Zp))),
        "conjgeo_zd2_X" => zd2_x::conjgeo(&Builder::new(alphabet_of(GroupSpec::Zd2X))),
        "mincl_zd2_X" => zd2_x::mincl(&Builder::new(alphabet_of(GroupSpec::Zd2X))),
        "conjsl_zd2_X" => zd2_x::conjsl(&Builder::new(alphabet_of(GroupSpec::Zd2X))),
        "L1_zd2_X" | "L2_zd2_X" | "L3_zd2_X" | "L4_zd2_X" | "L5_zd2_X" => {
            let which = tag.as_bytes()[1] - b'0';
            zd2_x::piece(
                &Builder::new(alphabet_of(GroupSpec::Zd2X)),
                which as usize,
                true,
            )
        }
        "conjsl_inf_dihedral" => {
            conjsl_inf_dihedral(&Builder::new(alphabet_of(GroupSpec::InfDihedral)))
        }
        _ => return Err(GroupError::UnknownExpression(tag.to_string())),
    };
    Ok(minimize(&d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langkit::{compare_sample_to_dfa, language_sample, GroupOracle, LanguageKind};

    #[test]
    fn geocl_zd2_z_membership_spot_checks() {
        let d = expression_dfa("conjgeo_zd2_Z").unwrap();
        let a = make_group(GroupSpec::Zd2Z).alphabet().clone();
        assert!(d.accepts(&a.parse_word("atb").unwrap()));
        assert!(!d.accepts(&a.parse_word("aAt").unwrap()));
    }

    #[test]
    fn mincl_zd2_z_membership_spot_checks() {
        let d = expression_dfa("mincl_zd2_Z").unwrap();
        let a = make_group(GroupSpec::Zd2Z).alphabet().clone();
        assert!(d.accepts(&a.parse_word("aabt").unwrap()));
        assert!(!d.accepts(&a.parse_word("bta").unwrap()));
    }

    #[test]
    fn l4_inserts_exactly_one_big_d_and_an_optional_a() {
        let d = expression_dfa("L4_zd2_X").unwrap();
        let a = make_group(GroupSpec::Zd2X).alphabet().clone();
        for good in ["ccD", "accD", "cDc", "Dcca"] {
            assert!(d.accepts(&a.parse_word(good).unwrap()), "{good}");
        }
        for bad in ["cD", "ccDD", "cDca", "cc"] {
            assert!(!d.accepts(&a.parse_word(bad).unwrap()), "{bad}");
        }
    }

    #[test]
    fn finite_patch_matches_oracle() {
        // Recompute, from the oracle, the conjugacy geodesics / minimal
        // normal forms / class normal forms contributed by the four mixed
        // classes with both exponents at most 2, and compare with the
        // frozen lists.
        let oracle = make_group(GroupSpec::Zd2X);
        let a = oracle.alphabet().clone();
        let targets: Vec<crate::langkit::Element> = [
            (1i64, -1i64),
            (-1, 1),
            (1, -2),
            (-2, 1),
            (2, -1),
            (-1, 2),
            (2, -2),
            (-2, 2),
        ]
        .iter()
        .map(|&(i, j)| crate::langkit::Element::ints(vec![i, j], 0))
        .collect();
        let keys: std::collections::HashSet<_> = targets
            .iter()
            .map(|g| oracle.conj_key(g).unwrap())
            .collect();
        let sample = language_sample(oracle.as_ref(), LanguageKind::ConjGeo, 4).unwrap();
        let mut geocl_words = Vec::new();
        for group in &sample.groups {
            for w in group {
                let g = oracle.evaluate(w);
                if oracle
                    .conj_key(&g)
                    .map(|k| keys.contains(&k))
                    .unwrap_or(false)
                {
                    geocl_words.push(a.format_word(w));
                }
            }
        }
        let mut expected: Vec<String> = GEOCL_X_PATCH.iter().map(|s| s.to_string()).collect();
        expected.sort();
        geocl_words.sort();
        assert_eq!(geocl_words, expected);

        let mincl = language_sample(oracle.as_ref(), LanguageKind::MinCl, 4).unwrap();
        let mut mincl_words: Vec<String> = mincl
            .groups
            .iter()
            .flatten()
            .filter(|w| keys.contains(&oracle.conj_key(&oracle.evaluate(w)).unwrap()))
            .map(|w| a.format_word(w))
            .collect();
        let mut expected: Vec<String> = MINCL_X_PATCH.iter().map(|s| s.to_string()).collect();
        mincl_words.sort();
        expected.sort();
        assert_eq!(mincl_words, expected);

        let conjsl = language_sample(oracle.as_ref(), LanguageKind::ConjSl, 4).unwrap();
        let mut conjsl_words: Vec<String> = conjsl
            .groups
            .iter()
            .flatten()
            .filter(|w| keys.contains(&oracle.conj_key(&oracle.evaluate(w)).unwrap()))
            .map(|w| a.format_word(w))
            .collect();
        let mut expected: Vec<String> = SPHCL_X_PATCH.iter().map(|s| s.to_string()).collect();
        conjsl_words.sort();
        expected.sort();
        assert_eq!(conjsl_words, expected);
    }

    #[test]
    fn expressions_match_samples_at_small_bound() {
        // The full identity check at n = 10 lives in the acceptance suite;
        // this is the fast regression version at n = 6.
        let checks: &[(GroupSpec, LanguageKind, &str)] = &[
            (GroupSpec::Zd2Z, LanguageKind::ConjGeo, "conjgeo_zd2_Z"),
            (GroupSpec::Zd2Z, LanguageKind::MinCl, "mincl_zd2_Z"),
            (GroupSpec::Zd8Zp, LanguageKind::Geo, "geo_zd8_Zp"),
            (GroupSpec::Zd8Zp, LanguageKind::Sl, "sl_zd8_Zp"),
            (GroupSpec::Zd8Zp, LanguageKind::ConjGeo, "conjgeo_zd8_Zp"),
            (GroupSpec::Zd8Zp, LanguageKind::MinCl, "mincl_zd8_Zp"),
            (GroupSpec::Zd2X, LanguageKind::ConjGeo, "conjgeo_zd2_X"),
            (GroupSpec::Zd2X, LanguageKind::MinCl, "mincl_zd2_X"),
            (GroupSpec::Zd2X, LanguageKind::ConjSl, "conjsl_zd2_X"),
            (GroupSpec::InfDihedral, LanguageKind::ConjSl, "conjsl_inf_dihedral"),
        ];
        for &(spec, kind, tag) in checks {
            let oracle = make_group(spec);
            let sample = language_sample(oracle.as_ref(), kind, 6).unwrap();
            let dfa = expression_dfa(tag).unwrap();
            let report = compare_sample_to_dfa(&sample, &dfa).unwrap();
            assert!(report.is_equal(), "{tag}: {report:?}");
        }
    }
}
