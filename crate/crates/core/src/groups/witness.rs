//! Membership tables for the word families that witness non-regularity.
//!
//! Each named pattern fixes a group, a two-parameter word family, and a
//! language; the table records exact membership for every parameter pair in
//! range.  The unbounded families are not regular, so these tables — not an
//! automaton — are the shippable observable.

use serde::Serialize;

use crate::error::GroupError;
use crate::fsa::Word;
use crate::groups::{make_group, GroupSpec};
use crate::langkit::{LanguageContext, LanguageKind};

#[derive(Debug, Clone, Serialize)]
pub struct WitnessRow {
    pub m: usize,
    pub n: usize,
    pub word: String,
    pub member: bool,
}

struct Pattern {
    tag: &'static str,
    spec: GroupSpec,
    kind: LanguageKind,
    /// Word for parameters (m, n), as a string over the group's alphabet.
    family: fn(usize, usize) -> String,
    /// Keep a parameter pair given the CLI bound.
    in_range: fn(usize, usize, usize) -> bool,
}

const PATTERNS: &[Pattern] = &[
    // Geodesics of ℤ²⋊ℤ/2 over the doubled generators, family c^m t c^n t:
    // member exactly when m < n.
    Pattern {
        tag: "geo_ctct",
        spec: GroupSpec::Zd2X,
        kind: LanguageKind::Geo,
        family: |m, n| format!("{}t{}t", "c".repeat(m), "c".repeat(n)),
        in_range: |m, n, bound| m + n <= bound,
    },
    // Shortlex normal forms, same family (the two intersections coincide).
    Pattern {
        tag: "sl_ctct",
        spec: GroupSpec::Zd2X,
        kind: LanguageKind::Sl,
        family: |m, n| format!("{}t{}t", "c".repeat(m), "c".repeat(n)),
        in_range: |m, n, bound| m + n <= bound,
    },
    // Class normal forms of ℤ²⋊D₈ over the doubled generators, family
    // c^m t c^n u t u: member exactly when m ≥ n.
    Pattern {
        tag: "conjsl_ctcutu",
        spec: GroupSpec::Zd8Xp,
        kind: LanguageKind::ConjSl,
        family: |m, n| format!("{}t{}utu", "c".repeat(m), "c".repeat(n)),
        in_range: |m, n, bound| m <= bound && n <= bound,
    },
    // Conjugacy geodesics, family c^m t c^n t u: member exactly when m < n.
    Pattern {
        tag: "conjgeo_ctctu",
        spec: GroupSpec::Zd8Xp,
        kind: LanguageKind::ConjGeo,
        family: |m, n| format!("{}t{}tu", "c".repeat(m), "c".repeat(n)),
        in_range: |m, n, bound| m <= bound && n <= bound,
    },
    Pattern {
        tag: "mincl_ctctu",
        spec: GroupSpec::Zd8Xp,
        kind: LanguageKind::MinCl,
        family: |m, n| format!("{}t{}tu", "c".repeat(m), "c".repeat(n)),
        in_range: |m, n, bound| m <= bound && n <= bound,
    },
    // Class normal forms of ℤ²⋊ℤ/2 over {a±, b±, t}, family a^m b^n.  The
    // two-parameter table decides the diagonal as well as the m > n wedge.
    Pattern {
        tag: "conjsl_ab",
        spec: GroupSpec::Zd2Z,
        kind: LanguageKind::ConjSl,
        family: |m, n| format!("{}{}", "a".repeat(m), "b".repeat(n)),
        in_range: |m, n, bound| m <= bound && n <= bound,
    },
];

pub fn witness_tags() -> Vec<&'static str> {
    PATTERNS.iter().map(|p| p.tag).collect()
}

/// Membership table for a named pattern, parameters bounded by `bound`.
pub fn witness_table(tag: &str, bound: usize) -> Result<Vec<WitnessRow>, GroupError> {
    let pattern = PATTERNS
        .iter()
        .find(|p| p.tag == tag)
        .ok_or_else(|| GroupError::UnknownPattern(tag.to_string()))?;
    let oracle = make_group(pattern.spec);
    let alphabet = oracle.alphabet().clone();
    let mut rows_spec: Vec<(usize, usize, Word)> = Vec::new();
    let mut max_len = 0;
    for m in 0..=bound {
        for n in 0..=bound {
            if (pattern.in_range)(m, n, bound) {
                let w = alphabet
                    .parse_word(&(pattern.family)(m, n))
                    .expect("pattern words parse");
                max_len = max_len.max(w.len());
                rows_spec.push((m, n, w));
            }
        }
    }
    let ctx = LanguageContext::build(oracle.as_ref(), max_len, pattern.kind.needs_conjugacy(), None)?;
    let rows = rows_spec
        .into_iter()
        .map(|(m, n, w)| WitnessRow {
            m,
            n,
            member: ctx.member(pattern.kind, &w),
            word: alphabet.format_word(&w),
        })
        .collect();
    Ok(rows)
}

/// TSV rendering `m<TAB>n<TAB>member`.
pub fn witness_tsv(rows: &[WitnessRow]) -> String {
    let mut out = String::from("m\tn\tword\tmember\n");
    for r in rows {
        out.push_str(&format!("{}\t{}\t{}\t{}\n", r.m, r.n, r.word, r.member));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geo_ctct_is_the_strict_lower_wedge() {
        for row in witness_table("geo_ctct", 5).unwrap() {
            assert_eq!(row.member, row.m < row.n, "{row:?}");
        }
    }

    #[test]
    fn conjsl_ctcutu_is_the_upper_wedge() {
        for row in witness_table("conjsl_ctcutu", 3).unwrap() {
            assert_eq!(row.member, row.m >= row.n, "{row:?}");
        }
    }

    #[test]
    fn conjsl_ab_table_resolves_the_diagonal() {
        // Over {a±, b±, t}: classes {a^i b^j, a^j b^i}; among nonnegative
        // powers the class normal form is a^max b^min, so membership for
        // a^m b^n is m ≥ n.
        for row in witness_table("conjsl_ab", 4).unwrap() {
            assert_eq!(row.member, row.m >= row.n, "{row:?}");
        }
    }
}
