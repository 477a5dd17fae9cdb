//! Concrete group oracles with exact conjugacy keys, builders for the
//! worked-example regular expressions, and non-regularity witness tables.

mod dihedral_inf;
mod exprs;
mod free;
mod semidirect;
mod witness;

pub use dihedral_inf::InfiniteDihedral;
pub use exprs::{expression_dfa, expression_tags};
pub use free::{FreeAbelian, FreeGroup};
pub use semidirect::{Semidirect, SemidirectKind, D8};
pub use witness::{witness_table, witness_tags, WitnessRow};

use serde::Serialize;

use crate::error::GroupError;
use crate::langkit::GroupOracle;

/// Tags for the shipped oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpec {
    /// ℤ² ⋊ ℤ/2 over {a±, b±, t}, ordered a < A < b < B < t.
    Zd2Z,
    /// ℤ² ⋊ ℤ/2 over {a±, c±, d±, t}, ordered a < c < A < C < d < D < t.
    Zd2X,
    /// ℤ² ⋊ D₈ over {a±, b±, t, u}, ordered a < A < b < B < t < u.
    Zd8Zp,
    /// ℤ² ⋊ D₈ over {a±, c±, d±, t, u}, ordered a < c < A < C < d < D < t < u.
    Zd8Xp,
    /// Free group of the given rank, ordered a < A < b < B < ….
    Free(usize),
    /// Free abelian group of the given rank, same letter order.
    FreeAbelian(usize),
    /// Infinite dihedral group over {x, x⁻¹, s}, ordered x < X < s.
    InfDihedral,
}

impl GroupSpec {
    pub fn parse(tag: &str) -> Result<GroupSpec, GroupError> {
        Ok(match tag {
            "zd2_Z" => GroupSpec::Zd2Z,
            "zd2_X" => GroupSpec::Zd2X,
            "zd8_Zp" => GroupSpec::Zd8Zp,
            "zd8_Xp" => GroupSpec::Zd8Xp,
            "inf_dihedral" => GroupSpec::InfDihedral,
            other => {
                if let Some(r) = other.strip_prefix("free:") {
                    let rank: usize = r
                        .parse()
                        .map_err(|_| GroupError::UnknownTag(tag.to_string()))?;
                    if !(1..=4).contains(&rank) {
                        return Err(GroupError::UnknownTag(tag.to_string()));
                    }
                    GroupSpec::Free(rank)
                } else if let Some(r) = other.strip_prefix("free_abelian:") {
                    let rank: usize = r
                        .parse()
                        .map_err(|_| GroupError::UnknownTag(tag.to_string()))?;
                    if !(1..=4).contains(&rank) {
                        return Err(GroupError::UnknownTag(tag.to_string()));
                    }
                    GroupSpec::FreeAbelian(rank)
                } else {
                    return Err(GroupError::UnknownTag(tag.to_string()));
                }
            }
        })
    }

    pub fn tag(&self) -> String {
        match self {
            GroupSpec::Zd2Z => "zd2_Z".to_string(),
            GroupSpec::Zd2X => "zd2_X".to_string(),
            GroupSpec::Zd8Zp => "zd8_Zp".to_string(),
            GroupSpec::Zd8Xp => "zd8_Xp".to_string(),
            GroupSpec::Free(r) => format!("free:{r}"),
            GroupSpec::FreeAbelian(r) => format!("free_abelian:{r}"),
            GroupSpec::InfDihedral => "inf_dihedral".to_string(),
        }
    }

    /// The seven oracles exercised by the verification suite.
    pub fn all_shipped() -> Vec<GroupSpec> {
        vec![
            GroupSpec::Zd2Z,
            GroupSpec::Zd2X,
            GroupSpec::Zd8Zp,
            GroupSpec::Zd8Xp,
            GroupSpec::Free(2),
            GroupSpec::FreeAbelian(2),
            GroupSpec::InfDihedral,
        ]
    }
}

/// Instantiates the oracle for a spec tag.
pub fn make_group(spec: GroupSpec) -> Box<dyn GroupOracle> {
    match spec {
        GroupSpec::Zd2Z => Box::new(Semidirect::new(SemidirectKind::Zd2OverZ)),
        GroupSpec::Zd2X => Box::new(Semidirect::new(SemidirectKind::Zd2OverX)),
        GroupSpec::Zd8Zp => Box::new(Semidirect::new(SemidirectKind::Zd8OverZp)),
        GroupSpec::Zd8Xp => Box::new(Semidirect::new(SemidirectKind::Zd8OverXp)),
        GroupSpec::Free(r) => Box::new(FreeGroup::new(r)),
        GroupSpec::FreeAbelian(r) => Box::new(FreeAbelian::new(r)),
        GroupSpec::InfDihedral => Box::new(InfiniteDihedral::new()),
    }
}

/// The `group.json` descriptor.
#[derive(Debug, Serialize)]
pub struct GroupDescriptor {
    pub tag: String,
    pub alphabet: Vec<crate::fsa::LetterDescriptor>,
    pub order: Vec<String>,
}

pub fn describe_group(spec: GroupSpec) -> GroupDescriptor {
    let oracle = make_group(spec);
    let alphabet = oracle.alphabet();
    GroupDescriptor {
        tag: spec.tag(),
        alphabet: alphabet.descriptor(),
        order: alphabet.letters().map(|l| alphabet.name(l).to_string()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_roundtrip() {
        for spec in GroupSpec::all_shipped() {
            assert_eq!(GroupSpec::parse(&spec.tag()).unwrap(), spec);
        }
        assert!(GroupSpec::parse("nope").is_err());
        assert!(GroupSpec::parse("free:9").is_err());
    }

    #[test]
    fn alphabet_orders_match_the_fixed_conventions() {
        let names = |spec: GroupSpec| -> Vec<String> {
            let o = make_group(spec);
            let a = o.alphabet();
            a.letters().map(|l| a.name(l).to_string()).collect()
        };
        assert_eq!(names(GroupSpec::Zd2Z), ["a", "A", "b", "B", "t"]);
        assert_eq!(names(GroupSpec::Zd2X), ["a", "c", "A", "C", "d", "D", "t"]);
        assert_eq!(names(GroupSpec::Zd8Zp), ["a", "A", "b", "B", "t", "u"]);
        assert_eq!(
            names(GroupSpec::Zd8Xp),
            ["a", "c", "A", "C", "d", "D", "t", "u"]
        );
        assert_eq!(names(GroupSpec::InfDihedral), ["x", "X", "s"]);
    }
}
