//! The shared engine behind the four virtually abelian example oracles:
//! `ℤ² ⋊ F` for `F ∈ {ℤ/2, D₈}`, over either the swap-generator alphabet
//! (a, b, t, …) or the doubled alphabet (a, c = a², d = ab, t, …).
//!
//! Elements are stored as `(i, j, h)` with the lattice part in the (a, b)
//! coordinates (b = tat eliminated) and `h` in the finite group.  Each
//! generator either adds a lattice vector — swapped when the finite part acts
//! by the swap — or right-multiplies the finite part.

use crate::fsa::{Alphabet, LetterId};
use crate::langkit::{Element, GroupOracle};

/// Elements of D₈ encoded as `(k, ε) ↦ 2k + ε`, where the element is
/// `r^k s^ε` with `r = tu` (order 4) and `s = t`.  The subgroup ℤ/2 used by
/// the smaller examples is `{1, t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct D8(pub u8);

pub const D8_ONE: D8 = D8(0);
pub const D8_T: D8 = D8(1); // (k=0, ε=1)
pub const D8_U: D8 = D8(7); // (k=3, ε=1)

impl D8 {
    fn k(self) -> i8 {
        (self.0 >> 1) as i8
    }

    fn eps(self) -> u8 {
        self.0 & 1
    }

    fn pack(k: i8, eps: u8) -> D8 {
        D8((((k.rem_euclid(4)) as u8) << 1) | (eps & 1))
    }

    pub fn mul(self, other: D8) -> D8 {
        let k = if self.eps() == 0 {
            self.k() + other.k()
        } else {
            self.k() - other.k()
        };
        D8::pack(k, self.eps() ^ other.eps())
    }

    pub fn inverse(self) -> D8 {
        if self.eps() == 0 {
            D8::pack(-self.k(), 0)
        } else {
            self
        }
    }

    /// Whether this element acts on ℤ² by swapping the two coordinates
    /// (t swaps, u fixes; the action factors through t-parity).
    pub fn swaps(self) -> bool {
        (self.k() as u8 + self.eps()) % 2 == 1
    }

    /// Canonical word over {t, u}.
    pub fn name(self) -> &'static str {
        match self.0 {
            0 => "1",
            1 => "t",
            2 => "tu",
            3 => "tut",
            4 => "tutu",
            5 => "utu",
            6 => "ut",
            7 => "u",
            _ => unreachable!(),
        }
    }
}

/// What a single generator does.
#[derive(Debug, Clone, Copy)]
enum Action {
    /// Adds `(p, q)` to the lattice part, swapped when the finite part swaps.
    Lattice(i64, i64),
    /// Right-multiplies the finite part.
    Finite(D8),
}

/// Which of the four concrete oracles this is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemidirectKind {
    /// ℤ² ⋊ ℤ/2 over {a±, b±, t}.
    Zd2OverZ,
    /// ℤ² ⋊ ℤ/2 over {a±, c±, d±, t} with c = a², d = ab.
    Zd2OverX,
    /// ℤ² ⋊ D₈ over {a±, b±, t, u}.
    Zd8OverZp,
    /// ℤ² ⋊ D₈ over {a±, c±, d±, t, u}.
    Zd8OverXp,
}

pub struct Semidirect {
    kind: SemidirectKind,
    alphabet: Alphabet,
    actions: Vec<Action>,
}

impl Semidirect {
    pub fn new(kind: SemidirectKind) -> Semidirect {
        use SemidirectKind::*;
        let (alphabet, actions): (Alphabet, Vec<Action>) = match kind {
            Zd2OverZ | Zd8OverZp => {
                let mut pairs = vec![("a", "A"), ("A", "a"), ("b", "B"), ("B", "b"), ("t", "t")];
                let mut acts = vec![
                    Action::Lattice(1, 0),
                    Action::Lattice(-1, 0),
                    Action::Lattice(0, 1),
                    Action::Lattice(0, -1),
                    Action::Finite(D8_T),
                ];
                if kind == Zd8OverZp {
                    pairs.push(("u", "u"));
                    acts.push(Action::Finite(D8_U));
                }
                (Alphabet::new(&pairs).unwrap(), acts)
            }
            Zd2OverX | Zd8OverXp => {
                let mut pairs = vec![
                    ("a", "A"),
                    ("c", "C"),
                    ("A", "a"),
                    ("C", "c"),
                    ("d", "D"),
                    ("D", "d"),
                    ("t", "t"),
                ];
                let mut acts = vec![
                    Action::Lattice(1, 0),
                    Action::Lattice(2, 0),
                    Action::Lattice(-1, 0),
                    Action::Lattice(-2, 0),
                    Action::Lattice(1, 1),
                    Action::Lattice(-1, -1),
                    Action::Finite(D8_T),
                ];
                if kind == Zd8OverXp {
                    pairs.push(("u", "u"));
                    acts.push(Action::Finite(D8_U));
                }
                (Alphabet::new(&pairs).unwrap(), acts)
            }
        };
        Semidirect {
            kind,
            alphabet,
            actions,
        }
    }

    pub fn kind(&self) -> SemidirectKind {
        self.kind
    }

    fn unpack(g: &Element) -> (i64, i64, D8) {
        match g {
            Element::Ints { coords, finite } => (coords[0], coords[1], D8(*finite)),
            _ => panic!("foreign element"),
        }
    }

    fn pack(i: i64, j: i64, h: D8) -> Element {
        Element::ints(vec![i, j], h.0)
    }

    pub fn element(&self, i: i64, j: i64, h: D8) -> Element {
        Self::pack(i, j, h)
    }

    /// Conjugacy-class key.  The class structure, in (i, j, h) coordinates:
    /// lattice elements pair `(i,j) ~ (j,i)`; classes over t and utu (and
    /// over tu and ut) are the full diagonal shift orbit, invariant `i + j`;
    /// u pairs with tut under a coordinate swap; tutu is central in D₈ and
    /// pairs `(i,j) ~ (j,i)`.
    fn key(&self, g: &Element) -> Element {
        let (i, j, h) = Self::unpack(g);
        let sorted = if (i, j) <= (j, i) { vec![i, j] } else { vec![j, i] };
        match h.name() {
            "1" => Element::ints(sorted, 0),
            "t" | "utu" => Element::ints(vec![i + j], 1),
            "u" => Element::ints(vec![i, j], 2),
            "tut" => Element::ints(vec![j, i], 2),
            "tutu" => Element::ints(sorted, 3),
            "tu" | "ut" => Element::ints(vec![i + j], 4),
            _ => unreachable!(),
        }
    }
}

impl GroupOracle for Semidirect {
    fn name(&self) -> String {
        match self.kind {
            SemidirectKind::Zd2OverZ => "zd2_Z",
            SemidirectKind::Zd2OverX => "zd2_X",
            SemidirectKind::Zd8OverZp => "zd8_Zp",
            SemidirectKind::Zd8OverXp => "zd8_Xp",
        }
        .to_string()
    }

    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> Element {
        Self::pack(0, 0, D8_ONE)
    }

    fn right_multiply(&self, g: &Element, letter: LetterId) -> Element {
        let (i, j, h) = Self::unpack(g);
        match self.actions[letter as usize] {
            Action::Lattice(p, q) => {
                let (p, q) = if h.swaps() { (q, p) } else { (p, q) };
                Self::pack(i + p, j + q, h)
            }
            Action::Finite(f) => Self::pack(i, j, h.mul(f)),
        }
    }

    fn invert(&self, g: &Element) -> Element {
        let (i, j, h) = Self::unpack(g);
        let (i, j) = if h.swaps() { (-j, -i) } else { (-i, -j) };
        Self::pack(i, j, h.inverse())
    }

    fn conj_key(&self, g: &Element) -> Option<Element> {
        Some(self.key(g))
    }
}
