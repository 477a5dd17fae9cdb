//! Exact strict growth series of regular languages.
//!
//! Counting uses arbitrary-precision integers throughout; the closed form is
//! obtained by fraction-free (Bareiss) elimination over `ℤ[z]` on the
//! transfer matrix of the live part of the automaton, followed by exact
//! polynomial gcd reduction.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;
use crate::fsa::Dfa;

/// A polynomial with exact integer coefficients, lowest degree first.
/// No trailing zero coefficients except for the zero polynomial itself,
/// which is the empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial(Vec<BigInt>);

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial(Vec::new())
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial(vec![BigInt::one()])
    }

    pub fn from_coeffs<I: Into<BigInt> + Clone>(coeffs: &[I]) -> IntPolynomial {
        let mut v: Vec<BigInt> = coeffs.iter().map(|c| c.clone().into()).collect();
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        IntPolynomial(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        IntPolynomial::from_coeffs(&v)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(&v)
    }

    /// Exact division; panics if the division leaves a remainder (used only
    /// where divisibility is guaranteed, e.g. Bareiss pivot steps).
    fn div_exact(&self, other: &IntPolynomial) -> IntPolynomial {
        let (q, r) = self.pseudo_div_checked(other);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Euclidean division, panicking unless every leading-coefficient
    /// division is exact over ℤ.
    fn pseudo_div_checked(&self, other: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.0.len() < other.0.len() {
            return (IntPolynomial::zero(), self.clone());
        }
        let mut rem = self.0.clone();
        let lead = other.0.last().unwrap().clone();
        let qlen = self.0.len() - other.0.len() + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + other.0.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = (top.clone() / &lead, top % &lead);
            assert!(r.is_zero(), "inexact leading coefficient division");
            q[i] = c.clone();
            for (j, b) in other.0.iter().enumerate() {
                rem[i + j] -= &c * b;
            }
        }
        (IntPolynomial::from_coeffs(&q), IntPolynomial::from_coeffs(&rem))
    }

    fn content(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c))
    }

    fn scale_down(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial(self.0.iter().map(|x| x / c).collect())
    }

    /// Greatest common divisor via the primitive pseudo-remainder sequence,
    /// normalized to a positive lowest nonzero coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let cont = num_integer::Integer::gcd(&self.content(), &other.content());
        let mut a = self.scale_down(&self.content());
        let mut b = other.scale_down(&other.content());
        if a.0.len() < b.0.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
            let e = (a.0.len() - b.0.len() + 1) as u32;
            let lead = b.0.last().unwrap().clone();
            let scaled = a.mul(&IntPolynomial::from_coeffs(&[lead.pow(e)]));
            let (_, r) = scaled.pseudo_div_checked(&b);
            a = b;
            b = if r.is_zero() {
                IntPolynomial::zero()
            } else {
                r.scale_down(&r.content())
            };
        }
        a.mul(&IntPolynomial::from_coeffs(&[cont])).normalized_sign()
    }

    /// Multiplied by -1 if needed so the lowest nonzero coefficient is positive.
    fn normalized_sign(&self) -> IntPolynomial {
        match self.0.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A quotient of integer polynomials in lowest terms, with nonzero constant
/// term in the denominator and positive lowest denominator coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<RationalFunction, SeriesError> {
        if den.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        if den.coeff(0).is_zero() {
            return Err(SeriesError::PoleAtZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPolynomial, den: IntPolynomial) -> RationalFunction {
        if num.is_zero() {
            return RationalFunction {
                num: IntPolynomial::zero(),
                den: IntPolynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        let c = num_integer::Integer::gcd(&num.content(), &den.content());
        if !c.is_one() {
            num = num.scale_down(&c);
            den = den.scale_down(&c);
        }
        if den
            .0
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(Signed::is_negative)
        {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> RationalFunction {
        RationalFunction {
            num: IntPolynomial::zero(),
            den: IntPolynomial::one(),
        }
    }

    pub fn from_polynomial(p: IntPolynomial) -> RationalFunction {
        RationalFunction {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        Self::reduce(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        Self::reduce(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        Self::reduce(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RationalFunction) -> RationalFunction {
        assert!(!other.num.is_zero(), "division by zero rational function");
        Self::reduce(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Exact Taylor coefficients `0..=n` at `z = 0`.  Panics when the
    /// denominator vanishes at 0 (impossible for reduced values built via
    /// [`RationalFunction::new`] or [`rational_series`]).
    pub fn expand(&self, n: usize) -> Vec<BigRational> {
        let d0 = BigRational::from(self.den.coeff(0));
        assert!(!d0.is_zero(), "pole at zero");
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = BigRational::from(self.num.coeff(i));
            for j in 1..=i.min(self.den.degree()) {
                acc -= BigRational::from(self.den.coeff(j)) * &out[i - j];
            }
            out.push(acc / &d0);
        }
        out
    }

    /// The `num: …; den: …` text form, lowest terms.
    pub fn display_text(&self) -> String {
        format!("num: {} ; den: {}", self.num, self.den)
    }
}

/// Equality as rational functions (cross-multiplication identity).
pub fn eq_rational(x: &RationalFunction, y: &RationalFunction) -> bool {
    x.num.mul(&y.den) == y.num.mul(&x.den)
}

/// `|L(d) ∩ Σ^i|` for `0 ≤ i ≤ n`, by exact path counting over the
/// transition matrix (no word enumeration).
pub fn count_by_length(d: &Dfa, n: usize) -> Vec<BigUint> {
    let k = d.alphabet.len();
    let mut vec = vec![BigUint::zero(); d.states];
    vec[d.start] = BigUint::one();
    let mut out = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        let total = (0..d.states)
            .filter(|&s| d.accept[s])
            .fold(BigUint::zero(), |acc, s| acc + &vec[s]);
        out.push(total);
        let mut next = vec![BigUint::zero(); d.states];
        for s in 0..d.states {
            if vec[s].is_zero() {
                continue;
            }
            for l in 0..k {
                let t = d.delta[s * k + l];
                next[t] += &vec[s];
            }
        }
        vec = next;
    }
    out
}

/// The strict growth series of `L(d)` as a rational function in lowest
/// terms.  Solves `(I - zM) x = accept` by fraction-free elimination over
/// `ℤ[z]`, where `M` is the transition count matrix restricted to live
/// states; the answer is the `start` coordinate of `x`.
pub fn rational_series(d: &Dfa) -> RationalFunction {
    let live = d.live_states();
    if live.is_empty() {
        return RationalFunction::zero();
    }
    let index_of: std::collections::HashMap<usize, usize> =
        live.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let Some(&start) = index_of.get(&d.start) else {
        return RationalFunction::zero();
    };
    let n = live.len();
    let k = d.alphabet.len();
    // aug = [I - zM | accept]
    let mut aug: Vec<Vec<IntPolynomial>> = vec![vec![IntPolynomial::zero(); n + 1]; n];
    for (i, &s) in live.iter().enumerate() {
        aug[i][i] = IntPolynomial::one();
        for l in 0..k {
            if let Some(&j) = index_of.get(&d.delta[s * k + l]) {
                aug[i][j] = aug[i][j].sub(&IntPolynomial::from_coeffs(&[0, 1]));
            }
        }
        if d.accept[s] {
            aug[i][n] = IntPolynomial::one();
        }
    }

    // Bareiss fraction-free forward elimination with row pivoting.
    let mut prev = IntPolynomial::one();
    for col in 0..n {
        if aug[col][col].is_zero() {
            let pivot_row = (col + 1..n)
                .find(|&r| !aug[r][col].is_zero())
                .expect("I - zM is nonsingular over Q(z)");
            aug.swap(col, pivot_row);
            // A row swap flips the determinant sign; negating one row keeps
            // the Bareiss divisibility bookkeeping intact.
            for entry in aug[col].iter_mut() {
                *entry = entry.neg();
            }
        }
        for row in col + 1..n {
            for j in col + 1..=n {
                let t = aug[col][col]
                    .mul(&aug[row][j])
                    .sub(&aug[row][col].mul(&aug[col][j]));
                aug[row][j] = t.div_exact(&prev);
            }
            aug[row][col] = IntPolynomial::zero();
        }
        prev = aug[col][col].clone();
    }

    // Back substitution over the rational function field.
    let mut x: Vec<RationalFunction> = vec![RationalFunction::zero(); n];
    for i in (0..n).rev() {
        let mut acc = RationalFunction::from_polynomial(aug[i][n].clone());
        for j in i + 1..n {
            acc = acc.sub(&RationalFunction::from_polynomial(aug[i][j].clone()).mul(&x[j]));
        }
        x[i] = acc.div(&RationalFunction::from_polynomial(aug[i][i].clone()));
    }
    x.swap_remove(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fsa::{dfa_of_regex, Alphabet, Dfa, Regex};

    fn two_letter() -> Alphabet {
        Alphabet::self_inverse(&["a", "b"]).unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(
            IntPolynomial::from_coeffs(num),
            IntPolynomial::from_coeffs(den),
        )
        .unwrap()
    }

    fn int(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    #[test]
    fn counts_of_sigma_star() {
        let d = Dfa::universal(two_letter());
        let c = count_by_length(&d, 6);
        let expected: Vec<BigUint> = (0..=6u32).map(|i| BigUint::from(2u32).pow(i)).collect();
        assert_eq!(c, expected);
    }

    #[test]
    fn counts_of_astar_bstar_and_empty() {
        let a = two_letter();
        let d = dfa_of_regex(
            &Regex::cat([Regex::lit("a").star(), Regex::lit("b").star()]),
            &a,
        )
        .unwrap();
        // Enumeration oracle: n+1 words of each length n.
        let brute: Vec<usize> = d.enumerate(10).iter().map(|g| g.len()).collect();
        assert_eq!(brute, (1..=11).collect::<Vec<_>>());
        let c = count_by_length(&d, 10);
        for (i, v) in c.iter().enumerate() {
            assert_eq!(*v, BigUint::from(i + 1));
        }
        let empty = Dfa::empty_language(a);
        assert!(count_by_length(&empty, 5).iter().all(Zero::is_zero));
    }

    #[test]
    fn series_of_sigma_star() {
        let d = Dfa::universal(two_letter());
        let s = rational_series(&d);
        assert_eq!(s, rf(&[1], &[1, -2]));
    }

    #[test]
    fn series_of_astar_bstar() {
        let a = two_letter();
        let d = dfa_of_regex(
            &Regex::cat([Regex::lit("a").star(), Regex::lit("b").star()]),
            &a,
        )
        .unwrap();
        let s = rational_series(&d);
        assert_eq!(s, rf(&[1], &[1, -2, 1]));
        let counts = count_by_length(&d, 20);
        let coeffs = s.expand(20);
        for (c, e) in counts.iter().zip(&coeffs) {
            assert_eq!(&BigRational::from(BigInt::from(c.clone())), e);
        }
    }

    #[test]
    fn expand_geometric() {
        let s = rf(&[1], &[1, -2]);
        assert_eq!(s.expand(4), [1, 2, 4, 8, 16].map(int).to_vec());
        assert!(RationalFunction::zero().expand(3).iter().all(Zero::is_zero));
    }

    #[test]
    fn expand_conjugacy_class_series() {
        // (1+z)(1+2z+3z^2-z^3-z^4)/(1-z^2)^2 starts 1,3,7,8,11,12,15,16.
        let num = IntPolynomial::from_coeffs(&[1, 1])
            .mul(&IntPolynomial::from_coeffs(&[1, 2, 3, -1, -1]));
        let den =
            IntPolynomial::from_coeffs(&[1, 0, -1]).mul(&IntPolynomial::from_coeffs(&[1, 0, -1]));
        let s = RationalFunction::new(num, den).unwrap();
        assert_eq!(s.expand(7), [1, 3, 7, 8, 11, 12, 15, 16].map(int).to_vec());
    }

    #[test]
    fn eq_rational_examples() {
        // (1-z^2)/(1-z)^2 = (1+z)/(1-z)
        let x = rf(&[1, 0, -1], &[1, -2, 1]);
        let y = rf(&[1, 1], &[1, -1]);
        assert!(eq_rational(&x, &y));
        assert_eq!(x, y, "reduction is canonical");
        assert!(!eq_rational(&rf(&[1], &[1, -1]), &rf(&[1], &[1, -2])));
    }

    #[test]
    fn series_invariant_under_minimization_and_additivity() {
        let a = two_letter();
        let ab = dfa_of_regex(&Regex::letters(&["a", "b"]).star(), &a).unwrap();
        let s1 = rational_series(&ab);
        let blown = {
            // A non-minimal machine for the same language.
            let n = crate::fsa::compile_regex(&Regex::letters(&["a", "b"]).star(), &a).unwrap();
            crate::fsa::determinize(&n)
        };
        assert!(eq_rational(&s1, &rational_series(&blown)));

        // Disjoint union additivity: a(aa)* and (aa)* partition a*.
        let odd = dfa_of_regex(
            &Regex::cat([Regex::lit("a"), Regex::letters(&["a", "a"]).star()]),
            &a,
        )
        .unwrap();
        let even = dfa_of_regex(&Regex::letters(&["a", "a"]).star(), &a).unwrap();
        let astar = dfa_of_regex(&Regex::lit("a").star(), &a).unwrap();
        let sum = rational_series(&odd).add(&rational_series(&even));
        assert!(eq_rational(&sum, &rational_series(&astar)));
    }

    #[test]
    fn denominator_degree_bounded_by_live_states() {
        let a = two_letter();
        let d = dfa_of_regex(
            &Regex::alt([
                Regex::letters(&["a", "b"]).star(),
                Regex::cat([Regex::lit("b"), Regex::lit("a").plus()]),
            ]),
            &a,
        )
        .unwrap();
        let s = rational_series(&d);
        assert!(s.denominator().degree() <= d.live_states().len());
    }
}
