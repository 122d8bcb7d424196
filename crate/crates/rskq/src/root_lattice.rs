//! The type-A Cartan datum over integer-indexed simple roots.
//!
//! Simple roots are indexed by arbitrary integers. A [`RootVector`] is an
//! element of the positive cone of the root lattice, stored sparsely; a
//! [`Word`] is a finite sequence of root indices. Words of a fixed weight
//! `beta` form the finite index set attached to `beta`, enumerated by
//! [`words_of_weight`].

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a simple root.
pub type RootIndex = i32;

/// Default height cap for word enumeration.
pub const DEFAULT_WORD_CAP: u32 = 12;

/// The symmetric bilinear form on simple roots: 2 on the diagonal, -1 for
/// adjacent indices, 0 otherwise.
pub fn bilinear_form(i: RootIndex, j: RootIndex) -> i64 {
    if i == j {
        2
    } else if (i - j).abs() == 1 {
        -1
    } else {
        0
    }
}

/// An element of the positive cone of the root lattice: a finite multiset
/// of simple-root indices.
///
/// Canonical form: only strictly positive multiplicities are stored, so
/// structural equality is semantic equality. Values are immutable after
/// construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    mult: BTreeMap<RootIndex, u32>,
}

impl RootVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The simple root `alpha_i`.
    pub fn simple(i: RootIndex) -> Self {
        let mut mult = BTreeMap::new();
        mult.insert(i, 1);
        Self { mult }
    }

    pub fn from_pairs<I: IntoIterator<Item = (RootIndex, u32)>>(pairs: I) -> Self {
        let mut v = Self::zero();
        for (i, c) in pairs {
            if c > 0 {
                *v.mult.entry(i).or_insert(0) += c;
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    /// Total number of simple roots counted with multiplicity.
    pub fn height(&self) -> u32 {
        self.mult.values().sum()
    }

    pub fn multiplicity(&self, i: RootIndex) -> u32 {
        self.mult.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (RootIndex, u32)> + '_ {
        self.mult.iter().map(|(&i, &c)| (i, c))
    }

    /// Smallest index in the support, if nonzero.
    pub fn support_min(&self) -> Option<RootIndex> {
        self.mult.keys().next().copied()
    }

    /// Largest index in the support, if nonzero.
    pub fn support_max(&self) -> Option<RootIndex> {
        self.mult.keys().next_back().copied()
    }

    pub fn plus(&self, other: &RootVector) -> RootVector {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            *out.mult.entry(i).or_insert(0) += c;
        }
        out
    }

    /// Exact subtraction; `None` if the result would leave the positive cone.
    pub fn checked_sub(&self, other: &RootVector) -> Option<RootVector> {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            match out.mult.get_mut(&i) {
                Some(m) if *m > c => *m -= c,
                Some(m) if *m == c => {
                    out.mult.remove(&i);
                }
                _ => return None,
            }
        }
        Some(out)
    }

    /// The partial order on the positive cone: `self <= other` iff the
    /// difference stays in the cone.
    pub fn leq(&self, other: &RootVector) -> bool {
        self.iter().all(|(i, c)| c <= other.multiplicity(i))
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.iter() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c == 1 {
                write!(f, "a{i}")?;
            } else {
                write!(f, "{c}*a{i}")?;
            }
        }
        Ok(())
    }
}

/// Bilinear extension of the form on simple roots to root vectors.
pub fn form_on_vectors(a: &RootVector, b: &RootVector) -> i64 {
    let mut total = 0i64;
    for (i, ci) in a.iter() {
        for (j, cj) in b.iter() {
            total += i64::from(ci) * i64::from(cj) * bilinear_form(i, j);
        }
    }
    total
}

/// A finite sequence of root indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<RootIndex>);

impl Word {
    pub fn new(letters: Vec<RootIndex>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[RootIndex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> RootVector {
        RootVector::from_pairs(self.0.iter().map(|&i| (i, 1)))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// Lazy enumeration of the distinct words of a fixed weight, in
/// lexicographic order. Count equals the multinomial coefficient of the
/// multiplicities.
pub struct Words {
    current: Option<Vec<RootIndex>>,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.take()?;
        let out = Word(cur.clone());
        self.current = next_permutation(cur);
        Some(out)
    }
}

fn next_permutation(mut v: Vec<RootIndex>) -> Option<Vec<RootIndex>> {
    let n = v.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

/// Enumerate the words of weight `beta`, guarded by the default height cap.
pub fn words_of_weight(beta: &RootVector) -> Result<Words> {
    words_of_weight_capped(beta, DEFAULT_WORD_CAP)
}

/// Enumerate the words of weight `beta` with an explicit height cap.
pub fn words_of_weight_capped(beta: &RootVector, cap: u32) -> Result<Words> {
    let height = beta.height();
    if height > cap {
        return Err(Error::CapExceeded { height, cap });
    }
    let mut letters = Vec::with_capacity(height as usize);
    for (i, c) in beta.iter() {
        for _ in 0..c {
            letters.push(i);
        }
    }
    // the zero weight carries exactly the empty word
    Ok(Words {
        current: Some(letters),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_on_simple_roots() {
        assert_eq!(bilinear_form(3, 3), 2);
        assert_eq!(bilinear_form(0, 1), -1);
        assert_eq!(bilinear_form(1, 0), -1);
        assert_eq!(bilinear_form(5, -2), 0);
    }

    #[test]
    fn form_extends_bilinearly() {
        let a1 = RootVector::simple(1);
        let a12 = RootVector::from_pairs([(1, 1), (2, 1)]);
        let a3 = RootVector::simple(3);
        assert_eq!(form_on_vectors(&a1, &a1), 2);
        // hand expansion: 2 + 2 - 1 - 1
        assert_eq!(form_on_vectors(&a12, &a12), 2);
        let a23 = RootVector::from_pairs([(2, 1), (3, 1)]);
        assert_eq!(form_on_vectors(&a23, &a3), -1 + 2);
        // delta(1,2) paired with alpha_3
        assert_eq!(form_on_vectors(&a12, &a3), -1);
    }

    #[test]
    fn form_matches_pairwise_expansion() {
        let grid: Vec<RootVector> = vec![
            RootVector::zero(),
            RootVector::simple(0),
            RootVector::from_pairs([(0, 2), (1, 1)]),
            RootVector::from_pairs([(-1, 1), (0, 1), (2, 3)]),
            RootVector::from_pairs([(1, 1), (2, 2), (3, 1)]),
        ];
        for a in &grid {
            for b in &grid {
                let mut expect = 0i64;
                for (i, ci) in a.iter() {
                    for (j, cj) in b.iter() {
                        expect += i64::from(ci) * i64::from(cj) * bilinear_form(i, j);
                    }
                }
                assert_eq!(form_on_vectors(a, b), expect);
                assert_eq!(form_on_vectors(a, b), form_on_vectors(b, a));
            }
        }
    }

    #[test]
    fn leq_examples() {
        let a1 = RootVector::simple(1);
        let a12 = RootVector::from_pairs([(1, 1), (2, 1)]);
        let two_a1 = RootVector::from_pairs([(1, 2)]);
        assert!(a1.leq(&a12));
        assert!(!two_a1.leq(&a12));
        assert!(RootVector::zero().leq(&a12));
        assert!(RootVector::zero().leq(&RootVector::zero()));
    }

    #[test]
    fn word_enumeration_examples() {
        let a12 = RootVector::from_pairs([(1, 1), (2, 1)]);
        let words: Vec<Word> = words_of_weight(&a12).unwrap().collect();
        assert_eq!(words, vec![Word::new(vec![1, 2]), Word::new(vec![2, 1])]);

        let two_a1 = RootVector::from_pairs([(1, 2)]);
        let words: Vec<Word> = words_of_weight(&two_a1).unwrap().collect();
        assert_eq!(words, vec![Word::new(vec![1, 1])]);

        let a123 = RootVector::from_pairs([(1, 1), (2, 1), (3, 1)]);
        assert_eq!(words_of_weight(&a123).unwrap().count(), 6);
    }

    #[test]
    fn word_count_is_multinomial() {
        fn factorial(n: u64) -> u64 {
            (1..=n).product()
        }
        let cases = vec![
            RootVector::from_pairs([(0, 2), (1, 2), (2, 1)]),
            RootVector::from_pairs([(0, 3), (2, 2)]),
            RootVector::from_pairs([(-1, 1), (0, 1), (1, 1), (2, 1)]),
            RootVector::from_pairs([(5, 7)]),
        ];
        for beta in cases {
            let mut expect = factorial(u64::from(beta.height()));
            for (_, c) in beta.iter() {
                expect /= factorial(u64::from(c));
            }
            let got = words_of_weight(&beta).unwrap().count() as u64;
            assert_eq!(got, expect, "count mismatch for {beta}");
        }
    }

    #[test]
    fn zero_weight_has_the_empty_word() {
        let words: Vec<Word> = words_of_weight(&RootVector::zero()).unwrap().collect();
        assert_eq!(words, vec![Word::empty()]);
    }

    #[test]
    fn word_cap_guards_enumeration() {
        let beta = RootVector::from_pairs([(0, 13)]);
        assert!(matches!(
            words_of_weight(&beta),
            Err(Error::CapExceeded { .. })
        ));
        assert!(words_of_weight_capped(&beta, 13).is_ok());
    }

    #[test]
    fn every_word_has_the_right_weight() {
        let beta = RootVector::from_pairs([(0, 2), (1, 1), (3, 1)]);
        for w in words_of_weight(&beta).unwrap() {
            assert_eq!(w.weight(), beta);
        }
    }
}
