//! The shuffle algebra on words with the deconcatenation coproduct, and a
//! deliberately perturbed copy of it used as a negative control.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, Zero};

use crate::coalgebra::Coalgebra;
use crate::freemod::{scalar, BasisKey, Element, Scalar, Tensor};
use crate::hopf::Bialgebra;
use crate::instances::words;

/// A word over the letters `a..=z`. The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `None` if `s` contains anything but lowercase ASCII letters. The empty
    /// string and `"1"` both give the empty word.
    pub fn parse(s: &str) -> Option<Self> {
        if s == "1" {
            return Some(Word::empty());
        }
        s.bytes().all(|b| b.is_ascii_lowercase()).then(|| Word(s.bytes().collect()))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn reversed(&self) -> Self {
        Word(self.0.iter().rev().copied().collect())
    }
}

/// Shorter words first, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BasisKey for Word {
    fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", String::from_utf8_lossy(&self.0))
        }
    }
}

fn deconcatenation(w: &Word) -> Tensor<Word> {
    Tensor::from_terms(2, words::deconcatenations(&w.0).map(|(p, s)| (vec![Word(p), Word(s)], scalar(1))))
}

fn words_up_to(alphabet_size: u8, degree_bound: usize) -> Vec<Word> {
    let letters: Vec<u8> = (b'a'..b'a' + alphabet_size).collect();
    (0..=degree_bound).flat_map(|n| words::words_of_length(&letters, n)).map(Word).collect()
}

/// Shuffle bialgebra. Any lowercase word is a valid element; `alphabet_size`
/// only limits which words the basis enumeration visits.
#[derive(Clone, Copy, Debug)]
pub struct Shuffle {
    alphabet_size: u8,
}

impl Shuffle {
    /// Panics unless `1 <= alphabet_size <= 26`.
    pub fn new(alphabet_size: u8) -> Self {
        assert!((1..=26).contains(&alphabet_size), "alphabet size must be in 1..=26");
        Shuffle { alphabet_size }
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }
}

impl Coalgebra for Shuffle {
    type Key = Word;

    fn name(&self) -> &'static str {
        "shuffle"
    }

    fn unit_key(&self) -> Word {
        Word::empty()
    }

    fn coproduct_basis(&self, key: &Word) -> Tensor<Word> {
        deconcatenation(key)
    }

    fn counit_basis(&self, key: &Word) -> Scalar {
        if key.0.is_empty() {
            scalar(1)
        } else {
            Scalar::zero()
        }
    }

    fn enumerate_basis(&self, degree_bound: usize) -> Vec<Word> {
        words_up_to(self.alphabet_size, degree_bound)
    }
}

impl Bialgebra for Shuffle {
    fn product_basis(&self, a: &Word, b: &Word) -> Element<Word> {
        Element::from_terms(
            words::shuffle(&a.0, &b.0).into_iter().map(|(w, c)| (Word(w), BigRational::from_integer(BigInt::from(c)))),
        )
    }
}

/// How [`BrokenShuffle`] departs from the shuffle bialgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Perturbation {
    /// The coefficient of `a⊗b` in `Δ(ab)` is 2 instead of 1.
    #[default]
    DoubledMiddleTerm,
    /// `ε(a) = 1`.
    CounitOnLetter,
    /// `Δ(ab)` lacks its `1⊗ab` term.
    MissingLeftUnitTerm,
    /// `Δ(ab)` gains an extra `abc⊗1` term.
    DegreeRaisingTerm,
}

/// The shuffle bialgebra with one structure constant perturbed. Every
/// checker should flag the relevant axiom.
#[derive(Clone, Copy, Debug)]
pub struct BrokenShuffle {
    inner: Shuffle,
    perturbation: Perturbation,
}

impl BrokenShuffle {
    pub fn new(alphabet_size: u8, perturbation: Perturbation) -> Self {
        assert!(alphabet_size >= 2, "the perturbation involves the letters a and b");
        BrokenShuffle { inner: Shuffle::new(alphabet_size), perturbation }
    }

    pub fn perturbation(&self) -> Perturbation {
        self.perturbation
    }
}

fn word(s: &str) -> Word {
    Word(s.bytes().collect())
}

impl Coalgebra for BrokenShuffle {
    type Key = Word;

    fn name(&self) -> &'static str {
        "broken"
    }

    fn unit_key(&self) -> Word {
        Word::empty()
    }

    fn coproduct_basis(&self, key: &Word) -> Tensor<Word> {
        let mut delta = self.inner.coproduct_basis(key);
        if key.0 == b"ab" {
            match self.perturbation {
                Perturbation::DoubledMiddleTerm => delta.add_term(vec![word("a"), word("b")], scalar(1)),
                Perturbation::MissingLeftUnitTerm => delta.add_term(vec![Word::empty(), word("ab")], scalar(-1)),
                Perturbation::DegreeRaisingTerm => delta.add_term(vec![word("abc"), Word::empty()], scalar(1)),
                Perturbation::CounitOnLetter => {}
            }
        }
        delta
    }

    fn counit_basis(&self, key: &Word) -> Scalar {
        if self.perturbation == Perturbation::CounitOnLetter && key.0 == b"a" {
            return scalar(1);
        }
        self.inner.counit_basis(key)
    }

    fn enumerate_basis(&self, degree_bound: usize) -> Vec<Word> {
        self.inner.enumerate_basis(degree_bound)
    }
}

impl Bialgebra for BrokenShuffle {
    fn product_basis(&self, a: &Word, b: &Word) -> Element<Word> {
        self.inner.product_basis(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_length_first() {
        let mut ws = vec![word("b"), word("aa"), Word::empty(), word("a")];
        ws.sort();
        assert_eq!(ws, vec![Word::empty(), word("a"), word("b"), word("aa")]);
    }

    #[test]
    fn enumeration_two_letters() {
        let got: Vec<String> = Shuffle::new(2).enumerate_basis(2).iter().map(ToString::to_string).collect();
        assert_eq!(got, ["1", "a", "b", "aa", "ab", "ba", "bb"]);
    }

    #[test]
    fn products() {
        let s = Shuffle::new(3);
        assert_eq!(s.product_basis(&word("a"), &word("b")).to_string(), "ab + ba");
        assert_eq!(s.product_basis(&word("ab"), &word("c")).to_string(), "abc + acb + cab");
    }

    #[test]
    fn deconcatenation_of_abc() {
        assert_eq!(Shuffle::new(3).coproduct_basis(&word("abc")).to_string(), "1⊗abc + a⊗bc + ab⊗c + abc⊗1");
    }

    #[test]
    fn perturbations_touch_only_ab() {
        let b = BrokenShuffle::new(2, Perturbation::DoubledMiddleTerm);
        assert_eq!(b.coproduct_basis(&word("ab")).coefficient(&[word("a"), word("b")]), scalar(2));
        assert_eq!(b.coproduct_basis(&word("ba")), Shuffle::new(2).coproduct_basis(&word("ba")));
        let m = BrokenShuffle::new(2, Perturbation::MissingLeftUnitTerm);
        assert_eq!(m.coproduct_basis(&word("ab")).len(), 2);
        let c = BrokenShuffle::new(2, Perturbation::CounitOnLetter);
        assert_eq!(c.counit_basis(&word("a")), scalar(1));
    }

    #[test]
    fn parse_words() {
        assert_eq!(Word::parse("abc"), Some(word("abc")));
        assert_eq!(Word::parse("1"), Some(Word::empty()));
        assert_eq!(Word::parse("aB"), None);
    }
}
