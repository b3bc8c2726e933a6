//! Quasi-shuffle algebra on words of positive integer weights, letters merged
//! by adding weights, with deconcatenation. The coalgebra is graded by word
//! length but the product is not: merging shortens words.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, Zero};

use crate::coalgebra::Coalgebra;
use crate::freemod::{scalar, BasisKey, Element, Scalar, Tensor};
use crate::hopf::Bialgebra;
use crate::instances::words;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightedWord(Vec<u32>);

impl WeightedWord {
    pub fn empty() -> Self {
        WeightedWord(Vec::new())
    }

    /// `None` if any weight is zero.
    pub fn new(weights: Vec<u32>) -> Option<Self> {
        weights.iter().all(|&w| w > 0).then_some(WeightedWord(weights))
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }

    pub fn total_weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for WeightedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for WeightedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BasisKey for WeightedWord {
    fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for WeightedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for w in &self.0 {
            write!(f, "({w})")?;
        }
        Ok(())
    }
}

/// Any positive weight is a valid letter; `max_weight` bounds only the
/// basis enumeration.
#[derive(Clone, Copy, Debug)]
pub struct QuasiShuffle {
    max_weight: u32,
}

impl QuasiShuffle {
    /// Panics if `max_weight == 0`.
    pub fn new(max_weight: u32) -> Self {
        assert!(max_weight >= 1, "max weight must be positive");
        QuasiShuffle { max_weight }
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }
}

impl Coalgebra for QuasiShuffle {
    type Key = WeightedWord;

    fn name(&self) -> &'static str {
        "quasishuffle"
    }

    fn unit_key(&self) -> WeightedWord {
        WeightedWord::empty()
    }

    fn coproduct_basis(&self, key: &WeightedWord) -> Tensor<WeightedWord> {
        Tensor::from_terms(
            2,
            words::deconcatenations(&key.0).map(|(p, s)| (vec![WeightedWord(p), WeightedWord(s)], scalar(1))),
        )
    }

    fn counit_basis(&self, key: &WeightedWord) -> Scalar {
        if key.0.is_empty() {
            scalar(1)
        } else {
            Scalar::zero()
        }
    }

    fn enumerate_basis(&self, degree_bound: usize) -> Vec<WeightedWord> {
        let letters: Vec<u32> = (1..=self.max_weight).collect();
        (0..=degree_bound).flat_map(|n| words::words_of_length(&letters, n)).map(WeightedWord).collect()
    }
}

impl Bialgebra for QuasiShuffle {
    fn product_basis(&self, a: &WeightedWord, b: &WeightedWord) -> Element<WeightedWord> {
        Element::from_terms(
            words::quasi_shuffle(&a.0, &b.0, |x, y| x + y)
                .into_iter()
                .map(|(w, c)| (WeightedWord(w), BigRational::from_integer(BigInt::from(c)))),
        )
    }
}
