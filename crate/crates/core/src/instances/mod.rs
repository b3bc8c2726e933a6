//! Concrete connected bialgebras, plus a perturbed one for negative tests.

pub mod connes_kreimer;
pub mod polynomial;
pub mod quasi_shuffle;
pub mod shuffle;
pub mod words;

pub use connes_kreimer::{ConnesKreimer, Forest, Tree};
pub use polynomial::{Monomial, Polynomial};
pub use quasi_shuffle::{QuasiShuffle, WeightedWord};
pub use shuffle::{BrokenShuffle, Perturbation, Shuffle, Word};

pub fn polynomial_instance() -> Polynomial {
    Polynomial
}

pub fn shuffle_instance(alphabet_size: u8) -> Shuffle {
    Shuffle::new(alphabet_size)
}

pub fn quasi_shuffle_instance(max_weight: u32) -> QuasiShuffle {
    QuasiShuffle::new(max_weight)
}

pub fn connes_kreimer_instance() -> ConnesKreimer {
    ConnesKreimer::new()
}

/// The shuffle bialgebra on `{a, b}` with the coefficient of `a⊗b` in `Δ(ab)`
/// doubled.
pub fn broken_instance() -> BrokenShuffle {
    BrokenShuffle::new(2, Perturbation::DoubledMiddleTerm)
}
