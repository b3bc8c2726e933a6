//! The polynomial bialgebra `ℚ[x]` with `x` primitive.

use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::coalgebra::Coalgebra;
use crate::freemod::{scalar, BasisKey, Element, Scalar, Tensor};
use crate::hopf::Bialgebra;

/// The monomial `xⁿ`, stored as its exponent.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub u32);

impl BasisKey for Monomial {
    fn degree(&self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "x"),
            n => write!(f, "x^{n}"),
        }
    }
}

/// Row `n` of Pascal's triangle.
fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k as usize] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Polynomial;

impl Coalgebra for Polynomial {
    type Key = Monomial;

    fn name(&self) -> &'static str {
        "poly"
    }

    fn unit_key(&self) -> Monomial {
        Monomial(0)
    }

    /// `Δ(xⁿ) = Σ_k C(n,k) xᵏ ⊗ xⁿ⁻ᵏ`
    fn coproduct_basis(&self, key: &Monomial) -> Tensor<Monomial> {
        let n = key.0;
        Tensor::from_terms(
            2,
            binomial_row(n)
                .into_iter()
                .enumerate()
                .map(|(k, c)| (vec![Monomial(k as u32), Monomial(n - k as u32)], BigRational::from_integer(c))),
        )
    }

    fn counit_basis(&self, key: &Monomial) -> Scalar {
        if key.0 == 0 {
            scalar(1)
        } else {
            Scalar::zero()
        }
    }

    fn enumerate_basis(&self, degree_bound: usize) -> Vec<Monomial> {
        (0..=degree_bound as u32).map(Monomial).collect()
    }
}

impl Bialgebra for Polynomial {
    fn product_basis(&self, a: &Monomial, b: &Monomial) -> Element<Monomial> {
        Element::basis(Monomial(a.0 + b.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coproduct_small_cases() {
        let p = Polynomial;
        assert_eq!(p.coproduct_basis(&Monomial(0)), Tensor::pure(vec![Monomial(0), Monomial(0)]));
        assert_eq!(
            p.coproduct_basis(&Monomial(1)),
            Tensor::pure(vec![Monomial(1), Monomial(0)]).add(&Tensor::pure(vec![Monomial(0), Monomial(1)]))
        );
        assert_eq!(p.coproduct_basis(&Monomial(3)).coefficient(&[Monomial(2), Monomial(1)]), scalar(3));
    }

    #[test]
    fn enumeration() {
        assert_eq!(Polynomial.enumerate_basis(3), vec![Monomial(0), Monomial(1), Monomial(2), Monomial(3)]);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial(0).to_string(), "1");
        assert_eq!(Monomial(1).to_string(), "x");
        assert_eq!(Monomial(7).to_string(), "x^7");
    }
}
