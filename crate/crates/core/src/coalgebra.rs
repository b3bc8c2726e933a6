//! Coaugmented coalgebras given by basis-level structure maps.
//!
//! An implementor supplies the coproduct, counit, and coaugmentation on basis
//! keys; everything here is the linear extension of those plus the checks that
//! the supplied maps really form a connected coaugmented cofiltered coalgebra.

use num::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::freemod::{linear_extend, scalar, BasisKey, Element, Scalar, Tensor};
use crate::report::{Check, CheckReport, FiltrationReport, Violation};

pub trait Coalgebra: Sync {
    type Key: BasisKey;

    fn name(&self) -> &'static str;

    /// The basis key of `u(1)`.
    fn unit_key(&self) -> Self::Key;

    fn coproduct_basis(&self, key: &Self::Key) -> Tensor<Self::Key>;

    fn counit_basis(&self, key: &Self::Key) -> Scalar;

    /// All basis keys of degree at most `degree_bound`, in key order.
    fn enumerate_basis(&self, degree_bound: usize) -> Vec<Self::Key>;

    fn degree(&self, key: &Self::Key) -> usize {
        key.degree()
    }

    /// Least `n` with `key ∈ Cⁿ`. The filtration is spanned by basis keys, so
    /// this determines it. Defaults to the one induced by the grading.
    fn filtration_level(&self, key: &Self::Key) -> usize {
        self.degree(key)
    }

    fn is_graded(&self) -> bool {
        true
    }

    fn unit(&self) -> Element<Self::Key> {
        Element::basis(self.unit_key())
    }

    fn counit(&self, a: &Element<Self::Key>) -> Scalar {
        linear_extend(a, Scalar::zero(), |k| self.counit_basis(k))
    }

    fn coproduct(&self, a: &Element<Self::Key>) -> Tensor<Self::Key> {
        linear_extend(a, Tensor::zero(2), |k| self.coproduct_basis(k))
    }

    /// `Δᵏ = (id ⊗ Δᵏ⁻¹) Δ`, an element of `C^{⊗(k+1)}`.
    fn iterated_coproduct(&self, a: &Element<Self::Key>, k: usize) -> Result<Tensor<Self::Key>> {
        match k {
            0 => Err(Error::ZeroIterate),
            1 => Ok(self.coproduct(a)),
            _ => {
                self.coproduct(a).try_apply_at(2, k, |key| self.iterated_coproduct(&Element::basis(key.clone()), k - 1))
            }
        }
    }

    /// `a − ε(a)·u(1)`, the component of `a` in the kernel of the counit.
    fn project_ker_counit(&self, a: &Element<Self::Key>) -> Element<Self::Key> {
        a.sub(&self.unit().scale(&self.counit(a)))
    }

    /// `Δ̄(x) = Δ(x) − x⊗1 − 1⊗x`, defined on the counit kernel only.
    fn reduced_coproduct(&self, a: &Element<Self::Key>) -> Result<Tensor<Self::Key>> {
        let counit = self.counit(a);
        if !counit.is_zero() {
            return Err(Error::NonzeroCounit {
                element: a.to_string(),
                counit: crate::freemod::format_scalar(&counit),
            });
        }
        let unit = self.unit().to_tensor();
        let at = a.to_tensor();
        Ok(self.coproduct(a).sub(&at.tensor_product(&unit)).sub(&unit.tensor_product(&at)))
    }

    /// `Δ̄ᵏ = (id ⊗ Δ̄ᵏ⁻¹) Δ̄`, an element of `(ker ε)^{⊗(k+1)}`.
    fn iterated_reduced_coproduct(&self, a: &Element<Self::Key>, k: usize) -> Result<Tensor<Self::Key>> {
        match k {
            0 => Err(Error::ZeroIterate),
            1 => self.reduced_coproduct(a),
            _ => self
                .reduced_coproduct(a)?
                .try_apply_at(2, k, |key| self.iterated_reduced_coproduct(&Element::basis(key.clone()), k - 1)),
        }
    }

    /// Maximum filtration level over the support; zero has none.
    fn level(&self, a: &Element<Self::Key>) -> Result<usize> {
        a.keys().map(|k| self.filtration_level(k)).max().ok_or(Error::ZeroElement)
    }

    /// Least `n` with `a ∈ F_n C` in the coradical filtration.
    ///
    /// A mixed element is split as `ε(a)·u(1) + π(a)` and the larger of the two
    /// component indices is returned. The search stops at the filtration level
    /// of `π(a)`; running past it means the instance is not conilpotent.
    fn conilpotency_index(&self, a: &Element<Self::Key>) -> Result<usize> {
        Ok(self.reduced_coproduct_chain(a)?.len())
    }

    /// The nonzero-until-zero chain `Δ̄¹(π(a)), …, Δ̄ⁿ(π(a)) = 0` that witnesses
    /// the conilpotency index `n`. Empty when `a ∈ im u`.
    fn reduced_coproduct_chain(&self, a: &Element<Self::Key>) -> Result<Vec<Tensor<Self::Key>>> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let x = self.project_ker_counit(a);
        if x.is_zero() {
            return Ok(Vec::new());
        }
        let bound = self.level(&x)?;
        let mut chain = Vec::new();
        let mut current = self.reduced_coproduct(&x)?;
        loop {
            let n = chain.len() + 1;
            let done = current.is_zero();
            if !done && n >= bound {
                return Err(Error::ConilpotencyBoundExceeded { element: x.to_string(), bound, iterate: n });
            }
            let next = if done {
                None
            } else {
                let arity = current.arity();
                Some(current.try_apply_at(arity, 2, |key| self.reduced_coproduct(&Element::basis(key.clone())))?)
            };
            chain.push(current);
            match next {
                Some(t) => current = t,
                None => return Ok(chain),
            }
        }
    }
}

fn counit_slot<C: Coalgebra + ?Sized>(c: &C, key: &C::Key) -> Tensor<C::Key> {
    Tensor::from_scalar(c.counit_basis(key))
}

fn identity_slot<K: BasisKey>(key: &K) -> Tensor<K> {
    Tensor::pure(vec![key.clone()])
}

fn collect_violations<K, F>(keys: &[K], f: F) -> Vec<Violation>
where
    K: BasisKey,
    F: Fn(&K) -> Vec<Violation> + Sync,
{
    keys.par_iter().map(&f).collect::<Vec<_>>().into_iter().flatten().collect()
}

/// `(Δ ⊗ id)Δ(b) = (id ⊗ Δ)Δ(b)` on every basis element up to the bound.
pub fn check_coassociativity<C: Coalgebra>(c: &C, degree_bound: usize) -> CheckReport {
    let basis = c.enumerate_basis(degree_bound);
    let violations = collect_violations(&basis, |b| {
        let delta = c.coproduct_basis(b);
        let left = delta.apply_at(1, 2, |k| c.coproduct_basis(k)).expect("arity 2");
        let right = delta.apply_at(2, 2, |k| c.coproduct_basis(k)).expect("arity 2");
        if left == right {
            vec![]
        } else {
            vec![Violation::new(b.to_string(), format!("(Δ⊗id)Δ − (id⊗Δ)Δ = {}", left.sub(&right)))]
        }
    });
    CheckReport { check: Check::Coassociativity, degree_bound, checked: basis.len(), violations }
}

/// `(ε ⊗ id)Δ(b) = b = (id ⊗ ε)Δ(b)` after identifying `𝐤 ⊗ C ≅ C ≅ C ⊗ 𝐤`.
pub fn check_counicity<C: Coalgebra>(c: &C, degree_bound: usize) -> CheckReport {
    let basis = c.enumerate_basis(degree_bound);
    let violations = collect_violations(&basis, |b| {
        let delta = c.coproduct_basis(b);
        let expected = identity_slot(b);
        let mut out = vec![];
        let left = delta.apply_at(1, 0, |k| counit_slot(c, k)).expect("arity 2");
        if left != expected {
            out.push(Violation::new(b.to_string(), format!("(ε⊗id)Δ(b) = {left}")));
        }
        let right = delta.apply_at(2, 0, |k| counit_slot(c, k)).expect("arity 2");
        if right != expected {
            out.push(Violation::new(b.to_string(), format!("(id⊗ε)Δ(b) = {right}")));
        }
        out
    });
    CheckReport { check: Check::Counicity, degree_bound, checked: basis.len(), violations }
}

/// Checks the unit part shared by the graded and filtered variants: `ε(u(1)) = 1`
/// and `u(1)` sits in degree 0.
fn unit_violations<C: Coalgebra>(c: &C, level: impl Fn(&C::Key) -> usize) -> Vec<Violation> {
    let unit = c.unit_key();
    let mut out = vec![];
    if !c.counit_basis(&unit).is_one() {
        out.push(Violation::new(unit.to_string(), "ε(u(1)) ≠ 1"));
    }
    if level(&unit) != 0 {
        out.push(Violation::new(unit.to_string(), "u(1) is not in degree 0"));
    }
    out
}

/// Grading compatibility: `Δ(C⁽ⁿ⁾) ⊆ ⊕_{p+q=n} C⁽ᵖ⁾⊗C⁽q⁾`, `ε` vanishes in
/// positive degree, and `C⁽⁰⁾ = im u`.
pub fn check_cograded<C: Coalgebra>(c: &C, degree_bound: usize) -> FiltrationReport {
    let basis = c.enumerate_basis(degree_bound);
    let unit = c.unit_key();

    let coproduct_violations = collect_violations(&basis, |b| {
        let n = c.degree(b);
        c.coproduct_basis(b)
            .terms()
            .filter(|(keys, _)| c.degree(&keys[0]) + c.degree(&keys[1]) != n)
            .map(|(keys, _)| {
                Violation::new(
                    b.to_string(),
                    format!(
                        "term {}⊗{} has degrees {}+{} ≠ {n}",
                        keys[0],
                        keys[1],
                        c.degree(&keys[0]),
                        c.degree(&keys[1])
                    ),
                )
            })
            .collect()
    });

    let mut counit_violations = unit_violations(c, |k| c.degree(k));
    counit_violations.extend(basis.iter().filter(|b| c.degree(b) >= 1).filter_map(|b| {
        let e = c.counit_basis(b);
        (!e.is_zero()).then(|| {
            Violation::new(b.to_string(), format!("ε = {} on positive degree", crate::freemod::format_scalar(&e)))
        })
    }));

    let connected_violations: Vec<Violation> = basis
        .iter()
        .filter(|b| c.degree(b) == 0 && **b != unit)
        .map(|b| Violation::new(b.to_string(), "degree-0 basis element other than u(1)"))
        .collect();

    finish_filtration(degree_bound, connected_violations, counit_violations, coproduct_violations)
}

/// Filtration compatibility on the basis-spanned family `Cⁿ`:
/// `Δ(Cⁿ) ⊆ Σ_{p+q=n} Cᵖ⊗Cq`, `Cⁿ = im u ⊕ (Cⁿ ∩ ker ε)`, and `C⁰ = im u`.
pub fn check_cofiltered<C: Coalgebra>(c: &C, degree_bound: usize) -> FiltrationReport {
    let basis = c.enumerate_basis(degree_bound);
    let unit = c.unit_key();
    let level = |k: &C::Key| c.filtration_level(k);

    let coproduct_violations = collect_violations(&basis, |b| {
        let n = level(b);
        c.coproduct_basis(b)
            .terms()
            .filter(|(keys, _)| level(&keys[0]) + level(&keys[1]) > n)
            .map(|(keys, _)| {
                Violation::new(
                    b.to_string(),
                    format!(
                        "term {}⊗{} lies in C^{}⊗C^{}, outside Σ_(p+q={n}) C^p⊗C^q",
                        keys[0],
                        keys[1],
                        level(&keys[0]),
                        level(&keys[1])
                    ),
                )
            })
            .collect()
    });

    // With a basis-spanned filtration, Cⁿ = im u ⊕ (Cⁿ ∩ ker ε) for all n holds
    // exactly when u(1) ∈ C⁰ and ε(u(1)) = 1.
    let counit_violations = unit_violations(c, level);

    let connected_violations: Vec<Violation> = basis
        .iter()
        .filter(|b| level(b) == 0 && **b != unit)
        .map(|b| Violation::new(b.to_string(), "C⁰ contains a basis element other than u(1)"))
        .collect();

    finish_filtration(degree_bound, connected_violations, counit_violations, coproduct_violations)
}

fn finish_filtration(
    degree_bound: usize,
    connected: Vec<Violation>,
    counit: Vec<Violation>,
    coproduct: Vec<Violation>,
) -> FiltrationReport {
    FiltrationReport {
        checked_degree_bound: degree_bound,
        connected: connected.is_empty(),
        counit_compatible: counit.is_empty(),
        coproduct_compatible: coproduct.is_empty(),
        violations: connected.into_iter().chain(counit).chain(coproduct).collect(),
    }
}

/// Every term of `Δ̄(π(b))` has both legs of filtration level strictly between
/// 0 and that of `b`.
pub fn check_degree_drop<C: Coalgebra>(c: &C, degree_bound: usize) -> CheckReport {
    let basis = c.enumerate_basis(degree_bound);
    let unit = c.unit_key();
    let level = |k: &C::Key| c.filtration_level(k);
    let violations = collect_violations(&basis, |b| {
        if *b == unit || level(b) == 0 {
            return vec![];
        }
        let n = level(b);
        let x = c.project_ker_counit(&Element::basis(b.clone()));
        let reduced = match c.reduced_coproduct(&x) {
            Ok(t) => t,
            Err(e) => return vec![Violation::new(b.to_string(), e.to_string())],
        };
        reduced
            .terms()
            .filter(|(keys, _)| keys.iter().any(|k| level(k) == 0 || level(k) >= n))
            .map(|(keys, _)| {
                Violation::new(
                    b.to_string(),
                    format!(
                        "term {}⊗{} has leg degrees {},{} outside (0, {n})",
                        keys[0],
                        keys[1],
                        level(&keys[0]),
                        level(&keys[1])
                    ),
                )
            })
            .collect()
    });
    CheckReport { check: Check::DegreeDrop, degree_bound, checked: basis.len(), violations }
}

/// Convenience for the common unit tensor `u(1)^{⊗k}`.
pub fn unit_power<C: Coalgebra>(c: &C, k: usize) -> Tensor<C::Key> {
    Tensor::monomial(scalar(1), vec![c.unit_key(); k])
}
