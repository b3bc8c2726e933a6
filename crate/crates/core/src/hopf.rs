//! Bialgebras, the convolution product on endomorphisms, and antipodes.
//!
//! Three antipode algorithms are provided: the alternating series
//! `S(x) = −x + Σ_{n≥1} (−1)^{n+1} mⁿ Δ̄ⁿ(x)` and the two degree recursions
//! `S(x) = −x − Σ S(x′)x″` and `S(x) = −x − Σ x′S(x″)`, each on the counit
//! kernel with `S(1) = 1`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::freemod::{format_scalar, scalar, BasisKey, Element, Linear, Tensor};
use crate::report::{Check, CheckReport, Violation};

pub trait Bialgebra: Coalgebra {
    /// `m` on basis keys.
    fn product_basis(&self, a: &Self::Key, b: &Self::Key) -> Element<Self::Key>;

    fn multiply(&self, a: &Element<Self::Key>, b: &Element<Self::Key>) -> Element<Self::Key> {
        let mut out = Element::zero();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                out.add_scaled(&(ca * cb), &self.product_basis(ka, kb));
            }
        }
        out
    }

    /// `mⁿ` on `H^{⊗(n+1)}`, folding left to right. A tensor of arity 0 folds
    /// to its scalar times the unit.
    fn multiply_fold(&self, t: &Tensor<Self::Key>) -> Element<Self::Key> {
        let mut out = Element::zero();
        for (keys, c) in t.terms() {
            let folded = keys.iter().fold(self.unit(), |acc, k| self.multiply(&acc, &Element::basis(k.clone())));
            out.add_scaled(c, &folded);
        }
        out
    }

    /// Slotwise product in `H^{⊗k}`: `(a₁⊗…⊗a_k)(b₁⊗…⊗b_k) = a₁b₁⊗…⊗a_kb_k`.
    fn multiply_tensors(&self, s: &Tensor<Self::Key>, t: &Tensor<Self::Key>) -> Tensor<Self::Key> {
        assert_eq!(s.arity(), t.arity(), "tensor arity mismatch");
        let mut out = Tensor::zero(s.arity());
        for (a, ca) in s.terms() {
            for (b, cb) in t.terms() {
                let slot_products = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| self.product_basis(x, y).to_tensor())
                    .fold(Tensor::from_scalar(ca * cb), |acc, p| acc.tensor_product(&p));
                out.add_scaled(&scalar(1), &slot_products);
            }
        }
        out
    }
}

type Rule<'a, K> = dyn Fn(&EndoMap<'a, K>, &K) -> Result<Element<K>> + Send + Sync + 'a;

/// A linear endomorphism given by its values on basis keys.
///
/// The rule receives the map itself so it can recurse; values are cached per
/// key. Concurrent evaluation may compute a key twice but every caller sees
/// the same value.
pub struct EndoMap<'a, K: BasisKey> {
    label: String,
    rule: Box<Rule<'a, K>>,
    memo: Mutex<HashMap<K, Element<K>>>,
}

impl<'a, K: BasisKey> EndoMap<'a, K> {
    pub fn new<F>(label: impl Into<String>, rule: F) -> Self
    where
        F: Fn(&EndoMap<'a, K>, &K) -> Result<Element<K>> + Send + Sync + 'a,
    {
        EndoMap { label: label.into(), rule: Box::new(rule), memo: Mutex::new(HashMap::new()) }
    }

    /// A non-recursive map from a plain basis function.
    pub fn from_fn<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn(&K) -> Element<K> + Send + Sync + 'a,
    {
        Self::new(label, move |_, k| Ok(f(k)))
    }

    pub fn identity() -> Self {
        Self::from_fn("id", |k: &K| Element::basis(k.clone()))
    }

    /// `u ∘ ε`, the unit of the convolution product.
    pub fn unit_counit<H: Coalgebra<Key = K>>(h: &'a H) -> Self {
        Self::from_fn("uε", move |k| h.unit().scale(&h.counit_basis(k)))
    }

    pub fn antipode<H: Bialgebra<Key = K>>(h: &'a H, algorithm: Algorithm) -> Self {
        match algorithm {
            Algorithm::Series => {
                Self::new(algorithm.name(), move |_, k| antipode_series(h, &Element::basis(k.clone())))
            }
            Algorithm::RecursiveLeft => Self::new(algorithm.name(), move |s, k| recursive_step(h, s, k, Side::Left)),
            Algorithm::RecursiveRight => Self::new(algorithm.name(), move |s, k| recursive_step(h, s, k, Side::Right)),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval_key(&self, key: &K) -> Result<Element<K>> {
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(key) {
            return Ok(hit.clone());
        }
        let value = (self.rule)(self, key)?;
        self.memo.lock().expect("memo poisoned").entry(key.clone()).or_insert(value.clone());
        Ok(value)
    }

    pub fn apply(&self, a: &Element<K>) -> Result<Element<K>> {
        let mut out = Element::zero();
        for (k, c) in a.terms() {
            out.add_scaled(c, &self.eval_key(k)?);
        }
        Ok(out)
    }
}

impl<K: BasisKey> fmt::Debug for EndoMap<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EndoMap").field("label", &self.label).finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Algorithm {
    #[serde(rename = "series")]
    Series,
    #[serde(rename = "rec-left")]
    RecursiveLeft,
    #[serde(rename = "rec-right")]
    RecursiveRight,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Series, Algorithm::RecursiveLeft, Algorithm::RecursiveRight];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Series => "series",
            Algorithm::RecursiveLeft => "rec-left",
            Algorithm::RecursiveRight => "rec-right",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

fn recursive_step<'a, H: Bialgebra>(
    h: &'a H,
    s: &EndoMap<'a, H::Key>,
    key: &H::Key,
    side: Side,
) -> Result<Element<H::Key>> {
    let unit = h.unit_key();
    if *key == unit {
        return Ok(h.unit());
    }
    let level = h.filtration_level(key);
    let b = Element::basis(key.clone());
    let counit = h.counit(&b);
    let x = h.project_ker_counit(&b);
    let mut out = h.unit().scale(&counit).sub(&x);
    for (legs, c) in h.reduced_coproduct(&x)?.terms() {
        let recurse_on = match side {
            Side::Left => &legs[0],
            Side::Right => &legs[1],
        };
        if h.filtration_level(recurse_on) >= level {
            return Err(Error::DegreeDropViolation {
                key: key.to_string(),
                leg: recurse_on.to_string(),
                degree: level,
            });
        }
        let term = match side {
            Side::Left => h.multiply(&s.eval_key(&legs[0])?, &Element::basis(legs[1].clone())),
            Side::Right => h.multiply(&Element::basis(legs[0].clone()), &s.eval_key(&legs[1])?),
        };
        out.add_scaled(&-c, &term);
    }
    Ok(out)
}

/// `(f ∗ g)(a) = m (f ⊗ g) Δ(a)`.
pub fn convolve<H: Bialgebra>(
    h: &H,
    f: &EndoMap<'_, H::Key>,
    g: &EndoMap<'_, H::Key>,
    a: &Element<H::Key>,
) -> Result<Element<H::Key>> {
    let mut out = Element::zero();
    for (legs, c) in h.coproduct(a).terms() {
        let term = h.multiply(&f.eval_key(&legs[0])?, &g.eval_key(&legs[1])?);
        out.add_scaled(c, &term);
    }
    Ok(out)
}

/// `S(a)` from the alternating series, extended from the counit kernel by
/// `S(1) = 1` and linearity.
///
/// The series is summed until `Δ̄ⁿ` vanishes; a nonzero iterate at or past
/// the filtration level of the input is an error.
pub fn antipode_series<H: Bialgebra>(h: &H, a: &Element<H::Key>) -> Result<Element<H::Key>> {
    if a.is_zero() {
        return Ok(Element::zero());
    }
    let counit = h.counit(a);
    let x = h.project_ker_counit(a);
    let mut out = h.unit().scale(&counit).sub(&x);
    if x.is_zero() {
        return Ok(out);
    }
    for (i, iterate) in h.reduced_coproduct_chain(&x)?.iter().enumerate() {
        let n = i + 1;
        let sign = if n % 2 == 1 { scalar(1) } else { scalar(-1) };
        out.add_scaled(&sign, &h.multiply_fold(iterate));
    }
    Ok(out)
}

pub fn antipode_recursive_left<H: Bialgebra>(h: &H, a: &Element<H::Key>) -> Result<Element<H::Key>> {
    EndoMap::antipode(h, Algorithm::RecursiveLeft).apply(a)
}

pub fn antipode_recursive_right<H: Bialgebra>(h: &H, a: &Element<H::Key>) -> Result<Element<H::Key>> {
    EndoMap::antipode(h, Algorithm::RecursiveRight).apply(a)
}

pub fn antipode<H: Bialgebra>(h: &H, a: &Element<H::Key>, algorithm: Algorithm) -> Result<Element<H::Key>> {
    match algorithm {
        Algorithm::Series => antipode_series(h, a),
        Algorithm::RecursiveLeft => antipode_recursive_left(h, a),
        Algorithm::RecursiveRight => antipode_recursive_right(h, a),
    }
}

/// `S ∗ id = id ∗ S = ε(·)u(1)` on every basis element up to the bound.
pub fn verify_antipode<H: Bialgebra>(h: &H, s: &EndoMap<'_, H::Key>, degree_bound: usize) -> CheckReport {
    let basis = h.enumerate_basis(degree_bound);
    let id = EndoMap::identity();
    let violations = basis
        .par_iter()
        .map(|b| {
            let elem = Element::basis(b.clone());
            let expected = h.unit().scale(&h.counit_basis(b));
            let mut out = vec![];
            for (label, result) in [("S∗id", convolve(h, s, &id, &elem)), ("id∗S", convolve(h, &id, s, &elem))] {
                match result {
                    Ok(v) if v == expected => {}
                    Ok(v) => out.push(Violation::new(b.to_string(), format!("{label} = {v}, expected {expected}"))),
                    Err(e) => out.push(Violation::new(b.to_string(), format!("{label}: {e}"))),
                }
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    CheckReport { check: Check::Antipode, degree_bound, checked: basis.len(), violations }
}

/// `Δ` and `ε` are algebra morphisms, `m` is associative, and `u(1)` is a
/// two-sided unit, over all basis pairs (and triples) of total degree at most
/// the bound.
pub fn check_bialgebra<H: Bialgebra>(h: &H, degree_bound: usize) -> CheckReport {
    let basis = h.enumerate_basis(degree_bound);
    let unit = h.unit();
    let deg = |k: &H::Key| h.degree(k);

    let mut violations: Vec<Violation> = vec![];
    let dunit = h.coproduct(&unit);
    if dunit != Tensor::pure(vec![h.unit_key(), h.unit_key()]) {
        violations.push(Violation::new("1", format!("Δ(1) = {dunit}")));
    }
    if !h.counit(&unit).is_one() {
        violations.push(Violation::new("1", "ε(1) ≠ 1"));
    }

    let unit_laws: Vec<Violation> = basis
        .par_iter()
        .flat_map_iter(|b| {
            let e = Element::basis(b.clone());
            let mut out = vec![];
            let left = h.multiply(&unit, &e);
            if left != e {
                out.push(Violation::new(b.to_string(), format!("1·x = {left}")));
            }
            let right = h.multiply(&e, &unit);
            if right != e {
                out.push(Violation::new(b.to_string(), format!("x·1 = {right}")));
            }
            out
        })
        .collect();
    violations.extend(unit_laws);

    let pairs: Vec<(&H::Key, &H::Key)> = basis
        .iter()
        .flat_map(|b| basis.iter().map(move |c| (b, c)))
        .filter(|(b, c)| deg(b) + deg(c) <= degree_bound)
        .collect();
    let pair_violations: Vec<Violation> = pairs
        .par_iter()
        .flat_map_iter(|&(b, c)| {
            let at = format!("{b} · {c}");
            let (eb, ec) = (Element::basis(b.clone()), Element::basis(c.clone()));
            let prod = h.multiply(&eb, &ec);
            let mut out = vec![];
            let lhs = h.coproduct(&prod);
            let rhs = h.multiply_tensors(&h.coproduct(&eb), &h.coproduct(&ec));
            if lhs != rhs {
                out.push(Violation::new(at.clone(), format!("Δ(xy) − Δ(x)Δ(y) = {}", lhs.sub(&rhs))));
            }
            let (el, er) = (h.counit(&prod), h.counit(&eb) * h.counit(&ec));
            if el != er {
                out.push(Violation::new(
                    at,
                    format!("ε(xy) = {} but ε(x)ε(y) = {}", format_scalar(&el), format_scalar(&er)),
                ));
            }
            out
        })
        .collect();
    violations.extend(pair_violations);

    let triples: Vec<(&H::Key, &H::Key, &H::Key)> = pairs
        .iter()
        .flat_map(|&(b, c)| basis.iter().map(move |d| (b, c, d)))
        .filter(|(b, c, d)| deg(b) + deg(c) + deg(d) <= degree_bound)
        .collect();
    let assoc_violations: Vec<Violation> = triples
        .par_iter()
        .flat_map_iter(|&(b, c, d)| {
            let (eb, ec, ed) = (Element::basis(b.clone()), Element::basis(c.clone()), Element::basis(d.clone()));
            let left = h.multiply(&h.multiply(&eb, &ec), &ed);
            let right = h.multiply(&eb, &h.multiply(&ec, &ed));
            (left != right)
                .then(|| Violation::new(format!("{b} · {c} · {d}"), format!("(xy)z − x(yz) = {}", left.sub(&right))))
        })
        .collect();
    violations.extend(assoc_violations);

    CheckReport {
        check: Check::Bialgebra,
        degree_bound,
        checked: basis.len() + pairs.len() + triples.len(),
        violations,
    }
}

/// `S ∘ S` applied to `a`; the identity for commutative or cocommutative `H`.
pub fn antipode_twice<H: Bialgebra>(_h: &H, s: &EndoMap<'_, H::Key>, a: &Element<H::Key>) -> Result<Element<H::Key>> {
    s.apply(&s.apply(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::connes_kreimer::{ConnesKreimer, Forest};
    use crate::instances::polynomial::{Monomial, Polynomial};
    use crate::instances::shuffle::{Shuffle, Word};

    fn w(s: &str) -> Element<Word> {
        Element::basis(Word::parse(s).unwrap())
    }

    fn x(n: u32) -> Element<Monomial> {
        Element::basis(Monomial(n))
    }

    fn f(s: &str) -> Element<Forest> {
        Element::basis(Forest::parse(s).unwrap())
    }

    #[test]
    fn multiply_examples() {
        let p = Polynomial;
        assert_eq!(p.multiply(&p.unit(), &x(3)), x(3));
        assert_eq!(p.multiply(&x(1), &x(1)), x(2));
        let s = Shuffle::new(2);
        assert_eq!(s.multiply(&w("a"), &w("b")), w("ab").add(&w("ba")));
    }

    #[test]
    fn fold_examples() {
        let s = Shuffle::new(3);
        let t = Tensor::pure(vec![Word::parse("a").unwrap(), Word::parse("b").unwrap()]);
        assert_eq!(s.multiply_fold(&t), s.multiply(&w("a"), &w("b")));
        let abc = Tensor::pure(["a", "b", "c"].iter().map(|l| Word::parse(l).unwrap()).collect());
        let folded = s.multiply_fold(&abc);
        assert_eq!(folded.len(), 6);
        let right_grouped = s.multiply(&w("a"), &s.multiply(&w("b"), &w("c")));
        assert_eq!(folded, right_grouped);
        let p = Polynomial;
        assert_eq!(p.multiply_fold(&Tensor::pure(vec![Monomial(1), Monomial(1)])), x(2));
    }

    #[test]
    fn convolution_examples() {
        let p = Polynomial;
        let id = EndoMap::identity();
        let ue = EndoMap::unit_counit(&p);
        assert_eq!(convolve(&p, &ue, &id, &x(3)).unwrap(), x(3));
        assert_eq!(convolve(&p, &id, &id, &x(1)).unwrap(), x(1).scale(&scalar(2)));
        let s = Shuffle::new(2);
        let sa = EndoMap::antipode(&s, Algorithm::Series);
        assert!(convolve(&s, &sa, &EndoMap::identity(), &w("ab")).unwrap().is_zero());
    }

    #[test]
    fn antipode_examples() {
        let s = Shuffle::new(2);
        assert_eq!(antipode_series(&s, &s.unit()).unwrap(), s.unit());
        assert_eq!(antipode_series(&s, &w("a")).unwrap(), w("a").neg());
        assert_eq!(antipode_series(&s, &w("ab")).unwrap(), w("ba"));
        assert_eq!(antipode_recursive_left(&s, &w("ab")).unwrap(), w("ba"));
        assert_eq!(antipode_recursive_right(&s, &w("ab")).unwrap(), w("ba"));
        let p = Polynomial;
        assert_eq!(antipode_series(&p, &x(2)).unwrap(), x(2));
        assert_eq!(antipode_recursive_left(&p, &x(3)).unwrap(), x(3).neg());
        let ck = ConnesKreimer::new();
        let expected = f("T[T[]]").neg().add(&f("T[]*T[]"));
        assert_eq!(antipode_series(&ck, &f("T[T[]]")).unwrap(), expected);
        assert_eq!(antipode_recursive_right(&ck, &f("T[T[]]")).unwrap(), expected);
    }

    #[test]
    fn antipode_of_mixed_element_is_linear() {
        let s = Shuffle::new(2);
        let a = s.unit().scale(&scalar(3)).add(&w("ab"));
        assert_eq!(antipode_series(&s, &a).unwrap(), s.unit().scale(&scalar(3)).add(&w("ba")));
    }

    #[test]
    fn identity_is_not_an_antipode() {
        let s = Shuffle::new(2);
        let report = verify_antipode(&s, &EndoMap::identity(), 2);
        assert!(!report.passed());
        for letter in ["a", "b"] {
            assert!(report.violations.iter().any(|v| v.at == letter));
        }
    }

    #[test]
    fn memo_is_consistent() {
        let s = Shuffle::new(2);
        let m = EndoMap::antipode(&s, Algorithm::RecursiveLeft);
        let key = Word::parse("abab").unwrap();
        assert_eq!(m.eval_key(&key).unwrap(), m.eval_key(&key).unwrap());
    }

    #[test]
    fn bialgebra_checks() {
        assert!(check_bialgebra(&Polynomial, 5).passed());
        assert!(check_bialgebra(&Shuffle::new(2), 4).passed());
    }
}
