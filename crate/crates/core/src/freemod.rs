//! Sparse free modules over the rationals.
//!
//! An [`Element`] is a finite formal sum of basis keys with rational
//! coefficients; a [`Tensor`] is the same thing over tuples of keys of a fixed
//! arity. Coefficients are kept exact and zero coefficients are never stored,
//! so structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` is always reduced with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A canonical label for one basis element of an instance.
///
/// `Display` must produce a literal that the expression parser of the owning
/// instance reads back to the same key. `Ord` is the deterministic output
/// order.
pub trait BasisKey: Clone + Ord + Hash + Debug + Display + Send + Sync + 'static {
    fn degree(&self) -> usize;
}

/// Anything that can be accumulated linearly: `self += k * other`.
pub trait Linear {
    fn add_scaled(&mut self, k: &Scalar, other: &Self);
}

impl Linear for Scalar {
    fn add_scaled(&mut self, k: &Scalar, other: &Self) {
        *self += k * other;
    }
}

fn accumulate<T: Ord + Clone>(terms: &mut BTreeMap<T, Scalar>, key: T, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Finitely supported formal sum of basis keys.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: BasisKey> Element<K> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn basis(key: K) -> Self {
        Self::monomial(scalar(1), key)
    }

    pub fn monomial(coeff: Scalar, key: K) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, key, coeff);
        Element { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        accumulate(&mut self.terms, key, coeff);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&scalar(1), other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&scalar(-1), other);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&scalar(-1))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Element { terms: self.terms.iter().map(|(key, c)| (key.clone(), c * k)).collect() }
    }

    /// Maximum key degree over the support; the zero element has none.
    pub fn degree(&self) -> Result<usize> {
        self.terms.keys().map(BasisKey::degree).max().ok_or(Error::ZeroElement)
    }

    pub fn to_tensor(&self) -> Tensor<K> {
        Tensor { arity: 1, terms: self.terms.iter().map(|(k, c)| (vec![k.clone()], c.clone())).collect() }
    }
}

impl<K: BasisKey> Linear for Element<K> {
    fn add_scaled(&mut self, k: &Scalar, other: &Self) {
        if k.is_zero() {
            return;
        }
        for (key, c) in &other.terms {
            accumulate(&mut self.terms, key.clone(), c * k);
        }
    }
}

impl<K: BasisKey> Default for Element<K> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Finitely supported formal sum of `arity`-tuples of basis keys.
///
/// Arity 0 is allowed and stands for the ground field itself; it appears
/// when a slot is collapsed by the counit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor<K: Ord> {
    arity: usize,
    terms: BTreeMap<Vec<K>, Scalar>,
}

impl<K: BasisKey> Tensor<K> {
    pub fn zero(arity: usize) -> Self {
        Tensor { arity, terms: BTreeMap::new() }
    }

    pub fn from_scalar(k: Scalar) -> Self {
        let mut t = Self::zero(0);
        accumulate(&mut t.terms, Vec::new(), k);
        t
    }

    pub fn pure(keys: Vec<K>) -> Self {
        Self::monomial(scalar(1), keys)
    }

    pub fn monomial(coeff: Scalar, keys: Vec<K>) -> Self {
        let mut t = Self::zero(keys.len());
        accumulate(&mut t.terms, keys, coeff);
        t
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<K>, Scalar)>>(arity: usize, iter: I) -> Self {
        let mut t = Self::zero(arity);
        for (keys, c) in iter {
            t.add_term(keys, c);
        }
        t
    }

    /// Panics if the tuple length differs from the arity.
    pub fn add_term(&mut self, keys: Vec<K>, coeff: Scalar) {
        assert_eq!(keys.len(), self.arity, "tensor arity mismatch");
        accumulate(&mut self.terms, keys, coeff);
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, keys: &[K]) -> Scalar {
        self.terms.get(keys).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<K>, &Scalar)> {
        self.terms.iter()
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero(self.arity);
        }
        Tensor { arity: self.arity, terms: self.terms.iter().map(|(t, c)| (t.clone(), c * k)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&scalar(1), other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&scalar(-1), other);
        out
    }

    /// Bilinear extension of tuple concatenation.
    pub fn tensor_product(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.arity + other.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut keys = Vec::with_capacity(a.len() + b.len());
                keys.extend(a.iter().cloned());
                keys.extend(b.iter().cloned());
                accumulate(&mut out.terms, keys, ca * cb);
            }
        }
        out
    }

    /// Collapses an arity-0 tensor to its scalar; `None` for other arities.
    pub fn as_scalar(&self) -> Option<Scalar> {
        (self.arity == 0).then(|| self.coefficient(&[]))
    }

    /// Reads an arity-1 tensor as an element; `None` for other arities.
    pub fn to_element(&self) -> Option<Element<K>> {
        (self.arity == 1).then(|| Element::from_terms(self.terms.iter().map(|(t, c)| (t[0].clone(), c.clone()))))
    }

    /// Applies `f` in slot `position` (1-based), identity elsewhere. Every
    /// image of `f` must have arity `image_arity`.
    pub fn apply_at<F>(&self, position: usize, image_arity: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&K) -> Self,
    {
        if position == 0 || position > self.arity {
            return Err(Error::PositionOutOfRange { position, arity: self.arity });
        }
        let slot = position - 1;
        let mut out = Self::zero(self.arity - 1 + image_arity);
        for (keys, c) in &self.terms {
            let image = f(&keys[slot]);
            assert_eq!(image.arity, image_arity, "image arity mismatch in apply_at");
            for (mid, cm) in &image.terms {
                let mut tuple = Vec::with_capacity(out.arity);
                tuple.extend(keys[..slot].iter().cloned());
                tuple.extend(mid.iter().cloned());
                tuple.extend(keys[slot + 1..].iter().cloned());
                accumulate(&mut out.terms, tuple, c * cm);
            }
        }
        Ok(out)
    }

    /// Like [`Tensor::apply_at`] for a fallible slot map.
    pub fn try_apply_at<F>(&self, position: usize, image_arity: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&K) -> Result<Self>,
    {
        if position == 0 || position > self.arity {
            return Err(Error::PositionOutOfRange { position, arity: self.arity });
        }
        let mut cache: BTreeMap<K, Self> = BTreeMap::new();
        for keys in self.terms.keys() {
            let k = &keys[position - 1];
            if !cache.contains_key(k) {
                cache.insert(k.clone(), f(k)?);
            }
        }
        self.apply_at(position, image_arity, |k| cache[k].clone())
    }
}

impl<K: BasisKey> Linear for Tensor<K> {
    fn add_scaled(&mut self, k: &Scalar, other: &Self) {
        if k.is_zero() || other.is_zero() {
            return;
        }
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        for (keys, c) in &other.terms {
            accumulate(&mut self.terms, keys.clone(), c * k);
        }
    }
}

/// `Σ coeff · f(key)` over the terms of `a`, starting from `zero`.
pub fn linear_extend<K, T, F>(a: &Element<K>, zero: T, mut f: F) -> T
where
    K: BasisKey,
    T: Linear,
    F: FnMut(&K) -> T,
{
    let mut acc = zero;
    for (k, c) in a.terms() {
        acc.add_scaled(c, &f(k));
    }
    acc
}

/// [`linear_extend`] for a partial basis map; reports the first key on which
/// `f` is undefined.
pub fn try_linear_extend<K, T, F>(a: &Element<K>, zero: T, mut f: F) -> Result<T>
where
    K: BasisKey,
    T: Linear,
    F: FnMut(&K) -> Option<T>,
{
    let mut acc = zero;
    for (k, c) in a.terms() {
        let image = f(k).ok_or_else(|| Error::UndefinedOnKey(k.to_string()))?;
        acc.add_scaled(c, &image);
    }
    Ok(acc)
}

/// Renders a coefficient the way the expression grammar reads it: `3`, `-1/2`.
pub fn format_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Writes a signed sum of terms, each already rendered without its sign.
fn write_signed_sum<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a Scalar, String, bool)>,
{
    let mut first = true;
    for (c, body, is_unit) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        if is_unit {
            write!(f, "{}", format_scalar(&mag))?;
        } else if mag.is_one() {
            write!(f, "{body}")?;
        } else {
            write!(f, "{}*{body}", format_scalar(&mag))?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<K: BasisKey> Display for Element<K> {
    /// A key of degree 0 renders as the bare coefficient (the unit is `1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, self.terms.iter().map(|(k, c)| (c, k.to_string(), k.degree() == 0)))
    }
}

impl<K: BasisKey> Debug for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl<K: BasisKey> Display for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arity == 0 {
            return write!(f, "{}", format_scalar(&self.coefficient(&[])));
        }
        write_signed_sum(
            f,
            self.terms.iter().map(|(keys, c)| {
                let body = keys.iter().map(ToString::to_string).collect::<Vec<_>>().join("⊗");
                (c, body, false)
            }),
        )
    }
}

impl<K: BasisKey> Debug for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor<{}>({self})", self.arity)
    }
}
