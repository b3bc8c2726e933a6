//! Independent reference computations used by the integration suites.
//!
//! Nothing here calls the library's coproduct iteration, convolution, or
//! antipode code: oracles work from basis-level structure maps (or from
//! first principles) with their own sparse-map arithmetic.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hopfcalc::instances::{Forest, Monomial, Tree, Word};
use hopfcalc::{Bialgebra, Element, Scalar, Tensor};
use num::{BigInt, BigRational, One, Zero};

pub type Sparse<K> = BTreeMap<K, Scalar>;

fn add_into<K: Ord>(acc: &mut Sparse<K>, key: K, c: Scalar) {
    let slot = acc.entry(key).or_insert_with(Scalar::zero);
    *slot += c;
}

fn prune<K: Ord>(mut m: Sparse<K>) -> Sparse<K> {
    m.retain(|_, c| !c.is_zero());
    m
}

pub fn to_sparse<K: hopfcalc::BasisKey>(e: &Element<K>) -> Sparse<K> {
    e.terms().map(|(k, c)| (k.clone(), c.clone())).collect()
}

pub fn tensor_to_sparse<K: hopfcalc::BasisKey>(t: &Tensor<K>) -> Sparse<Vec<K>> {
    t.terms().map(|(k, c)| (k.clone(), c.clone())).collect()
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Solves `S∗id = uε` by forward substitution over a degree-ordered basis.
///
/// For a basis key `b`, `Δ(b) = b⊗1 + Σ b′⊗b″` with every other left leg
/// strictly lower in the order, so
/// `S(b) = ε(b)·1 − Σ c·S(b′)·b″` determines `S(b)` from earlier values.
pub struct TriangularSolve<'h, H: Bialgebra> {
    h: &'h H,
    solved: BTreeMap<H::Key, Sparse<H::Key>>,
}

impl<'h, H: Bialgebra> TriangularSolve<'h, H> {
    pub fn new(h: &'h H, degree_bound: usize) -> Self {
        let mut basis = h.enumerate_basis(degree_bound);
        basis.sort_by_key(|k| h.degree(k));
        let mut solver = TriangularSolve { h, solved: BTreeMap::new() };
        for b in basis {
            let value = solver.solve_one(&b);
            solver.solved.insert(b, value);
        }
        solver
    }

    fn product(&self, a: &Sparse<H::Key>, key: &H::Key) -> Sparse<H::Key> {
        let mut out = Sparse::new();
        for (k, c) in a {
            for (p, d) in self.h.product_basis(k, key).terms() {
                add_into(&mut out, p.clone(), c * d);
            }
        }
        out
    }

    fn solve_one(&self, b: &H::Key) -> Sparse<H::Key> {
        let unit = self.h.unit_key();
        let mut rhs = Sparse::new();
        let eps = self.h.counit_basis(b);
        if !eps.is_zero() {
            rhs.insert(unit.clone(), eps);
        }
        let mut diagonal = Scalar::zero();
        for (keys, c) in self.h.coproduct_basis(b).terms() {
            let (left, right) = (&keys[0], &keys[1]);
            if left == b {
                assert_eq!(right, &unit, "left leg equal to b needs a unit right leg");
                diagonal += c;
                continue;
            }
            let s_left = self.solved.get(left).unwrap_or_else(|| panic!("{left} is not below {b} in the degree order"));
            for (k, v) in self.product(s_left, right) {
                add_into(&mut rhs, k, -(c * v));
            }
        }
        assert!(diagonal.is_one(), "coefficient of {b}⊗1 in Δ({b}) must be 1");
        prune(rhs)
    }

    pub fn value(&self, b: &H::Key) -> &Sparse<H::Key> {
        &self.solved[b]
    }

    pub fn element(&self, b: &H::Key) -> Element<H::Key> {
        Element::from_terms(self.value(b).clone())
    }
}

/// `Δ̄ᵏ` of a word by listing every split into `k + 1` nonempty consecutive
/// pieces.
pub fn word_reduced_iterate(w: &Word, k: usize) -> Sparse<Vec<Word>> {
    let letters = w.letters();
    let n = letters.len();
    let mut out = Sparse::new();
    if k + 1 > n {
        return out;
    }
    // choose k interior cut points out of n - 1
    for cuts in subsets_of_size(n.saturating_sub(1), k) {
        let mut bounds = vec![0];
        bounds.extend(cuts.iter().map(|c| c + 1));
        bounds.push(n);
        let pieces: Vec<Word> = bounds
            .windows(2)
            .map(|p| Word::parse(std::str::from_utf8(&letters[p[0]..p[1]]).unwrap()).unwrap())
            .collect();
        add_into(&mut out, pieces, int(1));
    }
    prune(out)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `Δ(xⁿ) = Σ C(n,k) xᵏ⊗xⁿ⁻ᵏ`.
pub fn polynomial_coproduct(n: u32) -> Sparse<Vec<Monomial>> {
    (0..=n).map(|k| (vec![Monomial(k), Monomial(n - k)], BigRational::from_integer(binomial(n, k)))).collect()
}

/// A rooted tree as a parent array: node 0 is the root and `parent[i] < i`.
#[derive(Debug, Clone)]
pub struct ParentTree {
    pub parent: Vec<usize>,
}

impl ParentTree {
    pub fn from_tree(t: &Tree) -> Self {
        fn walk(t: &Tree, parent: usize, out: &mut Vec<usize>) {
            let me = out.len();
            out.push(parent);
            for c in t.children() {
                walk(c, me, out);
            }
        }
        let mut parent = Vec::new();
        walk(t, usize::MAX, &mut parent);
        ParentTree { parent }
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(move |&i| i != 0 && self.parent[i] == v)
    }

    /// The subtree hanging at `v`, ignoring edges listed in `cut`.
    fn subtree(&self, v: usize, cut: &BTreeSet<usize>) -> Tree {
        Tree::graft(self.children(v).filter(|c| !cut.contains(c)).map(|c| self.subtree(c, cut)).collect())
    }

    fn is_ancestor(&self, a: usize, mut v: usize) -> bool {
        while v != 0 {
            v = self.parent[v];
            if v == a {
                return true;
            }
        }
        false
    }

    /// Coproduct by admissible cuts. Edges are named by their lower endpoint;
    /// a cut is admissible when no cut edge lies below another on a path to
    /// the root. The pruned forest goes left and the trunk right; the two
    /// trivial terms `T⊗1` and `1⊗T` are added explicitly.
    pub fn admissible_cut_coproduct(&self) -> Sparse<Vec<Forest>> {
        let n = self.size();
        let whole = Forest::single(self.subtree(0, &BTreeSet::new()));
        let mut out = Sparse::new();
        add_into(&mut out, vec![whole.clone(), Forest::empty()], int(1));
        add_into(&mut out, vec![Forest::empty(), whole], int(1));
        for mask in 1u64..1 << (n - 1) {
            let cut: BTreeSet<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let admissible = cut.iter().all(|&a| cut.iter().all(|&b| a == b || !self.is_ancestor(a, b)));
            if !admissible {
                continue;
            }
            let pruned = Forest::new(cut.iter().map(|&c| self.subtree(c, &cut)).collect());
            let trunk = Forest::single(self.subtree(0, &cut));
            add_into(&mut out, vec![pruned, trunk], int(1));
        }
        prune(out)
    }
}

/// `Δ` on a forest from the per-tree admissible-cut coproducts, multiplying
/// slotwise by disjoint union.
pub fn forest_coproduct_by_cuts(f: &Forest) -> Sparse<Vec<Forest>> {
    let mut acc: Sparse<Vec<Forest>> = [(vec![Forest::empty(), Forest::empty()], int(1))].into();
    for t in f.trees() {
        let d = ParentTree::from_tree(t).admissible_cut_coproduct();
        let mut next = Sparse::new();
        for (l, c) in &acc {
            for (r, e) in &d {
                add_into(&mut next, vec![l[0].union(&r[0]), l[1].union(&r[1])], c * e);
            }
        }
        acc = prune(next);
    }
    acc
}

/// All forests with exactly `n` nodes: every parent array on `n + 1` nodes is
/// a planted tree whose root's children form a forest.
pub fn forests_by_parent_arrays(n: usize) -> BTreeSet<Forest> {
    let mut out = BTreeSet::new();
    let mut parent = vec![usize::MAX; n + 1];
    fn go(i: usize, parent: &mut Vec<usize>, out: &mut BTreeSet<Forest>) {
        if i == parent.len() {
            let t = ParentTree { parent: parent.clone() }.subtree(0, &BTreeSet::new());
            out.insert(Forest::new(t.children().to_vec()));
            return;
        }
        for p in 0..i {
            parent[i] = p;
            go(i + 1, parent, out);
        }
    }
    go(1, &mut parent, &mut out);
    out
}

pub mod golden;
