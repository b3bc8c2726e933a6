//! The Connes–Kreimer Hopf algebra of rooted forests.
//!
//! Forests multiply by disjoint union. The coproduct of a tree sums over
//! admissible cuts with the pruned part on the left and the root part on the
//! right; it is computed from the grafting recursion
//! `Δ(B⁺(f)) = B⁺(f)⊗1 + (id⊗B⁺)Δ(f)` and extended multiplicatively.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use num::Zero;

use crate::coalgebra::Coalgebra;
use crate::freemod::{scalar, BasisKey, Element, Scalar, Tensor};
use crate::hopf::Bialgebra;

/// A rooted tree in canonical form: children sorted ascending, with trees
/// ordered by vertex count and then by their child lists.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tree {
    size: usize,
    children: Vec<Tree>,
}

impl Tree {
    pub fn leaf() -> Self {
        Tree { size: 1, children: Vec::new() }
    }

    /// `B⁺`: a new root above the given subtrees, in any order.
    pub fn graft(mut children: Vec<Tree>) -> Self {
        children.sort();
        let size = 1 + children.iter().map(|t| t.size).sum::<usize>();
        Tree { size, children }
    }

    /// The ladder with `n ≥ 1` vertices.
    pub fn ladder(n: usize) -> Self {
        assert!(n >= 1);
        (1..n).fold(Tree::leaf(), |t, _| Tree::graft(vec![t]))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    /// Parses one `T[...]` literal at the start of `s`, returning it with the
    /// number of bytes consumed.
    pub fn parse_prefix(s: &str) -> Option<(Tree, usize)> {
        let bytes = s.as_bytes();
        if !s.starts_with("T[") {
            return None;
        }
        let mut pos = 2;
        let mut children = Vec::new();
        if bytes.get(pos) == Some(&b']') {
            return Some((Tree::leaf(), pos + 1));
        }
        loop {
            let (child, used) = Tree::parse_prefix(&s[pos..])?;
            children.push(child);
            pos += used;
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b']') => return Some((Tree::graft(children), pos + 1)),
                _ => return None,
            }
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T[")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A multiset of trees, kept sorted. The empty forest is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Forest {
    size: usize,
    trees: Vec<Tree>,
}

impl Forest {
    pub fn empty() -> Self {
        Forest { size: 0, trees: Vec::new() }
    }

    pub fn new(mut trees: Vec<Tree>) -> Self {
        trees.sort();
        let size = trees.iter().map(|t| t.size).sum();
        Forest { size, trees }
    }

    pub fn single(tree: Tree) -> Self {
        Forest::new(vec![tree])
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn union(&self, other: &Forest) -> Forest {
        Forest::new(self.trees.iter().chain(&other.trees).cloned().collect())
    }

    /// Parses a nonempty `T[..]*T[..]*…` (no whitespace) at the start of `s`.
    pub fn parse_prefix(s: &str) -> Option<(Forest, usize)> {
        let (first, mut pos) = Tree::parse_prefix(s)?;
        let mut trees = vec![first];
        while s[pos..].starts_with("*T[") {
            match Tree::parse_prefix(&s[pos + 1..]) {
                Some((t, used)) => {
                    trees.push(t);
                    pos += 1 + used;
                }
                None => break,
            }
        }
        Some((Forest::new(trees), pos))
    }

    /// Whole-string parse; `1` is the empty forest.
    pub fn parse(s: &str) -> Option<Forest> {
        if s == "1" {
            return Some(Forest::empty());
        }
        match Forest::parse_prefix(s) {
            Some((f, used)) if used == s.len() => Some(f),
            _ => None,
        }
    }
}

impl BasisKey for Forest {
    fn degree(&self) -> usize {
        self.size
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trees.is_empty() {
            return write!(f, "1");
        }
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Slotwise disjoint union of two arity-2 forest tensors.
fn multiply_pairs(a: &Tensor<Forest>, b: &Tensor<Forest>) -> Tensor<Forest> {
    let mut out = Tensor::zero(2);
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            out.add_term(vec![x[0].union(&y[0]), x[1].union(&y[1])], cx * cy);
        }
    }
    out
}

/// Rooted trees on exactly `n` vertices are `B⁺` of forests on `n − 1`.
fn enumerate_forests(max_size: usize) -> Vec<Vec<Forest>> {
    let mut forests: Vec<Vec<Forest>> = vec![vec![Forest::empty()]];
    let mut trees: Vec<Tree> = Vec::new();
    for n in 1..=max_size {
        let mut new_trees: Vec<Tree> = forests[n - 1].iter().map(|f| Tree::graft(f.trees.clone())).collect();
        new_trees.sort();
        trees.extend(new_trees);

        let mut out = Vec::new();
        let mut stack = Vec::new();
        multisets(&trees, n, 0, &mut stack, &mut out);
        out.sort();
        forests.push(out);
    }
    forests
}

fn multisets(trees: &[Tree], remaining: usize, start: usize, stack: &mut Vec<Tree>, out: &mut Vec<Forest>) {
    if remaining == 0 {
        out.push(Forest::new(stack.clone()));
        return;
    }
    for (i, t) in trees.iter().enumerate().skip(start) {
        if t.size > remaining {
            break;
        }
        stack.push(t.clone());
        multisets(trees, remaining - t.size, i, stack, out);
        stack.pop();
    }
}

#[derive(Debug, Default)]
pub struct ConnesKreimer {
    tree_coproducts: Mutex<BTreeMap<Tree, Tensor<Forest>>>,
}

impl ConnesKreimer {
    pub fn new() -> Self {
        Self::default()
    }

    fn tree_coproduct(&self, t: &Tree) -> Tensor<Forest> {
        if let Some(hit) = self.tree_coproducts.lock().expect("poisoned").get(t) {
            return hit.clone();
        }
        let below = self.forest_coproduct(&Forest::new(t.children.clone()));
        let mut out = Tensor::pure(vec![Forest::single(t.clone()), Forest::empty()]);
        for (keys, c) in below.terms() {
            let root = Forest::single(Tree::graft(keys[1].trees.clone()));
            out.add_term(vec![keys[0].clone(), root], c.clone());
        }
        self.tree_coproducts.lock().expect("poisoned").insert(t.clone(), out.clone());
        out
    }

    fn forest_coproduct(&self, f: &Forest) -> Tensor<Forest> {
        f.trees.iter().fold(Tensor::pure(vec![Forest::empty(), Forest::empty()]), |acc, t| {
            multiply_pairs(&acc, &self.tree_coproduct(t))
        })
    }
}

impl Coalgebra for ConnesKreimer {
    type Key = Forest;

    fn name(&self) -> &'static str {
        "ck"
    }

    fn unit_key(&self) -> Forest {
        Forest::empty()
    }

    fn coproduct_basis(&self, key: &Forest) -> Tensor<Forest> {
        self.forest_coproduct(key)
    }

    fn counit_basis(&self, key: &Forest) -> Scalar {
        if key.trees.is_empty() {
            scalar(1)
        } else {
            Scalar::zero()
        }
    }

    fn enumerate_basis(&self, degree_bound: usize) -> Vec<Forest> {
        enumerate_forests(degree_bound).into_iter().flatten().collect()
    }
}

impl Bialgebra for ConnesKreimer {
    fn product_basis(&self, a: &Forest, b: &Forest) -> Element<Forest> {
        Element::basis(a.union(b))
    }
}
