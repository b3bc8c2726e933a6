//! Word combinatorics shared by the shuffle and quasi-shuffle instances.

use std::collections::BTreeMap;

/// All `(prefix, suffix)` splittings of `w`, from the empty prefix up.
pub fn deconcatenations<L: Clone>(w: &[L]) -> impl Iterator<Item = (Vec<L>, Vec<L>)> + '_ {
    (0..=w.len()).map(move |i| (w[..i].to_vec(), w[i..].to_vec()))
}

/// Shuffle product with multiplicities: every interleaving of `u` and `v`.
pub fn shuffle<L: Clone + Ord>(u: &[L], v: &[L]) -> BTreeMap<Vec<L>, u64> {
    suffix_products(u, v, None::<fn(&L, &L) -> L>)
}

/// Quasi-shuffle product: interleavings plus merges of one letter from each
/// side by `merge`.
pub fn quasi_shuffle<L, F>(u: &[L], v: &[L], merge: F) -> BTreeMap<Vec<L>, u64>
where
    L: Clone + Ord,
    F: Fn(&L, &L) -> L,
{
    suffix_products(u, v, Some(merge))
}

/// Dynamic program over suffixes: `table[i][j]` holds the product of
/// `u[i..]` and `v[j..]`, built from the back.
fn suffix_products<L, F>(u: &[L], v: &[L], merge: Option<F>) -> BTreeMap<Vec<L>, u64>
where
    L: Clone + Ord,
    F: Fn(&L, &L) -> L,
{
    let (n, m) = (u.len(), v.len());
    let mut table: Vec<Vec<BTreeMap<Vec<L>, u64>>> = vec![vec![BTreeMap::new(); m + 1]; n + 1];
    table[n][m].insert(Vec::new(), 1);

    fn prepend<L: Clone + Ord>(out: &mut BTreeMap<Vec<L>, u64>, letter: &L, from: &BTreeMap<Vec<L>, u64>) {
        for (w, c) in from {
            let mut word = Vec::with_capacity(w.len() + 1);
            word.push(letter.clone());
            word.extend(w.iter().cloned());
            *out.entry(word).or_insert(0) += c;
        }
    }

    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            if i == n && j == m {
                continue;
            }
            let mut cell = BTreeMap::new();
            if i < n {
                prepend(&mut cell, &u[i], &table[i + 1][j]);
            }
            if j < m {
                prepend(&mut cell, &v[j], &table[i][j + 1]);
            }
            if let (Some(merge), true) = (&merge, i < n && j < m) {
                prepend(&mut cell, &merge(&u[i], &v[j]), &table[i + 1][j + 1]);
            }
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[0][0])
}

/// All words of length exactly `len` over `letters`, in lexicographic order.
pub fn words_of_length<L: Clone>(letters: &[L], len: usize) -> Vec<Vec<L>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |l| {
                    let mut w = w.clone();
                    w.push(l.clone());
                    w
                })
            })
            .collect();
    }
    out
}
