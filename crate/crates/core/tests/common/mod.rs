#![allow(dead_code)]

use std::collections::BTreeMap;

use symdist::gf2::{symplectic_weight, BitMatrix, BitVector};

/// Every nonzero vector of the row space of `m`, found by walking all row
/// subsets. Only for small row counts.
pub fn rowspace_vectors(m: &BitMatrix) -> Vec<BitVector> {
    assert!(m.n_rows() <= 20, "too many rows for exhaustive walk");
    let mut out: Vec<BitVector> = (1u64..1 << m.n_rows())
        .map(|mask| m.combination(mask))
        .filter(|v| !v.is_zero())
        .collect();
    out.sort_by(|a, b| a.words().cmp(b.words()));
    out.dedup();
    out
}

/// Symplectic weight -> number of nonzero row-space vectors with that weight.
pub fn weight_multiset(m: &BitMatrix) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for v in rowspace_vectors(m) {
        *hist.entry(symplectic_weight(&v).unwrap()).or_insert(0) += 1;
    }
    hist
}

/// Pair-by-pair symplectic product, written out from the definition.
pub fn naive_symplectic_product(u: &BitVector, v: &BitVector) -> bool {
    let n = u.len() / 2;
    (0..n).fold(false, |acc, i| acc ^ (u.get(i) & v.get(n + i)) ^ (u.get(n + i) & v.get(i)))
}

pub fn naive_symplectic_weight(v: &BitVector) -> usize {
    let n = v.len() / 2;
    (0..n).filter(|&i| v.get(i) || v.get(n + i)).count()
}

/// Minimum symplectic weight over nonzero row-space vectors that have a
/// nonzero symplectic product with some row of `a` (all of them if `filter`
/// is off or none qualifies by shape).
pub fn oracle_distance(a: &BitMatrix, filter: bool) -> Option<usize> {
    let k = a.n_rows().saturating_sub(a.n_cols() / 2);
    rowspace_vectors(a)
        .into_iter()
        .filter(|c| !filter || k == 0 || a.rows().iter().any(|r| naive_symplectic_product(c, r)))
        .map(|c| naive_symplectic_weight(&c))
        .min()
}
