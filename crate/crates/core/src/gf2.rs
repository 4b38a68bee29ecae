//! Bit-packed vectors and matrices over F2, plus the symplectic primitives.
//!
//! A symplectic vector `(a, b)` of length `2n` is stored in a [`BitVector`] as
//! the concatenation `a || b`: bit `i` is `a_i` and bit `n + i` is `b_i`.
//! [`SymplecticLayout`] holds the same vector with the halves in separate word
//! arrays, so the symplectic weight is one OR and one popcount per word.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A dense vector over F2. Padding bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    /// Builds a vector from an iterator of bits; the length is the number of items.
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % WORD_BITS == 0 {
                words.push(0);
            }
            if bit {
                words[len / WORD_BITS] |= 1 << (len % WORD_BITS);
            }
            len += 1;
        }
        Self { words, len }
    }

    /// Vector of length `len` with ones exactly at `indices`.
    ///
    /// # Panics
    ///
    /// Panics if an index is out of range.
    #[must_use]
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    /// Wraps raw words. Padding bits are cleared.
    ///
    /// # Panics
    ///
    /// Panics if `words` does not hold exactly `ceil(len / 64)` words.
    #[must_use]
    pub fn from_words(len: usize, words: Vec<u64>) -> Self {
        assert_eq!(words.len(), words_for(len), "word count does not match length");
        let mut v = Self { words, len };
        v.clear_padding();
        v
    }

    #[inline]
    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    #[must_use]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// # Panics
    ///
    /// Panics if `i >= len`.
    #[inline]
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    ///
    /// Panics if `i >= len`.
    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        let v = self.get(i);
        self.set(i, !v);
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[must_use]
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + bit)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Copy of bits `start..end`.
    #[must_use]
    pub fn slice(&self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= self.len, "slice {start}..{end} out of range");
        Self::from_bits((start..end).map(|i| self.get(i)))
    }

    #[must_use]
    pub fn concat(&self, other: &Self) -> Self {
        Self::from_bits(self.iter().chain(other.iter()))
    }

    /// Lowest set bit, if any.
    #[must_use]
    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    /// `self ^= other` without length checks beyond a debug assertion.
    #[inline]
    pub(crate) fn xor_in_place(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Parity of `popcount(self & other)`, the Euclidean inner product.
    #[must_use]
    pub fn dot(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            & 1
            == 1
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in self.iter() {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    /// Parses a string of `0`/`1`; whitespace and `|` separators are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() || c == '|' => {}
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "character {other:?} at position {i} is not a bit"
                    )))
                }
            }
        }
        Ok(Self::from_bits(bits))
    }
}

/// Number of set bits.
#[must_use]
pub fn hamming_weight(v: &BitVector) -> usize {
    v.count_ones()
}

/// Number of coordinate pairs `i` with `a_i != 0` or `b_i != 0`.
pub fn symplectic_weight(v: &BitVector) -> Result<usize> {
    Ok(SymplecticLayout::from_vector(v)?.weight())
}

/// `(a, b) . (c, d) = a.d + b.c` over F2.
pub fn symplectic_inner_product(u: &BitVector, v: &BitVector) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::InvalidArgument(format!(
            "length mismatch: {} vs {}",
            u.len(),
            v.len()
        )));
    }
    let u = SymplecticLayout::from_vector(u)?;
    let v = SymplecticLayout::from_vector(v)?;
    Ok(u.inner_product(&v))
}

/// `acc ^= row`, word by word.
pub fn xor_accumulate(acc: &mut BitVector, row: &BitVector) -> Result<()> {
    if acc.len() != row.len() {
        return Err(Error::InvalidArgument(format!(
            "length mismatch: {} vs {}",
            acc.len(),
            row.len()
        )));
    }
    acc.xor_in_place(row);
    Ok(())
}

/// A length-`2n` symplectic vector with its halves in separate word arrays.
///
/// Coordinate pair `i` is `(bit i of a, bit i of b)`. Viewed over F4 the same
/// pair is the symbol `a_i + alpha * b_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticLayout {
    n: usize,
    a: Vec<u64>,
    b: Vec<u64>,
}

impl SymplecticLayout {
    #[must_use]
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            a: vec![0; words_for(n)],
            b: vec![0; words_for(n)],
        }
    }

    /// Splits a concatenated `a || b` vector. Fails on odd length.
    pub fn from_vector(v: &BitVector) -> Result<Self> {
        if !v.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "symplectic vector has odd length {}",
                v.len()
            )));
        }
        let n = v.len() / 2;
        Ok(Self::from_halves(&v.slice(0, n), &v.slice(n, 2 * n)))
    }

    /// # Panics
    ///
    /// Panics if the halves differ in length.
    #[must_use]
    pub fn from_halves(a: &BitVector, b: &BitVector) -> Self {
        assert_eq!(a.len(), b.len(), "halves differ in length");
        Self {
            n: a.len(),
            a: a.words().to_vec(),
            b: b.words().to_vec(),
        }
    }

    #[must_use]
    pub fn to_vector(&self) -> BitVector {
        self.a_half().concat(&self.b_half())
    }

    #[must_use]
    pub fn a_half(&self) -> BitVector {
        BitVector::from_words(self.n, self.a.clone())
    }

    #[must_use]
    pub fn b_half(&self) -> BitVector {
        BitVector::from_words(self.n, self.b.clone())
    }

    #[inline]
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    #[must_use]
    pub fn a_words(&self) -> &[u64] {
        &self.a
    }

    #[inline]
    #[must_use]
    pub fn b_words(&self) -> &[u64] {
        &self.b
    }

    /// The bit pair `(a_i, b_i)`.
    #[inline]
    #[must_use]
    pub fn pair(&self, i: usize) -> (bool, bool) {
        assert!(i < self.n, "pair index {i} out of range for n = {}", self.n);
        let (w, s) = (i / WORD_BITS, i % WORD_BITS);
        ((self.a[w] >> s) & 1 == 1, (self.b[w] >> s) & 1 == 1)
    }

    #[inline]
    pub fn set_pair(&mut self, i: usize, (a, b): (bool, bool)) {
        assert!(i < self.n, "pair index {i} out of range for n = {}", self.n);
        let (w, mask) = (i / WORD_BITS, 1u64 << (i % WORD_BITS));
        self.a[w] = if a { self.a[w] | mask } else { self.a[w] & !mask };
        self.b[w] = if b { self.b[w] | mask } else { self.b[w] & !mask };
    }

    #[inline]
    #[must_use]
    pub fn weight(&self) -> usize {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    #[inline]
    #[must_use]
    pub fn inner_product(&self, other: &Self) -> bool {
        let mut parity = 0u32;
        for w in 0..self.a.len() {
            parity ^= (self.a[w] & other.b[w]).count_ones() ^ (self.b[w] & other.a[w]).count_ones();
        }
        parity & 1 == 1
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        for (x, y) in self.a.iter_mut().zip(&other.a) {
            *x ^= y;
        }
        for (x, y) in self.b.iter_mut().zip(&other.b) {
            *x ^= y;
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&w| w == 0)
    }
}

/// A dense matrix over F2 stored as a list of equal-length rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    n_cols: usize,
}

impl BitMatrix {
    /// An empty matrix with `n_cols` columns and no rows.
    #[must_use]
    pub fn new(n_cols: usize) -> Self {
        Self {
            rows: Vec::new(),
            n_cols,
        }
    }

    #[must_use]
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self {
            rows: vec![BitVector::zeros(n_cols); n_rows],
            n_cols,
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitVector::from_indices(n, &[i])).collect(),
            n_cols: n,
        }
    }

    pub fn from_rows(n_cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n_cols) {
            return Err(Error::InvalidArgument(format!(
                "row {i} has length {}, expected {n_cols}",
                r.len()
            )));
        }
        Ok(Self { rows, n_cols })
    }

    /// Parses rows written as `0`/`1` strings (separators allowed, see [`BitVector::from_str`]).
    pub fn parse_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<BitVector>>>()?;
        let n_cols = rows.first().map_or(0, BitVector::len);
        Self::from_rows(n_cols, rows)
    }

    #[inline]
    #[must_use]
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    #[must_use]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    #[must_use]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    #[must_use]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    #[must_use]
    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    #[inline]
    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<()> {
        if row.len() != self.n_cols {
            return Err(Error::InvalidArgument(format!(
                "row has length {}, expected {}",
                row.len(),
                self.n_cols
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    /// `row[dst] ^= row[src]`.
    pub fn add_row(&mut self, dst: usize, src: usize) {
        assert_ne!(dst, src, "adding a row to itself zeroes it");
        let (d, s) = if dst < src {
            let (lo, hi) = self.rows.split_at_mut(src);
            (&mut lo[dst], &hi[0])
        } else {
            let (lo, hi) = self.rows.split_at_mut(dst);
            (&mut hi[0], &lo[src])
        };
        d.xor_in_place(s);
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        self.rows.swap(i, j);
    }

    /// Matrix formed by the given rows, in the given order.
    #[must_use]
    pub fn select_rows(&self, indices: &[usize]) -> Self {
        Self {
            rows: indices.iter().map(|&i| self.rows[i].clone()).collect(),
            n_cols: self.n_cols,
        }
    }

    /// Row combination `sum_{i in mask} row_i` for a bit mask over the first 64 rows.
    #[must_use]
    pub fn combination(&self, mask: u64) -> BitVector {
        let mut acc = BitVector::zeros(self.n_cols);
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            acc.xor_in_place(&self.rows[i]);
            m &= m - 1;
        }
        acc
    }

    #[must_use]
    pub fn echelon(&self) -> Echelon {
        Echelon::new(self)
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of `{x : M x^T = 0}`, the right kernel, as rows.
    #[must_use]
    pub fn nullspace(&self) -> BitMatrix {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.n_cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.n_cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVector::zeros(self.n_cols);
            v.set(free, true);
            // Reduced rows have a single pivot each, so x_pivot = row[free].
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        BitMatrix {
            rows: basis,
            n_cols: self.n_cols,
        }
    }

    /// Rows stacked below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.n_cols != other.n_cols {
            return Err(Error::InvalidArgument(format!(
                "column mismatch: {} vs {}",
                self.n_cols, other.n_cols
            )));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self {
            rows,
            n_cols: self.n_cols,
        })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.n_rows(), self.n_cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form of a matrix: one row per pivot, each pivot column
/// holding a single one.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
    n_cols: usize,
}

impl Echelon {
    #[must_use]
    pub fn new(m: &BitMatrix) -> Self {
        let mut rows: Vec<BitVector> = m.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..m.n_cols {
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    row.xor_in_place(&pivot_row);
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(next);
        Self {
            rows,
            pivots,
            n_cols: m.n_cols,
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    #[must_use]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    /// Remainder of `v` after eliminating every pivot column.
    #[must_use]
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_in_place(row);
            }
        }
        r
    }

    #[must_use]
    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.n_cols && self.reduce(v).is_zero()
    }
}

/// True iff `v` is an F2-combination of the rows of `m`.
#[must_use]
pub fn in_rowspace(m: &BitMatrix, v: &BitVector) -> bool {
    m.echelon().contains(v)
}

/// Swaps the halves of a length-`2n` vector: `(a, b) -> (b, a)`.
#[must_use]
pub(crate) fn swap_halves(v: &BitVector) -> BitVector {
    let n = v.len() / 2;
    v.slice(n, 2 * n).concat(&v.slice(0, n))
}

/// Basis of the symplectic dual of the row space of `a`.
///
/// For a normalizer matrix with `n + k` independent rows this is a basis of
/// the stabilizer code, `n - k` vectors. Requires independent rows.
pub fn symplectic_dual_basis(a: &BitMatrix) -> Result<BitMatrix> {
    if !a.n_cols().is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "odd column count {}",
            a.n_cols()
        )));
    }
    let rank = a.rank();
    if rank != a.n_rows() {
        return Err(Error::RankDeficient {
            rank,
            expected: a.n_rows(),
        });
    }
    // <v, (c, d)> = a.d + b.c = v . (d, c), so the dual is the Euclidean kernel
    // of the half-swapped rows.
    let swapped = BitMatrix {
        rows: a.rows.iter().map(swap_halves).collect(),
        n_cols: a.n_cols(),
    };
    Ok(swapped.nullspace())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn example_a() -> BitMatrix {
        BitMatrix::parse_rows(&["10|01", "01|10", "00|11"]).unwrap()
    }

    #[test]
    fn symplectic_weight_examples() {
        assert_eq!(symplectic_weight(&v("10|10")).unwrap(), 1);
        assert_eq!(symplectic_weight(&BitVector::zeros(10)).unwrap(), 0);
        assert_eq!(symplectic_weight(&v("1111|0000")).unwrap(), 4);
        assert!(symplectic_weight(&v("101")).is_err());
    }

    #[test]
    fn hamming_weight_examples() {
        assert_eq!(hamming_weight(&v("100111")), 4);
        assert_eq!(hamming_weight(&BitVector::zeros(7)), 0);
        // (1,0|0,1) -> (1,0,0,1,1,1)
        let image = v("10|01|11");
        assert_eq!(hamming_weight(&image), 4);
        assert_eq!(2 * symplectic_weight(&v("10|01")).unwrap(), 4);
    }

    #[test]
    fn inner_product_examples() {
        let a = example_a();
        assert!(symplectic_inner_product(a.row(0), a.row(2)).unwrap());
        for r in a.rows() {
            assert!(!symplectic_inner_product(r, r).unwrap());
        }
        assert!(symplectic_inner_product(&v("10|01"), &v("100|001")).is_err());
        assert!(symplectic_inner_product(&v("101"), &v("011")).is_err());
    }

    #[test]
    fn xor_accumulate_examples() {
        let r = v("10|01");
        let mut acc = BitVector::zeros(4);
        xor_accumulate(&mut acc, &r).unwrap();
        assert_eq!(acc, r);
        xor_accumulate(&mut acc, &r).unwrap();
        assert!(acc.is_zero());
        let mut acc = v("10|01");
        xor_accumulate(&mut acc, &v("00|11")).unwrap();
        assert_eq!(acc, v("10|10"));
        assert!(xor_accumulate(&mut acc, &v("101")).is_err());
    }

    #[test]
    fn dual_basis_of_worked_example() {
        // Oracle: every x in F2^4 with <x, row> = 0 for all rows.
        let a = example_a();
        let brute: Vec<BitVector> = (1u32..16)
            .map(|x| BitVector::from_bits((0..4).map(|i| (x >> i) & 1 == 1)))
            .filter(|x| {
                a.rows()
                    .iter()
                    .all(|r| !symplectic_inner_product(x, r).unwrap())
            })
            .collect();
        assert_eq!(brute, vec![v("11|11")]);
        let dual = symplectic_dual_basis(&a).unwrap();
        assert_eq!(dual.rows(), &[v("11|11")]);
    }

    #[test]
    fn dual_basis_of_self_dual_seed() {
        let mut a = BitMatrix::new(6);
        for i in 0..3 {
            a.push_row(BitVector::from_indices(6, &[i])).unwrap();
        }
        let dual = symplectic_dual_basis(&a).unwrap();
        assert_eq!(dual.n_rows(), 3);
        assert_eq!(dual.rank(), 3);
        for r in dual.rows() {
            assert!(in_rowspace(&a, r));
        }
    }

    #[test]
    fn dual_basis_rejects_dependent_rows() {
        let a = BitMatrix::parse_rows(&["10|01", "10|01"]).unwrap();
        assert!(matches!(
            symplectic_dual_basis(&a),
            Err(Error::RankDeficient { rank: 1, expected: 2 })
        ));
    }

    #[test]
    fn rowspace_membership() {
        let a = example_a();
        for r in a.rows() {
            assert!(in_rowspace(&a, r));
        }
        assert!(in_rowspace(&a, &v("11|11")));
        let e = BitMatrix::parse_rows(&["1000", "0100"]).unwrap();
        assert!(!in_rowspace(&e, &v("0010")));
        assert!(!in_rowspace(&e, &v("10")));
    }

    #[test]
    fn nullspace_is_orthogonal_and_complete() {
        let m = BitMatrix::parse_rows(&["110010", "011001", "101011"]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.n_rows() + m.rank(), 6);
        for x in ns.rows() {
            for r in m.rows() {
                assert!(!x.dot(r));
            }
        }
    }

    #[test]
    fn padding_stays_clear() {
        let mut x = BitVector::from_words(70, vec![u64::MAX, u64::MAX]);
        assert_eq!(x.count_ones(), 70);
        x.set(69, false);
        assert_eq!(x.count_ones(), 69);
        assert_eq!(x.words()[1] >> 6, 0);
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let n = 100;
        let mut x = BitVector::zeros(2 * n);
        x.set(3, true);
        x.set(n + 3, true);
        x.set(n + 99, true);
        assert_eq!(symplectic_weight(&x).unwrap(), 2);
        let layout = SymplecticLayout::from_vector(&x).unwrap();
        assert_eq!(layout.pair(3), (true, true));
        assert_eq!(layout.pair(99), (false, true));
        assert_eq!(layout.to_vector(), x);
    }
}
