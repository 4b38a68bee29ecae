//! The additive F4 view of symplectic vectors.
//!
//! With basis `{1, alpha}` of F4 over F2 the pair `(a_i, b_i)` is the symbol
//! `a_i + alpha * b_i`, so `1 = (1,0)`, `alpha = (0,1)`, `alpha^2 = 1 + alpha =
//! (1,1)`. The codes are only F2-linear, so symbol addition (XOR of the bit
//! pairs) is the only arithmetic needed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, SymplecticLayout};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum F4 {
    Zero,
    One,
    Alpha,
    AlphaSq,
}

impl F4 {
    pub const NONZERO: [F4; 3] = [F4::One, F4::Alpha, F4::AlphaSq];

    #[inline]
    #[must_use]
    pub fn from_bits(a: bool, b: bool) -> Self {
        match (a, b) {
            (false, false) => F4::Zero,
            (true, false) => F4::One,
            (false, true) => F4::Alpha,
            (true, true) => F4::AlphaSq,
        }
    }

    #[inline]
    #[must_use]
    pub fn bits(self) -> (bool, bool) {
        match self {
            F4::Zero => (false, false),
            F4::One => (true, false),
            F4::Alpha => (false, true),
            F4::AlphaSq => (true, true),
        }
    }

    #[inline]
    #[must_use]
    pub fn is_zero(self) -> bool {
        self == F4::Zero
    }
}

impl std::ops::Add for F4 {
    type Output = F4;

    fn add(self, rhs: F4) -> F4 {
        let (a1, b1) = self.bits();
        let (a2, b2) = rhs.bits();
        F4::from_bits(a1 ^ a2, b1 ^ b2)
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            F4::Zero => "0",
            F4::One => "1",
            F4::Alpha => "a",
            F4::AlphaSq => "a2",
        })
    }
}

impl FromStr for F4 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(F4::Zero),
            "1" => Ok(F4::One),
            "a" | "w" => Ok(F4::Alpha),
            "a2" | "A" | "W" => Ok(F4::AlphaSq),
            other => Err(Error::InvalidArgument(format!("unknown F4 symbol {other:?}"))),
        }
    }
}

/// A row over F4 is stored exactly like a symplectic vector.
pub type F4Row = SymplecticLayout;

/// Symbol at coordinate `i` of an F4 row.
#[inline]
#[must_use]
pub fn symbol(row: &F4Row, i: usize) -> F4 {
    let (a, b) = row.pair(i);
    F4::from_bits(a, b)
}

#[inline]
pub fn set_symbol(row: &mut F4Row, i: usize, s: F4) {
    row.set_pair(i, s.bits());
}

/// Hamming weight over F4, equal to the symplectic weight of the F2 preimage.
#[inline]
#[must_use]
pub fn gf4_weight(row: &F4Row) -> usize {
    row.weight()
}

/// A matrix over F4 held as two F2 bit planes of the same shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F4Matrix {
    plane_a: BitMatrix,
    plane_b: BitMatrix,
}

impl F4Matrix {
    /// # Panics
    ///
    /// Panics if the planes differ in shape.
    #[must_use]
    pub fn from_planes(plane_a: BitMatrix, plane_b: BitMatrix) -> Self {
        assert_eq!(plane_a.n_rows(), plane_b.n_rows(), "planes differ in row count");
        assert_eq!(plane_a.n_cols(), plane_b.n_cols(), "planes differ in column count");
        Self { plane_a, plane_b }
    }

    pub fn from_rows(n: usize, rows: &[F4Row]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.n() != n) {
            return Err(Error::InvalidArgument(format!(
                "F4 row has length {}, expected {n}",
                r.n()
            )));
        }
        Ok(Self {
            plane_a: BitMatrix::from_rows(n, rows.iter().map(F4Row::a_half).collect())?,
            plane_b: BitMatrix::from_rows(n, rows.iter().map(F4Row::b_half).collect())?,
        })
    }

    /// Parses whitespace-separated symbols (`0`, `1`, `a`, `a2`), one string per row.
    pub fn parse_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .split_whitespace()
                    .map(str::parse)
                    .collect::<Result<Vec<F4>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = parsed.first().map_or(0, Vec::len);
        let rows = parsed
            .iter()
            .map(|syms| {
                let mut row = F4Row::zeros(syms.len());
                for (i, &s) in syms.iter().enumerate() {
                    set_symbol(&mut row, i, s);
                }
                row
            })
            .collect::<Vec<_>>();
        Self::from_rows(n, &rows)
    }

    #[must_use]
    pub fn n_rows(&self) -> usize {
        self.plane_a.n_rows()
    }

    #[must_use]
    pub fn n_cols(&self) -> usize {
        self.plane_a.n_cols()
    }

    #[must_use]
    pub fn plane_a(&self) -> &BitMatrix {
        &self.plane_a
    }

    #[must_use]
    pub fn plane_b(&self) -> &BitMatrix {
        &self.plane_b
    }

    #[must_use]
    pub fn symbol(&self, r: usize, c: usize) -> F4 {
        F4::from_bits(self.plane_a.get(r, c), self.plane_b.get(r, c))
    }

    #[must_use]
    pub fn row(&self, r: usize) -> F4Row {
        F4Row::from_halves(self.plane_a.row(r), self.plane_b.row(r))
    }

    #[must_use]
    pub fn rows(&self) -> Vec<F4Row> {
        (0..self.n_rows()).map(|r| self.row(r)).collect()
    }
}

impl fmt::Display for F4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n_rows() {
            let syms: Vec<String> = (0..self.n_cols())
                .map(|c| self.symbol(r, c).to_string())
                .collect();
            writeln!(f, "{}", syms.join(" "))?;
        }
        Ok(())
    }
}

/// `(a, b) -> a + alpha b`, row by row. Needs an even column count.
pub fn to_gf4(a: &BitMatrix) -> Result<F4Matrix> {
    if !a.n_cols().is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "odd column count {}",
            a.n_cols()
        )));
    }
    let n = a.n_cols() / 2;
    let plane_a = BitMatrix::from_rows(n, a.rows().iter().map(|r| r.slice(0, n)).collect())?;
    let plane_b = BitMatrix::from_rows(n, a.rows().iter().map(|r| r.slice(n, 2 * n)).collect())?;
    Ok(F4Matrix { plane_a, plane_b })
}

/// Inverse of [`to_gf4`]: `a + alpha b -> (a, b)`.
#[must_use]
pub fn to_gf2(m: &F4Matrix) -> BitMatrix {
    let rows: Vec<BitVector> = (0..m.n_rows())
        .map(|r| m.plane_a.row(r).concat(m.plane_b.row(r)))
        .collect();
    BitMatrix::from_rows(2 * m.n_cols(), rows).expect("planes have equal width")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::symplectic_weight;

    #[test]
    fn addition_table() {
        assert_eq!(F4::One + F4::Alpha, F4::AlphaSq);
        assert_eq!(F4::Alpha + F4::AlphaSq, F4::One);
        assert_eq!(F4::AlphaSq + F4::One, F4::Alpha);
        for s in F4::NONZERO {
            assert_eq!(s + s, F4::Zero);
            assert_eq!(s + F4::Zero, s);
        }
    }

    #[test]
    fn to_gf4_examples() {
        let a = BitMatrix::parse_rows(&["10|01", "01|10", "00|11"]).unwrap();
        let m = to_gf4(&a).unwrap();
        assert_eq!(m.symbol(2, 0), F4::Alpha);
        assert_eq!(m.symbol(2, 1), F4::Alpha);

        let row = BitMatrix::parse_rows(&["0000|1011"]).unwrap();
        let expected = F4Matrix::parse_rows(&["a 0 a a"]).unwrap();
        assert_eq!(to_gf4(&row).unwrap(), expected);

        let zero = BitMatrix::zeros(3, 8);
        let z = to_gf4(&zero).unwrap();
        assert!((0..3).all(|r| z.row(r).is_zero()));

        assert!(to_gf4(&BitMatrix::zeros(1, 5)).is_err());
    }

    #[test]
    fn to_gf2_reproduces_published_rows() {
        let b4_row = F4Matrix::parse_rows(&["a2 1 a2 a2"]).unwrap();
        assert_eq!(
            to_gf2(&b4_row),
            BitMatrix::parse_rows(&["1111|1011"]).unwrap()
        );
        let d4_row = F4Matrix::parse_rows(&["a2 a2 a2 1"]).unwrap();
        assert_eq!(
            to_gf2(&d4_row),
            BitMatrix::parse_rows(&["1111|1110"]).unwrap()
        );
    }

    #[test]
    fn weight_examples() {
        let m = F4Matrix::parse_rows(&["a2 a 0 0", "0 0 0 0"]).unwrap();
        assert_eq!(gf4_weight(&m.row(0)), 2);
        assert_eq!(gf4_weight(&m.row(1)), 0);
        let f2 = to_gf2(&m);
        assert_eq!(symplectic_weight(f2.row(0)).unwrap(), 2);
    }

    #[test]
    fn symbol_parsing() {
        assert_eq!("a2".parse::<F4>().unwrap(), F4::AlphaSq);
        assert!("b".parse::<F4>().is_err());
        assert!(F4Matrix::parse_rows(&["1 1", "1"]).is_err());
    }
}
