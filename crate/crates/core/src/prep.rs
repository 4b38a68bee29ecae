//! Generator matrices prepared for the enumeration engine.
//!
//! Every prepared matrix is a [`PackagedGamma`]: a generator matrix whose rows
//! are grouped into packages. A package is either a single row or three rows
//! `r_a, r_b, r_a + r_b`, and owns a pivot coordinate where any sum that takes
//! exactly one member of the package is nonzero, whatever rows of other
//! packages are added. A sum drawing one row from each of `g` packages
//! therefore has weight at least `g`, and every codeword is such a sum for a
//! unique set of packages.
//!
//! No column is ever moved. Pivots are tracked by index, so prepared matrices
//! live in the coordinates of the input matrix.

use std::collections::BTreeSet;

use crate::error::{Error, Result, Violation};
use crate::gf2::{BitMatrix, BitVector, SymplecticLayout};
use crate::gf4::{symbol, F4Matrix, F4Row, F4};

/// Which weight the engine minimizes for a prepared matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    /// Symplectic weight of a length-`2n` vector.
    Symplectic,
    /// Hamming weight.
    Hamming,
}

/// A group of one or three rows sharing a pivot coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Package {
    /// Row indices: `[pivot]` or `[a, b, a + b]`.
    pub rows: Vec<usize>,
    /// Pivot coordinate (pair index in symplectic mode, column in Hamming
    /// mode). `None` for rows of an information-set matrix outside its
    /// information set.
    pub pivot: Option<usize>,
}

impl Package {
    #[must_use]
    pub fn single(row: usize, pivot: Option<usize>) -> Self {
        Self {
            rows: vec![row],
            pivot,
        }
    }

    #[must_use]
    pub fn triple(a: usize, b: usize, sum: usize, pivot: usize) -> Self {
        Self {
            rows: vec![a, b, sum],
            pivot: Some(pivot),
        }
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Coordinates left without a pivot by the first F4 diagonalization.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrincipalColumns {
    indices: BTreeSet<usize>,
}

impl PrincipalColumns {
    #[must_use]
    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Self {
            indices: indices.into_iter().collect(),
        }
    }

    #[must_use]
    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// A generator matrix with its package partition.
#[derive(Clone, Debug)]
pub struct PackagedGamma {
    matrix: BitMatrix,
    packages: Vec<Package>,
    mode: WeightMode,
    basis_len: usize,
    rank_deficit: usize,
    principal: Option<PrincipalColumns>,
}

impl PackagedGamma {
    /// Assembles a prepared matrix and checks that packages are disjoint, cover
    /// every row, and that each triple is closed under addition.
    pub fn from_parts(
        matrix: BitMatrix,
        packages: Vec<Package>,
        mode: WeightMode,
        basis_len: usize,
    ) -> Result<Self> {
        let mut seen = vec![false; matrix.n_rows()];
        for p in &packages {
            if p.len() != 1 && p.len() != 3 {
                return Err(Error::InvalidArgument(format!(
                    "package of size {} (must be 1 or 3)",
                    p.len()
                )));
            }
            for &r in &p.rows {
                if r >= seen.len() || seen[r] {
                    return Err(Error::InvalidArgument(format!(
                        "row {r} is out of range or in two packages"
                    )));
                }
                seen[r] = true;
            }
            if p.len() == 3 {
                let mut sum = matrix.row(p.rows[0]).clone();
                sum.xor_in_place(matrix.row(p.rows[1]));
                if &sum != matrix.row(p.rows[2]) {
                    return Err(Error::InvalidArgument(format!(
                        "package {:?}: third row is not the sum of the first two",
                        p.rows
                    )));
                }
            }
        }
        if let Some(r) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidArgument(format!("row {r} is in no package")));
        }
        if mode == WeightMode::Symplectic && !matrix.n_cols().is_multiple_of(2) {
            return Err(Error::InvalidArgument(
                "symplectic mode needs an even column count".into(),
            ));
        }
        Ok(Self {
            matrix,
            packages,
            mode,
            basis_len,
            rank_deficit: 0,
            principal: None,
        })
    }

    /// Every row of `matrix` as its own package, without pivots.
    ///
    /// This is the plain generator-matrix view with no structure behind it, so
    /// lower bounds computed from it are only as good as the input's rows.
    #[must_use]
    pub fn singletons(matrix: BitMatrix, mode: WeightMode) -> Self {
        let packages = (0..matrix.n_rows()).map(|r| Package::single(r, None)).collect();
        let basis_len = matrix.n_rows();
        Self {
            matrix,
            packages,
            mode,
            basis_len,
            rank_deficit: 0,
            principal: None,
        }
    }

    #[must_use]
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    #[must_use]
    pub fn packages(&self) -> &[Package] {
        &self.packages
    }

    #[must_use]
    pub fn mode(&self) -> WeightMode {
        self.mode
    }

    /// Number of packages.
    #[must_use]
    pub fn n_p(&self) -> usize {
        self.packages.len()
    }

    /// Packages pivoted on principal columns; `n_p` when no principal split applies.
    #[must_use]
    pub fn n_pp(&self) -> usize {
        match &self.principal {
            None => self.n_p(),
            Some(pc) => self
                .packages
                .iter()
                .filter(|p| p.pivot.is_some_and(|c| pc.contains(c)))
                .count(),
        }
    }

    #[must_use]
    pub fn principal_columns(&self) -> Option<&PrincipalColumns> {
        self.principal.as_ref()
    }

    /// `(n + k) - rank` on the information set, for Hamming-mode matrices.
    #[must_use]
    pub fn rank_deficit(&self) -> usize {
        self.rank_deficit
    }

    /// Half-length `n` of a symplectic-mode matrix.
    #[must_use]
    pub fn half_len(&self) -> usize {
        self.matrix.n_cols() / 2
    }

    /// The leading rows that form a basis of the generated code; the rest are
    /// appended package sums.
    #[must_use]
    pub fn basis(&self) -> BitMatrix {
        self.matrix
            .select_rows(&(0..self.basis_len).collect::<Vec<_>>())
    }

    /// Checks the pivot property of every package against the matrix.
    ///
    /// Symplectic mode, triple at pair `c`: the three rows carry the three
    /// nonzero F4 symbols and every other row is zero there. Single at `c`:
    /// the pivot row carries some `x != 0` and every other row carries `0` or
    /// one fixed `y != x`. Hamming mode: the pivot row has a one at the pivot
    /// column and every other row a zero.
    pub fn check_structure(&self) -> std::result::Result<(), String> {
        let m = &self.matrix;
        for p in &self.packages {
            let Some(c) = p.pivot else { continue };
            match self.mode {
                WeightMode::Hamming => {
                    let r0 = p.rows[0];
                    if p.len() != 1 || !m.get(r0, c) {
                        return Err(format!("row {r0}: no unit pivot at column {c}"));
                    }
                    if let Some(r) = (0..m.n_rows()).find(|&r| r != r0 && m.get(r, c)) {
                        return Err(format!("row {r} is nonzero at pivot column {c}"));
                    }
                }
                WeightMode::Symplectic => {
                    let n = self.half_len();
                    let sym = |r: usize| F4::from_bits(m.get(r, c), m.get(r, n + c));
                    let others = (0..m.n_rows()).filter(|r| !p.rows.contains(r));
                    if p.len() == 3 {
                        let s: BTreeSet<F4> = p.rows.iter().map(|&r| sym(r)).collect();
                        if s.len() != 3 || p.rows.iter().any(|&r| sym(r).is_zero()) {
                            return Err(format!("package {:?}: symbols at pair {c} not distinct nonzero", p.rows));
                        }
                        if let Some(r) = others.clone().find(|&r| !sym(r).is_zero()) {
                            return Err(format!("row {r} is nonzero at triple pivot pair {c}"));
                        }
                    } else {
                        let x = sym(p.rows[0]);
                        if x.is_zero() {
                            return Err(format!("pivot row {} is zero at pair {c}", p.rows[0]));
                        }
                        let values: BTreeSet<F4> = others.map(sym).filter(|s| !s.is_zero()).collect();
                        if values.len() > 1 || values.contains(&x) {
                            return Err(format!("pair {c}: other rows carry {values:?} against pivot {x}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Paired-column diagonalization over F2.
///
/// Produces `(I_n | M1 ; 0 | M2)` in the sense that every coordinate pair gets
/// a pivot row in one of its two halves, followed by the `k` rows of `M2`,
/// reduced so each `M2` pivot column is zero in every other row, and then `k`
/// appended rows `row_{j_i} + M2_i`. Rows `0..n+k` span the row space of `a`.
pub fn diagonalize_f2(a: &BitMatrix) -> Result<PackagedGamma> {
    if !a.n_cols().is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "odd column count {}",
            a.n_cols()
        )));
    }
    let n = a.n_cols() / 2;
    let m = a.n_rows();
    let rank = a.rank();
    if rank < m {
        return Err(Error::RankDeficient { rank, expected: m });
    }
    if m < n {
        return Err(Error::Validation(Violation::Shape { rows: m, n }));
    }

    let mut rows: Vec<BitVector> = a.rows().to_vec();
    let mut processed = vec![false; m];
    let mut pair_pivot = Vec::with_capacity(n);
    // Column of each pair that holds the identity part; the other is its mirror.
    let mut identity_col = Vec::with_capacity(n);

    for i in 0..n {
        let found = [i, n + i].into_iter().find_map(|col| {
            (0..m)
                .find(|&r| !processed[r] && rows[r].get(col))
                .map(|r| (col, r))
        });
        let Some((col, p)) = found else {
            return Err(Error::Validation(Violation::NoPivot { pair: i }));
        };
        eliminate(&mut rows, p, col);
        processed[p] = true;
        pair_pivot.push(p);
        identity_col.push(col);
    }

    let mut m2: Vec<(usize, usize)> = Vec::new();
    for (j, &col) in identity_col.iter().enumerate() {
        let mirror = if col == j { n + j } else { j };
        if let Some(r) = (0..m).find(|&r| !processed[r] && rows[r].get(mirror)) {
            eliminate(&mut rows, r, mirror);
            processed[r] = true;
            m2.push((j, r));
        }
    }
    if let Some(r) = processed.iter().position(|&p| !p) {
        return Err(Error::Internal(format!("row {r} left without pivot at full rank")));
    }

    let mut out = BitMatrix::new(2 * n);
    for &p in &pair_pivot {
        out.push_row(rows[p].clone())?;
    }
    for &(_, r) in &m2 {
        out.push_row(rows[r].clone())?;
    }
    let mut triple_of_pair = vec![None; n];
    for (i, &(j, r)) in m2.iter().enumerate() {
        let mut sum = rows[pair_pivot[j]].clone();
        sum.xor_in_place(&rows[r]);
        out.push_row(sum)?;
        triple_of_pair[j] = Some((n + i, m + i));
    }
    let packages = (0..n)
        .map(|j| match triple_of_pair[j] {
            Some((m2_row, sum_row)) => Package::triple(j, m2_row, sum_row, j),
            None => Package::single(j, Some(j)),
        })
        .collect();
    PackagedGamma::from_parts(out, packages, WeightMode::Symplectic, m)
}

fn eliminate(rows: &mut [BitVector], pivot: usize, col: usize) {
    let pivot_row = rows[pivot].clone();
    for (r, row) in rows.iter_mut().enumerate() {
        if r != pivot && row.get(col) {
            row.xor_in_place(&pivot_row);
        }
    }
}

/// Basis rows after an F4 diagonalization, with packages as basis indices.
struct F4Diagonal {
    rows: Vec<F4Row>,
    /// `(pivot column, [a] or [a, b])`.
    packages: Vec<(usize, Vec<usize>)>,
    skipped: Vec<usize>,
}

/// Additive diagonalization over F4, visiting columns in `order`.
///
/// Only row additions are used. At each column, if the unprocessed rows show
/// two distinct nonzero symbols, the first two such rows become a triple and
/// every other row is cleared to zero; otherwise the first unprocessed
/// nonzero row becomes a single pivot with symbol `x`, and every other row is
/// brought into `{0, y}` for one fixed `y != x`. Members of earlier triples are
/// adjusted individually; their appended sums are formed at the end, which
/// keeps `a + b = sum` exact.
fn f4_diagonalize(mut rows: Vec<F4Row>, order: &[usize]) -> Result<F4Diagonal> {
    let m = rows.len();
    let mut processed = vec![false; m];
    let mut packages = Vec::new();
    let mut skipped = Vec::new();

    for &c in order {
        let sym = |rows: &[F4Row], r: usize| symbol(&rows[r], c);
        let Some(u1) = (0..m).find(|&r| !processed[r] && !sym(&rows, r).is_zero()) else {
            skipped.push(c);
            continue;
        };
        let s1 = sym(&rows, u1);
        let u2 = (u1 + 1..m).find(|&r| {
            let s = sym(&rows, r);
            !processed[r] && !s.is_zero() && s != s1
        });
        if let Some(u2) = u2 {
            let s2 = sym(&rows, u2);
            let (p1, p2) = (rows[u1].clone(), rows[u2].clone());
            for r in (0..m).filter(|&r| r != u1 && r != u2) {
                let v = sym(&rows, r);
                if v == s1 {
                    rows[r].xor_assign(&p1);
                } else if v == s2 {
                    rows[r].xor_assign(&p2);
                } else if v == s1 + s2 {
                    rows[r].xor_assign(&p1);
                    rows[r].xor_assign(&p2);
                }
            }
            processed[u1] = true;
            processed[u2] = true;
            packages.push((c, vec![u1, u2]));
        } else {
            let x = s1;
            let p = rows[u1].clone();
            let mut y: Option<F4> = None;
            for r in (0..m).filter(|&r| r != u1) {
                let v = sym(&rows, r);
                if v.is_zero() {
                    continue;
                }
                if v == x {
                    rows[r].xor_assign(&p);
                    continue;
                }
                match y {
                    None => y = Some(v),
                    Some(y0) if v == y0 => {}
                    // v = x + y
                    Some(_) => rows[r].xor_assign(&p),
                }
            }
            processed[u1] = true;
            packages.push((c, vec![u1]));
        }
    }

    let unprocessed = processed.iter().filter(|&&p| !p).count();
    if unprocessed > 0 {
        return Err(Error::RankDeficient {
            rank: m - unprocessed,
            expected: m,
        });
    }
    Ok(F4Diagonal {
        rows,
        packages,
        skipped,
    })
}

fn f4_gamma(diag: F4Diagonal, n: usize, principal: Option<PrincipalColumns>) -> Result<PackagedGamma> {
    let m = diag.rows.len();
    let mut matrix = BitMatrix::new(2 * n);
    for row in &diag.rows {
        matrix.push_row(row.to_vector())?;
    }
    let mut packages = Vec::with_capacity(diag.packages.len());
    for (c, members) in &diag.packages {
        if let [a, b] = members[..] {
            let mut sum = diag.rows[a].clone();
            sum.xor_assign(&diag.rows[b]);
            let idx = matrix.n_rows();
            matrix.push_row(sum.to_vector())?;
            packages.push(Package::triple(a, b, idx, *c));
        } else {
            packages.push(Package::single(members[0], Some(*c)));
        }
    }
    let mut gamma = PackagedGamma::from_parts(matrix, packages, WeightMode::Symplectic, m)?;
    gamma.principal = principal;
    Ok(gamma)
}

/// First F4 diagonalization, columns left to right.
///
/// Returns the prepared matrix (in F2 form, `(a, b)` per row) and the columns
/// that received no pivot.
pub fn diagonalize_f4(a4: &F4Matrix) -> Result<(PackagedGamma, PrincipalColumns)> {
    let n = a4.n_cols();
    let order: Vec<usize> = (0..n).collect();
    let diag = f4_diagonalize(a4.rows(), &order)?;
    let pc = PrincipalColumns::new(diag.skipped.iter().copied());
    Ok((f4_gamma(diag, n, None)?, pc))
}

/// Second F4 diagonalization of the basis of `b4`, with principal columns first.
///
/// Packages pivoted on principal columns are counted by
/// [`PackagedGamma::n_pp`]; the remaining columns follow in order so that the
/// result is a full package partition of the same code.
pub fn second_gamma(b4: &PackagedGamma, pc: &PrincipalColumns) -> Result<PackagedGamma> {
    if b4.mode() != WeightMode::Symplectic {
        return Err(Error::InvalidArgument("second_gamma needs a symplectic-mode matrix".into()));
    }
    let n = b4.half_len();
    if let Some(c) = pc.iter().find(|&c| c >= n) {
        return Err(Error::InvalidArgument(format!("principal column {c} out of range")));
    }
    let order: Vec<usize> = pc.iter().chain((0..n).filter(|&c| !pc.contains(c))).collect();
    let basis = b4
        .basis()
        .rows()
        .iter()
        .map(SymplecticLayout::from_vector)
        .collect::<Result<Vec<_>>>()?;
    let diag = f4_diagonalize(basis, &order)?;
    f4_gamma(diag, n, Some(pc.clone()))
}

/// `(a, b) -> (a, b, a + b)` row by row.
///
/// The Hamming weight of the image of any row combination is twice the
/// symplectic weight of the combination.
pub fn isometry_transform(a: &BitMatrix) -> Result<BitMatrix> {
    if !a.n_cols().is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "odd column count {}",
            a.n_cols()
        )));
    }
    let n = a.n_cols() / 2;
    let rows = a
        .rows()
        .iter()
        .map(|r| {
            let (x, y) = (r.slice(0, n), r.slice(n, 2 * n));
            let mut s = x.clone();
            s.xor_in_place(&y);
            x.concat(&y).concat(&s)
        })
        .collect();
    BitMatrix::from_rows(3 * n, rows)
}

/// Systematic generator matrices on pairwise-disjoint column sets.
///
/// The first matrix is systematic on the first information set found left to
/// right. Each later one is reduced using only columns not yet used as
/// pivots; rows that find no pivot stay in the matrix, zero on every unused
/// column, and their count is recorded as the rank deficit. Stops when a pass
/// finds no new pivot.
pub fn information_sets(b: &BitMatrix) -> Result<Vec<PackagedGamma>> {
    let m = b.n_rows();
    let rank = b.rank();
    if rank < m {
        return Err(Error::RankDeficient { rank, expected: m });
    }
    let mut used = vec![false; b.n_cols()];
    let mut gammas = Vec::new();
    loop {
        let mut rows = b.rows().to_vec();
        let mut pivots = Vec::new();
        for col in (0..b.n_cols()).filter(|&c| !used[c]) {
            let next = pivots.len();
            if next == m {
                break;
            }
            let Some(found) = (next..m).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            eliminate(&mut rows, next, col);
            pivots.push(col);
        }
        if pivots.is_empty() {
            break;
        }
        for &c in &pivots {
            used[c] = true;
        }
        let packages = (0..m)
            .map(|r| Package::single(r, pivots.get(r).copied()))
            .collect();
        let matrix = BitMatrix::from_rows(b.n_cols(), rows)?;
        let mut gamma = PackagedGamma::from_parts(matrix, packages, WeightMode::Hamming, m)?;
        gamma.rank_deficit = m - pivots.len();
        gammas.push(gamma);
    }
    Ok(gammas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::in_rowspace;
    use crate::gf4::{to_gf2, to_gf4};

    fn example_a() -> BitMatrix {
        BitMatrix::parse_rows(&["10|01", "01|10", "00|11"]).unwrap()
    }

    fn example_a4() -> F4Matrix {
        F4Matrix::parse_rows(&["1 1 1 1", "a 0 a a", "0 a2 a2 a2"]).unwrap()
    }

    fn same_rowspace(x: &BitMatrix, y: &BitMatrix) -> bool {
        x.rank() == y.rank()
            && x.rows().iter().all(|r| in_rowspace(y, r))
            && y.rows().iter().all(|r| in_rowspace(x, r))
    }

    #[test]
    fn f2_worked_example() {
        let g = diagonalize_f2(&example_a()).unwrap();
        let m = g.matrix();
        assert_eq!(m.n_rows(), 4);
        assert_eq!(m.row(3), &"10|10".parse::<BitVector>().unwrap());
        assert_eq!(g.n_p(), 2);
        assert_eq!(g.packages()[0], Package::triple(0, 2, 3, 0));
        assert_eq!(g.packages()[1], Package::single(1, Some(1)));
        // Row 1 is cleared at the mirror column of the triple pivot.
        assert_eq!(m.row(1), &"01|01".parse::<BitVector>().unwrap());
        assert!(same_rowspace(&g.basis(), &example_a()));
        g.check_structure().unwrap();
    }

    #[test]
    fn f2_diagonal_input_is_untouched() {
        let a = BitMatrix::parse_rows(&["100|000", "010|000", "001|000"]).unwrap();
        let g = diagonalize_f2(&a).unwrap();
        assert_eq!(g.matrix(), &a);
        assert_eq!(g.n_p(), 3);
        assert!(g.packages().iter().all(|p| p.len() == 1));
    }

    #[test]
    fn f2_uses_second_half_when_first_is_empty() {
        // Pair 0 only has a Z-part: the pivot is taken in the second half.
        let a = BitMatrix::parse_rows(&["00|10", "01|00"]).unwrap();
        let g = diagonalize_f2(&a).unwrap();
        g.check_structure().unwrap();
        assert_eq!(g.n_p(), 2);
    }

    #[test]
    fn f2_rejects_bad_input() {
        let dup = BitMatrix::parse_rows(&["10|01", "10|01"]).unwrap();
        assert!(matches!(diagonalize_f2(&dup), Err(Error::RankDeficient { .. })));
        let odd = BitMatrix::parse_rows(&["101"]).unwrap();
        assert!(matches!(diagonalize_f2(&odd), Err(Error::InvalidArgument(_))));
        // Both rows live on pair 0 and pair 1 is never pivoted.
        let no_pivot = BitMatrix::parse_rows(&["10|00", "00|10"]).unwrap();
        assert!(matches!(
            diagonalize_f2(&no_pivot),
            Err(Error::Validation(Violation::NoPivot { pair: 1 }))
        ));
    }

    #[test]
    fn f4_worked_example() {
        let (b4, pc) = diagonalize_f4(&example_a4()).unwrap();
        let expected = to_gf2(
            &F4Matrix::parse_rows(&["1 1 1 1", "a 0 a a", "0 a2 a2 a2", "a2 1 a2 a2"]).unwrap(),
        );
        assert_eq!(b4.matrix(), &expected);
        assert_eq!(b4.packages()[0], Package::triple(0, 1, 3, 0));
        assert_eq!(b4.packages()[1], Package::single(2, Some(1)));
        assert_eq!(b4.n_p(), 2);
        assert_eq!(pc, PrincipalColumns::new([2, 3]));
        b4.check_structure().unwrap();
    }

    #[test]
    fn f4_disjoint_supports_give_singletons() {
        let a4 = F4Matrix::parse_rows(&["1 0 0", "0 a 0", "0 0 a2"]).unwrap();
        let (g, pc) = diagonalize_f4(&a4).unwrap();
        assert_eq!(g.matrix().n_rows(), 3);
        assert!(g.packages().iter().all(|p| p.len() == 1));
        assert!(pc.is_empty());
    }

    #[test]
    fn f4_rejects_dependent_rows() {
        let a4 = F4Matrix::parse_rows(&["1 a", "a 1", "a2 a2"]).unwrap();
        assert!(matches!(diagonalize_f4(&a4), Err(Error::RankDeficient { rank: 2, expected: 3 })));
    }

    #[test]
    fn second_gamma_worked_example() {
        let (b4, pc) = diagonalize_f4(&example_a4()).unwrap();
        let d4 = second_gamma(&b4, &pc).unwrap();
        d4.check_structure().unwrap();
        assert!(same_rowspace(&d4.basis(), &b4.basis()));
        // Triple on principal column 2, single on column 0 carrying (a2, a, 0, 0).
        assert_eq!(d4.n_p(), 2);
        assert_eq!(d4.n_pp(), 1);
        let weight_two = to_gf2(&F4Matrix::parse_rows(&["a2 a 0 0"]).unwrap());
        assert!(d4.matrix().rows().contains(weight_two.row(0)));
    }

    #[test]
    fn second_gamma_degenerate_inputs() {
        let empty = BitMatrix::new(8);
        let g = PackagedGamma::from_parts(empty, vec![], WeightMode::Symplectic, 0).unwrap();
        let d = second_gamma(&g, &PrincipalColumns::new(0..4)).unwrap();
        assert_eq!((d.n_p(), d.n_pp()), (0, 0));

        let a4 = F4Matrix::parse_rows(&["1 0", "a 0", "0 1", "0 a"]).unwrap();
        let (b4, pc) = diagonalize_f4(&a4).unwrap();
        assert!(pc.is_empty());
        let d4 = second_gamma(&b4, &pc).unwrap();
        assert_eq!(d4.n_pp(), 0);
        assert_eq!(d4.n_p(), 2);
    }

    #[test]
    fn isometry_examples() {
        let a = BitMatrix::parse_rows(&["10|01", "00|00"]).unwrap();
        let b = isometry_transform(&a).unwrap();
        assert_eq!(b.row(0), &"10|01|11".parse::<BitVector>().unwrap());
        assert!(b.row(1).is_zero());
        assert!(isometry_transform(&BitMatrix::zeros(1, 3)).is_err());
    }

    #[test]
    fn information_sets_of_triple_identity() {
        let n = 4;
        let rows = (0..n)
            .map(|i| BitVector::from_indices(3 * n, &[i, n + i, 2 * n + i]))
            .collect();
        let b = BitMatrix::from_rows(3 * n, rows).unwrap();
        let sets = information_sets(&b).unwrap();
        assert_eq!(sets.len(), 3);
        assert!(sets.iter().all(|g| g.rank_deficit() == 0));
    }

    #[test]
    fn information_sets_of_self_dual_seed() {
        let a = BitMatrix::parse_rows(&["100|000", "010|000", "001|000"]).unwrap();
        let b = isometry_transform(&a).unwrap();
        let sets = information_sets(&b).unwrap();
        assert_eq!(sets.len(), 2);
        for g in &sets {
            assert_eq!(g.rank_deficit(), 0);
            g.check_structure().unwrap();
            assert!(same_rowspace(g.matrix(), &b));
        }
    }

    #[test]
    fn information_sets_reject_dependent_rows() {
        let b = BitMatrix::parse_rows(&["110", "110"]).unwrap();
        assert!(matches!(information_sets(&b), Err(Error::RankDeficient { .. })));
    }

    #[test]
    fn from_parts_validates_packages() {
        let m = BitMatrix::parse_rows(&["10|00", "01|00", "11|00"]).unwrap();
        assert!(PackagedGamma::from_parts(m.clone(), vec![Package::triple(0, 1, 2, 0)], WeightMode::Symplectic, 2).is_ok());
        let bad = BitMatrix::parse_rows(&["10|00", "01|00", "11|01"]).unwrap();
        assert!(PackagedGamma::from_parts(bad, vec![Package::triple(0, 1, 2, 0)], WeightMode::Symplectic, 2).is_err());
        assert!(PackagedGamma::from_parts(m, vec![Package::single(0, None)], WeightMode::Symplectic, 2).is_err());
    }

    #[test]
    fn conversion_round_trip_keeps_example() {
        let a = example_a();
        assert_eq!(to_gf2(&to_gf4(&a).unwrap()), a);
    }
}
