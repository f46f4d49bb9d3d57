use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::vector::{dot_words, tail_mask, words_for, BitVector, WORD_BITS};
use crate::error::{Error, Result};

/// Dense binary matrix with bit-packed rows.
///
/// Rows are stored back to back, each padded to a whole number of 64-bit
/// words; padding bits are always zero. Indices are 0-based. Every operation
/// that eliminates works on a private copy, so a matrix can be shared freely
/// between rank, nullspace and product computations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n_rows: usize,
    n_cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Reduced (or plain) row echelon form: the reduced rows plus the pivot
/// column of each of the first `pivots.len()` rows.
struct Echelon {
    matrix: BitMatrix,
    pivots: Vec<usize>,
}

impl BitMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Result<Self> {
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::EmptyMatrix {
                rows: n_rows,
                cols: n_cols,
            });
        }
        let stride = words_for(n_cols);
        Ok(Self {
            n_rows,
            n_cols,
            stride,
            data: vec![0; n_rows * stride],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, true);
        }
        Ok(m)
    }

    pub fn ones(n_rows: usize, n_cols: usize) -> Result<Self> {
        let mut m = Self::zeros(n_rows, n_cols)?;
        let mask = tail_mask(n_cols);
        for r in 0..n_rows {
            let row = m.row_words_mut(r);
            row.fill(u64::MAX);
            *row.last_mut().expect("n_cols >= 1") = mask;
        }
        Ok(m)
    }

    pub fn from_fn<F: FnMut(usize, usize) -> bool>(
        n_rows: usize,
        n_cols: usize,
        mut f: F,
    ) -> Result<Self> {
        let mut m = Self::zeros(n_rows, n_cols)?;
        for r in 0..n_rows {
            for c in 0..n_cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        Ok(m)
    }

    /// Stacks equal-length vectors as rows.
    pub fn from_rows(rows: &[BitVector]) -> Result<Self> {
        let n_cols = rows.first().map_or(0, BitVector::len);
        let mut m = Self::zeros(rows.len(), n_cols)?;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::DimensionMismatch {
                    expected: n_cols,
                    found: row.len(),
                });
            }
            m.row_words_mut(r).copy_from_slice(row.words());
        }
        Ok(m)
    }

    /// Matrix with independent uniform entries.
    pub fn random<R: Rng + ?Sized>(n_rows: usize, n_cols: usize, rng: &mut R) -> Result<Self> {
        let mut m = Self::zeros(n_rows, n_cols)?;
        let mask = tail_mask(n_cols);
        for r in 0..n_rows {
            let row = m.row_words_mut(r);
            row.iter_mut().for_each(|w| *w = rng.gen());
            *row.last_mut().expect("n_cols >= 1") &= mask;
        }
        Ok(m)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    /// # Panics
    /// Panics if either index is out of range.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(
            row < self.n_rows && col < self.n_cols,
            "entry ({row}, {col}) out of range"
        );
        (self.data[row * self.stride + col / WORD_BITS] >> (col % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    /// Panics if either index is out of range.
    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(
            row < self.n_rows && col < self.n_cols,
            "entry ({row}, {col}) out of range"
        );
        let idx = row * self.stride + col / WORD_BITS;
        let mask = 1u64 << (col % WORD_BITS);
        if value {
            self.data[idx] |= mask;
        } else {
            self.data[idx] &= !mask;
        }
    }

    fn check_row(&self, row: usize) -> Result<()> {
        if row >= self.n_rows {
            return Err(Error::IndexOutOfRange {
                index: row,
                min: 0,
                max: self.n_rows - 1,
            });
        }
        Ok(())
    }

    pub fn row(&self, row: usize) -> Result<BitVector> {
        self.check_row(row)?;
        Ok(BitVector::from_words(
            self.n_cols,
            self.row_words(row).to_vec(),
        ))
    }

    pub fn column(&self, col: usize) -> Result<BitVector> {
        if col >= self.n_cols {
            return Err(Error::IndexOutOfRange {
                index: col,
                min: 0,
                max: self.n_cols - 1,
            });
        }
        Ok(BitVector::from_bools(
            (0..self.n_rows).map(|r| self.get(r, col)),
        ))
    }

    /// Number of 1-bits in a row.
    pub fn row_weight(&self, row: usize) -> Result<usize> {
        self.check_row(row)?;
        Ok(self
            .row_words(row)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n_cols, self.n_rows).expect("dimensions already validated");
        for r in 0..self.n_rows {
            for c in BitVector::from_words(self.n_cols, self.row_words(r).to_vec()).ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Submatrix made of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Self> {
        if let Some(&bad) = cols.iter().find(|&&c| c >= self.n_cols) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                min: 0,
                max: self.n_cols - 1,
            });
        }
        Self::from_fn(self.n_rows, cols.len(), |r, k| self.get(r, cols[k]))
    }

    /// `self · v` over GF(2).
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.n_cols {
            return Err(Error::DimensionMismatch {
                expected: self.n_cols,
                found: v.len(),
            });
        }
        Ok(BitVector::from_bools(
            (0..self.n_rows).map(|r| dot_words(self.row_words(r), v.words())),
        ))
    }

    pub fn is_symmetric(&self) -> Result<bool> {
        Ok(self.first_asymmetry()?.is_none())
    }

    /// First `(row, col)` with `row < col` where the matrix differs from its transpose.
    pub(crate) fn first_asymmetry(&self) -> Result<Option<(usize, usize)>> {
        self.require_square()?;
        for r in 0..self.n_rows {
            for c in r + 1..self.n_cols {
                if self.get(r, c) != self.get(c, r) {
                    return Ok(Some((r, c)));
                }
            }
        }
        Ok(None)
    }

    pub fn has_unit_diagonal(&self) -> Result<bool> {
        self.require_square()?;
        Ok((0..self.n_rows).all(|i| self.get(i, i)))
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.n_rows,
                cols: self.n_cols,
            });
        }
        Ok(())
    }

    /// XORs row `src` into row `dst`, touching only words from `from_word` on.
    #[inline]
    fn xor_row_into(&mut self, src: usize, dst: usize, from_word: usize) {
        debug_assert_ne!(src, dst);
        let stride = self.stride;
        let (src_row, dst_row) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * stride);
            (&lo[src * stride..(src + 1) * stride], &mut hi[..stride])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * stride);
            (&hi[..stride], &mut lo[dst * stride..(dst + 1) * stride])
        };
        for (d, s) in dst_row[from_word..].iter_mut().zip(&src_row[from_word..]) {
            *d ^= s;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let stride = self.stride;
        let (lo, hi) = self.data.split_at_mut(a.max(b) * stride);
        let lo_start = a.min(b) * stride;
        lo[lo_start..lo_start + stride].swap_with_slice(&mut hi[..stride]);
    }

    /// Row-major Gauss-Jordan elimination on a copy.
    ///
    /// Columns are scanned left to right; the pivot is the first row at or
    /// below the current rank with a 1 in the column. With `reduced` set the
    /// pivot is cleared from every other row (RREF), otherwise only from the
    /// rows below it.
    fn echelon(&self, reduced: bool) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::with_capacity(self.n_rows.min(self.n_cols));
        let mut rank = 0;
        for col in 0..m.n_cols {
            if rank == m.n_rows {
                break;
            }
            let word = col / WORD_BITS;
            let mask = 1u64 << (col % WORD_BITS);
            let stride = m.stride;
            let Some(pivot) = (rank..m.n_rows).find(|&r| m.data[r * stride + word] & mask != 0)
            else {
                continue;
            };
            m.swap_rows(pivot, rank);
            let start = if reduced { 0 } else { rank + 1 };
            for r in start..m.n_rows {
                if r != rank && m.data[r * stride + word] & mask != 0 {
                    m.xor_row_into(rank, r, word);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Echelon { matrix: m, pivots }
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        self.echelon(false).pivots.len()
    }

    /// Basis of `{x : self · x = 0}`.
    ///
    /// One vector per free (non-pivot) column of the reduced row echelon
    /// form, in ascending column order: the vector has a 1 at its free column
    /// and, at each pivot column, the RREF entry of that pivot's row in the
    /// free column. The result is therefore canonical for a given matrix.
    pub fn nullspace_basis(&self) -> Vec<BitVector> {
        let Echelon {
            matrix: rref,
            pivots,
        } = self.echelon(true);
        let mut is_pivot = vec![false; self.n_cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.n_cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVector::unit(self.n_cols, free);
                for (row, &pc) in pivots.iter().enumerate() {
                    if rref.get(row, free) {
                        v.set(pc, true);
                    }
                }
                v
            })
            .collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.n_rows, self.n_cols)?;
        for r in 0..self.n_rows {
            writeln!(
                f,
                "  {}",
                BitVector::from_words(self.n_cols, self.row_words(r).to_vec())
            )?;
        }
        write!(f, "]")
    }
}

/// Text fixture format: a header line `"n_rows n_cols"` followed by one line
/// of `'0'`/`'1'` characters per row.
impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n_rows, self.n_cols)?;
        for r in 0..self.n_rows {
            writeln!(
                f,
                "{}",
                BitVector::from_words(self.n_cols, self.row_words(r).to_vec())
            )?;
        }
        Ok(())
    }
}

impl FromStr for BitMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (header_line, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse {
                line: header_line,
                msg: format!("bad header: {e}"),
            })?;
        let &[n_rows, n_cols] = dims.as_slice() else {
            return Err(Error::Parse {
                line: header_line,
                msg: "header must be \"n_rows n_cols\"".into(),
            });
        };
        let mut m = Self::zeros(n_rows, n_cols)?;
        let mut seen = 0;
        for (line, text) in lines {
            if seen == n_rows {
                return Err(Error::Parse {
                    line,
                    msg: format!("more than {n_rows} rows"),
                });
            }
            let row: BitVector = text.parse().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line, msg },
                other => other,
            })?;
            if row.len() != n_cols {
                return Err(Error::Parse {
                    line,
                    msg: format!("row has {} columns, expected {n_cols}", row.len()),
                });
            }
            m.row_words_mut(seen).copy_from_slice(row.words());
            seen += 1;
        }
        if seen != n_rows {
            return Err(Error::Parse {
                line: header_line,
                msg: format!("expected {n_rows} rows, found {seen}"),
            });
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(text: &str) -> BitMatrix {
        text.parse().unwrap()
    }

    #[test]
    fn rejects_empty_dimensions() {
        assert!(matches!(
            BitMatrix::zeros(0, 3),
            Err(Error::EmptyMatrix { .. })
        ));
        assert!(matches!(
            BitMatrix::zeros(3, 0),
            Err(Error::EmptyMatrix { .. })
        ));
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(BitMatrix::identity(3).unwrap().rank(), 3);
        assert_eq!(BitMatrix::ones(4, 4).unwrap().rank(), 1);
        assert_eq!(BitMatrix::zeros(5, 7).unwrap().rank(), 0);
        assert_eq!(m("3 3\n110\n111\n011\n").rank(), 3);
        assert_eq!(m("3 4\n1100\n0110\n1010\n").rank(), 2);
    }

    #[test]
    fn rank_does_not_mutate() {
        let a = m("3 3\n110\n111\n011\n");
        let before = a.clone();
        let _ = a.rank();
        let _ = a.nullspace_basis();
        assert_eq!(a, before);
    }

    #[test]
    fn nullspace_of_full_rank_is_empty() {
        assert!(BitMatrix::identity(2).unwrap().nullspace_basis().is_empty());
    }

    #[test]
    fn nullspace_of_all_ones_3x3() {
        let basis = BitMatrix::ones(3, 3).unwrap().nullspace_basis();
        let strings: Vec<String> = basis.iter().map(ToString::to_string).collect();
        // free columns 1 and 2, each paired with pivot column 0
        assert_eq!(strings, ["110", "101"]);
        for b in &basis {
            assert_eq!(b.count_ones() % 2, 0);
        }
    }

    #[test]
    fn mat_vec_examples() {
        let v: BitVector = "101".parse().unwrap();
        assert_eq!(BitMatrix::identity(3).unwrap().mul_vec(&v).unwrap(), v);
        let ones = BitMatrix::ones(3, 3).unwrap();
        assert!(ones.mul_vec(&"110".parse().unwrap()).unwrap().is_zero());
        assert!(matches!(
            ones.mul_vec(&"11".parse().unwrap()),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        ));
    }

    #[test]
    fn row_weight_and_range() {
        let i3 = BitMatrix::identity(3).unwrap();
        assert_eq!(i3.row_weight(2).unwrap(), 1);
        assert_eq!(BitMatrix::ones(5, 5).unwrap().row_weight(4).unwrap(), 5);
        assert!(matches!(
            i3.row_weight(3),
            Err(Error::IndexOutOfRange { index: 3, .. })
        ));
    }

    #[test]
    fn predicates() {
        let i = BitMatrix::identity(4).unwrap();
        assert!(i.is_symmetric().unwrap());
        assert!(i.has_unit_diagonal().unwrap());
        let z = BitMatrix::zeros(4, 4).unwrap();
        assert!(z.is_symmetric().unwrap());
        assert!(!z.has_unit_diagonal().unwrap());
        assert!(!m("2 2\n11\n01\n").is_symmetric().unwrap());
        let rect = BitMatrix::zeros(2, 3).unwrap();
        assert!(matches!(rect.is_symmetric(), Err(Error::NotSquare { .. })));
        assert!(matches!(
            rect.has_unit_diagonal(),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let mut a = BitMatrix::zeros(3, 130).unwrap();
        a.set(0, 129, true);
        a.set(1, 129, true);
        a.set(1, 64, true);
        a.set(2, 64, true);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.transpose().rank(), 2);
        assert_eq!(a.nullspace_basis().len(), 128);
    }

    #[test]
    fn text_format_errors() {
        assert!(matches!(
            "".parse::<BitMatrix>(),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "2 2\n11\n".parse::<BitMatrix>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "2 2\n11\n1\n".parse::<BitMatrix>(),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            "1 2\n12\n".parse::<BitMatrix>(),
            Err(Error::Parse { line: 2, .. })
        ));
        let a = m("2 3\n101\n010\n");
        assert_eq!(a.to_string().parse::<BitMatrix>().unwrap(), a);
    }
}
