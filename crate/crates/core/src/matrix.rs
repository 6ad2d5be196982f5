use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::field::Field;

/// Row-major dense matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
}

impl<E: Copy> DenseMatrix<E> {
    /// # Panics
    ///
    /// If `entries.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<E>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must be rows * cols"
        );
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self::new(rows, cols, vec![value; rows * cols])
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn diagonal<F: Field<Elem = E>>(field: &F, diag: &[E]) -> Self {
        let mut m = Self::zeros(field, diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Builds from a list of equal-length rows.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch);
        }
        let n = rows.len();
        Ok(Self::new(n, cols, rows.into_iter().flatten().collect()))
    }

    /// A single column.
    pub fn column_vector(entries: Vec<E>) -> Self {
        let n = entries.len();
        Self::new(n, 1, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> E {
        assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn select_rows(&self, range: Range<usize>) -> Result<Self> {
        if range.start > range.end || range.end > self.rows {
            return Err(Error::IndexOutOfRange);
        }
        let entries = self.entries[range.start * self.cols..range.end * self.cols].to_vec();
        Ok(Self::new(range.end - range.start, self.cols, entries))
    }

    pub fn select_cols(&self, range: Range<usize>) -> Result<Self> {
        if range.start > range.end || range.end > self.cols {
            return Err(Error::IndexOutOfRange);
        }
        let width = range.end - range.start;
        let mut entries = Vec::with_capacity(self.rows * width);
        for i in 0..self.rows {
            entries.extend_from_slice(&self.row(i)[range.clone()]);
        }
        Ok(Self::new(self.rows, width, entries))
    }

    /// Rows `start, start+1, ...` taken cyclically, `count` of them.
    pub fn cyclic_rows(&self, start: usize, count: usize) -> Result<Self> {
        if self.rows == 0 && count > 0 {
            return Err(Error::IndexOutOfRange);
        }
        let mut entries = Vec::with_capacity(count * self.cols);
        for t in 0..count {
            entries.extend_from_slice(self.row((start + t) % self.rows));
        }
        Ok(Self::new(count, self.cols, entries))
    }

    /// Side-by-side concatenation `(self | other)`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch);
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(other.row(i));
        }
        Ok(Self::new(self.rows, self.cols + other.cols, entries))
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch);
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Self::new(self.rows + other.rows, self.cols, entries))
    }

    /// Block diagonal `diag(self, other)`.
    pub fn block_diag<F: Field<Elem = E>>(field: &F, a: &Self, b: &Self) -> Self {
        let mut m = Self::zeros(field, a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m.set(i, j, a.get(i, j));
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(a.rows + i, a.cols + j, b.get(i, j));
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j));
            }
        }
        Self::new(self.cols, self.rows, entries)
    }

    /// Entrywise image under `f`.
    pub fn map<T: Copy>(&self, f: impl FnMut(E) -> T) -> DenseMatrix<T> {
        DenseMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().copied().map(f).collect(),
        )
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch);
        }
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.entries[i * other.cols + j];
                    out.entries[i * other.cols + j] = field.add(cur, field.mul(a, other.get(t, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: E) -> Self {
        self.map(|x| field.mul(x, c))
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.entries.iter().all(|&x| field.is_zero(x))
    }
}
