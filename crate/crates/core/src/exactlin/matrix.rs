use std::fmt;

use num_traits::{One, Zero};

use super::scalar::{fmt_scalar, Scalar};
use super::sparse::{self, Accum, SparseVec};
use crate::error::{Error, Result};

/// Sparse rational matrix, stored row by row.
///
/// Rows are sorted by column and never hold explicit zeros, so the derived
/// equality is equality of matrices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.data[i].push((i, c.clone()));
            }
        }
        m
    }

    pub fn from_dense(rows: usize, cols: usize, entries: &[Vec<Scalar>]) -> Self {
        assert_eq!(entries.len(), rows);
        let data = entries
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols);
                sparse::from_dense(r)
            })
            .collect();
        Self { rows, cols, data }
    }

    /// Convenience constructor from integer rows.
    pub fn from_ints(entries: &[&[i64]]) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let dense: Vec<Vec<Scalar>> =
            entries.iter().map(|r| r.iter().map(|&x| Scalar::from_integer(x.into())).collect()).collect();
        Self::from_dense(rows, cols, &dense)
    }

    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut acc: Vec<Accum> = (0..rows).map(|_| Accum::new()).collect();
        for (r, c, x) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            acc[r].add(c, x);
        }
        Self { rows, cols, data: acc.into_iter().map(Accum::finish).collect() }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.iter().all(|(c, x)| *c < cols && !x.is_zero())));
        Self { rows: rows.len(), cols, data: rows }
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        Self::from_rows(rows, columns.to_vec()).transpose()
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        sparse::get(&self.data[r], c)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, x) in row {
                data[*c].push((r, x.clone()));
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn column(&self, c: usize) -> SparseVec {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                let x = sparse::get(row, c);
                (!x.is_zero()).then_some((r, x))
            })
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data.iter().map(|r| sparse::to_dense(r, self.cols)).collect()
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::dims(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = Accum::new();
                for (k, x) in row {
                    acc.add_scaled(&other.data[*k], x);
                }
                acc.finish()
            })
            .collect();
        Ok(QMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// Matrix product that panics on shape mismatch; for internal use where
    /// shapes are fixed by construction.
    pub fn dot(&self, other: &QMatrix) -> QMatrix {
        self.mul(other).expect("shape mismatch")
    }

    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                let x = sparse::dot(row, v);
                (!x.is_zero()).then_some((r, x))
            })
            .collect()
    }

    pub fn apply_dense(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        self.data.iter().map(|row| row.iter().fold(Scalar::zero(), |s, (c, x)| s + x * &v[*c])).collect()
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| sparse::add(a, b)).collect();
        Ok(QMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &QMatrix) -> Result<QMatrix> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| sparse::scale(r, c)).collect() }
    }

    fn same_shape(&self, other: &QMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dims(format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(())
    }

    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::dims(format!("trace of non-square {}x{}", self.rows, self.cols)));
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).fold(Scalar::zero(), |a, b| a + b))
    }

    pub fn pow(&self, e: usize) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::dims("power of non-square matrix"));
        }
        let mut out = QMatrix::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Kronecker product; row index `(i, k) -> i * other.rows + k`.
    pub fn kron(&self, other: &QMatrix) -> QMatrix {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ca, xa) in ra {
                    for (cb, xb) in rb {
                        row.push((ca * other.cols + cb, xa * xb));
                    }
                }
                data.push(row);
            }
        }
        QMatrix { rows: self.rows * other.rows, cols: self.cols * other.cols, data }
    }

    pub fn block_diag(blocks: &[&QMatrix]) -> QMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut data = Vec::with_capacity(rows);
        let mut off = 0;
        for b in blocks {
            for r in &b.data {
                data.push(sparse::shifted(r, off));
            }
            off += b.cols;
        }
        QMatrix { rows, cols, data }
    }

    /// Restriction to the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> QMatrix {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let data = rows
            .iter()
            .map(|&r| {
                let mut row: SparseVec =
                    self.data[r].iter().filter(|(c, _)| pos[*c] != usize::MAX).map(|(c, x)| (pos[*c], x.clone())).collect();
                row.sort_by_key(|(c, _)| *c);
                row
            })
            .collect();
        QMatrix { rows: rows.len(), cols: cols.len(), data }
    }

    pub fn rank(&self) -> usize {
        super::rank(self)
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(fmt_scalar).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        } else {
            writeln!(f, "  ({} nonzeros)", self.nnz())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    #[test]
    fn products_and_kron() {
        let a = QMatrix::from_ints(&[&[1, 2], &[0, 1]]);
        let b = QMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.dot(&b), QMatrix::from_ints(&[&[2, 1], &[1, 0]]));
        let k = a.kron(&b);
        assert_eq!(k.nrows(), 4);
        assert_eq!(k.get(0, 3), int(2));
        assert_eq!(k.get(3, 2), int(1));
        assert_eq!(a.trace().unwrap(), int(2));
        assert!(a.mul(&QMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn transpose_roundtrip() {
        let a = QMatrix::from_ints(&[&[1, 0, 3], &[0, 0, -1]]);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.column(2), vec![(0, int(3)), (1, int(-1))]);
        assert_eq!(a.submatrix(&[1], &[2, 0]), QMatrix::from_ints(&[&[-1, 0]]));
    }
}
