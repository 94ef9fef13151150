use num_traits::Zero;

use super::echelon::IntEchelon;
use super::matrix::QMatrix;
use super::scalar::Scalar;
use super::sparse::{self, Accum, SparseVec};

/// A subspace of `Q^ambient`, held as its reduced row echelon basis.
///
/// The basis is canonical (pivots ascending, pivot entries 1, zeros above and
/// below every pivot), so two subspaces are equal exactly when their
/// representations are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinSubspace {
    ambient: usize,
    basis: Vec<SparseVec>,
}

impl LinSubspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self { ambient, basis: (0..ambient).map(sparse::unit).collect() }
    }

    pub fn from_vectors<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut ech = IntEchelon::new();
        for v in vectors {
            debug_assert!(v.iter().all(|(i, _)| *i < ambient));
            ech.insert(v);
        }
        Self { ambient, basis: ech.into_rref() }
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &QMatrix) -> Self {
        let t = m.transpose();
        Self::from_vectors(m.nrows(), t.row_vecs())
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &QMatrix) -> Self {
        Self::from_vectors(m.ncols(), m.row_vecs())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r[0].0).collect()
    }

    /// Basis as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> QMatrix {
        QMatrix::from_columns(self.ambient, &self.basis)
    }

    fn pivot_coefficients(&self, v: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
        // basis rows are sorted by pivot; v is sorted by index
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.basis.len() && j < v.len() {
            let p = self.basis[i][0].0;
            match p.cmp(&v[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push((i, v[j].1.clone()));
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Canonical representative of `v` modulo this subspace: the unique vector
    /// congruent to `v` that vanishes at every pivot column.
    pub fn reduce(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let coeffs = self.pivot_coefficients(v);
        if coeffs.is_empty() {
            return v.to_vec();
        }
        let mut acc = Accum::new();
        for (i, x) in v {
            acc.add_ref(*i, x);
        }
        for (r, c) in coeffs {
            acc.add_scaled(&self.basis[r], &-c);
        }
        acc.finish()
    }

    pub fn contains(&self, v: &[(usize, Scalar)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[(usize, Scalar)]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        let mut out = vec![Scalar::zero(); self.dim()];
        for (r, c) in self.pivot_coefficients(v) {
            out[r] = c;
        }
        Some(out)
    }

    pub fn contains_subspace(&self, other: &LinSubspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &LinSubspace) -> LinSubspace {
        assert_eq!(self.ambient, other.ambient);
        LinSubspace::from_vectors(self.ambient, self.basis.iter().chain(&other.basis))
    }

    pub fn intersection(&self, other: &LinSubspace) -> LinSubspace {
        assert_eq!(self.ambient, other.ambient);
        // kernel of [A | -B] on coefficient vectors, mapped back through A
        let (a, b) = (self.dim(), other.dim());
        let mut cols: Vec<SparseVec> = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| sparse::scale(v, &-Scalar::from_integer(1.into()))));
        let m = QMatrix::from_columns(self.ambient, &cols);
        let ker = super::kernel(&m);
        let vecs: Vec<SparseVec> = ker
            .basis()
            .iter()
            .map(|k| {
                let mut acc = Accum::new();
                for (i, c) in k {
                    if *i < a {
                        acc.add_scaled(&self.basis[*i], c);
                    }
                }
                acc.finish()
            })
            .collect();
        let _ = b;
        LinSubspace::from_vectors(self.ambient, &vecs)
    }

    /// Image of the subspace under `m` (an `? x ambient` matrix).
    pub fn image_under(&self, m: &QMatrix) -> LinSubspace {
        assert_eq!(m.ncols(), self.ambient);
        let imgs: Vec<SparseVec> = self.basis.iter().map(|v| m.apply(v)).collect();
        LinSubspace::from_vectors(m.nrows(), &imgs)
    }
}

/// A quotient `big / small` with a canonical basis of representatives.
///
/// Representatives are the reduced echelon basis of the normal forms of
/// `big` modulo `small`; coordinates of a class are read off at their pivots.
#[derive(Debug, Clone)]
pub struct Quotient {
    small: LinSubspace,
    reps: LinSubspace,
}

impl Quotient {
    pub fn new(big: &LinSubspace, small: &LinSubspace) -> Self {
        debug_assert!(big.contains_subspace(small));
        let normal: Vec<SparseVec> = big.basis().iter().map(|v| small.reduce(v)).collect();
        let reps = LinSubspace::from_vectors(big.ambient(), &normal);
        Self { small: small.clone(), reps }
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn reps(&self) -> &[SparseVec] {
        self.reps.basis()
    }

    pub fn small(&self) -> &LinSubspace {
        &self.small
    }

    /// Coordinates of the class of `v`; `None` if `v` is outside `big`.
    pub fn coords(&self, v: &[(usize, Scalar)]) -> Option<Vec<Scalar>> {
        self.reps.coords(&self.small.reduce(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    #[test]
    fn canonical_representation() {
        let a = LinSubspace::from_vectors(3, &[vec![(0, int(1)), (1, int(1))], vec![(1, int(1))]]);
        let b = LinSubspace::from_vectors(3, &[vec![(0, int(2))], vec![(0, int(1)), (1, int(-1))]]);
        assert_eq!(a, b);
        assert!(a.contains(&[(0, int(5)), (1, int(-2))]));
        assert!(!a.contains(&[(2, int(1))]));
    }

    #[test]
    fn intersection_and_sum() {
        let a = LinSubspace::from_vectors(3, &[vec![(0, int(1))], vec![(1, int(1))]]);
        let b = LinSubspace::from_vectors(3, &[vec![(1, int(1))], vec![(2, int(1))]]);
        assert_eq!(a.intersection(&b), LinSubspace::from_vectors(3, &[vec![(1, int(1))]]));
        assert_eq!(a.sum(&b), LinSubspace::full(3));
    }

    #[test]
    fn quotient_coordinates() {
        let big = LinSubspace::full(2);
        let small = LinSubspace::from_vectors(2, &[vec![(0, int(1)), (1, int(1))]]);
        let q = Quotient::new(&big, &small);
        assert_eq!(q.dim(), 1);
        let c1 = q.coords(&[(0, int(1))]).unwrap();
        let c2 = q.coords(&[(1, int(-1))]).unwrap();
        assert_eq!(c1, c2);
    }
}
