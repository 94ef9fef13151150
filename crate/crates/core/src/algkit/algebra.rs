use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::sparse::{self, Accum, SparseVec};
use crate::exactlin::{self, LinSubspace, QMatrix, Scalar};

use super::quiver::QuiverPresentation;

/// Finite-dimensional unital associative algebra over Q, given by structure
/// constants.
///
/// Every algebra carries a complete system of orthogonal idempotents that are
/// themselves basis vectors, and every basis vector is homogeneous for it:
/// `b = e_p b e_q` for exactly one pair `(p, q)`. For quiver algebras the system
/// is the set of vertex idempotents; without declared idempotents it is `{1}`.
/// The homology and bar constructions reduce relative to this separable
/// subalgebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    labels: Vec<String>,
    mult: Vec<Vec<SparseVec>>,
    unit: SparseVec,
    idempotents: Vec<usize>,
    peirce: Vec<(usize, usize)>,
    quiver: Option<QuiverPresentation>,
}

impl Algebra {
    /// Builds an algebra from structure constants `mult[i][j] = b_i * b_j` and
    /// checks associativity, the unit law and the idempotent system.
    ///
    /// Without `idempotents`, the unit must be (or is made) a basis vector: if
    /// it is not one already, the first basis vector on which the unit has a
    /// nonzero coefficient is replaced by the unit, relabelled `"1"`.
    pub fn new(labels: Vec<String>, mult: Vec<Vec<SparseVec>>, unit: SparseVec, idempotents: Option<Vec<usize>>) -> Result<Self> {
        let mut alg = Self::checked_raw(labels, mult, unit)?;
        match idempotents {
            Some(idem) => alg.install_idempotents(idem)?,
            None => {
                alg = alg.with_unit_as_basis_vector();
                let k = alg.unit[0].0;
                alg.install_idempotents(vec![k])?;
            }
        }
        Ok(alg)
    }

    fn checked_raw(labels: Vec<String>, mult: Vec<Vec<SparseVec>>, unit: SparseVec) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::invariant("an algebra needs dimension at least 1"));
        }
        if mult.len() != d || mult.iter().any(|r| r.len() != d) {
            return Err(Error::dims(format!("structure constants must be {d}x{d}")));
        }
        if mult.iter().flatten().chain(std::iter::once(&unit)).any(|v| v.iter().any(|(k, _)| *k >= d)) {
            return Err(Error::dims("structure constant index out of range"));
        }
        let alg = Algebra { labels, mult, unit, idempotents: Vec::new(), peirce: Vec::new(), quiver: None };
        alg.check_associative()?;
        alg.check_unit()?;
        Ok(alg)
    }

    /// Like [`Algebra::new`] without idempotents, but also returns the change
    /// of basis (column `k` is the new basis vector `k` in the given basis).
    pub fn from_table(labels: Vec<String>, mult: Vec<Vec<SparseVec>>, unit: SparseVec) -> Result<(Self, QMatrix)> {
        let (mut out, p) = Self::checked_raw(labels, mult, unit)?.unit_basis_change();
        let k = out.unit[0].0;
        out.install_idempotents(vec![k])?;
        Ok((out, p))
    }

    /// Trusted constructor for algebras derived from verified ones.
    pub(crate) fn from_parts_unchecked(
        labels: Vec<String>,
        mult: Vec<Vec<SparseVec>>,
        unit: SparseVec,
        idempotents: Vec<usize>,
        peirce: Vec<(usize, usize)>,
    ) -> Self {
        Algebra { labels, mult, unit, idempotents, peirce, quiver: None }
    }

    pub(crate) fn set_quiver(&mut self, q: QuiverPresentation) {
        self.quiver = Some(q);
    }

    /// Q itself.
    pub fn ground() -> Self {
        Self::from_parts_unchecked(vec!["1".into()], vec![vec![sparse::unit(0)]], sparse::unit(0), vec![0], vec![(0, 0)])
    }

    fn check_associative(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = &self.mult[i][j];
                for k in 0..d {
                    let left = self.mul(ij, &sparse::unit(k));
                    let right = self.mul(&sparse::unit(i), &self.mult[j][k]);
                    if left != right {
                        return Err(Error::invariant(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let b = sparse::unit(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::invariant(format!("unit law fails on {}", self.labels[i])));
            }
        }
        Ok(())
    }

    fn install_idempotents(&mut self, idem: Vec<usize>) -> Result<()> {
        let d = self.dim();
        if idem.is_empty() || idem.iter().any(|&i| i >= d) {
            return Err(Error::invalid("idempotent list empty or out of range"));
        }
        let mut sum = Vec::new();
        for (a, &i) in idem.iter().enumerate() {
            for (b, &j) in idem.iter().enumerate() {
                let expect = if a == b { sparse::unit(i) } else { Vec::new() };
                if self.mult[i][j] != expect {
                    return Err(Error::invariant(format!(
                        "{} and {} are not orthogonal idempotents",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
            sum = sparse::add(&sum, &sparse::unit(i));
        }
        if sum != self.unit {
            return Err(Error::invariant("declared idempotents do not sum to the unit"));
        }
        let mut peirce = Vec::with_capacity(d);
        for k in 0..d {
            let b = sparse::unit(k);
            let left = idem.iter().position(|&e| self.mul(&sparse::unit(e), &b) == b);
            let right = idem.iter().position(|&e| self.mul(&b, &sparse::unit(e)) == b);
            match (left, right) {
                (Some(p), Some(q)) => peirce.push((p, q)),
                _ => {
                    return Err(Error::invariant(format!(
                        "basis vector {} is not homogeneous for the idempotent system",
                        self.labels[k]
                    )))
                }
            }
        }
        self.idempotents = idem;
        self.peirce = peirce;
        Ok(())
    }

    /// Replaces a basis vector by the unit; also returns the change of basis
    /// (column `k` is the new basis vector `k` in old coordinates).
    fn unit_basis_change(&self) -> (Algebra, QMatrix) {
        let d = self.dim();
        if (0..d).any(|k| self.unit == sparse::unit(k)) {
            let mut alg = self.clone();
            alg.quiver = None;
            return (alg, QMatrix::identity(d));
        }
        let i0 = self.unit[0].0;
        let mut cols: Vec<SparseVec> = (0..d).map(sparse::unit).collect();
        cols[i0] = self.unit.clone();
        let p = QMatrix::from_columns(d, &cols);
        let pinv = exactlin::inverse(&p).expect("unit replacement is invertible");
        let mut labels = self.labels.clone();
        labels[i0] = "1".into();
        let mult = (0..d).map(|i| (0..d).map(|j| pinv.apply(&self.mul(&cols[i], &cols[j]))).collect()).collect();
        let alg = Algebra { labels, mult, unit: sparse::unit(i0), idempotents: Vec::new(), peirce: Vec::new(), quiver: None };
        (alg, p)
    }

    fn with_unit_as_basis_vector(&self) -> Algebra {
        self.unit_basis_change().0
    }

    /// The same algebra with the trivial idempotent system `{1}` (the unit made
    /// a basis vector if needed), and the change of basis used.
    pub fn unit_framed(&self) -> (Algebra, QMatrix) {
        let (mut alg, p) = self.unit_basis_change();
        let k = alg.unit[0].0;
        alg.idempotents = vec![k];
        alg.peirce = vec![(0, 0); alg.dim()];
        (alg, p)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// Basis indices of the idempotent system.
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// `(p, q)` with `b_k = e_p b_k e_q`, as positions in `idempotents()`.
    pub fn peirce(&self, k: usize) -> (usize, usize) {
        self.peirce[k]
    }

    pub fn peirce_all(&self) -> &[(usize, usize)] {
        &self.peirce
    }

    pub fn is_idempotent_basis(&self, k: usize) -> bool {
        self.idempotents.contains(&k)
    }

    pub fn quiver(&self) -> Option<&QuiverPresentation> {
        self.quiver.as_ref()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn structure_constants(&self) -> &[Vec<SparseVec>] {
        &self.mult
    }

    pub fn mul(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = Accum::new();
        for (i, a) in x {
            for (j, b) in y {
                let c = a * b;
                acc.add_scaled(&self.mult[*i][*j], &c);
            }
        }
        acc.finish()
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult(&self, x: &[(usize, Scalar)]) -> QMatrix {
        let cols: Vec<SparseVec> = (0..self.dim()).map(|j| self.mul(x, &sparse::unit(j))).collect();
        QMatrix::from_columns(self.dim(), &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult(&self, x: &[(usize, Scalar)]) -> QMatrix {
        let cols: Vec<SparseVec> = (0..self.dim()).map(|j| self.mul(&sparse::unit(j), x)).collect();
        QMatrix::from_columns(self.dim(), &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Subspace `e_p A e_q` as basis indices.
    pub fn peirce_block(&self, p: usize, q: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.peirce[k] == (p, q)).collect()
    }

    /// Cartan matrix `C[p][q] = dim e_p A e_q`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.idempotents.len();
        let mut c = vec![vec![0; n]; n];
        for &(p, q) in &self.peirce {
            c[p][q] += 1;
        }
        c
    }

    /// Subspace spanned by commutators `[b_i, b_j]`.
    pub fn commutator_space(&self) -> LinSubspace {
        let d = self.dim();
        let mut vecs = Vec::new();
        for i in 0..d {
            for j in (i + 1)..d {
                let c = sparse::sub(&self.mult[i][j], &self.mult[j][i]);
                if !c.is_empty() {
                    vecs.push(c);
                }
            }
        }
        LinSubspace::from_vectors(d, &vecs)
    }

    pub fn is_element_idempotent(&self, x: &[(usize, Scalar)]) -> bool {
        self.mul(x, x) == x
    }

    /// `x^n`, with `x^0 = 1`.
    pub fn power(&self, x: &[(usize, Scalar)], n: usize) -> SparseVec {
        let mut out = self.unit.clone();
        for _ in 0..n {
            out = self.mul(&out, x);
        }
        out
    }

    pub fn scalar_elem(&self, c: Scalar) -> SparseVec {
        sparse::scale(&self.unit, &c)
    }

    /// Whether `sum_i c_i b_i` lies in the span of the idempotent system.
    pub fn in_idempotent_span(&self, x: &[(usize, Scalar)]) -> bool {
        x.iter().all(|(k, c)| c.is_zero() || self.idempotents.contains(k))
    }

    /// Label-based lookup.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Structure-constant summary used for hashing and display.
    pub fn signature(&self) -> String {
        let mut s = String::new();
        for (i, row) in self.mult.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_empty() {
                    s.push_str(&format!("{i}.{j}:"));
                    for (k, c) in v {
                        s.push_str(&format!("{k}={},", crate::exactlin::scalar::fmt_scalar(c)));
                    }
                    s.push(';');
                }
            }
        }
        s
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}, basis [{}], idempotents {:?})", self.dim(), self.labels.join(", "), self.idempotents)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    fn dual_numbers_raw() -> (Vec<String>, Vec<Vec<SparseVec>>) {
        let labels = vec!["1".to_string(), "eps".to_string()];
        let mult = vec![vec![sparse::unit(0), sparse::unit(1)], vec![sparse::unit(1), vec![]]];
        (labels, mult)
    }

    #[test]
    fn unit_found_among_basis() {
        let (l, m) = dual_numbers_raw();
        let a = Algebra::new(l, m, sparse::unit(0), None).unwrap();
        assert_eq!(a.idempotents(), &[0]);
        assert!(a.is_commutative());
    }

    #[test]
    fn unit_installed_when_missing() {
        // Q x Q on the basis (e1, e2) without declaring idempotents
        let labels = vec!["e1".to_string(), "e2".to_string()];
        let mult = vec![vec![sparse::unit(0), vec![]], vec![vec![], sparse::unit(1)]];
        let unit = vec![(0, int(1)), (1, int(1))];
        let a = Algebra::new(labels.clone(), mult.clone(), unit.clone(), None).unwrap();
        assert_eq!(a.labels()[0], "1");
        assert_eq!(a.unit(), &sparse::unit(0));
        let b = Algebra::new(labels, mult, unit, Some(vec![0, 1])).unwrap();
        assert_eq!(b.idempotents(), &[0, 1]);
    }

    #[test]
    fn rejects_non_associative() {
        let labels = vec!["1".to_string(), "x".to_string(), "y".to_string()];
        let mut mult = vec![vec![Vec::new(); 3]; 3];
        for k in 0..3 {
            mult[0][k] = sparse::unit(k);
            mult[k][0] = sparse::unit(k);
        }
        mult[1][1] = sparse::unit(2);
        mult[1][2] = sparse::unit(1);
        // x(xx) = x*y = x but (xx)x = y*x = 0
        let err = Algebra::new(labels, mult, sparse::unit(0), None).unwrap_err();
        assert!(matches!(err, Error::Invariant(_)));
    }
}
