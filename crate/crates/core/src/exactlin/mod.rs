//! Exact rational linear algebra.

mod echelon;
mod matrix;
pub mod poly;
mod radical;
pub mod scalar;
pub mod sparse;
mod subspace;

use num_traits::Zero;

pub use matrix::QMatrix;
pub use radical::{ideal_power, jacobson_radical, lift_idempotent};
pub use scalar::Scalar;
pub use sparse::SparseVec;
pub use subspace::{LinSubspace, Quotient};

use crate::error::{Error, Result};
use echelon::IntEchelon;

/// Rank over Q.
pub fn rank(m: &QMatrix) -> usize {
    let mut e = IntEchelon::new();
    if m.nrows() <= m.ncols() {
        for r in m.row_vecs() {
            e.insert(r);
        }
    } else {
        for c in m.columns() {
            e.insert(&c);
        }
    }
    e.rank()
}

/// Rank of the matrix whose rows (or columns) are the given vectors.
pub fn rank_of_vectors<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut e = IntEchelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Null space of `m`, as a subspace of `Q^cols`.
pub fn kernel(m: &QMatrix) -> LinSubspace {
    let rref = LinSubspace::row_space(m);
    let pivots = rref.pivots();
    let mut is_pivot = vec![false; m.ncols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..m.ncols()).filter(|&c| !is_pivot[c]).collect();
    let mut slot = vec![usize::MAX; m.ncols()];
    for (k, &f) in free.iter().enumerate() {
        slot[f] = k;
    }
    let mut vecs: Vec<SparseVec> = free.iter().map(|&f| sparse::unit(f)).collect();
    for (row, &p) in rref.basis().iter().zip(&pivots) {
        for (c, x) in row.iter().skip(1) {
            vecs[slot[*c]].push((p, -x.clone()));
        }
    }
    for v in &mut vecs {
        v.sort_by_key(|(i, _)| *i);
    }
    LinSubspace::from_vectors(m.ncols(), &vecs)
}

/// Some solution of `m x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &QMatrix, b: &[(usize, Scalar)]) -> Option<SparseVec> {
    let n = m.ncols();
    let mut rows: Vec<SparseVec> = m.row_vecs().to_vec();
    for (r, x) in b {
        rows[*r].push((n, x.clone()));
    }
    let aug = LinSubspace::from_vectors(n + 1, &rows);
    let mut x = Vec::new();
    for row in aug.basis() {
        let p = row[0].0;
        if p == n {
            return None;
        }
        let rhs = sparse::get(row, n);
        if !rhs.is_zero() {
            x.push((p, rhs));
        }
    }
    Some(x)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.nrows();
    // row reduce [m | I]
    let rows: Vec<SparseVec> = m
        .row_vecs()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.push((n + i, Scalar::from_integer(1.into())));
            r
        })
        .collect();
    let rref = LinSubspace::from_vectors(2 * n, &rows);
    if rref.pivots().iter().take(n).enumerate().any(|(i, &p)| p != i) || rref.dim() < n {
        return None;
    }
    let inv: Vec<SparseVec> = rref.basis().iter().map(|r| r.iter().skip(1).map(|(c, x)| (c - n, x.clone())).collect()).collect();
    Some(QMatrix::from_rows(n, inv))
}

/// Nilpotency test for a square matrix `f` of size `d` through the traces of
/// its powers: in characteristic zero, `f` is nilpotent iff `tr(f^k) = 0` for
/// `k = 1..=d` (Newton's identities recover the characteristic polynomial).
pub fn is_nilpotent_by_traces(f: &QMatrix) -> Result<bool> {
    if !f.is_square() {
        return Err(Error::dims(format!("nilpotency test needs a square matrix, got {}x{}", f.nrows(), f.ncols())));
    }
    let mut p = f.clone();
    for k in 1..=f.nrows() {
        if !p.trace()?.is_zero() {
            return Ok(false);
        }
        if k < f.nrows() {
            p = p.dot(f);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use scalar::int;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&QMatrix::identity(2)), 2);
        assert_eq!(rank(&QMatrix::zeros(2, 2)), 0);
        assert_eq!(rank(&QMatrix::from_ints(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&QMatrix::identity(3)).dim(), 0);
        assert_eq!(kernel(&QMatrix::zeros(3, 3)), LinSubspace::full(3));
        let k = kernel(&QMatrix::from_ints(&[&[1, 1]]));
        assert_eq!(k, LinSubspace::from_vectors(2, &[vec![(0, int(1)), (1, int(-1))]]));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = QMatrix::from_ints(&[&[1, 1], &[1, -1]]);
        let x = solve(&m, &[(0, int(2))]).unwrap();
        assert_eq!(m.apply(&x), vec![(0, int(2))]);
        let singular = QMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(solve(&singular, &[(0, int(1))]).is_none());
    }

    #[test]
    fn nilpotency_examples() {
        assert!(is_nilpotent_by_traces(&QMatrix::from_ints(&[&[0, 1], &[0, 0]])).unwrap());
        assert!(!is_nilpotent_by_traces(&QMatrix::identity(2)).unwrap());
        // trace zero but not nilpotent
        assert!(!is_nilpotent_by_traces(&QMatrix::from_ints(&[&[1, 0], &[0, -1]])).unwrap());
        assert!(is_nilpotent_by_traces(&QMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn nilpotency_block_shift_matches_powers() {
        // strict block shift of a 4x4 conjugated by an invertible matrix
        let shift = QMatrix::from_ints(&[&[0, 3, 0, 0], &[0, 0, -2, 0], &[0, 0, 0, 5], &[0, 0, 0, 0]]);
        let p = QMatrix::from_ints(&[&[1, 2, 0, 0], &[0, 1, 0, 1], &[1, 0, 1, 0], &[0, 0, 0, 1]]);
        let pinv = inverse(&p).unwrap();
        let f = p.dot(&shift).dot(&pinv);
        assert!(f.pow(4).unwrap().is_zero());
        assert!(!f.pow(3).unwrap().is_zero());
        assert!(is_nilpotent_by_traces(&f).unwrap());
    }

    use proptest::collection::vec;
    use proptest::prelude::*;

    fn dense(rows: usize, cols: usize, raw: &[(i64, i64)]) -> QMatrix {
        let entries: Vec<Vec<Scalar>> =
            (0..rows).map(|r| (0..cols).map(|c| scalar::frac(raw[r * cols + c].0, raw[r * cols + c].1)).collect()).collect();
        QMatrix::from_dense(rows, cols, &entries)
    }

    proptest! {
        #[test]
        fn rank_plus_nullity(rows in 1usize..6, cols in 1usize..6, raw in vec((-2i64..=2, 1i64..=3), 36)) {
            let m = dense(rows, cols, &raw);
            let k = kernel(&m);
            prop_assert_eq!(rank(&m) + k.dim(), cols);
            for v in k.basis() {
                prop_assert!(m.apply(v).is_empty());
            }
        }

        #[test]
        fn trace_test_matches_powers(n in 1usize..=6, raw in vec((-2i64..=2, 1i64..=2), 36), conj in vec(-2i64..=2, 36), nil in any::<bool>()) {
            let mut f = dense(n, n, &raw);
            if nil {
                // strictly upper triangular, conjugated by a unit lower triangular matrix
                let upper = QMatrix::from_triplets(n, n, (0..n).flat_map(|r| (r + 1..n).map(move |c| (r, c))).map(|(r, c)| (r, c, f.get(r, c))));
                let lower = QMatrix::from_triplets(n, n, (0..n).flat_map(|r| (0..=r).map(move |c| (r, c))).map(|(r, c)| (r, c, if r == c { int(1) } else { int(conj[r * n + c]) })));
                f = lower.mul(&upper).unwrap().mul(&inverse(&lower).unwrap()).unwrap();
            }
            prop_assert_eq!(is_nilpotent_by_traces(&f).unwrap(), f.pow(n).unwrap().is_zero());
        }
    }
}
