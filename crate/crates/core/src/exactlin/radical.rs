use num_traits::Zero;

use super::scalar::{int, Scalar};
use super::sparse::{self, SparseVec};
use super::{kernel, LinSubspace, QMatrix};
use crate::algkit::Algebra;
use crate::error::{Error, Result};

/// Jacobson radical by Dickson's criterion (characteristic zero):
/// `rad(A) = { x : tr(L_{x y}) = 0 for every basis y }`.
pub fn jacobson_radical(a: &Algebra) -> LinSubspace {
    let d = a.dim();
    // tr(L_{b_k}) for every basis vector, then the trace form is linear in products
    let traces: Vec<Scalar> = (0..d).map(|k| a.left_mult(&sparse::unit(k)).trace().expect("square")).collect();
    let tr = |v: &SparseVec| v.iter().fold(Scalar::zero(), |s, (k, c)| s + c * &traces[*k]);
    let gram: Vec<Vec<Scalar>> = (0..d).map(|i| (0..d).map(|j| tr(a.basis_product(i, j))).collect()).collect();
    kernel(&QMatrix::from_dense(d, d, &gram))
}

/// `I^k` as a subspace, for a subspace `I` of `A`.
pub fn ideal_power(a: &Algebra, ideal: &LinSubspace, k: usize) -> LinSubspace {
    if k == 0 {
        return LinSubspace::full(a.dim());
    }
    let mut cur = ideal.clone();
    for _ in 1..k {
        let mut prods = Vec::new();
        for x in cur.basis() {
            for y in ideal.basis() {
                let p = a.mul(x, y);
                if !p.is_empty() {
                    prods.push(p);
                }
            }
        }
        cur = LinSubspace::from_vectors(a.dim(), &prods);
        if cur.is_zero() {
            break;
        }
    }
    cur
}

fn is_two_sided_ideal(a: &Algebra, ideal: &LinSubspace) -> bool {
    (0..a.dim()).all(|k| {
        let b = sparse::unit(k);
        ideal.basis().iter().all(|x| ideal.contains(&a.mul(&b, x)) && ideal.contains(&a.mul(x, &b)))
    })
}

/// Lifts an idempotent modulo a nilpotent two-sided ideal to an idempotent of
/// `A` by iterating `e <- 3e^2 - 2e^3`.
///
/// Each step squares the defect `e^2 - e` in the ideal filtration, so the
/// loop ends after about `log2` of the nilpotency index.
pub fn lift_idempotent(e_bar: &[(usize, Scalar)], a: &Algebra, nil_ideal: &LinSubspace) -> Result<SparseVec> {
    if nil_ideal.ambient() != a.dim() {
        return Err(Error::dims("ideal lives in a different ambient space"));
    }
    if !is_two_sided_ideal(a, nil_ideal) {
        return Err(Error::invalid("subspace is not a two-sided ideal"));
    }
    if !ideal_power(a, nil_ideal, a.dim() + 1).is_zero() {
        return Err(Error::invalid("ideal is not nilpotent"));
    }
    let defect = sparse::sub(&a.mul(e_bar, e_bar), e_bar);
    if !nil_ideal.contains(&defect) {
        return Err(Error::invalid("element is not idempotent modulo the ideal"));
    }
    let mut e: SparseVec = e_bar.to_vec();
    for _ in 0..=usize::BITS {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            debug_assert!(nil_ideal.contains(&sparse::sub(&e, e_bar)));
            return Ok(e);
        }
        let e3 = a.mul(&e2, &e);
        e = sparse::sub(&sparse::scale(&e2, &int(3)), &sparse::scale(&e3, &int(2)));
    }
    unreachable!("Newton iteration on a nilpotent ideal terminates")
}
