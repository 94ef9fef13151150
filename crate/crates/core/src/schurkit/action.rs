use std::collections::{BTreeMap, HashMap};

use crate::cyclic::SuperSpace;
use crate::error::{Error, Result};
use crate::exactlin::QMatrix;
use crate::superkit::GradedSpace;

use super::group_algebra::{central_idempotent, young_symmetrizer, GroupAlgebraElement};
use super::partition::{is_permutation, partitions, Partition};

/// Largest dimension of a tensor power the actions are built on.
pub const MAX_TENSOR_DIM: usize = 50_000;

fn tensor_dim(d: usize, n: usize) -> Result<usize> {
    let too_big = || Error::cap("tensor power dimension", usize::MAX, MAX_TENSOR_DIM);
    let mut total: usize = 1;
    for _ in 0..n {
        total = total.checked_mul(d).ok_or_else(too_big)?;
        if total > MAX_TENSOR_DIM {
            return Err(Error::cap("tensor power dimension", total, MAX_TENSOR_DIM));
        }
    }
    Ok(total)
}

/// Basis of `V^{⊗n}`: index `Σ i_k d^{n-1-k}`, first factor most significant;
/// basis vector `i` of `V` is odd iff `i ≥ d⁺` (even-first ordering).
fn digits(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for k in (0..n).rev() {
        out[k] = idx % d;
        idx /= d;
    }
    out
}

fn undigits(ds: &[usize], d: usize) -> usize {
    ds.iter().fold(0, |acc, &x| acc * d + x)
}

/// `σ · (v_0 ⊗ … ⊗ v_{n-1})`: the factor in position `a` moves to position
/// `σ(a)`, with the Koszul sign of the odd factors that cross.
fn act_on_basis(odd: &dyn Fn(usize) -> bool, sigma: &[usize], ds: &[usize]) -> (Vec<usize>, bool) {
    let n = ds.len();
    let mut out = vec![0; n];
    for (a, &x) in ds.iter().enumerate() {
        out[sigma[a]] = x;
    }
    let mut negative = false;
    for a in 0..n {
        for b in a + 1..n {
            if sigma[a] > sigma[b] && odd(ds[a]) && odd(ds[b]) {
                negative = !negative;
            }
        }
    }
    (out, negative)
}

/// The signed permutation matrix of `σ` on `V^{⊗n}`.
pub fn tensor_power_action(v: SuperSpace, n: usize, sigma: &[usize]) -> Result<QMatrix> {
    if sigma.len() != n || !is_permutation(sigma) {
        return Err(Error::invalid(format!("{sigma:?} is not a permutation of degree {n}")));
    }
    element_action(v, &GroupAlgebraElement::basis(sigma.to_vec()))
}

/// The action of an element of `Q[S_n]` on `V^{⊗n}`.
pub fn element_action(v: SuperSpace, x: &GroupAlgebraElement) -> Result<QMatrix> {
    let n = x.degree();
    let d = v.even + v.odd;
    let total = tensor_dim(d, n)?;
    let odd = |i: usize| i >= v.even;
    let mut triplets = Vec::new();
    for col in 0..total {
        let ds = digits(col, d, n);
        for (sigma, c) in x.terms() {
            let (img, negative) = act_on_basis(&odd, sigma, &ds);
            triplets.push((undigits(&img, d), col, if negative { -c.clone() } else { c.clone() }));
        }
    }
    Ok(QMatrix::from_triplets(total, total, triplets))
}

/// Rank of `x` on `V^{⊗n}`, block by block: basis tensors with equal `key`
/// must span subspaces stable under every permutation.
fn blockwise_rank<K: Ord>(
    x: &GroupAlgebraElement,
    d: usize,
    odd: &dyn Fn(usize) -> bool,
    key: impl Fn(&[usize]) -> K,
) -> Result<usize> {
    let n = x.degree();
    let total = tensor_dim(d, n)?;
    let mut blocks: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for idx in 0..total {
        blocks.entry(key(&digits(idx, d, n))).or_default().push(idx);
    }
    let mut rank = 0;
    for members in blocks.values() {
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut triplets = Vec::new();
        for (k, &col) in members.iter().enumerate() {
            let ds = digits(col, d, n);
            for (sigma, coef) in x.terms() {
                let (img, negative) = act_on_basis(odd, sigma, &ds);
                let row = *pos.get(&undigits(&img, d)).ok_or_else(|| Error::invariant("permutation action leaves a block"))?;
                triplets.push((row, k, if negative { -coef.clone() } else { coef.clone() }));
            }
        }
        rank += QMatrix::from_triplets(members.len(), members.len(), triplets).rank();
    }
    Ok(rank)
}

/// `dim c_λ(V^{⊗n})`, the rank of the central idempotent on the tensor power
/// (the `V_λ`-isotypic part, of dimension `f^λ · dim S_λ(V)`). Computed on the
/// blocks of basis tensors sharing the same multiset of factors.
pub fn schur_dimension(lambda: &Partition, v: SuperSpace) -> Result<usize> {
    let d = v.even + v.odd;
    tensor_dim(d, lambda.weight())?;
    let odd = |i: usize| i >= v.even;
    blockwise_rank(&central_idempotent(lambda)?, d, &odd, |ds| {
        let mut sorted = ds.to_vec();
        sorted.sort_unstable();
        sorted
    })
}

/// `dim S_λ(V)` through the image of the Young symmetrizer on the whole
/// tensor power.
pub fn schur_dimension_young(lambda: &Partition, v: SuperSpace) -> Result<usize> {
    tensor_dim(v.even + v.odd, lambda.weight())?;
    Ok(element_action(v, &young_symmetrizer(lambda)?)?.rank())
}

/// `dim c_λ(V^{⊗n})` for a Z-graded space, computed degree by degree: the
/// action preserves the total degree, signs follow the degree parity.
pub fn schur_dimension_graded(lambda: &Partition, g: &GradedSpace) -> Result<usize> {
    let degrees: Vec<i64> = g.basis_degrees();
    tensor_dim(degrees.len(), lambda.weight())?;
    let odd = |i: usize| degrees[i].rem_euclid(2) == 1;
    blockwise_rank(&central_idempotent(lambda)?, degrees.len(), &odd, |ds| ds.iter().map(|&i| degrees[i]).sum::<i64>())
}

/// A partition of least weight (at most `max_weight`) whose central
/// idempotent annihilates `V^{⊗n}`.
pub fn is_schur_finite(v: SuperSpace, max_weight: usize) -> Result<Partition> {
    for n in 1..=max_weight {
        for lambda in partitions(n) {
            if schur_dimension(&lambda, v)? == 0 {
                return Ok(lambda);
            }
        }
    }
    Err(Error::cap("weight of an annihilating partition", max_weight + 1, max_weight))
}

/// The rectangle `(d⁻+1)^{d⁺+1}`: the smallest partition whose diagram
/// contains the box `(d⁺+1, d⁻+1)`.
pub fn rectangle_criterion(v: SuperSpace) -> Partition {
    Partition::rectangle(v.even + 1, v.odd + 1)
}
