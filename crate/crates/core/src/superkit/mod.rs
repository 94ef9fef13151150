//! Super linear algebra: Künneth projectors, their tensor product, the two
//! ranks of a super space and the sign-twisted symmetry.
//!
//! Matrices on a super space use the even-first basis. On a tensor product
//! the basis is the Kronecker one, `e_i ⊗ f_j` at index `i·dim W + j`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cyclic::SuperSpace;
use crate::error::{Error, Result};
use crate::exactlin::scalar::int;
use crate::exactlin::QMatrix;

/// Complementary projectors `π⁺`, `π⁻` onto the even and odd parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KunnethPair {
    space: SuperSpace,
    plus: QMatrix,
    minus: QMatrix,
}

impl KunnethPair {
    /// Checks `π⁺ + π⁻ = id`, `π±² = π±`, `π⁺π⁻ = 0` and the image dimensions.
    pub fn new(space: SuperSpace, plus: QMatrix, minus: QMatrix) -> Result<Self> {
        let d = space.even + space.odd;
        let shaped = |m: &QMatrix| m.nrows() == d && m.ncols() == d;
        if !shaped(&plus) || !shaped(&minus) {
            return Err(Error::dims(format!("Künneth projectors must be {d}x{d}")));
        }
        if plus.add(&minus)? != QMatrix::identity(d) {
            return Err(Error::invariant("π⁺ + π⁻ is not the identity"));
        }
        if plus.dot(&plus) != plus || minus.dot(&minus) != minus || !plus.dot(&minus).is_zero() {
            return Err(Error::invariant("Künneth projectors are not orthogonal idempotents"));
        }
        if plus.rank() != space.even || minus.rank() != space.odd {
            return Err(Error::invariant(format!(
                "Künneth projectors have ranks ({}|{}), expected ({}|{})",
                plus.rank(),
                minus.rank(),
                space.even,
                space.odd
            )));
        }
        Ok(KunnethPair { space, plus, minus })
    }

    pub fn space(&self) -> SuperSpace {
        self.space
    }

    pub fn plus(&self) -> &QMatrix {
        &self.plus
    }

    pub fn minus(&self) -> &QMatrix {
        &self.minus
    }
}

/// The block projectors of `(d⁺|d⁻)` in the even-first basis.
pub fn kunneth_projectors(v: SuperSpace) -> KunnethPair {
    let d = v.even + v.odd;
    let plus = QMatrix::from_triplets(d, d, (0..v.even).map(|i| (i, i, int(1))));
    let minus = QMatrix::from_triplets(d, d, (v.even..d).map(|i| (i, i, int(1))));
    KunnethPair::new(v, plus, minus).expect("block projectors")
}

pub fn super_tensor(v: SuperSpace, w: SuperSpace) -> SuperSpace {
    SuperSpace::new(v.even * w.even + v.odd * w.odd, v.even * w.odd + v.odd * w.even)
}

/// `π⁺_{A⊗B} = π⁺_A ⊗ π⁺_B + π⁻_A ⊗ π⁻_B` and
/// `π⁻_{A⊗B} = π⁺_A ⊗ π⁻_B + π⁻_A ⊗ π⁺_B`.
pub fn kunneth_tensor(a: &KunnethPair, b: &KunnethPair) -> Result<KunnethPair> {
    let plus = a.plus.kron(&b.plus).add(&a.minus.kron(&b.minus))?;
    let minus = a.plus.kron(&b.minus).add(&a.minus.kron(&b.plus))?;
    KunnethPair::new(super_tensor(a.space, b.space), plus, minus)
}

/// The categorical rank in super vector spaces, `d⁺ − d⁻`.
pub fn rank_super(v: SuperSpace) -> i64 {
    v.euler_characteristic()
}

/// The rank after the sign twist, `d⁺ + d⁻`.
pub fn rank_dagger(v: SuperSpace) -> usize {
    v.even + v.odd
}

/// The symmetry `V⊗V -> V⊗V` before and after the twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryTwist {
    /// Koszul-signed swap.
    pub before: QMatrix,
    /// Twisted constraint: the sign is removed on odd⊗odd.
    pub after: QMatrix,
}

/// `c = swap ∘ (id − 2π⁻⊗π⁻)` and its twist `c† = c ∘ (id − 2π⁻⊗π⁻)`; both
/// are checked to square to the identity.
pub fn twist_symmetry(v: SuperSpace, pair: &KunnethPair) -> Result<SymmetryTwist> {
    if pair.space != v {
        return Err(Error::invalid("the Künneth pair belongs to a different super space"));
    }
    let d = v.even + v.odd;
    let swap = QMatrix::from_triplets(d * d, d * d, (0..d).flat_map(|i| (0..d).map(move |j| (j * d + i, i * d + j, int(1)))));
    let sign = QMatrix::identity(d * d).sub(&pair.minus.kron(&pair.minus).scale(&int(2)))?;
    let before = swap.dot(&sign);
    let after = before.dot(&sign);
    let id = QMatrix::identity(d * d);
    if before.dot(&before) != id || after.dot(&after) != id {
        return Err(Error::invariant("symmetry constraint does not square to the identity"));
    }
    Ok(SymmetryTwist { before, after })
}

/// A finite-dimensional Z-graded space, degree -> dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedSpace {
    dims: BTreeMap<i64, usize>,
}

impl GradedSpace {
    /// Zero-dimensional degrees are dropped.
    pub fn new(dims: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut out = BTreeMap::new();
        for (deg, d) in dims {
            *out.entry(deg).or_insert(0) += d;
        }
        out.retain(|_, d| *d > 0);
        GradedSpace { dims: out }
    }

    pub fn dims(&self) -> &BTreeMap<i64, usize> {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// Degrees of a homogeneous basis, ascending.
    pub fn basis_degrees(&self) -> Vec<i64> {
        self.dims.iter().flat_map(|(&deg, &d)| std::iter::repeat_n(deg, d)).collect()
    }

    /// The underlying super space: even and odd degrees summed.
    pub fn collapse(&self) -> SuperSpace {
        let (even, odd) =
            self.dims.iter().fold((0, 0), |(e, o), (&deg, &d)| if deg.rem_euclid(2) == 0 { (e + d, o) } else { (e, o + d) });
        SuperSpace::new(even, odd)
    }

    pub fn tensor(&self, other: &GradedSpace) -> GradedSpace {
        GradedSpace::new(self.dims.iter().flat_map(|(&a, &m)| other.dims.iter().map(move |(&b, &n)| (a + b, m * n))))
    }
}

#[cfg(test)]
mod tests;
