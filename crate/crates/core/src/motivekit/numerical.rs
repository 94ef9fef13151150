use serde::Serialize;

use crate::algkit::{Algebra, Bimodule};
use crate::error::{Error, Result};
use crate::exactlin::scalar::int;
use crate::exactlin::{self, jacobson_radical, sparse, LinSubspace, QMatrix, Scalar, SparseVec};

use super::{compose, intersection_number, same_algebra, Correspondence};

/// Intersection numbers `⟨x_i · y_j⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingMatrix {
    pub entries: QMatrix,
}

impl PairingMatrix {
    pub fn compute(xs: &[Correspondence], ys: &[Correspondence]) -> Result<Self> {
        let mut trips = Vec::new();
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                trips.push((i, j, intersection_number(x, y)?));
            }
        }
        Ok(Self { entries: QMatrix::from_triplets(xs.len(), ys.len(), trips) })
    }

    pub fn rank(&self) -> usize {
        exactlin::rank(&self.entries)
    }
}

/// The numerically trivial part of a spanning set of `Hom(A, B)`.
#[derive(Debug, Clone)]
pub struct NumericalQuotient {
    pub span_size: usize,
    pub pairing: PairingMatrix,
    /// Coefficient vectors `c` with `Σ c_i x_i` numerically trivial.
    pub kernel: LinSubspace,
    /// The same on the side of the test correspondences.
    pub right_kernel: LinSubspace,
    pub quotient_dim: usize,
}

/// The projective bimodules `A e_i ⊗ f_j B`, which span `K_0` when both
/// algebras have finite global dimension.
pub fn projective_span(a: &Algebra, b: &Algebra) -> Result<Vec<Correspondence>> {
    let mut out = Vec::new();
    for i in 0..a.idempotents().len() {
        for j in 0..b.idempotents().len() {
            out.push(Correspondence::from_bimodule(&Bimodule::projective(a, i, b, j)?));
        }
    }
    Ok(out)
}

/// Numerical kernel of the span of `basis ⊂ Hom(A, B)`, tested against
/// `tests ⊂ Hom(B, A)` (by default the projective bimodules).
pub fn numerical_kernel(
    a: &Algebra,
    b: &Algebra,
    basis: &[Correspondence],
    tests: Option<&[Correspondence]>,
) -> Result<NumericalQuotient> {
    for x in basis {
        if !same_algebra(x.source(), a) || !same_algebra(x.target(), b) {
            return Err(Error::invalid("basis element is not a correspondence A -> B"));
        }
    }
    let default_tests;
    let tests = match tests {
        Some(t) => t,
        None => {
            default_tests = projective_span(b, a)?;
            &default_tests[..]
        }
    };
    let pairing = PairingMatrix::compute(basis, tests)?;
    let kernel = exactlin::kernel(&pairing.entries.transpose());
    let right_kernel = exactlin::kernel(&pairing.entries);
    Ok(NumericalQuotient { span_size: basis.len(), quotient_dim: basis.len() - kernel.dim(), pairing, kernel, right_kernel })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemisimplicityReport {
    /// Dimension of the numerical endomorphism algebra spanned.
    pub end_dim: usize,
    pub radical_dim: usize,
    /// Indices of the basis correspondences used as algebra basis after the unit.
    pub chosen: Vec<usize>,
}

impl SemisimplicityReport {
    pub fn is_semisimple(&self) -> bool {
        self.radical_dim == 0
    }
}

/// Builds the algebra spanned by the numerical classes of `[A]` and `basis`
/// under composition and reports its Jacobson radical. Refuses when the span
/// is not closed under composition.
pub fn semisimplicity_check(a: &Algebra, basis: &[Correspondence]) -> Result<SemisimplicityReport> {
    let tests = projective_span(a, a)?;
    let class = |x: &Correspondence| -> Result<SparseVec> {
        let row: Result<Vec<Scalar>> = tests.iter().map(|t| intersection_number(x, t)).collect();
        Ok(sparse::from_dense(&row?))
    };
    let unit = Correspondence::identity(a);
    let mut chosen_corr = vec![unit.clone()];
    let mut chosen = Vec::new();
    let mut span = LinSubspace::from_vectors(tests.len(), [&class(&unit)?]);
    let mut classes = vec![class(&unit)?];
    if classes[0].is_empty() {
        return Err(Error::invariant("the unit correspondence is numerically trivial"));
    }
    for (k, x) in basis.iter().enumerate() {
        let v = class(x)?;
        if !span.contains(&v) {
            span = span.sum(&LinSubspace::from_vectors(tests.len(), [&v]));
            classes.push(v);
            chosen_corr.push(x.clone());
            chosen.push(k);
        }
    }
    let d = chosen_corr.len();
    let cols = QMatrix::from_columns(tests.len(), &classes);
    let mut mult = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let prod = class(&compose(&chosen_corr[i], &chosen_corr[j])?)?;
            mult[i][j] = exactlin::solve(&cols, &prod)
                .ok_or_else(|| Error::invalid("span is not closed under composition; enlarge the basis"))?;
        }
    }
    let labels = (0..d).map(|k| if k == 0 { "1".to_string() } else { format!("c{k}") }).collect();
    let end = Algebra::new(labels, mult, vec![(0, int(1))], None)?;
    Ok(SemisimplicityReport { end_dim: d, radical_dim: jacobson_radical(&end).dim(), chosen })
}
