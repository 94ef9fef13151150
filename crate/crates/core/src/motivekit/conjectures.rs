//! Per-instance checkers. A positive verdict exhibits a witness inside the
//! declared span; failure to find one in a span refutes nothing.

use serde::Serialize;

use crate::algkit::{Algebra, Bimodule};
use crate::cyclic::{chern_character, hp_of_homomorphism, periodic_cyclic, Certificate, HPResult};
use crate::error::{Error, Result};
use crate::exactlin::{self, sparse, LinSubspace, QMatrix, Scalar, SparseVec};

use super::{compose, same_algebra, Correspondence, PairingMatrix};

/// An endomorphism correspondence with its realization on `(HP^+, HP^-)`.
#[derive(Debug, Clone)]
pub struct Generator {
    pub correspondence: Correspondence,
    pub even: QMatrix,
    pub odd: QMatrix,
}

/// The correspondence `f(1) B` of an algebra homomorphism with the map it
/// induces on periodic cyclic homology.
pub fn realize_homomorphism(a: &Algebra, b: &Algebra, f: &QMatrix, n_max: usize) -> Result<Generator> {
    let (even, odd) = hp_of_homomorphism(a, b, f, n_max)?;
    Ok(Generator { correspondence: Correspondence::from_bimodule(&Bimodule::from_hom_left(a, b, f)?), even, odd })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CncVerdict {
    /// Coefficients expressing `π^+` and `π^-` in the generators.
    Witness {
        plus: Vec<String>,
        minus: Vec<String>,
    },
    UndecidedInSpan,
}

#[derive(Debug, Clone)]
pub struct CncReport {
    pub verdict: CncVerdict,
    /// `π^+` as a correspondence, when found.
    pub plus: Option<Correspondence>,
    pub minus: Option<Correspondence>,
    /// Products whose class fell in the span and whose realization was checked.
    pub checked_products: usize,
    pub even_dim: usize,
    pub odd_dim: usize,
}

fn flatten(even: &QMatrix, odd: &QMatrix) -> SparseVec {
    let ne = even.ncols();
    let mut v = Vec::new();
    for (r, row) in even.row_vecs().iter().enumerate() {
        v.extend(row.iter().map(|(c, x)| (r * ne + c, x.clone())));
    }
    let off = ne * ne;
    let no = odd.ncols();
    for (r, row) in odd.row_vecs().iter().enumerate() {
        v.extend(row.iter().map(|(c, x)| (off + r * no + c, x.clone())));
    }
    v
}

/// Looks for the Künneth projectors `π^±` of `A` in the span of the
/// generators' realizations, after checking the realizations are linear and
/// multiplicative wherever the generators' classes allow a comparison.
pub fn cnc_check(a: &Algebra, generators: &[Generator]) -> Result<CncReport> {
    let (ne, no) = match generators.first() {
        Some(g) => (g.even.nrows(), g.odd.nrows()),
        None => return Err(Error::invalid("at least one generator is required")),
    };
    for g in generators {
        let c = &g.correspondence;
        if !same_algebra(c.source(), a) || !same_algebra(c.target(), a) {
            return Err(Error::invalid("generators must be endomorphisms of the algebra"));
        }
        if g.even.nrows() != ne || g.even.ncols() != ne || g.odd.nrows() != no || g.odd.ncols() != no {
            return Err(Error::dims("realizations must all be square of the same sizes"));
        }
    }
    let nd = ne * ne + no * no;
    let classes: Vec<SparseVec> = generators.iter().map(|g| sparse::from_dense(&g.correspondence.class_vector())).collect();
    let class_len = a.idempotents().len().pow(2);
    let class_mat = QMatrix::from_columns(class_len, &classes);
    let real: Vec<SparseVec> = generators.iter().map(|g| flatten(&g.even, &g.odd)).collect();
    let real_mat = QMatrix::from_columns(nd, &real);
    // a relation among classes must hold among realizations
    for rel in exactlin::kernel(&class_mat).basis() {
        if !real_mat.apply(rel).is_empty() {
            return Err(Error::invalid("realizations are not linear in the classes of the generators"));
        }
    }
    let mut checked = 0;
    for gi in generators {
        for gj in generators {
            let prod = compose(&gi.correspondence, &gj.correspondence)?;
            let cv = sparse::from_dense(&prod.class_vector());
            if let Some(mu) = exactlin::solve(&class_mat, &cv) {
                let expected = flatten(&gj.even.dot(&gi.even), &gj.odd.dot(&gi.odd));
                if real_mat.apply(&mu) != expected {
                    return Err(Error::invalid("realizations are not multiplicative on the composition table"));
                }
                checked += 1;
            }
        }
    }
    let target_plus = flatten(&QMatrix::identity(ne), &QMatrix::zeros(no, no));
    let target_minus = flatten(&QMatrix::zeros(ne, ne), &QMatrix::identity(no));
    let sol_plus = exactlin::solve(&real_mat, &target_plus);
    let sol_minus = exactlin::solve(&real_mat, &target_minus);
    let build = |sol: &SparseVec| -> Result<Correspondence> {
        let parts: Vec<(Scalar, &Correspondence)> =
            sol.iter().map(|(k, c)| (c.clone(), &generators[*k].correspondence)).collect();
        Correspondence::combination(a, a, &parts)
    };
    let dense = |sol: &SparseVec| -> Vec<String> {
        sparse::to_dense(sol, generators.len()).iter().map(crate::exactlin::scalar::fmt_scalar).collect()
    };
    let (verdict, plus, minus) = match (sol_plus, sol_minus) {
        (Some(p), Some(m)) => (CncVerdict::Witness { plus: dense(&p), minus: dense(&m) }, Some(build(&p)?), Some(build(&m)?)),
        _ => (CncVerdict::UndecidedInSpan, None, None),
    };
    Ok(CncReport { verdict, plus, minus, checked_products: checked, even_dim: ne, odd_dim: no })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DncVerdict {
    Equal,
    Differ,
}

#[derive(Debug, Clone)]
pub struct DncReport {
    pub verdict: DncVerdict,
    /// Kernel of the Chern character on `K_0 ⊗ Q` (vertex classes `[e_v A]`).
    pub hom_kernel: LinSubspace,
    /// Kernel of the intersection pairing against the classes `[A e_w]`.
    pub num_kernel: LinSubspace,
    /// Columns: Chern classes of the vertices in the canonical `HC` basis.
    pub chern: QMatrix,
    pub pairing: PairingMatrix,
    pub hp: HPResult,
    pub caveat: Option<String>,
}

/// Compares homological and numerical equivalence on `K_0(A) ⊗ Q`, spanned by
/// the vertex projectives.
pub fn dnc_check(a: &Algebra, n_max: usize) -> Result<DncReport> {
    let hp = periodic_cyclic(a, n_max)?;
    let caveat = match hp.certificate {
        Certificate::Certified => None,
        Certificate::WindowStable => Some(format!(
            "periodic cyclic homology is stable only inside the window n <= {}; the homological kernel is read in HC_{}",
            n_max - 1,
            if (n_max - 1).is_multiple_of(2) { n_max - 1 } else { n_max - 2 }
        )),
        Certificate::NotStabilized => return Err(Error::uncertified("periodic cyclic homology did not stabilize; raise n_max")),
    };
    let n = a.idempotents().len();
    let mut cols = Vec::with_capacity(n);
    let mut hc_dim = 0;
    for &e in a.idempotents() {
        let ch = chern_character(a, &[vec![sparse::unit(e)]], n_max)?;
        hc_dim = ch.hc_coords.len();
        cols.push(sparse::from_dense(&ch.hc_coords));
    }
    let chern = QMatrix::from_columns(hc_dim, &cols);
    let hom_kernel = exactlin::kernel(&chern);

    let q = Algebra::ground();
    let objects: Vec<Correspondence> =
        (0..n).map(|v| Bimodule::projective(&q, 0, a, v).map(|m| Correspondence::from_bimodule(&m))).collect::<Result<_>>()?;
    let duals: Vec<Correspondence> =
        (0..n).map(|w| Bimodule::projective(a, w, &q, 0).map(|m| Correspondence::from_bimodule(&m))).collect::<Result<_>>()?;
    let pairing = PairingMatrix::compute(&objects, &duals)?;
    let num_kernel = exactlin::kernel(&pairing.entries.transpose());
    let verdict = if hom_kernel.basis() == num_kernel.basis() { DncVerdict::Equal } else { DncVerdict::Differ };
    Ok(DncReport { verdict, hom_kernel, num_kernel, chern, pairing, hp, caveat })
}
