//! Change of coefficients to a number field `K = Q[t]/(p)`: every hom space
//! becomes `Hom ⊗ K`, modelled over Q with basis `f_i t^k`, `k < deg p`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::poly::Poly;
use crate::exactlin::scalar::int;
use crate::exactlin::sparse::Accum;
use crate::exactlin::{QMatrix, Scalar, SparseVec};

use super::{Monoidal, PresentedCategory};

/// Degree cap for the irreducibility check.
const MAX_FIELD_DEGREE: usize = 6;

/// `t^a` reduced modulo `p`, for `a < 2 deg p`.
fn powers_mod(p: &Poly, d: usize) -> Vec<Vec<Scalar>> {
    (0..2 * d)
        .map(|a| {
            let mut c = vec![int(0); a + 1];
            c[a] = int(1);
            let r = Poly::new(c).rem(p);
            (0..d).map(|k| r.coeff(k)).collect()
        })
        .collect()
}

/// The Q-linear trace `Tr_{K/Q}(t^a)` for `a < d`.
fn field_traces(powers: &[Vec<Scalar>], d: usize) -> Vec<Scalar> {
    (0..d)
        .map(|a| {
            // multiplication by t^a on the basis 1, t, .., t^{d-1}
            let m = QMatrix::from_dense(
                d,
                d,
                &(0..d).map(|r| (0..d).map(|k| powers[a + k][r].clone()).collect()).collect::<Vec<_>>(),
            );
            m.trace().expect("square")
        })
        .collect()
}

/// `f ⊗ t^a` paired with `g ⊗ t^b` through a bilinear table, landing in
/// `(table result) ⊗ t^{a+b}`.
fn extend_entry(v: &SparseVec, a: usize, b: usize, powers: &[Vec<Scalar>], d: usize) -> SparseVec {
    let mut acc = Accum::new();
    for (m, c) in v {
        for (r, t) in powers[a + b].iter().enumerate() {
            if !num_traits::Zero::is_zero(t) {
                acc.add(m * d + r, c * t);
            }
        }
    }
    acc.finish()
}

fn extend_table(t: &[Vec<SparseVec>], powers: &[Vec<Scalar>], d: usize) -> Vec<Vec<SparseVec>> {
    let rows = t.len() * d;
    let cols = t.first().map_or(0, |r| r.len()) * d;
    (0..rows).map(|ia| (0..cols).map(|jb| extend_entry(&t[ia / d][jb / d], ia % d, jb % d, powers, d)).collect()).collect()
}

fn extend_vec(v: &SparseVec, d: usize) -> SparseVec {
    v.iter().map(|(i, c)| (i * d, c.clone())).collect()
}

/// `C ⊗_Q K` for `K = Q[t]/(minpoly)`; traces become `Tr_{K/Q} ∘ tr`.
pub fn extend_coefficients(c: &PresentedCategory, minpoly: &Poly) -> Result<PresentedCategory> {
    let d = minpoly.degree().ok_or_else(|| Error::invalid("the minimal polynomial is zero"))?;
    if d == 0 || !minpoly.is_irreducible(MAX_FIELD_DEGREE)? {
        return Err(Error::invalid("the minimal polynomial must be irreducible over Q"));
    }
    let p = minpoly.monic();
    let powers = powers_mod(&p, d);
    let n = c.n_objects();
    let labels: Vec<Vec<Vec<String>>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    c.hom_labels(x, y)
                        .iter()
                        .flat_map(|l| {
                            (0..d).map(move |k| match k {
                                0 => l.clone(),
                                1 => format!("{l}*t"),
                                _ => format!("{l}*t^{k}"),
                            })
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut composition = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if c.hom_dim(x, y) == 0 || c.hom_dim(y, z) == 0 {
                    continue;
                }
                let t: Vec<Vec<SparseVec>> = (0..c.hom_dim(x, y))
                    .map(|i| (0..c.hom_dim(y, z)).map(|j| c.basis_composite(x, y, z, i, j).clone()).collect())
                    .collect();
                composition.insert((x, y, z), extend_table(&t, &powers, d));
            }
        }
    }
    let identities = (0..n).map(|x| extend_vec(c.identity(x), d)).collect();
    let mut out = PresentedCategory::assemble(c.objects().to_vec(), labels, composition, identities)?;
    if let Some(m) = c.monoidal() {
        let tensor_morphisms = m.tensor_morphisms.iter().map(|(k, t)| (*k, extend_table(t, &powers, d))).collect();
        let symmetry = m.symmetry.iter().map(|r| r.iter().map(|s| s.as_ref().map(|v| extend_vec(v, d))).collect()).collect();
        out.set_monoidal_unchecked(Some(Monoidal {
            unit: m.unit,
            tensor_objects: m.tensor_objects.clone(),
            tensor_morphisms,
            symmetry,
        }));
    }
    out.set_grading_unchecked(c.grading().cloned());
    out.set_field_degree(c.field_degree() * d);
    out.validate()?;
    if let Some(tr) = c.traces() {
        let ft = field_traces(&powers, d);
        let t = (0..n).map(|x| (0..c.hom_dim(x, x) * d).map(|ia| &tr[x][ia / d] * &ft[ia % d]).collect()).collect();
        out = out.with_traces(t)?;
    }
    Ok(out)
}
