//! Ideals of presented categories, quotients by them, the trace ideal `N`,
//! and the change of symmetry by an even/odd splitting.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::scalar::int;
use crate::exactlin::sparse;
use crate::exactlin::{self, LinSubspace, QMatrix, Quotient, SparseVec};

use super::{evaluate, fmt_combination, Monoidal, PresentedCategory};

/// A subspace of every hom space, indexed `[X][Y]`.
pub type HomIdeal = Vec<Vec<LinSubspace>>;

fn check_shape(c: &PresentedCategory, ideal: &HomIdeal) -> Result<()> {
    let n = c.n_objects();
    if ideal.len() != n || (0..n).any(|x| ideal[x].len() != n || (0..n).any(|y| ideal[x][y].ambient() != c.hom_dim(x, y))) {
        return Err(Error::dims("an ideal needs one subspace of every hom space"));
    }
    Ok(())
}

/// Closure of the subspaces under composition with basis morphisms on both
/// sides. Returns the first offending pair.
pub(crate) fn composition_leak(c: &PresentedCategory, ideal: &HomIdeal) -> Option<(usize, usize)> {
    let n = c.n_objects();
    for x in 0..n {
        for y in 0..n {
            for f in ideal[x][y].basis() {
                for z in 0..n {
                    for j in 0..c.hom_dim(y, z) {
                        if !ideal[x][z].contains(&c.compose(x, y, z, f, &sparse::unit(j))) {
                            return Some((x, z));
                        }
                    }
                    for j in 0..c.hom_dim(z, x) {
                        if !ideal[z][y].contains(&c.compose(z, x, y, &sparse::unit(j), f)) {
                            return Some((z, y));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Closure under `f ↦ f⊗g` and `f ↦ g⊗f` wherever the products are defined.
fn is_tensor_ideal(c: &PresentedCategory, ideal: &HomIdeal) -> bool {
    let n = c.n_objects();
    for x in 0..n {
        for x2 in 0..n {
            for f in ideal[x][x2].basis() {
                for y in 0..n {
                    for y2 in 0..n {
                        for j in 0..c.hom_dim(y, y2) {
                            let g = sparse::unit(j);
                            if let (Some(fg), Some(s), Some(s2)) =
                                (c.tensor_morphism((x, x2), (y, y2), f, &g), c.tensor_object(x, y), c.tensor_object(x2, y2))
                            {
                                if !ideal[s][s2].contains(&fg) {
                                    return false;
                                }
                            }
                            if let (Some(gf), Some(s), Some(s2)) =
                                (c.tensor_morphism((y, y2), (x, x2), &g, f), c.tensor_object(y, x), c.tensor_object(y2, x2))
                            {
                                if !ideal[s][s2].contains(&gf) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// `N(X, Y) = { f | tr(g∘f) = 0 for all g: Y -> X }`, with the ideal
/// property verified.
pub fn n_ideal(c: &PresentedCategory) -> Result<HomIdeal> {
    let traces = c.traces().ok_or_else(|| Error::invalid("the trace ideal needs trace functionals on every End space"))?;
    let n = c.n_objects();
    let mut out = vec![Vec::with_capacity(n); n];
    for (x, row) in out.iter_mut().enumerate() {
        for y in 0..n {
            let (dxy, dyx) = (c.hom_dim(x, y), c.hom_dim(y, x));
            let pairing: Vec<SparseVec> = (0..dyx)
                .map(|j| {
                    sparse::from_dense(
                        &(0..dxy).map(|i| evaluate(&traces[x], c.basis_composite(x, y, x, i, j))).collect::<Vec<_>>(),
                    )
                })
                .collect();
            row.push(exactlin::kernel(&QMatrix::from_rows(dxy, pairing)));
        }
    }
    if let Some((x, y)) = composition_leak(c, &out) {
        let o = c.objects();
        return Err(Error::invariant(format!("trace ideal is not closed under composition at ({}, {})", o[x], o[y])));
    }
    Ok(out)
}

/// The quotient category `C/I`: hom spaces `Hom/I` with the induced tables.
/// The monoidal structure descends when `I` is a ⊗-ideal, and traces descend
/// when they vanish on `I`.
pub fn quotient_by_ideal(c: &PresentedCategory, ideal: &HomIdeal) -> Result<PresentedCategory> {
    check_shape(c, ideal)?;
    if let Some((x, y)) = composition_leak(c, ideal) {
        let o = c.objects();
        return Err(Error::invalid(format!("the ideal is not closed under composition at ({}, {})", o[x], o[y])));
    }
    let n = c.n_objects();
    let quots: Vec<Vec<Quotient>> =
        (0..n).map(|x| (0..n).map(|y| Quotient::new(&LinSubspace::full(c.hom_dim(x, y)), &ideal[x][y])).collect()).collect();
    let coords = |x: usize, y: usize, v: &SparseVec| sparse::from_dense(&quots[x][y].coords(v).expect("inside Hom"));
    let labels: Vec<Vec<Vec<String>>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let old = c.hom_labels(x, y);
                    quots[x][y]
                        .reps()
                        .iter()
                        .map(|r| match r.as_slice() {
                            [(k, a)] if *a == int(1) => old[*k].clone(),
                            _ => format!("[{}]", fmt_combination(old, r)),
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
                let (rf, rg) = (quots[x][y].reps(), quots[y][z].reps());
                if rf.is_empty() || rg.is_empty() {
                    continue;
                }
                let t = rf.iter().map(|f| rg.iter().map(|g| coords(x, z, &c.compose(x, y, z, f, g))).collect()).collect();
                composition.insert((x, y, z), t);
            }
        }
    }
    let identities = (0..n).map(|x| coords(x, x, c.identity(x))).collect();
    let mut out = PresentedCategory::assemble(c.objects().to_vec(), labels, composition, identities)?;
    out.set_field_degree(c.field_degree());
    if let Some(m) = c.monoidal() {
        if !is_tensor_ideal(c, ideal) {
            return Err(Error::invalid("the ideal is not a ⊗-ideal, so the monoidal structure does not descend"));
        }
        let mut tensor_morphisms = BTreeMap::new();
        for &(x, x2, y, y2) in m.tensor_morphisms.keys() {
            let (Some(s), Some(s2)) = (m.tensor_objects[x][y], m.tensor_objects[x2][y2]) else { continue };
            let (rf, rg) = (quots[x][x2].reps(), quots[y][y2].reps());
            let t: Vec<Vec<SparseVec>> = rf
                .iter()
                .map(|f| rg.iter().map(|g| coords(s, s2, &c.tensor_morphism((x, x2), (y, y2), f, g).expect("defined"))).collect())
                .collect();
            tensor_morphisms.insert((x, x2, y, y2), t);
        }
        let symmetry = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let xy = m.tensor_objects[x][y]?;
                        let yx = m.tensor_objects[y][x]?;
                        m.symmetry[x][y].as_ref().map(|s| coords(xy, yx, s))
                    })
                    .collect()
            })
            .collect();
        out.set_monoidal_unchecked(Some(Monoidal {
            unit: m.unit,
            tensor_objects: m.tensor_objects.clone(),
            tensor_morphisms,
            symmetry,
        }));
    }
    out.set_grading_unchecked(c.grading().cloned());
    out.validate()?;
    if let Some(tr) = c.traces() {
        if (0..n).all(|x| ideal[x][x].basis().iter().all(|v| num_traits::Zero::is_zero(&evaluate(&tr[x], v)))) {
            let t = (0..n).map(|x| quots[x][x].reps().iter().map(|r| evaluate(&tr[x], r)).collect()).collect();
            out.set_traces_unchecked(Some(t));
        }
    }
    Ok(out)
}

/// Changes the sign of the symmetry on odd⊗odd parts: every `c_{X,Y}` becomes
/// `c_{X,Y} ∘ (id − 2 π⁻_X ⊗ π⁻_Y)` with `π⁻ = id − π⁺`, for the supplied
/// idempotents `π⁺_X ∈ End(X)`. Everything else is kept verbatim; the
/// symmetry axioms are re-checked.
///
/// With `e = 2π⁺ − id` the sign `e_X ⊗ e_Y` also flips the even⊗odd parts and
/// breaks the hexagon, so the correction is applied on odd⊗odd only.
pub fn dagger_twist(c: &PresentedCategory, plus: &[SparseVec]) -> Result<PresentedCategory> {
    let n = c.n_objects();
    let m = c.monoidal().ok_or_else(|| Error::invalid("changing the symmetry needs a monoidal structure"))?;
    if plus.len() != n {
        return Err(Error::dims("one even idempotent per object is required"));
    }
    let mut minus = Vec::with_capacity(n);
    for (x, p) in plus.iter().enumerate() {
        if p.iter().any(|(k, _)| *k >= c.hom_dim(x, x)) {
            return Err(Error::dims(format!("even idempotent of {} out of range", c.objects()[x])));
        }
        if c.compose(x, x, x, p, p) != *p {
            return Err(Error::invalid(format!("π⁺ of {} is not idempotent", c.objects()[x])));
        }
        minus.push(sparse::sub(c.identity(x), p));
    }
    let mut symmetry = m.symmetry.clone();
    for x in 0..n {
        for y in 0..n {
            let Some(s) = &m.symmetry[x][y] else { continue };
            let xy = m.tensor_objects[x][y].expect("symmetry implies the product");
            let yx = m.tensor_objects[y][x].expect("symmetry implies the product");
            let mm = c.tensor_morphism((x, x), (y, y), &minus[x], &minus[y]).expect("defined");
            let eps = sparse::sub(c.identity(xy), &sparse::scale(&mm, &int(2)));
            symmetry[x][y] = Some(c.compose(xy, xy, yx, &eps, s));
        }
    }
    let mut out = c.clone();
    out.set_monoidal_unchecked(Some(Monoidal { symmetry, ..m.clone() }));
    out.check_symmetry()?;
    Ok(out)
}
