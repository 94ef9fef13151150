//! Orbit categories `C/−⊗O` for a ⊗-invertible object with a declared
//! vanishing bound.
//!
//! Twisted objects `Y⊗O^j` are formed by iterating `−⊗O` (or `−⊗O⁻¹`) inside
//! the presentation. A twist that leaves the presentation is treated as a zero
//! object: the presentation is read as a full subcategory closed under the
//! relevant sums, and only the objects it lists carry morphisms.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::sparse::{self, Accum};
use crate::exactlin::{Scalar, SparseVec};

use super::PresentedCategory;

/// A ⊗-invertible object with witnesses and a vanishing bound `J`:
/// `Hom(X, Y⊗O^j) = 0` for `|j| > J`.
#[derive(Debug, Clone)]
pub struct TensorInvertible {
    pub object: usize,
    pub inverse: usize,
    /// `O⊗O⁻¹ -> 1` and its inverse.
    pub left: (SparseVec, SparseVec),
    /// `1 -> O⁻¹⊗O` and its inverse.
    pub right: (SparseVec, SparseVec),
    pub bound: usize,
}

impl TensorInvertible {
    /// Checks that the witnesses are mutually inverse.
    pub fn new(
        c: &PresentedCategory,
        object: usize,
        inverse: usize,
        left: (SparseVec, SparseVec),
        right: (SparseVec, SparseVec),
        bound: usize,
    ) -> Result<Self> {
        let m = c.monoidal().ok_or_else(|| Error::invalid("a ⊗-invertible object needs a monoidal structure"))?;
        let (Some(oi), Some(io)) = (c.tensor_object(object, inverse), c.tensor_object(inverse, object)) else {
            return Err(Error::invalid("O⊗O⁻¹ and O⁻¹⊗O must lie in the presentation"));
        };
        let u = m.unit;
        let ok = |x: usize, f: &SparseVec, g: &SparseVec| -> bool {
            c.compose(x, u, x, f, g) == *c.identity(x) && c.compose(u, x, u, g, f) == *c.identity(u)
        };
        if !ok(oi, &left.0, &left.1) || !ok(io, &right.1, &right.0) {
            return Err(Error::invariant("witnesses of ⊗-invertibility are not mutually inverse"));
        }
        Ok(TensorInvertible { object, inverse, left, right, bound })
    }

    /// The common strict case `O⊗O⁻¹ = 1 = O⁻¹⊗O` with identity witnesses.
    pub fn strict(c: &PresentedCategory, object: usize, inverse: usize, bound: usize) -> Result<Self> {
        let u = c.monoidal().ok_or_else(|| Error::invalid("a ⊗-invertible object needs a monoidal structure"))?.unit;
        if c.tensor_object(object, inverse) != Some(u) || c.tensor_object(inverse, object) != Some(u) {
            return Err(Error::invalid("O⊗O⁻¹ and O⁻¹⊗O are not the unit object"));
        }
        let id = c.identity(u).clone();
        Self::new(c, object, inverse, (id.clone(), id.clone()), (id.clone(), id), bound)
    }

    fn is_strict(&self, c: &PresentedCategory) -> bool {
        let u = c.monoidal().map(|m| m.unit);
        let id = u.map(|u| c.identity(u).clone());
        c.tensor_object(self.object, self.inverse) == u
            && c.tensor_object(self.inverse, self.object) == u
            && Some(&self.left.0) == id.as_ref()
            && Some(&self.right.0) == id.as_ref()
    }
}

#[derive(Debug, Clone)]
pub struct Orbit {
    pub category: PresentedCategory,
    /// Per hom pair, the `(j, i)` behind each basis vector: basis vector `i`
    /// of `Hom(X, Y⊗O^j)`.
    pub components: Vec<Vec<Vec<(i64, usize)>>>,
    pub bound: usize,
    /// `twists[y][&j] = Y⊗O^j` for `|j| ≤ J + 2` inside the presentation.
    pub twists: Vec<BTreeMap<i64, usize>>,
    index: Vec<Vec<BTreeMap<(i64, usize), usize>>>,
}

impl Orbit {
    /// Basis index of the component `(j, i)` in `Hom(X, Y)`.
    pub fn index_of(&self, x: usize, y: usize, j: i64, i: usize) -> Option<usize> {
        self.index[x][y].get(&(j, i)).copied()
    }

    /// The projection `τ` on morphisms: `f ↦ f` in the component `j = 0`.
    pub fn project(&self, x: usize, y: usize, f: &[(usize, Scalar)]) -> SparseVec {
        let mut out: SparseVec =
            f.iter().map(|(i, c)| (self.index_of(x, y, 0, *i).expect("j = 0 component"), c.clone())).collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    /// Embeds a morphism `X -> Y⊗O^j` of the base into the orbit category.
    pub fn embed(&self, x: usize, y: usize, j: i64, f: &[(usize, Scalar)]) -> Option<SparseVec> {
        let mut out = Vec::with_capacity(f.len());
        for (i, c) in f {
            out.push((self.index_of(x, y, j, *i)?, c.clone()));
        }
        out.sort_by_key(|(k, _)| *k);
        Some(out)
    }

    /// `τ(X⊗O) ≅ τ(X)`: the identity of `X⊗O` read in the components `j = 1`
    /// (towards `X`) and `j = -1` (back), checked to be mutually inverse.
    pub fn identification(&self, c: &PresentedCategory, x: usize) -> Result<Option<(SparseVec, SparseVec)>> {
        let Some(&xo) = self.twists[x].get(&1) else { return Ok(None) };
        let forward = self.embed(xo, x, 1, c.identity(xo)).ok_or_else(|| Error::invariant("missing j = 1 component"))?;
        let back = self.embed(x, xo, -1, c.identity(x)).ok_or_else(|| Error::invariant("missing j = -1 component"))?;
        let oc = &self.category;
        if oc.compose(xo, x, xo, &forward, &back) != *oc.identity(xo) || oc.compose(x, xo, x, &back, &forward) != *oc.identity(x)
        {
            return Err(Error::invariant(format!("τ(X⊗O) ≅ τ(X) fails for {}", c.objects()[x])));
        }
        Ok(Some((forward, back)))
    }
}

/// Step `Y -> Y⊗O^{±1}` inside the presentation.
fn step(c: &PresentedCategory, o: &TensorInvertible, y: usize, up: bool) -> Option<usize> {
    c.tensor_object(y, if up { o.object } else { o.inverse })
}

/// `g ⊗ id_{O^j}` for `g: Y -> W`, as `(Y⊗O^j, W⊗O^j, morphism)`.
fn shift(
    c: &PresentedCategory,
    o: &TensorInvertible,
    y: usize,
    w: usize,
    g: &SparseVec,
    j: i64,
) -> Option<(usize, usize, SparseVec)> {
    let (mut s, mut t, mut h) = (y, w, g.clone());
    let p = if j >= 0 { o.object } else { o.inverse };
    for _ in 0..j.unsigned_abs() {
        let (s2, t2) = (step(c, o, s, j >= 0)?, step(c, o, t, j >= 0)?);
        h = c.tensor_morphism((s, t), (p, p), &h, c.identity(p))?;
        s = s2;
        t = t2;
    }
    Some((s, t, h))
}

/// The orbit category: same objects, `Hom(X, Y) = ⊕_{|j|≤J} Hom(X, Y⊗O^j)`,
/// `g ∘ f = (g ⊗ id_{O^j}) ∘ f` for `f` in component `j`. The result carries
/// no monoidal structure.
pub fn orbit(c: &PresentedCategory, o: &TensorInvertible) -> Result<Orbit> {
    if !o.is_strict(c) {
        return Err(Error::invalid("the orbit construction needs O⊗O⁻¹ = 1 with identity witnesses"));
    }
    let n = c.n_objects();
    let jb = o.bound as i64;
    let margin = jb + 2;
    let mut twists = vec![BTreeMap::new(); n];
    for (y, tw) in twists.iter_mut().enumerate() {
        tw.insert(0, y);
        for up in [true, false] {
            let mut cur = y;
            for j in 1..=margin {
                match step(c, o, cur, up) {
                    Some(next) => {
                        cur = next;
                        tw.insert(if up { j } else { -j }, cur);
                    }
                    None => break,
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for (&j, &yj) in &twists[y] {
                if j.abs() > jb && c.hom_dim(x, yj) > 0 {
                    return Err(Error::invariant(format!(
                        "declared vanishing bound {} fails: Hom({}, {}⊗O^{}) is nonzero",
                        o.bound,
                        c.objects()[x],
                        c.objects()[y],
                        j
                    )));
                }
            }
        }
    }
    let mut components = vec![vec![Vec::new(); n]; n];
    let mut index = vec![vec![BTreeMap::new(); n]; n];
    let mut labels = vec![vec![Vec::new(); n]; n];
    for x in 0..n {
        for y in 0..n {
            for (&j, &yj) in twists[y].range(-jb..=jb) {
                for i in 0..c.hom_dim(x, yj) {
                    index[x][y].insert((j, i), components[x][y].len());
                    components[x][y].push((j, i));
                    labels[x][y].push(format!("{}@{}", c.hom_labels(x, yj)[i], j));
                }
            }
        }
    }
    let mut composition = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if components[x][y].is_empty() || components[y][z].is_empty() {
                    continue;
                }
                let mut table = Vec::with_capacity(components[x][y].len());
                for &(j, i) in &components[x][y] {
                    let yj = twists[y][&j];
                    let mut row = Vec::with_capacity(components[y][z].len());
                    for &(k, l) in &components[y][z] {
                        let zk = twists[z][&k];
                        let mut out = Accum::new();
                        if let Some((src, tgt, g)) = shift(c, o, y, zk, &sparse::unit(l), j) {
                            debug_assert_eq!(src, yj);
                            let gf = c.compose(x, yj, tgt, &sparse::unit(i), &g);
                            if !gf.is_empty() {
                                let jk = j + k;
                                if jk.abs() > jb || twists[z].get(&jk) != Some(&tgt) {
                                    return Err(Error::invariant(format!(
                                        "composite in component {jk} of Hom({}, {}) escapes the bound or the strict twist",
                                        c.objects()[x],
                                        c.objects()[z]
                                    )));
                                }
                                for (m, coef) in gf {
                                    out.add(index[x][z][&(jk, m)], coef);
                                }
                            }
                        }
                        row.push(out.finish());
                    }
                    table.push(row);
                }
                composition.insert((x, y, z), table);
            }
        }
    }
    let identities = (0..n)
        .map(|x| {
            let mut v: SparseVec = c.identity(x).iter().map(|(i, v)| (index[x][x][&(0, *i)], v.clone())).collect();
            v.sort_by_key(|(k, _)| *k);
            v
        })
        .collect();
    let mut category = PresentedCategory::new(c.objects().to_vec(), labels, composition, identities)?;
    category.set_field_degree(c.field_degree());
    Ok(Orbit { category, components, bound: o.bound, twists, index })
}
