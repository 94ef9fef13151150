//! Finitely presented linear (symmetric monoidal) categories over Q and the
//! generic constructions on them: Karoubi envelope, orbit category, change of
//! coefficients, the ideal of negligible morphisms, quotients and the dagger
//! twist of the symmetry.
//!
//! Monoidal structures are strict: `(X⊗Y)⊗Z` and `X⊗(Y⊗Z)` are the same
//! object and the tensor of morphisms is strictly associative. The tensor
//! table may be partial; products that fall outside the presentation are
//! undefined and every check runs over the defined part only.

mod coefficients;
mod graded;
mod ideal;
mod idempotents;
mod karoubi;
mod lemmas;
mod orbit;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algkit::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::scalar::fmt_scalar;
use crate::exactlin::sparse::{self, Accum};
use crate::exactlin::{QMatrix, Scalar, SparseVec};

pub use coefficients::extend_coefficients;
pub use graded::{graded_spaces, GradingKind, MatrixRealization};
pub use ideal::{dagger_twist, n_ideal, quotient_by_ideal, HomIdeal};
pub use idempotents::{idempotent_representatives, IDEMPOTENT_SEARCH_MAX_DIM};
pub use karoubi::{find_isomorphism, is_idempotent_split, karoubi, karoubi_with, Karoubi, KaroubiEquivalence};
pub use lemmas::{
    check_karoubi_idempotence, check_n_ideal_maximal, check_orbit_extension, check_orbit_karoubi, check_orbit_quotient,
    LemmaReport,
};
pub use orbit::{orbit, Orbit, TensorInvertible};

/// `Σ c_k label_k` for display.
pub(crate) fn fmt_combination(labels: &[String], v: &[(usize, Scalar)]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = v
        .iter()
        .map(|(k, c)| if c.is_one() { labels[*k].clone() } else { format!("{}*{}", fmt_scalar(c), labels[*k]) })
        .collect();
    parts.join(" + ")
}

/// Evaluates a dense linear functional on a sparse vector.
pub(crate) fn evaluate(functional: &[Scalar], v: &[(usize, Scalar)]) -> Scalar {
    v.iter().fold(Scalar::zero(), |s, (k, c)| s + c * &functional[*k])
}

/// `table[i][j] = g_j ∘ f_i` for `f_i` a basis of `Hom(X, Y)` and `g_j` of `Hom(Y, Z)`.
pub type CompositionTable = Vec<Vec<SparseVec>>;

/// Grading metadata: the degrees of a homogeneous basis of each object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Grading {
    pub kind: GradingKind,
    pub degrees: Vec<Vec<i64>>,
}

/// Strict symmetric monoidal structure. Missing entries of the morphism
/// table are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monoidal {
    pub unit: usize,
    pub tensor_objects: Vec<Vec<Option<usize>>>,
    /// Keyed by `(X, X', Y, Y')`: entry `[i][j] = f_i ⊗ g_j` for `f_i: X -> X'`,
    /// `g_j: Y -> Y'`, in `Hom(X⊗Y, X'⊗Y')`.
    pub tensor_morphisms: BTreeMap<(usize, usize, usize, usize), Vec<Vec<SparseVec>>>,
    /// `c_{X,Y}: X⊗Y -> Y⊗X`, present whenever both products are defined.
    pub symmetry: Vec<Vec<Option<SparseVec>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedCategory {
    objects: Vec<String>,
    hom_labels: Vec<Vec<Vec<String>>>,
    composition: Vec<CompositionTable>,
    identities: Vec<SparseVec>,
    monoidal: Option<Monoidal>,
    grading: Option<Grading>,
    traces: Option<Vec<Vec<Scalar>>>,
    /// Q-dimension of the ground field; `End(1)` must have this dimension.
    field_degree: usize,
}

impl PresentedCategory {
    /// A linear category; missing composition tables are zero. Associativity
    /// and the unit laws are checked.
    pub fn new(
        objects: Vec<String>,
        hom_labels: Vec<Vec<Vec<String>>>,
        composition: BTreeMap<(usize, usize, usize), CompositionTable>,
        identities: Vec<SparseVec>,
    ) -> Result<Self> {
        let c = Self::assemble(objects, hom_labels, composition, identities)?;
        c.check_linear()?;
        Ok(c)
    }

    /// Trusted variant for categories derived from verified ones.
    pub(crate) fn assemble(
        objects: Vec<String>,
        hom_labels: Vec<Vec<Vec<String>>>,
        mut composition: BTreeMap<(usize, usize, usize), CompositionTable>,
        identities: Vec<SparseVec>,
    ) -> Result<Self> {
        let n = objects.len();
        if hom_labels.len() != n || hom_labels.iter().any(|r| r.len() != n) || identities.len() != n {
            return Err(Error::dims(format!("hom labels and identities must be given for {n} objects")));
        }
        if let Some(&(x, y, z)) = composition.keys().find(|&&(x, y, z)| x >= n || y >= n || z >= n) {
            return Err(Error::dims(format!("composition table ({x}, {y}, {z}) out of range")));
        }
        let mut flat = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (dxy, dyz, dxz) = (hom_labels[x][y].len(), hom_labels[y][z].len(), hom_labels[x][z].len());
                    let t = composition.remove(&(x, y, z)).unwrap_or_else(|| vec![vec![Vec::new(); dyz]; dxy]);
                    if t.len() != dxy || t.iter().any(|r| r.len() != dyz) {
                        return Err(Error::dims(format!(
                            "composition table {} -> {} -> {} must be {dxy}x{dyz}",
                            objects[x], objects[y], objects[z]
                        )));
                    }
                    if t.iter().flatten().any(|v| v.iter().any(|(k, _)| *k >= dxz)) {
                        return Err(Error::dims(format!("composite {} -> {} out of range", objects[x], objects[z])));
                    }
                    flat.push(t);
                }
            }
        }
        for (x, id) in identities.iter().enumerate() {
            if id.iter().any(|(k, _)| *k >= hom_labels[x][x].len()) {
                return Err(Error::dims(format!("identity of {} out of range", objects[x])));
            }
        }
        Ok(PresentedCategory {
            objects,
            hom_labels,
            composition: flat,
            identities,
            monoidal: None,
            grading: None,
            traces: None,
            field_degree: 1,
        })
    }

    /// Attaches a strict symmetric monoidal structure after checking it.
    pub fn with_monoidal(mut self, m: Monoidal) -> Result<Self> {
        self.monoidal = Some(m);
        self.check_monoidal()?;
        Ok(self)
    }

    pub fn with_grading(mut self, g: Grading) -> Result<Self> {
        if g.degrees.len() != self.n_objects() {
            return Err(Error::dims("grading must list degrees for every object"));
        }
        self.grading = Some(g);
        Ok(self)
    }

    /// Attaches trace functionals `End(X) -> Q`; checks `tr(g∘f) = tr(f∘g)`.
    pub fn with_traces(mut self, traces: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = self.n_objects();
        if traces.len() != n || (0..n).any(|x| traces[x].len() != self.hom_dim(x, x)) {
            return Err(Error::dims("trace functionals must be given on every End space"));
        }
        self.traces = Some(traces);
        for x in 0..n {
            for y in 0..n {
                for i in 0..self.hom_dim(x, y) {
                    for j in 0..self.hom_dim(y, x) {
                        let gf = self.trace(x, self.basis_composite(x, y, x, i, j))?;
                        let fg = self.trace(y, self.basis_composite(y, x, y, j, i))?;
                        if gf != fg {
                            return Err(Error::invariant(format!(
                                "trace functionals are not cyclic on {} and {}",
                                self.objects[x], self.objects[y]
                            )));
                        }
                    }
                }
            }
        }
        Ok(self)
    }

    pub(crate) fn set_monoidal_unchecked(&mut self, m: Option<Monoidal>) {
        self.monoidal = m;
    }

    pub(crate) fn set_traces_unchecked(&mut self, t: Option<Vec<Vec<Scalar>>>) {
        self.traces = t;
    }

    pub(crate) fn set_field_degree(&mut self, d: usize) {
        self.field_degree = d;
    }

    pub(crate) fn set_grading_unchecked(&mut self, g: Option<Grading>) {
        self.grading = g;
    }

    pub fn field_degree(&self) -> usize {
        self.field_degree
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.hom_labels[x][y].len()
    }

    pub fn hom_labels(&self, x: usize, y: usize) -> &[String] {
        &self.hom_labels[x][y]
    }

    pub fn identity(&self, x: usize) -> &SparseVec {
        &self.identities[x]
    }

    pub fn monoidal(&self) -> Option<&Monoidal> {
        self.monoidal.as_ref()
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn traces(&self) -> Option<&[Vec<Scalar>]> {
        self.traces.as_deref()
    }

    fn table(&self, x: usize, y: usize, z: usize) -> &CompositionTable {
        let n = self.n_objects();
        &self.composition[(x * n + y) * n + z]
    }

    /// `g_j ∘ f_i` for basis vectors `f_i: X -> Y`, `g_j: Y -> Z`.
    pub fn basis_composite(&self, x: usize, y: usize, z: usize, i: usize, j: usize) -> &SparseVec {
        &self.table(x, y, z)[i][j]
    }

    /// `g ∘ f` for `f: X -> Y` and `g: Y -> Z`.
    pub fn compose(&self, x: usize, y: usize, z: usize, f: &[(usize, Scalar)], g: &[(usize, Scalar)]) -> SparseVec {
        let t = self.table(x, y, z);
        let mut acc = Accum::new();
        for (i, a) in f {
            for (j, b) in g {
                acc.add_scaled(&t[*i][*j], &(a * b));
            }
        }
        acc.finish()
    }

    /// The trace functional on `End(X)`.
    pub fn trace(&self, x: usize, f: &[(usize, Scalar)]) -> Result<Scalar> {
        let t = self.traces.as_ref().ok_or_else(|| Error::invalid("the presentation carries no trace data"))?;
        Ok(evaluate(&t[x], f))
    }

    /// `End(X)` as an algebra with product `a·b = a ∘ b`, with the change of
    /// basis from the algebra's basis to the hom basis.
    pub fn end_algebra(&self, x: usize) -> Result<(Algebra, QMatrix)> {
        let d = self.hom_dim(x, x);
        if d == 0 {
            return Err(Error::invalid(format!("End({}) is zero", self.objects[x])));
        }
        // a·b = a ∘ b means b first: table(x,x,x)[b][a]
        let mult = (0..d).map(|a| (0..d).map(|b| self.basis_composite(x, x, x, b, a).clone()).collect()).collect();
        Algebra::from_table(self.hom_labels[x][x].clone(), mult, self.identities[x].clone())
    }

    /// `X ⊗ Y`, if it lies in the presentation.
    pub fn tensor_object(&self, x: usize, y: usize) -> Option<usize> {
        self.monoidal.as_ref().and_then(|m| m.tensor_objects[x][y])
    }

    /// `f ⊗ g` for `f: X -> X'`, `g: Y -> Y'`; `None` if a product object is
    /// undefined.
    pub fn tensor_morphism(
        &self,
        (x, x2): (usize, usize),
        (y, y2): (usize, usize),
        f: &[(usize, Scalar)],
        g: &[(usize, Scalar)],
    ) -> Option<SparseVec> {
        let m = self.monoidal.as_ref()?;
        m.tensor_objects[x][y]?;
        m.tensor_objects[x2][y2]?;
        let Some(t) = m.tensor_morphisms.get(&(x, x2, y, y2)) else {
            return Some(Vec::new());
        };
        let mut acc = Accum::new();
        for (i, a) in f {
            for (j, b) in g {
                acc.add_scaled(&t[*i][*j], &(a * b));
            }
        }
        Some(acc.finish())
    }

    pub fn symmetry(&self, x: usize, y: usize) -> Option<&SparseVec> {
        self.monoidal.as_ref().and_then(|m| m.symmetry[x][y].as_ref())
    }

    fn nonzero_targets(&self, x: usize) -> Vec<usize> {
        (0..self.n_objects()).filter(|&y| self.hom_dim(x, y) > 0).collect()
    }

    fn name_path(&self, objs: &[usize]) -> String {
        objs.iter().map(|&o| self.objects[o].as_str()).collect::<Vec<_>>().join(", ")
    }

    /// Unit laws and associativity on basis elements.
    pub(crate) fn check_linear(&self) -> Result<()> {
        let n = self.n_objects();
        for x in 0..n {
            for y in self.nonzero_targets(x) {
                for i in 0..self.hom_dim(x, y) {
                    let f = sparse::unit(i);
                    if self.compose(x, x, y, &self.identities[x], &f) != f || self.compose(x, y, y, &f, &self.identities[y]) != f
                    {
                        return Err(Error::invariant(format!(
                            "unit law fails on {} in Hom({})",
                            self.hom_labels[x][y][i],
                            self.name_path(&[x, y])
                        )));
                    }
                }
            }
        }
        for x in 0..n {
            for y in self.nonzero_targets(x) {
                for z in self.nonzero_targets(y) {
                    for w in self.nonzero_targets(z) {
                        for i in 0..self.hom_dim(x, y) {
                            for j in 0..self.hom_dim(y, z) {
                                let gf = self.basis_composite(x, y, z, i, j);
                                for k in 0..self.hom_dim(z, w) {
                                    let left = self.compose(x, z, w, gf, &sparse::unit(k));
                                    let right = self.compose(x, y, w, &sparse::unit(i), self.basis_composite(y, z, w, j, k));
                                    if left != right {
                                        return Err(Error::invariant(format!(
                                            "composition is not associative on {}",
                                            self.name_path(&[x, y, z, w])
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn check_monoidal(&self) -> Result<()> {
        let Some(m) = &self.monoidal else { return Ok(()) };
        let n = self.n_objects();
        if m.unit >= n
            || m.tensor_objects.len() != n
            || m.tensor_objects.iter().any(|r| r.len() != n || r.iter().flatten().any(|&o| o >= n))
            || m.symmetry.len() != n
            || m.symmetry.iter().any(|r| r.len() != n)
        {
            return Err(Error::dims("tensor and symmetry tables must be indexed by the objects"));
        }
        if self.hom_dim(m.unit, m.unit) != self.field_degree {
            return Err(Error::invariant("End of the unit object must be the ground field"));
        }
        for (&(x, x2, y, y2), t) in &m.tensor_morphisms {
            let (Some(s), Some(s2)) = (m.tensor_objects[x][y], m.tensor_objects[x2][y2]) else {
                return Err(Error::invalid(format!(
                    "tensor of morphisms given for undefined products ({})",
                    self.name_path(&[x, x2, y, y2])
                )));
            };
            if t.len() != self.hom_dim(x, x2)
                || t.iter().any(|r| r.len() != self.hom_dim(y, y2))
                || t.iter().flatten().any(|v| v.iter().any(|(k, _)| *k >= self.hom_dim(s, s2)))
            {
                return Err(Error::dims(format!("tensor table ({}) has the wrong shape", self.name_path(&[x, x2, y, y2]))));
            }
        }
        let defined = |a: usize, b: usize| m.tensor_objects[a][b];
        // strict unit and associativity on objects
        for x in 0..n {
            if defined(m.unit, x) != Some(x) || defined(x, m.unit) != Some(x) {
                return Err(Error::invariant(format!("unit object is not strict on {}", self.objects[x])));
            }
            for y in 0..n {
                for z in 0..n {
                    if let (Some(xy), Some(yz)) = (defined(x, y), defined(y, z)) {
                        if let (Some(l), Some(r)) = (defined(xy, z), defined(x, yz)) {
                            if l != r {
                                return Err(Error::invariant(format!(
                                    "tensor product is not strictly associative on {}",
                                    self.name_path(&[x, y, z])
                                )));
                            }
                        }
                    }
                }
            }
        }
        let tens = |a: (usize, usize), b: (usize, usize), f: &SparseVec, g: &SparseVec| self.tensor_morphism(a, b, f, g);
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = defined(x, y) else { continue };
                if tens((x, x), (y, y), &self.identities[x], &self.identities[y]).as_ref() != Some(&self.identities[xy]) {
                    return Err(Error::invariant(format!("id ⊗ id is not the identity on {}", self.name_path(&[x, y]))));
                }
            }
        }
        // unit: id_1 ⊗ f = f = f ⊗ id_1
        for x in 0..n {
            for x2 in self.nonzero_targets(x) {
                for i in 0..self.hom_dim(x, x2) {
                    let f = sparse::unit(i);
                    let u = &self.identities[m.unit];
                    if tens((m.unit, m.unit), (x, x2), u, &f).as_ref() != Some(&f)
                        || tens((x, x2), (m.unit, m.unit), &f, u).as_ref() != Some(&f)
                    {
                        return Err(Error::invariant(format!(
                            "tensoring with the unit is not the identity on {}",
                            self.hom_labels[x][x2][i]
                        )));
                    }
                }
            }
        }
        self.check_bifunctorial()?;
        self.check_tensor_associative()?;
        self.check_symmetry()
    }

    /// `(f'⊗g')∘(f⊗g) = (f'∘f)⊗(g'∘g)` on basis elements.
    fn check_bifunctorial(&self) -> Result<()> {
        let n = self.n_objects();
        let defined = |a: usize, b: usize| self.tensor_object(a, b);
        for x in 0..n {
            for x2 in self.nonzero_targets(x) {
                for x3 in self.nonzero_targets(x2) {
                    for y in 0..n {
                        for y2 in self.nonzero_targets(y) {
                            for y3 in self.nonzero_targets(y2) {
                                let (Some(s1), Some(s2), Some(s3)) = (defined(x, y), defined(x2, y2), defined(x3, y3)) else {
                                    continue;
                                };
                                for i in 0..self.hom_dim(x, x2) {
                                    for i2 in 0..self.hom_dim(x2, x3) {
                                        let ff = self.basis_composite(x, x2, x3, i, i2);
                                        for j in 0..self.hom_dim(y, y2) {
                                            let t1 = self
                                                .tensor_morphism((x, x2), (y, y2), &sparse::unit(i), &sparse::unit(j))
                                                .unwrap_or_default();
                                            for j2 in 0..self.hom_dim(y2, y3) {
                                                let t2 = self
                                                    .tensor_morphism((x2, x3), (y2, y3), &sparse::unit(i2), &sparse::unit(j2))
                                                    .unwrap_or_default();
                                                let left = self.compose(s1, s2, s3, &t1, &t2);
                                                let gg = self.basis_composite(y, y2, y3, j, j2);
                                                let right = self.tensor_morphism((x, x3), (y, y3), ff, gg).unwrap_or_default();
                                                if left != right {
                                                    return Err(Error::invariant(format!(
                                                        "tensor is not bifunctorial on ({}) x ({})",
                                                        self.name_path(&[x, x2, x3]),
                                                        self.name_path(&[y, y2, y3])
                                                    )));
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `(f⊗g)⊗h = f⊗(g⊗h)` on basis elements where all products are defined.
    fn check_tensor_associative(&self) -> Result<()> {
        let n = self.n_objects();
        let defined = |a: usize, b: usize| self.tensor_object(a, b);
        for x in 0..n {
            for x2 in self.nonzero_targets(x) {
                for y in 0..n {
                    for y2 in self.nonzero_targets(y) {
                        let (Some(xy), Some(xy2)) = (defined(x, y), defined(x2, y2)) else { continue };
                        for z in 0..n {
                            for z2 in self.nonzero_targets(z) {
                                let (Some(yz), Some(yz2)) = (defined(y, z), defined(y2, z2)) else { continue };
                                if [defined(xy, z), defined(xy2, z2), defined(x, yz), defined(x2, yz2)].contains(&None) {
                                    continue;
                                }
                                for i in 0..self.hom_dim(x, x2) {
                                    let f = sparse::unit(i);
                                    for j in 0..self.hom_dim(y, y2) {
                                        let g = sparse::unit(j);
                                        let fg = self.tensor_morphism((x, x2), (y, y2), &f, &g).unwrap_or_default();
                                        for k in 0..self.hom_dim(z, z2) {
                                            let h = sparse::unit(k);
                                            let gh = self.tensor_morphism((y, y2), (z, z2), &g, &h).unwrap_or_default();
                                            let left = self.tensor_morphism((xy, xy2), (z, z2), &fg, &h);
                                            let right = self.tensor_morphism((x, x2), (yz, yz2), &f, &gh);
                                            if left != right {
                                                return Err(Error::invariant(format!(
                                                    "tensor of morphisms is not strictly associative on ({}) ({}) ({})",
                                                    self.name_path(&[x, x2]),
                                                    self.name_path(&[y, y2]),
                                                    self.name_path(&[z, z2])
                                                )));
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Symmetry, naturality and the hexagon.
    pub(crate) fn check_symmetry(&self) -> Result<()> {
        let Some(m) = &self.monoidal else { return Ok(()) };
        let n = self.n_objects();
        let defined = |a: usize, b: usize| m.tensor_objects[a][b];
        let sym = |a: usize, b: usize| -> Result<&SparseVec> {
            m.symmetry[a][b]
                .as_ref()
                .ok_or_else(|| Error::invalid(format!("symmetry constraint missing for {}", self.name_path(&[a, b]))))
        };
        for x in 0..n {
            for y in 0..n {
                let (Some(xy), Some(yx)) = (defined(x, y), defined(y, x)) else {
                    if m.symmetry[x][y].is_some() {
                        return Err(Error::invalid(format!(
                            "symmetry constraint given for an undefined product {}",
                            self.name_path(&[x, y])
                        )));
                    }
                    continue;
                };
                let c = sym(x, y)?;
                if c.iter().any(|(k, _)| *k >= self.hom_dim(xy, yx)) {
                    return Err(Error::dims(format!("symmetry constraint {} out of range", self.name_path(&[x, y]))));
                }
                let cc = self.compose(xy, yx, xy, c, sym(y, x)?);
                if &cc != self.identity(xy) {
                    return Err(Error::invariant(format!("c∘c is not the identity on {}", self.name_path(&[x, y]))));
                }
            }
        }
        // naturality: c_{X',Y'} ∘ (f⊗g) = (g⊗f) ∘ c_{X,Y}
        for x in 0..n {
            for x2 in self.nonzero_targets(x) {
                for y in 0..n {
                    for y2 in self.nonzero_targets(y) {
                        let (Some(xy), Some(yx), Some(xy2), Some(yx2)) =
                            (defined(x, y), defined(y, x), defined(x2, y2), defined(y2, x2))
                        else {
                            continue;
                        };
                        for i in 0..self.hom_dim(x, x2) {
                            for j in 0..self.hom_dim(y, y2) {
                                let (f, g) = (sparse::unit(i), sparse::unit(j));
                                let fg = self.tensor_morphism((x, x2), (y, y2), &f, &g).unwrap_or_default();
                                let gf = self.tensor_morphism((y, y2), (x, x2), &g, &f).unwrap_or_default();
                                let left = self.compose(xy, xy2, yx2, &fg, sym(x2, y2)?);
                                let right = self.compose(xy, yx, yx2, sym(x, y)?, &gf);
                                if left != right {
                                    return Err(Error::invariant(format!(
                                        "symmetry is not natural on ({}) ({})",
                                        self.name_path(&[x, x2]),
                                        self.name_path(&[y, y2])
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        // hexagon: c_{X,Y⊗Z} = (id_Y ⊗ c_{X,Z}) ∘ (c_{X,Y} ⊗ id_Z)
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let Some(yz) = defined(y, z) else { continue };
                    let (Some(src), Some(tgt)) = (defined(x, yz), defined(yz, x)) else { continue };
                    let (Some(xy), Some(yx), Some(xz), Some(zx)) = (defined(x, y), defined(y, x), defined(x, z), defined(z, x))
                    else {
                        continue;
                    };
                    let (Some(mid), Some(zxs)) = (defined(yx, z), defined(z, x)) else { continue };
                    if defined(xy, z) != Some(src) || defined(y, zxs) != Some(tgt) || defined(y, xz) != Some(mid) {
                        continue;
                    }
                    let first = self.tensor_morphism((xy, yx), (z, z), sym(x, y)?, self.identity(z)).unwrap_or_default();
                    let second = self.tensor_morphism((y, y), (xz, zx), self.identity(y), sym(x, z)?).unwrap_or_default();
                    let lhs = sym(x, yz)?;
                    let rhs = self.compose(src, mid, tgt, &first, &second);
                    if lhs != &rhs {
                        return Err(Error::invariant(format!("hexagon fails on {}", self.name_path(&[x, y, z]))));
                    }
                }
            }
        }
        Ok(())
    }

    /// Full verification of a presentation.
    pub fn validate(&self) -> Result<()> {
        self.check_linear()?;
        self.check_monoidal()
    }
}
