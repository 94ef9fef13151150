use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactlin::scalar::{fmt_scalar, int};
use crate::exactlin::sparse::{self, SparseVec};
use crate::exactlin::{self, LinSubspace, QMatrix, Scalar};

use super::Algebra;

/// An `A`-`B`-bimodule with exact action matrices.
///
/// Conventions: `left_act[i]` is the matrix of `m -> a_i m` and
/// `right_act[j]` the matrix of `m -> m b_j`, so `R_{b'} R_b = R_{b b'}`.
/// The basis is adapted to the idempotent systems: basis vector `k` satisfies
/// `m_k = e_p m_k f_q` for `(p, q) = peirce[k]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Bimodule {
    left: Algebra,
    right: Algebra,
    labels: Vec<String>,
    left_act: Vec<QMatrix>,
    right_act: Vec<QMatrix>,
    peirce: Vec<(usize, usize)>,
}

fn combine(mats: &[QMatrix], x: &[(usize, Scalar)], d: usize) -> QMatrix {
    let mut out = QMatrix::zeros(d, d);
    for (k, c) in x {
        out = out.add(&mats[*k].scale(c)).expect("square of equal size");
    }
    out
}

impl Bimodule {
    /// Checks the bimodule axioms on basis elements and moves to a basis
    /// adapted to the idempotent systems.
    pub fn new(
        left: Algebra,
        right: Algebra,
        dim: usize,
        left_act: Vec<QMatrix>,
        right_act: Vec<QMatrix>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if left_act.len() != left.dim() || right_act.len() != right.dim() {
            return Err(Error::dims("one action matrix per algebra basis vector is required"));
        }
        if left_act.iter().chain(&right_act).any(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::dims(format!("action matrices must be {dim}x{dim}")));
        }
        if let Some(l) = &labels {
            if l.len() != dim {
                return Err(Error::dims("one label per module basis vector is required"));
            }
        }
        let id = QMatrix::identity(dim);
        if combine(&left_act, left.unit(), dim) != id || combine(&right_act, right.unit(), dim) != id {
            return Err(Error::invariant("actions are not unital"));
        }
        for i in 0..left.dim() {
            for j in 0..left.dim() {
                if left_act[i].dot(&left_act[j]) != combine(&left_act, left.basis_product(i, j), dim) {
                    return Err(Error::invariant("left action is not associative"));
                }
            }
        }
        for i in 0..right.dim() {
            for j in 0..right.dim() {
                if right_act[j].dot(&right_act[i]) != combine(&right_act, right.basis_product(i, j), dim) {
                    return Err(Error::invariant("right action is not associative"));
                }
            }
        }
        for l in &left_act {
            for r in &right_act {
                if l.dot(r) != r.dot(l) {
                    return Err(Error::invariant("left and right actions do not commute"));
                }
            }
        }
        let labels = labels.unwrap_or_else(|| (0..dim).map(|k| format!("m{k}")).collect());
        Ok(Self::adapt(left, right, labels, left_act, right_act))
    }

    fn adapt(left: Algebra, right: Algebra, labels: Vec<String>, left_act: Vec<QMatrix>, right_act: Vec<QMatrix>) -> Self {
        let dim = labels.len();
        let (nl, nr) = (left.idempotents().len(), right.idempotents().len());
        let projector = |p: usize, q: usize| left_act[left.idempotents()[p]].dot(&right_act[right.idempotents()[q]]);
        // fast path: basis vectors already homogeneous
        let mut peirce = vec![None; dim];
        for p in 0..nl {
            for q in 0..nr {
                let pr = projector(p, q);
                for (k, slot) in peirce.iter_mut().enumerate() {
                    if pr.column(k) == sparse::unit(k) {
                        *slot = Some((p, q));
                    }
                }
            }
        }
        if peirce.iter().all(Option::is_some) {
            let peirce = peirce.into_iter().map(Option::unwrap).collect();
            return Bimodule { left, right, labels, left_act, right_act, peirce };
        }
        let mut cols = Vec::with_capacity(dim);
        let mut peirce = Vec::with_capacity(dim);
        for p in 0..nl {
            for q in 0..nr {
                let img = LinSubspace::column_space(&projector(p, q));
                for v in img.basis() {
                    cols.push(v.clone());
                    peirce.push((p, q));
                }
            }
        }
        let t = QMatrix::from_columns(dim, &cols);
        let tinv = exactlin::inverse(&t).expect("Peirce decomposition spans the module");
        let conj = |m: &QMatrix| tinv.dot(m).dot(&t);
        let left_act = left_act.iter().map(conj).collect();
        let right_act = right_act.iter().map(conj).collect();
        let labels = (0..dim).map(|k| format!("m{k}")).collect();
        Bimodule { left, right, labels, left_act, right_act, peirce }
    }

    /// `A` as an `A`-`A`-bimodule.
    pub fn regular(a: &Algebra) -> Self {
        let d = a.dim();
        let left_act = (0..d).map(|i| a.left_mult(&sparse::unit(i))).collect();
        let right_act = (0..d).map(|i| a.right_mult(&sparse::unit(i))).collect();
        Bimodule {
            left: a.clone(),
            right: a.clone(),
            labels: a.labels().to_vec(),
            left_act,
            right_act,
            peirce: a.peirce_all().to_vec(),
        }
    }

    /// The projective bimodule `A e_i ⊗ f_j B`.
    pub fn projective(a: &Algebra, i: usize, b: &Algebra, j: usize) -> Result<Self> {
        if i >= a.idempotents().len() || j >= b.idempotents().len() {
            return Err(Error::invalid("idempotent index out of range"));
        }
        let us: Vec<usize> = (0..a.dim()).filter(|&k| a.peirce(k).1 == i).collect();
        let vs: Vec<usize> = (0..b.dim()).filter(|&k| b.peirce(k).0 == j).collect();
        let upos = |k: usize| us.iter().position(|&u| u == k).expect("stays in A e_i");
        let vpos = |k: usize| vs.iter().position(|&v| v == k).expect("stays in f_j B");
        let dim = us.len() * vs.len();
        let (nu, nv) = (us.len(), vs.len());
        let mut left_act = Vec::with_capacity(a.dim());
        for x in 0..a.dim() {
            let mut t = Vec::new();
            for (ui, &u) in us.iter().enumerate() {
                for (k, c) in a.basis_product(x, u) {
                    for vi in 0..nv {
                        t.push((upos(*k) * nv + vi, ui * nv + vi, c.clone()));
                    }
                }
            }
            left_act.push(QMatrix::from_triplets(dim, dim, t));
        }
        let mut right_act = Vec::with_capacity(b.dim());
        for y in 0..b.dim() {
            let mut t = Vec::new();
            for (vi, &v) in vs.iter().enumerate() {
                for (k, c) in b.basis_product(v, y) {
                    for ui in 0..nu {
                        t.push((ui * nv + vpos(*k), ui * nv + vi, c.clone()));
                    }
                }
            }
            right_act.push(QMatrix::from_triplets(dim, dim, t));
        }
        let labels = us.iter().flat_map(|&u| vs.iter().map(move |&v| format!("{}⊗{}", a.labels()[u], b.labels()[v]))).collect();
        Ok(Self::adapt(a.clone(), b.clone(), labels, left_act, right_act))
    }

    /// For a homomorphism `f: A -> B` (matrix `dim B x dim A`, `f(1)` idempotent),
    /// the `A`-`B`-bimodule `f(1) B` with `a m b = f(a) m b`.
    pub fn from_hom_left(a: &Algebra, b: &Algebra, f: &QMatrix) -> Result<Self> {
        check_hom(a, b, f)?;
        let e = f.apply(a.unit());
        let space = LinSubspace::column_space(&b.left_mult(&e));
        let coords = |v: &SparseVec| -> SparseVec { sparse::from_dense(&space.coords(v).expect("closed under the actions")) };
        let act = |g: &dyn Fn(&SparseVec) -> SparseVec| -> QMatrix {
            let cols: Vec<SparseVec> = space.basis().iter().map(|s| coords(&g(s))).collect();
            QMatrix::from_columns(space.dim(), &cols)
        };
        let left_act = (0..a.dim()).map(|i| {
            let fa = f.apply(&sparse::unit(i));
            act(&|s: &SparseVec| b.mul(&fa, s))
        });
        let left_act: Vec<QMatrix> = left_act.collect();
        let right_act: Vec<QMatrix> = (0..b.dim()).map(|j| act(&|s: &SparseVec| b.mul(s, &sparse::unit(j)))).collect();
        Bimodule::new(a.clone(), b.clone(), space.dim(), left_act, right_act, None)
    }

    /// For `f: A -> B` as above, the `B`-`A`-bimodule `B f(1)`.
    pub fn from_hom_right(a: &Algebra, b: &Algebra, f: &QMatrix) -> Result<Self> {
        check_hom(a, b, f)?;
        let e = f.apply(a.unit());
        let space = LinSubspace::column_space(&b.right_mult(&e));
        let coords = |v: &SparseVec| -> SparseVec { sparse::from_dense(&space.coords(v).expect("closed under the actions")) };
        let act = |g: &dyn Fn(&SparseVec) -> SparseVec| -> QMatrix {
            let cols: Vec<SparseVec> = space.basis().iter().map(|s| coords(&g(s))).collect();
            QMatrix::from_columns(space.dim(), &cols)
        };
        let left_act: Vec<QMatrix> = (0..b.dim()).map(|j| act(&|s: &SparseVec| b.mul(&sparse::unit(j), s))).collect();
        let right_act: Vec<QMatrix> = (0..a.dim())
            .map(|i| {
                let fa = f.apply(&sparse::unit(i));
                act(&|s: &SparseVec| b.mul(s, &fa))
            })
            .collect();
        Bimodule::new(b.clone(), a.clone(), space.dim(), left_act, right_act, None)
    }

    pub fn direct_sum(&self, other: &Bimodule) -> Result<Self> {
        if self.left.structure_constants() != other.left.structure_constants()
            || self.right.structure_constants() != other.right.structure_constants()
        {
            return Err(Error::invalid("direct sum of bimodules over different algebras"));
        }
        let left_act = self.left_act.iter().zip(&other.left_act).map(|(x, y)| QMatrix::block_diag(&[x, y])).collect();
        let right_act = self.right_act.iter().zip(&other.right_act).map(|(x, y)| QMatrix::block_diag(&[x, y])).collect();
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("{l}@0")).collect();
        labels.extend(other.labels.iter().map(|l| format!("{l}@1")));
        let mut peirce = self.peirce.clone();
        peirce.extend_from_slice(&other.peirce);
        Ok(Bimodule { left: self.left.clone(), right: self.right.clone(), labels, left_act, right_act, peirce })
    }

    /// Trusted constructor for modules built from verified data (homology of
    /// bimodule complexes); adapts the basis.
    pub(crate) fn from_actions_unchecked(
        left: Algebra,
        right: Algebra,
        dim: usize,
        left_act: Vec<QMatrix>,
        right_act: Vec<QMatrix>,
    ) -> Self {
        let labels = (0..dim).map(|k| format!("m{k}")).collect();
        Self::adapt(left, right, labels, left_act, right_act)
    }

    /// Re-expresses the module over re-based copies of its algebras.
    /// `left_change` has as column `k` the new left basis vector `k` in the old
    /// basis, likewise `right_change`.
    pub fn rebase(&self, new_left: &Algebra, left_change: &QMatrix, new_right: &Algebra, right_change: &QMatrix) -> Self {
        let d = self.dim();
        let left_act = (0..new_left.dim()).map(|k| combine(&self.left_act, &left_change.column(k), d)).collect();
        let right_act = (0..new_right.dim()).map(|k| combine(&self.right_act, &right_change.column(k), d)).collect();
        Self::adapt(new_left.clone(), new_right.clone(), self.labels.clone(), left_act, right_act)
    }

    pub fn left(&self) -> &Algebra {
        &self.left
    }

    pub fn right(&self) -> &Algebra {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn left_action(&self, i: usize) -> &QMatrix {
        &self.left_act[i]
    }

    pub fn right_action(&self, j: usize) -> &QMatrix {
        &self.right_act[j]
    }

    pub fn act_left(&self, a: &[(usize, Scalar)]) -> QMatrix {
        combine(&self.left_act, a, self.dim())
    }

    pub fn act_right(&self, b: &[(usize, Scalar)]) -> QMatrix {
        combine(&self.right_act, b, self.dim())
    }

    pub fn peirce(&self, k: usize) -> (usize, usize) {
        self.peirce[k]
    }

    pub fn peirce_all(&self) -> &[(usize, usize)] {
        &self.peirce
    }

    /// `dim e_p M f_q` for all `(p, q)`.
    pub fn peirce_dims(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![0; self.right.idempotents().len()]; self.left.idempotents().len()];
        for &(p, q) in &self.peirce {
            out[p][q] += 1;
        }
        out
    }

    /// Hash of the presentation (algebras and action tables), hex encoded.
    /// Equal presentations give equal hashes; it is not an isomorphism invariant.
    pub fn presentation_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.left.signature().as_bytes());
        h.update(b"|");
        h.update(self.right.signature().as_bytes());
        for (tag, mats) in [("L", &self.left_act), ("R", &self.right_act)] {
            for (k, m) in mats.iter().enumerate() {
                h.update(format!("{tag}{k}:").as_bytes());
                for (r, row) in m.row_vecs().iter().enumerate() {
                    for (c, x) in row {
                        h.update(format!("{r},{c}={};", fmt_scalar(x)).as_bytes());
                    }
                }
            }
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Basis of `Hom_{A-B}(self, other)` as `other.dim x self.dim` matrices.
    pub fn hom_space(&self, other: &Bimodule) -> Result<Vec<QMatrix>> {
        if self.left.structure_constants() != other.left.structure_constants()
            || self.right.structure_constants() != other.right.structure_constants()
        {
            return Err(Error::invalid("bimodules over different algebras"));
        }
        let (dx, dy) = (self.dim(), other.dim());
        // unknowns: T[r][c] with matching Peirce type only
        let mut var = std::collections::HashMap::new();
        let mut vars = Vec::new();
        for r in 0..dy {
            for c in 0..dx {
                if other.peirce[r] == self.peirce[c] {
                    var.insert((r, c), vars.len());
                    vars.push((r, c));
                }
            }
        }
        let n = vars.len();
        let mut rows: Vec<SparseVec> = Vec::new();
        let pairs = self.left_act.iter().zip(&other.left_act).chain(self.right_act.iter().zip(&other.right_act));
        for (ax, ay) in pairs {
            // (T ax - ay T)[r][c] = sum_k T[r][k] ax[k][c] - sum_k ay[r][k] T[k][c]
            let axt = ax.transpose();
            for r in 0..dy {
                for c in 0..dx {
                    let mut acc = sparse::Accum::new();
                    for (k, x) in axt.row(c) {
                        if let Some(&v) = var.get(&(r, *k)) {
                            acc.add_ref(v, x);
                        }
                    }
                    for (k, y) in ay.row(r) {
                        if let Some(&v) = var.get(&(*k, c)) {
                            acc.add(v, -y.clone());
                        }
                    }
                    let row = acc.finish();
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        let ker = exactlin::kernel(&QMatrix::from_rows(n, rows));
        Ok(ker
            .basis()
            .iter()
            .map(|v| QMatrix::from_triplets(dy, dx, v.iter().map(|(i, x)| (vars[*i].0, vars[*i].1, x.clone()))))
            .collect())
    }

    /// Searches for a bimodule isomorphism by testing random elements of the
    /// hom space (seeded, so the answer is deterministic). A generic element of
    /// `Hom` is invertible whenever some element is, so a miss is vanishingly
    /// unlikely for the coefficient range used.
    pub fn find_isomorphism(&self, other: &Bimodule) -> Result<Option<QMatrix>> {
        if self.dim() != other.dim() || self.peirce_dims() != other.peirce_dims() {
            return Ok(None);
        }
        let d = self.dim();
        if d == 0 {
            return Ok(Some(QMatrix::zeros(0, 0)));
        }
        let homs = self.hom_space(other)?;
        if homs.is_empty() {
            return Ok(None);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b1d0);
        for _ in 0..8 {
            let mut t = QMatrix::zeros(d, d);
            for h in &homs {
                t = t.add(&h.scale(&int(rng.gen_range(-1000..=1000)))).expect("same size");
            }
            if exactlin::rank(&t) == d {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    pub fn is_isomorphic(&self, other: &Bimodule) -> Result<bool> {
        Ok(self.find_isomorphism(other)?.is_some())
    }
}

/// Checks that `f` is multiplicative, maps `1` to an idempotent and the
/// idempotent system of `A` into the span of that of `B` (as sums of
/// idempotents), which is what the relative complexes need.
pub fn check_hom(a: &Algebra, b: &Algebra, f: &QMatrix) -> Result<()> {
    if f.nrows() != b.dim() || f.ncols() != a.dim() {
        return Err(Error::dims(format!("homomorphism matrix must be {}x{}", b.dim(), a.dim())));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = f.apply(a.basis_product(i, j));
            let rhs = b.mul(&f.apply(&sparse::unit(i)), &f.apply(&sparse::unit(j)));
            if lhs != rhs {
                return Err(Error::invariant(format!("map is not multiplicative on ({}, {})", a.labels()[i], a.labels()[j])));
            }
        }
    }
    for &e in a.idempotents() {
        let fe = f.apply(&sparse::unit(e));
        let ok = fe.iter().all(|(k, c)| b.is_idempotent_basis(*k) && *c == int(1));
        if !ok {
            return Err(Error::invalid(format!("image of {} is not a sum of idempotents of the target system", a.labels()[e])));
        }
    }
    Ok(())
}

impl fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bimodule(dim {}, peirce dims {:?})", self.dim(), self.peirce_dims())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algkit::zoo;

    #[test]
    fn regular_bimodule_is_valid() {
        for (_, a) in zoo::all() {
            let m = Bimodule::regular(&a);
            let d = a.dim();
            let checked = Bimodule::new(
                a.clone(),
                a.clone(),
                d,
                (0..d).map(|i| m.left_action(i).clone()).collect(),
                (0..d).map(|i| m.right_action(i).clone()).collect(),
                None,
            )
            .unwrap();
            assert_eq!(checked.peirce_all(), a.peirce_all());
        }
    }

    #[test]
    fn projective_bimodules() {
        let a = zoo::a2();
        // A e_2 = span{e_2, a}, e_1 A = span{e_1, a}
        let p = Bimodule::projective(&a, 1, &a, 0).unwrap();
        assert_eq!(p.dim(), 4);
        let d = a.dim();
        Bimodule::new(
            a.clone(),
            a.clone(),
            4,
            (0..d).map(|i| p.left_action(i).clone()).collect(),
            (0..d).map(|i| p.right_action(i).clone()).collect(),
            None,
        )
        .unwrap();
    }

    #[test]
    fn rejects_noncommuting_actions() {
        let a = zoo::dual_numbers();
        let x = a.index_of("x").unwrap();
        let reg = Bimodule::regular(&a);
        // right action by the transpose of the left one does not commute with it
        let mut right: Vec<QMatrix> = (0..2).map(|i| reg.right_action(i).clone()).collect();
        right[x] = reg.left_action(x).transpose();
        let left = (0..2).map(|i| reg.left_action(i).clone()).collect();
        assert!(Bimodule::new(a.clone(), a, 2, left, right, None).is_err());
    }

    #[test]
    fn unit_inclusion_bimodule() {
        let q = zoo::ground();
        let qq = zoo::q_times_q();
        let f = QMatrix::from_ints(&[&[1], &[1]]);
        let m = Bimodule::from_hom_left(&q, &qq, &f).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.peirce_dims(), vec![vec![1, 1]]);
        // a corner map Q -> QxQ onto e1
        let g = QMatrix::from_ints(&[&[1], &[0]]);
        assert_eq!(Bimodule::from_hom_left(&q, &qq, &g).unwrap().dim(), 1);
        assert_eq!(Bimodule::from_hom_right(&q, &qq, &g).unwrap().peirce_dims(), vec![vec![1], vec![0]]);
    }

    #[test]
    fn isomorphism_search() {
        let a = zoo::a2();
        let reg = Bimodule::regular(&a);
        assert!(reg.is_isomorphic(&reg).unwrap());
        let p = Bimodule::projective(&a, 0, &a, 0).unwrap();
        assert!(!reg.is_isomorphic(&p).unwrap());
        let s = reg.direct_sum(&p).unwrap();
        let t = p.direct_sum(&reg).unwrap();
        assert!(s.is_isomorphic(&t).unwrap());
        assert_ne!(s.presentation_hash(), t.presentation_hash());
    }
}
