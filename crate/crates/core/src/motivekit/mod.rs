//! Correspondences between algebras, their composition and intersection
//! numbers, numerical equivalence and instance checkers for the conjectures
//! comparing homological and numerical equivalence.

mod conjectures;
mod numerical;

use std::fmt;

use num_traits::{One, Zero};

use crate::algkit::{derived_tensor, global_dimension, opposite, tensor_algebra, Algebra, Bimodule, GlobalDimension};
use crate::cyclic::hochschild_homology;
use crate::error::{Error, Result};
use crate::exactlin::scalar::int;
use crate::exactlin::{QMatrix, Scalar};

pub use conjectures::{cnc_check, dnc_check, realize_homomorphism, CncReport, CncVerdict, DncReport, DncVerdict, Generator};
pub use numerical::{
    numerical_kernel, projective_span, semisimplicity_check, NumericalQuotient, PairingMatrix, SemisimplicityReport,
};

/// Bound used when certifying global dimensions.
pub const DEFAULT_GLDIM_BOUND: usize = 6;

pub(crate) fn same_algebra(a: &Algebra, b: &Algebra) -> bool {
    a.structure_constants() == b.structure_constants() && a.idempotents() == b.idempotents()
}

/// A formal rational combination of `A`-`B`-bimodules.
#[derive(Clone)]
pub struct Correspondence {
    source: Algebra,
    target: Algebra,
    terms: Vec<(Scalar, Bimodule)>,
}

impl Correspondence {
    pub fn new(source: &Algebra, target: &Algebra, terms: Vec<(Scalar, Bimodule)>) -> Result<Self> {
        for (_, m) in &terms {
            if !same_algebra(m.left(), source) || !same_algebra(m.right(), target) {
                return Err(Error::invalid("bimodule does not go between the declared algebras"));
            }
        }
        let mut c = Correspondence { source: source.clone(), target: target.clone(), terms };
        c.normalize();
        Ok(c)
    }

    pub fn from_bimodule(m: &Bimodule) -> Self {
        let mut c = Correspondence { source: m.left().clone(), target: m.right().clone(), terms: vec![(int(1), m.clone())] };
        c.normalize();
        c
    }

    /// `[A]`, the unit for composition.
    pub fn identity(a: &Algebra) -> Self {
        Self::from_bimodule(&Bimodule::regular(a))
    }

    pub fn zero(source: &Algebra, target: &Algebra) -> Self {
        Correspondence { source: source.clone(), target: target.clone(), terms: Vec::new() }
    }

    /// Sorts terms by presentation hash, merging equal presentations and
    /// dropping zero terms.
    fn normalize(&mut self) {
        let mut keyed: Vec<(String, Scalar, Bimodule)> = std::mem::take(&mut self.terms)
            .into_iter()
            .filter(|(c, m)| !c.is_zero() && m.dim() > 0)
            .map(|(c, m)| (m.presentation_hash(), c, m))
            .collect();
        keyed.sort_by(|x, y| x.0.cmp(&y.0));
        let mut out: Vec<(String, Scalar, Bimodule)> = Vec::with_capacity(keyed.len());
        for (h, c, m) in keyed {
            match out.last_mut() {
                Some(last) if last.0 == h => last.1 += c,
                _ => out.push((h, c, m)),
            }
        }
        self.terms = out.into_iter().filter(|(_, c, _)| !c.is_zero()).map(|(_, c, m)| (c, m)).collect();
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn terms(&self) -> &[(Scalar, Bimodule)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Correspondence) -> Result<Self> {
        if !same_algebra(&self.source, &other.source) || !same_algebra(&self.target, &other.target) {
            return Err(Error::invalid("cannot add correspondences between different algebras"));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::new(&self.source, &self.target, terms)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let terms = self.terms.iter().map(|(a, m)| (a * c, m.clone())).collect();
        let mut out = Correspondence { source: self.source.clone(), target: self.target.clone(), terms };
        out.normalize();
        out
    }

    /// `Σ c_k x_k`.
    pub fn combination(source: &Algebra, target: &Algebra, parts: &[(Scalar, &Correspondence)]) -> Result<Self> {
        let mut acc = Self::zero(source, target);
        for (c, x) in parts {
            acc = acc.add(&x.scale(c))?;
        }
        Ok(acc)
    }

    /// Class in `K_0` through the Peirce dimension matrix `dim e_p M f_q`,
    /// flattened row by row.
    pub fn class_vector(&self) -> Vec<Scalar> {
        let (n, m) = (self.source.idempotents().len(), self.target.idempotents().len());
        let mut v = vec![Scalar::zero(); n * m];
        for (c, x) in &self.terms {
            for (p, row) in x.peirce_dims().iter().enumerate() {
                for (q, &d) in row.iter().enumerate() {
                    v[p * m + q] += c * int(d as i64);
                }
            }
        }
        v
    }
}

impl fmt::Debug for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.terms.iter().map(|(c, m)| format!("{}·{:?}", crate::exactlin::scalar::fmt_scalar(c), m)).collect();
        write!(f, "Correspondence[{}]", parts.join(" + "))
    }
}

/// `x ∘ y = x ⊗^L_B y` for `x: A -> B`, `y: B -> C`, extended bilinearly with
/// `[X ⊗^L Y] = Σ (-1)^k [Tor_k]`.
pub fn compose(x: &Correspondence, y: &Correspondence) -> Result<Correspondence> {
    compose_bounded(x, y, DEFAULT_GLDIM_BOUND)
}

pub fn compose_bounded(x: &Correspondence, y: &Correspondence, bound: usize) -> Result<Correspondence> {
    if !same_algebra(&x.target, &y.source) {
        return Err(Error::invalid("correspondences are not composable"));
    }
    let mut terms = Vec::new();
    for (a, xm) in &x.terms {
        for (b, ym) in &y.terms {
            for (k, t) in derived_tensor(xm, ym, bound)?.into_iter().enumerate() {
                let sign = if k % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                terms.push((a * b * sign, t));
            }
        }
    }
    Correspondence::new(&x.source, &y.target, terms)
}

fn certified_gldim(a: &Algebra, what: &str) -> Result<usize> {
    match global_dimension(a, DEFAULT_GLDIM_BOUND)? {
        GlobalDimension::Finite(g) => Ok(g),
        GlobalDimension::ExceedsBound(b) => Err(Error::uncertified(format!(
            "global dimension of the {what} exceeds {b}; vanishing of Hochschild homology cannot be certified"
        ))),
    }
}

/// `χ(HH(A; M))`, with the vanishing above `gldim A` checked.
fn hh_euler(a: &Algebra, m: &Bimodule, g: usize) -> Result<i64> {
    if m.dim() == 0 {
        return Ok(0);
    }
    let table = hochschild_homology(a, m, g + 2)?;
    if table.dims[g + 1] != 0 {
        return Err(Error::invariant("Hochschild homology does not vanish above the global dimension"));
    }
    Ok(table.euler_characteristic())
}

/// `⟨x · y⟩ = Σ a_i b_j χ(HH(A; X_i ⊗^L_B Y_j))` for `x: A -> B`, `y: B -> A`.
pub fn intersection_number(x: &Correspondence, y: &Correspondence) -> Result<Scalar> {
    if !same_algebra(&x.target, &y.source) || !same_algebra(&y.target, &x.source) {
        return Err(Error::invalid("intersection needs x: A -> B and y: B -> A"));
    }
    if x.is_zero() || y.is_zero() {
        return Ok(Scalar::zero());
    }
    let g = certified_gldim(&x.source, "source")?;
    let mut total = Scalar::zero();
    for (a, xm) in &x.terms {
        for (b, ym) in &y.terms {
            let mut chi = 0i64;
            for (k, t) in derived_tensor(xm, ym, DEFAULT_GLDIM_BOUND)?.iter().enumerate() {
                let e = hh_euler(&x.source, t, g)?;
                chi += if k % 2 == 0 { e } else { -e };
            }
            total += a * b * int(chi);
        }
    }
    Ok(total)
}

/// The same number computed as `χ(X ⊗^L_{B ⊗ A^op} Y)`, with `X` a right and
/// `Y` a left module over `B ⊗ A^op` (`x·(b⊗a) = a x b`, `(b⊗a)·y = b y a`).
pub fn intersection_number_enveloping(x: &Correspondence, y: &Correspondence) -> Result<Scalar> {
    if !same_algebra(&x.target, &y.source) || !same_algebra(&y.target, &x.source) {
        return Err(Error::invalid("intersection needs x: A -> B and y: B -> A"));
    }
    if x.is_zero() || y.is_zero() {
        return Ok(Scalar::zero());
    }
    let (a, b) = (&x.source, &x.target);
    let c = tensor_algebra(b, &opposite(a));
    let q = Algebra::ground();
    let mut total = Scalar::zero();
    for (ca, xm) in &x.terms {
        let xr = Bimodule::new(
            q.clone(),
            c.clone(),
            xm.dim(),
            vec![QMatrix::identity(xm.dim())],
            enveloping_actions(b.dim(), a.dim(), |i, j| xm.left_action(j).dot(xm.right_action(i))),
            None,
        )?;
        for (cb, ym) in &y.terms {
            let yl = Bimodule::new(
                c.clone(),
                q.clone(),
                ym.dim(),
                enveloping_actions(b.dim(), a.dim(), |i, j| ym.left_action(i).dot(ym.right_action(j))),
                vec![QMatrix::identity(ym.dim())],
                None,
            )?;
            let tor = derived_tensor(&xr, &yl, 2 * DEFAULT_GLDIM_BOUND)?;
            let chi: i64 = tor.iter().enumerate().map(|(k, t)| if k % 2 == 0 { t.dim() as i64 } else { -(t.dim() as i64) }).sum();
            total += ca * cb * int(chi);
        }
    }
    Ok(total)
}

fn enveloping_actions(db: usize, da: usize, f: impl Fn(usize, usize) -> QMatrix) -> Vec<QMatrix> {
    let mut out = Vec::with_capacity(db * da);
    for i in 0..db {
        for j in 0..da {
            out.push(f(i, j));
        }
    }
    out
}

/// `tr(x) = Σ a_i χ(HH(A; X_i))` for `x: A -> A`.
pub fn categorical_trace(x: &Correspondence) -> Result<Scalar> {
    if !same_algebra(&x.source, &x.target) {
        return Err(Error::invalid("trace needs an endomorphism"));
    }
    if x.is_zero() {
        return Ok(Scalar::zero());
    }
    let g = certified_gldim(&x.source, "algebra")?;
    let mut total = Scalar::zero();
    for (a, m) in &x.terms {
        total += a * int(hh_euler(&x.source, m, g)?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests;
