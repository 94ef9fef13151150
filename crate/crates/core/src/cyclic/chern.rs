//! Maps into periodic cyclic homology: algebra homomorphisms and the Chern
//! character of an idempotent matrix.

use num_traits::One;

use crate::algkit::{check_hom, Algebra};
use crate::error::{Error, Result};
use crate::exactlin::scalar::{frac, int};
use crate::exactlin::{QMatrix, Scalar, SparseVec};

use super::{expand_chain, CyclicComputation, CyclicOptions};

impl CyclicComputation {
    /// The chain map `Tot_n(A) -> Tot_n(B)` induced by `f`, `self` being `A`.
    fn tot_map(&self, target: &CyclicComputation, f: &QMatrix, n: usize) -> Result<QMatrix> {
        let b = &target.algebra;
        let images: Vec<SparseVec> = f.columns();
        let mut cols = Vec::with_capacity(self.tot.dim(n));
        for i in 0..=n / 2 {
            let deg = n - 2 * i;
            for ch in self.basis.chains(deg) {
                let factors: Vec<SparseVec> = ch
                    .iter()
                    .enumerate()
                    .map(|(slot, &k)| {
                        let img = &images[k];
                        if slot == 0 {
                            img.clone()
                        } else {
                            img.iter().filter(|(j, _)| !b.is_idempotent_basis(*j)).cloned().collect()
                        }
                    })
                    .collect();
                let v = expand_chain(b, &target.basis, &factors, &int(1))?;
                cols.push(target.tot.embed(n, i, &v));
            }
        }
        Ok(QMatrix::from_columns(target.tot.dim(n), &cols))
    }

    /// Coordinates in the canonical basis of `HC_n` of a cycle of `Tot_n`.
    fn hc_coords(&self, n: usize, z: &SparseVec) -> Result<Vec<Scalar>> {
        self.hc_spaces()[n].quotient.coords(z).ok_or_else(|| Error::invariant("expected a cycle"))
    }
}

/// The map induced on `(HP^{even}, HP^{odd})` by an algebra homomorphism
/// `f: A -> B` (given as the `dim B × dim A` matrix of images). The image of
/// every idempotent of `A`'s system must be a sum of idempotents of `B`'s.
pub fn hp_of_homomorphism(a: &Algebra, b: &Algebra, f: &QMatrix, n_max: usize) -> Result<(QMatrix, QMatrix)> {
    check_hom(a, b, f)?;
    let opts = CyclicOptions::default();
    let ca = CyclicComputation::new(a, n_max, &opts)?;
    let cb = CyclicComputation::new(b, n_max, &opts)?;
    for (name, c) in [("source", &ca), ("target", &cb)] {
        if !c.periodic_cyclic()?.is_certified() {
            return Err(Error::uncertified(format!("periodic cyclic homology of the {name} is not certified")));
        }
    }
    let (ne, no) = ca.hp_degrees();
    let mut maps = Vec::with_capacity(2);
    for n in [ne, no] {
        let fmap = ca.tot_map(&cb, f, n)?;
        let fprev = ca.tot_map(&cb, f, n - 1)?;
        if cb.tot.differential(n).dot(&fmap) != fprev.dot(ca.tot.differential(n)) {
            return Err(Error::invariant("induced map does not commute with b + B"));
        }
        let (src, tgt) = (&ca.hc_spaces()[n], &cb.hc_spaces()[n]);
        let mut cols = Vec::with_capacity(src.dim());
        for z in src.reps() {
            let coords = cb.hc_coords(n, &fmap.apply(z))?;
            cols.push(crate::exactlin::sparse::from_dense(&coords));
        }
        maps.push(QMatrix::from_columns(tgt.dim(), &cols));
    }
    let odd = maps.pop().unwrap();
    let even = maps.pop().unwrap();
    Ok((even, odd))
}

/// The Chern character of an idempotent matrix as a cycle of the even total
/// complex.
#[derive(Debug, Clone)]
pub struct ChernClass {
    /// Total degree `2m` of the cycle.
    pub degree: usize,
    /// `components[i] ∈ C_{2i}`.
    pub components: Vec<SparseVec>,
    /// The cycle in `Tot_{2m}`.
    pub chain: SparseVec,
    /// Its class in the canonical basis of `HC_{2m}`.
    pub hc_coords: Vec<Scalar>,
    pub hp_certified: bool,
}

impl ChernClass {
    /// Degree-0 part: the trace of `e`, one coordinate per chain of degree 0.
    pub fn degree0(&self) -> &SparseVec {
        &self.components[0]
    }
}

/// `ch(e)` with `ch_0 = tr(e)` and
/// `ch_i = (-1)^i (2i)!/i! · tr((e - 1/2) ⊗ e^{⊗2i})`, where `e` is an `r × r`
/// idempotent matrix with entries in `A`.
pub fn chern_character(a: &Algebra, e: &[Vec<SparseVec>], n_max: usize) -> Result<ChernClass> {
    let r = e.len();
    if r == 0 || e.iter().any(|row| row.len() != r) {
        return Err(Error::dims("idempotent must be a nonempty square matrix"));
    }
    for i in 0..r {
        for j in 0..r {
            let mut acc = crate::exactlin::sparse::Accum::new();
            for k in 0..r {
                acc.add_scaled(&a.mul(&e[i][k], &e[k][j]), &int(1));
            }
            if acc.finish() != e[i][j] {
                return Err(Error::invalid("matrix is not idempotent"));
            }
        }
    }
    let comp = CyclicComputation::new(a, n_max, &CyclicOptions::default())?;
    let (ne, _) = comp.hp_degrees();
    let m = ne / 2;
    let half = a.scalar_elem(frac(1, 2));
    let shifted: Vec<Vec<SparseVec>> = (0..r)
        .map(|i| (0..r).map(|j| if i == j { crate::exactlin::sparse::sub(&e[i][j], &half) } else { e[i][j].clone() }).collect())
        .collect();
    let mut components = Vec::with_capacity(m + 1);
    let mut chain = Vec::new();
    for i in 0..=m {
        let len = 2 * i + 1;
        let mut coef = if i % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        for k in i + 1..=2 * i {
            coef *= int(k as i64);
        }
        let first = if i == 0 { e } else { &shifted[..] };
        let mut acc = crate::exactlin::sparse::Accum::new();
        // all index cycles j_0 -> j_1 -> .. -> j_{2i} -> j_0
        let mut idx = vec![0usize; len];
        loop {
            let mut factors = Vec::with_capacity(len);
            factors.push(first[idx[0]][idx[1 % len]].clone());
            for s in 1..len {
                let entry = &e[idx[s]][idx[(s + 1) % len]];
                factors.push(entry.iter().filter(|(k, _)| !a.is_idempotent_basis(*k)).cloned().collect());
            }
            if factors.iter().all(|f| !f.is_empty()) {
                acc.add_scaled(&expand_chain(&comp.algebra, &comp.basis, &factors, &coef)?, &int(1));
            }
            if !advance(&mut idx, r) {
                break;
            }
        }
        let v = acc.finish();
        chain.extend(comp.tot.embed(ne, m - i, &v));
        components.push(v);
    }
    chain.sort_by_key(|(k, _)| *k);
    if !comp.tot.differential(ne).apply(&chain).is_empty() {
        return Err(Error::invariant("Chern character is not a cycle"));
    }
    let hc_coords = comp.hc_coords(ne, &chain)?;
    let hp_certified = comp.periodic_cyclic()?.is_certified();
    Ok(ChernClass { degree: ne, components, chain, hc_coords, hp_certified })
}

fn advance(idx: &mut [usize], r: usize) -> bool {
    for x in idx.iter_mut().rev() {
        *x += 1;
        if *x < r {
            return true;
        }
        *x = 0;
    }
    false
}
