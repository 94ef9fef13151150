//! Hochschild, cyclic and periodic cyclic homology of finite dimensional
//! algebras from truncated normalized complexes.
//!
//! Degrees are homological: `b` lowers degree by one and Connes' `B` raises it
//! by one. Chains are taken relative to the algebra's idempotent system by
//! default ([`Frame::Separable`]); [`Frame::Unit`] gives the classical
//! normalized complex with `C_n = M ⊗ (A/Q·1)^{⊗n}`. Both compute the same
//! homology.

mod chains;
mod chern;
mod complex;
mod total;

use std::cell::OnceCell;

use serde::Serialize;

use crate::algkit::{global_dimension, Algebra, Bimodule, GlobalDimension};
use crate::error::{Error, Result};
use crate::exactlin::{QMatrix, Scalar, SparseVec};

use chains::{ChainBasis, Coeffs};
use complex::{composite_vanishes, induced_rank, Homology};
use total::Totalization;

pub use chern::{chern_character, hp_of_homomorphism, ChernClass};
pub use complex::{TruncatedChainComplex, TruncatedMixedComplex};

/// Default cap on the number of chains enumerated.
pub const DEFAULT_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Frame {
    /// Relative to the idempotent system of the algebra.
    Separable,
    /// Relative to `Q·1` only.
    Unit,
}

#[derive(Debug, Clone, Copy)]
pub struct CyclicOptions {
    pub frame: Frame,
    pub cap: usize,
}

impl Default for CyclicOptions {
    fn default() -> Self {
        Self { frame: Frame::Separable, cap: DEFAULT_CAP }
    }
}

impl CyclicOptions {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap, ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HomologyKind {
    HH,
    HC,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub kind: HomologyKind,
    /// `dims[n]` for `n <= certified_through`.
    pub dims: Vec<usize>,
    pub n_max: usize,
    pub certified_through: usize,
}

impl HomologyTable {
    fn new(kind: HomologyKind, dims: Vec<usize>, n_max: usize) -> Self {
        Self { kind, dims, n_max, certified_through: n_max - 1 }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(n, &d)| if n % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuperSpace {
    pub even: usize,
    pub odd: usize,
}

impl SuperSpace {
    pub fn new(even: usize, odd: usize) -> Self {
        Self { even, odd }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// Finite global dimension `g` and `n_max >= g + 3`.
    Certified,
    /// Stable inside the computed window only.
    WindowStable,
    NotStabilized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Stabilization {
    /// `S: HC_{n+2} -> HC_n` is an isomorphism for `r0 <= n <= n_max - 3`.
    Periodicity,
    /// The images of `S^r` in degrees 0 and 1 stopped shrinking.
    StableImage,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HPResult {
    pub space: Option<SuperSpace>,
    pub r0: Option<usize>,
    pub certificate: Certificate,
    pub method: Option<Stabilization>,
    pub global_dimension: Option<usize>,
    pub n_max: usize,
}

impl HPResult {
    pub fn is_certified(&self) -> bool {
        self.certificate == Certificate::Certified
    }
}

/// One position of the long exact sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SbiRow {
    /// `HH_n`, `HC_n (I,S)` or `HC_n (S,B)`.
    pub spot: String,
    pub degree: usize,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SbiReport {
    pub n_max: usize,
    pub rows: Vec<SbiRow>,
}

impl SbiReport {
    pub fn all_exact(&self) -> bool {
        self.rows.iter().all(|r| r.exact)
    }
}

/// The mixed complex of an algebra with its totalization and homology.
pub struct CyclicComputation {
    original: Algebra,
    algebra: Algebra,
    basis: ChainBasis,
    mixed: TruncatedMixedComplex,
    tot: Totalization,
    tot_complex: TruncatedChainComplex,
    hh: OnceCell<Vec<Homology>>,
    hc: OnceCell<Vec<Homology>>,
}

impl CyclicComputation {
    pub fn new(a: &Algebra, n_max: usize, opts: &CyclicOptions) -> Result<Self> {
        if n_max < 2 {
            return Err(Error::invalid("the mixed complex needs n_max >= 2"));
        }
        let algebra = frame_algebra(a, opts.frame).0;
        let coeffs = Coeffs::regular(&algebra);
        let basis = ChainBasis::build(&algebra, &coeffs, n_max, opts.cap)?;
        let b = (1..=n_max).map(|n| basis.boundary(&algebra, &coeffs, n)).collect();
        let chains = TruncatedChainComplex::new(basis.dims(), b)?;
        let big_b = (0..n_max).map(|n| basis.connes(&algebra, n)).collect();
        let mixed = TruncatedMixedComplex::new(chains, big_b)?;
        let tot = Totalization::new(&mixed);
        let tot_complex = TruncatedChainComplex::new(
            (0..=n_max).map(|n| tot.dim(n)).collect(),
            (1..=n_max).map(|n| tot.differential(n).clone()).collect(),
        )?;
        Ok(Self { original: a.clone(), algebra, basis, mixed, tot, tot_complex, hh: OnceCell::new(), hc: OnceCell::new() })
    }

    pub fn n_max(&self) -> usize {
        self.mixed.n_max()
    }

    /// The algebra the chains are built on (re-based for [`Frame::Unit`]).
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn mixed_complex(&self) -> &TruncatedMixedComplex {
        &self.mixed
    }

    /// Dimensions of the total complex in degrees `0..=n_max`.
    pub fn total_dims(&self) -> &[usize] {
        self.tot_complex.dims()
    }

    fn hh_spaces(&self) -> &[Homology] {
        self.hh.get_or_init(|| self.mixed.hochschild().homology_spaces())
    }

    fn hc_spaces(&self) -> &[Homology] {
        self.hc.get_or_init(|| self.tot_complex.homology_spaces())
    }

    pub fn hochschild_homology(&self) -> HomologyTable {
        HomologyTable::new(HomologyKind::HH, self.mixed.hochschild().homology_dims(), self.n_max())
    }

    pub fn cyclic_homology(&self) -> HomologyTable {
        HomologyTable::new(HomologyKind::HC, self.tot_complex.homology_dims(), self.n_max())
    }

    /// Exactness of `.. -> HH_n -> HC_n -> HC_{n-2} -> HH_{n-1} -> ..` at
    /// every position whose groups are all computed.
    pub fn sbi_check(&self) -> SbiReport {
        let n_max = self.n_max();
        let (hh, hc) = (self.hh_spaces(), self.hc_spaces());
        let cdims = self.mixed.dims();
        let mut rows = Vec::new();
        let row = |spot: String, degree: usize, dim: usize, rank_in: usize, rank_out: usize, zero: bool| SbiRow {
            spot,
            degree,
            dim,
            rank_in,
            rank_out,
            exact: zero && rank_in + rank_out == dim,
        };
        for n in 0..n_max {
            let inc = self.tot.inclusion(n, cdims[n]);
            // at HH_n: HC_{n-1} -> HH_n -> HC_n
            let (rank_in, zero) = if n >= 1 {
                let conn = self.tot.connecting(&self.mixed, n - 1);
                (induced_rank(&conn, &hc[n - 1], &hh[n]), composite_vanishes(&conn, &inc, &hc[n - 1], &hc[n]))
            } else {
                (0, true)
            };
            let rank_i = induced_rank(&inc, &hh[n], &hc[n]);
            rows.push(row(format!("HH_{n}"), n, hh[n].dim(), rank_in, rank_i, zero));
            // at HC_n: HH_n -> HC_n -> HC_{n-2}
            let (rank_s, zero) = if n >= 2 {
                let s = self.tot.periodicity(n, 1);
                (induced_rank(&s, &hc[n], &hc[n - 2]), composite_vanishes(&inc, &s, &hh[n], &hc[n - 2]))
            } else {
                (0, true)
            };
            rows.push(row(format!("HC_{n} (I,S)"), n, hc[n].dim(), rank_i, rank_s, zero));
            // at HC_n: HC_{n+2} -> HC_n -> HH_{n+1}
            if n + 3 <= n_max {
                let s = self.tot.periodicity(n + 2, 1);
                let conn = self.tot.connecting(&self.mixed, n);
                let rank_in = induced_rank(&s, &hc[n + 2], &hc[n]);
                let rank_out = induced_rank(&conn, &hc[n], &hh[n + 1]);
                let zero = composite_vanishes(&s, &conn, &hc[n + 2], &hh[n + 1]);
                rows.push(row(format!("HC_{n} (S,B)"), n, hc[n].dim(), rank_in, rank_out, zero));
            }
        }
        SbiReport { n_max, rows }
    }

    fn s_is_iso(&self, n: usize) -> bool {
        let hc = self.hc_spaces();
        let r = induced_rank(&self.tot.periodicity(n + 2, 1), &hc[n + 2], &hc[n]);
        r == hc[n + 2].dim() && r == hc[n].dim()
    }

    pub fn periodic_cyclic(&self) -> Result<HPResult> {
        let n_max = self.n_max();
        if n_max < 4 {
            return Err(Error::invalid("periodic cyclic homology needs n_max >= 4"));
        }
        let hc = self.hc_spaces();
        let gldim = match global_dimension(&self.original, n_max) {
            Ok(GlobalDimension::Finite(g)) => Some(g),
            _ => None,
        };
        let mut r0 = None;
        for n in (0..=n_max - 3).rev() {
            if !self.s_is_iso(n) {
                break;
            }
            r0 = Some(n);
        }
        let (ne, no) = self.hp_degrees();
        let certified = gldim.is_some_and(|g| n_max >= g + 3);
        if certified {
            let g = gldim.unwrap();
            if r0.is_none_or(|r| r > g) {
                return Err(Error::invariant(format!("S fails to be an isomorphism above the global dimension {g}")));
            }
        }
        let mut result = HPResult {
            space: None,
            r0: None,
            certificate: Certificate::NotStabilized,
            method: None,
            global_dimension: gldim,
            n_max,
        };
        if certified || r0.is_some_and(|r| r + 4 <= n_max) {
            result.space = Some(SuperSpace::new(hc[ne].dim(), hc[no].dim()));
            result.r0 = r0;
            result.method = Some(Stabilization::Periodicity);
            result.certificate = if certified { Certificate::Certified } else { Certificate::WindowStable };
            return Ok(result);
        }
        let stable = |eps: usize| -> Option<usize> {
            let ranks: Vec<usize> = (1..)
                .take_while(|r| eps + 2 * r < n_max)
                .map(|r| induced_rank(&self.tot.periodicity(eps + 2 * r, r), &hc[eps + 2 * r], &hc[eps]))
                .collect();
            match ranks.as_slice() {
                [.., x, y] if x == y => Some(*y),
                _ => None,
            }
        };
        if let (Some(even), Some(odd)) = (stable(0), stable(1)) {
            result.space = Some(SuperSpace::new(even, odd));
            result.method = Some(Stabilization::StableImage);
            result.certificate = Certificate::WindowStable;
        }
        Ok(result)
    }

    /// Degree used to represent `HP^{even}` and `HP^{odd}`.
    pub(crate) fn hp_degrees(&self) -> (usize, usize) {
        let n_max = self.n_max();
        if (n_max - 1).is_multiple_of(2) {
            (n_max - 1, n_max - 2)
        } else {
            (n_max - 2, n_max - 1)
        }
    }
}

/// The algebra in the requested frame, with the change of basis used.
fn frame_algebra(a: &Algebra, frame: Frame) -> (Algebra, QMatrix) {
    match frame {
        Frame::Separable => (a.clone(), QMatrix::identity(a.dim())),
        Frame::Unit => a.unit_framed(),
    }
}

fn check_coefficients(a: &Algebra, m: &Bimodule) -> Result<()> {
    let same = |b: &Algebra| b.structure_constants() == a.structure_constants() && b.idempotents() == a.idempotents();
    if !same(m.left()) || !same(m.right()) {
        return Err(Error::invalid("coefficients must be a bimodule over the algebra on both sides"));
    }
    Ok(())
}

/// The normalized Hochschild complex `C_n(A; M)`, `n <= n_max`, in the
/// classical normalization (`dim C_n = dim M · (dim A - 1)^n`).
pub fn hochschild_complex(a: &Algebra, m: &Bimodule, n_max: usize) -> Result<TruncatedChainComplex> {
    hochschild_complex_with(a, m, n_max, &CyclicOptions { frame: Frame::Unit, ..CyclicOptions::default() })
}

pub fn hochschild_complex_with(a: &Algebra, m: &Bimodule, n_max: usize, opts: &CyclicOptions) -> Result<TruncatedChainComplex> {
    if n_max < 1 {
        return Err(Error::invalid("n_max must be at least 1"));
    }
    check_coefficients(a, m)?;
    let (alg, p) = frame_algebra(a, opts.frame);
    let coeffs = match opts.frame {
        Frame::Separable => Coeffs::bimodule(m),
        Frame::Unit => Coeffs::bimodule(&m.rebase(&alg, &p, &alg, &p)),
    };
    let basis = ChainBasis::build(&alg, &coeffs, n_max, opts.cap)?;
    let d = (1..=n_max).map(|n| basis.boundary(&alg, &coeffs, n)).collect();
    TruncatedChainComplex::new(basis.dims(), d)
}

/// `HH_n(A; M)` for `n <= n_max - 1`.
pub fn hochschild_homology(a: &Algebra, m: &Bimodule, n_max: usize) -> Result<HomologyTable> {
    hochschild_homology_with(a, m, n_max, &CyclicOptions::default())
}

pub fn hochschild_homology_with(a: &Algebra, m: &Bimodule, n_max: usize, opts: &CyclicOptions) -> Result<HomologyTable> {
    let c = hochschild_complex_with(a, m, n_max, opts)?;
    Ok(HomologyTable::new(HomologyKind::HH, c.homology_dims(), n_max))
}

pub fn mixed_complex(a: &Algebra, n_max: usize) -> Result<TruncatedMixedComplex> {
    mixed_complex_with(a, n_max, &CyclicOptions { frame: Frame::Unit, ..CyclicOptions::default() })
}

pub fn mixed_complex_with(a: &Algebra, n_max: usize, opts: &CyclicOptions) -> Result<TruncatedMixedComplex> {
    Ok(CyclicComputation::new(a, n_max, opts)?.mixed)
}

/// `HC_n(A)` for `n <= n_max - 1`.
pub fn cyclic_homology(a: &Algebra, n_max: usize) -> Result<HomologyTable> {
    Ok(CyclicComputation::new(a, n_max, &CyclicOptions::default())?.cyclic_homology())
}

pub fn sbi_check(a: &Algebra, n_max: usize) -> Result<SbiReport> {
    Ok(CyclicComputation::new(a, n_max, &CyclicOptions::default())?.sbi_check())
}

pub fn periodic_cyclic(a: &Algebra, n_max: usize) -> Result<HPResult> {
    CyclicComputation::new(a, n_max, &CyclicOptions::default())?.periodic_cyclic()
}

/// Expands `f_0 ⊗ f_1 ⊗ .. ⊗ f_n` into chain coordinates: the slots after the
/// first are taken modulo the idempotents, non-composable terms vanish.
pub(crate) fn expand_chain(alg: &Algebra, basis: &ChainBasis, factors: &[SparseVec], coef: &Scalar) -> Result<SparseVec> {
    let mut acc = crate::exactlin::sparse::Accum::new();
    let mut key = Vec::with_capacity(factors.len());
    expand_rec(alg, basis, factors, coef.clone(), &mut key, &mut acc)?;
    Ok(acc.finish())
}

fn expand_rec(
    alg: &Algebra,
    basis: &ChainBasis,
    factors: &[SparseVec],
    coef: Scalar,
    key: &mut Vec<usize>,
    acc: &mut crate::exactlin::sparse::Accum,
) -> Result<()> {
    let depth = key.len();
    if depth == factors.len() {
        let start = alg.peirce(key[0]).0;
        let end = alg.peirce(*key.last().unwrap()).1;
        if start == end {
            let idx = basis.index_of(key).ok_or_else(|| Error::invariant("expanded chain is missing from the basis"))?;
            acc.add(idx, coef);
        }
        return Ok(());
    }
    for (k, c) in &factors[depth] {
        if depth > 0 && (alg.is_idempotent_basis(*k) || alg.peirce(key[depth - 1]).1 != alg.peirce(*k).0) {
            continue;
        }
        key.push(*k);
        expand_rec(alg, basis, factors, &coef * c, key, acc)?;
        key.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests;
