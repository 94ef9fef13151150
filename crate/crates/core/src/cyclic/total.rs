//! The `(b, B)` bicomplex: `Tot_n = ⊕_{i >= 0} C_{n-2i}` with differential
//! `b + B`, component `i` of `Tot_n` being `C_{n-2i}`.

use crate::exactlin::scalar::int;
use crate::exactlin::{QMatrix, Scalar, SparseVec};

use super::complex::TruncatedMixedComplex;

#[derive(Debug, Clone)]
pub(crate) struct Totalization {
    /// `offsets[n][i]` is where `C_{n-2i}` starts inside `Tot_n`
    offsets: Vec<Vec<usize>>,
    dims: Vec<usize>,
    /// `d[n - 1]: Tot_n -> Tot_{n-1}`
    d: Vec<QMatrix>,
}

impl Totalization {
    pub(crate) fn new(mc: &TruncatedMixedComplex) -> Self {
        let n_max = mc.n_max();
        let cdims = mc.dims();
        let mut offsets = Vec::with_capacity(n_max + 1);
        let mut dims = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut off = Vec::new();
            let mut acc = 0;
            for i in 0..=n / 2 {
                off.push(acc);
                acc += cdims[n - 2 * i];
            }
            offsets.push(off);
            dims.push(acc);
        }
        let mut d = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let mut trips: Vec<(usize, usize, Scalar)> = Vec::new();
            for i in 0..=n / 2 {
                let deg = n - 2 * i;
                let col0 = offsets[n][i];
                if deg >= 1 {
                    let row0 = offsets[n - 1][i];
                    push_block(&mut trips, mc.b(deg), row0, col0);
                }
                if i >= 1 {
                    let row0 = offsets[n - 1][i - 1];
                    push_block(&mut trips, mc.big_b(deg), row0, col0);
                }
            }
            d.push(QMatrix::from_triplets(dims[n - 1], dims[n], trips));
        }
        Self { offsets, dims, d }
    }

    pub(crate) fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub(crate) fn differential(&self, n: usize) -> &QMatrix {
        &self.d[n - 1]
    }

    /// Places `v ∈ C_{n-2i}` as component `i` of `Tot_n`.
    pub(crate) fn embed(&self, n: usize, i: usize, v: &[(usize, Scalar)]) -> SparseVec {
        v.iter().map(|(k, c)| (self.offsets[n][i] + k, c.clone())).collect()
    }

    /// `I_n: C_n -> Tot_n`.
    pub(crate) fn inclusion(&self, n: usize, cdim: usize) -> QMatrix {
        QMatrix::from_triplets(self.dims[n], cdim, (0..cdim).map(|k| (k, k, int(1))))
    }

    /// `S^r: Tot_n -> Tot_{n-2r}`, dropping the first `r` components.
    pub(crate) fn periodicity(&self, n: usize, r: usize) -> QMatrix {
        let m = n - 2 * r;
        let mut trips = Vec::new();
        for i in r..=n / 2 {
            let len = self.comp_len(n, i);
            let (src, dst) = (self.offsets[n][i], self.offsets[m][i - r]);
            trips.extend((0..len).map(|k| (dst + k, src + k, int(1))));
        }
        QMatrix::from_triplets(self.dims[m], self.dims[n], trips)
    }

    /// The connecting map `Tot_n -> C_{n+1}`, `z ↦ B(z_0)`.
    pub(crate) fn connecting(&self, mc: &TruncatedMixedComplex, n: usize) -> QMatrix {
        let mut trips = Vec::new();
        push_block(&mut trips, mc.big_b(n), 0, 0);
        QMatrix::from_triplets(mc.dims()[n + 1], self.dims[n], trips)
    }

    fn comp_len(&self, n: usize, i: usize) -> usize {
        let next = self.offsets[n].get(i + 1).copied().unwrap_or(self.dims[n]);
        next - self.offsets[n][i]
    }
}

fn push_block(trips: &mut Vec<(usize, usize, Scalar)>, m: &QMatrix, row0: usize, col0: usize) {
    for (r, row) in m.row_vecs().iter().enumerate() {
        for (c, x) in row {
            trips.push((row0 + r, col0 + c, x.clone()));
        }
    }
}
