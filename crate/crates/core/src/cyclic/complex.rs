use crate::error::{Error, Result};
use crate::exactlin::{self, LinSubspace, QMatrix, Quotient, SparseVec};

/// Chain complex `C_0 <- C_1 <- .. <- C_N`.
#[derive(Debug, Clone)]
pub struct TruncatedChainComplex {
    dims: Vec<usize>,
    /// `d[n - 1]: C_n -> C_{n-1}`
    d: Vec<QMatrix>,
}

impl TruncatedChainComplex {
    pub fn new(dims: Vec<usize>, d: Vec<QMatrix>) -> Result<Self> {
        if dims.is_empty() || d.len() + 1 != dims.len() {
            return Err(Error::dims("need one differential per positive degree"));
        }
        for (n, m) in d.iter().enumerate() {
            if m.ncols() != dims[n + 1] || m.nrows() != dims[n] {
                return Err(Error::dims(format!("differential out of degree {} has the wrong shape", n + 1)));
            }
        }
        for w in d.windows(2) {
            if !w[0].dot(&w[1]).is_zero() {
                return Err(Error::invariant("d∘d ≠ 0"));
            }
        }
        Ok(Self { dims, d })
    }

    pub fn n_max(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `d_n: C_n -> C_{n-1}`, `1 <= n <= N`.
    pub fn differential(&self, n: usize) -> &QMatrix {
        &self.d[n - 1]
    }

    /// Dimensions of `H_n` for `n <= N - 1`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.d.iter().map(exactlin::rank).collect();
        (0..self.n_max())
            .map(|n| {
                let out = if n == 0 { 0 } else { ranks[n - 1] };
                self.dims[n] - out - ranks[n]
            })
            .collect()
    }

    /// Cycles and boundaries in degrees `0..N-1`.
    pub(crate) fn homology_spaces(&self) -> Vec<Homology> {
        (0..self.n_max())
            .map(|n| {
                let z = if n == 0 { LinSubspace::full(self.dims[0]) } else { exactlin::kernel(&self.d[n - 1]) };
                let b = LinSubspace::column_space(&self.d[n]);
                Homology::new(z, b)
            })
            .collect()
    }
}

/// `(C, b, B)` with `b` lowering and `B` raising the degree.
#[derive(Debug, Clone)]
pub struct TruncatedMixedComplex {
    pub(crate) chains: TruncatedChainComplex,
    /// `big_b[n]: C_n -> C_{n+1}`, `n < N`
    pub(crate) big_b: Vec<QMatrix>,
}

impl TruncatedMixedComplex {
    pub fn new(chains: TruncatedChainComplex, big_b: Vec<QMatrix>) -> Result<Self> {
        let n_max = chains.n_max();
        if big_b.len() != n_max {
            return Err(Error::dims("need B out of every degree below the truncation"));
        }
        for (n, m) in big_b.iter().enumerate() {
            if m.ncols() != chains.dims[n] || m.nrows() != chains.dims[n + 1] {
                return Err(Error::dims(format!("B out of degree {n} has the wrong shape")));
            }
        }
        for w in big_b.windows(2) {
            if !w[1].dot(&w[0]).is_zero() {
                return Err(Error::invariant("B∘B ≠ 0"));
            }
        }
        for n in 0..n_max {
            // on C_n: b_{n+1} B_n + B_{n-1} b_n
            let mut s = chains.differential(n + 1).dot(&big_b[n]);
            if n > 0 {
                s = s.add(&big_b[n - 1].dot(chains.differential(n)))?;
            }
            if !s.is_zero() {
                return Err(Error::invariant(format!("bB + Bb ≠ 0 on degree {n}")));
            }
        }
        Ok(Self { chains, big_b })
    }

    pub fn n_max(&self) -> usize {
        self.chains.n_max()
    }

    pub fn dims(&self) -> &[usize] {
        self.chains.dims()
    }

    pub fn b(&self, n: usize) -> &QMatrix {
        self.chains.differential(n)
    }

    /// `B_n: C_n -> C_{n+1}`, `n < N`.
    pub fn big_b(&self, n: usize) -> &QMatrix {
        &self.big_b[n]
    }

    pub fn hochschild(&self) -> &TruncatedChainComplex {
        &self.chains
    }
}

/// Cycles modulo boundaries in one degree.
#[derive(Debug, Clone)]
pub(crate) struct Homology {
    pub(crate) z: LinSubspace,
    pub(crate) b: LinSubspace,
    pub(crate) quotient: Quotient,
}

impl Homology {
    pub(crate) fn new(z: LinSubspace, b: LinSubspace) -> Self {
        let quotient = Quotient::new(&z, &b);
        Self { z, b, quotient }
    }

    pub(crate) fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub(crate) fn reps(&self) -> &[SparseVec] {
        self.quotient.reps()
    }
}

/// Rank of the map induced by the chain map `f` from `src` to `tgt`.
pub(crate) fn induced_rank(f: &QMatrix, src: &Homology, tgt: &Homology) -> usize {
    let image = src.z.image_under(f);
    image.sum(&tgt.b).dim() - tgt.b.dim()
}

/// Whether `g∘f` induces zero from `src` into `tgt`.
pub(crate) fn composite_vanishes(f: &QMatrix, g: &QMatrix, src: &Homology, tgt: &Homology) -> bool {
    src.z.basis().iter().all(|v| tgt.b.contains(&g.apply(&f.apply(v))))
}
