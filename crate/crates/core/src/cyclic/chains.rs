//! Bases of normalized Hochschild chains relative to the idempotent system,
//! and the operators b and B on them.
//!
//! A chain of degree n is `[m, x_1, .., x_n]` with `m` a basis vector of the
//! coefficients and each `x_i` a non-idempotent basis vector of the algebra,
//! cyclically composable: `m ∈ e_p M e_q`, `x_1` starts at `q`, each `x_i`
//! ends where `x_{i+1}` starts and `x_n` ends at `p`. With the trivial system
//! `{1}` every chain is composable and this is the usual normalized complex.

use std::collections::HashMap;

use crate::algkit::{Algebra, Bimodule};
use crate::error::{Error, Result};
use crate::exactlin::scalar::int;
use crate::exactlin::{QMatrix, Scalar, SparseVec};

/// Coefficient bimodule with its actions stored per basis vector.
pub(crate) struct Coeffs {
    peirce: Vec<(usize, usize)>,
    /// `right[k][j] = m_k · a_j`
    right: Vec<Vec<SparseVec>>,
    /// `left[j][k] = a_j · m_k`
    left: Vec<Vec<SparseVec>>,
}

impl Coeffs {
    pub(crate) fn regular(a: &Algebra) -> Self {
        let d = a.dim();
        let right = (0..d).map(|k| (0..d).map(|j| a.basis_product(k, j).clone()).collect()).collect();
        let left = (0..d).map(|j| (0..d).map(|k| a.basis_product(j, k).clone()).collect()).collect();
        Coeffs { peirce: a.peirce_all().to_vec(), right, left }
    }

    pub(crate) fn bimodule(m: &Bimodule) -> Self {
        let d = m.dim();
        let na = m.left().dim();
        let mut right = vec![Vec::with_capacity(na); d];
        for j in 0..m.right().dim() {
            for (k, col) in m.right_action(j).columns().into_iter().enumerate() {
                right[k].push(col);
            }
        }
        let left = (0..na).map(|j| m.left_action(j).columns()).collect();
        Coeffs { peirce: m.peirce_all().to_vec(), right, left }
    }

    pub(crate) fn dim(&self) -> usize {
        self.peirce.len()
    }
}

pub(crate) struct ChainBasis {
    chains: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl ChainBasis {
    /// All chains of degree at most `n_max`; `cap` bounds the number of
    /// partial chains visited.
    pub(crate) fn build(a: &Algebra, c: &Coeffs, n_max: usize, cap: usize) -> Result<Self> {
        let nv = a.idempotents().len();
        let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for k in 0..a.dim() {
            if !a.is_idempotent_basis(k) {
                by_source[a.peirce(k).0].push(k);
            }
        }
        // open chains with the vertex they currently end at
        let mut open: Vec<(Vec<usize>, usize)> = (0..c.dim()).map(|m| (vec![m], c.peirce[m].1)).collect();
        let mut chains = Vec::with_capacity(n_max + 1);
        let mut visited = open.len();
        for n in 0..=n_max {
            if n > 0 {
                let mut next = Vec::new();
                for (ch, end) in &open {
                    for &x in &by_source[*end] {
                        let mut longer = ch.clone();
                        longer.push(x);
                        next.push((longer, a.peirce(x).1));
                    }
                }
                visited += next.len();
                if visited > cap {
                    return Err(Error::cap("Hochschild chains", visited, cap));
                }
                open = next;
            }
            let closed: Vec<Vec<usize>> =
                open.iter().filter(|(ch, end)| c.peirce[ch[0]].0 == *end).map(|(ch, _)| ch.clone()).collect();
            chains.push(closed);
        }
        let index = chains.iter().map(|cs| cs.iter().enumerate().map(|(i, ch)| (ch.clone(), i)).collect()).collect();
        Ok(ChainBasis { chains, index })
    }

    pub(crate) fn dims(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }

    pub(crate) fn chains(&self, n: usize) -> &[Vec<usize>] {
        &self.chains[n]
    }

    pub(crate) fn index_of(&self, chain: &[usize]) -> Option<usize> {
        self.index.get(chain.len() - 1)?.get(chain).copied()
    }

    fn locate(&self, chain: &[usize]) -> usize {
        self.index_of(chain).expect("products of homogeneous elements stay composable")
    }

    /// `b: C_n -> C_{n-1}` for `n >= 1`.
    pub(crate) fn boundary(&self, a: &Algebra, c: &Coeffs, n: usize) -> QMatrix {
        let mut trips: Vec<(usize, usize, Scalar)> = Vec::new();
        for (col, ch) in self.chains[n].iter().enumerate() {
            let m = ch[0];
            for (m2, coef) in &c.right[m][ch[1]] {
                let mut key = Vec::with_capacity(n);
                key.push(*m2);
                key.extend_from_slice(&ch[2..]);
                trips.push((self.locate(&key), col, coef.clone()));
            }
            for i in 1..n {
                let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                for (k, coef) in a.basis_product(ch[i], ch[i + 1]) {
                    if a.is_idempotent_basis(*k) {
                        continue;
                    }
                    let mut key = Vec::with_capacity(n);
                    key.extend_from_slice(&ch[..i]);
                    key.push(*k);
                    key.extend_from_slice(&ch[i + 2..]);
                    trips.push((self.locate(&key), col, coef * &sign));
                }
            }
            let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
            for (m2, coef) in &c.left[ch[n]][m] {
                let mut key = Vec::with_capacity(n);
                key.push(*m2);
                key.extend_from_slice(&ch[1..n]);
                trips.push((self.locate(&key), col, coef * &sign));
            }
        }
        QMatrix::from_triplets(self.chains[n - 1].len(), self.chains[n].len(), trips)
    }

    /// Connes' `B: C_n -> C_{n+1}` on chains with coefficients in `A` itself.
    pub(crate) fn connes(&self, a: &Algebra, n: usize) -> QMatrix {
        let mut trips: Vec<(usize, usize, Scalar)> = Vec::new();
        for (col, ch) in self.chains[n].iter().enumerate() {
            if a.is_idempotent_basis(ch[0]) {
                continue;
            }
            for i in 0..=n {
                let sign = if (n * i).is_multiple_of(2) { int(1) } else { int(-1) };
                let first = ch[i];
                let mut key = Vec::with_capacity(n + 2);
                key.push(a.idempotents()[a.peirce(first).0]);
                key.extend_from_slice(&ch[i..]);
                key.extend_from_slice(&ch[..i]);
                trips.push((self.locate(&key), col, sign));
            }
        }
        QMatrix::from_triplets(self.chains[n + 1].len(), self.chains[n].len(), trips)
    }
}
