use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        Partition(if cols == 0 { Vec::new() } else { vec![cols; rows] })
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((0..cols).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Whether the Young diagram contains the box in row `r`, column `c`
    /// (0-based).
    pub fn contains_box(&self, r: usize, c: usize) -> bool {
        self.0.get(r).is_some_and(|&p| p > c)
    }

    /// Hook lengths row by row.
    pub fn hooks(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0.iter().enumerate().map(|(r, &p)| (0..p).map(|c| (p - c - 1) + (conj.0[c] - r - 1) + 1).collect()).collect()
    }

    /// `f^λ`, the number of standard tableaux, by the hook length formula.
    pub fn standard_tableaux(&self) -> u128 {
        let n = self.weight() as u128;
        let fact: u128 = (1..=n).product();
        let hooks: u128 = self.hooks().iter().flatten().map(|&h| h as u128).product();
        fact / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A permutation of `0..n` as its list of images.
pub type Permutation = Vec<usize>;

/// `(σ∘τ)(k) = σ(τ(k))`.
pub fn compose(sigma: &[usize], tau: &[usize]) -> Permutation {
    tau.iter().map(|&k| sigma[k]).collect()
}

pub fn inverse(sigma: &[usize]) -> Permutation {
    let mut out = vec![0; sigma.len()];
    for (k, &s) in sigma.iter().enumerate() {
        out[s] = k;
    }
    out
}

pub fn is_permutation(sigma: &[usize]) -> bool {
    let mut seen = vec![false; sigma.len()];
    sigma.iter().all(|&s| s < seen.len() && !std::mem::replace(&mut seen[s], true))
}

pub fn cycle_type(sigma: &[usize]) -> Partition {
    let mut seen = vec![false; sigma.len()];
    let mut lens = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = sigma[k];
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_unsorted(lens)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Permutation = (0..n).collect();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    while let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// The adjacent transposition `(k, k+1)`.
pub fn adjacent_transposition(n: usize, k: usize) -> Permutation {
    let mut s: Permutation = (0..n).collect();
    s.swap(k, k + 1);
    s
}
