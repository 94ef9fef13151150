//! Fraction-free row echelon forms.
//!
//! Rows are cleared of denominators and kept primitive (content 1), and
//! elimination cross-multiplies by the two leading coefficients divided by
//! their gcd. Entries stay integral and small on the sparse differentials the
//! homology code produces, which is where almost all elimination time goes.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;
use super::sparse::SparseVec;

type IntRow = Vec<(usize, BigInt)>;

/// Clears denominators and divides out the content; leading entry made positive.
pub(crate) fn primitive(v: &[(usize, Scalar)]) -> IntRow {
    if v.is_empty() {
        return Vec::new();
    }
    let lcm = v.iter().fold(BigInt::one(), |l, (_, x)| l.lcm(x.denom()));
    let mut row: IntRow = v.iter().map(|(i, x)| (*i, x.numer() * (&lcm / x.denom()))).collect();
    normalize(&mut row);
    row
}

fn normalize(row: &mut IntRow) {
    if row.is_empty() {
        return;
    }
    let g = row.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x));
    let neg = row[0].1.is_negative();
    if !g.is_one() || neg {
        let g = if neg { -g } else { g };
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// `a*u - b*w`, dropping zeros.
fn combine(a: &BigInt, u: &IntRow, b: &BigInt, w: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(u.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < w.len() {
        if j == w.len() || (i < u.len() && u[i].0 < w[j].0) {
            out.push((u[i].0, a * &u[i].1));
            i += 1;
        } else if i == u.len() || w[j].0 < u[i].0 {
            out.push((w[j].0, -(b * &w[j].1)));
            j += 1;
        } else {
            let x = a * &u[i].1 - b * &w[j].1;
            if !x.is_zero() {
                out.push((u[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally built row echelon form over the integers.
#[derive(Debug, Clone)]
pub(crate) struct IntEchelon {
    rows: Vec<IntRow>,
    pivot_row: HashMap<usize, usize>,
}

impl IntEchelon {
    pub fn new() -> Self {
        Self { rows: Vec::new(), pivot_row: HashMap::new() }
    }

    /// Reduces the leading entries of `v` against the current pivots.
    fn reduce_leading(&self, mut v: IntRow) -> IntRow {
        while let Some((lead, lv)) = v.first().cloned() {
            let Some(&r) = self.pivot_row.get(&lead) else { break };
            let p = &self.rows[r];
            let pl = &p[0].1;
            let g = pl.gcd(&lv);
            v = combine(&(pl / &g), &v, &(&lv / &g), p);
            normalize(&mut v);
        }
        v
    }

    /// Inserts a row; returns whether it raised the rank.
    pub fn insert(&mut self, v: &[(usize, Scalar)]) -> bool {
        let v = self.reduce_leading(primitive(v));
        if v.is_empty() {
            return false;
        }
        self.pivot_row.insert(v[0].0, self.rows.len());
        self.rows.push(v);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduced row echelon form over Q, rows sorted by pivot column, pivots 1.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = self
            .rows
            .into_iter()
            .map(|r| {
                let lead = Scalar::from_integer(r[0].1.clone());
                r.into_iter().map(|(c, x)| (c, Scalar::from_integer(x) / &lead)).collect()
            })
            .collect();
        rows.sort_by_key(|r| r[0].0);
        // back substitution, bottom row first
        for i in (0..rows.len()).rev() {
            let (head, tail) = rows.split_at_mut(i);
            let piv = &tail[0];
            let pc = piv[0].0;
            for r in head.iter_mut() {
                let c = super::sparse::get(r, pc);
                if !c.is_zero() {
                    *r = super::sparse::add(r, &super::sparse::scale(piv, &-c));
                }
            }
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::{frac, int};

    #[test]
    fn primitive_rows() {
        let r = primitive(&[(1, frac(-1, 2)), (4, frac(3, 4))]);
        assert_eq!(r, vec![(1, BigInt::from(2)), (4, BigInt::from(-3))]);
    }

    #[test]
    fn rref_of_small_system() {
        let mut e = IntEchelon::new();
        assert!(e.insert(&[(0, int(1)), (1, int(2)), (2, int(3))]));
        assert!(e.insert(&[(0, int(2)), (1, int(4)), (2, int(7))]));
        assert!(!e.insert(&[(0, int(3)), (1, int(6)), (2, int(10))]));
        let rref = e.into_rref();
        assert_eq!(rref, vec![vec![(0, int(1)), (1, int(2))], vec![(2, int(1))]]);
    }
}
