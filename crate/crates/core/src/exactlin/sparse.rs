//! Sparse rational vectors: sorted `(index, value)` lists without zeros.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::scalar::Scalar;

pub type SparseVec = Vec<(usize, Scalar)>;

/// Accumulator for building sparse vectors term by term.
#[derive(Debug, Clone, Default)]
pub struct Accum {
    terms: BTreeMap<usize, Scalar>,
}

impl Accum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, idx: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_ref(&mut self, idx: usize, c: &Scalar) {
        self.add(idx, c.clone());
    }

    pub fn add_scaled(&mut self, v: &[(usize, Scalar)], c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v {
            self.add(*i, x * c);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, idx: usize) -> Option<&Scalar> {
        self.terms.get(&idx)
    }

    pub fn finish(self) -> SparseVec {
        self.terms.into_iter().collect()
    }
}

pub fn from_dense(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &[(usize, Scalar)], dim: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn get(v: &[(usize, Scalar)], idx: usize) -> Scalar {
    match v.binary_search_by_key(&idx, |(i, _)| *i) {
        Ok(p) => v[p].1.clone(),
        Err(_) => Scalar::zero(),
    }
}

pub fn scale(v: &[(usize, Scalar)], c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

pub fn add(a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j].clone());
            j += 1;
        } else {
            let s = &a[i].1 + &b[j].1;
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sub(a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> SparseVec {
    add(a, &scale(b, &-Scalar::from_integer(1.into())))
}

pub fn dot(a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> Scalar {
    let (mut i, mut j) = (0, 0);
    let mut s = Scalar::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    s
}

/// Shifts every index by `offset`.
pub fn shifted(v: &[(usize, Scalar)], offset: usize) -> SparseVec {
    v.iter().map(|(i, x)| (i + offset, x.clone())).collect()
}

pub fn unit(idx: usize) -> SparseVec {
    vec![(idx, Scalar::from_integer(1.into()))]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    #[test]
    fn merge_cancels() {
        let a = vec![(0, int(1)), (3, int(2))];
        let b = vec![(1, int(5)), (3, int(-2))];
        assert_eq!(add(&a, &b), vec![(0, int(1)), (1, int(5))]);
        assert_eq!(dot(&a, &b), int(-4));
        assert!(sub(&a, &a).is_empty());
    }
}
