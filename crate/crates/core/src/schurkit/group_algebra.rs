use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::scalar::{frac, int, one};
use crate::exactlin::Scalar;

use super::characters::{character_table_row, check_degree};
use super::partition::{
    adjacent_transposition, compose, cycle_type, inverse, is_permutation, partitions, permutations, Partition, Permutation,
};

/// Degree up to which idempotency and orthogonality are verified on the full
/// product; above it, sampled coefficients are checked.
const FULL_CHECK_DEGREE: usize = 5;
const SAMPLED_COEFFICIENTS: usize = 6;

/// An element of `Q[S_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Scalar>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis((0..n).collect())
    }

    pub fn basis(sigma: Permutation) -> Self {
        let n = sigma.len();
        GroupAlgebraElement { n, terms: BTreeMap::from([(sigma, one())]) }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, Scalar)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (s, c) in terms {
            if s.len() != n || !is_permutation(&s) {
                return Err(Error::invalid(format!("{s:?} is not a permutation of degree {n}")));
            }
            out.add_term(s, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, s: Permutation, c: Scalar) {
        match self.terms.entry(s) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, sigma: &[usize]) -> Scalar {
        self.terms.get(sigma).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let terms = if c.is_zero() { BTreeMap::new() } else { self.terms.iter().map(|(s, v)| (s.clone(), v * c)).collect() };
        GroupAlgebraElement { n: self.n, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<Permutation, Scalar> = BTreeMap::new();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                *acc.entry(compose(s, t)).or_insert_with(Scalar::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        GroupAlgebraElement { n: self.n, terms: acc }
    }

    /// The coefficient of `sigma` in `self · other`.
    pub fn product_coefficient(&self, other: &Self, sigma: &[usize]) -> Scalar {
        // self(s) other(t) with s∘t = sigma, i.e. t = s⁻¹∘sigma
        self.terms.iter().fold(Scalar::zero(), |acc, (s, a)| {
            let t = compose(&inverse(s), sigma);
            match other.terms.get(&t) {
                Some(b) => acc + a * b,
                None => acc,
            }
        })
    }

    /// Commutes with the generating adjacent transpositions.
    pub fn is_central(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|k| {
            let s = Self::basis(adjacent_transposition(self.n, k));
            s.mul(self) == self.mul(&s)
        })
    }
}

/// `(f^λ / n!) Σ_σ χ_λ(σ) σ` without verification.
fn central_idempotent_raw(lambda: &Partition) -> Result<GroupAlgebraElement> {
    let n = lambda.weight();
    check_degree(n)?;
    let chi = character_table_row(lambda)?;
    let fact: i64 = (1..=n as i64).product();
    let scale = frac(lambda.standard_tableaux() as i64, fact);
    let mut terms = BTreeMap::new();
    for s in permutations(n) {
        let v = chi[&cycle_type(&s)];
        if v != 0 {
            terms.insert(s, &scale * int(v));
        }
    }
    Ok(GroupAlgebraElement { n, terms })
}

/// The central idempotent of `Q[S_n]` cutting out the isotypic block of the
/// irreducible representation `V_λ`. Centrality, idempotency and
/// orthogonality to the other blocks are verified (fully up to degree 5,
/// on sampled coefficients above).
pub fn central_idempotent(lambda: &Partition) -> Result<GroupAlgebraElement> {
    let c = central_idempotent_raw(lambda)?;
    let n = lambda.weight();
    if !c.is_central() {
        return Err(Error::invariant(format!("c_{lambda} is not central")));
    }
    if n <= FULL_CHECK_DEGREE {
        if c.mul(&c) != c {
            return Err(Error::invariant(format!("c_{lambda} is not idempotent")));
        }
        for mu in partitions(n).iter().filter(|mu| *mu != lambda) {
            if !c.mul(&central_idempotent_raw(mu)?).terms.is_empty() {
                return Err(Error::invariant(format!("c_{lambda} and c_{mu} are not orthogonal")));
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let mut sample: Vec<Permutation> = permutations(n).choose_multiple(&mut rng, SAMPLED_COEFFICIENTS).cloned().collect();
        sample.push((0..n).collect());
        let other = partitions(n).into_iter().find(|mu| mu != lambda).map(|mu| central_idempotent_raw(&mu)).transpose()?;
        for s in &sample {
            if c.product_coefficient(&c, s) != c.coefficient(s) {
                return Err(Error::invariant(format!("c_{lambda} is not idempotent at {s:?}")));
            }
            if let Some(o) = &other {
                if !c.product_coefficient(o, s).is_zero() {
                    return Err(Error::invariant(format!("c_{lambda} is not orthogonal to another block at {s:?}")));
                }
            }
        }
    }
    Ok(c)
}

/// The Young symmetrizer `a_λ b_λ` of the row-reading tableau: row
/// symmetrizer times signed column antisymmetrizer. Satisfies
/// `y² = (n!/f^λ) y`.
pub fn young_symmetrizer(lambda: &Partition) -> Result<GroupAlgebraElement> {
    let n = lambda.weight();
    check_degree(n)?;
    // box (r, c) holds the entry start[r] + c
    let mut rows = Vec::new();
    let mut next = 0;
    for &p in lambda.parts() {
        rows.push((next..next + p).collect::<Vec<usize>>());
        next += p;
    }
    let conj = lambda.conjugate();
    let cols: Vec<Vec<usize>> = (0..conj.len()).map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect()).collect();
    let stabilizer_sum = |blocks: &[Vec<usize>], signed: bool| -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::identity(n);
        for block in blocks {
            let mut part = GroupAlgebraElement::zero(n);
            for p in permutations(block.len()) {
                let mut s: Permutation = (0..n).collect();
                for (i, &j) in p.iter().enumerate() {
                    s[block[i]] = block[j];
                }
                let sign = if signed && sign_of(&p) < 0 { -1 } else { 1 };
                part.add_term(s, int(sign));
            }
            out = out.mul(&part);
        }
        out
    };
    Ok(stabilizer_sum(&rows, false).mul(&stabilizer_sum(&cols, true)))
}

pub fn sign_of(sigma: &[usize]) -> i64 {
    let inversions =
        (0..sigma.len()).flat_map(|i| (i + 1..sigma.len()).map(move |j| (i, j))).filter(|&(i, j)| sigma[i] > sigma[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
