//! Idempotents of small algebras up to conjugacy.
//!
//! Conjugacy classes of idempotents of `A` correspond to those of the
//! semisimple quotient `A/rad A` (lifting), and in a product of simple blocks
//! an idempotent class is a choice of rank in every block. Blocks are found by
//! splitting the centre with minimal polynomials of its elements; a
//! noncommutative block of dimension 4 with centre Q is either `M_2(Q)` or a
//! division algebra, told apart by looking for a zero divisor.

use num_traits::Zero;

use crate::algkit::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::poly::{minimal_polynomial, Poly};
use crate::exactlin::scalar::int;
use crate::exactlin::sparse::{self, Accum};
use crate::exactlin::{self, jacobson_radical, lift_idempotent, LinSubspace, QMatrix, Quotient, SparseVec};

/// Largest algebra dimension for which idempotents are enumerated.
pub const IDEMPOTENT_SEARCH_MAX_DIM: usize = 4;

/// Coefficient vectors in `{-2..2}^m` without zero, by increasing max-norm.
fn small_vectors(m: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = (0..5usize.pow(m as u32))
        .map(|mut code| {
            (0..m)
                .map(|_| {
                    let digit = (code % 5) as i64 - 2;
                    code /= 5;
                    digit
                })
                .collect()
        })
        .filter(|v: &Vec<i64>| v.iter().any(|&x| x != 0))
        .collect();
    out.sort_by_key(|v| v.iter().map(|x| x.abs()).max());
    out
}

fn combine(basis: &[SparseVec], coeffs: &[i64]) -> SparseVec {
    let mut acc = Accum::new();
    for (b, c) in basis.iter().zip(coeffs) {
        acc.add_scaled(b, &int(*c));
    }
    acc.finish()
}

/// Minimal polynomial of `w` inside the corner algebra with unit `e`.
fn corner_minpoly(a: &Algebra, e: &SparseVec, w: &SparseVec) -> Poly {
    let mut cur = e.clone();
    let mut last = 0;
    minimal_polynomial(a.dim(), |k| {
        while last < k {
            cur = a.mul(&cur, w);
            last += 1;
        }
        if k == 0 {
            e.clone()
        } else {
            cur.clone()
        }
    })
}

fn eval(a: &Algebra, p: &Poly, e: &SparseVec, w: &SparseVec) -> SparseVec {
    let mut acc: SparseVec = Vec::new();
    for c in p.coeffs().iter().rev() {
        acc = sparse::add(&a.mul(&acc, w), &sparse::scale(e, c));
    }
    acc
}

/// The idempotents `q_i(w)` cutting `Q[w]` along the factors of its minimal
/// polynomial; a single element if the polynomial is a prime power.
fn crt_idempotents(a: &Algebra, e: &SparseVec, w: &SparseVec, m: &Poly) -> Result<Vec<SparseVec>> {
    let factors = m.factor(2 * IDEMPOTENT_SEARCH_MAX_DIM)?;
    if factors.len() < 2 {
        return Ok(vec![e.clone()]);
    }
    let powers: Vec<Poly> = factors.iter().map(|(p, k)| (0..*k).fold(Poly::one(), |acc, _| acc.mul(p))).collect();
    let mut out = Vec::new();
    for i in 0..powers.len() {
        let q = powers.iter().enumerate().filter(|(j, _)| *j != i).fold(Poly::one(), |acc, (_, p)| acc.mul(p));
        let (g, s, _) = q.xgcd(&powers[i]);
        debug_assert_eq!(g.degree(), Some(0));
        out.push(eval(a, &s.mul(&q).rem(m), e, w));
    }
    Ok(out)
}

/// Orthogonal primitive idempotents summing to the unit of a commutative
/// semisimple algebra `Z ⊂ A` (given by a basis).
fn primitive_central(a: &Algebra, z: &LinSubspace) -> Result<Vec<SparseVec>> {
    let mut done = Vec::new();
    let mut todo = vec![a.unit().clone()];
    'next: while let Some(e) = todo.pop() {
        let corner: Vec<SparseVec> = z.basis().iter().map(|b| a.mul(&e, b)).collect();
        let corner = LinSubspace::from_vectors(a.dim(), &corner);
        for coeffs in small_vectors(corner.dim()) {
            let w = combine(corner.basis(), &coeffs);
            let m = corner_minpoly(a, &e, &w);
            let parts = crt_idempotents(a, &e, &w, &m)?;
            if parts.len() > 1 {
                todo.extend(parts);
                continue 'next;
            }
            if m.degree() == Some(corner.dim()) {
                // Q[w] is all of eZ and a field
                done.push(e);
                continue 'next;
            }
        }
        return Err(Error::uncertified("could not split the centre of the semisimple quotient"));
    }
    done.sort();
    Ok(done)
}

/// A rank-one idempotent of a simple block `B = eA` of dimension 4 with
/// centre Q, or `None` after an exhaustive small search (division algebra).
fn split_quaternion_block(a: &Algebra, e: &SparseVec, block: &LinSubspace) -> Result<Option<SparseVec>> {
    for coeffs in small_vectors(block.dim()) {
        let w = combine(block.basis(), &coeffs);
        let m = corner_minpoly(a, e, &w);
        let parts = crt_idempotents(a, e, &w, &m)?;
        if parts.len() > 1 {
            return Ok(Some(parts[0].clone()));
        }
        // w nilpotent: w·b is a zero divisor for every b, often not nilpotent
        if m.degree() == Some(2) && m.coeff(0).is_zero() && m.coeff(1).is_zero() {
            for b in block.basis() {
                let wb = a.mul(&w, b);
                let parts = crt_idempotents(a, e, &wb, &corner_minpoly(a, e, &wb))?;
                if parts.len() > 1 {
                    return Ok(Some(parts.into_iter().find(|p| !p.is_empty()).expect("nonzero part")));
                }
            }
        }
    }
    Ok(None)
}

fn center(a: &Algebra) -> LinSubspace {
    let d = a.dim();
    let mut rows = Vec::new();
    for k in 0..d {
        let b = sparse::unit(k);
        let m = a.left_mult(&b).sub(&a.right_mult(&b)).expect("square");
        rows.extend(m.row_vecs().iter().cloned());
    }
    exactlin::kernel(&QMatrix::from_rows(d, rows))
}

/// Nonzero idempotents of `A` up to conjugacy, one per class, in the basis of
/// `A`. The unit is among them.
pub fn idempotent_representatives(a: &Algebra) -> Result<Vec<SparseVec>> {
    if a.dim() > IDEMPOTENT_SEARCH_MAX_DIM {
        return Err(Error::cap("End-algebra dimension for idempotent enumeration", a.dim(), IDEMPOTENT_SEARCH_MAX_DIM));
    }
    let rad = jacobson_radical(a);
    let quot = Quotient::new(&LinSubspace::full(a.dim()), &rad);
    let reps = quot.reps().to_vec();
    let s_dim = reps.len();
    let coords = |v: &SparseVec| sparse::from_dense(&quot.coords(v).expect("inside A"));
    let mult = (0..s_dim).map(|i| (0..s_dim).map(|j| coords(&a.mul(&reps[i], &reps[j]))).collect()).collect();
    let labels = (0..s_dim).map(|k| format!("s{k}")).collect();
    let (s, p) = Algebra::from_table(labels, mult, coords(a.unit()))?;
    // element of S -> preimage in A
    let lift_back = |v: &SparseVec| -> SparseVec {
        let mut acc = Accum::new();
        for (k, c) in p.apply(v) {
            acc.add_scaled(&reps[k], &c);
        }
        acc.finish()
    };

    let z = center(&s);
    let mut block_choices: Vec<Vec<SparseVec>> = Vec::new();
    for eps in primitive_central(&s, &z)? {
        let block: Vec<SparseVec> = (0..s.dim()).map(|k| s.mul(&eps, &sparse::unit(k))).collect();
        let block = LinSubspace::from_vectors(s.dim(), &block);
        let zb = LinSubspace::from_vectors(s.dim(), z.basis().iter().map(|b| s.mul(&eps, b)).collect::<Vec<_>>().iter());
        let mut choices = vec![eps.clone()];
        if block.dim() != zb.dim() {
            if block.dim() != 4 || zb.dim() != 1 {
                return Err(Error::invariant("unexpected simple block shape in a small algebra"));
            }
            if let Some(p1) = split_quaternion_block(&s, &eps, &block)? {
                choices.insert(0, p1);
            }
        }
        block_choices.push(choices);
    }

    let mut out: Vec<SparseVec> = Vec::new();
    let mut idx = vec![0usize; block_choices.len()];
    loop {
        // idx[b] = 0 means "omit block b"
        let mut e_bar = Vec::new();
        for (b, &k) in idx.iter().enumerate() {
            if k > 0 {
                e_bar = sparse::add(&e_bar, &block_choices[b][k - 1]);
            }
        }
        if !e_bar.is_empty() {
            let e = lift_idempotent(&lift_back(&e_bar), a, &rad)?;
            debug_assert!(a.is_element_idempotent(&e));
            out.push(e);
        }
        let mut pos = 0;
        while pos < idx.len() {
            if idx[pos] < block_choices[pos].len() {
                idx[pos] += 1;
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == idx.len() {
            break;
        }
    }
    // the unit last
    let unit = a.unit().clone();
    out.retain(|e| *e != unit);
    out.push(unit);
    Ok(out)
}

/// Nonzero idempotents of `End(X)` up to conjugacy, in hom coordinates.
pub(crate) fn end_idempotents(c: &super::PresentedCategory, x: usize) -> Result<Vec<SparseVec>> {
    if c.hom_dim(x, x) == 0 {
        return Ok(Vec::new());
    }
    let (a, p) = c.end_algebra(x)?;
    Ok(idempotent_representatives(&a)?.iter().map(|e| p.apply(e)).collect())
}
