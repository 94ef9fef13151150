use crate::error::{Error, Result};
use crate::exactlin::scalar::one;
use crate::exactlin::sparse::{self, SparseVec};

use super::Algebra;

/// `A ⊗ B` on the basis of pairs `(i, j) -> i * dim B + j`; the idempotent
/// system is the set of products `e_p ⊗ f_q`.
pub fn tensor_algebra(a: &Algebra, b: &Algebra) -> Algebra {
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let idx = |i: usize, j: usize| i * db + j;
    let mut labels = Vec::with_capacity(d);
    for la in a.labels() {
        for lb in b.labels() {
            labels.push(tensor_label(la, lb));
        }
    }
    let mut mult = vec![vec![Vec::new(); d]; d];
    for i in 0..da {
        for j in 0..db {
            for k in 0..da {
                let ik = a.basis_product(i, k);
                if ik.is_empty() {
                    continue;
                }
                for l in 0..db {
                    mult[idx(i, j)][idx(k, l)] = kron_vec(ik, b.basis_product(j, l), db);
                }
            }
        }
    }
    let unit = kron_vec(a.unit(), b.unit(), db);
    let nb = b.idempotents().len();
    let idempotents: Vec<usize> = a.idempotents().iter().flat_map(|&i| b.idempotents().iter().map(move |&j| idx(i, j))).collect();
    let mut peirce = Vec::with_capacity(d);
    for i in 0..da {
        for j in 0..db {
            let (pa, qa) = a.peirce(i);
            let (pb, qb) = b.peirce(j);
            peirce.push((pa * nb + pb, qa * nb + qb));
        }
    }
    Algebra::from_parts_unchecked(labels, mult, unit, idempotents, peirce)
}

fn tensor_label(a: &str, b: &str) -> String {
    match (a, b) {
        (_, "1") => a.to_string(),
        ("1", _) => b.to_string(),
        _ => format!("{a}⊗{b}"),
    }
}

pub(crate) fn kron_vec(u: &[(usize, crate::exactlin::Scalar)], v: &[(usize, crate::exactlin::Scalar)], dv: usize) -> SparseVec {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for (i, x) in u {
        for (j, y) in v {
            out.push((i * dv + j, x * y));
        }
    }
    out
}

/// `A^op`: same basis, reversed multiplication.
pub fn opposite(a: &Algebra) -> Algebra {
    let d = a.dim();
    let mult = (0..d).map(|i| (0..d).map(|j| a.basis_product(j, i).clone()).collect()).collect();
    let peirce = a.peirce_all().iter().map(|&(p, q)| (q, p)).collect();
    Algebra::from_parts_unchecked(a.labels().to_vec(), mult, a.unit().clone(), a.idempotents().to_vec(), peirce)
}

/// `A × B`.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Algebra {
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    let mut mult = vec![vec![Vec::new(); d]; d];
    for i in 0..da {
        for j in 0..da {
            mult[i][j] = a.basis_product(i, j).clone();
        }
    }
    for i in 0..db {
        for j in 0..db {
            mult[da + i][da + j] = sparse::shifted(b.basis_product(i, j), da);
        }
    }
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("{l}@0")).collect();
    labels.extend(b.labels().iter().map(|l| format!("{l}@1")));
    let unit = sparse::add(a.unit(), &sparse::shifted(b.unit(), da));
    let na = a.idempotents().len();
    let mut idempotents = a.idempotents().to_vec();
    idempotents.extend(b.idempotents().iter().map(|&i| i + da));
    let mut peirce = a.peirce_all().to_vec();
    peirce.extend(b.peirce_all().iter().map(|&(p, q)| (p + na, q + na)));
    Algebra::from_parts_unchecked(labels, mult, unit, idempotents, peirce)
}

/// `Q^n` with its primitive idempotents `e1..en`.
pub fn split_semisimple(n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::invalid("Q^0 is not unital in our sense"));
    }
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    let mut mult = vec![vec![Vec::new(); n]; n];
    for (i, row) in mult.iter_mut().enumerate() {
        row[i] = sparse::unit(i);
    }
    let unit = (0..n).map(|i| (i, one())).collect();
    Algebra::new(labels, mult, unit, Some((0..n).collect()))
}

/// `M_n(Q)` on matrix units `E_ij` (index `i * n + j`), idempotents `E_ii`.
pub fn matrix_algebra(n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::invalid("matrix size must be positive"));
    }
    let d = n * n;
    let labels = (0..d).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    let mut mult = vec![vec![Vec::new(); d]; d];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                mult[i * n + j][j * n + l] = sparse::unit(i * n + l);
            }
        }
    }
    let unit = (0..n).map(|i| (i * n + i, one())).collect();
    Algebra::new(labels, mult, unit, Some((0..n).map(|i| i * n + i).collect()))
}

/// `Q[x]/x^n` on the monomial basis, unit a basis vector.
pub fn truncated_polynomial(n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::invalid("Q[x]/x^0 is the zero ring"));
    }
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        })
        .collect();
    let mut mult = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n - i {
            mult[i][j] = sparse::unit(i + j);
        }
    }
    Algebra::new(labels, mult, sparse::unit(0), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algkit::zoo;

    #[test]
    fn tensor_dimensions() {
        let q = Algebra::ground();
        assert_eq!(tensor_algebra(&q, &q).dim(), 1);
        let t = tensor_algebra(&zoo::a2(), &zoo::q_times_q());
        assert_eq!(t.dim(), 6);
        assert_eq!(t.idempotents().len(), 4);
        // associativity and unit through the checked constructor
        let again =
            Algebra::new(t.labels().to_vec(), t.structure_constants().to_vec(), t.unit().clone(), Some(t.idempotents().to_vec()))
                .unwrap();
        assert_eq!(again.peirce_all(), t.peirce_all());
    }

    #[test]
    fn opposite_involution() {
        let a = zoo::a2();
        assert_eq!(opposite(&opposite(&a)).structure_constants(), a.structure_constants());
        let d = zoo::dual_numbers();
        assert_eq!(opposite(&d).structure_constants(), d.structure_constants());
        let op = opposite(&a);
        Algebra::new(op.labels().to_vec(), op.structure_constants().to_vec(), op.unit().clone(), Some(op.idempotents().to_vec()))
            .unwrap();
    }

    #[test]
    fn small_algebras_pass_checks() {
        assert_eq!(matrix_algebra(2).unwrap().dim(), 4);
        assert_eq!(truncated_polynomial(3).unwrap().dim(), 3);
        assert_eq!(split_semisimple(3).unwrap().idempotents().len(), 3);
        let p = direct_product(&zoo::dual_numbers(), &Algebra::ground());
        Algebra::new(p.labels().to_vec(), p.structure_constants().to_vec(), p.unit().clone(), Some(p.idempotents().to_vec()))
            .unwrap();
    }

    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn opposite_is_an_involution_on_products(i in 0usize..9, j in 0usize..9, tensor in any::<bool>()) {
            let zoo: Vec<Algebra> = zoo::all().into_iter().map(|(_, a)| a).filter(|a| a.dim() <= 4).collect();
            let (x, y) = (&zoo[i % zoo.len()], &zoo[j % zoo.len()]);
            let a = if tensor { tensor_algebra(x, y) } else { direct_product(x, y) };
            let back = opposite(&opposite(&a));
            prop_assert_eq!(back.structure_constants(), a.structure_constants());
        }
    }
}
