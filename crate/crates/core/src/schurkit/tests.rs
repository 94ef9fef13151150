use proptest::prelude::*;

use super::*;
use crate::cyclic::SuperSpace;
use crate::exactlin::scalar::{frac, int};
use crate::exactlin::QMatrix;
use crate::superkit::GradedSpace;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Number of (m|k) semistandard supertableaux of shape λ: letters `0..m`
/// even, `m..m+k` odd; equal letters may repeat along rows only when even
/// and down columns only when odd.
fn supertableaux(lambda: &Partition, m: usize, k: usize) -> usize {
    let cells: Vec<(usize, usize)> =
        lambda.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut fill = vec![vec![usize::MAX; lambda.parts().first().copied().unwrap_or(0)]; lambda.len()];
    fn rec(idx: usize, cells: &[(usize, usize)], fill: &mut Vec<Vec<usize>>, m: usize, k: usize) -> usize {
        let Some(&(r, c)) = cells.get(idx) else { return 1 };
        let mut count = 0;
        for x in 0..m + k {
            let odd = x >= m;
            if c > 0 {
                let left = fill[r][c - 1];
                if left > x || (left == x && odd) {
                    continue;
                }
            }
            if r > 0 {
                let up = fill[r - 1][c];
                if up > x || (up == x && !odd) {
                    continue;
                }
            }
            fill[r][c] = x;
            count += rec(idx + 1, cells, fill, m, k);
        }
        fill[r][c] = usize::MAX;
        count
    }
    rec(0, &cells, &mut fill, m, k)
}

#[test]
fn partition_basics() {
    assert_eq!(partitions(5).len(), 7);
    assert_eq!(partitions(8).len(), 22);
    assert_eq!(p(&[2, 1]).standard_tableaux(), 2);
    assert_eq!(p(&[3, 2]).standard_tableaux(), 5);
    assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!(Partition::new(vec![2, 0]).is_err());
    assert_eq!(permutations(4).len(), 24);
    assert_eq!(cycle_type(&[1, 0, 3, 4, 2]), p(&[3, 2]));
}

#[test]
fn trivial_and_sign_characters() {
    for n in 1..=6 {
        let triv = character_table_row(&p(&[n])).unwrap();
        assert!(triv.values().all(|&v| v == 1));
        let sign = character_table_row(&Partition::from_unsorted(vec![1; n])).unwrap();
        for (mu, v) in sign {
            let expected = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(v, expected, "sign character at {mu}");
        }
    }
}

#[test]
fn standard_character_of_s3_matches_the_reflection_representation() {
    let row = character_table_row(&p(&[2, 1])).unwrap();
    for s in permutations(3) {
        // S_3 on the sum-zero plane in Q^3: trace = fixed points - 1
        let fixed = (0..3).filter(|&i| s[i] == i).count() as i64;
        assert_eq!(row[&cycle_type(&s)], fixed - 1);
    }
    assert_eq!(row[&p(&[1, 1, 1])], 2);
    assert_eq!(row[&p(&[2, 1])], 0);
    assert_eq!(row[&p(&[3])], -1);
}

#[test]
fn characters_are_orthonormal() {
    for n in 1..=6 {
        let perms = permutations(n);
        let parts = partitions(n);
        let rows: Vec<_> = parts.iter().map(|l| character_table_row(l).unwrap()).collect();
        for (a, ra) in rows.iter().enumerate() {
            for (b, rb) in rows.iter().enumerate() {
                let s: i64 = perms.iter().map(|s| ra[&cycle_type(s)] * rb[&cycle_type(s)]).sum();
                assert_eq!(s, if a == b { perms.len() as i64 } else { 0 });
            }
        }
    }
}

#[test]
fn degree_cap() {
    assert!(character_table_row(&p(&[9])).is_err());
    assert!(central_idempotent(&p(&[5, 4])).is_err());
}

#[test]
fn small_central_idempotents() {
    assert_eq!(central_idempotent(&p(&[1])).unwrap(), GroupAlgebraElement::identity(1));
    let half = frac(1, 2);
    let sym = GroupAlgebraElement::from_terms(2, [(vec![0, 1], half.clone()), (vec![1, 0], half.clone())]).unwrap();
    let alt = GroupAlgebraElement::from_terms(2, [(vec![0, 1], half.clone()), (vec![1, 0], -half)]).unwrap();
    assert_eq!(central_idempotent(&p(&[2])).unwrap(), sym);
    assert_eq!(central_idempotent(&p(&[1, 1])).unwrap(), alt);
    let c = central_idempotent(&p(&[2, 1])).unwrap();
    assert_eq!(c.coefficient(&[0, 1, 2]), frac(2, 3));
    assert_eq!(c.coefficient(&[1, 0, 2]), int(0));
    assert_eq!(c.coefficient(&[1, 2, 0]), frac(-1, 3));
    assert_eq!(c.mul(&c), c);
}

#[test]
fn central_idempotents_sum_to_one() {
    for n in 1..=5 {
        let total =
            partitions(n).iter().map(|l| central_idempotent(l).unwrap()).fold(GroupAlgebraElement::zero(n), |acc, c| acc.add(&c));
        assert_eq!(total, GroupAlgebraElement::identity(n));
    }
}

#[test]
fn sampled_verification_above_full_degree() {
    let c = central_idempotent(&p(&[3, 2, 1])).unwrap();
    assert!(c.is_central());
    assert_eq!(c.coefficient(&[0, 1, 2, 3, 4, 5]), frac(16 * 16, 720));
}

#[test]
fn young_symmetrizer_is_quasi_idempotent() {
    for parts in [vec![2, 1], vec![2, 2], vec![3, 1], vec![2, 1, 1]] {
        let l = p(&parts);
        let y = young_symmetrizer(&l).unwrap();
        let fact: i64 = (1..=l.weight() as i64).product();
        let factor = frac(fact, l.standard_tableaux() as i64);
        assert_eq!(y.mul(&y), y.scale(&factor), "{l}");
    }
}

#[test]
fn tensor_action_examples() {
    let v = SuperSpace::new(1, 1);
    assert_eq!(tensor_power_action(v, 3, &[0, 1, 2]).unwrap(), QMatrix::identity(8));
    assert_eq!(tensor_power_action(SuperSpace::new(0, 1), 2, &[1, 0]).unwrap(), QMatrix::from_ints(&[&[-1]]));
    // (1|1): basis e0 even, e1 odd; swap e_i⊗e_j -> ± e_j⊗e_i, minus only for odd⊗odd
    let mut expected = QMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            let sign = if i == 1 && j == 1 { -1 } else { 1 };
            expected = expected.add(&QMatrix::from_triplets(4, 4, [(j * 2 + i, i * 2 + j, int(sign))])).unwrap();
        }
    }
    assert_eq!(tensor_power_action(v, 2, &[1, 0]).unwrap(), expected);
    assert!(tensor_power_action(v, 2, &[0, 0]).is_err());
}

#[test]
fn tensor_action_respects_the_coxeter_relations() {
    let v = SuperSpace::new(1, 2);
    let n = 4;
    let s: Vec<QMatrix> = (0..n - 1).map(|k| tensor_power_action(v, n, &adjacent_transposition(n, k)).unwrap()).collect();
    let id = QMatrix::identity(81);
    for k in 0..n - 1 {
        assert_eq!(s[k].dot(&s[k]), id);
        if k + 1 < n - 1 {
            let a = s[k].dot(&s[k + 1]);
            assert_eq!(a.dot(&a).dot(&a), id);
        }
        for l in k + 2..n - 1 {
            assert_eq!(s[k].dot(&s[l]), s[l].dot(&s[k]));
        }
    }
}

#[test]
fn schur_dimension_examples() {
    assert_eq!(schur_dimension(&p(&[2]), SuperSpace::new(2, 0)).unwrap(), 3);
    assert_eq!(schur_dimension(&p(&[1, 1]), SuperSpace::new(1, 0)).unwrap(), 0);
    assert_eq!(schur_dimension(&p(&[2, 1]), SuperSpace::new(2, 0)).unwrap(), 4);
    assert_eq!(supertableaux(&p(&[2, 1]), 2, 0), 2);
}

#[test]
fn schur_dimension_matches_supertableaux() {
    let spaces = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)];
    for n in 1..=4 {
        for l in partitions(n) {
            for &(e, o) in &spaces {
                let v = SuperSpace::new(e, o);
                let expected = l.standard_tableaux() as usize * supertableaux(&l, e, o);
                assert_eq!(schur_dimension(&l, v).unwrap(), expected, "{l} on ({e}|{o})");
            }
        }
    }
}

#[test]
fn schur_dimension_weight_five() {
    for l in partitions(5) {
        for (e, o) in [(1, 1), (2, 1), (1, 2)] {
            let expected = l.standard_tableaux() as usize * supertableaux(&l, e, o);
            assert_eq!(schur_dimension(&l, SuperSpace::new(e, o)).unwrap(), expected, "{l} on ({e}|{o})");
        }
    }
}

#[test]
fn young_route_agrees() {
    for n in 1..=4 {
        for l in partitions(n) {
            for (e, o) in [(2, 0), (1, 1), (0, 2), (2, 1)] {
                let v = SuperSpace::new(e, o);
                let young = schur_dimension_young(&l, v).unwrap();
                assert_eq!(young, supertableaux(&l, e, o));
                assert_eq!(schur_dimension(&l, v).unwrap(), l.standard_tableaux() as usize * young);
            }
        }
    }
}

#[test]
fn schur_finiteness_examples() {
    assert_eq!(is_schur_finite(SuperSpace::new(1, 0), 4).unwrap(), p(&[1, 1]));
    assert_eq!(is_schur_finite(SuperSpace::new(0, 1), 4).unwrap(), p(&[2]));
    assert_eq!(is_schur_finite(SuperSpace::new(1, 1), 4).unwrap(), p(&[2, 2]));
    assert!(matches!(is_schur_finite(SuperSpace::new(1, 1), 3), Err(crate::Error::CapExceeded { .. })));
}

#[test]
fn schur_finiteness_matches_the_rectangle() {
    for (e, o) in [(0, 0), (1, 0), (0, 1), (2, 0), (0, 2), (1, 1), (3, 0), (0, 3)] {
        let v = SuperSpace::new(e, o);
        assert_eq!(is_schur_finite(v, 4).unwrap(), rectangle_criterion(v), "({e}|{o})");
    }
}

#[test]
fn annihilators_transport_to_the_super_collapse() {
    let degrees = [-1i64, 0, 1, 2];
    let mut spaces = Vec::new();
    for a in 0..degrees.len() {
        spaces.push(GradedSpace::new([(degrees[a], 1)]));
        spaces.push(GradedSpace::new([(degrees[a], 2)]));
        for b in a + 1..degrees.len() {
            spaces.push(GradedSpace::new([(degrees[a], 1), (degrees[b], 1)]));
        }
    }
    for g in &spaces {
        for n in 1..=3 {
            for l in partitions(n) {
                let graded = schur_dimension_graded(&l, g).unwrap();
                let collapsed = schur_dimension(&l, g.collapse()).unwrap();
                if graded == 0 {
                    assert_eq!(collapsed, 0, "{l} on {g:?}");
                }
                assert_eq!(graded, collapsed);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn action_is_a_homomorphism(a in 0usize..24, b in 0usize..24, e in 0usize..3, o in 0usize..3) {
        let perms = permutations(4);
        let v = SuperSpace::new(e, o);
        let (s, t) = (&perms[a], &perms[b]);
        let lhs = tensor_power_action(v, 4, &compose(s, t)).unwrap();
        let rhs = tensor_power_action(v, 4, s).unwrap().dot(&tensor_power_action(v, 4, t).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_with_inverse_is_identity(a in 0usize..120) {
        let s = &permutations(5)[a];
        prop_assert_eq!(compose(s, &inverse(s)), (0..5).collect::<Vec<_>>());
        prop_assert_eq!(sign_of(&compose(s, s)), 1);
    }
}
