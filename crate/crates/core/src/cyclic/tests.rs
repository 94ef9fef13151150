use super::*;
use crate::algkit::{split_semisimple, zoo, Bimodule};
use crate::exactlin::scalar::int;
use crate::exactlin::sparse;
use crate::exactlin::{self, QMatrix};

fn unit_frame() -> CyclicOptions {
    CyclicOptions { frame: Frame::Unit, ..CyclicOptions::default() }
}

/// HH of `A` with coefficients in itself from the bar complex `A ⊗ A^{⊗n}`
/// with no normalization at all.
fn unnormalized_hh(a: &Algebra, n_max: usize) -> Vec<usize> {
    let d = a.dim();
    let dims: Vec<usize> = (0..=n_max).map(|n| d.pow(n as u32 + 1)).collect();
    let digits = |mut idx: usize, len: usize| {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = idx % d;
            idx /= d;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().fold(0, |acc, &x| acc * d + x);
    let mut ranks = Vec::new();
    for n in 1..=n_max {
        let mut trips = Vec::new();
        for col in 0..dims[n] {
            let t = digits(col, n + 1);
            for i in 0..n {
                let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                for (k, c) in a.basis_product(t[i], t[i + 1]) {
                    let mut u = t[..i].to_vec();
                    u.push(*k);
                    u.extend_from_slice(&t[i + 2..]);
                    trips.push((encode(&u), col, c * &sign));
                }
            }
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            for (k, c) in a.basis_product(t[n], t[0]) {
                let mut u = vec![*k];
                u.extend_from_slice(&t[1..n]);
                trips.push((encode(&u), col, c * &sign));
            }
        }
        ranks.push(exactlin::rank(&QMatrix::from_triplets(dims[n - 1], dims[n], trips)));
    }
    (0..n_max).map(|n| dims[n] - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 }).collect()
}

#[test]
fn normalized_chain_dimensions() {
    let q = Algebra::ground();
    let c = hochschild_complex(&q, &Bimodule::regular(&q), 4).unwrap();
    assert_eq!(c.dims(), &[1, 0, 0, 0, 0]);
    let d = zoo::dual_numbers();
    let c = hochschild_complex(&d, &Bimodule::regular(&d), 5).unwrap();
    assert_eq!(c.dims(), &[2; 6]);
    let a = zoo::a2();
    let c = hochschild_complex(&a, &Bimodule::regular(&a), 4).unwrap();
    assert_eq!(c.dims(), &[3, 6, 12, 24, 48]);
}

#[test]
fn cap_is_enforced() {
    let a = zoo::a2();
    let opts = CyclicOptions { cap: 50, ..unit_frame() };
    let err = hochschild_complex_with(&a, &Bimodule::regular(&a), 6, &opts).unwrap_err();
    assert!(matches!(err, Error::CapExceeded { .. }));
}

#[test]
fn hochschild_of_small_algebras() {
    let q = Algebra::ground();
    assert_eq!(hochschild_homology(&q, &Bimodule::regular(&q), 5).unwrap().dims, vec![1, 0, 0, 0, 0]);
    let d = zoo::dual_numbers();
    let hh = hochschild_homology(&d, &Bimodule::regular(&d), 7).unwrap();
    assert_eq!(hh.dims, vec![2, 1, 1, 1, 1, 1, 1]);
    assert_eq!(hh.certified_through, 6);
    let m2 = zoo::matrix_algebra_2();
    assert_eq!(hochschild_homology(&m2, &Bimodule::regular(&m2), 5).unwrap().dims, vec![1, 0, 0, 0, 0]);
    let hh_unit = hochschild_homology_with(&m2, &Bimodule::regular(&m2), 5, &unit_frame()).unwrap();
    assert_eq!(hh_unit.dims, vec![1, 0, 0, 0, 0]);
}

#[test]
fn normalized_agrees_with_unnormalized() {
    for a in [zoo::dual_numbers(), zoo::q_times_q(), zoo::a2(), zoo::cubic_truncation()] {
        let n_max = if a.dim() > 2 { 4 } else { 6 };
        let oracle = unnormalized_hh(&a, n_max);
        let m = Bimodule::regular(&a);
        assert_eq!(hochschild_homology(&a, &m, n_max).unwrap().dims, oracle, "{}", a.signature());
        assert_eq!(hochschild_homology_with(&a, &m, n_max, &unit_frame()).unwrap().dims, oracle);
    }
}

#[test]
fn hochschild_with_bimodule_coefficients() {
    // HH_*(A2; A e_1 ⊗ e_1 A) is the Peirce corner e_1 A e_1 = Q in degree 0
    let a = zoo::a2();
    let p = Bimodule::projective(&a, 0, &a, 0).unwrap();
    assert_eq!(hochschild_homology(&a, &p, 4).unwrap().dims, vec![1, 0, 0, 0]);
    let p = Bimodule::projective(&a, 0, &a, 1).unwrap();
    assert_eq!(hochschild_homology(&a, &p, 4).unwrap().dims, vec![0, 0, 0, 0]);
}

#[test]
fn mixed_complex_operators() {
    let q = mixed_complex(&Algebra::ground(), 4).unwrap();
    assert!((0..4).all(|n| q.big_b(n).is_zero()));
    let d = mixed_complex(&zoo::dual_numbers(), 4).unwrap();
    assert_eq!(exactlin::rank(d.big_b(0)), 1);
    for (_, a) in zoo::all() {
        // the constructor verifies the relations
        mixed_complex_with(&a, 5, &CyclicOptions::default()).unwrap();
    }
}

#[test]
fn cyclic_homology_tables() {
    let q = cyclic_homology(&Algebra::ground(), 7).unwrap();
    assert_eq!(q.dims, vec![1, 0, 1, 0, 1, 0, 1]);
    let qq = cyclic_homology(&zoo::q_times_q(), 7).unwrap();
    assert_eq!(qq.dims, vec![2, 0, 2, 0, 2, 0, 2]);
    let sep = cyclic_homology(&zoo::dual_numbers(), 7).unwrap();
    let unit = CyclicComputation::new(&zoo::dual_numbers(), 7, &unit_frame()).unwrap().cyclic_homology();
    assert_eq!(sep, unit);
    let a = zoo::a2();
    let sep = cyclic_homology(&a, 5).unwrap();
    let unit = CyclicComputation::new(&a, 5, &unit_frame()).unwrap().cyclic_homology();
    assert_eq!(sep, unit);
    assert_eq!(sep.dims, vec![2, 0, 2, 0, 2]);
}

#[test]
fn sbi_sequence_is_exact_on_the_zoo() {
    for (name, a) in zoo::all() {
        let report = sbi_check(&a, 8).unwrap();
        assert!(report.all_exact(), "{name}: {:?}", report.rows.iter().find(|r| !r.exact));
    }
    let report = sbi_check(&zoo::q_times_q(), 6).unwrap();
    let s_rows: Vec<_> = report.rows.iter().filter(|r| r.spot.ends_with("(S,B)")).collect();
    assert!(s_rows.iter().all(|r| r.rank_in == r.dim));
}

#[test]
fn periodic_cyclic_results() {
    let hp = periodic_cyclic(&Algebra::ground(), 6).unwrap();
    assert_eq!((hp.space, hp.certificate), (Some(SuperSpace::new(1, 0)), Certificate::Certified));
    let hp = periodic_cyclic(&zoo::q_times_q(), 6).unwrap();
    assert_eq!((hp.space, hp.certificate), (Some(SuperSpace::new(2, 0)), Certificate::Certified));
    // HH_0(A2) = A2/[A2, A2] is spanned by the two vertices
    let hp = periodic_cyclic(&zoo::a2(), 6).unwrap();
    assert_eq!((hp.space, hp.certificate), (Some(SuperSpace::new(2, 0)), Certificate::Certified));
    let hp = periodic_cyclic(&zoo::commutative_square(), 6).unwrap();
    assert_eq!(hp.space, Some(SuperSpace::new(4, 0)));
    let hp = periodic_cyclic(&zoo::dual_numbers(), 8).unwrap();
    assert_eq!(hp.space, Some(SuperSpace::new(1, 0)));
    assert_eq!(hp.certificate, Certificate::WindowStable);
    assert_eq!(hp.method, Some(Stabilization::StableImage));
    assert!(periodic_cyclic(&Algebra::ground(), 3).is_err());
}

#[test]
fn morita_invariance_for_m2() {
    let (m2, q) = (zoo::matrix_algebra_2(), Algebra::ground());
    for n_max in [4, 6] {
        let (cm, cq) = (
            CyclicComputation::new(&m2, n_max, &CyclicOptions::default()).unwrap(),
            CyclicComputation::new(&q, n_max, &CyclicOptions::default()).unwrap(),
        );
        assert_eq!(cm.hochschild_homology(), cq.hochschild_homology());
        assert_eq!(cm.cyclic_homology(), cq.cyclic_homology());
        assert_eq!(cm.periodic_cyclic().unwrap().space, cq.periodic_cyclic().unwrap().space);
    }
}

#[test]
fn euler_characteristic_stable_in_truncation() {
    let a = zoo::commutative_square();
    let m = Bimodule::regular(&a);
    let x3 = hochschild_homology(&a, &m, 4).unwrap().euler_characteristic();
    let x5 = hochschild_homology(&a, &m, 7).unwrap().euler_characteristic();
    assert_eq!(x3, x5);
}

fn inclusion_q_to(b: &Algebra) -> QMatrix {
    QMatrix::from_columns(b.dim(), &[b.unit().clone()])
}

#[test]
fn hp_functoriality() {
    let q = Algebra::ground();
    let qq = zoo::q_times_q();
    let (id_even, id_odd) = hp_of_homomorphism(&qq, &qq, &QMatrix::identity(2), 6).unwrap();
    assert_eq!(id_even, QMatrix::identity(2));
    assert_eq!(id_odd.nrows(), 0);
    let incl = inclusion_q_to(&qq);
    let (even, _) = hp_of_homomorphism(&q, &qq, &incl, 6).unwrap();
    assert_eq!(even, QMatrix::from_ints(&[&[1], &[1]]));
    let proj = QMatrix::from_ints(&[&[1, 0]]);
    let (p_even, _) = hp_of_homomorphism(&qq, &q, &proj, 6).unwrap();
    let (c_even, _) = hp_of_homomorphism(&q, &q, &proj.dot(&incl), 6).unwrap();
    assert_eq!(p_even.dot(&even), c_even);
    assert_eq!(c_even, QMatrix::identity(1));
    let ip = even.dot(&p_even);
    assert_eq!(ip.dot(&ip), ip);
    assert_eq!(exactlin::rank(&ip), 1);
    // dual numbers are not certified
    let d = zoo::dual_numbers();
    let err = hp_of_homomorphism(&q, &d, &inclusion_q_to(&d), 6).unwrap_err();
    assert!(matches!(err, Error::Uncertified(_)));
}

#[test]
fn chern_character_basics() {
    let q = Algebra::ground();
    let ch = chern_character(&q, &[vec![q.unit().clone()]], 6).unwrap();
    assert_eq!(ch.degree0(), &vec![(0, int(1))]);
    assert_eq!(ch.hc_coords, vec![int(1)]);
    assert!(ch.hp_certified);

    let qq = split_semisimple(2).unwrap();
    let ch = chern_character(&qq, &[vec![sparse::unit(0)]], 6).unwrap();
    assert_eq!(ch.degree0(), &vec![(0, int(1))]);

    let not_idem = chern_character(&qq, &[vec![sparse::scale(&sparse::unit(0), &int(2))]], 6);
    assert!(not_idem.is_err());
}

#[test]
fn chern_character_of_vertex_matches_corner_embedding() {
    let a = zoo::a2();
    let e1 = a.index_of("e_1").unwrap();
    let ch = chern_character(&a, &[vec![sparse::unit(e1)]], 6).unwrap();
    let corner = QMatrix::from_columns(a.dim(), &[sparse::unit(e1)]);
    let (even, _) = hp_of_homomorphism(&Algebra::ground(), &a, &corner, 6).unwrap();
    assert_eq!(sparse::from_dense(&ch.hc_coords), even.column(0));
}

#[test]
fn chern_character_of_matrix_idempotents_is_a_cycle() {
    // [[1, x], [0, 0]] over the dual numbers and [[e_1, a], [0, 0]] over A2
    let d = zoo::dual_numbers();
    let x = d.index_of("x").unwrap();
    let e = vec![vec![d.unit().clone(), sparse::unit(x)], vec![vec![], vec![]]];
    let ch = chern_character(&d, &e, 7).unwrap();
    assert_eq!(ch.components.len(), 4);
    assert!(!ch.hp_certified);

    let a = zoo::a2();
    let (e1, arrow) = (a.index_of("e_1").unwrap(), a.index_of("a").unwrap());
    let e = vec![vec![sparse::unit(e1), sparse::unit(arrow)], vec![vec![], vec![]]];
    let ch = chern_character(&a, &e, 6).unwrap();
    let ch1 = chern_character(&a, &[vec![sparse::unit(e1)]], 6).unwrap();
    assert_eq!(ch.hc_coords, ch1.hc_coords);
}

mod properties {
    use proptest::prelude::*;

    use super::*;
    use crate::algkit::{direct_product, global_dimension, tensor_algebra};

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn euler_characteristic_is_independent_of_truncation(k in 0usize..9, extra in 1usize..4) {
            let (_, a) = zoo::all().swap_remove(k);
            let g = global_dimension(&a, 6).unwrap().finite();
            prop_assume!(g.is_some());
            let n = g.unwrap() + 2;
            let m = Bimodule::regular(&a);
            let short = hochschild_homology(&a, &m, n).unwrap().euler_characteristic();
            let long = hochschild_homology(&a, &m, n + extra).unwrap().euler_characteristic();
            prop_assert_eq!(short, long);
        }

        #[test]
        fn mixed_complex_axioms_on_products(i in 0usize..16, j in 0usize..16, tensor in any::<bool>()) {
            let small: Vec<Algebra> = zoo::all().into_iter().map(|(_, a)| a).filter(|a| a.dim() <= 4).collect();
            let (x, y) = (&small[i % small.len()], &small[j % small.len()]);
            let a = if tensor { tensor_algebra(x, y) } else { direct_product(x, y) };
            let comp = CyclicComputation::new(&a, 4, &CyclicOptions::default());
            prop_assume!(!matches!(comp, Err(Error::CapExceeded { .. })));
            let comp = comp.unwrap();
            let mc = comp.mixed_complex();
            for n in 2..=4 {
                prop_assert!(mc.b(n - 1).mul(mc.b(n)).unwrap().is_zero());
            }
            for n in 0..=2 {
                prop_assert!(mc.big_b(n + 1).mul(mc.big_b(n)).unwrap().is_zero());
            }
            for n in 1..=3 {
                let s = mc.b(n + 1).mul(mc.big_b(n)).unwrap().add(&mc.big_b(n - 1).mul(mc.b(n)).unwrap()).unwrap();
                prop_assert!(s.is_zero());
            }
        }
    }
}
