use super::*;
use crate::algkit::{zoo, Bimodule};
use crate::cyclic::{CyclicComputation, CyclicOptions};
use crate::exactlin::scalar::int;
use crate::exactlin::{self, QMatrix};

fn proj(a: &Algebra, i: usize, b: &Algebra, j: usize) -> Correspondence {
    Correspondence::from_bimodule(&Bimodule::projective(a, i, b, j).unwrap())
}

#[test]
fn unit_correspondence_is_neutral() {
    let (a, b) = (zoo::a2(), zoo::q_times_q());
    let x = proj(&a, 1, &b, 0).add(&proj(&a, 0, &b, 1).scale(&int(3))).unwrap();
    let right = compose(&x, &Correspondence::identity(&b)).unwrap();
    let left = compose(&Correspondence::identity(&a), &x).unwrap();
    assert_eq!(right.class_vector(), x.class_vector());
    assert_eq!(left.class_vector(), x.class_vector());
    assert_eq!(right.terms().len(), x.terms().len());
}

#[test]
fn composition_over_semisimple_is_plain_tensor() {
    let (a, b) = (zoo::a2(), zoo::q_times_q());
    // A e_2 ⊗ f_1 B ⊗_B B f_1 ⊗ e_1 A = A e_2 ⊗ e_1 A, no higher terms
    let c = compose(&proj(&a, 1, &b, 0), &proj(&b, 0, &a, 0)).unwrap();
    assert_eq!(c.class_vector(), proj(&a, 1, &a, 0).class_vector());
    let zero = compose(&proj(&a, 1, &b, 0), &proj(&b, 1, &a, 0)).unwrap();
    assert!(zero.is_zero());
}

#[test]
fn a2_compositions_match_cartan_model() {
    // [A e_i ⊗ e_j A] ∘ [A e_k ⊗ e_l A] = C[j][k] · [A e_i ⊗ e_l A]
    let a = zoo::a2();
    let c = a.cartan_matrix();
    for (i, j, k, l) in index_quadruples(2) {
        let got = compose(&proj(&a, i, &a, j), &proj(&a, k, &a, l)).unwrap();
        let want = proj(&a, i, &a, l).scale(&int(c[j][k] as i64));
        assert_eq!(got.class_vector(), want.class_vector());
    }
}

fn index_quadruples(n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    out.push((i, j, k, l));
                }
            }
        }
    }
    out
}

#[test]
fn intersection_numbers_of_projectives_follow_cartan() {
    for a in [zoo::a2(), zoo::q_times_q(), zoo::commutative_square()] {
        let c = a.cartan_matrix();
        let n = c.len();
        for (i, j, k, l) in index_quadruples(n) {
            let x = proj(&a, i, &a, j);
            let y = proj(&a, k, &a, l);
            let want = int((c[j][k] * c[l][i]) as i64);
            assert_eq!(intersection_number(&x, &y).unwrap(), want);
            if n <= 2 {
                assert_eq!(intersection_number_enveloping(&x, &y).unwrap(), want);
            }
        }
    }
}

#[test]
fn intersection_examples() {
    let q = Algebra::ground();
    let one = Correspondence::identity(&q);
    assert_eq!(intersection_number(&one, &one).unwrap(), int(1));
    assert_eq!(intersection_number(&Correspondence::zero(&q, &q), &one).unwrap(), int(0));
    // HH_0(A2) = A2/[A2, A2] has dimension 2 and nothing above
    let a = zoo::a2();
    let id = Correspondence::identity(&a);
    assert_eq!(intersection_number(&id, &id).unwrap(), int(2));
    assert_eq!(intersection_number_enveloping(&id, &id).unwrap(), int(2));
    // dual numbers have infinite global dimension
    let d = zoo::dual_numbers();
    let idd = Correspondence::identity(&d);
    assert!(matches!(intersection_number(&idd, &idd), Err(Error::Uncertified(_))));
}

#[test]
fn traces() {
    let qq = zoo::q_times_q();
    assert_eq!(categorical_trace(&Correspondence::identity(&qq)).unwrap(), int(2));
    let a = zoo::a2();
    let x = proj(&a, 0, &a, 1);
    assert!(compose(&x, &x).unwrap().is_zero());
    assert_eq!(categorical_trace(&x).unwrap(), int(0));
    let comp = CyclicComputation::new(&a, 4, &CyclicOptions::default()).unwrap();
    let chi = comp.hochschild_homology().euler_characteristic();
    assert_eq!(categorical_trace(&Correspondence::identity(&a)).unwrap(), int(chi));
}

#[test]
fn pairing_is_trace_of_composite() {
    for a in [zoo::a2(), zoo::a3(), zoo::q_times_q()] {
        let span = projective_span(&a, &a).unwrap();
        let mut xs = span.clone();
        xs.push(Correspondence::identity(&a));
        for x in &xs {
            for y in &xs {
                let lhs = intersection_number(x, y).unwrap();
                assert_eq!(lhs, categorical_trace(&compose(x, y).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn numerical_kernels() {
    let qq = zoo::q_times_q();
    let span = projective_span(&qq, &qq).unwrap();
    let nq = numerical_kernel(&qq, &qq, &span, None).unwrap();
    assert!(nq.kernel.is_zero());
    assert_eq!(nq.quotient_dim, 4);
    // Euler form of the projectives is a permutation matrix
    assert_eq!(exactlin::rank(&nq.pairing.entries), 4);

    let mut with_zero = span.clone();
    with_zero.push(Correspondence::zero(&qq, &qq));
    let nq = numerical_kernel(&qq, &qq, &with_zero, None).unwrap();
    assert_eq!(nq.kernel.dim(), 1);
    assert!(nq.kernel.contains(&[(4, int(1))]));

    let mut dup = span.clone();
    dup.push(span[1].clone());
    let nq = numerical_kernel(&qq, &qq, &dup, None).unwrap();
    assert!(nq.kernel.contains(&[(1, int(1)), (4, int(-1))]));
}

#[test]
fn numerical_kernel_is_an_ideal() {
    let a = zoo::a2();
    let mut basis = projective_span(&a, &a).unwrap();
    basis.push(Correspondence::identity(&a));
    let nq = numerical_kernel(&a, &a, &basis, None).unwrap();
    for v in nq.kernel.basis() {
        let parts: Vec<(Scalar, &Correspondence)> = v.iter().map(|(k, c)| (c.clone(), &basis[*k])).collect();
        let f = Correspondence::combination(&a, &a, &parts).unwrap();
        for g in &basis {
            for h in [compose(&f, g).unwrap(), compose(g, &f).unwrap()] {
                for t in &basis {
                    assert_eq!(intersection_number(&h, t).unwrap(), int(0));
                }
            }
        }
    }
    assert_eq!(nq.kernel.dim(), 1);
}

#[test]
fn semisimplicity_reports() {
    let q = Algebra::ground();
    let r = semisimplicity_check(&q, &[]).unwrap();
    assert_eq!((r.end_dim, r.radical_dim), (1, 0));
    let qq = zoo::q_times_q();
    let r = semisimplicity_check(&qq, &[proj(&qq, 0, &qq, 0), proj(&qq, 1, &qq, 1)]).unwrap();
    assert_eq!((r.end_dim, r.radical_dim), (2, 0));
    let a = zoo::a2();
    assert_eq!(semisimplicity_check(&a, &[]).unwrap().radical_dim, 0);
    let r = semisimplicity_check(&a, &projective_span(&a, &a).unwrap()).unwrap();
    assert_eq!((r.end_dim, r.radical_dim), (4, 0));
    // a proper subalgebra {1, x} with x∘x = 0 of the numerical endomorphisms
    let r = semisimplicity_check(&a, &[proj(&a, 0, &a, 1)]).unwrap();
    assert_eq!((r.end_dim, r.radical_dim), (2, 1));
    // the two off-diagonal projectives compose to a diagonal one outside their span
    assert!(semisimplicity_check(&a, &[proj(&a, 0, &a, 1), proj(&a, 1, &a, 0)]).is_err());
}

fn hom(rows: &[&[i64]]) -> QMatrix {
    QMatrix::from_ints(rows)
}

#[test]
fn cnc_instances() {
    let qq = zoo::q_times_q();
    let id = realize_homomorphism(&qq, &qq, &QMatrix::identity(2), 6).unwrap();
    let r = cnc_check(&qq, std::slice::from_ref(&id)).unwrap();
    assert_eq!(r.verdict, CncVerdict::Witness { plus: vec!["1".into()], minus: vec!["0".into()] });

    let p1 = realize_homomorphism(&qq, &qq, &hom(&[&[1, 0], &[0, 0]]), 6).unwrap();
    let p2 = realize_homomorphism(&qq, &qq, &hom(&[&[0, 0], &[0, 1]]), 6).unwrap();
    let r = cnc_check(&qq, &[p1, p2]).unwrap();
    assert_eq!(r.verdict, CncVerdict::Witness { plus: vec!["1".into(), "1".into()], minus: vec!["0".into(), "0".into()] });
    assert_eq!(r.plus.unwrap().class_vector(), Correspondence::identity(&qq).class_vector());
    assert!(r.checked_products >= 4);

    // supplied realization with an odd part: the identity alone cannot split it
    let fake = Generator { correspondence: Correspondence::identity(&qq), even: QMatrix::identity(2), odd: QMatrix::identity(1) };
    assert_eq!(cnc_check(&qq, &[fake]).unwrap().verdict, CncVerdict::UndecidedInSpan);

    let bad =
        Generator { correspondence: Correspondence::identity(&qq), even: QMatrix::scalar(2, int(2)), odd: QMatrix::zeros(0, 0) };
    assert!(matches!(cnc_check(&qq, &[bad]), Err(Error::InvalidArgument(_))));
}

#[test]
fn realizations_with_vanishing_traces_are_nilpotent() {
    let a = zoo::a2();
    let x = proj(&a, 0, &a, 1);
    let powers_trace_zero = (1..=2).all(|n| {
        let mut p = x.clone();
        for _ in 1..n {
            p = compose(&p, &x).unwrap();
        }
        categorical_trace(&p).unwrap() == int(0)
    });
    assert!(powers_trace_zero);
    // on HP^+ of A2 (basis the two vertex classes) x acts through e_2 ↦ e_1
    let realization = hom(&[&[0, 1], &[0, 0]]);
    assert!(exactlin::is_nilpotent_by_traces(&realization).unwrap());
}

#[test]
fn dnc_instances() {
    for a in [Algebra::ground(), zoo::q_times_q(), zoo::a2()] {
        let r = dnc_check(&a, 6).unwrap();
        assert_eq!(r.verdict, DncVerdict::Equal);
        assert!(r.hom_kernel.is_zero() && r.num_kernel.is_zero());
        assert!(r.caveat.is_none());
    }
    let r = dnc_check(&zoo::dual_numbers(), 8).unwrap();
    assert_eq!(r.verdict, DncVerdict::Equal);
    assert!(r.caveat.is_some());
}

mod properties {
    use proptest::collection::vec;
    use proptest::prelude::*;

    use super::*;
    use crate::exactlin::scalar::frac;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn intersection_number_is_bilinear(alg in 0usize..3, cx in vec((-3i64..=3, 1i64..=3), 9), cy in vec((-3i64..=3, 1i64..=3), 9)) {
            let a = [zoo::a2(), zoo::a3(), zoo::q_times_q()][alg].clone();
            let span = projective_span(&a, &a).unwrap();
            let cx: Vec<Scalar> = cx.iter().take(span.len()).map(|&(p, q)| frac(p, q)).collect();
            let cy: Vec<Scalar> = cy.iter().take(span.len()).map(|&(p, q)| frac(p, q)).collect();
            let x = Correspondence::combination(&a, &a, &cx.iter().cloned().zip(&span).collect::<Vec<_>>()).unwrap();
            let y = Correspondence::combination(&a, &a, &cy.iter().cloned().zip(&span).collect::<Vec<_>>()).unwrap();
            let mut expanded = int(0);
            for (i, xi) in span.iter().enumerate() {
                for (j, yj) in span.iter().enumerate() {
                    expanded += &cx[i] * &cy[j] * intersection_number(xi, yj).unwrap();
                }
            }
            prop_assert_eq!(intersection_number(&x, &y).unwrap(), expanded);
        }
    }
}
