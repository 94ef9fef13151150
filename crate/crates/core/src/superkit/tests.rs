use proptest::prelude::*;

use super::*;
use crate::algkit::zoo;
use crate::cyclic::periodic_cyclic;
use crate::motivekit::{categorical_trace, Correspondence};

#[test]
fn block_projectors() {
    let k = kunneth_projectors(SuperSpace::new(1, 0));
    assert_eq!(k.plus(), &QMatrix::identity(1));
    assert!(k.minus().is_zero());
    let k = kunneth_projectors(SuperSpace::new(0, 1));
    assert!(k.plus().is_zero());
    let k = kunneth_projectors(SuperSpace::new(2, 1));
    assert_eq!((k.plus().rank(), k.minus().rank()), (2, 1));
}

#[test]
fn invalid_pairs_are_rejected() {
    let id = QMatrix::identity(2);
    assert!(KunnethPair::new(SuperSpace::new(1, 1), id.clone(), QMatrix::zeros(2, 2)).is_err());
    assert!(KunnethPair::new(SuperSpace::new(2, 0), id.clone(), id).is_err());
}

#[test]
fn tensor_of_pairs() {
    let a = kunneth_projectors(SuperSpace::new(1, 1));
    assert_eq!(kunneth_tensor(&a, &a).unwrap().space(), SuperSpace::new(2, 2));
    let odd = kunneth_projectors(SuperSpace::new(0, 1));
    assert_eq!(kunneth_tensor(&odd, &odd).unwrap().space(), SuperSpace::new(1, 0));
    let v = kunneth_projectors(SuperSpace::new(2, 3));
    let unit = kunneth_projectors(SuperSpace::new(1, 0));
    assert_eq!(kunneth_tensor(&v, &unit).unwrap().space(), SuperSpace::new(2, 3));
}

#[test]
fn ranks() {
    assert_eq!((rank_super(SuperSpace::new(1, 1)), rank_dagger(SuperSpace::new(1, 1))), (0, 2));
    assert_eq!((rank_super(SuperSpace::new(3, 0)), rank_dagger(SuperSpace::new(3, 0))), (3, 3));
    assert_eq!((rank_super(SuperSpace::new(0, 2)), rank_dagger(SuperSpace::new(0, 2))), (-2, 2));
}

#[test]
fn twist_examples() {
    let v = SuperSpace::new(1, 0);
    let t = twist_symmetry(v, &kunneth_projectors(v)).unwrap();
    assert_eq!(t.before, t.after);
    let v = SuperSpace::new(0, 1);
    let t = twist_symmetry(v, &kunneth_projectors(v)).unwrap();
    assert_eq!(t.before, QMatrix::from_ints(&[&[-1]]));
    assert_eq!(t.after, QMatrix::from_ints(&[&[1]]));
    let v = SuperSpace::new(1, 1);
    let t = twist_symmetry(v, &kunneth_projectors(v)).unwrap();
    // e0 even, e1 odd: entries differ exactly at e1⊗e1
    for r in 0..4 {
        for c in 0..4 {
            let differs = t.before.get(r, c) != t.after.get(r, c);
            assert_eq!(differs, r == 3 && c == 3, "entry ({r}, {c})");
        }
    }
    assert!(twist_symmetry(SuperSpace::new(2, 0), &kunneth_projectors(v)).is_err());
}

#[test]
fn twist_traces_are_the_two_ranks() {
    for e in 0..=3 {
        for o in 0..=(3 - e) {
            let v = SuperSpace::new(e, o);
            let t = twist_symmetry(v, &kunneth_projectors(v)).unwrap();
            let (before, after) = (t.before.trace().unwrap(), t.after.trace().unwrap());
            assert_eq!(before, int(rank_super(v)));
            assert_eq!(after, int(rank_dagger(v) as i64));
        }
    }
}

#[test]
fn super_rank_of_hp_is_the_categorical_trace() {
    for a in [zoo::ground(), zoo::q_times_q(), zoo::matrix_algebra_2(), zoo::q_cubed()] {
        let hp = periodic_cyclic(&a, 8).unwrap();
        assert!(hp.is_certified());
        let v = hp.space.unwrap();
        let tr = categorical_trace(&Correspondence::identity(&a)).unwrap();
        assert_eq!(int(rank_super(v)), tr, "{}", a.signature());
    }
}

#[test]
fn graded_collapse() {
    let g = GradedSpace::new([(-1, 2), (0, 1), (3, 1), (4, 0)]);
    assert_eq!(g.collapse(), SuperSpace::new(1, 3));
    assert_eq!(g.total_dim(), 4);
    assert_eq!(g.basis_degrees(), vec![-1, -1, 0, 3]);
    let h = GradedSpace::new([(1, 1)]);
    assert_eq!(g.tensor(&h).collapse(), super_tensor(g.collapse(), h.collapse()));
}

proptest! {
    #[test]
    fn ranks_are_multiplicative(a in 0usize..4, b in 0usize..4, c in 0usize..4, d in 0usize..4) {
        let (v, w) = (SuperSpace::new(a, b), SuperSpace::new(c, d));
        let vw = super_tensor(v, w);
        prop_assert_eq!(rank_super(vw), rank_super(v) * rank_super(w));
        prop_assert_eq!(rank_dagger(vw), rank_dagger(v) * rank_dagger(w));
    }

    #[test]
    fn kunneth_tensor_dimensions(a in 0usize..3, b in 0usize..3, c in 0usize..3, d in 0usize..3) {
        let (v, w) = (SuperSpace::new(a, b), SuperSpace::new(c, d));
        let t = kunneth_tensor(&kunneth_projectors(v), &kunneth_projectors(w)).unwrap();
        prop_assert_eq!(t.space(), SuperSpace::new(a * c + b * d, a * d + b * c));
    }
}
