//! The example algebras used throughout the tests and the shipped data files.

use crate::exactlin::scalar::int;

use super::construct::split_semisimple;
use super::quiver::{path_algebra, relation_from_strings, Arrow};
use super::Algebra;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn arrow(name: &str, from: usize, to: usize) -> Arrow {
    Arrow { name: name.into(), from, to }
}

pub fn ground() -> Algebra {
    Algebra::ground()
}

pub fn q_times_q() -> Algebra {
    split_semisimple(2).expect("Q x Q")
}

pub fn q_cubed() -> Algebra {
    split_semisimple(3).expect("Q x Q x Q")
}

pub fn matrix_algebra_2() -> Algebra {
    matrix_algebra(2)
}

pub fn matrix_algebra(n: usize) -> Algebra {
    super::construct::matrix_algebra(n).expect("M_n(Q)")
}

/// `Q[ε]/ε²` as a one-loop quiver with the relation `x*x`.
pub fn dual_numbers() -> Algebra {
    let v = names(&["v"]);
    let arrows = vec![arrow("x", 0, 0)];
    let rel = relation_from_strings(&v, &arrows, &[(int(1), "x*x")]).unwrap();
    path_algebra(v, arrows, vec![rel], 2).expect("dual numbers")
}

/// `Q[x]/x³`: one loop, paths of length at most 2.
pub fn cubic_truncation() -> Algebra {
    path_algebra(names(&["v"]), vec![arrow("x", 0, 0)], vec![], 2).expect("Q[x]/x^3")
}

/// Path algebra of `1 -a-> 2`.
pub fn a2() -> Algebra {
    path_algebra(names(&["1", "2"]), vec![arrow("a", 0, 1)], vec![], 2).expect("A2")
}

/// Path algebra of `1 -a-> 2 -b-> 3`.
pub fn a3() -> Algebra {
    path_algebra(names(&["1", "2", "3"]), vec![arrow("a", 0, 1), arrow("b", 1, 2)], vec![], 2).expect("A3")
}

/// Commutative square `1 -a-> 2 -b-> 4`, `1 -c-> 3 -d-> 4` with `a*b = c*d`.
pub fn commutative_square() -> Algebra {
    let v = names(&["1", "2", "3", "4"]);
    let arrows = vec![arrow("a", 0, 1), arrow("b", 1, 3), arrow("c", 0, 2), arrow("d", 2, 3)];
    let rel = relation_from_strings(&v, &arrows, &[(int(1), "a*b"), (int(-1), "c*d")]).unwrap();
    path_algebra(v, arrows, vec![rel], 2).expect("commutative square")
}

/// The full example zoo, named.
pub fn all() -> Vec<(&'static str, Algebra)> {
    vec![
        ("Q", ground()),
        ("QxQ", q_times_q()),
        ("QxQxQ", q_cubed()),
        ("M2(Q)", matrix_algebra_2()),
        ("dual_numbers", dual_numbers()),
        ("Q[x]/x^3", cubic_truncation()),
        ("A2", a2()),
        ("A3", a3()),
        ("commutative_square", commutative_square()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zoo_dimensions() {
        let dims: Vec<usize> = all().iter().map(|(_, a)| a.dim()).collect();
        assert_eq!(dims, vec![1, 2, 3, 4, 2, 3, 3, 6, 9]);
    }
}
