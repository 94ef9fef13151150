//! Derived tensor products `X ⊗^L_B Y` through the two-sided bar complex
//! `X ⊗_E B̄^{⊗n} ⊗_E Y`, `E` the (separable) idempotent system of `B` and
//! `B̄ = B/E`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactlin::sparse::{Accum, SparseVec};
use crate::exactlin::{self, LinSubspace, QMatrix, Quotient, Scalar};

use super::resolution::{basic_radical, global_dimension, GlobalDimension};
use super::{Algebra, Bimodule};

/// Default cap on the number of chain basis vectors in one degree.
pub const DEFAULT_CHAIN_CAP: usize = 200_000;

/// Basis of one degree of the bar complex: chains `[m, x_1, .., x_n, y]`.
struct BarDegree {
    chains: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

struct BarComplex<'a> {
    x: &'a Bimodule,
    y: &'a Bimodule,
    b: &'a Algebra,
    degrees: Vec<BarDegree>,
}

impl<'a> BarComplex<'a> {
    fn new(x: &'a Bimodule, y: &'a Bimodule, top: usize, cap: usize) -> Result<Self> {
        let b = x.right();
        let bbar: Vec<usize> = (0..b.dim()).filter(|&k| !b.is_idempotent_basis(k)).collect();
        let mut degrees = Vec::new();
        // partial chains [m, x_1, .., x_n] grouped by their current right vertex
        let mut partial: Vec<Vec<usize>> = (0..x.dim()).map(|m| vec![m]).collect();
        let right_vertex = |chain: &[usize]| -> usize {
            if chain.len() == 1 {
                x.peirce(chain[0]).1
            } else {
                b.peirce(*chain.last().unwrap()).1
            }
        };
        for n in 0..=top {
            let mut chains = Vec::new();
            for p in &partial {
                let v = right_vertex(p);
                for yk in 0..y.dim() {
                    if y.peirce(yk).0 == v {
                        let mut c = p.clone();
                        c.push(yk);
                        chains.push(c);
                    }
                }
            }
            if chains.len() > cap {
                return Err(Error::cap(format!("bar complex degree {n}"), chains.len(), cap));
            }
            let index = chains.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
            degrees.push(BarDegree { chains, index });
            if n < top {
                let mut next = Vec::new();
                for p in &partial {
                    let v = right_vertex(p);
                    for &k in &bbar {
                        if b.peirce(k).0 == v {
                            let mut c = p.clone();
                            c.push(k);
                            next.push(c);
                        }
                    }
                }
                partial = next;
            }
        }
        Ok(BarComplex { x, y, b, degrees })
    }

    fn dim(&self, n: usize) -> usize {
        self.degrees[n].chains.len()
    }

    /// Projection of a `B` element onto `B̄` (drops idempotent components).
    fn project(&self, v: &[(usize, Scalar)]) -> SparseVec {
        v.iter().filter(|(k, _)| !self.b.is_idempotent_basis(*k)).cloned().collect()
    }

    /// Differential `d_n: C_n -> C_{n-1}`, `n >= 1`.
    fn differential(&self, n: usize) -> QMatrix {
        let target = &self.degrees[n - 1];
        let mut cols = Vec::with_capacity(self.dim(n));
        for chain in &self.degrees[n].chains {
            let mut acc = Accum::new();
            let (m, xs, y) = (chain[0], &chain[1..=n], chain[n + 1]);
            // m x_1
            for (mk, c) in self.x.right_action(xs[0]).column(m) {
                let mut t = vec![mk];
                t.extend_from_slice(&xs[1..]);
                t.push(y);
                acc.add(target.index[&t], c);
            }
            // inner products
            for i in 0..n - 1 {
                let sign = if (i + 1) % 2 == 0 { Scalar::from_integer(1.into()) } else { Scalar::from_integer((-1).into()) };
                for (k, c) in self.project(self.b.basis_product(xs[i], xs[i + 1])) {
                    let mut t = vec![m];
                    t.extend_from_slice(&xs[..i]);
                    t.push(k);
                    t.extend_from_slice(&xs[i + 2..]);
                    t.push(y);
                    acc.add(target.index[&t], c * &sign);
                }
            }
            // x_n y
            let sign = if n.is_multiple_of(2) { Scalar::from_integer(1.into()) } else { Scalar::from_integer((-1).into()) };
            for (yk, c) in self.y.left_action(xs[n - 1]).column(y) {
                let mut t = vec![m];
                t.extend_from_slice(&xs[..n - 1]);
                t.push(yk);
                acc.add(target.index[&t], c * &sign);
            }
            cols.push(acc.finish());
        }
        QMatrix::from_columns(target.chains.len(), &cols)
    }

    /// Left action of the `a`-th basis vector of `A` on degree `n` (through `X`).
    fn left_action(&self, n: usize, a: usize) -> QMatrix {
        let deg = &self.degrees[n];
        let la = self.x.left_action(a);
        let cols: Vec<SparseVec> = deg
            .chains
            .iter()
            .map(|chain| {
                let mut acc = Accum::new();
                for (mk, c) in la.column(chain[0]) {
                    let mut t = chain.clone();
                    t[0] = mk;
                    acc.add(deg.index[&t], c);
                }
                acc.finish()
            })
            .collect();
        QMatrix::from_columns(deg.chains.len(), &cols)
    }

    /// Right action of the `c`-th basis vector of `C` on degree `n` (through `Y`).
    fn right_action(&self, n: usize, c: usize) -> QMatrix {
        let deg = &self.degrees[n];
        let rc = self.y.right_action(c);
        let cols: Vec<SparseVec> = deg
            .chains
            .iter()
            .map(|chain| {
                let mut acc = Accum::new();
                let last = chain.len() - 1;
                for (yk, x) in rc.column(chain[last]) {
                    let mut t = chain.clone();
                    t[last] = yk;
                    acc.add(deg.index[&t], x);
                }
                acc.finish()
            })
            .collect();
        QMatrix::from_columns(deg.chains.len(), &cols)
    }
}

/// Whether `X` is projective as a right `B`-module: its projective cover
/// `⊕ top_j · f_j B` has the same dimension as `X`. Requires `B` basic or
/// semisimple.
pub fn is_right_projective(x: &Bimodule) -> Result<bool> {
    let b = x.right();
    let rad = exactlin::jacobson_radical(b);
    if rad.is_zero() {
        return Ok(true);
    }
    basic_radical(b)?;
    let d = x.dim();
    let mut xrad = Vec::new();
    for r in rad.basis() {
        let act = x.act_right(r);
        for k in 0..d {
            let v = act.column(k);
            if !v.is_empty() {
                xrad.push(v);
            }
        }
    }
    let xrad = LinSubspace::from_vectors(d, &xrad);
    let mut cover = 0;
    for (j, &f) in b.idempotents().iter().enumerate() {
        let proj = x.right_action(f);
        let xf = LinSubspace::column_space(proj);
        let top = xf.dim() - xrad.image_under(proj).dim();
        let fjb = (0..b.dim()).filter(|&k| b.peirce(k).0 == j).count();
        cover += top * fjb;
    }
    Ok(cover == d)
}

/// Homology `H_n` of the bar complex with its `A`-`C`-bimodule structure.
fn tor_module(bar: &BarComplex<'_>, n: usize, d_in: Option<&QMatrix>, d_out: Option<&QMatrix>) -> Bimodule {
    let dim = bar.dim(n);
    let cycles = match d_out {
        Some(d) => exactlin::kernel(d),
        None => LinSubspace::full(dim),
    };
    let bounds = match d_in {
        Some(d) => LinSubspace::column_space(d),
        None => LinSubspace::zero(dim),
    };
    let q = Quotient::new(&cycles, &bounds);
    let a = bar.x.left().clone();
    let c = bar.y.right().clone();
    let induced = |m: &QMatrix| -> QMatrix {
        let cols: Vec<SparseVec> = q
            .reps()
            .iter()
            .map(|z| crate::exactlin::sparse::from_dense(&q.coords(&m.apply(z)).expect("action preserves cycles")))
            .collect();
        QMatrix::from_columns(q.dim(), &cols)
    };
    let left_act = (0..a.dim()).map(|i| induced(&bar.left_action(n, i))).collect();
    let right_act = (0..c.dim()).map(|j| induced(&bar.right_action(n, j))).collect();
    Bimodule::from_actions_unchecked(a, c, q.dim(), left_act, right_act)
}

/// `[Tor_0, .., Tor_bound]` of an `A`-`B`-bimodule `x` against a `B`-`C`-bimodule
/// `y`, as `A`-`C`-bimodules. Refuses unless `gldim B <= bound` (so the list
/// is complete) or `x` is projective over `B` (so only `Tor_0` survives).
pub fn derived_tensor(x: &Bimodule, y: &Bimodule, bound: usize) -> Result<Vec<Bimodule>> {
    derived_tensor_capped(x, y, bound, DEFAULT_CHAIN_CAP)
}

pub fn derived_tensor_capped(x: &Bimodule, y: &Bimodule, bound: usize, cap: usize) -> Result<Vec<Bimodule>> {
    if x.right().structure_constants() != y.left().structure_constants() {
        return Err(Error::invalid("bimodules are not composable over the same algebra"));
    }
    let gl = global_dimension(x.right(), bound)?;
    let top = match gl {
        GlobalDimension::Finite(_) => bound,
        GlobalDimension::ExceedsBound(_) => {
            if !is_right_projective(x)? {
                return Err(Error::uncertified(format!(
                    "middle algebra has global dimension above {bound} and the left factor is not projective over it; \
                     no finite resolution certifies the derived tensor"
                )));
            }
            0
        }
    };
    let bar = BarComplex::new(x, y, top + 1, cap)?;
    let diffs: Vec<QMatrix> = (1..=top + 1).map(|n| bar.differential(n)).collect();
    let mut out = Vec::with_capacity(bound + 1);
    for n in 0..=top {
        let d_out = if n == 0 { None } else { Some(&diffs[n - 1]) };
        out.push(tor_module(&bar, n, Some(&diffs[n]), d_out));
    }
    while out.len() <= bound {
        out.push(Bimodule::from_actions_unchecked(
            x.left().clone(),
            y.right().clone(),
            0,
            vec![QMatrix::zeros(0, 0); x.left().dim()],
            vec![QMatrix::zeros(0, 0); y.right().dim()],
        ));
    }
    Ok(out)
}

/// Dimensions of the bar complex degrees `0..=top` (diagnostics and tests).
pub fn bar_dimensions(x: &Bimodule, y: &Bimodule, top: usize) -> Result<Vec<usize>> {
    let bar = BarComplex::new(x, y, top, DEFAULT_CHAIN_CAP)?;
    Ok((0..=top).map(|n| bar.dim(n)).collect())
}

/// Euler characteristic of the bar complex through degree `top`
/// (the alternating sum of `Tor` dimensions when `top` exceeds their range).
pub fn bar_euler_characteristic(x: &Bimodule, y: &Bimodule, top: usize) -> Result<i64> {
    let bar = BarComplex::new(x, y, top + 1, DEFAULT_CHAIN_CAP)?;
    let diffs: Vec<QMatrix> = (1..=top + 1).map(|n| bar.differential(n)).collect();
    let mut chi = 0i64;
    for n in 0..=top {
        let out = if n == 0 { 0 } else { exactlin::rank(&diffs[n - 1]) };
        let inc = exactlin::rank(&diffs[n]);
        let h = (bar.dim(n) - out - inc) as i64;
        chi += if n % 2 == 0 { h } else { -h };
    }
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algkit::zoo;
    use crate::exactlin::scalar::int;

    fn dims(v: &[Bimodule]) -> Vec<usize> {
        v.iter().map(Bimodule::dim).collect()
    }

    #[test]
    fn unit_of_composition() {
        for a in [zoo::a2(), zoo::q_times_q(), zoo::commutative_square()] {
            let reg = Bimodule::regular(&a);
            let p = Bimodule::projective(&a, 0, &a, a.idempotents().len() - 1).unwrap();
            let t = derived_tensor(&reg, &p, 3).unwrap();
            assert_eq!(t[0].dim(), p.dim());
            assert!(t[0].is_isomorphic(&p).unwrap());
            assert!(t[1..].iter().all(|m| m.dim() == 0));
        }
    }

    #[test]
    fn semisimple_middle_has_no_higher_tor() {
        let b = zoo::q_times_q();
        let x = Bimodule::projective(&b, 0, &b, 1).unwrap();
        let y = Bimodule::projective(&b, 1, &b, 0).unwrap();
        let t = derived_tensor(&x, &y, 2).unwrap();
        assert_eq!(dims(&t), vec![1, 0, 0]);
    }

    /// Simple `A_2`-bimodule at the pair of vertices `(p, q)`.
    fn simple_bimodule(a: &Algebra, p: usize, q: usize) -> Bimodule {
        let d = a.dim();
        let la = (0..d).map(|i| QMatrix::scalar(1, int(i64::from(a.idempotents()[p] == i)))).collect();
        let ra = (0..d).map(|i| QMatrix::scalar(1, int(i64::from(a.idempotents()[q] == i)))).collect();
        Bimodule::new(a.clone(), a.clone(), 1, la, ra, None).unwrap()
    }

    #[test]
    fn a2_simples_against_each_other() {
        // by hand: the only chain of S_1 ⊗ B̄^n ⊗ S_2 is (s, a, t) in degree 1,
        // so Tor_1 = Q and everything else vanishes
        let a = zoo::a2();
        let s1 = simple_bimodule(&a, 0, 0);
        let s2 = simple_bimodule(&a, 1, 1);
        let t12 = derived_tensor(&s1, &s2, 3).unwrap();
        let t21 = derived_tensor(&s2, &s1, 3).unwrap();
        let t11 = derived_tensor(&s1, &s1, 3).unwrap();
        assert_eq!(dims(&t12), vec![0, 1, 0, 0]);
        assert_eq!(dims(&t21), vec![0, 0, 0, 0]);
        assert_eq!(dims(&t11), vec![1, 0, 0, 0]);
        assert_eq!(bar_dimensions(&s1, &s2, 2).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn dual_numbers_refuse_without_projectivity() {
        let d = zoo::dual_numbers();
        let s = simple_bimodule(&d, 0, 0);
        assert!(matches!(derived_tensor(&s, &s, 4), Err(Error::Uncertified(_))));
        let reg = Bimodule::regular(&d);
        assert!(is_right_projective(&reg).unwrap());
        assert!(!is_right_projective(&s).unwrap());
        let t = derived_tensor(&reg, &s, 4).unwrap();
        assert_eq!(dims(&t), vec![1, 0, 0, 0, 0]);
    }

    use proptest::prelude::*;

    /// `Σ (-1)^n [Tor_n]` through the Peirce dimensions of each term.
    fn class(terms: &[Bimodule]) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = Vec::new();
        for (n, t) in terms.iter().enumerate() {
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            let p = t.peirce_dims();
            if out.is_empty() {
                out = vec![vec![0; p.first().map_or(0, Vec::len)]; p.len()];
            }
            for (r, row) in p.iter().enumerate() {
                for (c, &d) in row.iter().enumerate() {
                    out[r][c] += sign * d as i64;
                }
            }
        }
        out
    }

    fn sum(classes: impl IntoIterator<Item = (i64, Vec<Vec<i64>>)>) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = Vec::new();
        for (sign, c) in classes {
            if out.is_empty() {
                out = c.iter().map(|r| vec![0; r.len()]).collect();
            }
            for (r, row) in c.iter().enumerate() {
                for (k, &d) in row.iter().enumerate() {
                    out[r][k] += sign * d;
                }
            }
        }
        out
    }

    fn sample(a: &Algebra, kind: usize, p: usize, q: usize) -> Bimodule {
        let (p, q) = (p % a.idempotents().len(), q % a.idempotents().len());
        match kind % 3 {
            0 => Bimodule::regular(a),
            1 => Bimodule::projective(a, p, a, q).unwrap(),
            _ => simple_bimodule(a, p, q),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn derived_tensor_is_associative_on_classes(alg in 0usize..3, kinds in (0usize..3, 0usize..3, 0usize..3), ends in proptest::collection::vec(0usize..3, 6)) {
            let a = [zoo::a2(), zoo::a3(), zoo::commutative_square()][alg].clone();
            let x = sample(&a, kinds.0, ends[0], ends[1]);
            let y = sample(&a, kinds.1, ends[2], ends[3]);
            let z = sample(&a, kinds.2, ends[4], ends[5]);
            let bound = 4;
            let sign = |n: usize| if n.is_multiple_of(2) { 1 } else { -1 };
            let left = sum(derived_tensor(&x, &y, bound).unwrap().iter().enumerate()
                .map(|(n, t)| (sign(n), class(&derived_tensor(t, &z, bound).unwrap()))));
            let right = sum(derived_tensor(&y, &z, bound).unwrap().iter().enumerate()
                .map(|(n, t)| (sign(n), class(&derived_tensor(&x, t, bound).unwrap()))));
            prop_assert_eq!(left, right);
        }
    }
}
