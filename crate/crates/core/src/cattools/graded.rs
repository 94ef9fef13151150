//! Concrete presentations: finite sums of graded lines, with degree-preserving
//! matrices as morphisms, Kronecker products as tensor and the Koszul-signed
//! swap as symmetry. Objects are degree sequences; the tensor product of
//! `(d_i)` and `(e_j)` is `(d_i + e_j)` in Kronecker order, which makes the
//! structure strictly associative.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::scalar::int;
use crate::exactlin::{QMatrix, Scalar, SparseVec};

use super::{Grading, Monoidal, PresentedCategory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GradingKind {
    /// Z-graded spaces; the symmetry carries the sign of the degree parities.
    Integer,
    /// Super vector spaces; degrees are parities 0 and 1.
    Super,
}

/// A faithful functor to vector spaces: underlying dimensions and the matrix
/// of every hom basis vector.
#[derive(Debug, Clone)]
pub struct MatrixRealization {
    pub dims: Vec<usize>,
    basis: Vec<Vec<Vec<QMatrix>>>,
}

impl MatrixRealization {
    pub fn new(dims: Vec<usize>, basis: Vec<Vec<Vec<QMatrix>>>) -> Self {
        MatrixRealization { dims, basis }
    }

    pub fn basis_matrix(&self, x: usize, y: usize, i: usize) -> &QMatrix {
        &self.basis[x][y][i]
    }

    pub fn matrix(&self, x: usize, y: usize, f: &[(usize, Scalar)]) -> QMatrix {
        f.iter().fold(QMatrix::zeros(self.dims[y], self.dims[x]), |acc, (i, c)| {
            acc.add(&self.basis[x][y][*i].scale(c)).expect("same shape")
        })
    }

    /// Checks functoriality on all composable basis pairs of `c`.
    pub fn check_functor(&self, c: &PresentedCategory) -> Result<()> {
        let n = c.n_objects();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for i in 0..c.hom_dim(x, y) {
                        for j in 0..c.hom_dim(y, z) {
                            let lhs = self.matrix(x, z, c.basis_composite(x, y, z, i, j));
                            if lhs != self.basis[y][z][j].dot(&self.basis[x][y][i]) {
                                return Err(Error::invariant("realization does not respect composition"));
                            }
                        }
                    }
                }
            }
            if self.matrix(x, x, c.identity(x)) != QMatrix::identity(self.dims[x]) {
                return Err(Error::invariant("realization does not preserve identities"));
            }
        }
        Ok(())
    }
}

fn parity(d: i64) -> i64 {
    d.rem_euclid(2)
}

/// The full subcategory of graded spaces on the given objects (name, basis
/// degrees). The unit must be among them as a single line of degree 0.
pub fn graded_spaces(kind: GradingKind, objects: &[(String, Vec<i64>)]) -> Result<(PresentedCategory, MatrixRealization)> {
    let n = objects.len();
    if kind == GradingKind::Super && objects.iter().flat_map(|(_, d)| d).any(|&d| d != 0 && d != 1) {
        return Err(Error::invalid("super degrees must be 0 or 1"));
    }
    let degs: Vec<&Vec<i64>> = objects.iter().map(|(_, d)| d).collect();
    let mut lookup: HashMap<&[i64], usize> = HashMap::new();
    for (k, d) in degs.iter().enumerate() {
        lookup.entry(d.as_slice()).or_insert(k);
    }
    let unit = *lookup.get([0i64].as_slice()).ok_or_else(|| Error::invalid("the unit line (degree 0) must be an object"))?;

    // hom basis: pairs (r, s) with deg Y_r = deg X_s, row-major
    let mut pairs: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![Vec::new(); n]; n];
    let mut index: Vec<Vec<HashMap<(usize, usize), usize>>> = vec![vec![HashMap::new(); n]; n];
    for x in 0..n {
        for y in 0..n {
            for r in 0..degs[y].len() {
                for s in 0..degs[x].len() {
                    if degs[y][r] == degs[x][s] {
                        index[x][y].insert((r, s), pairs[x][y].len());
                        pairs[x][y].push((r, s));
                    }
                }
            }
        }
    }
    let labels: Vec<Vec<Vec<String>>> =
        (0..n).map(|x| (0..n).map(|y| pairs[x][y].iter().map(|(r, s)| format!("{s}->{r}")).collect()).collect()).collect();
    let mut composition = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if pairs[x][y].is_empty() || pairs[y][z].is_empty() {
                    continue;
                }
                let t: Vec<Vec<SparseVec>> = pairs[x][y]
                    .iter()
                    .map(|&(r, s)| {
                        pairs[y][z]
                            .iter()
                            .map(|&(t, r2)| if r == r2 { vec![(index[x][z][&(t, s)], int(1))] } else { Vec::new() })
                            .collect()
                    })
                    .collect();
                composition.insert((x, y, z), t);
            }
        }
    }
    let identities: Vec<SparseVec> =
        (0..n).map(|x| (0..degs[x].len()).map(|r| (index[x][x][&(r, r)], int(1))).collect()).collect();
    let names = objects.iter().map(|(s, _)| s.clone()).collect();
    let cat = PresentedCategory::new(names, labels, composition, identities)?;

    let tensor_seq = |x: usize, y: usize| -> Vec<i64> {
        let mut out = Vec::with_capacity(degs[x].len() * degs[y].len());
        for a in degs[x] {
            for b in degs[y] {
                out.push(if kind == GradingKind::Super { (a + b) % 2 } else { a + b });
            }
        }
        out
    };
    let tensor_objects: Vec<Vec<Option<usize>>> =
        (0..n).map(|x| (0..n).map(|y| lookup.get(tensor_seq(x, y).as_slice()).copied()).collect()).collect();
    let mut tensor_morphisms = BTreeMap::new();
    for x in 0..n {
        for x2 in 0..n {
            for y in 0..n {
                for y2 in 0..n {
                    let (Some(s), Some(s2)) = (tensor_objects[x][y], tensor_objects[x2][y2]) else { continue };
                    if pairs[x][x2].is_empty() || pairs[y][y2].is_empty() {
                        continue;
                    }
                    let (ny, ny2) = (degs[y].len(), degs[y2].len());
                    let t: Vec<Vec<SparseVec>> = pairs[x][x2]
                        .iter()
                        .map(|&(r, q)| {
                            pairs[y][y2]
                                .iter()
                                .map(|&(r2, q2)| vec![(index[s][s2][&(r * ny2 + r2, q * ny + q2)], int(1))])
                                .collect()
                        })
                        .collect();
                    tensor_morphisms.insert((x, x2, y, y2), t);
                }
            }
        }
    }
    let mut symmetry = vec![vec![None; n]; n];
    for x in 0..n {
        for y in 0..n {
            let (Some(xy), Some(yx)) = (tensor_objects[x][y], tensor_objects[y][x]) else { continue };
            let (nx, ny) = (degs[x].len(), degs[y].len());
            let mut c = Vec::with_capacity(nx * ny);
            for i in 0..nx {
                for j in 0..ny {
                    let sign = if parity(degs[x][i]) * parity(degs[y][j]) == 1 { -1 } else { 1 };
                    c.push((index[xy][yx][&(j * nx + i, i * ny + j)], int(sign)));
                }
            }
            c.sort_by_key(|(k, _)| *k);
            symmetry[x][y] = Some(c);
        }
    }
    let traces: Vec<Vec<Scalar>> = (0..n)
        .map(|x| {
            pairs[x][x]
                .iter()
                .map(|&(r, s)| {
                    if r != s {
                        int(0)
                    } else if parity(degs[x][r]) == 1 {
                        int(-1)
                    } else {
                        int(1)
                    }
                })
                .collect()
        })
        .collect();
    let cat = cat
        .with_monoidal(Monoidal { unit, tensor_objects, tensor_morphisms, symmetry })?
        .with_traces(traces)?
        .with_grading(Grading { kind, degrees: degs.iter().map(|d| d.to_vec()).collect() })?;

    let basis = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    pairs[x][y]
                        .iter()
                        .map(|&(r, s)| QMatrix::from_triplets(degs[y].len(), degs[x].len(), [(r, s, int(1))]))
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok((cat, MatrixRealization::new(degs.iter().map(|d| d.len()).collect(), basis)))
}
