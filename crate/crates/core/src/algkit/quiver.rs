use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactlin::sparse::{Accum, SparseVec};
use crate::exactlin::{LinSubspace, Scalar};

use super::Algebra;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

/// A path: a start vertex and a sequence of arrows, read left to right
/// (`a*b` is `a` followed by `b`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

/// A rational combination of parallel paths.
pub type Relation = Vec<(Scalar, Path)>;

/// Quiver with relations and a path-length truncation, together with the
/// basis paths that survive in the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub truncation: usize,
    basis_paths: Vec<Path>,
}

impl QuiverPresentation {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>, relations: Vec<Relation>, truncation: usize) -> Self {
        QuiverPresentation { vertices, arrows, relations, truncation, basis_paths: Vec::new() }
    }

    pub fn target(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.source, |&a| self.arrows[a].to)
    }

    /// Paths of the algebra basis, in basis order.
    pub fn basis_paths(&self) -> &[Path] {
        &self.basis_paths
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// Parses `e_v` or `a*b*...`.
    pub fn parse_path(&self, s: &str) -> Result<Path> {
        let s = s.trim();
        if let Some(v) = s.strip_prefix("e_") {
            if let Some(i) = self.vertices.iter().position(|x| x == v) {
                return Ok(Path { source: i, arrows: Vec::new() });
            }
        }
        let mut arrows = Vec::new();
        for name in s.split('*') {
            let name = name.trim();
            let a = self
                .arrows
                .iter()
                .position(|x| x.name == name)
                .ok_or_else(|| Error::Parse(format!("unknown arrow or vertex in path '{s}'")))?;
            if let Some(&prev) = arrows.last() {
                let prev: usize = prev;
                if self.arrows[prev].to != self.arrows[a].from {
                    return Err(Error::Parse(format!("path '{s}' is not composable")));
                }
            }
            arrows.push(a);
        }
        if arrows.is_empty() {
            return Err(Error::Parse("empty path".into()));
        }
        Ok(Path { source: self.arrows[arrows[0]].from, arrows })
    }

    fn concat(&self, p: &Path, q: &Path) -> Option<Path> {
        if self.target(p) != q.source {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        Some(Path { source: p.source, arrows })
    }

    fn all_paths(&self) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices.len()).map(|v| Path { source: v, arrows: Vec::new() }).collect();
        let mut frontier: Vec<Path> = out.clone();
        for _ in 0..self.truncation {
            let mut next = Vec::new();
            for p in &frontier {
                let t = self.target(p);
                for (a, arr) in self.arrows.iter().enumerate() {
                    if arr.from == t {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        next.push(Path { source: p.source, arrows });
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

/// Path algebra of a quiver modulo relations and modulo all paths longer than
/// `truncation`. The basis consists of the path classes that are not leading
/// terms of the relation ideal (longer paths are eliminated first), so every
/// basis vector is a path and the vertex idempotents are basis vectors.
pub fn path_algebra(vertices: Vec<String>, arrows: Vec<Arrow>, relations: Vec<Relation>, truncation: usize) -> Result<Algebra> {
    if vertices.is_empty() {
        return Err(Error::invalid("quiver has no vertices"));
    }
    if truncation < 1 {
        return Err(Error::invalid("truncation must be at least 1"));
    }
    if arrows.iter().any(|a| a.from >= vertices.len() || a.to >= vertices.len()) {
        return Err(Error::invalid("arrow endpoint out of range"));
    }
    let mut q = QuiverPresentation::new(vertices, arrows, relations, truncation);
    for rel in &q.relations {
        let ends: Vec<(usize, usize)> = rel.iter().map(|(_, p)| (p.source, q.target(p))).collect();
        if ends.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::invalid("relation mixes paths with different endpoints"));
        }
    }
    let paths = q.all_paths();
    let n = paths.len();
    // coordinate of a path: longer (later) paths get smaller coordinates so they become pivots
    let index: HashMap<Path, usize> = paths.iter().enumerate().map(|(i, p)| (p.clone(), n - 1 - i)).collect();
    let to_vec = |terms: &[(Scalar, Path)]| -> SparseVec {
        let mut acc = Accum::new();
        for (c, p) in terms {
            if let Some(&i) = index.get(p) {
                acc.add_ref(i, c);
            }
        }
        acc.finish()
    };
    let mut gens = Vec::new();
    for rel in &q.relations {
        for u in &paths {
            for w in &paths {
                let terms: Vec<(Scalar, Path)> = rel
                    .iter()
                    .filter_map(|(c, p)| {
                        let up = q.concat(u, p)?;
                        Some((c.clone(), q.concat(&up, w)?))
                    })
                    .collect();
                let v = to_vec(&terms);
                if !v.is_empty() {
                    gens.push(v);
                }
            }
        }
    }
    let ideal = LinSubspace::from_vectors(n, &gens);
    let pivots: std::collections::HashSet<usize> = ideal.pivots().into_iter().collect();
    for v in 0..q.vertices.len() {
        if pivots.contains(&index[&paths[v]]) {
            return Err(Error::invariant(format!("relations put the vertex idempotent e_{} in the ideal", q.vertices[v])));
        }
    }
    let basis: Vec<Path> = paths.iter().filter(|p| !pivots.contains(&index[*p])).cloned().collect();
    let coord_to_basis: HashMap<usize, usize> = basis.iter().enumerate().map(|(b, p)| (index[p], b)).collect();
    let d = basis.len();
    let mut mult = vec![vec![Vec::new(); d]; d];
    for (i, p) in basis.iter().enumerate() {
        for (j, r) in basis.iter().enumerate() {
            if let Some(pr) = q.concat(p, r) {
                let nf = ideal.reduce(&to_vec(&[(Scalar::from_integer(1.into()), pr)]));
                let mut v: SparseVec = nf.into_iter().map(|(c, x)| (coord_to_basis[&c], x)).collect();
                v.sort_by_key(|(k, _)| *k);
                mult[i][j] = v;
            }
        }
    }
    let nv = q.vertices.len();
    let unit: SparseVec = (0..nv).map(|k| (k, Scalar::from_integer(1.into()))).collect();
    let labels: Vec<String> = basis.iter().map(|p| q.path_label(p)).collect();
    q.basis_paths = basis;
    let mut alg = Algebra::new(labels, mult, unit, Some((0..nv).collect()))?;
    alg.set_quiver(q);
    Ok(alg)
}

/// Convenience: relation from `(coefficient, path string)` pairs.
pub fn relation_from_strings(vertices: &[String], arrows: &[Arrow], terms: &[(Scalar, &str)]) -> Result<Relation> {
    let q = QuiverPresentation::new(vertices.to_vec(), arrows.to_vec(), Vec::new(), 1);
    terms.iter().map(|(c, s)| Ok((c.clone(), q.parse_path(s)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn a2_is_upper_triangular() {
        let a = path_algebra(names(&["1", "2"]), vec![Arrow { name: "a".into(), from: 0, to: 1 }], vec![], 2).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.labels(), &["e_1", "e_2", "a"]);
        assert_eq!(a.peirce(2), (0, 1));
        assert_eq!(a.cartan_matrix(), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn loop_with_square_relation() {
        let v = names(&["v"]);
        let arrows = vec![Arrow { name: "x".into(), from: 0, to: 0 }];
        let rel = relation_from_strings(&v, &arrows, &[(int(1), "x*x")]).unwrap();
        let a = path_algebra(v, arrows, vec![rel], 2).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.is_commutative());
        let x = a.index_of("x").unwrap();
        assert!(a.basis_product(x, x).is_empty());
    }

    #[test]
    fn single_vertex_is_ground_field() {
        let a = path_algebra(names(&["v"]), vec![], vec![], 1).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn commutativity_relation_keeps_one_long_path() {
        let v = names(&["1", "2", "3", "4"]);
        let arrows = vec![
            Arrow { name: "a".into(), from: 0, to: 1 },
            Arrow { name: "b".into(), from: 1, to: 3 },
            Arrow { name: "c".into(), from: 0, to: 2 },
            Arrow { name: "d".into(), from: 2, to: 3 },
        ];
        let rel = relation_from_strings(&v, &arrows, &[(int(1), "a*b"), (int(-1), "c*d")]).unwrap();
        let a = path_algebra(v, arrows, vec![rel], 2).unwrap();
        assert_eq!(a.dim(), 9);
    }

    #[test]
    fn bad_input() {
        assert!(path_algebra(vec![], vec![], vec![], 1).is_err());
        let v = names(&["v"]);
        let arrows = vec![Arrow { name: "x".into(), from: 0, to: 0 }];
        let rel = vec![(int(1), Path { source: 0, arrows: vec![] })];
        assert!(path_algebra(v.clone(), arrows.clone(), vec![rel], 2).is_err());
        let bad = vec![(int(1), Path { source: 0, arrows: vec![0] }), (int(1), Path { source: 0, arrows: vec![] })];
        // x = -e forces e into the ideal once x^3 is truncated away
        assert!(path_algebra(v, arrows, vec![bad], 2).is_err());
    }
}
