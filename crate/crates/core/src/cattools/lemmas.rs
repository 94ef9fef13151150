//! Executable compatibility checks between the constructions of this module,
//! each run on a concrete presentation and reported with details.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::poly::Poly;
use crate::exactlin::sparse;
use crate::exactlin::{self, LinSubspace, QMatrix, Quotient, SparseVec};

use super::ideal::{composition_leak, n_ideal, HomIdeal};
use super::karoubi::{is_idempotent_split, karoubi, karoubi_with, KaroubiEquivalence};
use super::orbit::{orbit, TensorInvertible};
use super::{extend_coefficients, MatrixRealization, PresentedCategory};

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub name: String,
    pub holds: bool,
    pub details: Vec<String>,
}

impl LemmaReport {
    fn new(name: &str) -> Self {
        LemmaReport { name: name.into(), holds: true, details: Vec::new() }
    }

    fn fail(&mut self, msg: String) {
        self.holds = false;
        self.details.push(msg);
    }
}

/// Coordinates in an arbitrary (not echelon) basis.
fn solve_in(basis: &[SparseVec], ambient: usize, v: &SparseVec) -> Option<SparseVec> {
    if basis.is_empty() {
        return if v.is_empty() { Some(Vec::new()) } else { None };
    }
    exactlin::solve(&QMatrix::from_columns(ambient, basis), v)
}

/// The orbit category of the Karoubi envelope against the envelope of the
/// orbit category over the images `τ(e)`: the comparison map is bijective on
/// every hom space and respects composition.
pub fn check_orbit_karoubi(c: &PresentedCategory, o: &TensorInvertible) -> Result<LemmaReport> {
    let mut rep = LemmaReport::new("orbit vs Karoubi envelope");
    let k = karoubi(c)?;
    let find = |x: usize| {
        k.objects
            .iter()
            .position(|(y, e)| *y == x && e == c.identity(x))
            .ok_or_else(|| Error::invariant("the envelope lacks (X, id)"))
    };
    let ok = TensorInvertible::strict(&k.category, find(o.object)?, find(o.inverse)?, o.bound)?;
    let left = orbit(&k.category, &ok)?;
    let orb = orbit(c, o)?;
    let lists: Vec<Vec<SparseVec>> = (0..c.n_objects())
        .map(|x| k.objects.iter().filter(|(y, _)| *y == x).map(|(_, e)| orb.project(x, x, e)).collect())
        .collect();
    let right = karoubi_with(&orb.category, &lists)?;
    let n = k.objects.len();
    if right.objects.len() != n {
        rep.fail(format!("{} objects on the left, {} on the right", n, right.objects.len()));
        return Ok(rep);
    }
    // image of a left basis vector, in right hom coordinates
    let phi = |a: usize, b: usize, idx: usize| -> Option<SparseVec> {
        let (j, i) = left.components[a][b][idx];
        let bj = left.twists[b][&j];
        let f = k.to_base(a, bj, &sparse::unit(i));
        let (x, y) = (k.objects[a].0, k.objects[b].0);
        if k.objects[bj].0 != orb.twists[y].get(&j).copied()? {
            return None;
        }
        let g = orb.embed(x, y, j, &f)?;
        solve_in(&right.hom_bases[a][b], orb.category.hom_dim(x, y), &g)
    };
    let mut images = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let (dl, dr) = (left.category.hom_dim(a, b), right.category.hom_dim(a, b));
            let im: Option<Vec<SparseVec>> = (0..dl).map(|idx| phi(a, b, idx)).collect();
            let name = format!("({}, {})", k.category.objects()[a], k.category.objects()[b]);
            match im {
                None => rep.fail(format!("comparison undefined on {name}")),
                Some(im) => {
                    let r = exactlin::rank_of_vectors(&im);
                    if dl != dr || r != dl {
                        rep.fail(format!("hom {name}: dims {dl} vs {dr}, comparison rank {r}"));
                    }
                    images[a][b] = im;
                }
            }
        }
    }
    if !rep.holds {
        return Ok(rep);
    }
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                for i in 0..left.category.hom_dim(a, b) {
                    for j in 0..left.category.hom_dim(b, d) {
                        let gf = left.category.basis_composite(a, b, d, i, j);
                        let mut lhs = sparse::Accum::new();
                        for (m, coef) in gf {
                            lhs.add_scaled(&images[a][d][*m], coef);
                        }
                        let rhs = right.category.compose(a, b, d, &images[a][b][i], &images[b][d][j]);
                        if lhs.finish() != rhs {
                            rep.fail(format!("composition differs on objects ({a}, {b}, {d})"));
                            return Ok(rep);
                        }
                    }
                }
            }
        }
    }
    rep.details.push(format!("comparison bijective and multiplicative on {n} objects"));
    Ok(rep)
}

/// Quotienting by the kernel of a realization `H` before or after passing to
/// the orbit category. With `H(Y⊗O^j)` of the same size as `H(Y)`, `H`
/// induces `H̃(Σ f_j) = Σ H(f_j)` on orbit homs; the comparison
/// `⊕ Hom_j / Ker H → ⊕ Hom_j / Ker H̃` must be well defined and surjective.
pub fn check_orbit_quotient(c: &PresentedCategory, o: &TensorInvertible, h: &MatrixRealization) -> Result<LemmaReport> {
    let mut rep = LemmaReport::new("orbit vs quotient by a kernel");
    h.check_functor(c)?;
    let orb = orbit(c, o)?;
    let n = c.n_objects();
    for x in 0..n {
        for y in 0..n {
            let comps = &orb.components[x][y];
            let name = format!("({}, {})", c.objects()[x], c.objects()[y]);
            if comps.iter().any(|(j, _)| h.dims[orb.twists[y][j]] != h.dims[y]) {
                rep.fail(format!("H changes size under the twist on {name}"));
                continue;
            }
            let cells = h.dims[y] * h.dims[x];
            let flat = |m: &QMatrix| -> SparseVec { sparse::from_dense(&m.to_dense().into_iter().flatten().collect::<Vec<_>>()) };
            // H̃ on the orbit basis, columns indexed by the basis
            let cols: Vec<SparseVec> = comps.iter().map(|&(j, i)| flat(h.basis_matrix(x, orb.twists[y][&j], i))).collect();
            let ker_total = exactlin::kernel(&QMatrix::from_columns(cells, &cols));
            // ⊕_j Ker(H on Hom(X, Y⊗O^j))
            let mut pieces = Vec::new();
            for j in comps.iter().map(|(j, _)| *j).collect::<std::collections::BTreeSet<_>>() {
                let yj = orb.twists[y][&j];
                let cols_j: Vec<SparseVec> = (0..c.hom_dim(x, yj)).map(|i| flat(h.basis_matrix(x, yj, i))).collect();
                for v in exactlin::kernel(&QMatrix::from_columns(cells, &cols_j)).basis() {
                    pieces.push(orb.embed(x, y, j, v).expect("component present"));
                }
            }
            let ker_sum = LinSubspace::from_vectors(comps.len(), &pieces);
            if !ker_total.contains_subspace(&ker_sum) {
                rep.fail(format!("comparison not well defined on {name}"));
                continue;
            }
            let full = LinSubspace::full(comps.len());
            let (a, b) = (Quotient::new(&full, &ker_sum), Quotient::new(&full, &ker_total));
            let images: Vec<SparseVec> = a.reps().iter().map(|r| sparse::from_dense(&b.coords(r).expect("inside Hom"))).collect();
            let r = exactlin::rank_of_vectors(&images);
            if r != b.dim() {
                rep.fail(format!("comparison not surjective on {name}: rank {r} < {}", b.dim()));
            } else if a.dim() != b.dim() {
                rep.details.push(format!("{name}: full, not faithful ({} onto {})", a.dim(), b.dim()));
            }
        }
    }
    if rep.holds {
        rep.details.push("comparison well defined and full on every hom space".into());
    }
    Ok(rep)
}

/// Orbit category and change of coefficients commute: the basis of
/// `orbit(extend(c))` in component `(j, (i, k))` matches `((j, i), k)` in
/// `extend(orbit(c))`, and the composition tables agree.
pub fn check_orbit_extension(c: &PresentedCategory, o: &TensorInvertible, p: &Poly) -> Result<LemmaReport> {
    let mut rep = LemmaReport::new("orbit vs change of coefficients");
    let d = p.degree().unwrap_or(0);
    let ext = extend_coefficients(c, p)?;
    let oe = TensorInvertible::strict(&ext, o.object, o.inverse, o.bound)?;
    let left = orbit(&ext, &oe)?;
    let orb = orbit(c, o)?;
    let right = extend_coefficients(&orb.category, p)?;
    let n = c.n_objects();
    let mut maps = vec![vec![Vec::new(); n]; n];
    for x in 0..n {
        for y in 0..n {
            let m: Option<Vec<usize>> =
                left.components[x][y].iter().map(|&(j, ik)| orb.index_of(x, y, j, ik / d).map(|m| m * d + ik % d)).collect();
            let ok = m.as_ref().is_some_and(|m| {
                let mut s = m.clone();
                s.sort_unstable();
                s.dedup();
                s.len() == m.len() && m.len() == right.hom_dim(x, y)
            });
            if !ok {
                rep.fail(format!("no basis bijection on ({}, {})", c.objects()[x], c.objects()[y]));
                return Ok(rep);
            }
            maps[x][y] = m.expect("checked");
        }
    }
    let map = |x: usize, y: usize, v: &SparseVec| -> SparseVec {
        let mut out: SparseVec = v.iter().map(|(k, a)| (maps[x][y][*k], a.clone())).collect();
        out.sort_by_key(|(k, _)| *k);
        out
    };
    for x in 0..n {
        if map(x, x, left.category.identity(x)) != *right.identity(x) {
            rep.fail(format!("identities differ on {}", c.objects()[x]));
        }
        for y in 0..n {
            for z in 0..n {
                for i in 0..left.category.hom_dim(x, y) {
                    for j in 0..left.category.hom_dim(y, z) {
                        let lhs = map(x, z, left.category.basis_composite(x, y, z, i, j));
                        let rhs = right.basis_composite(x, y, z, maps[x][y][i], maps[y][z][j]);
                        if lhs != *rhs {
                            rep.fail(format!("composition differs on ({x}, {y}, {z})"));
                            return Ok(rep);
                        }
                    }
                }
            }
        }
    }
    if rep.holds {
        rep.details.push(format!("explicit isomorphism of presentations over a degree {d} field"));
    }
    Ok(rep)
}

/// `karoubi(karoubi(c)) ≃ karoubi(c)` by an explicit equivalence, and the
/// envelope is idempotent-split.
pub fn check_karoubi_idempotence(c: &PresentedCategory) -> Result<LemmaReport> {
    let mut rep = LemmaReport::new("Karoubi envelope is idempotent");
    let inner = karoubi(c)?;
    let outer = karoubi(&inner.category)?;
    match KaroubiEquivalence::search(c, &inner, &outer)? {
        None => rep.fail("some object of the double envelope has no counterpart".into()),
        Some(eq) => {
            if !eq.fully_faithful {
                rep.fail("comparison is not fully faithful".into());
            }
            if !eq.essentially_surjective {
                rep.fail("comparison is not essentially surjective".into());
            }
        }
    }
    if !is_idempotent_split(&inner)? {
        rep.fail("the envelope has an unsplit idempotent".into());
    }
    if rep.holds {
        rep.details.push(format!(
            "{} objects in the envelope, {} in the double envelope",
            inner.objects.len(),
            outer.objects.len()
        ));
    }
    Ok(rep)
}

/// The two-sided ideal generated by `base` and one extra morphism.
fn generated_ideal(c: &PresentedCategory, base: &HomIdeal, (x, y): (usize, usize), f: &SparseVec) -> HomIdeal {
    let n = c.n_objects();
    let mut ideal = base.clone();
    ideal[x][y] = ideal[x][y].sum(&LinSubspace::from_vectors(c.hom_dim(x, y), [f]));
    while composition_leak(c, &ideal).is_some() {
        let mut next = ideal.clone();
        for a in 0..n {
            for b in 0..n {
                for g in ideal[a][b].basis() {
                    for z in 0..n {
                        let post: Vec<SparseVec> =
                            (0..c.hom_dim(b, z)).map(|j| c.compose(a, b, z, g, &sparse::unit(j))).collect();
                        next[a][z] = next[a][z].sum(&LinSubspace::from_vectors(c.hom_dim(a, z), &post));
                        let pre: Vec<SparseVec> = (0..c.hom_dim(z, a)).map(|j| c.compose(z, a, b, &sparse::unit(j), g)).collect();
                        next[z][b] = next[z][b].sum(&LinSubspace::from_vectors(c.hom_dim(z, b), &pre));
                    }
                }
            }
        }
        ideal = next;
    }
    ideal
}

/// `N` is proper, and every ideal generated by `N` and one more morphism
/// (basis vectors of a complement and their pairwise sums) contains the
/// identity of a nonzero object.
pub fn check_n_ideal_maximal(c: &PresentedCategory) -> Result<LemmaReport> {
    let mut rep = LemmaReport::new("trace ideal is the largest proper ideal");
    let nid = n_ideal(c)?;
    let n = c.n_objects();
    let proper = |i: &HomIdeal| (0..n).all(|x| c.identity(x).is_empty() || !i[x][x].contains(c.identity(x)));
    if !proper(&nid) {
        rep.fail("the trace ideal contains an identity".into());
        return Ok(rep);
    }
    let mut tried = 0usize;
    for x in 0..n {
        for y in 0..n {
            let reps = Quotient::new(&LinSubspace::full(c.hom_dim(x, y)), &nid[x][y]).reps().to_vec();
            let mut candidates = reps.clone();
            for i in 0..reps.len() {
                for j in i + 1..reps.len() {
                    candidates.push(sparse::add(&reps[i], &reps[j]));
                }
            }
            for f in candidates {
                tried += 1;
                if proper(&generated_ideal(c, &nid, (x, y), &f)) {
                    rep.fail(format!(
                        "adding {} to N({}, {}) keeps the ideal proper",
                        super::fmt_combination(c.hom_labels(x, y), &f),
                        c.objects()[x],
                        c.objects()[y]
                    ));
                }
            }
        }
    }
    if rep.holds {
        rep.details.push(format!("{tried} enlargements tried, each contains an identity"));
    }
    Ok(rep)
}
