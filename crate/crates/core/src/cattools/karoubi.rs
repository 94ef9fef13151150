//! The Karoubi envelope: objects `(X, e)` with `e` idempotent, morphisms
//! `e' ∘ Hom(X, Y) ∘ e`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::sparse::{self, Accum};
use crate::exactlin::{self, LinSubspace, QMatrix, SparseVec};

use super::idempotents::end_idempotents;
use super::{evaluate, fmt_combination, Monoidal, PresentedCategory};

#[derive(Debug, Clone)]
pub struct Karoubi {
    pub category: PresentedCategory,
    /// `(X, e)` for every object, `e` in the hom coordinates of the base.
    pub objects: Vec<(usize, SparseVec)>,
    /// Hom bases of the envelope as morphisms of the base category.
    pub hom_bases: Vec<Vec<Vec<SparseVec>>>,
}

impl Karoubi {
    /// A morphism of the envelope as a morphism of the base category.
    pub fn to_base(&self, a: usize, b: usize, f: &[(usize, crate::exactlin::Scalar)]) -> SparseVec {
        let mut acc = Accum::new();
        for (k, c) in f {
            acc.add_scaled(&self.hom_bases[a][b][*k], c);
        }
        acc.finish()
    }
}

/// The envelope over an exhaustive set of idempotents up to conjugacy in
/// every End-algebra (dimension at most 4).
pub fn karoubi(c: &PresentedCategory) -> Result<Karoubi> {
    let idems = (0..c.n_objects()).map(|x| end_idempotents(c, x)).collect::<Result<Vec<_>>>()?;
    karoubi_with(c, &idems)
}

/// The full subcategory of the envelope on the supplied idempotents
/// (per object, in hom coordinates).
pub fn karoubi_with(c: &PresentedCategory, idempotents: &[Vec<SparseVec>]) -> Result<Karoubi> {
    if idempotents.len() != c.n_objects() {
        return Err(Error::dims("one idempotent list per object is required"));
    }
    let mut objects = Vec::new();
    let mut names = Vec::new();
    for (x, list) in idempotents.iter().enumerate() {
        for (k, e) in list.iter().enumerate() {
            if e.is_empty() {
                continue;
            }
            if c.compose(x, x, x, e, e) != *e {
                return Err(Error::invalid(format!("supplied endomorphism {k} of {} is not idempotent", c.objects()[x])));
            }
            names.push(if e == c.identity(x) { c.objects()[x].clone() } else { format!("{}[{k}]", c.objects()[x]) });
            objects.push((x, e.clone()));
        }
    }
    let n = objects.len();
    let mut hom_bases = vec![vec![Vec::new(); n]; n];
    let mut spaces = vec![vec![LinSubspace::zero(0); n]; n];
    for a in 0..n {
        for b in 0..n {
            let ((x, e), (y, f)) = (&objects[a], &objects[b]);
            let gens: Vec<SparseVec> =
                (0..c.hom_dim(*x, *y)).map(|i| c.compose(*x, *x, *y, e, &c.compose(*x, *y, *y, &sparse::unit(i), f))).collect();
            let sp = LinSubspace::from_vectors(c.hom_dim(*x, *y), &gens);
            hom_bases[a][b] = sp.basis().to_vec();
            spaces[a][b] = sp;
        }
    }
    let coords = |a: usize, b: usize, v: &SparseVec| -> SparseVec {
        sparse::from_dense(&spaces[a][b].coords(v).expect("morphism lies in the corner"))
    };
    let labels: Vec<Vec<Vec<String>>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let (x, y) = (objects[a].0, objects[b].0);
                    hom_bases[a][b].iter().map(|v| fmt_combination(c.hom_labels(x, y), v)).collect()
                })
                .collect()
        })
        .collect();
    let mut composition = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let (x, y, z) = (objects[a].0, objects[b].0, objects[d].0);
                if hom_bases[a][b].is_empty() || hom_bases[b][d].is_empty() {
                    continue;
                }
                let t: Vec<Vec<SparseVec>> = hom_bases[a][b]
                    .iter()
                    .map(|u| hom_bases[b][d].iter().map(|v| coords(a, d, &c.compose(x, y, z, u, v))).collect())
                    .collect();
                composition.insert((a, b, d), t);
            }
        }
    }
    let identities: Vec<SparseVec> = (0..n).map(|a| coords(a, a, &objects[a].1)).collect();
    let mut cat = PresentedCategory::assemble(names, labels, composition, identities)?;
    cat.set_field_degree(c.field_degree());

    if let Some(m) = c.monoidal() {
        let lookup: BTreeMap<(usize, &SparseVec), usize> = objects.iter().enumerate().map(|(k, (x, e))| ((*x, e), k)).collect();
        let mut tensor_objects = vec![vec![None; n]; n];
        for a in 0..n {
            for b in 0..n {
                let ((x, e), (y, f)) = (&objects[a], &objects[b]);
                let Some(xy) = c.tensor_object(*x, *y) else { continue };
                let ef = c.tensor_morphism((*x, *x), (*y, *y), e, f).expect("defined");
                tensor_objects[a][b] = lookup.get(&(xy, &ef)).copied();
            }
        }
        let mut tensor_morphisms = BTreeMap::new();
        for a in 0..n {
            for a2 in 0..n {
                for b in 0..n {
                    for b2 in 0..n {
                        let (Some(s), Some(s2)) = (tensor_objects[a][b], tensor_objects[a2][b2]) else { continue };
                        if hom_bases[a][a2].is_empty() || hom_bases[b][b2].is_empty() {
                            continue;
                        }
                        let (x, x2, y, y2) = (objects[a].0, objects[a2].0, objects[b].0, objects[b2].0);
                        let t: Vec<Vec<SparseVec>> = hom_bases[a][a2]
                            .iter()
                            .map(|u| {
                                hom_bases[b][b2]
                                    .iter()
                                    .map(|v| coords(s, s2, &c.tensor_morphism((x, x2), (y, y2), u, v).expect("defined")))
                                    .collect()
                            })
                            .collect();
                        tensor_morphisms.insert((a, a2, b, b2), t);
                    }
                }
            }
        }
        let mut symmetry = vec![vec![None; n]; n];
        for a in 0..n {
            for b in 0..n {
                let (Some(ab), Some(ba)) = (tensor_objects[a][b], tensor_objects[b][a]) else { continue };
                let ((x, e), (y, f)) = (&objects[a], &objects[b]);
                let (xy, yx) = (objects[ab].0, objects[ba].0);
                let sym = c.symmetry(*x, *y).expect("defined");
                let ef = c.tensor_morphism((*x, *x), (*y, *y), e, f).expect("defined");
                symmetry[a][b] = Some(coords(ab, ba, &c.compose(xy, xy, yx, &ef, sym)));
            }
        }
        let unit = lookup
            .get(&(m.unit, c.identity(m.unit)))
            .copied()
            .ok_or_else(|| Error::invariant("the unit object is missing from the envelope"))?;
        cat.set_monoidal_unchecked(Some(Monoidal { unit, tensor_objects, tensor_morphisms, symmetry }));
    }
    if let Some(tr) = c.traces() {
        let t = (0..n)
            .map(|a| {
                let x = objects[a].0;
                hom_bases[a][a].iter().map(|v| evaluate(&tr[x], v)).collect()
            })
            .collect();
        cat.set_traces_unchecked(Some(t));
    }
    cat.validate()?;
    Ok(Karoubi { category: cat, objects, hom_bases })
}

/// Mutually inverse `t: (X, e) -> (Y, r)` and `s: (Y, r) -> (X, e)` in the
/// envelope of `c` (so `t = r t e`, `s = e s r`, `t∘s = r`, `s∘t = e`), found
/// by a seeded search over generic elements.
pub fn find_isomorphism(
    c: &PresentedCategory,
    (x, e): (usize, &SparseVec),
    (y, r): (usize, &SparseVec),
) -> Result<Option<(SparseVec, SparseVec)>> {
    let corner = |p: usize, q: usize, left: &SparseVec, right: &SparseVec| -> LinSubspace {
        let gens: Vec<SparseVec> =
            (0..c.hom_dim(p, q)).map(|i| c.compose(p, p, q, right, &c.compose(p, q, q, &sparse::unit(i), left))).collect();
        LinSubspace::from_vectors(c.hom_dim(p, q), &gens)
    };
    let ts = corner(x, y, r, e);
    let ss = corner(y, x, e, r);
    let ends = corner(y, y, r, r);
    if ts.is_zero() || ss.is_zero() {
        return Ok(if e.is_empty() && r.is_empty() { Some((Vec::new(), Vec::new())) } else { None });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b61_726f);
    let random = |rng: &mut ChaCha8Rng, sp: &LinSubspace| -> SparseVec {
        let mut acc = Accum::new();
        for b in sp.basis() {
            acc.add_scaled(b, &crate::exactlin::scalar::int(rng.gen_range(-3..=3)));
        }
        acc.finish()
    };
    for _ in 0..48 {
        let t = random(&mut rng, &ts);
        let s = random(&mut rng, &ss);
        let u = c.compose(y, x, y, &s, &t);
        // v in rEnd(Y)r with u∘v = r
        let cols: Vec<SparseVec> = ends.basis().iter().map(|v| c.compose(y, y, y, v, &u)).collect();
        let m = QMatrix::from_columns(c.hom_dim(y, y), &cols);
        let Some(sol) = exactlin::solve(&m, r) else { continue };
        let mut v = Accum::new();
        for (k, a) in &sol {
            v.add_scaled(&ends.basis()[*k], a);
        }
        let s2 = c.compose(y, y, x, &v.finish(), &s);
        if c.compose(y, x, y, &s2, &t) == *r && c.compose(x, y, x, &t, &s2) == *e {
            return Ok(Some((t, s2)));
        }
    }
    Ok(None)
}

/// Whether every idempotent endomorphism in the envelope (up to conjugacy)
/// has an image object with a retraction inside the envelope.
pub fn is_idempotent_split(k: &Karoubi) -> Result<bool> {
    let kc = &k.category;
    for a in 0..kc.n_objects() {
        for e in end_idempotents(kc, a)? {
            let found = (0..kc.n_objects()).any(|b| matches!(find_isomorphism(kc, (a, &e), (b, kc.identity(b))), Ok(Some(_))));
            if !found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An explicit equivalence `F: karoubi(karoubi(c)) -> karoubi(c)`.
#[derive(Debug, Clone)]
pub struct KaroubiEquivalence {
    /// `F` on objects, with `(t, s)` exhibiting `(X, ē) ≅ F(A)` in the base.
    pub object_map: Vec<(usize, SparseVec, SparseVec)>,
    pub fully_faithful: bool,
    pub essentially_surjective: bool,
}

impl KaroubiEquivalence {
    pub fn is_equivalence(&self) -> bool {
        self.fully_faithful && self.essentially_surjective
    }

    /// Builds and checks the comparison; `None` if some object of the outer
    /// envelope has no isomorphic object in the inner one.
    pub fn search(c: &PresentedCategory, inner: &Karoubi, outer: &Karoubi) -> Result<Option<Self>> {
        // outer objects as (X, ē) in the base
        let base_obj: Vec<(usize, SparseVec)> =
            outer.objects.iter().map(|(a, e)| (inner.objects[*a].0, inner.to_base(*a, *a, e))).collect();
        let mut object_map = Vec::new();
        for (x, e) in &base_obj {
            let mut hit = None;
            for (w, (y, r)) in inner.objects.iter().enumerate() {
                if let Some((t, s)) = find_isomorphism(c, (*x, e), (*y, r))? {
                    hit = Some((w, t, s));
                    break;
                }
            }
            match hit {
                Some(h) => object_map.push(h),
                None => return Ok(None),
            }
        }
        let kc = &inner.category;
        let mut fully_faithful = true;
        for a in 0..outer.objects.len() {
            for b in 0..outer.objects.len() {
                let (fa, _, sa) = &object_map[a];
                let (fb, tb, _) = &object_map[b];
                let (xa, xb) = (base_obj[a].0, base_obj[b].0);
                let (ya, yb) = (inner.objects[*fa].0, inner.objects[*fb].0);
                let ia = outer.objects[a].0;
                let ib = outer.objects[b].0;
                let images: Vec<SparseVec> = outer.hom_bases[a][b]
                    .iter()
                    .map(|h| {
                        let hb = inner.to_base(ia, ib, h);
                        let through = c.compose(ya, xa, xb, sa, &hb);
                        let full = c.compose(ya, xb, yb, &through, tb);
                        let sp = LinSubspace::from_vectors(c.hom_dim(ya, yb), &inner.hom_bases[*fa][*fb]);
                        sp.coords(&full).map(|v| sparse::from_dense(&v)).unwrap_or_default()
                    })
                    .collect();
                let dim = kc.hom_dim(*fa, *fb);
                let rank = exactlin::rank_of_vectors(&images);
                if rank != dim || rank != outer.hom_bases[a][b].len() {
                    fully_faithful = false;
                }
            }
        }
        let mut essentially_surjective = true;
        for (w, (y, r)) in inner.objects.iter().enumerate() {
            if object_map.iter().any(|(v, _, _)| *v == w) {
                continue;
            }
            let mut hit = false;
            for (x, e) in &base_obj {
                if find_isomorphism(c, (*x, e), (*y, r))?.is_some() {
                    hit = true;
                    break;
                }
            }
            essentially_surjective &= hit;
        }
        Ok(Some(KaroubiEquivalence { object_map, fully_faithful, essentially_surjective }))
    }
}
