//! Input documents. Every file is a JSON object with a `kind` field; exact
//! rationals are written as `"p/q"` strings (plain integers are accepted too).

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::algkit::{path_algebra, Algebra, Arrow, QuiverPresentation, Relation};
use crate::cattools::{graded_spaces, GradingKind, MatrixRealization, PresentedCategory};
use crate::error::{Error, Result};
use crate::exactlin::scalar::parse_scalar;
use crate::exactlin::{Scalar, SparseVec};

/// A parsed and validated input file.
#[derive(Debug, Clone)]
pub enum Input {
    Algebra(Algebra),
    Category { category: PresentedCategory, realization: Option<MatrixRealization> },
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Algebra(_) => "algebra",
            Input::Category { .. } => "category",
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Number {
    Text(String),
    Int(i64),
}

impl Number {
    fn value(&self) -> Result<Scalar> {
        match self {
            Number::Text(s) => parse_scalar(s),
            Number::Int(n) => Ok(Scalar::from_integer((*n).into())),
        }
    }
}

/// A vector, either dense in basis order or sparse as `label -> coefficient`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Vector {
    Dense(Vec<Number>),
    Sparse(BTreeMap<String, Number>),
}

impl Vector {
    fn resolve(&self, labels: &[String], what: &str) -> Result<SparseVec> {
        let mut out = Vec::new();
        match self {
            Vector::Dense(v) => {
                if v.len() != labels.len() {
                    return Err(Error::Parse(format!("{what} has {} entries, expected {}", v.len(), labels.len())));
                }
                for (k, x) in v.iter().enumerate() {
                    out.push((k, x.value()?));
                }
            }
            Vector::Sparse(m) => {
                for (label, x) in m {
                    let k = position(labels, label, what)?;
                    out.push((k, x.value()?));
                }
            }
        }
        out.retain(|(_, c)| !num_traits::Zero::is_zero(c));
        out.sort_by_key(|(k, _)| *k);
        Ok(out)
    }
}

fn position(labels: &[String], label: &str, what: &str) -> Result<usize> {
    labels.iter().position(|l| l == label).ok_or_else(|| Error::Parse(format!("unknown label {label:?} in {what}")))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowDoc {
    name: String,
    from: String,
    to: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductDoc {
    left: String,
    right: String,
    value: Vector,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GradedObjectDoc {
    name: String,
    degrees: Vec<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomDoc {
    from: String,
    to: String,
    basis: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CompositionDoc {
    from: String,
    via: String,
    to: String,
    first: String,
    then: String,
    value: Vector,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum GradingDoc {
    Integer,
    Super,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum CategoryDoc {
    Graded {
        grading: GradingDoc,
        objects: Vec<GradedObjectDoc>,
    },
    Explicit {
        objects: Vec<String>,
        homs: Vec<HomDoc>,
        identities: BTreeMap<String, Vector>,
        #[serde(default)]
        compositions: Vec<CompositionDoc>,
        #[serde(default)]
        traces: Option<BTreeMap<String, Vector>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Document {
    Quiver {
        vertices: Vec<String>,
        arrows: Vec<ArrowDoc>,
        #[serde(default)]
        relations: Vec<BTreeMap<String, Number>>,
        truncation: usize,
    },
    StructureConstants {
        labels: Vec<String>,
        unit: Vector,
        #[serde(default)]
        products: Vec<ProductDoc>,
        /// Labels of a complete system of orthogonal idempotents.
        #[serde(default)]
        idempotents: Option<Vec<String>>,
    },
    CategoryPresentation(CategoryDoc),
}

pub fn read_input(path: &Path) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_input(&text)
}

pub fn parse_input(text: &str) -> Result<Input> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match doc {
        Document::Quiver { vertices, arrows, relations, truncation } => {
            quiver(vertices, arrows, relations, truncation).map(Input::Algebra)
        }
        Document::StructureConstants { labels, unit, products, idempotents } => {
            structure_constants(labels, unit, products, idempotents).map(Input::Algebra)
        }
        Document::CategoryPresentation(CategoryDoc::Graded { grading, objects }) => {
            let kind = match grading {
                GradingDoc::Integer => GradingKind::Integer,
                GradingDoc::Super => GradingKind::Super,
            };
            let objects: Vec<(String, Vec<i64>)> = objects.into_iter().map(|o| (o.name, o.degrees)).collect();
            check_unique(objects.iter().map(|(n, _)| n), "object")?;
            let (category, realization) = graded_spaces(kind, &objects)?;
            Ok(Input::Category { category, realization: Some(realization) })
        }
        Document::CategoryPresentation(CategoryDoc::Explicit { objects, homs, identities, compositions, traces }) => {
            let category = explicit_category(objects, homs, identities, compositions, traces)?;
            Ok(Input::Category { category, realization: None })
        }
    }
}

fn check_unique<'a>(names: impl Iterator<Item = &'a String>, what: &str) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(Error::Parse(format!("duplicate {what} {n:?}")));
        }
    }
    Ok(())
}

fn quiver(
    vertices: Vec<String>,
    arrows: Vec<ArrowDoc>,
    relations: Vec<BTreeMap<String, Number>>,
    truncation: usize,
) -> Result<Algebra> {
    check_unique(vertices.iter(), "vertex")?;
    check_unique(arrows.iter().map(|a| &a.name), "arrow")?;
    let arrows: Vec<Arrow> = arrows
        .into_iter()
        .map(|a| {
            Ok(Arrow { from: position(&vertices, &a.from, "arrows")?, to: position(&vertices, &a.to, "arrows")?, name: a.name })
        })
        .collect::<Result<_>>()?;
    let q = QuiverPresentation::new(vertices.clone(), arrows.clone(), Vec::new(), truncation);
    let relations: Vec<Relation> = relations
        .iter()
        .map(|r| r.iter().map(|(path, c)| Ok((c.value()?, q.parse_path(path)?))).collect::<Result<Relation>>())
        .collect::<Result<_>>()?;
    path_algebra(vertices, arrows, relations, truncation)
}

fn structure_constants(
    labels: Vec<String>,
    unit: Vector,
    products: Vec<ProductDoc>,
    idempotents: Option<Vec<String>>,
) -> Result<Algebra> {
    check_unique(labels.iter(), "label")?;
    let d = labels.len();
    let mut mult = vec![vec![Vec::new(); d]; d];
    let mut given = vec![vec![false; d]; d];
    for p in &products {
        let (i, j) = (position(&labels, &p.left, "products")?, position(&labels, &p.right, "products")?);
        if given[i][j] {
            return Err(Error::Parse(format!("product {} * {} is given twice", p.left, p.right)));
        }
        given[i][j] = true;
        mult[i][j] = p.value.resolve(&labels, "products")?;
    }
    let unit = unit.resolve(&labels, "unit")?;
    let idempotents = idempotents
        .map(|list| list.iter().map(|l| position(&labels, l, "idempotents")).collect::<Result<Vec<_>>>())
        .transpose()?;
    Algebra::new(labels, mult, unit, idempotents)
}

fn explicit_category(
    objects: Vec<String>,
    homs: Vec<HomDoc>,
    identities: BTreeMap<String, Vector>,
    compositions: Vec<CompositionDoc>,
    traces: Option<BTreeMap<String, Vector>>,
) -> Result<PresentedCategory> {
    check_unique(objects.iter(), "object")?;
    let n = objects.len();
    let obj = |s: &str| position(&objects, s, "category");
    let mut labels: Vec<Vec<Vec<String>>> = vec![vec![Vec::new(); n]; n];
    let mut declared = vec![vec![false; n]; n];
    for h in homs {
        let (x, y) = (obj(&h.from)?, obj(&h.to)?);
        if declared[x][y] {
            return Err(Error::Parse(format!("hom space {} -> {} is given twice", h.from, h.to)));
        }
        check_unique(h.basis.iter(), "morphism label")?;
        declared[x][y] = true;
        labels[x][y] = h.basis;
    }
    let mut ids = vec![Vec::new(); n];
    for (name, v) in &identities {
        let x = obj(name)?;
        ids[x] = v.resolve(&labels[x][x], &format!("identity of {name}"))?;
    }
    if let Some(x) = (0..n).find(|&x| ids[x].is_empty() && !labels[x][x].is_empty()) {
        return Err(Error::Parse(format!("identity of {} is missing", objects[x])));
    }
    let mut tables = BTreeMap::new();
    for c in &compositions {
        let (x, y, z) = (obj(&c.from)?, obj(&c.via)?, obj(&c.to)?);
        let what = format!("composite {} -> {} -> {}", c.from, c.via, c.to);
        let i = position(&labels[x][y], &c.first, &what)?;
        let j = position(&labels[y][z], &c.then, &what)?;
        let value = c.value.resolve(&labels[x][z], &what)?;
        let t: &mut Vec<Vec<SparseVec>> =
            tables.entry((x, y, z)).or_insert_with(|| vec![vec![Vec::new(); labels[y][z].len()]; labels[x][y].len()]);
        t[i][j] = value;
    }
    let category = PresentedCategory::new(objects.clone(), labels.clone(), tables, ids)?;
    match traces {
        None => Ok(category),
        Some(traces) => {
            let mut functionals: Vec<Vec<Scalar>> =
                (0..n).map(|x| vec![Scalar::from_integer(0.into()); labels[x][x].len()]).collect();
            for (name, v) in &traces {
                let x = obj(name)?;
                for (k, c) in v.resolve(&labels[x][x], &format!("trace on {name}"))? {
                    functionals[x][k] = c;
                }
            }
            category.with_traces(functionals)
        }
    }
}
