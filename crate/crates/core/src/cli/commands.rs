use crate::algkit::{check_hom, global_dimension, Algebra, GlobalDimension};
use crate::cattools::{
    check_karoubi_idempotence, check_orbit_karoubi, check_orbit_quotient, fmt_combination, is_idempotent_split, karoubi, orbit,
    LemmaReport, MatrixRealization, PresentedCategory, TensorInvertible,
};
use crate::cyclic::{periodic_cyclic, Certificate, CyclicComputation, CyclicOptions, Frame, HomologyTable, SuperSpace};
use crate::error::{Error, Result};
use crate::exactlin::scalar::fmt_scalar;
use crate::exactlin::{sparse, QMatrix};
use crate::motivekit::{
    categorical_trace, cnc_check, compose, dnc_check, intersection_number, intersection_number_enveloping, numerical_kernel,
    projective_span, realize_homomorphism, semisimplicity_check, CncVerdict, DncVerdict,
};
use crate::schurkit::{partitions, rectangle_criterion, schur_dimension, schur_dimension_young, Partition};

use super::input::Input;
use super::report::{certificate_name, Report, Table, CERTIFIED, UNDECIDED_IN_SPAN};
use super::JobConfig;

fn algebra<'a>(inputs: &'a [Input], command: &str) -> Result<&'a Algebra> {
    match inputs {
        [Input::Algebra(a)] => Ok(a),
        [other] => Err(Error::Parse(format!("{command} expects an algebra input, got a {}", other.kind()))),
        _ => Err(Error::Parse(format!("{command} expects exactly one --input"))),
    }
}

fn category<'a>(inputs: &'a [Input], command: &str) -> Result<(&'a PresentedCategory, Option<&'a MatrixRealization>)> {
    match inputs {
        [Input::Category { category, realization }] => Ok((category, realization.as_ref())),
        [other] => Err(Error::Parse(format!("{command} expects a category_presentation input, got an {}", other.kind()))),
        _ => Err(Error::Parse(format!("{command} expects exactly one --input"))),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn fmt_super(v: SuperSpace) -> String {
    format!("({}|{})", v.even, v.odd)
}

fn options(job: &JobConfig, frame: Frame) -> CyclicOptions {
    CyclicOptions { frame, cap: job.cap }
}

fn lemma(report: &mut Report, l: &LemmaReport) {
    report.verdict(&l.name, if l.holds { "holds" } else { "fails" }, CERTIFIED);
    for d in &l.details {
        report.note(format!("{}: {d}", l.name));
    }
}

pub fn describe(job: &JobConfig, inputs: &[Input], report: &mut Report) -> Result<()> {
    match inputs {
        [Input::Algebra(a)] => {
            let mut t = Table::new("algebra", &["property", "value"]);
            t.row(vec!["dimension".into(), a.dim().to_string()], CERTIFIED);
            t.row(vec!["basis".into(), a.labels().join(" ")], CERTIFIED);
            t.row(
                vec![
                    "idempotent system".into(),
                    a.idempotents().iter().map(|&k| a.labels()[k].clone()).collect::<Vec<_>>().join(" "),
                ],
                CERTIFIED,
            );
            t.row(vec!["commutative".into(), yes_no(a.is_commutative()).into()], CERTIFIED);
            let (gl, cert) = match global_dimension(a, job.n_max)? {
                GlobalDimension::Finite(g) => (g.to_string(), CERTIFIED),
                GlobalDimension::ExceedsBound(b) => (format!("> {b}"), CERTIFIED),
            };
            t.row(vec!["global dimension".into(), gl], cert);
            report.tables.push(t);
            let mut c = Table::new("Cartan matrix", &["vertex", "row"]);
            for (v, row) in a.cartan_matrix().iter().enumerate() {
                let name = a.labels()[a.idempotents()[v]].clone();
                c.row(vec![name, row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")], CERTIFIED);
            }
            report.tables.push(c);
            Ok(())
        }
        [Input::Category { category: c, .. }] => {
            let mut t = Table::new("category", &["property", "value"]);
            t.row(vec!["objects".into(), c.objects().join(" ")], CERTIFIED);
            t.row(vec!["ground field degree".into(), c.field_degree().to_string()], CERTIFIED);
            t.row(vec!["monoidal".into(), yes_no(c.monoidal().is_some()).into()], CERTIFIED);
            t.row(vec!["traces".into(), yes_no(c.traces().is_some()).into()], CERTIFIED);
            report.tables.push(t);
            report.tables.push(hom_dims(c, "hom dimensions"));
            Ok(())
        }
        _ => Err(Error::Parse("describe expects exactly one --input".into())),
    }
}

fn hom_dims(c: &PresentedCategory, title: &str) -> Table {
    let mut t = Table::new(title, &["from", "to", "dim"]);
    for x in 0..c.n_objects() {
        for y in 0..c.n_objects() {
            t.row(vec![c.objects()[x].clone(), c.objects()[y].clone(), c.hom_dim(x, y).to_string()], CERTIFIED);
        }
    }
    t
}

fn homology_table(title: &str, h: &HomologyTable) -> Table {
    let mut t = Table::new(title, &["degree", "dim"]);
    for (n, d) in h.dims.iter().enumerate().take(h.certified_through + 1) {
        t.row(vec![n.to_string(), d.to_string()], CERTIFIED);
    }
    t
}

/// Both frames must give the same table.
fn cross_check(job: &JobConfig, a: &Algebra, main: &HomologyTable, hh: bool) -> Result<()> {
    let other = CyclicComputation::new(a, job.n_max, &options(job, Frame::Unit))?;
    let o = if hh { other.hochschild_homology() } else { other.cyclic_homology() };
    if o.dims != main.dims {
        return Err(Error::Invariant(format!("the two chain models disagree: {:?} vs {:?}", main.dims, o.dims)));
    }
    Ok(())
}

pub fn hh(job: &JobConfig, inputs: &[Input], report: &mut Report) -> Result<()> {
    let a = algebra(inputs, "hh")?;
    let h = CyclicComputation::new(a, job.n_max, &options(job, Frame::Separable))?.hochschild_homology();
    if job.oracle {
        cross_check(job, a, &h, true)?;
        report.verdict("unit-frame cross-check", "agrees", CERTIFIED);
    }
    report.tables.push(homology_table("HH", &h));
    Ok(())
}

pub fn hc(job: &JobConfig, inputs: &[Input], report: &mut Report) -> Result<()> {
    let a = algebra(inputs, "hc")?;
    let h = CyclicComputation::new(a, job.n_max, &options(job, Frame::Separable))?.cyclic_homology();
    if job.oracle {
        cross_check(job, a, &h, false)?;
        report.verdict("unit-frame cross-check", "agrees", CERTIFIED);
    }
    report.tables.push(homology_table("HC", &h));
    Ok(())
}

pub fn hp(job: &JobConfig, inputs: &[Input], report: &mut Report) -> Result<()> {
    let a = algebra(inputs, "hp")?;
    let r = CyclicComputation::new(a, job.n_max, &options(job, Frame::Separable))?.periodic_cyclic()?;
    let space = match (r.certificate, r.space) {
        (Certificate::NotStabilized, _) | (_, None) => {
            return Err(Error::Uncertified(format!(
                "periodic cyclic homology is not reported: missing certificate (no finite global dimension g with n_max >= g + 3, and S did not stabilize below n_max = {})",
                job.n_max
            )))
        }
        (_, Some(v)) => v,
    };
    if job.oracle {
        let other = CyclicComputation::new(a, job.n_max, &options(job, Frame::Unit))?.periodic_cyclic()?;
        if other.space != r.space {
            return Err(Error::Invariant("the two chain models give different periodic cyclic homology".into()));
        }
        report.verdict("unit-frame cross-check", "agrees", CERTIFIED);
    }
    let cert = certificate_name(r.certificate);
    let mut t = Table::new("HP", &["parity", "dim"]);
    t.row(vec!["even".into(), space.even.to_string()], cert);
    t.row(vec!["odd".into(), space.odd.to_string()], cert);
    report.tables.push(t);
    report.verdict("HP", fmt_super(space), cert);
    match r.global_dimension {
        Some(g) => report.verdict("global dimension", g, CERTIFIED),
        None => report.verdict("global dimension", format!("> {}", job.n_max), CERTIFIED),
    }
    if let Some(r0) = r.r0 {
        report.verdict("S is an isomorphism from degree", r0, cert);
    }
    if r.certificate == Certificate::WindowStable {
        report.caveat(format!(
            "window-stable only: no finite global dimension is certified, so stabilization is observed inside n <= {} and not proved beyond it",
            job.n_max - 1
        ));
    }
    Ok(())
}

pub fn sbi(job: &JobConfig, inputs: &[Input], report: &mut Report) -> Result<()> {
    let a = algebra(inputs, "sbi")?;
    let r = CyclicComputation::new(a, job.n_max, &options(job, Frame::Separable))?.sbi_check();
    let mut t = Table::new("SBI sequence", &["spot", "dim", "rank in", "rank out", "exact"]);
    for row in &r.rows {
        t.row(
            vec![
                row.spot.clone(),
                row.dim.to_string(),
                row.rank_in.to_string(),
                row.rank_out.to_string(),
                yes_no(row.exact).into(),
            ],
            CERTIFIED,
        );
    }
    report.tables.push(t);
    report.verdict("exact at every computed spot", yes_no(r.all_exact()), CERTIFIED);
    if !r.all_exact() {
        return Err(Error::Invariant("the SBI sequence is not exact".into()));
    }
    Ok(())
}

fn algebra_pair<'a>(inputs: &'a [Input], command: &str) -> Result<(&'a Algebra, &'a Algebra)> {
    match inputs {
        [Input::Algebra(a)] => Ok((a, a)),
        [Input::Algebra(a), Input::Algebra(b)] => Ok((a, b)),
        _ => Err(Error::Parse(format!("{command} expects one or two algebra inputs"))),
    }
}

pub fn pair(job: &JobConfig, inputs: &[Input], report: &mut Report) -> Result<()> {
    let (a, b) = algebra_pair(inputs, "pair")?;
    let xs = projective_span(a, b)?;
    let ys = projective_span(b, a)?;
    let mut t = Table::new("intersection numbers of projective correspondences", &["x", "y", "<x.y>", "tr(x o y)"]);
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in ys.iter().enumerate() {
            let n = intersection_number(x, y)?;
            let tr = categorical_trace(&compose(x, y)?)?;
            if n != tr {
                return Err(Error::Invariant(format!("<x{i}.y{j}> = {} but the trace is {}", fmt_scalar(&n), fmt_scalar(&tr))));
            }
            if job.oracle && intersection_number_enveloping(x, y)? != n {
                return Err(Error::Invariant(format!("enveloping-algebra route disagrees at x{i}, y{j}")));
            }
            t.row(vec![format!("x{i}"), format!("y{j}"), fmt_scalar(&n), fmt_scalar(&tr)], CERTIFIED);
        }
    }
    report.tables.push(t);
    report.note("x_k runs over the projective bimodules A e_i (x) f_j B, y_k over f_j B (x) e_i A, in row-major (i, j) order");
    report.verdict("pairing equals trace of composite", "yes", CERTIFIED);
    if job.oracle {
        report.verdict("enveloping-algebra cross-check", "agrees", CERTIFIED);
    }
    Ok(())
}

pub fn numquot(_job: &JobConfig, inputs: &[Input], report: &mut Report) -> Result<()> {
    let (a, b) = algebra_pair(inputs, "numquot")?;
    let span = projective_span(a, b)?;
    let nq = numerical_kernel(a, b, &span, None)?;
    let mut t = Table::new("numerical quotient of the projective span", &["quantity", "value"]);
    t.row(vec!["span size".into(), nq.span_size.to_string()], CERTIFIED);
    t.row(vec!["pairing rank".into(), nq.pairing.rank().to_string()], CERTIFIED);
    t.row(vec!["numerical kernel".into(), nq.kernel.dim().to_string()], CERTIFIED);
    t.row(vec!["quotient dimension".into(), nq.quotient_dim.to_string()], CERTIFIED);
    report.tables.push(t);
    Ok(())
}

pub fn semisimple(_job: &JobConfig, inputs: &[Input], report: &mut Report) -> Result<()> {
    let a = algebra(inputs, "semisimple")?;
    let r = semisimplicity_check(a, &projective_span(a, a)?)?;
    let mut t = Table::new("numerical endomorphism algebra", &["quantity", "value"]);
    t.row(vec!["dimension".into(), r.end_dim.to_string()], CERTIFIED);
    t.row(vec!["Jacobson radical".into(), r.radical_dim.to_string()], CERTIFIED);
    report.tables.push(t);
    report.verdict("semisimple", yes_no(r.is_semisimple()), CERTIFIED);
    Ok(())
}

pub fn schur(job: &JobConfig, dims: (usize, usize), max_weight: usize, report: &mut Report) -> Result<()> {
    let v = SuperSpace::new(dims.0, dims.1);
    report.parameter("super dimension", fmt_super(v));
    report.parameter("max weight", max_weight);
    let mut t = Table::new("isotypic dimensions dim c_l(V^n)", &["partition", "dim"]);
    let mut found: Option<Partition> = None;
    for n in 1..=max_weight {
        for lambda in partitions(n) {
            let d = schur_dimension(&lambda, v)?;
            if job.oracle {
                let young = schur_dimension_young(&lambda, v)?;
                if d as u128 != lambda.standard_tableaux() * young as u128 {
                    return Err(Error::Invariant(format!("Young symmetrizer route disagrees at {lambda}")));
                }
            }
            t.row(vec![lambda.to_string(), d.to_string()], CERTIFIED);
            if d == 0 && found.is_none() {
                found = Some(lambda);
            }
        }
        if found.is_some() {
            break;
        }
    }
    report.tables.push(t);
    let Some(lambda) = found else {
        return Err(Error::cap("weight of an annihilating partition", max_weight + 1, max_weight));
    };
    report.verdict("minimal annihilating partition", &lambda, CERTIFIED);
    report.verdict("rectangle containment criterion", rectangle_criterion(v), CERTIFIED);
    if job.oracle {
        report.verdict("Young symmetrizer cross-check", "agrees", CERTIFIED);
    }
    Ok(())
}

/// The corner maps `x -> e x e` that are algebra homomorphisms.
fn corner_maps(a: &Algebra) -> Vec<(String, QMatrix)> {
    let mut out = Vec::new();
    for &e in a.idempotents() {
        let ev = sparse::unit(e);
        let cols: Vec<_> = (0..a.dim()).map(|k| a.mul(&a.mul(&ev, &sparse::unit(k)), &ev)).collect();
        let f = QMatrix::from_columns(a.dim(), &cols);
        if check_hom(a, a, &f).is_ok() {
            out.push((format!("corner {}", a.labels()[e]), f));
        }
    }
    out
}

pub fn cnc(job: &JobConfig, inputs: &[Input], report: &mut Report) -> Result<()> {
    let a = algebra(inputs, "cnc")?;
    let mut names = vec!["identity".to_string()];
    let mut gens = vec![realize_homomorphism(a, a, &QMatrix::identity(a.dim()), job.n_max)?];
    if a.idempotents().len() > 1 {
        for (name, f) in corner_maps(a) {
            gens.push(realize_homomorphism(a, a, &f, job.n_max)?);
            names.push(name);
        }
    }
    let r = cnc_check(a, &gens)?;
    let hp = periodic_cyclic(a, job.n_max)?;
    if hp.certificate == Certificate::NotStabilized {
        return Err(Error::Uncertified(
            "no Kunneth projectors without a stabilized periodic cyclic homology: missing certificate (raise --max-degree)"
                .into(),
        ));
    }
    let cert = certificate_name(hp.certificate);
    report.parameter("generators", names.join(", "));
    report.verdict("HP super dimension", format!("({}|{})", r.even_dim, r.odd_dim), cert);
    report.verdict("products checked", r.checked_products, CERTIFIED);
    match &r.verdict {
        CncVerdict::Witness { plus, minus } => {
            let mut t = Table::new("Kunneth projectors in the generators", &["generator", "pi+", "pi-"]);
            for (k, n) in names.iter().enumerate() {
                t.row(vec![n.clone(), plus[k].clone(), minus[k].clone()], cert);
            }
            report.tables.push(t);
            report.verdict("Kunneth projectors algebraic", "witness", cert);
        }
        CncVerdict::UndecidedInSpan => {
            report.verdict("Kunneth projectors algebraic", "no witness in the span", UNDECIDED_IN_SPAN);
            report.caveat("the generators do not span the projectors; this refutes nothing outside their span");
        }
    }
    if hp.certificate == Certificate::WindowStable {
        report.caveat(format!("periodic cyclic homology is window-stable only (n <= {})", job.n_max - 1));
    }
    Ok(())
}

pub fn dnc(job: &JobConfig, inputs: &[Input], report: &mut Report) -> Result<()> {
    let a = algebra(inputs, "dnc")?;
    let r = dnc_check(a, job.n_max)?;
    let cert = certificate_name(r.hp.certificate);
    let mut t = Table::new("kernels on K_0 (x) Q", &["equivalence", "kernel dim"]);
    t.row(vec!["homological".into(), r.hom_kernel.dim().to_string()], cert);
    t.row(vec!["numerical".into(), r.num_kernel.dim().to_string()], CERTIFIED);
    report.tables.push(t);
    let v = match r.verdict {
        DncVerdict::Equal => "EQUAL",
        DncVerdict::Differ => "DIFFER",
    };
    report.verdict("homological vs numerical", v, cert);
    if let Some(c) = r.caveat {
        report.caveat(c);
    }
    Ok(())
}

pub fn karoubi_cmd(_job: &JobConfig, inputs: &[Input], report: &mut Report) -> Result<()> {
    let (c, _) = category(inputs, "karoubi")?;
    let k = karoubi(c)?;
    let mut t = Table::new("Karoubi envelope objects", &["object", "base", "idempotent"]);
    for (a, (x, e)) in k.objects.iter().enumerate() {
        t.row(
            vec![k.category.objects()[a].clone(), c.objects()[*x].clone(), fmt_combination(c.hom_labels(*x, *x), e)],
            CERTIFIED,
        );
    }
    report.tables.push(t);
    report.tables.push(hom_dims(&k.category, "envelope hom dimensions"));
    report.verdict("idempotents split in the envelope", yes_no(is_idempotent_split(&k)?), CERTIFIED);
    lemma(report, &check_karoubi_idempotence(c)?);
    Ok(())
}

pub fn orbit_cmd(
    _job: &JobConfig,
    inputs: &[Input],
    object: &str,
    inverse: &str,
    bound: usize,
    report: &mut Report,
) -> Result<()> {
    let (c, h) = category(inputs, "orbit")?;
    let find = |name: &str| c.object_index(name).ok_or_else(|| Error::Parse(format!("unknown object {name:?}")));
    let o = TensorInvertible::strict(c, find(object)?, find(inverse)?, bound)?;
    report.parameter("twist", object);
    report.parameter("vanishing bound", bound);
    let orb = orbit(c, &o)?;
    report.tables.push(hom_dims(&orb.category, "orbit category hom dimensions"));
    lemma(report, &check_orbit_karoubi(c, &o)?);
    if let Some(h) = h {
        lemma(report, &check_orbit_quotient(c, &o, h)?);
    }
    Ok(())
}

pub fn job_parameters(job: &JobConfig, report: &mut Report) {
    if !matches!(job.command, super::Command::Schur { .. }) {
        report.parameter("max degree", job.n_max);
        report.parameter("chain cap", job.cap);
    }
    if job.oracle {
        report.parameter("oracle", "on");
    }
}
