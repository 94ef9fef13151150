use std::path::PathBuf;

use super::report::{Report, Table, CERTIFIED};
use super::*;
use crate::algkit::{zoo, Algebra};

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn algebra_file(rel: &str) -> Algebra {
    match read_input(&data(rel)).unwrap() {
        Input::Algebra(a) => a,
        other => panic!("{rel} parsed as a {}", other.kind()),
    }
}

#[test]
fn zoo_files_match_the_constructors() {
    let files = [
        ("Q", "zoo/q.json"),
        ("QxQ", "zoo/q_times_q.json"),
        ("QxQxQ", "zoo/q_cubed.json"),
        ("M2(Q)", "zoo/m2.json"),
        ("dual_numbers", "zoo/dual_numbers.json"),
        ("Q[x]/x^3", "zoo/cubic_truncation.json"),
        ("A2", "zoo/a2.json"),
        ("A3", "zoo/a3.json"),
        ("commutative_square", "zoo/commutative_square.json"),
    ];
    for ((name, built), (fname, rel)) in zoo::all().into_iter().zip(files) {
        assert_eq!(name, fname);
        let parsed = algebra_file(rel);
        assert_eq!(parsed.labels(), built.labels(), "{name}");
        assert_eq!(parsed.structure_constants(), built.structure_constants(), "{name}");
        assert_eq!(parsed.idempotents(), built.idempotents(), "{name}");
    }
}

#[test]
fn category_files_parse() {
    for rel in ["categories/graded_lines.json", "categories/super_lines.json"] {
        assert!(matches!(read_input(&data(rel)).unwrap(), Input::Category { realization: Some(_), .. }), "{rel}");
    }
    let Input::Category { category, realization } = read_input(&data("categories/two_by_two.json")).unwrap() else {
        panic!("not a category");
    };
    assert!(realization.is_none());
    assert_eq!(category.hom_dim(0, 0), 4);
    assert!(category.traces().is_some());
    assert_eq!(category.end_algebra(0).unwrap().0.dim(), 4);
}

#[test]
fn dense_and_sparse_vectors_agree() {
    let dense = r#"{"kind":"structure_constants","labels":["e1","e2"],"unit":["1","1"],
        "products":[{"left":"e1","right":"e1","value":["1","0"]},{"left":"e2","right":"e2","value":{"e2":"2/2"}}],
        "idempotents":["e1","e2"]}"#;
    let Input::Algebra(a) = parse_input(dense).unwrap() else { panic!() };
    assert_eq!(a.structure_constants(), zoo::q_times_q().structure_constants());
}

#[test]
fn parse_errors() {
    let cases = [
        "not json",
        r#"{"kind":"cube"}"#,
        r#"{"kind":"quiver","vertices":["v"],"arrows":[{"name":"x","from":"v","to":"w"}],"truncation":2}"#,
        r#"{"kind":"quiver","vertices":["v"],"arrows":[],"relations":[{"y":"1"}],"truncation":2}"#,
        r#"{"kind":"structure_constants","labels":["1"],"unit":["1.5"],"products":[]}"#,
        r#"{"kind":"structure_constants","labels":["1"],"unit":["1/0"],"products":[]}"#,
        r#"{"kind":"structure_constants","labels":["1","1"],"unit":["1","0"],"products":[]}"#,
        r#"{"kind":"structure_constants","labels":["1"],"unit":["1"],"products":[{"left":"1","right":"1","value":["1"],"extra":0}]}"#,
        r#"{"kind":"category_presentation","objects":["X"],"homs":[{"from":"X","to":"X","basis":["i"]}],"identities":{}}"#,
    ];
    for text in cases {
        assert!(matches!(parse_input(text), Err(Error::Parse(_))), "{text}");
    }
}

#[test]
fn invalid_structures_are_invariant_errors() {
    // x * x = 1 + x is associative but the declared unit fails
    let bad_unit = r#"{"kind":"structure_constants","labels":["a","b"],"unit":["0","1"],
        "products":[{"left":"a","right":"a","value":["1","0"]}]}"#;
    let e = parse_input(bad_unit).unwrap_err();
    assert_eq!(exit_code(&e), EXIT_INVARIANT, "{e}");
    let bad_identity = r#"{"kind":"category_presentation","objects":["X"],
        "homs":[{"from":"X","to":"X","basis":["i","n"]}],"identities":{"X":{"n":"1"}},
        "compositions":[{"from":"X","via":"X","to":"X","first":"i","then":"i","value":{"i":"1"}}]}"#;
    assert_eq!(exit_code(&parse_input(bad_identity).unwrap_err()), EXIT_INVARIANT);
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&Error::Parse("x".into())), 1);
    assert_eq!(exit_code(&Error::Invariant("x".into())), 2);
    assert_eq!(exit_code(&Error::DimensionMismatch("x".into())), 2);
    assert_eq!(exit_code(&Error::CapExceeded { what: "x".into(), needed: 2, cap: 1 }), 3);
    assert_eq!(exit_code(&Error::Uncertified("x".into())), 4);
}

#[test]
fn dims_and_cap_resolution() {
    assert_eq!(parse_dims("2,1"), Ok((2, 1)));
    assert_eq!(parse_dims(" 0 , 3 "), Ok((0, 3)));
    assert!(parse_dims("2").is_err() && parse_dims("a,b").is_err());
    assert_eq!(resolve_cap(Some(5), Some("7".into())).unwrap(), 5);
    assert_eq!(resolve_cap(None, Some("7".into())).unwrap(), 7);
    assert_eq!(resolve_cap(None, None).unwrap(), DEFAULT_CAP);
    assert!(matches!(resolve_cap(None, Some("lots".into())), Err(Error::Parse(_))));
}

#[test]
fn job_config_invariants() {
    let job = |n, cap| JobConfig::new(Command::Hh, vec![], n, cap, Format::Table, false);
    assert!(job(0, 10).is_err());
    assert!(job(3, 0).is_err());
    assert!(job(1, 1).is_ok());
}

#[test]
fn table_rendering_aligns_columns() {
    let mut r = Report::new("hh", vec!["in.json".into()]);
    r.parameter("max degree", 3);
    let mut t = Table::new("HH", &["degree", "dim"]);
    t.row(vec!["0".into(), "12".into()], CERTIFIED);
    t.row(vec!["10".into(), "1".into()], CERTIFIED);
    r.tables.push(t);
    r.verdict("claim", "yes", CERTIFIED);
    r.caveat("careful");
    let expected = "command: hh\ninput: in.json\nmax degree: 3\n\nHH\n  degree  dim  certificate\n  0       12   CERTIFIED\n  10      1    CERTIFIED\n\nverdicts\n  claim  yes  CERTIFIED\n\ncaveats\n  - careful\n";
    assert_eq!(r.to_table(), expected);
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(json["tables"][0]["rows"][1][2], "CERTIFIED");
}

#[test]
fn refusals_name_the_missing_certificate() {
    let job = JobConfig::new(Command::Hp, vec![data("zoo/dual_numbers.json")], 4, DEFAULT_CAP, Format::Table, false).unwrap();
    let e = run(&job).unwrap_err();
    assert_eq!(exit_code(&e), EXIT_UNCERTIFIED);
    assert!(e.to_string().contains("missing certificate"), "{e}");
}

#[test]
fn wrong_input_kind_is_a_usage_error() {
    let job = JobConfig::new(Command::Karoubi, vec![data("zoo/a2.json")], 4, DEFAULT_CAP, Format::Table, false).unwrap();
    assert_eq!(exit_code(&run(&job).unwrap_err()), EXIT_PARSE);
    let job =
        JobConfig::new(Command::Hh, vec![data("categories/super_lines.json")], 4, DEFAULT_CAP, Format::Table, false).unwrap();
    assert_eq!(exit_code(&run(&job).unwrap_err()), EXIT_PARSE);
}

#[test]
fn usage_errors_exit_with_parse_status() {
    assert_eq!(execute(["ncmotive", "frobnicate"]).code, EXIT_PARSE);
    assert_eq!(execute(["ncmotive", "schur", "--dims", "1"]).code, EXIT_PARSE);
    let help = execute(["ncmotive", "--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("schur"));
}
