use std::path::PathBuf;

use super::*;
use crate::error::Error;
use crate::fixtures::{coboundary_twisted_regular, cyclic_shift};
use crate::hopf::groups::small_groups;
use crate::hopf::LinMapHom;
use crate::partial::induce_partial;
use crate::scalar::{Field, Scalar};
use proptest::prelude::*;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn load(stem: &str) -> SpecFile {
    let text = std::fs::read_to_string(fixture_dir().join(format!("{stem}.json"))).unwrap();
    parse_spec(&text).unwrap()
}

/// Set TPA_REGENERATE_FIXTURES=1 to rewrite the files from the library.
#[test]
fn shipped_files_match_the_library() {
    let regenerate = std::env::var_os("TPA_REGENERATE_FIXTURES").is_some();
    for (stem, spec) in fixtures::library() {
        let path = fixture_dir().join(format!("{stem}.json"));
        let text = serialize_spec_string(&spec);
        if regenerate {
            std::fs::create_dir_all(fixture_dir()).unwrap();
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert_eq!(on_disk, text, "{stem} is stale");
        assert_eq!(parse_spec(&on_disk).unwrap(), spec);
    }
}

#[test]
fn c3_file_dims() {
    let spec = load("c3_partial");
    assert_eq!(spec.hopf.as_ref().unwrap().dim(), 3);
    assert_eq!(spec.algebra.as_ref().unwrap().dim(), 2);
}

#[test]
fn malformed_inputs() {
    match parse_spec("{}") {
        Err(Error::Shape { path, message }) => {
            assert_eq!(path, "field");
            assert!(message.contains("missing field descriptor"));
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_spec(r#"{"field": "real"}"#), Err(Error::InvalidField(_))));
    assert!(matches!(parse_spec(r#"{"field": "prime:6"}"#), Err(Error::InvalidField(_))));
    match parse_spec("{\n  \"field\": \"rational\",\n  \"hopf\": [1,\n}") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_spec(r#"{"field": "rational", "colour": 1}"#), Err(Error::Shape { .. })));
}

fn c3_json() -> serde_json::Value {
    serialize_spec(&load("c3_partial"))
}

#[test]
fn shape_errors_name_the_path() {
    let mut v = c3_json();
    // a rank-2 multiplication tensor
    v["hopf"]["mult"] = serde_json::json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]);
    match parse_spec(&v.to_string()) {
        Err(Error::Shape { path, .. }) => assert_eq!(path, "hopf.mult[0][0]"),
        other => panic!("{other:?}"),
    }
    let mut v = c3_json();
    v["action"][1][0][1] = serde_json::json!("1/0");
    match parse_spec(&v.to_string()) {
        Err(Error::Shape { path, message }) => {
            assert_eq!(path, "action[1][0][1]");
            assert!(message.contains("zero denominator"));
        }
        other => panic!("{other:?}"),
    }
    let mut v = c3_json();
    v["field"] = serde_json::json!("prime:5");
    v["action"][1][0][1] = serde_json::json!("1 mod 7");
    assert!(matches!(parse_spec(&v.to_string()), Err(Error::Shape { .. })));
    let mut v = c3_json();
    v.as_object_mut().unwrap().remove("hopf");
    assert!(matches!(parse_spec(&v.to_string()), Err(Error::MissingObject(_))));
}

#[test]
fn verify_c3() {
    let r = run(Command::Verify, &load("c3_partial"), &Options::default()).unwrap();
    assert!(r.passed(), "{}", r.render(Format::Text));
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn separability_on_scalar_twist() {
    let r = run(Command::Separability, &load("scalar_twist_1"), &Options::default()).unwrap();
    assert!(r.passed(), "{}", r.render(Format::Text));
    assert_eq!(r.derived["e_lift"], serde_json::json!(["1/2", "0", "0", "1/2"]));
    assert_eq!(r.derived["can_rank"], serde_json::json!(4));
}

#[test]
fn gauge_needs_a_gauge() {
    assert_eq!(
        run(Command::Gauge, &load("c3_partial"), &Options::default()).unwrap_err(),
        Error::MissingObject("gauge".into())
    );
    let r = run(Command::Gauge, &load("scalar_twist_2_gauge"), &Options::default()).unwrap();
    assert!(r.passed(), "{}", r.render(Format::Text));
    assert_eq!(r.derived["gauged_cocycle"][1][1], serde_json::json!(["18"]));
}

#[test]
fn mathematical_failures_are_report_entries() {
    // the non-group k^{S3}-free case: a nontrivial cocycle has no default cleft maps
    let mut spec = load("scalar_twist_2_gauge");
    spec.integral_t = Some(vec![Field::Rational.one(), Field::Rational.one()]);
    let r = run(Command::Separability, &spec, &Options::default()).unwrap();
    assert_eq!(r.exit_code(), 1);
    assert_eq!(r.errors.len(), 1);
}

#[test]
fn every_command_on_every_fixture() {
    for (stem, spec) in fixtures::library() {
        for c in Command::ALL {
            match run(c, &spec, &Options { parallel: Some(2), timing: false }) {
                Ok(r) => {
                    let again = run(c, &spec, &Options::default()).unwrap();
                    assert_eq!(r.render(Format::Json), again.render(Format::Json), "{stem} {}", c.name());
                }
                Err(e) => assert!(e.is_input_error(), "{stem} {}: {e}", c.name()),
            }
        }
    }
}

#[test]
fn report_covers_applicable_commands() {
    let r = run(Command::Report, &load("c3_enveloping"), &Options::default()).unwrap();
    assert!(r.passed(), "{}", r.render(Format::Text));
    assert_eq!(r.derived["commands"], serde_json::json!(["verify", "build-crossed", "globalize", "morita"]));
    assert_eq!(r.derived["morita.dim_m"], serde_json::json!(6));
}

#[test]
fn timing_is_opt_in() {
    let spec = load("c3_partial");
    let r = run(Command::Verify, &spec, &Options::default()).unwrap();
    assert!(!r.render(Format::Json).contains("wall_time"));
    let r = run(Command::Verify, &spec, &Options { parallel: None, timing: true }).unwrap();
    assert!(r.render(Format::Json).contains("wall_time_seconds"));
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-20i64..20, 1i64..7).prop_map(|(n, d)| Field::Rational.ratio(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn serialization_round_trips(
        group in 0usize..6,
        values in prop::collection::vec(1i64..5, 4),
        extra in prop::collection::vec(scalar_strategy(), 8),
    ) {
        let (_, g) = small_groups()[group].clone();
        let n = g.0.len();
        let global = coboundary_twisted_regular(Field::Rational, &g, &values);
        let mut one = vec![Field::Rational.zero(); n];
        one[0] = Field::Rational.one();
        let (t, _) = induce_partial(&global, &one).unwrap();
        let mut spec = SpecFile::from_partial(&t);
        spec.global = Some(GlobalSpec { algebra: global.algebra().clone(), action: global.action().clone() });
        spec.twist = Some(global.twist().clone());
        spec.idempotent = Some(one);
        let images: Vec<Vec<Scalar>> = (0..n).map(|i| vec![extra[i % extra.len()].clone()]).collect();
        spec.gauge = Some(LinMapHom::from_images(Field::Rational, 1, &images));
        spec.center_c = Some(vec![extra[0].clone()]);
        let text = serialize_spec_string(&spec);
        let back = parse_spec(&text).unwrap();
        prop_assert_eq!(&back, &spec);
        prop_assert_eq!(serialize_spec_string(&back), text);
    }

    #[test]
    fn prime_field_round_trips(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), n in 2usize..5) {
        let f = Field::prime(p).unwrap();
        let spec = SpecFile::from_partial(cyclic_shift(f, n).as_partial());
        let text = serialize_spec_string(&spec);
        prop_assert_eq!(parse_spec(&text).unwrap(), spec);
    }
}
