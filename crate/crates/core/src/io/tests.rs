use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use super::*;
use crate::constructions::{group_algebra, CayleyTable};
use crate::error::Error;
use crate::hopf::check_hopf;
use crate::scalar::Field;

fn emitted(name: &str) -> (tempfile::TempDir, Manifest) {
    let dir = tempfile::tempdir().unwrap();
    let entry = gallery(name).unwrap();
    entry.emit(dir.path()).unwrap();
    (dir, entry.manifest)
}

fn roles(dir: &Path, m: &Manifest) -> BTreeMap<String, PathBuf> {
    m.role_paths(dir)
}

#[test]
fn algebra_file_round_trips() {
    let h = group_algebra(Field::Rational, &CayleyTable::cyclic(2), "Z2");
    let text = to_json(&AlgebraFile::from_algebra(&h));
    let back = from_json::<AlgebraFile>(&text)
        .unwrap()
        .to_algebra(None)
        .unwrap();
    assert_eq!(back, h);
}

#[test]
fn every_gallery_file_round_trips_textually() {
    for name in [
        "adjoint-z2",
        "double-z3",
        "graded-s3-z2",
        "transmute-z2",
        "sweedler-h4",
    ] {
        let entry = gallery(name).unwrap();
        for (file, text) in &entry.files {
            let again = match file.as_str() {
                "graded-input.json" => continue,
                "boundary.json" => to_json(&MapFile::from_map(
                    &from_json::<MapFile>(text).unwrap().to_map(None).unwrap(),
                )),
                "r-matrix.json" => {
                    let t: TensorFile = from_json(text).unwrap();
                    let f: Field = t.field.parse().unwrap();
                    to_json(&TensorFile::from_vector(
                        f,
                        t.dim,
                        &t.to_vector(None).unwrap(),
                    ))
                }
                "action.json" => {
                    let a: ActionFile = from_json(text).unwrap();
                    let f: Field = a.field.parse().unwrap();
                    to_json(&ActionFile::from_action(f, &a.to_action(None).unwrap()))
                }
                "coaction.json" => {
                    let a: ActionFile = from_json(text).unwrap();
                    let f: Field = a.field.parse().unwrap();
                    to_json(&ActionFile::from_coaction(f, &a.to_coaction(None).unwrap()))
                }
                _ => to_json(&AlgebraFile::from_algebra(
                    &from_json::<AlgebraFile>(text)
                        .unwrap()
                        .to_algebra(None)
                        .unwrap(),
                )),
            };
            assert_eq!(&again, text, "{name}/{file}");
        }
    }
}

#[test]
fn undefined_scalar_is_a_parse_error_naming_the_entry() {
    let h = group_algebra(Field::Rational, &CayleyTable::cyclic(2), "Z2");
    let mut file = AlgebraFile::from_algebra(&h);
    file.antipode[1].2 = "1/0".into();
    let err = file.to_algebra(None).unwrap_err();
    match err {
        Error::Parse(m) => assert!(m.contains("antipode[1]"), "{m}"),
        other => panic!("expected a parse error, got {other}"),
    }
}

#[test]
fn malformed_json_reports_line_and_column() {
    let err = from_json::<AlgebraFile>("{\n  \"kind\": }").unwrap_err();
    assert!(err.to_string().contains("line 2"), "{err}");
}

#[test]
fn out_of_range_index_is_rejected() {
    let h = group_algebra(Field::Rational, &CayleyTable::cyclic(2), "Z2");
    let mut file = AlgebraFile::from_algebra(&h);
    file.mul[0].2 = 7;
    let err = file.to_algebra(None).unwrap_err();
    assert!(err.to_string().contains("mul[0][2]"), "{err}");
}

#[test]
fn field_override_reinterprets_scalars() {
    let h = group_algebra(Field::Rational, &CayleyTable::cyclic(3), "Z3");
    let file = AlgebraFile::from_algebra(&h);
    let f7 = Field::prime(7).unwrap();
    let over = file.to_algebra(Some(f7)).unwrap();
    assert_eq!(over.field, f7);
    assert!(check_hopf(&over).passed());
}

#[test]
fn double_z2_entry_has_four_files_and_manifest() {
    let entry = gallery("double-z2").unwrap();
    assert_eq!(entry.files.len(), 4);
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(entry.emit(dir.path()).unwrap().len(), 5);
    let text = std::fs::read_to_string(dir.path().join(MANIFEST)).unwrap();
    assert_eq!(from_json::<Manifest>(&text).unwrap(), entry.manifest);
}

#[test]
fn graded_entry_encodes_the_transposition() {
    let entry = gallery("graded-s3-z2").unwrap();
    let d: MapFile = from_json(&entry.files["boundary.json"]).unwrap();
    // d(δ_(12)) = δ_sign, the second character
    assert_eq!(
        d.entries,
        vec![(0, 0, "1".to_string()), (2, 1, "1".to_string())]
    );
}

#[test]
fn unknown_gallery_name_lists_entries() {
    let err = gallery("double-a5").unwrap_err();
    assert!(err.to_string().contains("sweedler-h4"), "{err}");
}

#[test]
fn double_s3_file_over_f101_parses_and_is_hopf() {
    let entry = gallery("transmute-double-s3").unwrap();
    let file: AlgebraFile = from_json(&entry.files["algebra.json"]).unwrap();
    assert_eq!(file.field, "Fp:101");
    let h = file.to_algebra(None).unwrap();
    assert_eq!(h.dim, 36);
    assert!(check_hopf(&h).passed());
}

#[test]
fn two_group_suite_passes_on_double_z3() {
    let (dir, m) = emitted("double-z3");
    let cert = run_suite("2group", &roles(dir.path(), &m), &SuiteOptions::default()).unwrap();
    assert_eq!(cert.verdict, Verdict::Pass, "{}", cert.to_text());
    assert_eq!(cert.inputs.len(), 4);
    assert!(cert.inputs.values().all(|d| d.sha256.len() == 64));
}

#[test]
fn corrupted_hopf_input_fails_with_witness() {
    let h = group_algebra(Field::Rational, &CayleyTable::cyclic(2), "Z2");
    let mut file = AlgebraFile::from_algebra(&h);
    file.antipode[1].2 = "2".into();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, to_json(&file)).unwrap();
    let paths = BTreeMap::from([("algebra".to_string(), path)]);
    let cert = run_suite("hopf", &paths, &SuiteOptions::default()).unwrap();
    assert_eq!(cert.verdict, Verdict::Fail);
    assert_eq!(cert.verdict.exit_code(), 1);
    assert!(cert.checks.iter().any(|c| !c.passed && c.witness.is_some()));
}

#[test]
fn braided_crossed_module_suite_passes_on_transmuted_z2() {
    let (dir, m) = emitted("transmute-z2");
    let cert = run_suite(
        "braided-cm",
        &roles(dir.path(), &m),
        &SuiteOptions::default(),
    )
    .unwrap();
    assert_eq!(cert.verdict, Verdict::Pass, "{}", cert.to_text());
}

#[test]
fn missing_role_lists_required_inputs() {
    let (dir, m) = emitted("double-z2");
    let mut paths = roles(dir.path(), &m);
    paths.remove("action");
    let err = run_suite("crossed-module", &paths, &SuiteOptions::default()).unwrap_err();
    match err {
        Error::MissingInput {
            missing, required, ..
        } => {
            assert_eq!(missing, "action");
            assert!(required.contains("boundary"));
        }
        other => panic!("expected missing input, got {other}"),
    }
}

#[test]
fn unknown_suite_is_an_error() {
    let err = run_suite("nonsense", &BTreeMap::new(), &SuiteOptions::default()).unwrap_err();
    assert!(matches!(err, Error::Unknown { .. }));
}

#[test]
fn certificate_json_is_reproducible_and_parses_back() {
    let (dir, m) = emitted("adjoint-z2");
    let paths = roles(dir.path(), &m);
    let a = run_suite("adjoint", &paths, &SuiteOptions::default()).unwrap();
    let b = run_suite("adjoint", &paths, &SuiteOptions::default()).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(Certificate::from_json(&a.to_json()).unwrap(), a);
    assert!(a.to_text().ends_with("verdict: pass\n"));
}

#[test]
fn mixed_declared_fields_need_an_override() {
    let (dir, m) = emitted("double-z2");
    let mut paths = roles(dir.path(), &m);
    let other = gallery("double-s3").unwrap();
    let path = dir.path().join("f101-action.json");
    std::fs::write(&path, &other.files["action.json"]).unwrap();
    paths.insert("action".into(), path);
    let err = run_suite("crossed-module", &paths, &SuiteOptions::default()).unwrap_err();
    assert!(matches!(err, Error::FieldMismatch { .. }), "{err}");
}

#[test]
fn built_2group_total_is_hopf() {
    let (dir, m) = emitted("double-z2");
    let files = build("2group", &roles(dir.path(), &m), &BuildOptions::default()).unwrap();
    let total: AlgebraFile = from_json(&files["total.json"]).unwrap();
    assert_eq!(total.dim, 4);
    assert!(check_hopf(&total.to_algebra(None).unwrap()).passed());
    assert_eq!(files.len(), 6);
}

#[test]
fn built_transmutation_matches_gallery_files() {
    let (dir, m) = emitted("transmute-z2");
    let entry = gallery("transmute-z2").unwrap();
    let files = build(
        "transmutation",
        &roles(dir.path(), &m),
        &BuildOptions::default(),
    )
    .unwrap();
    for name in [
        "braided.json",
        "action.json",
        "coaction.json",
        "boundary.json",
    ] {
        assert_eq!(files[name], entry.files[name], "{name}");
    }
}

#[test]
fn validation_rejects_broken_input_unless_disabled() {
    let (dir, m) = emitted("adjoint-s3");
    let mut paths = roles(dir.path(), &m);
    let h = group_algebra(Field::Rational, &CayleyTable::symmetric(3), "S3");
    let bad = MapFile::from_map(&h.antipode);
    let path = dir.path().join("antipode-boundary.json");
    std::fs::write(&path, to_json(&bad)).unwrap();
    paths.insert("boundary".into(), path);
    let err = build("2group", &paths, &BuildOptions::default()).unwrap_err();
    match err {
        Error::Validation { report, .. } => assert!(report.first_failure().is_some()),
        other => panic!("expected a validation error, got {other}"),
    }
    let unchecked = BuildOptions {
        validate: false,
        ..BuildOptions::default()
    };
    assert!(build("2group", &paths, &unchecked).is_ok());
}

#[test]
fn double_from_cayley_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z3.json");
    std::fs::write(
        &path,
        to_json(&CayleyFile::from_table("Z3", &CayleyTable::cyclic(3))),
    )
    .unwrap();
    let paths = BTreeMap::from([("group".to_string(), path)]);
    let files = build("double", &paths, &BuildOptions::default()).unwrap();
    let d: AlgebraFile = from_json(&files["double.json"]).unwrap();
    assert_eq!(d.dim, 9);
    assert!(check_hopf(&d.to_algebra(None).unwrap()).passed());
}

#[test]
fn cotensor_of_adjoint_z2_has_dimension_eight() {
    let (dir, m) = emitted("adjoint-z2");
    let c = cotensor(&roles(dir.path(), &m), &BuildOptions::default()).unwrap();
    assert_eq!(c.dim, 8);
    assert_eq!(c.basis.ambient_dim(), 16);
}
