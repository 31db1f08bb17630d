use std::path::Path;
use std::process::{Command, Output};

use ffc_cli::catalog::{CatalogEntry, CurveCatalog, ModelSpec};
use proptest::prelude::*;

fn ffc(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ffc"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("FFC_THREADS", t),
        None => cmd.env_remove("FFC_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn verify_single_curves() {
    let o = ffc(&["verify", "--curve", "i", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["records"][0]["genus"], 1);
    assert_eq!(v["records"][0]["class_number"], 1);
    assert_eq!(v["status"], "pass");

    let o = ffc(&["verify", "--curve", "viii", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["records"][0]["genus"], 4);
    assert_eq!(
        v["records"][0]["census"],
        serde_json::json!([0, 0, 0, 1, 3])
    );
    assert_eq!(v["table64"]["survivors"], serde_json::json!(["2:1011"]));
}

#[test]
fn tampered_genus_is_a_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let mut catalog = CurveCatalog::builtin();
    catalog.curves.retain(|c| c.id == "ii");
    catalog.curves[0].expected_genus = 7;
    let path = write(dir.path(), "cat.toml", &catalog.to_toml());
    let o = ffc(&["verify", "--catalog", &path, "--format", "text"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("genus 2 but expected 7"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.toml", "[[curve]]\nid = 3\n");
    assert_eq!(
        ffc(&["verify", "--catalog", &bad], None).status.code(),
        Some(2)
    );
    assert_eq!(
        ffc(&["verify", "--curve", "ix"], None).status.code(),
        Some(2)
    );
    assert_eq!(ffc(&["verify", "--bogus"], None).status.code(), Some(2));
    assert_eq!(ffc(&["selftest"], Some("zero")).status.code(), Some(2));
    let out = dir.path().join("missing").join("t.csv");
    let o = ffc(&["table64", "--out", out.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    let even = write(
        dir.path(),
        "even.toml",
        "q = 2\n[model]\nkind = \"artin-schreier\"\nnumerator = \"x^4+x\"\n",
    );
    assert_eq!(ffc(&["zeta", &even], None).status.code(), Some(2));
}

#[test]
fn table64_outputs() {
    let o = ffc(&["table64"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 65);
    assert_eq!(
        lines[0],
        "family,mask,quadric,paper_witness,paper_degree,witness_on_curve,computed_min_degree,computed_witness,status"
    );
    assert!(lines[1..].iter().all(|l| l.ends_with(",pass")));
    let survivor = lines.iter().find(|l| l.starts_with("2,1011,")).unwrap();
    assert!(survivor.contains(",,,,4,"), "{survivor}");

    let o = ffc(&["table64", "--dmax", "1", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["survivor_undetermined"], true);
    let rational_pass = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["paper_degree"] == 1)
        .all(|r| r["status"] == "pass");
    assert!(rational_pass);
}

#[test]
fn zeta_command() {
    let dir = tempfile::tempdir().unwrap();
    let i = write(
        dir.path(),
        "i.toml",
        "q = 2\n[model]\nkind = \"artin-schreier\"\nnumerator = \"x^3+x+1\"\n",
    );
    let o = ffc(&["zeta", &i], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("L: [1 -2 2]") && text.contains("h: 1"),
        "{text}"
    );

    let line = write(
        dir.path(),
        "line.toml",
        "q = 2\n[model]\nkind = \"projective-line\"\n",
    );
    let o = ffc(&["zeta", &line, "--counts", "3"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("L: [1]\nh: 1"));

    let singular = write(
        dir.path(),
        "sing.toml",
        "q = 2\n[model]\nkind = \"plane-quartic\"\nequation = \"x^4+y^4+z^4\"\n",
    );
    let o = ffc(&["zeta", &singular], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("smoothness probe failed"));

    let o = ffc(&["zeta", &i, "--counts", "0"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn places_and_selftest() {
    let o = ffc(&["places", "--curve", "viii", "--format", "csv"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "id,degree,places,ramified,split,inert\nviii,1,0,,,\nviii,2,0,,,\nviii,3,0,,,\nviii,4,1,,,\nviii,5,3,,,\n"
    );
    assert_eq!(ffc(&["selftest"], None).status.code(), Some(0));
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    for args in [
        &["verify", "--format", "json"][..],
        &["verify", "--format", "csv"][..],
        &["table64"][..],
        &["table64", "--format", "json"][..],
        &["places", "--format", "text"][..],
    ] {
        let serial = ffc(args, Some("1"));
        let parallel = ffc(args, Some("4"));
        let default = ffc(args, None);
        assert_eq!(serial.stdout, parallel.stdout, "{args:?}");
        assert_eq!(serial.stdout, default.stdout, "{args:?}");
    }
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = ffc(
        &[
            "verify",
            "--curve",
            "vi",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        stdout(&ffc(&["verify", "--curve", "vi", "--format", "json"], None))
    );
}

fn poly_text() -> impl Strategy<Value = String> {
    prop::collection::vec((0u32..2, 0u32..6), 1..5).prop_map(|terms| {
        terms
            .iter()
            .map(|(c, e)| format!("{}x^{e}", c + 1))
            .collect::<Vec<_>>()
            .join("+")
    })
}

fn entry() -> impl Strategy<Value = CatalogEntry> {
    let model = prop_oneof![
        (poly_text(), poly_text()).prop_map(|(n, d)| ModelSpec::ArtinSchreier {
            numerator: n,
            denominator: d
        }),
        (poly_text(), poly_text()).prop_map(|(n, d)| ModelSpec::Kummer {
            numerator: n,
            denominator: d
        }),
        poly_text().prop_map(|e| ModelSpec::PlaneQuartic { equation: e }),
        (poly_text(), poly_text()).prop_map(|(c, q)| ModelSpec::SpaceCurve {
            cubic: c,
            quadric: q
        }),
        Just(ModelSpec::ProjectiveLine),
    ];
    (
        "[a-z]{1,6}",
        prop::sample::select(vec![2u64, 3, 4, 8, 9]),
        0u32..6,
        1u64..3,
        "[ -~]{0,20}",
        prop::option::of(prop::collection::vec(0u64..9, 0..6)),
        model,
    )
        .prop_map(|(id, q, g, h, display, census, model)| CatalogEntry {
            id,
            q,
            expected_genus: g,
            expected_class_number: h,
            display,
            expected_census: census,
            model,
        })
}

proptest! {
    #[test]
    fn catalog_round_trips(entries in prop::collection::vec(entry(), 0..5)) {
        let mut seen = std::collections::BTreeSet::new();
        let curves: Vec<_> = entries.into_iter().filter(|e| seen.insert(e.id.clone())).collect();
        let catalog = CurveCatalog { curves };
        prop_assert_eq!(CurveCatalog::parse(&catalog.to_toml()).unwrap(), catalog);
    }
}

#[test]
fn transport_claims_are_reported() {
    let o = ffc(&["verify", "--curve", "viii", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let t = v["transport"].as_array().unwrap();
    let agrees: Vec<bool> = t.iter().map(|c| c["agrees"].as_bool().unwrap()).collect();
    assert_eq!(agrees, [true, false, true]);
    assert_eq!(t[1]["computed"], "(x^4+x^3+1)");

    let o = ffc(&["verify", "--curve", "i", "--format", "json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.get("transport").is_none());
}
