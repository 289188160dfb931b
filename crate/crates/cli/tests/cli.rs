use std::path::Path;
use std::process::Command;

use gkgrowth_cli::warnings::Warning;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gkgrowth"))
}

fn spec(dir: &Path, name: &str, body: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn warning_catalog_snapshot() {
    let texts: Vec<&str> = Warning::ALL.iter().map(|w| w.text()).collect();
    assert_eq!(
        texts,
        [
            "sampled agreement only",
            "mixed cyclotomic denominator",
            "denominator root location undetermined",
            "quasi-polynomial branches disagree at top degree",
            "no linear recurrence on the sampled range",
            "too few samples for a quasi-polynomial fit",
            "no hilbert series for catalog algebras",
            "catalog entry has intermediate growth",
            "holonomic number unknown for this algebra",
            "holonomic number taken from --h-override",
            "gamma_estimate is a floating-point diagnostic",
            "cumulative sequence decreases",
        ]
    );
}

/// Every number outside `gamma_estimate` must be an integer.
fn assert_exact(v: &Value, key: &str) {
    match v {
        Value::Number(n) => assert!(key == "value" || n.is_i64() || n.is_u64() || !n.to_string().contains(['.', 'e', 'E']), "float at {key}: {n}"),
        Value::Array(xs) => xs.iter().for_each(|x| assert_exact(x, key)),
        Value::Object(m) => {
            for (k, x) in m {
                if k != "gamma_estimate" {
                    assert_exact(x, k);
                }
            }
        }
        _ => {}
    }
}

fn emitted_warnings_in_catalog(report: &Value) {
    let known: Vec<&str> = Warning::ALL.iter().map(|w| w.text()).collect();
    for w in report["warnings"].as_array().unwrap() {
        assert!(known.contains(&w.as_str().unwrap()), "{w}");
    }
}

#[test]
fn weyl_regular_module_report() {
    let dir = tempfile::tempdir().unwrap();
    let p = spec(dir.path(), "w1.json", r#"{"algebra": {"kind": "weyl", "weyl_rank": 1}}"#);
    let (code, out, _) = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["spec_version"], 1);
    assert_eq!(r["command"], "analyze");
    assert_eq!(r["payload"]["growth"]["gk"], 2);
    assert_eq!(r["payload"]["growth"]["multiplicity"], json("[1, 1]"));
    assert_eq!(r["payload"]["holonomic"]["h"], 1);
    assert_eq!(r["payload"]["holonomic"]["defect"], 1);
    assert!(r["input_digest"].as_str().unwrap().starts_with("sha256:"));
    assert_exact(&r, "");
    emitted_warnings_in_catalog(&r);
}

#[test]
fn free_algebra_is_exponential() {
    let dir = tempfile::tempdir().unwrap();
    let p = spec(dir.path(), "f.json", r#"{"algebra": {"kind": "catalog", "catalog_id": "free_algebra_2"}}"#);
    let (code, out, _) = run(&["classify", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["payload"]["growth"]["classification"], "exponential");
    assert_exact(&r, "");
}

#[test]
fn ses_on_line_quotient() {
    let dir = tempfile::tempdir().unwrap();
    let p = spec(
        dir.path(),
        "s.json",
        r#"{"algebra": {"kind": "polynomial", "generators": [{"name": "x"}, {"name": "y"}]}, "ses": {"sub_ideal": ["x"]}}"#,
    );
    let (code, out, _) = run(&["check-ses", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["payload"]["case"], "b");
    assert_eq!(r["payload"]["additivity_ok"], true);
    assert_eq!(r["payload"]["dimension_balance_ok"], true);
    assert_exact(&r, "");
    emitted_warnings_in_catalog(&r);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let inputs = [
        r#"{"algebra": {"kind": "weyl", "weyl_rank": 2}, "module": {"summands": [{"ideal": ["y1", "y2"]}]}}"#,
        r#"{"algebra": {"kind": "polynomial", "weights": [2, 3]}}"#,
        r#"{"algebra": {"kind": "catalog", "catalog_id": "smith_lie"}}"#,
        r#"{"sequence": [1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11, 12, 12], "sequence_kind": "graded"}"#,
    ];
    for (i, body) in inputs.iter().enumerate() {
        let p = spec(dir.path(), &format!("{i}.json"), body);
        for cmd in ["analyze", "classify", "poincare", "hilbert"] {
            let first = run(&[cmd, p.to_str().unwrap()]);
            let second = run(&[cmd, p.to_str().unwrap()]);
            assert_eq!(first, second, "{cmd} on input {i}");
            if first.0 <= 1 {
                let r = json(&first.1);
                assert_exact(&r, "");
                emitted_warnings_in_catalog(&r);
            }
        }
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let smith = spec(dir.path(), "s.json", r#"{"algebra": {"kind": "catalog", "catalog_id": "smith_lie"}}"#);
    let (code, out, _) = run(&["classify", smith.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["status"], "inconclusive");

    let broken = spec(dir.path(), "b.json", r#"{"algebra": {"kind": "weyl", "#);
    let (code, _, err) = run(&["analyze", broken.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(json(&err)["error"]["kind"], "malformed_input");

    let missing = dir.path().join("absent.json");
    assert_eq!(run(&["analyze", missing.to_str().unwrap()]).0, 2);

    let bad_lambda = spec(
        dir.path(),
        "l.json",
        r#"{"algebra": {"kind": "quantum_affine", "lambda": [[1, [2, 3]], [[2, 3], 1]]}}"#,
    );
    let (code, _, err) = run(&["analyze", bad_lambda.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert_eq!(json(&err)["error"]["path"], "algebra.lambda[2][1]");

    let no_ses = spec(dir.path(), "n.json", r#"{"algebra": {"kind": "polynomial", "num_generators": 2}}"#);
    let (code, _, err) = run(&["check-ses", no_ses.to_str().unwrap(), "--format", "text"]);
    assert_eq!(code, 3);
    assert!(err.starts_with("error: schema violation at ses"));

    let w1 = spec(dir.path(), "w.json", r#"{"algebra": {"kind": "weyl", "weyl_rank": 1}}"#);
    assert_eq!(run(&["analyze", w1.to_str().unwrap(), "--max-degree", "10"]).0, 2);
    assert_eq!(run(&["analyze", w1.to_str().unwrap(), "--format", "yaml"]).0, 2);
}

#[test]
fn output_file_and_text_format() {
    let dir = tempfile::tempdir().unwrap();
    let p = spec(dir.path(), "k.json", r#"{"algebra": {"kind": "polynomial", "num_generators": 3}}"#);
    let target = dir.path().join("report.json");
    let (code, out, _) = run(&["analyze", p.to_str().unwrap(), "--output", target.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let r = json(&std::fs::read_to_string(&target).unwrap());
    assert_eq!(r["payload"]["growth"]["gk"], 3);

    let (code, text, _) = run(&["analyze", p.to_str().unwrap(), "--format", "text"]);
    assert_eq!(code, 0);
    assert!(text.contains("gk dimension: 3"));
    assert!(text.contains("warning: sampled agreement only"));
}

#[test]
fn holonomy_override() {
    let dir = tempfile::tempdir().unwrap();
    let p = spec(
        dir.path(),
        "m.json",
        r#"{"algebra": {"kind": "weyl", "weyl_rank": 2}, "module": {"summands": [{"ideal": ["y1", "y2"]}]}}"#,
    );
    let r = json(&run(&["analyze", p.to_str().unwrap()]).1);
    assert_eq!(r["payload"]["holonomic"]["min_holonomic"], true);
    let r = json(&run(&["analyze", p.to_str().unwrap(), "--h-override", "1"]).1);
    assert_eq!(r["payload"]["holonomic"]["defect"], 1);
    assert!(r["warnings"]
        .as_array()
        .unwrap()
        .contains(&Value::from("holonomic number taken from --h-override")));
}

#[test]
fn refilter_and_chain_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p = spec(
        dir.path(),
        "r.json",
        r#"{"algebra": {"kind": "pbw_weighted",
            "generators": [{"name": "a", "degree": [1, 0]}, {"name": "b", "degree": [0, 1]}],
            "relations": [{"lhs": "b*a", "leading": [2, 3], "lower": [{"coeff": 1, "monomial": "b"}]}]},
            "refilter_weights": [1, 1]}"#,
    );
    let (code, out, _) = run(&["refilter", p.to_str().unwrap(), "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["payload"]["layer_dimensions"], json("[1, 3, 6, 10, 15]"));

    let q = spec(
        dir.path(),
        "q.json",
        r#"{"algebra": {"kind": "pbw_weighted",
            "generators": [{"name": "a", "degree": [1, 0]}, {"name": "b", "degree": [0, 1]}],
            "relations": [{"lhs": "b*a", "lower": [{"monomial": "b^2"}]}]},
            "refilter_weights": [1, 1]}"#,
    );
    assert_eq!(run(&["refilter", q.to_str().unwrap()]).0, 3);

    let c = spec(
        dir.path(),
        "c.json",
        r#"{"algebra": {"kind": "polynomial", "num_generators": 1},
            "module": {"summands": [{"ideal": []}, {"ideal": []}]},
            "chain": [[["1"], []], [[], []]]}"#,
    );
    let (code, out, _) = run(&["chain", c.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["payload"]["n"], 2);
    assert_eq!(r["payload"]["e_m"], json("[2, 1]"));
    assert_eq!(r["payload"]["bound_ok"], true);
}

#[test]
fn raw_sequence_modes() {
    let dir = tempfile::tempdir().unwrap();
    let p = spec(
        dir.path(),
        "s.json",
        r#"{"sequence": [1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11, 12, 12], "sequence_kind": "graded"}"#,
    );
    let (code, out, _) = run(&["poincare", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["payload"]["denominator"]["radius_class"], "all_roots_on_unit_circle");
    let (code, out, _) = run(&["classify", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = json(&out);
    assert_eq!(r["payload"]["growth"]["gk"], 2);
    assert_eq!(r["payload"]["growth"]["multiplicity"], json("[1, 2]"));
}
