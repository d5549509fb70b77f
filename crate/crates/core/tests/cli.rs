use std::path::{Path, PathBuf};
use std::process::Command;

use spacecurve::io::{parse_curve, parse_param, write_curve, write_param};
use spacecurve::Error;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spacecurve"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).expect("valid JSON")
}

#[test]
fn quartic1_with_oracle_exits_zero_and_embeds_everything() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let (code, _, err) = run(&[
        "run",
        data("quartic1.curve").to_str().unwrap(),
        "--epsilon",
        "1/100",
        "--axis",
        "z",
        "--oracle-param",
        data("quartic1_q.param").to_str().unwrap(),
        "--samples",
        "0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let doc = json(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(doc["status"], "ok");
    assert_eq!(doc["frames"][0]["assumptions"]["degree"], 4);
    assert_eq!(doc["lift"]["label"], "p3");
    let p3: Vec<f64> = doc["lift"]["numerator"]["float"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    assert!((p3[3] + 1.067157288).abs() < 1e-6);
    // exact coefficients are strings, floats carry at most 10 significant digits
    assert!(doc["parametrization"]["denominator"]["exact"][4].is_string());
    let s = doc["parametrization"]["z"]["float"][0].to_string();
    assert!(s.trim_start_matches('-').trim_start_matches("0.").len() <= 11, "{s}");
}

#[test]
fn quartic2_auto_falls_back_to_y() {
    let (code, stdout, err) = run(&[
        "run",
        data("quartic2.curve").to_str().unwrap(),
        "--epsilon",
        "1/600",
        "--oracle-param",
        data("quartic2_q.param").to_str().unwrap(),
        "--samples",
        "0",
    ]);
    assert_eq!(code, 0, "{err}");
    let doc = json(&stdout);
    assert_eq!(doc["selected_frame"], "axis y");
    assert_eq!(doc["frames"][0]["plane_source"], "baseline");
    assert!(doc["frames"][0]["outcome"].as_str().unwrap().starts_with("not ε-rational"));
    assert_eq!(doc["lift"]["label"], "p2");
}

#[test]
fn quartic2_forced_z_with_baseline_is_negative() {
    let (code, stdout, _) = run(&["run", data("quartic2.curve").to_str().unwrap(), "--epsilon", "1/600", "--axis", "z", "--samples", "0"]);
    assert_eq!(code, 2);
    let doc = json(&stdout);
    assert_eq!(doc["status"], "not-epsilon-rational");
    assert!(doc["negative"].is_object());
    assert!(doc["frames"][0]["assumptions"].is_object());
    assert!(doc["lift"].is_null());
}

#[test]
fn planar_curve_fails_assumptions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("conic.curve");
    std::fs::write(&path, "vars: x, y, z\nF1: x^2 + y^2 - 1\nF2: z\n").unwrap();
    let (code, stdout, _) = run(&["run", path.to_str().unwrap(), "--epsilon", "0.1", "--axis", "z", "--samples", "0"]);
    assert_eq!(code, 3);
    assert_eq!(json(&stdout)["status"], "assumption-failure");
}

#[test]
fn parse_errors_exit_one_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.curve");
    std::fs::write(&path, "vars: x, y, z\nF1: x*y +* 2\nF2: z\n").unwrap();
    let (code, _, err) = run(&["run", path.to_str().unwrap(), "--epsilon", "0.1"]);
    assert_eq!(code, 1);
    assert!(err.contains("2:"), "{err}");
    let (code, _, _) = run(&["run", data("quartic1.curve").to_str().unwrap(), "--epsilon", "1.5"]);
    assert_eq!(code, 1);
}

#[test]
fn output_is_byte_deterministic() {
    let curve = data("quartic1.curve");
    let oracle = data("quartic1_q.param");
    let args = [
        "run",
        curve.to_str().unwrap(),
        "--epsilon",
        "1/100",
        "--oracle-param",
        oracle.to_str().unwrap(),
        "--samples",
        "150",
        "--seed",
        "9",
    ];
    let (a, first, _) = run(&args);
    let (b, second, _) = run(&args);
    assert_eq!((a, b), (0, 0));
    assert_eq!(first, second);
}

#[test]
fn export_parametrization_and_curve() {
    let dir = tempfile::tempdir().unwrap();
    let param = dir.path().join("p.param");
    let doc_path = dir.path().join("r.json");
    let (code, _, err) = run(&[
        "run",
        data("quartic1.curve").to_str().unwrap(),
        "--epsilon",
        "1/100",
        "--oracle-param",
        data("quartic1_q.param").to_str().unwrap(),
        "--samples",
        "0",
        "--out",
        doc_path.to_str().unwrap(),
        "--write-param",
        param.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let csv = dir.path().join("p.csv");
    let (code, _, err) = run(&["export", "--param", param.to_str().unwrap(), "--n", "500", "--range=-5,5", "--out", csv.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "x,y,z");
    assert_eq!(rows.len(), 501);
    assert!(rows[1..].iter().all(|r| r.split(',').all(|v| v.parse::<f64>().is_ok_and(f64::is_finite))));

    let (code, _, _) = run(&["export", "--param", param.to_str().unwrap(), "--n", "0", "--out", csv.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), "x,y,z\n");

    let (code, _, err) = run(&["export", "--curve", data("quartic1.curve").to_str().unwrap(), "--n", "100", "--out", csv.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 101);
}

#[test]
fn curve_format_round_trips() {
    let src = std::fs::read_to_string(data("quartic1.curve")).unwrap();
    let c = parse_curve(&src).unwrap();
    let again = parse_curve(&write_curve(&c)).unwrap();
    assert_eq!(c.generators(), again.generators());
}

#[test]
fn curve_format_renames_variables_and_continues_lines() {
    let c = parse_curve("# comment\nvars: a, b, c\nF1: a*b\n   - c\nF2: 0.5*c^2 + a\n").unwrap();
    assert_eq!(c.generators()[0].to_string(), "x*y - z");
    assert_eq!(c.generators()[1].to_string(), "1/2*z^2 + x");
}

#[test]
fn param_format_round_trips_and_requires_q() {
    let src = std::fs::read_to_string(data("quartic2_q.param")).unwrap();
    let p = parse_param(&src).unwrap();
    let text = write_param(&[("p1", p.get("p1").unwrap()), ("p3", p.get("p3").unwrap()), ("q", p.get("q").unwrap())]);
    let again = parse_param(&text).unwrap();
    assert_eq!(p.get("q"), again.get("q"));
    assert!(matches!(parse_param("p1: t\n"), Err(Error::Parse { .. })));
    match parse_param("p1: t\nq: t^2 +/ 1\n") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn stop_on_negative_keeps_auto_at_the_first_frame() {
    let (code, stdout, _) = run(&[
        "run",
        data("quartic2.curve").to_str().unwrap(),
        "--epsilon",
        "1/600",
        "--oracle-param",
        data("quartic2_q.param").to_str().unwrap(),
        "--samples",
        "0",
        "--stop-on-negative",
    ]);
    assert_eq!(code, 2);
    let doc = json(&stdout);
    assert_eq!(doc["frames"].as_array().unwrap().len(), 1);
    assert_eq!(doc["config"]["stop_on_negative"], true);
}
