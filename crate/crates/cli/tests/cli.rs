use std::process::{Command, Output};

fn qweyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qweyl")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn descriptor(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn normalize_and_commutators() {
    let o = qweyl(&["normalize", "--n", "1", "d1*x1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 + t*x1*d1");
    let o = qweyl(&["qcomm", "--n", "2", "--l", "3", "d2", "x2"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn parse_errors_exit_two_with_position() {
    let o = qweyl(&["normalize", "--n", "1", "d1 +* x1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 5"));
    assert_eq!(qweyl(&["normalize", "--n", "1", "x2"]).status.code(), Some(2));
    assert_eq!(qweyl(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn azumaya_boundary() {
    let o = qweyl(&["azumaya", "--l", "2", "--a", "1", "--b", "1/4", "--burnside"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("false"));
    assert!(out.contains("3 of 4 (agrees)"));
    let o = qweyl(&["azumaya", "--l", "2", "--a", "1", "--b", "1"]);
    assert_eq!(stdout(&o).trim(), "true");
}

#[test]
fn center_and_poisson() {
    let o = qweyl(&["center-check", "--l", "3", "x1^3*d1^3 + 2"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("2 + s1*r1"));
    assert_eq!(qweyl(&["center-check", "--l", "3", "x1*d1"]).status.code(), Some(1));
    let o = qweyl(&["poisson", "--l", "2", "--n", "1", "r1", "s1"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("1 - 4*s1*r1"));
    assert_eq!(qweyl(&["poisson", "--l", "3", "--n", "1", "x1", "r1"]).status.code(), Some(1));
}

#[test]
fn rep_json() {
    let v = json(&qweyl(&["rep", "--l", "2", "--a", "1", "--b", "1"]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["relations_hold"], true);
    let v = json(&qweyl(&["rep", "--l", "3", "--a", "2", "--b", "1", "--numeric"]));
    assert_eq!(v["relations_hold"], true);
    assert_eq!(qweyl(&["rep", "--l", "3", "--a", "2", "--b", "1"]).status.code(), Some(1));
}

#[test]
fn lift_validate_hat() {
    let dir = tempfile::tempdir().unwrap();
    let o = qweyl(&["lift", "--kind", "phi", "--poly", "x1"]);
    assert_eq!(o.status.code(), Some(0));
    let file = descriptor(&dir, "phi.json", &stdout(&o));
    let v = json(&qweyl(&["validate", &file]));
    assert_eq!(v["valid"], true);

    let o = qweyl(&["hat", &file, "--primes", "13,17,19,23,29,31"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "Converged");
    assert_eq!(v["images"]["r1"], "r1 + s1");
    assert_eq!(v["images"]["s1"], "s1");
    // identical input, identical bytes
    assert_eq!(o.stdout, qweyl(&["hat", &file, "--primes", "13,17,19,23,29,31"]).stdout);

    let o = qweyl(&["hat", &file, "--primes", "3,5,7", "--poly", "r1^2"]);
    assert_eq!(json(&o)["poly"], "r1^2");

    let bad = descriptor(&dir, "bad.json", r#"{"n":1,"param":"t","images_x":["x1"],"images_d":["d1 + x1"]}"#);
    let o = qweyl(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["violations"][0]["residual"], "(1 - t)*x1^2");
    assert_eq!(qweyl(&["hat", &file, "--primes", "4,5"]).status.code(), Some(2));
}

#[test]
fn diverging_and_degree_guard() {
    let dir = tempfile::tempdir().unwrap();
    let file = descriptor(&dir, "two.json", r#"{"n":1,"param":"t","images_x":["x1"],"images_d":["d1 + 2*f"]}"#);
    let o = qweyl(&["hat", &file, "--primes", "3,5,7"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["reports"][0]["verdict"], "Diverged");

    let phi = descriptor(&dir, "phi.json", r#"{"n":1,"param":"t","images_x":["x1"],"images_d":["d1 + x1*f"]}"#);
    let o = Command::new(env!("CARGO_BIN_EXE_qweyl"))
        .args(["hat", &phi, "--primes", "3,5,7"])
        .env("QWEYL_MAX_DEGREE", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["reports"][0]["verdict"], "CentralityFailed");
}

#[test]
fn transport_converges() {
    let o = qweyl(&["transport", "--n", "1", "r1*s1", "s1", "--primes", "11,13,17,19,23"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["limit"], "s1");
    assert_eq!(v["matches_expected"], true);
}
