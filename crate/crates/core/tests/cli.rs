use std::process::{Command, Output};

fn uw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uw")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim().to_string()
}

fn error_name(o: &Output) -> String {
    let v: serde_json::Value = serde_json::from_slice(&o.stderr).expect("error JSON on stderr");
    v["error"].as_str().unwrap().to_string()
}

#[test]
fn jh_prints_two_factors() {
    let o = uw(&["--p", "7", "--f", "1", "jh", r#"{"w":[0],"mu":[[3,1,0,0]]}"#]);
    assert!(o.status.success());
    let v: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.len(), 2);
    assert_ne!(v[0], v[1]);
    let again = uw(&["--p", "7", "--f", "1", "jh", r#"{"w":[0],"mu":[[3,1,0,0]]}"#]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn exit_codes() {
    let bad_json = uw(&["--p", "7", "jh", r#"{"w":[0],"mu":"#]);
    assert_eq!(bad_json.status.code(), Some(3));
    let shallow = uw(&["--p", "7", "jh", r#"{"w":[0],"mu":[[0,1,0,0]]}"#]);
    assert_eq!(shallow.status.code(), Some(2));
    assert_eq!(error_name(&shallow), "DepthTooSmall");
    let degenerate = uw(&["--p", "7", "predict", r#"{"kind":"irr","k":2,"l":2,"s":1}"#]);
    assert_eq!(degenerate.status.code(), Some(2));
    assert_eq!(error_name(&degenerate), "DegenerateParameter");
    let composite = uw(&["--p", "9", "multiplicity", r#"["w"]"#]);
    assert_eq!(composite.status.code(), Some(2));
}

#[test]
fn multiplicity_of_w() {
    let o = uw(&["--f", "1", "multiplicity", r#"["w"]"#]);
    assert_eq!(stdout(&o), r#"{"e":2,"krull_dim":6,"domain":true}"#);
}

#[test]
fn bm_check_worked_pair() {
    let rho = r#"{"kind":"ps","r":4,"s":1}"#;
    let tau = r#"{"exponents":[28,44]}"#;
    let o = uw(&["--p", "7", "--f", "1", "bm-check", rho, tau]);
    assert_eq!(stdout(&o), r#"{"lhs":1,"e":1,"gl_lhs":1,"ok":true}"#);
    let o = uw(&["--p", "7", "--f", "1", "shape", rho, tau]);
    assert_eq!(stdout(&o), r#"["tp"]"#);
}

#[test]
fn bc_of_type_and_weight() {
    let o = uw(&["--p", "7", "bc", r#"{"w":[1],"mu":[[0,4,0,0]]}"#]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["w"], serde_json::json!([1, 1]));
    let o = uw(&["--p", "7", "bc", r#"[[3,1,0,0]]"#]);
    assert!(o.status.success());
}

#[test]
fn check_is_deterministic() {
    let a = uw(&["check", "jh-bc", "--p", "5", "--f", "1", "--exhaustive"]);
    assert!(a.status.success(), "{}", stdout(&a));
    let b = uw(&["check", "jh-bc", "--p", "5", "--f", "1", "--exhaustive"]);
    assert_eq!(a.stdout, b.stdout);
    let unknown = uw(&["check", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
}
