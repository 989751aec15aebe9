use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsuper")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn nf_of_rank_one_bracket() {
    let out = run(&["nf", "--m", "1", "--n", "1", "--json", "E[1,2]*F[1,2]"]);
    assert!(out.status.success());
    let v = json(&out);
    let monos: Vec<&str> = v["terms"].as_array().unwrap().iter().map(|t| t["monomial"].as_str().unwrap()).collect();
    assert_eq!(monos.len(), 3);
    assert!(monos.contains(&"F[1,2]*E[1,2]"));
    assert!(monos.contains(&"K[1]*K[2]^-1"));
}

#[test]
fn typical_factor_list() {
    let out = run(&["typical", "--m", "2", "--n", "1", "--weight", "1,0,0", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    let vals: Vec<i64> = v["factors"].as_array().unwrap().iter().map(|f| f["value"].as_i64().unwrap()).collect();
    assert_eq!(vals, [2, 0]);
    assert_eq!(v["typical"], false);
}

#[test]
fn relcheck_passes_at_two_two() {
    let out = run(&["relcheck", "--m", "2", "--n", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn kac_reports_atypical_module() {
    let out = run(&["kac", "--m", "2", "--n", "1", "--weight", "1,0,0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dimension"], 8);
    assert_eq!(v["simple"], false);
    assert_eq!(v["consistent"], true);
}

#[test]
fn kac_respects_max_dim() {
    let out = run(&["kac", "--m", "2", "--n", "1", "--weight", "3,0,0", "--max-dim", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "ModuleTooLarge");
}

#[test]
fn unity_report_with_weight() {
    let out = run(&["unity", "--m", "1", "--n", "1", "--l", "3", "--weight", "1,0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["small_algebra_dimension"], "36");
    assert_eq!(v["regular_fixed_space_dim"], 1);
    assert_eq!(v["kac"]["simple"], true);
}

#[test]
fn unity_rejects_wrong_central_character() {
    let out = run(&["unity", "--m", "1", "--n", "1", "--l", "3", "--weight", "1,0", "--chi-z", "2,1"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "IncompatibleCharacter");
}

#[test]
fn errors_are_structured() {
    let out = run(&["nf", "--m", "2", "--n", "1", "E[1,2"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "Parse");
    let out = run(&["nf", "--m", "2", "--n", "1", "T[2](E[1,2])"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_error_exit_code() {
    assert_eq!(run(&["kac", "--m", "2"]).status.code(), Some(2));
}

#[test]
fn selftest_json_is_deterministic() {
    let a = run(&["selftest", "--only", "9", "--json", "--seed", "5"]);
    let b = run(&["selftest", "--only", "9", "--json", "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
