use std::process::{Command, Output};

use serde_json::Value;

fn hlad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn cherednik_prints_a_module() {
    let out = hlad(&["cherednik", "--multisegment", "[1,1],[0,0]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["n"], 2);
}

#[test]
fn char_verify_exit_codes() {
    assert_eq!(hlad(&["char", "verify", "--multisegment", "[1,2],[0,1]"]).status.code(), Some(0));
    let out = hlad(&["char", "verify", "--multisegment", "[1,1],[0,0]"]);
    let v = stdout_json(&out);
    assert_eq!(v["equal"], true);
    assert_eq!(v["literal_rule_equal"], false);
}

#[test]
fn input_errors_exit_with_2() {
    assert_eq!(hlad(&["cherednik", "--multisegment", "[1,2"]).status.code(), Some(2));
    assert_eq!(hlad(&["cherednik", "--multisegment", "[0,1],[0,1]"]).status.code(), Some(2));
    assert_eq!(hlad(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hlad(&["panel", "--bogus"]).status.code(), Some(2));
}

#[test]
fn module_files_round_trip_through_verify_and_form() {
    let dir = std::env::temp_dir().join(format!("hlad-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("speh.json");
    let out = hlad(&["cherednik", "--multisegment", "[1,2],[0,1]"]);
    std::fs::write(&path, &out.stdout).unwrap();
    let path = path.to_str().unwrap();

    let verify = hlad(&["verify", "--module", path]);
    assert_eq!(verify.status.code(), Some(0));
    assert_eq!(stdout_json(&verify)["a_semisimple"], true);

    let form = stdout_json(&hlad(&["form", "--module", path]));
    assert_eq!(form["dim_space"], 1);
    assert_eq!(form["unitary"], true);

    // break the braid/cross relations by scaling a t-matrix
    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    v["t"][0][0][0] = Value::String("5".into());
    std::fs::write(dir.join("broken.json"), v.to_string()).unwrap();
    let broken = hlad(&["verify", "--module", dir.join("broken.json").to_str().unwrap()]);
    assert_eq!(broken.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn degenerate_standard_form() {
    let v = stdout_json(&hlad(&["form", "--standard", "[1,1],[0,0]"]));
    assert_eq!(v["dim_space"], 1);
    assert_eq!(v["signature"]["zero"], 1);
    assert_eq!(v["unitary"], false);
}

#[test]
fn nilpair_and_functor_commands() {
    let out = hlad(&["nilpair", "--skew", "0:2,0:2", "--a", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["borel_count"], 2);
    assert_eq!(v["centralizer_dim"], 3);

    let out = hlad(&["as", "functor", "--n", "3", "--mu", "1,1,1", "--ell", "3", "--lambda", "2,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["dim"], 1);

    let out = hlad(&["as", "verify", "--multisegment", "[1,1],[0,0],[-1,-1]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["isomorphic"], true);
}

#[test]
fn capacity_override_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_hlad"))
        .args(["as", "verify", "--multisegment", "[2,3],[1,2],[0,0]"])
        .env("HLAD_CAPACITY", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn star_identity_from_the_command_line() {
    let out = hlad(&["verify", "--star", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["failed"], Value::Array(vec![]));
}
