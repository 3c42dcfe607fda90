use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hopfgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfgen")).args(args).output().expect("run hopfgen")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, actual: &[u8]) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(String::from_utf8_lossy(actual), String::from_utf8_lossy(&expected), "{name}");
}

#[test]
fn commuting_group_likes_give_an_identity() {
    let out = hopfgen(&["identity", "--family", "taft", "--n", "3", "--poly", "X[1]*X[x]-X[x]*X[1]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["identity"], true);
}

#[test]
fn skew_commutator_is_not_an_identity() {
    let out = hopfgen(&["identity", "--family", "taft", "--n", "3", "--poly", "X[y]*X[x]-X[x]*X[y]"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["identity"], false);
    assert_eq!(v["coinvariant"], false);
    golden("identity_taft3_skew.json", &out.stdout);
}

#[test]
fn symmetric_group_lattice_has_index_two() {
    let out = hopfgen(&["ygroup", "--group", "sym:3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["index"], 2);
    golden("ygroup_sym3.json", &out.stdout);

    let named = hopfgen(&["ygroup", "--group", "product:cyclic:2,cyclic:3", "--basis", "named", "--check", "pq"]);
    assert_eq!(named.status.code(), Some(0));
    assert_eq!(json(&named)["index"], 6);
}

#[test]
fn describe_round_trips_through_axioms() {
    for family in ["taft:2", "e:2", "group:dihedral:4"] {
        let out = hopfgen(&["describe", "--family", family]);
        assert_eq!(out.status.code(), Some(0));
        let path = std::env::temp_dir().join(format!("hopfgen-{}-{}.json", std::process::id(), family.replace(':', "-")));
        std::fs::write(&path, &out.stdout).unwrap();
        let axioms = hopfgen(&["axioms", "--hopf", path.to_str().unwrap()]);
        std::fs::remove_file(&path).unwrap();
        assert_eq!(axioms.status.code(), Some(0), "{family}");
        assert_eq!(json(&axioms)["passed"], true);
    }
}

#[test]
fn sweedler_dumps_match_golden_files() {
    golden("describe_taft2.json", &hopfgen(&["describe", "--family", "taft", "--n", "2"]).stdout);
    golden("describe_taft2.txt", &hopfgen(&["describe", "--family", "taft", "--n", "2", "--format", "text"]).stdout);
}

#[test]
fn sweedler_decomposition() {
    let out = hopfgen(&["base", "--family", "taft", "--n", "2", "--check", "nice", "--decompose", "t[xy]*t[y]*t[1]^-1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["decomposition"]["residue"], serde_json::json!([1]));
    assert_eq!(v["decomposition"]["round_trip"], true);
    golden("base_taft2_decompose.json", &out.stdout);
}

#[test]
fn exit_codes() {
    // closed-form minor disagrees for even n
    assert_eq!(hopfgen(&["base", "--family", "taft", "--n", "4", "--check", "jacobian"]).status.code(), Some(1));
    assert_eq!(hopfgen(&["base", "--family", "taft", "--n", "3", "--check", "jacobian"]).status.code(), Some(0));
    assert_eq!(hopfgen(&["axioms", "--family", "taft", "--n", "0"]).status.code(), Some(2));
    assert_eq!(hopfgen(&["identity", "--family", "taft", "--n", "3", "--poly", "X[1]*("]).status.code(), Some(2));
    assert_eq!(hopfgen(&["axioms", "--hopf", "/nonexistent/h.json"]).status.code(), Some(2));
    assert_eq!(hopfgen(&["base", "--family", "taft", "--n", "3", "--decompose", "t[y]^-1"]).status.code(), Some(2));
    let err = hopfgen(&["ygroup", "--group", "sym:5"]);
    assert_eq!(err.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&err.stderr).contains("cap"));
}

#[test]
fn group_cap_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfgen"))
        .args(["ygroup", "--group", "sym:4"])
        .env("HOPFGEN_MAX_GROUP_ORDER", "12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeded_runs_are_reproducible() {
    let run = || hopfgen(&["sigma", "--family", "group", "--group", "cyclic:4", "--coboundary-seed", "5"]);
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["checks"]["lazy/sigma_lattice_equals_y"]["result"], "pass");
}

#[test]
fn selftest_subset() {
    let out = hopfgen(&["selftest", "--only", "4,12", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 2);
    assert_eq!(v["passed"], true);
}
