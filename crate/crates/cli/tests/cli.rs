use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn tamari(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tamari"))
        .args(args)
        .env_remove("TAMARI_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn tamari_cached(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tamari"))
        .args(args)
        .env("TAMARI_CACHE_DIR", dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn lattice_vertex_counts() {
    for (m, n, vertices) in [("1", "4", 14), ("2", "3", 12), ("1", "0", 1)] {
        let o = tamari(&["lattice", "--m", m, "--n", n, "--format", "json"]);
        assert_eq!(code(&o), 0);
        assert_eq!(json(&o)["vertices"].as_array().unwrap().len(), vertices, "m={m} n={n}");
    }
    let dot = tamari(&["lattice", "--m", "1", "--n", "4"]);
    let text = stdout(&dot);
    assert!(text.starts_with("digraph tamari_m1_n4 {"));
    assert_eq!(text.matches("[label=").count(), 14);
}

#[test]
fn interval_tables() {
    let o = tamari(&["intervals", "--m", "1", "--n", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let rows = json(&o)["rows"].as_array().unwrap().clone();
    let un: Vec<&str> = rows.iter().map(|r| r["unlabelled"].as_str().unwrap()).collect();
    let lab: Vec<&str> = rows.iter().map(|r| r["labelled"].as_str().unwrap()).collect();
    assert_eq!(un, ["1", "1", "3", "13", "68"]);
    assert_eq!(lab, ["1", "1", "4", "32", "400"]);
    assert_eq!(rows[0]["poly"], serde_json::json!({"x": "1"}));

    let o = tamari(&["intervals", "--m", "2", "--n", "3", "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,unlabelled,labelled,closed_unlabelled,closed_labelled,poly");
    assert!(lines[2].starts_with("1,1,1,1,1,"));
    assert!(lines[3].starts_with("2,6,9,6,9,"));
    assert!(lines[4].starts_with("3,58,189,58,189,"));
}

#[test]
fn interval_listing() {
    let o = tamari(&["intervals", "--m", "1", "--n", "3", "--list", "--format", "json"]);
    let items = json(&o)["intervals"].as_array().unwrap().clone();
    assert_eq!(items.len(), 13);
    for key in ["lower", "upper", "contacts", "rise", "dist"] {
        assert!(items[0].get(key).is_some(), "{key}");
    }
}

#[test]
fn series_examples() {
    let o = tamari(&["series", "--m", "1", "--order", "3"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["var"], "t");
    assert_eq!(v["order"], 3);
    let a3 = v["coeffs"][3].as_object().unwrap();
    let total: i64 = a3.values().map(|c| c.as_str().unwrap().parse::<i64>().unwrap()).sum();
    assert_eq!(total, 32);

    let o = tamari(&["series", "--m", "2", "--order", "1"]);
    assert_eq!(json(&o)["coeffs"][1], serde_json::json!({"x^2*y": "1"}));

    let o = tamari(&["series", "--z", "--m", "1", "--order", "0"]);
    let v = json(&o);
    assert_eq!(v["var"], "z");
    assert_eq!(v["coeffs"][0], serde_json::json!({"1": "1", "u": "1"}));
}

#[test]
fn series_y_one_is_evaluated() {
    let o = tamari(&["series", "--m", "1", "--order", "2", "--y-one"]);
    let v = json(&o);
    for c in v["coeffs"].as_array().unwrap() {
        for k in c.as_object().unwrap().keys() {
            assert!(!k.contains('y'), "{k}");
        }
    }
}

#[test]
fn verify_checks() {
    let o = tamari(&["verify", "--check", "theorem-main", "--m", "3", "--order", "6"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v[0]["check"], "theorem-main");
    assert_eq!(v[0]["status"], "pass");

    let o = tamari(&["verify", "--check", "lagrange"]);
    assert_eq!(code(&o), 0);

    let o = tamari(&["verify", "--all", "--m", "1", "--order", "4", "--n", "3", "--format", "text"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().all(|l| l.starts_with("[PASS]")));
}

#[test]
fn verify_rejects_bad_names() {
    assert_eq!(code(&tamari(&["verify", "--check", "nope"])), 4);
    assert_eq!(code(&tamari(&["verify", "--check", "m2-display", "--m", "1"])), 4);
}

#[test]
fn bijection_examples() {
    let o = tamari(&["bijection", "--m", "1", "--labelled", "N₁EN₂E"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["parking"], serde_json::json!([1, 2]));

    let o = tamari(&["bijection", "--m", "1", "--parking", "1,1"]);
    assert_eq!(json(&o)["labelled"], "N1N2EE");

    let o = tamari(&["bijection", "--m", "1", "--parking", "3"]);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parking"));

    assert_eq!(code(&tamari(&["bijection", "--m", "1", "--labelled", "N1N1EE"])), 4);
}

#[test]
fn cap_and_usage_exit_codes() {
    assert_eq!(code(&tamari(&["lattice", "--m", "2", "--n", "6", "--cap", "50"])), 2);
    assert_eq!(code(&tamari(&["intervals", "--m", "1", "--n", "6", "--cap", "10"])), 2);
    assert_eq!(code(&tamari(&["lattice", "--m", "0", "--n", "2"])), 4);
    assert_eq!(code(&tamari(&["lattice", "--m", "1", "--n", "2", "--cap", "0"])), 4);
    assert_eq!(code(&tamari(&["series", "--m", "1", "--order", "2", "--format", "dot"])), 4);
    assert_eq!(code(&tamari(&["--help"])), 0);
}

#[test]
fn outputs_are_byte_stable() {
    for args in [
        &["lattice", "--m", "2", "--n", "3"][..],
        &["intervals", "--m", "1", "--n", "3", "--with-q", "--format", "json"][..],
        &["series", "--z", "--m", "2", "--order", "3"][..],
    ] {
        assert_eq!(tamari(args).stdout, tamari(args).stdout, "{args:?}");
    }
}

#[test]
fn cache_hit_equals_miss() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["series", "--m", "2", "--order", "3", "--z"][..],
        &["series", "--m", "1", "--order", "4", "--with-q"][..],
        &["intervals", "--m", "1", "--n", "3", "--format", "csv"][..],
        &["verify", "--check", "trivariate", "--m", "1", "--order", "4"][..],
    ] {
        let plain = tamari(args);
        let miss = tamari_cached(dir.path(), args);
        let hit = tamari_cached(dir.path(), args);
        assert_eq!(plain.stdout, miss.stdout, "{args:?}");
        assert_eq!(miss.stdout, hit.stdout, "{args:?}");
        assert!(hit.stderr.is_empty());
    }
    assert!(fs::read_dir(dir.path()).unwrap().count() >= 5);
}

#[test]
fn corrupt_cache_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["series", "--m", "1", "--order", "3"];
    let fresh = tamari_cached(dir.path(), &args);
    for entry in fs::read_dir(dir.path()).unwrap() {
        fs::write(entry.unwrap().path(), "{ truncated").unwrap();
    }
    let again = tamari_cached(dir.path(), &args);
    assert_eq!(code(&again), 0);
    assert_eq!(fresh.stdout, again.stdout);
    assert!(String::from_utf8_lossy(&again.stderr).contains("warning"));
    // the entry was rewritten
    let third = tamari_cached(dir.path(), &args);
    assert!(third.stderr.is_empty());
}
