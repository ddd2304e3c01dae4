use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use regsolve::automata::{is_weak, parse_automaton};

fn regsolve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regsolve")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = regsolve(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data").join(name)
}

fn generated(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, stdout(args)).unwrap();
    path
}

fn winners(text: &str) -> Vec<String> {
    text.lines().filter(|l| l.starts_with("eve:") || l.starts_with("adam:")).map(str::to_string).collect()
}

#[test]
fn fig0_is_won_by_eve_through_registers() {
    let dir = tempfile::tempdir().unwrap();
    let fig0 = generated(dir.path(), "fig0.gm", &["gen", "fig0"]);
    let out = stdout(&["solve", fig0.to_str().unwrap(), "--algo", "register"]);
    assert!(out.lines().skip(3).all(|l| l.split(' ').nth(1) == Some("eve")), "{out}");
    assert!(out.contains("adam: \n"));
}

#[test]
fn h3_index() {
    let dir = tempfile::tempdir().unwrap();
    let h3 = generated(dir.path(), "h3.gm", &["gen", "h", "--n", "3"]);
    let out = stdout(&["index", h3.to_str().unwrap()]);
    let global: usize = out.lines().next().unwrap().strip_prefix("global ").unwrap().parse().unwrap();
    assert!((3..=4).contains(&global));
}

#[test]
fn register_and_zielonka_agree() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..8 {
        let n = (4 + seed).to_string();
        let s = seed.to_string();
        let mut args = vec!["gen", "random", "--n", &n, "--seed", &s, "--d", "4"];
        if seed % 2 == 1 {
            args.push("--edges");
        }
        let g = generated(dir.path(), &format!("r{seed}.gm"), &args);
        let g = g.to_str().unwrap();
        let z = stdout(&["solve", g]);
        assert_eq!(winners(&z), winners(&stdout(&["solve", g, "--algo", "register"])));
        assert_eq!(winners(&z), winners(&stdout(&["solve", g, "--algo", "spm"])));
    }
}

#[test]
fn json_matches_text() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "g.gm", &["gen", "random", "--n", "9", "--seed", "3"]);
    let g = g.to_str().unwrap();
    let text = stdout(&["solve", g]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&["solve", g, "--json"])).unwrap();
    for (line, v) in text.lines().skip(3).zip(json["vertices"].as_array().unwrap()) {
        let fields: Vec<&str> = line.split(' ').collect();
        assert_eq!(fields[0], v["vertex"].to_string());
        assert_eq!(fields[1], v["winner"].as_str().unwrap());
        assert_eq!(fields[2], v["strategy"].as_u64().map_or("-".to_string(), |s| s.to_string()));
    }
    let index: serde_json::Value = serde_json::from_str(&stdout(&["index", g, "--json"])).unwrap();
    let text_index = stdout(&["index", g]);
    assert_eq!(text_index.lines().next().unwrap(), format!("global {}", index["global"]));
}

#[test]
fn automata_commands() {
    let inf_b = fixture("inf_b.aut");
    let inf_b = inf_b.to_str().unwrap();
    assert_eq!(stdout(&["accepts", inf_b, "--lasso", ":ab"]), "true\n");
    assert_eq!(stdout(&["accepts", inf_b, "--lasso", "b:a"]), "false\n");
    let ak = stdout(&["translate", inf_b, "--k", "1"]);
    assert!(ak.starts_with("# k 1\n"));
    parse_automaton(&ak).unwrap();
    let weak = parse_automaton(&stdout(&["translate", inf_b, "--weak", "--direct"])).unwrap();
    assert!(is_weak(&weak));

    let dir = tempfile::tempdir().unwrap();
    let pd = dir.path().join("p2.aut");
    let mut text = String::from("alphabet: E0 E1 E2 A0 A1 A2;\nmode: tree;\n");
    for i in 0..3 {
        text += &format!("state {i} {i};\n");
    }
    text += "initial 0;\n";
    for q in 0..3 {
        for i in 0..3 {
            text += &format!("trans {q} E{i} := <> {i};\ntrans {q} A{i} := [] {i};\n");
        }
    }
    fs::write(&pd, text).unwrap();
    let product = parse_automaton(&stdout(&["product", inf_b, pd.to_str().unwrap()])).unwrap();
    assert_eq!(product.alphabet(), &["a", "b"]);
}

#[test]
fn exit_codes() {
    assert_eq!(regsolve(&[]).status.code(), Some(2));
    assert_eq!(regsolve(&["solve", "--algo", "nope", "x.gm"]).status.code(), Some(2));
    assert_eq!(regsolve(&["solve", "/nonexistent/x.gm"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.gm");
    fs::write(&bad, "parity 1;\n0 1 0 7;\n").unwrap();
    let out = regsolve(&["solve", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let inf_b = fixture("inf_b.aut");
    assert_eq!(regsolve(&["accepts", inf_b.to_str().unwrap(), "--lasso", "ab"]).status.code(), Some(1));
    assert_eq!(regsolve(&["gen", "h"]).status.code(), Some(1));
}

#[test]
fn bench_table_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for (i, n) in [4, 8, 16].iter().enumerate() {
        generated(dir.path(), &format!("g{i}.gm"), &["gen", "random", "--n", &n.to_string(), "--seed", "5"]);
    }
    generated(dir.path(), "h2.gm", &["gen", "h", "--n", "2"]);
    let fixed_columns = |env: Option<&str>| -> Vec<String> {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_regsolve"));
        cmd.args(["bench", dir.path().to_str().unwrap()]);
        if let Some(t) = env {
            cmd.env("REGSOLVE_THREADS", t);
        }
        let out = String::from_utf8(cmd.output().unwrap().stdout).unwrap();
        out.lines()
            .map(|l| {
                let f: Vec<&str> = l.split('\t').collect();
                [f[0], f[1], f[2], f[3], f[7], f[8], f[9]].join(" ")
            })
            .collect()
    };
    let rows = fixed_columns(None);
    assert_eq!(rows[0], "game n d index arena bound ratio");
    assert_eq!(rows.len(), 5);
    assert!(rows[1].starts_with("g0.gm ") && rows[4].starts_with("h2.gm "));
    for row in &rows[1..] {
        let ratio: f64 = row.rsplit(' ').next().unwrap().parse().unwrap();
        assert!(ratio <= 1.0);
    }
    assert_eq!(rows, fixed_columns(Some("1")));
}

#[test]
fn index_json_uses_lowercase_players() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "g.gm", &["gen", "random", "--n", "7", "--seed", "11"]);
    let g = g.to_str().unwrap();
    let json: serde_json::Value = serde_json::from_str(&stdout(&["index", g, "--json"])).unwrap();
    for (line, w) in stdout(&["index", g]).lines().skip(1).zip(json["winner"].as_array().unwrap()) {
        assert_eq!(line.split(' ').nth(1), w.as_str());
    }
}
