use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn antialg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antialg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("antialg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn normal_forms() {
    for (word, nf) in [("B A", "A B - E"), ("E A E", "0"), ("", "1"), ("A^2 E", "E A A")] {
        let o = antialg(&["nf", "K3", word]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o).trim(), nf, "{word}");
    }
}

#[test]
fn pbw_verdicts() {
    let o = antialg(&["pbw", "K3", "--degree=8"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("PBW: HOLDS"));
    let o = antialg(&["pbw", "AK1", "--degree=2", "--window=-4..4"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("PBW: FAILS at degree 2"));
}

#[test]
fn density_verdicts() {
    let o = antialg(&["density", "--lambda=1/2", "--window=-6..6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("antialgebra structure: YES"));
    let o = antialg(&["density", "--lambda=-1", "--window=-6..6"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("antialgebra structure: NO"));
    assert!(stdout(&o).contains("witness"));
}

#[test]
fn axiom_suites() {
    assert_eq!(code(&antialg(&["verify", "K3", "antialgebra"])), 0);
    assert_eq!(code(&antialg(&["verify", "K3", "jordan"])), 0);
    assert_eq!(code(&antialg(&["verify", "K3", "halfunit"])), 0);
    assert_eq!(code(&antialg(&["verify", "osp12", "superalgebra"])), 0);
    assert_eq!(code(&antialg(&["verify", "AK1", "antialgebra", "--window=-6..6"])), 0);
}

#[test]
fn broken_definition_file_fails_with_witness() {
    let bad = scratch(
        "bad_k3.alg",
        "algebra BadK3\neven eps : weight 0\nodd a : weight 1/2\nodd b : weight -1/2\n\
         eps*eps = eps\neps*a = a\neps*b = 1/2 b\na*b = 1/2 eps\n",
    );
    let o = antialg(&["verify", bad.to_str().unwrap(), "antialgebra"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    let la1 = out.lines().find(|l| l.starts_with("LA1 ")).unwrap();
    assert!(la1.contains("fail") && la1.contains("(eps, eps, a)"), "{la1}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&antialg(&["verify", "K7", "antialgebra"])), 2);
    assert_eq!(code(&antialg(&["verify", "AK1", "antialgebra"])), 2);
    assert_eq!(code(&antialg(&["nf", "K3", "B Q"])), 2);
    assert_eq!(code(&antialg(&["pbw", "K3", "--window=3..1"])), 2);
    assert_eq!(code(&antialg(&["verify", "K3", "superalgebra"])), 2);
    assert_eq!(code(&antialg(&["frobnicate"])), 2);
    let o = antialg(&["density", "--lambda=1/0", "--window=-6..6"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn representations() {
    assert_eq!(code(&antialg(&["rep", "K3", "vad"])), 0);
    assert_eq!(code(&antialg(&["rep", "K3", "vad", "--as=representation"])), 1);
    let o = antialg(&["rep", "K3", "diffop", "--degree=6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("rescaled by c = 1/2"));
    let file = scratch(
        "vad.rep",
        "representation V of K3\neven w : weight 0\nodd u : weight 1/2\nodd v : weight -1/2\n\
         eps | v = 1/2 v\neps | w = w\neps | u = 1/2 u\na | v = w\na | w = u\nb | w = 1/4 v\nb | u = -1/4 w\n",
    );
    let o = antialg(&["rep", "K3", file.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(code(&antialg(&["rep", "AK1", "vad", "--window=-2..2"])), 2);
}

#[test]
fn adjoint_and_bg_reports() {
    let o = antialg(&["adjoint", "K3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("even dimension 3"));
    assert!(stdout(&o).lines().any(|l| l.starts_with("osp(1|2) brackets") && l.contains("pass")));
    assert_eq!(code(&antialg(&["adjoint", "AK1", "--window=-3..3"])), 0);
    assert_eq!(code(&antialg(&["bg", "K3"])), 0);
    let o = antialg(&["bg", "AK1", "--window=-3..3"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).lines().any(|l| l.starts_with("u3 (i)") && l.contains("witness")));
}

#[test]
fn rules_listing() {
    let o = antialg(&["rules", "K3", "--degree=3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "B A -> A B - E"));
}

#[test]
fn json_results_are_deterministic() {
    let run = || {
        let o = antialg(&["bg", "AK1", "--window=-3..3", "--format=json"]);
        assert_eq!(code(&o), 1);
        serde_json::from_slice::<Value>(&o.stdout).unwrap()
    };
    let (a, b) = (run(), run());
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["config"]["window"], "-3..3");
    assert_eq!(a["results"]["passed"], false);
    assert!(a["timing"]["elapsed_ms"].is_u64());
    let checks = a["results"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 8);
    let nf = antialg(&["nf", "K3", "B A", "--format=json"]);
    let v: Value = serde_json::from_slice(&nf.stdout).unwrap();
    assert_eq!(v["results"]["data"]["normal_form"], "A B - E");
    assert_eq!(v["command"], "nf K3 \"B A\" --format=json");
}
