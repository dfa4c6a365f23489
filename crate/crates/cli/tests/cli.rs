use std::process::Command;

use gsym::run;
use serde_json::Value;

fn json(args: &[&str]) -> Value {
    let mut argv = vec!["gsym", "--format", "json"];
    argv.extend_from_slice(args);
    let out = run(argv);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(std::iter::once("gsym").chain(args.iter().copied())).code
}

#[test]
fn petersen_spanning_trees() {
    let v = json(&["trees", "spanning", "--family", "petersen"]);
    assert_eq!(v["count"], "2000");
    assert_eq!(v["checks"]["deletion_contraction"], "2000");
    assert!((v["checks"]["spectral"].as_f64().unwrap() - 2000.0).abs() < 1e-6);
}

#[test]
fn symmetry_table_rows_are_ok() {
    let v = json(&["sym", "table"]);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.len() >= 30);
    assert!(rows.iter().all(|r| r["status"] == "ok"));
    let petersen = rows.iter().find(|r| r["label"] == "P10").unwrap();
    assert_eq!(petersen["computed"], "120");
}

#[test]
fn trefoil() {
    let v = json(&["knots", "jones", "--strands", "2", "1 1 1"]);
    assert_eq!(v["poly"], serde_json::json!({"2": 1, "6": 1, "8": -1}));
    assert_eq!(v["text"], "q + q^3 - q^4");
    let text = run(["gsym", "knots", "jones", "--strands", "2", "1 1 1"]);
    assert_eq!(text.stdout, "q + q^3 - q^4\n");
}

#[test]
fn prufer_one_based() {
    let v = json(&["--one-based", "trees", "prufer-decode", "4 4 4 5"]);
    assert_eq!(v["n"], 6);
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 5);
    assert!(edges.iter().all(|e| e[0].as_u64().unwrap() >= 1 && e[1].as_u64().unwrap() <= 6));
    let dir = std::env::temp_dir().join(format!("gsym-prufer-{}", std::process::id()));
    std::fs::write(&dir, "6 5\n5 4\n4 3\n3 0\n3 1\n3 2\n").unwrap();
    let enc = json(&["--one-based", "trees", "prufer-encode", "--file", dir.to_str().unwrap()]);
    std::fs::remove_file(&dir).ok();
    assert_eq!(enc["sequence"], serde_json::json!([4, 4, 4, 5]));
}

#[test]
fn qflag_reports() {
    let c5 = json(&["qflag", "c5"]);
    assert_eq!(c5["verdict"], "NoQuantum");
    assert_eq!(c5["rule"], "cycle");
    let chord = json(&["qflag", "chord:11,2"]);
    assert_eq!(chord["rule"], "circulant-2-maximal");
    assert_eq!(chord["certificate"]["p"], 11);
    assert_eq!(chord["certificate"]["two_maximal"], true);
    let cube = json(&["qflag", "cube3"]);
    assert_eq!(cube["verdict"], "HasQuantum");
}

#[test]
fn measures_and_series() {
    let v = json(&["--order", "14", "measures", "loops", "--family", "segment17"]);
    let loops: Vec<&str> = v["loops"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(loops[14], "429");
    assert_eq!(v["match"], true);
    let t = json(&["measures", "tseries", "--family", "ade:E6"]);
    assert_eq!(t["match"], true);
    let law = json(&["measures", "law", "arcsine"]);
    assert_eq!(law["oracle"][3], "20");
}

#[test]
fn sym_subcommands() {
    let aut = json(&["sym", "aut", "--family", "c6"]);
    assert_eq!(aut["order"], "12");
    let orbits = json(&["--one-based", "sym", "orbits", "--family", "segment4"]);
    assert_eq!(orbits["orbits"], serde_json::json!([[1, 4], [2, 3]]));
    let prod = json(&["sym", "product", "c4", "c5", "--kind", "cartesian"]);
    assert_eq!(prod["order_actual"], "80");
    let partial = json(&["sym", "partial", "4"]);
    assert_eq!(partial["partial_perms"], "209");
    let gram = json(&["knots", "gram", "--k", "2", "--n", "3"]);
    assert_eq!(gram["det"], "72");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["trees", "spanning", "--family", "petersen", "--bogus"]), 2);
    assert_eq!(code(&["trees", "spanning", "--family", "nonsense9"]), 2);
    assert_eq!(code(&["trees", "spanning"]), 2);
    assert_eq!(code(&["knots", "jones", "--strands", "2", "1 x"]), 2);
    assert_eq!(code(&["trees", "spanning", "--family", "copies:2,k3"]), 1);
    assert_eq!(code(&["measures", "circular", "--family", "k5"]), 1);
    assert_eq!(code(&["corpus", "--filter", "nothing"]), 2);
    assert_eq!(code(&["--help"]), 0);
    let unknown = run(["gsym", "frobnicate"]);
    assert!(unknown.stderr.contains("Usage"));
}

#[test]
fn corpus_filter_and_determinism() {
    let a = run(["gsym", "--format", "json", "corpus", "--filter", "trees"]);
    assert_eq!(a.code, 0, "{}", a.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    let ids: Vec<&str> = v["criteria"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["A3", "A4", "A5"]);
    assert!(v["criteria"][0].get("millis").is_none());
    let b = run(["gsym", "--format", "json", "corpus", "--filter", "trees"]);
    assert_eq!(a, b);
}

#[test]
fn corpus_failure_names_the_criterion() {
    let out = run(["gsym", "corpus", "--filter", "A9"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("A9   FAIL"));
    assert!(out.stderr.contains("A9"));
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_gsym");
    let ok = Command::new(bin).args(["trees", "count", "7"]).output().unwrap();
    assert!(ok.status.success());
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "16807\n");
    let bad = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
