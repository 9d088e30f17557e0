use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

const RP2: &str = r#"{"facets":[[0,1,2],[0,2,3],[0,3,4],[0,4,5],[0,5,1],[1,2,4],[2,3,5],[3,4,1],[4,5,2],[5,1,3]]}"#;

fn kkmforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kkmforge")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn cohomology_reports_betti_numbers() {
    let dir = TempDir::new().unwrap();
    let rp2 = write(&dir, "rp2.json", RP2);
    let o = kkmforge(&["cohomology", s(&rp2)]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_out(&o)["result"]["betti"], json!([1, 1, 1]));

    let point = write(&dir, "pt.json", r#"{"facets":[[0]]}"#);
    assert_eq!(json_out(&kkmforge(&["cohomology", s(&point)]))["result"]["betti"], json!([1]));

    let bad = write(&dir, "bad.json", r#"{"facets":[[0,1],[2,2]]}"#);
    assert_eq!(code(&kkmforge(&["cohomology", s(&bad)])), 2);
    let truncated = write(&dir, "trunc.json", r#"{"facets":[[0,1],"#);
    assert_eq!(code(&kkmforge(&["cohomology", s(&truncated)])), 2);
}

#[test]
fn euler_powers() {
    let nonzero = |dims: &str, exps: &str| {
        let o = kkmforge(&["euler", "--dims", dims, "--exponents", exps]);
        assert_eq!(code(&o), 0);
        json_out(&o)["result"]["nonzero"].as_bool().unwrap()
    };
    assert!(nonzero("2", "2"));
    assert!(!nonzero("2", "3"));
    assert!(nonzero("1,1", "1,1"));
}

#[test]
fn kkm_exit_codes_and_verification() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("halves.json");
    let args = ["check", "kkm", "--example", "halves", "--d", "1", "--n", "2", "--resolution", "6", "--probes", "5"];
    let mut with_out = args.to_vec();
    with_out.extend(["--out", s(&report)]);
    assert_eq!(code(&kkmforge(&with_out)), 0);
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(stored["result"]["verdict"], "witness");
    assert_eq!(stored["seed"], 0);
    assert_eq!(stored["resolution"], 6);

    let mut verify = args.to_vec();
    verify.extend(["--verify", s(&report)]);
    let o = kkmforge(&verify);
    assert_eq!(code(&o), 0);
    assert_eq!(json_out(&o)["result"]["valid"], true);

    let mut tampered = stored.clone();
    let point = &mut tampered["result"]["witness"]["certificates"][0]["common"]["point"][0];
    *point = json!("5/7");
    std::fs::write(&report, tampered.to_string()).unwrap();
    assert_eq!(code(&kkmforge(&verify)), 1);

    let stars = kkmforge(&["check", "kkm", "--example", "vertex-star", "--d", "1", "--n", "2", "--resolution", "6", "--probes", "0"]);
    assert_eq!(code(&stars), 1);
    let body = json_out(&stars);
    assert_eq!(body["result"]["multiplicity"], 3);
    assert_eq!(body["result"]["hypothesis_holds"], false);

    assert_eq!(code(&kkmforge(&["check", "kkm", "--cover", "/nonexistent/cover.json", "--d", "1", "--n", "2"])), 2);
}

#[test]
fn reports_are_byte_identical() {
    let run = || kkmforge(&["check", "kkm", "--example", "halves", "--d", "1", "--n", "2", "--resolution", "5", "--probes", "4", "--seed", "9"]).stdout;
    assert_eq!(run(), run());
}

#[test]
fn cover_file_round_trip() {
    let dir = TempDir::new().unwrap();
    // Δ² at resolution 2 has 4 cells; one set covering all of them.
    let cover = write(&dir, "cover.json", r#"{"base":{"simplex_sizes":[3],"resolution":2},"sets":{"all":[0,1,2,3]}}"#);
    let o = kkmforge(&["check", "kkm", "--cover", s(&cover), "--d", "1", "--n", "2", "--probes", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_out(&o)["result"]["witness"]["label"], "all");
    let o = kkmforge(&["check", "lebesgue", "--example", "bricks", "--factor", "1:1", "--factor", "1:1", "--resolution", "8", "--probes", "2"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn convex_commands() {
    let dir = TempDir::new().unwrap();
    let pts = [[3, 7], [-5, 2], [9, -4], [0, 0], [6, 6], [-8, -3], [2, -9], [-1, 5], [4, 1], [-6, 8], [7, -7], [1, 3]];
    let cp = write(&dir, "cp.json", &json!({ "points": pts.iter().map(|p| [p[0].to_string(), p[1].to_string()]).collect::<Vec<_>>() }).to_string());
    let o = kkmforge(&["convex", "centerpoint", s(&cp)]);
    assert_eq!(code(&o), 0);
    assert!(json_out(&o)["result"]["depth"].as_u64().unwrap() >= 4);

    let seven: Vec<[String; 2]> = pts[..7].iter().map(|p| [p[0].to_string(), p[1].to_string()]).collect();
    let tv = write(&dir, "tv.json", &json!({ "points": seven, "r": 2 }).to_string());
    let out = dir.path().join("tv_report.json");
    assert_eq!(code(&kkmforge(&["convex", "tverberg", s(&tv), "--out", s(&out)])), 0);
    let rep: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(rep["result"]["brute_force"]["parts"].as_array().unwrap().len(), 3);
    assert_eq!(rep["result"]["paths_agree"], true);
    assert_eq!(code(&kkmforge(&["convex", "tverberg", s(&tv), "--verify", s(&out)])), 0);

    let interval = |a: i64, b: i64| json!({ "kind": "hull", "points": [[a.to_string()], [b.to_string()]] });
    let helly = write(&dir, "helly.json", &json!({ "dim": 1, "classes": [[interval(0, 1), interval(2, 3)], [interval(0, 3), interval(0, 3)]] }).to_string());
    let o = kkmforge(&["convex", "helly", s(&helly)]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_out(&o)["result"]["color"], 1);
    let high = write(&dir, "high.json", &json!({ "dim": 2, "classes": [[interval(0, 1)], [interval(0, 1)]] }).to_string());
    let o = kkmforge(&["convex", "helly", s(&high)]);
    assert_eq!(code(&o), 1);
    assert_eq!(json_out(&o)["result"]["violation"]["kind"], "dimension_too_large");

    let barany = write(&dir, "barany.json", r#"{"k":[["0"]],"classes":[[["1"],["2"]],[["3"],["4"]]]}"#);
    let o = kkmforge(&["convex", "barany", s(&barany)]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_out(&o)["result"]["functional"]["offset"], "-1");
}

#[test]
fn sections_demo_csv() {
    let o = kkmforge(&["sections", "demo", "--samples", "8"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9);
    assert!(lines[1..].iter().all(|l| l.ends_with("true")));
}

#[test]
fn acceptance_subcommand() {
    let o = kkmforge(&["acceptance", "--only", "1"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("[PASS] 1."));

    let dir = TempDir::new().unwrap();
    // A disk: the first five triangles of the RP² file.
    let disk = write(&dir, "disk.json", r#"{"facets":[[0,1,2],[0,2,3],[0,3,4],[0,4,5],[0,5,1]]}"#);
    let o = kkmforge(&["acceptance", "--only", "1", "--rp2", s(&disk)]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("[FAIL] 1."));

    let verdicts = |seed: &str| {
        let o = kkmforge(&["acceptance", "--only", "9", "--seed", seed]);
        (code(&o), String::from_utf8_lossy(&o.stdout).starts_with("[PASS]"))
    };
    assert_eq!(verdicts("0"), verdicts("17"));
}
