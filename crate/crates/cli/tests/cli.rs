use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cagespec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cagespec"))
        .args(args)
        .env_remove("CAGE_DATA_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn construct_to(dir: &Path, family: &str, extra: &[&str]) -> String {
    let path = dir.join(format!("{}.txt", family.replace(':', "_")));
    let path = path.to_str().unwrap().to_string();
    let mut args = vec!["construct", family, "--out", &path];
    args.extend_from_slice(extra);
    assert_eq!(code(&cagespec(&args)), 0, "construct {family}");
    path
}

#[test]
fn verify_passes_on_constructible_cages() {
    let cases = [
        (3, 5), (7, 5), (3, 6), (3, 8), (3, 12),
        (2, 3), (4, 3), (6, 3), (2, 4), (5, 4),
        (4, 6), (6, 6), (8, 6),
    ];
    for (k, g) in cases {
        let out = cagespec(&["verify", &k.to_string(), &g.to_string(), "--json"]);
        assert_eq!(code(&out), 0, "({k},{g}): {}", String::from_utf8_lossy(&out.stdout));
        let report = json(&out);
        assert_eq!(report["constructed"], true);
        assert!(report["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
    }
}

#[test]
fn verify_formula_only_case() {
    let out = cagespec(&["verify", "57", "5", "--json"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["existence"]["status"], "unknown");
    assert_eq!(report["constructed"], false);
    assert_eq!(report["n0"], 3250);
    let checks = report["checks"].as_array().unwrap();
    let by_name = |n: &str| checks.iter().find(|c| c["name"] == n).unwrap().clone();
    assert_eq!(by_name("distance-spectrum")["status"], "pass");
    assert_eq!(by_name("construction")["status"], "skipped");
    assert!(by_name("construction")["detail"].as_str().unwrap().contains("not constructible"));
}

#[test]
fn verify_rejects_non_moore_parameters() {
    assert_eq!(code(&cagespec(&["verify", "3", "7"])), 2);
    assert_eq!(code(&cagespec(&["verify", "1", "5"])), 2);
}

#[test]
fn construct_summaries() {
    let out = cagespec(&["construct", "petersen", "--json"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    // edge list goes first when no --out is given
    assert!(text.starts_with("10 15\n"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.txt");
    let out = cagespec(&["construct", "pg2:3", "--subdivide", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let summary = json(&out);
    assert_eq!(summary["vertices"], 13 * 2 + 52);
    assert_eq!(summary["edges"], 104);
    assert_eq!(summary["girth"], 12);
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("78 104\n"));

    let out = cagespec(&["construct", "cycle:7", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(json(&out)["regularity"], 2);
}

#[test]
fn analyze_reports() {
    let dir = tempfile::tempdir().unwrap();

    let heawood = construct_to(dir.path(), "pg2:2", &[]);
    let r = json(&cagespec(&["analyze", &heawood]));
    assert_eq!(r["distance_regular"]["notation"], "{3,2,2; 1,1,3}");
    assert_eq!(r["transmission_regular"], 27);
    assert_eq!(r["bipartite"], true);

    let sp = construct_to(dir.path(), "petersen", &["--subdivide"]);
    let r = json(&cagespec(&["analyze", &sp]));
    assert!(r["distance_regular"].is_null());
    assert_eq!(r["distance_biregular"]["part_sizes"], serde_json::json!([10, 15]));
    assert_eq!(r["quotient"], serde_json::json!([[30, 51], [34, 52]]));
    assert_eq!(r["quotient_equitable"], true);

    let path4 = dir.path().join("p4.txt");
    std::fs::write(&path4, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let r = json(&cagespec(&["analyze", path4.to_str().unwrap()]));
    assert!(r["distance_regular"].is_null());
    assert!(r["distance_biregular"].is_null());
    assert_eq!(r["diameter"], 3);
}

fn numeric(report: &Value) -> Vec<(f64, u64)> {
    report["numeric"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["value"].as_f64().unwrap(), e["mult"].as_u64().unwrap()))
        .collect()
}

#[test]
fn spectrum_reports() {
    let dir = tempfile::tempdir().unwrap();

    let p = construct_to(dir.path(), "petersen", &[]);
    let out = cagespec(&["spectrum", &p, "--exact-charpoly"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["graph"]["moore"], serde_json::json!([3, 5]));
    assert_eq!(numeric(&r), vec![(15.0, 1), (0.0, 4), (-3.0, 5)]);
    assert_eq!(r["verdicts"]["spectrum_matches"], true);
    assert_eq!(r["verdicts"]["char_poly_matches"], true);

    let hs = construct_to(dir.path(), "hoffman-singleton", &[]);
    let r = json(&cagespec(&["spectrum", &hs]));
    assert_eq!(numeric(&r), vec![(91.0, 1), (1.0, 21), (-4.0, 28)]);
    let r = json(&cagespec(&["spectrum", &hs, "--matrix", "adjacency"]));
    assert_eq!(numeric(&r), vec![(7.0, 1), (2.0, 28), (-3.0, 21)]);

    let k2 = dir.path().join("k2.txt");
    std::fs::write(&k2, "2 1\n0 1\n").unwrap();
    let r = json(&cagespec(&["spectrum", k2.to_str().unwrap(), "--matrix", "adjacency"]));
    assert_eq!(numeric(&r), vec![(1.0, 1), (-1.0, 1)]);
}

#[test]
fn table_rows() {
    let out = cagespec(&["table", "5", "3", "7", "57", "--json"]);
    assert_eq!(code(&out), 0);
    let rows = json(&out);
    let radii: Vec<&str> = rows.as_array().unwrap().iter().map(|r| r["dr_radius"].as_str().unwrap()).collect();
    assert_eq!(radii, ["15", "91", "6441"]);
    assert_eq!(rows[2]["note"], "formula only (no construction)");

    let rows = json(&cagespec(&["table", "6", "3", "4", "--json"]));
    assert_eq!(rows[0]["dr_radius"], "27");
    assert_eq!(rows[1]["dr_radius"], "55");

    let out = cagespec(&["table", "12", "3"]);
    let csv = String::from_utf8(out.stdout).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("k,g,d,n0,"));
    assert!(lines.next().unwrap().starts_with("3,12,6,126,exists,true,579,"));

    let rows = json(&cagespec(&["table", "5", "4", "--json"]));
    assert!(rows[0]["note"].as_str().unwrap().starts_with("not a Moore parameter set"));

    assert_eq!(code(&cagespec(&["table", "2", "3"])), 2);
}

#[test]
fn pipeline_is_deterministic() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let g = construct_to(dir.path(), "pg2:3", &["--subdivide"]);
        let edges = std::fs::read(&g).unwrap();
        let analyze = cagespec(&["analyze", &g]).stdout;
        // report embeds the input path; normalise it
        let spectrum = String::from_utf8(cagespec(&["spectrum", &g]).stdout).unwrap().replace(&g, "<input>");
        (edges, analyze, spectrum)
    };
    assert_eq!(run(), run());
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(code(&cagespec(&["analyze", "/nonexistent/graph.txt"])), 3);
    assert_eq!(code(&cagespec(&["construct", "bogus"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 2\n0 1\n1 7\n").unwrap();
    assert_eq!(code(&cagespec(&["analyze", bad.to_str().unwrap()])), 2);

    let out = Command::new(env!("CARGO_BIN_EXE_cagespec"))
        .args(["construct", "tutte-12cage"])
        .env("CAGE_DATA_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
}
