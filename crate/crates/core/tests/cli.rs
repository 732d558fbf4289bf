mod common;

use std::fs;

use locdom::cli::{
    read_csv, run, scan, summarize, Check, ScanOptions, ScanRecord, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, EXIT_VIOLATION,
};
use locdom::domination::is_locating_dominating;
use locdom::graph6::from_graph6;
use locdom::VertexSet;
use serde_json::Value;

fn locdom(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("locdom").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn set_of(v: &Value) -> VertexSet {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect()
}

#[test]
fn solve_reports_twins_and_witnesses() {
    let (code, out, _) = locdom(&["solve", "A_"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("gamma_L: 1"));
    assert!(out.contains("twins: 0 1 (closed)"));

    let (_, a3, _) = locdom(&["gen", "ak", "3"]);
    let (code, out, _) = locdom(&["solve", a3.trim(), "--json"]);
    assert_eq!(code, EXIT_OK);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["gamma_l"], 3);
    let cob = report["constructions"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["method"] == "cobipartite")
        .unwrap();
    assert_eq!(cob["size"], 3);

    let (_, h4, _) = locdom(&["gen", "hk", "4"]);
    let (_, out, _) = locdom(&["solve", h4.trim(), "--json"]);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["gamma_l"], 6);
    let two = report["constructions"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["method"] == "two-thirds")
        .unwrap();
    assert!(two["size"].as_u64().unwrap() <= 8);
}

#[test]
fn every_emitted_witness_verifies() {
    for text in ["Ch", "E{O_", "G~[ww[", "EzKW", "D?{"] {
        let g = from_graph6(text).unwrap();
        let (_, out, _) = locdom(&["solve", text, "--json"]);
        let report: Value = serde_json::from_str(&out).unwrap();
        assert!(is_locating_dominating(&g, set_of(&report["witness"])).unwrap());
        for c in report["constructions"].as_array().unwrap() {
            assert!(is_locating_dominating(&g, set_of(&c["set"])).unwrap(), "{text} {c}");
        }
        let (code, out, _) = locdom(&["construct", text, "--json"]);
        if code == EXIT_OK {
            let report: Value = serde_json::from_str(&out).unwrap();
            assert!(is_locating_dominating(&g, set_of(&report["set"])).unwrap());
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(locdom(&["solve", "C!"]).0, EXIT_USAGE);
    assert_eq!(locdom(&["solve"]).0, EXIT_USAGE);
    assert_eq!(locdom(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(locdom(&["solve", "Ch", "--max-exact", "3"]).0, EXIT_RESOURCE);
    assert_eq!(locdom(&["gen", "hk", "2"]).0, EXIT_USAGE);
    assert_eq!(locdom(&["gen", "hk", "x"]).0, EXIT_USAGE);
    assert_eq!(locdom(&["scan", "/nonexistent/graphs.g6"]).0, EXIT_USAGE);
    assert_eq!(locdom(&["--help"]).0, EXIT_OK);

    let (code, _, err) = locdom(&["construct", "C~", "--method", "two-thirds"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("twins"), "{err}");
    let (code, _, _) = locdom(&["construct", "Ch", "--method", "cobipartite"]);
    assert_eq!(code, EXIT_OK);
    let c5 = locdom::graph6::to_graph6(&locdom::Graph::cycle(5)).unwrap();
    let (code, _, err) = locdom(&["construct", &c5, "--method", "split"]);
    assert_eq!(code, EXIT_USAGE, "{err}");
}

#[test]
fn scan_parse_error_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    fs::write(&path, "Ch\nA_\nC!\n").unwrap();
    let (code, _, err) = locdom(&["scan", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn construct_traces_p4() {
    let (code, out, _) = locdom(&["construct", "Ch", "--method", "two-thirds"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("candidate D + X_D: size 4"), "{out}");
    assert!(out.contains("candidate D + Y'_D: size 2"), "{out}");
    assert!(out.contains("set: {1, 2} size 2"), "{out}");
    let (_, out, _) = locdom(&["construct", "Ch", "--method", "split"]);
    assert!(out.contains("set: {1, 2}"), "{out}");
}

#[test]
fn gen_examples() {
    let (code, out, _) = locdom(&["gen", "ak", "4"]);
    assert_eq!(code, EXIT_OK);
    let g = from_graph6(out.trim()).unwrap();
    assert_eq!(g.order(), 8);
    for i in 0..8 {
        for j in i + 1..8 {
            assert_eq!(g.has_edge(i, j), j - i <= 3);
        }
    }
    let (code, out, err) = locdom(&["gen", "t-tree", "20", "--seed", "7", "--verify"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert_eq!(from_graph6(out.trim()).unwrap().order(), 20);
    assert!(err.contains("gamma_L = 10"));
    let (_, out, _) = locdom(&["gen", "hk", "3"]);
    assert_eq!(from_graph6(out.trim()).unwrap().order(), 10);
    for args in [
        &["gen", "hk", "3", "--verify"][..],
        &["gen", "join-ak", "2", "3", "--verify"],
        &["gen", "corona", "Ch", "--verify"],
        &["gen", "star-gadget", "3", "--verify"],
        &["gen", "attach-demo", "4", "14", "--seed", "3", "--verify"],
    ] {
        let (code, _, err) = locdom(args);
        assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    }
}

#[test]
fn csv_and_json_reports_agree() {
    let dir = tempfile::tempdir().unwrap();
    let input = common::fixture_path(6);
    let csv_path = dir.path().join("scan.csv");
    let json_path = dir.path().join("scan.json");
    let input = input.to_str().unwrap();
    let (code, _, _) = locdom(&["scan", input, "--twin-free-only", "--out", csv_path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let (code, stdout, _) = locdom(&[
        "scan",
        input,
        "--twin-free-only",
        "--json",
        "--out",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);

    let strip = |mut r: ScanRecord| {
        r.elapsed_ms = 0;
        r
    };
    let from_csv: Vec<ScanRecord> = read_csv(fs::File::open(&csv_path).unwrap())
        .unwrap()
        .into_iter()
        .map(strip)
        .collect();
    let from_json: Vec<ScanRecord> = serde_json::from_str::<Vec<ScanRecord>>(&fs::read_to_string(&json_path).unwrap())
        .unwrap()
        .into_iter()
        .map(strip)
        .collect();
    let from_lines: Vec<ScanRecord> = stdout
        .lines()
        .map(|l| strip(serde_json::from_str(l).unwrap()))
        .collect();
    assert_eq!(from_csv.len(), 31);
    assert_eq!(from_csv, from_json);
    assert_eq!(from_json, from_lines);
    let header = fs::read_to_string(&csv_path)
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .to_string();
    assert_eq!(
        header,
        "graph6,n,twin_free,isolated_free,connected,gamma,gamma_l,half_bound_ok,two_thirds_ok,construction_sizes,elapsed_ms"
    );
}

#[test]
fn scan_records_are_consistent_and_ordered() {
    let graphs = common::connected_fixture(6);
    let run_with = |jobs| {
        let opts = ScanOptions {
            jobs: Some(jobs),
            ..ScanOptions::default()
        };
        let (records, _) = scan(&graphs, &opts).unwrap();
        records
            .into_iter()
            .map(|mut r| {
                r.elapsed_ms = 0;
                r
            })
            .collect::<Vec<_>>()
    };
    let one = run_with(1);
    assert_eq!(one, run_with(4));
    assert_eq!(one.len(), graphs.len());
    for r in &one {
        let (gamma, gl) = (r.gamma.unwrap(), r.gamma_l.unwrap());
        assert!(gamma <= gl);
        assert!(r.construction_sizes.values().all(|&s| s >= gl), "{r:?}");
        assert_eq!(r.half_bound_ok, Some(2 * gl <= r.n));
    }
}

#[test]
fn scan_above_cap_records_constructions_only() {
    let graphs = common::connected_fixture(7);
    let opts = ScanOptions {
        max_exact: 6,
        twin_free_only: true,
        ..ScanOptions::default()
    };
    let (records, summary) = scan(&graphs, &opts).unwrap();
    assert!(records.iter().all(|r| r.gamma_l.is_none() && r.gamma.is_none()));
    assert!(records.iter().all(|r| r.two_thirds_ok.is_none()));
    assert!(records.iter().any(|r| !r.construction_sizes.is_empty()));
    assert!(summary.violations(Check::Both).is_empty());
}

#[test]
fn violations_are_reported_not_fatal() {
    let violator = ScanRecord {
        graph6: "Ch".into(),
        n: 4,
        twin_free: true,
        isolated_free: true,
        connected: true,
        gamma: Some(2),
        gamma_l: Some(3),
        half_bound_ok: Some(false),
        two_thirds_ok: Some(false),
        construction_sizes: Default::default(),
        elapsed_ms: 0,
    };
    let summary = summarize(1, std::slice::from_ref(&violator));
    assert_eq!(summary.half_violations, vec!["Ch".to_string()]);
    assert_eq!(summary.violations(Check::Half), vec!["Ch"]);
    assert_eq!(summary.violations(Check::Both).len(), 2);
    let ineligible = ScanRecord {
        twin_free: false,
        ..violator
    };
    assert!(summarize(1, &[ineligible]).violations(Check::Both).is_empty());
    // EXIT_VIOLATION is the reported outcome; it never appears on real inputs here
    assert_ne!(EXIT_VIOLATION, EXIT_OK);
}
