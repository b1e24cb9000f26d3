use std::process::Command;

use irregularity::io::Format;
use irregularity::lp::Variant;
use irregularity::oracle::SearchConstraints;
use irregularity_cli::*;

fn run(f: impl FnOnce(&mut Vec<u8>) -> Result<Verdict>) -> (Verdict, String) {
    let mut buf = Vec::new();
    let verdict = f(&mut buf).unwrap();
    (verdict, String::from_utf8(buf).unwrap())
}

fn irr_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_irr"))
}

const K32: &str = "5\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n";

#[test]
fn irr_reports_profile() {
    let (v, text) = run(|o| cmd_irr(K32, "k32", Format::EdgeList, o));
    assert_eq!(v, Verdict::Clean);
    assert!(text.starts_with("irr = 6\nn = 5\nm = 6\nΔ = 3\nδ = 2\n"));
    assert!(text.contains("    2,3  6\n"));
    let (_, c5) = run(|o| cmd_irr("5\n0 1\n1 2\n2 3\n3 4\n4 0\n", "c5", Format::EdgeList, o));
    assert!(c5.starts_with("irr = 0\n"));
    let (_, g6) = run(|o| cmd_irr("DFw", "g6", Format::Graph6, o));
    assert!(g6.starts_with("irr = 6\n"));
}

#[test]
fn malformed_input_names_the_line() {
    let mut buf = Vec::new();
    let err = cmd_irr("3\n0 1\nfoo bar\n", "bad.txt", Format::EdgeList, &mut buf).unwrap_err();
    assert!(err.to_string().starts_with("bad.txt: line 3"), "{err}");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3\n0 1\n1 1\n").unwrap();
    let out = irr_bin().arg("irr").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn bound_table() {
    let (v, text) = run(|o| cmd_bound(14, 40, 10, None, o));
    assert_eq!(v, Verdict::Clean);
    assert!(text.contains("thm1 = 240 (240.000000)  d = 4"));
    assert!(text.contains("cor1 = 240 (240.000000)"));

    let (_, text) = run(|o| cmd_bound(4, 3, 3, Some(1), o));
    assert!(text.contains("prop2 = 6 (6.000000)  applicable"));
    assert!(text.contains("prop1 = 6 (6.000000)"));

    let (_, text) = run(|o| cmd_bound(13, 45, 10, Some(4), o));
    assert!(
        text.contains("prop2 inapplicable: 2m/n = 90/13 > 40/7"),
        "{text}"
    );

    let mut buf = Vec::new();
    assert!(cmd_bound(3, 4, 2, None, &mut buf).is_err());
}

#[test]
fn certify_reports() {
    let (v, text) = run(|o| cmd_certify(3, VariantArg::Thm1, Some(1), None, o));
    assert_eq!(v, Verdict::Clean);
    assert!(text.contains("x = 2\ny = -1/3\n"));
    assert!(text.contains("bound: 2n - (2/3)m\n"));
    assert!(text.trim_end().ends_with("feasible"));

    let (_, text) = run(|o| cmd_certify(3, VariantArg::Prop2, None, Some(1), o));
    assert!(text.contains("bound: -3n + 6m\n"));

    let out = irr_bin()
        .args(["certify", "--delta", "3", "--variant", "thm1", "--d", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lp_reports() {
    let (v, text) = run(|o| cmd_lp(5, 6, 3, Variant::Thm1, None, o));
    assert_eq!(v, Verdict::Clean);
    assert!(text.contains("OPT = 6 (6.000000)"));
    assert!(text.contains("OPT = closed form"));
    assert!(text.trim_end().ends_with("consistent"));

    let (_, text) = run(|o| cmd_lp(9, 0, 4, Variant::Thm1, None, o));
    assert!(text.contains("OPT = 0 (0.000000)"));
    let (_, text) = run(|o| cmd_lp(14, 40, 10, Variant::Thm1, None, o));
    assert!(text.contains("OPT = 240 (240.000000)"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.lp");
    run(|o| cmd_lp(5, 6, 3, Variant::Prop2 { delta_min: 2 }, Some(&path), o));
    let exported = std::fs::read_to_string(path).unwrap();
    assert!(exported.starts_with("maximize\n"));
    assert!(exported.trim_end().ends_with("end"));
}

#[test]
fn search_reports() {
    let c = SearchConstraints::new(5).edges(6).max_degree(3);
    let (v, text) = run(|o| cmd_search(&c, o));
    assert_eq!(v, Verdict::Clean);
    assert!(text.starts_with("max irr = 6"));
    let g6 = text
        .lines()
        .find_map(|l| l.strip_prefix("witness graph6: "))
        .unwrap();
    let g = irregularity::io::parse_graph6(g6).unwrap();
    assert_eq!(g.degree_sequence(), vec![3, 3, 2, 2, 2]);

    let (_, text) = run(|o| cmd_search(&SearchConstraints::new(3).edges(3), o));
    assert!(text.starts_with("max irr = 0"));

    let c = SearchConstraints::new(4).edges(3).max_degree(3).dedup(true);
    let (_, text) = run(|o| cmd_search(&c, o));
    assert!(text.starts_with("max irr = 6"));
    assert!(text.contains("witness graph6: "));

    let mut buf = Vec::new();
    assert!(cmd_search(&SearchConstraints::new(11), &mut buf).is_err());
}

#[test]
fn curves_csv() {
    let (v, text) = run(|o| cmd_curves(60, 3, None, None, o));
    assert_eq!(v, Verdict::Clean);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,thm1,cor1,eb2,eb3");
    assert_eq!(lines.len(), 1 + 91);
    assert!(lines[1].starts_with("0,0,0,"));
    assert!(lines[46].starts_with("45,90,90,"));

    let points = curve_points(60, 10, Some(0)).unwrap();
    let row = &points[100];
    assert_eq!(row.cor1, irregularity::rational::int(800));
    assert!((row.eb3.unwrap() - 8_000_000f64.sqrt()).abs() < 1e-9);
    assert!((row.eb2.unwrap() - 3089.151525).abs() < 1e-6);
}

#[test]
fn curves_are_deterministic_on_disk() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for p in [&a, &b] {
        let status = irr_bin()
            .args(["curves", "--n", "100", "--delta", "10", "--output"])
            .arg(p)
            .status()
            .unwrap();
        assert!(status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let status = irr_bin()
        .args([
            "curves",
            "--n",
            "10",
            "--delta",
            "3",
            "--output",
            "/nonexistent/dir/x.csv",
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn sweep_small() {
    let (v, text) = run(|o| cmd_sweep(5, 3, None, o));
    assert_eq!(v, Verdict::Clean);
    assert!(text.trim_end().ends_with("0 violations"));
}

#[test]
fn usage_errors_exit_two() {
    let out = irr_bin().args(["bound", "--n", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = irr_bin()
        .args([
            "lp",
            "--n",
            "5",
            "--m",
            "4",
            "--delta",
            "3",
            "--variant",
            "prop2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
