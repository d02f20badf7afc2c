use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn regbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_graph(dir: &Path, name: &str, order: usize, edges: &[(usize, usize)]) -> PathBuf {
    let mut text = format!("# {name}\nv {order}\n");
    for (a, b) in edges {
        text.push_str(&format!("{a} {b}\n"));
    }
    let path = dir.join(format!("{name}.txt"));
    fs::write(&path, text).unwrap();
    path
}

fn cycle(dir: &Path, n: usize) -> PathBuf {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    write_graph(dir, &format!("c{n}"), n, &edges)
}

fn petersen(dir: &Path) -> PathBuf {
    let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
    let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
    write_graph(dir, "petersen", 10, &[outer, spokes, inner].concat())
}

fn k222(dir: &Path) -> PathBuf {
    let edges: Vec<_> = (0..6)
        .flat_map(|a| ((a + 1)..6).map(move |b| (a, b)))
        .filter(|(a, b)| a / 2 != b / 2)
        .collect();
    write_graph(dir, "k222", 6, &edges)
}

fn tight11(dir: &Path) -> PathBuf {
    let mut edges: Vec<_> = (0..5).flat_map(|a| (5..11).map(move |b| (a, b))).collect();
    edges.extend([(5, 6), (7, 8), (9, 10)]);
    write_graph(dir, "tight11", 11, &edges)
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn bound_tight_family_and_cycle() {
    let dir = TempDir::new().unwrap();
    let out = regbound(&["bound", tight11(dir.path()).to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rho = 1\n"), "{text}");
    assert!(text.contains("bound = 5\n"), "{text}");

    let out = regbound(&["bound", cycle(dir.path(), 5).to_str().unwrap()]);
    assert!(out.status.success());
    let line = stdout(&out)
        .lines()
        .find(|l| l.starts_with("bound = "))
        .unwrap()
        .to_string();
    assert!((num(&line["bound = ".len()..]) - 1.381966).abs() < 1e-6);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let k4 = write_graph(
        dir.path(),
        "k4",
        4,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    );
    let out = regbound(&["bound", k4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("delta < v - 1"));

    let path3 = write_graph(dir.path(), "path3", 3, &[(0, 1), (1, 2)]);
    assert_eq!(
        regbound(&["compare", path3.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "v 3\n0 x\n").unwrap();
    assert_eq!(
        regbound(&["bound", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        regbound(&["srg", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let missing = dir.path().join("missing.txt");
    assert_eq!(
        regbound(&["bound", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let c5 = cycle(dir.path(), 5);
    assert_eq!(
        regbound(&["--tol", "-1", "bound", c5.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let out_csv = dir.path().join("x.csv");
    let out = regbound(&[
        "sweep",
        "--family",
        "cycle",
        "--out",
        out_csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = regbound(&[
        "sweep",
        "--family",
        "tight",
        "--v",
        "7..x",
        "--out",
        out_csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compare_rows() {
    let dir = TempDir::new().unwrap();
    let out = regbound(&["compare", cycle(dir.path(), 5).to_str().unwrap()]);
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out));
    assert_eq!(
        rows[0],
        [
            "graph",
            "v",
            "delta",
            "paper_bound",
            "fiedler_bound",
            "exact",
            "gap_paper",
            "gap_fiedler"
        ]
    );
    assert_eq!(rows[1][0], "c5");
    assert!(num(&rows[1][6]).abs() < 1e-9);

    let out = regbound(&["compare", petersen(dir.path()).to_str().unwrap()]);
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out));
    assert_eq!(&rows[1][1..5], ["10", "3", "2", "3"]);
    assert!(num(&rows[1][6]).abs() < 1e-9);
    assert!((num(&rows[1][7]) - 1.0).abs() < 1e-9);
}

#[test]
fn compare_reports_violation_with_exit_4() {
    let dir = TempDir::new().unwrap();
    let edges = [
        (0, 1),
        (0, 3),
        (0, 5),
        (0, 6),
        (0, 7),
        (1, 3),
        (1, 6),
        (1, 8),
        (1, 9),
        (2, 4),
        (2, 5),
        (2, 6),
        (2, 7),
        (2, 8),
        (3, 4),
        (3, 5),
        (3, 8),
        (4, 6),
        (4, 7),
        (4, 9),
        (5, 7),
        (5, 8),
        (6, 9),
        (7, 9),
        (8, 9),
    ];
    let path = write_graph(dir.path(), "r10", 10, &edges);
    let out = regbound(&["compare", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows[1][3], "3");
    assert!(num(&rows[1][6]) < -0.4);
}

#[test]
fn srg_reports() {
    let dir = TempDir::new().unwrap();
    let out = regbound(&["srg", petersen(dir.path()).to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(10, 3, 0, 1)"), "{text}");
    assert!(text.contains("1 (x5), -2 (x4)"), "{text}");
    assert!(text.contains("maximality: not certified"), "{text}");

    let text = stdout(&regbound(&["srg", k222(dir.path()).to_str().unwrap()]));
    assert!(text.contains("maximality: certified"), "{text}");

    let text = stdout(&regbound(&["srg", cycle(dir.path(), 6).to_str().unwrap()]));
    assert!(text.contains("not strongly regular"), "{text}");
}

fn sweep(dir: &Path, name: &str, args: &[&str]) -> (String, Vec<Vec<String>>) {
    let path = dir.join(name);
    let mut all = vec!["sweep"];
    all.extend(args);
    all.extend(["--out", path.to_str().unwrap()]);
    let out = regbound(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = fs::read_to_string(path).unwrap();
    let rows = csv_rows(&text);
    (text, rows)
}

#[test]
fn sweep_random_regular() {
    let dir = TempDir::new().unwrap();
    let args = [
        "--family",
        "random-regular",
        "--v",
        "16",
        "--delta",
        "5",
        "--count",
        "50",
        "--seed",
        "11",
    ];
    let (text, rows) = sweep(dir.path(), "a.csv", &args);
    assert_eq!(rows.len(), 51);
    assert_eq!(rows[0].len(), 10);
    assert_eq!(&rows[0][8..], ["certified", "error"]);
    for r in &rows[1..] {
        assert_eq!(r[9], "", "{r:?}");
        assert!(num(&r[6]) >= -1e-9);
    }
    assert!(!text.contains('\r'));
    let (again, _) = sweep(dir.path(), "b.csv", &args);
    assert_eq!(text, again);
}

#[test]
fn sweep_tight_and_multipartite() {
    let dir = TempDir::new().unwrap();
    let (_, rows) = sweep(
        dir.path(),
        "t.csv",
        &["--family", "tight", "--v", "7,11,15"],
    );
    assert_eq!(rows.len(), 4);
    for r in &rows[1..] {
        assert!(num(&r[6]).abs() < 1e-9, "{r:?}");
    }

    let (_, rows) = sweep(
        dir.path(),
        "m.csv",
        &["--family", "multipartite", "--alpha", "2..3", "--m", "2..3"],
    );
    assert_eq!(rows.len(), 5);
    assert!(rows[1..].iter().all(|r| r[8] == "true"));

    // Infeasible members become error rows; the run continues.
    let (_, rows) = sweep(dir.path(), "e.csv", &["--family", "tight", "--v", "7,9"]);
    assert_eq!(rows.len(), 3);
    assert!(rows[2][9].contains("infeasible"));
    assert_eq!(rows[2][1], "");
}
