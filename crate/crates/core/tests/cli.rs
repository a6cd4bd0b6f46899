use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TETRAHEDRON: &str = "4 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 2 1\n0 1 3\n0 3 2\n1 2 3\n";

// octahedron with the +z apex pushed below the equator
const DENTED_OCTAHEDRON: &str = "6 8\n1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n0 0 -0.2\n0 0 -1\n\
0 2 4\n2 1 4\n1 3 4\n3 0 4\n2 0 5\n1 2 5\n3 1 5\n0 3 5\n";

fn hullclip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hullclip"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn clip_fixture_prints_hit_line() {
    let dir = TempDir::new().unwrap();
    let mesh = write(dir.path(), "tet.txt", TETRAHEDRON);
    for algo in ["cb", "planes", "sqrt", "oracle"] {
        let o = hullclip(&[
            "clip", "--mesh", s(&mesh), "--seg", "-1", "0.25", "0.25", "1", "0.25", "0.25", "--algo", algo,
        ]);
        assert_eq!(o.status.code(), Some(0), "{algo}");
        let text = stdout(&o);
        assert_eq!(text.lines().next(), Some("HIT 0.5 0.75 0 0.25 0.25 0.5 0.25 0.25"), "{algo}");
        assert!(text.lines().nth(1).unwrap().starts_with("counters "));
    }
}

#[test]
fn clip_miss_prints_miss() {
    let dir = TempDir::new().unwrap();
    let mesh = write(dir.path(), "tet.txt", TETRAHEDRON);
    let o = hullclip(&["clip", "--mesh", s(&mesh), "--seg", "-1", "2", "2", "1", "2", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("MISS"));
}

#[test]
fn clip_line_mode_and_line_files() {
    let dir = TempDir::new().unwrap();
    let mesh = write(dir.path(), "tet.txt", TETRAHEDRON);
    let lines = write(dir.path(), "l.txt", "2\n0.1 0.25 0.25 0.2 0.25 0.25\n-1 2 2 1 2 2\n");
    let o = hullclip(&["clip", "--mesh", s(&mesh), "--lines", s(&lines), "--line", "--algo", "sqrt"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let out: Vec<&str> = text.lines().collect();
    assert_eq!(out.len(), 3);
    assert!(out[0].starts_with("HIT -1"), "{}", out[0]);
    assert_eq!(out[1], "MISS");
}

#[test]
fn clip_usage_errors() {
    let dir = TempDir::new().unwrap();
    let mesh = write(dir.path(), "tet.txt", TETRAHEDRON);
    let bad = write(dir.path(), "bad.txt", "4 4\n0 0 0\n");
    let cases: [&[&str]; 5] = [
        &["clip", "--mesh", s(&mesh)],
        &["clip", "--mesh", s(&mesh), "--seg", "1", "2", "3"],
        &["clip", "--mesh", s(&mesh), "--seg", "0", "0", "0", "0", "0", "0"],
        &["clip", "--mesh", s(&mesh), "--seg", "0", "0", "0", "1", "1", "1", "--algo", "fast"],
        &["clip", "--mesh", s(&bad), "--seg", "0", "0", "0", "1", "1", "1"],
    ];
    for args in cases {
        assert_eq!(hullclip(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(hullclip(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn gen_mesh_writes_header() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("m.txt");
    let o = hullclip(&["gen-mesh", "--n", "500", "--radius", "0.5", "--seed", "7", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "V=252 E=750 F=500");
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().next(), Some("252 500"));

    let again = dir.path().join("m2.txt");
    hullclip(&["gen-mesh", "--n", "500", "--radius", "0.5", "--seed", "7", "--out", s(&again)]);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&again).unwrap());

    let tet = dir.path().join("t.txt");
    assert_eq!(hullclip(&["gen-mesh", "--n", "4", "--radius", "1", "--out", s(&tet)]).status.code(), Some(0));
    assert!(std::fs::read_to_string(&tet).unwrap().starts_with("4 4\n"));
}

#[test]
fn gen_mesh_errors() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("m.txt");
    assert_eq!(hullclip(&["gen-mesh", "--n", "7", "--out", s(&out)]).status.code(), Some(2));
    let unwritable = dir.path().join("missing").join("m.txt");
    assert_eq!(hullclip(&["gen-mesh", "--n", "8", "--out", s(&unwritable)]).status.code(), Some(3));
}

#[test]
fn gen_lines_then_verify() {
    let dir = TempDir::new().unwrap();
    let mesh = write(dir.path(), "tet.txt", TETRAHEDRON);
    for mode in ["hit", "miss"] {
        let lines = dir.path().join(format!("{mode}.txt"));
        let o = hullclip(&[
            "gen-lines", "--mesh", s(&mesh), "--count", "1000", "--mode", mode, "--outer-radius", "2", "--seed", "1",
            "--out", s(&lines),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let text = std::fs::read_to_string(&lines).unwrap();
        assert_eq!(text.lines().next(), Some("1000"));
        let v = hullclip(&["verify", "--mesh", s(&mesh), "--lines", s(&lines)]);
        assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
        assert!(stdout(&v).starts_with("OK 1000"));
        let v = hullclip(&["verify", "--mesh", s(&mesh), "--lines", s(&lines), "--line"]);
        assert_eq!(v.status.code(), Some(0));
    }
}

#[test]
fn verify_rejects_invalid_inputs() {
    let dir = TempDir::new().unwrap();
    let mesh = write(dir.path(), "tet.txt", TETRAHEDRON);
    let dented = write(dir.path(), "dent.txt", DENTED_OCTAHEDRON);
    let lines = write(dir.path(), "l.txt", "1\n-1 0.25 0.25 1 0.25 0.25\n");
    let empty = write(dir.path(), "empty.txt", "0\n");
    assert_eq!(
        hullclip(&["verify", "--mesh", s(&dented), "--lines", s(&lines)]).status.code(),
        Some(4)
    );
    assert_eq!(
        hullclip(&["verify", "--mesh", s(&mesh), "--lines", s(&empty)]).status.code(),
        Some(2)
    );
    let missing = dir.path().join("nope.txt");
    assert_eq!(
        hullclip(&["verify", "--mesh", s(&missing), "--lines", s(&lines)]).status.code(),
        Some(3)
    );
}

#[test]
fn bench_emits_table() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("t.csv");
    let o = hullclip(&[
        "bench", "--n", "10,50,200,1000", "--lines", "200", "--mode", "hit", "--repeats", "1", "--out", s(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let table = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0], "N,10,50,200,1000");
    assert!(lines.iter().all(|l| l.split(',').count() == 5));
    assert_eq!(stdout(&o).lines().count(), 4);

    let o = hullclip(&["bench", "--n", "10", "--lines", "50", "--mode", "miss", "--format", "markdown"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("| N | 10 |"));

    assert_eq!(hullclip(&["bench", "--n", "10", "--lines", "0"]).status.code(), Some(2));
    assert_eq!(hullclip(&["bench", "--n", "9", "--lines", "10"]).status.code(), Some(2));
}
