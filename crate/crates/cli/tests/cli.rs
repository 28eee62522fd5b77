use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use delprox::io::ResultDocument;

const FAN: &str = "DELPROX-SITES 1\n0 0\n4 0\n0 4\n1 1\n";
const SQUARE: &str = "DELPROX-SITES 1\n0 0\n2 0\n2 2\n0 2\n";

fn delprox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delprox"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn stdout_doc(out: &Output) -> ResultDocument {
    ResultDocument::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap()
}

#[test]
fn gen_then_triangulate() {
    let dir = tempfile::tempdir().unwrap();
    let sites = dir.path().join("sites.txt");
    let out = delprox(&[
        "--seed",
        "11",
        "gen",
        "25",
        "--distribution",
        "clustered",
        "--out",
        sites.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let out = delprox(&["triangulate", sites.to_str().unwrap(), "--voronoi"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = stdout_doc(&out);
    assert_eq!(doc.sites.len(), 25);
    assert!(doc.edges.iter().all(|e| e.locally_delaunay));
    assert_eq!(doc.voronoi.unwrap().cells.len(), 25);
}

#[test]
fn fan_triangulation() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "fan.txt", FAN);
    let out = delprox(&["triangulate", f.to_str().unwrap()]);
    let doc = stdout_doc(&out);
    let mut tris: Vec<[usize; 3]> = doc
        .triangles
        .iter()
        .map(|t| {
            let mut t = *t;
            t.sort();
            t
        })
        .collect();
    tris.sort();
    assert_eq!(tris, [[0, 1, 3], [0, 2, 3], [1, 2, 3]]);
    assert_eq!(doc.edges.len(), 6);
}

#[test]
fn constrained_triangulation_keeps_segments() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s.txt", "DELPROX-SITES 1\n0 0\n4 0\n2 5\n1 1\n3 1\n");
    let l = write(dir.path(), "l.txt", "# one segment\n3 1 2 5\n");
    let out = delprox(&["triangulate", f.to_str().unwrap(), "--constraints", l.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_doc(&out);
    let e = doc
        .edges
        .iter()
        .find(|e| (e.a, e.b) == (2, 4))
        .expect("constraint kept");
    assert!(e.constrained);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let fan = write(dir.path(), "fan.txt", FAN);
    let fan = fan.to_str().unwrap();
    let line = write(dir.path(), "line.txt", "DELPROX-SITES 1\n0 0\n1 1\n2 2\n");
    let bad = write(dir.path(), "bad.txt", "DELPROX-SITES 1\n0 0\n1 x\n");
    let missing = dir.path().join("missing.txt");

    let code = |args: &[&str]| delprox(args).status.code();
    assert_eq!(code(&["triangulate", line.to_str().unwrap()]), Some(1));
    assert_eq!(code(&["triangulate", bad.to_str().unwrap()]), Some(2));
    assert_eq!(code(&["triangulate", missing.to_str().unwrap()]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["check", fan, "--suite", "nope"]), Some(2));
    assert_eq!(code(&["--frame", "0,0,1", "render", fan]), Some(2));
    assert_eq!(code(&["--frame", "0,0,1,1", "render", fan]), Some(1));
    assert_eq!(code(&["--format", "xml", "triangulate", fan]), Some(2));
    assert_eq!(code(&["query", fan, "strong", "t:0", "v:1"]), Some(2));
    assert_eq!(code(&["check", fan]), Some(0));
    let out = delprox(&["triangulate", bad.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn square_lemma2_is_skipped_not_failed() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "sq.txt", SQUARE);
    let out = delprox(&["check", f.to_str().unwrap(), "--suite", "lemma2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_doc(&out);
    assert_eq!(doc.checks.len(), 1);
    assert_eq!(doc.checks[0].status, "degenerate-skip");
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "fan.txt", FAN);
    for what in ["delaunay", "voronoi", "overlay", "regions"] {
        let svg = dir.path().join(format!("{what}.svg"));
        let out = delprox(&[
            "render",
            f.to_str().unwrap(),
            "--what",
            what,
            "--out",
            svg.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        let text = fs::read_to_string(&svg).unwrap();
        assert!(text.starts_with("<?xml") && text.trim_end().ends_with("</svg>"));
    }
}

#[test]
fn queries() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "fan.txt", FAN);
    let f = f.to_str().unwrap();
    let holds = |rel: &str, a: &str, b: &str| {
        let out = delprox(&["--format", "json-like", "query", f, rel, a, b]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(out.stdout.iter().filter(|&&c| c == b'\n').count(), 1);
        stdout_doc(&out).queries[0].holds
    };
    assert!(holds("near", "t:0", "t:2"));
    assert!(holds("strong", "t:0", "t:1"));
    assert!(!holds("far", "e:0-1", "v:1"));
    assert!(holds("far", "v:0", "e:1-2"));
    assert!(holds("strong", "c:1", "c:2"));
}

#[test]
fn document_input_and_quiet() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "fan.txt", FAN);
    let doc = dir.path().join("fan.json");
    delprox(&["triangulate", f.to_str().unwrap(), "--out", doc.to_str().unwrap()]);
    let a = delprox(&["check", f.to_str().unwrap()]);
    let b = delprox(&["check", doc.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let q = delprox(&["--quiet", "check", doc.to_str().unwrap()]);
    assert_eq!(q.status.code(), Some(0));
    assert!(q.stdout.is_empty());
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let sites = dir.path().join("s.txt");
    delprox(&[
        "--seed",
        "5",
        "gen",
        "40",
        "--distribution",
        "cocircular",
        "--out",
        sites.to_str().unwrap(),
    ]);
    let s = sites.to_str().unwrap();
    for args in [
        vec!["triangulate", s, "--voronoi"],
        vec!["check", s],
        vec!["render", s, "--what", "overlay"],
    ] {
        let first = delprox(&args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        for _ in 0..2 {
            assert_eq!(delprox(&args).stdout, first.stdout, "{args:?}");
        }
    }
}
