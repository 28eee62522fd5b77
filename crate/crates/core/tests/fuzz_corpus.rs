//! Replays the checked-in fuzz corpus through the same assertions the fuzz
//! targets make, so seeds stay meaningful without a fuzzing toolchain.

use std::fs;
use std::path::PathBuf;

use delprox::commands::parse_frame;
use delprox::delaunay::SiteSet;
use delprox::geometry::number::{format_exact, parse_decimal, parse_exact};
use delprox::io::{parse_constraint_file, parse_segments, parse_site_file, write_site_file, ResultDocument, Selector};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let text = fs::read_to_string(&path).unwrap();
            (path.file_name().unwrap().to_string_lossy().into_owned(), text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn site_file_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("site_file") {
        if let Ok(sites) = parse_site_file(&text) {
            accepted += 1;
            assert_eq!(parse_site_file(&write_site_file(&sites)).unwrap(), sites, "{name}");
        }
    }
    assert!(accepted >= 2);
}

#[test]
fn constraint_file_seeds() {
    let sites = SiteSet::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]).unwrap();
    let mut accepted = 0;
    for (_, text) in seeds("constraint_file") {
        let _ = parse_segments(&text);
        accepted += usize::from(parse_constraint_file(&text, &sites).is_ok());
    }
    assert!(accepted >= 2);
}

#[test]
fn selector_seeds() {
    for (name, text) in seeds("selector") {
        if let Ok(s) = text.parse::<Selector>() {
            assert_eq!(s.to_string().parse::<Selector>(), Ok(s), "{name}");
        }
    }
}

#[test]
fn document_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("document") {
        if let Ok(doc) = ResultDocument::from_json(&text) {
            accepted += 1;
            let _ = doc.site_set();
            let _ = doc.mesh();
            assert_eq!(
                ResultDocument::from_json(&doc.to_compact_json()).unwrap(),
                doc,
                "{name}"
            );
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn decimal_seeds() {
    for (name, text) in seeds("decimal") {
        if let Ok(v) = parse_decimal(&text) {
            assert_eq!(parse_exact(&format_exact(&v)), Ok(v), "{name}");
        }
        if let Ok(v) = parse_exact(&text) {
            assert_eq!(parse_exact(&format_exact(&v)), Ok(v), "{name}");
        }
    }
}

#[test]
fn frame_seeds() {
    let ok: Vec<bool> = seeds("frame").iter().map(|(_, t)| parse_frame(t).is_ok()).collect();
    // empty, ok, short, spaces
    assert_eq!(ok, [false, true, false, true]);
}
