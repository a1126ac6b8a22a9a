//! Replays the fuzz seeds through the same checks the fuzz targets make, so
//! the parsers stay covered without a nightly toolchain.

use std::fs;
use std::path::PathBuf;

use flatfocal::catalog;
use flatfocal::lattice::{parse_lattice, write_lattice};
use flatfocal::quadspace::{parse_point, parse_scalar};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            let text = String::from_utf8(fs::read(&path).unwrap()).unwrap();
            (path.file_name().unwrap().to_string_lossy().into_owned(), text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn lattice_seeds_round_trip() {
    let mut parsed = 0;
    for (_, text) in seeds("parse_lattice") {
        if let Ok(l) = parse_lattice(&text) {
            let again = parse_lattice(&write_lattice(&l)).unwrap();
            assert_eq!((again.gram(), again.name()), (l.gram(), l.name()));
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn scalar_and_point_seeds_round_trip() {
    for (_, text) in seeds("parse_scalar") {
        if let Ok(x) = parse_scalar(&text) {
            assert_eq!(parse_scalar(&x.to_string()), Ok(x));
        }
    }
    for (_, text) in seeds("parse_point") {
        if let Ok(p) = parse_point(&text) {
            let printed: Vec<String> = p.0.iter().map(ToString::to_string).collect();
            assert_eq!(parse_point(&printed.join(",")), Ok(p));
        }
    }
}

#[test]
fn catalog_seeds() {
    for (name, text) in seeds("catalog") {
        match catalog(&text) {
            Ok(l) => assert_eq!(l.name(), Some(text.as_str())),
            Err(_) => assert!(["D1", "Q", "Z65"].contains(&name.as_str()), "{name} should resolve"),
        }
    }
}
