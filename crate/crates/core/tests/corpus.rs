use std::fs;
use std::path::PathBuf;

use ordtop::io::{self, StructureFile};

fn corpus() -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus");
    let mut files: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read_to_string(&p).unwrap(),
            )
        })
        .collect()
}

#[test]
fn corpus_has_fifty_valid_files() {
    let files = corpus();
    assert_eq!(files.len(), 50);
    for (name, text) in &files {
        io::load(text).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn canonical_round_trip_is_identity() {
    for (name, text) in corpus() {
        let first = io::load(&text).unwrap();
        let canon = io::canonicalize(&text).unwrap();
        let again = io::load(&canon).unwrap();
        assert_eq!(first.structure, again.structure, "{name}");
        assert_eq!(io::canonicalize(&canon).unwrap(), canon, "{name}");
        let file = StructureFile::parse(&canon).unwrap();
        assert_eq!(file.to_json(), canon, "{name}");
    }
}

#[test]
fn dot_export_is_stable() {
    for (name, text) in corpus() {
        let s = io::load(&text).unwrap().structure;
        let canon = io::load(&io::canonicalize(&text).unwrap())
            .unwrap()
            .structure;
        for spec in [false, true] {
            let a = io::to_dot(&s, spec).unwrap();
            assert_eq!(a, io::to_dot(&s, spec).unwrap(), "{name}");
            assert_eq!(a, io::to_dot(&canon, spec).unwrap(), "{name}");
            let edges: Vec<&str> = a.lines().filter(|l| l.contains("->")).collect();
            let mut sorted = edges.clone();
            sorted.sort_by_key(|l| {
                let nums: Vec<usize> = l
                    .split(|c: char| !c.is_ascii_digit())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().unwrap())
                    .collect();
                nums
            });
            assert_eq!(edges, sorted, "{name}");
        }
    }
}
