//! Bundled data, caching and the command-line front end.

use std::path::{Path, PathBuf};

use cherednik::cells::cuspidal_family;
use cherednik::chars::{load_table, save_table, write_table, CharacterTable, TableProvider};
use cherednik::cli::{run, Cli};
use cherednik::rootsys::CartanType;
use clap::Parser;

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("cherednik-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn bundled() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn text(t: CharacterTable) -> String {
    write_table(&t)
}

fn cli(args: &[&str]) -> (i32, String) {
    let c = Cli::try_parse_from(std::iter::once("cherednik").chain(args.iter().copied())).unwrap();
    let mut buf = Vec::new();
    let code = run(&c.command, &mut buf).unwrap();
    (code, String::from_utf8(buf).unwrap())
}

#[test]
fn family_sign_pairs_match_tables() {
    let p = TableProvider::default();
    let types = [
        CartanType::B(2),
        CartanType::D(4),
        CartanType::G2,
        CartanType::F4,
        CartanType::E6,
        CartanType::E7,
        CartanType::E8,
    ];
    for ty in types {
        if !p.available(ty) {
            continue;
        }
        let t = p.table(ty).unwrap();
        let fam = cuspidal_family(ty).unwrap().unwrap();
        for m in &fam.members {
            let i = t.find(&m.to_string()).unwrap();
            assert_eq!(t.label(t.sgn_twist(i)), &fam.sgn(m), "{ty} {m}");
        }
    }
}

#[test]
fn check_data_passes_on_bundle() {
    let dir = bundled();
    let (code, out) = cli(&["check-data", "--data-dir", dir.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}

#[test]
fn corrupted_e8_file_fails_validation() {
    let dir = scratch("corrupt");
    let text = std::fs::read_to_string(bundled().join("e8.tbl")).unwrap();
    // flip the lowest bit of the last value in the file
    let end = text.trim_end().rfind(|c: char| c.is_ascii_digit()).unwrap();
    let mut bytes = text.into_bytes();
    bytes[end] ^= 1;
    std::fs::write(dir.join("e8.tbl"), bytes).unwrap();
    let d = dir.to_str().unwrap();
    let (code, out) = cli(&["check-data", "--data-dir", d]);
    assert_eq!(code, 1);
    assert!(out.starts_with("FAIL e8.tbl"), "{out}");
    let (code, out) = cli(&["verify-paper", "--only", "table-integrity", "--data-dir", d, "--format", "records"]);
    assert_eq!(code, 1);
    assert!(out.lines().any(|l| l.contains("table-integrity/E8") && l.contains("\tFAIL\t")), "{out}");
    // E7 is absent from this directory and is skipped, not failed
    assert!(out.lines().any(|l| l.contains("table-integrity/E7") && l.contains("\tSKIP\t")), "{out}");
}

#[test]
fn cache_round_trip_and_discard() {
    let dir = scratch("cache");
    let cache = |d: &Path| TableProvider::new(bundled(), Some(d.to_path_buf()));
    let first = text(cache(&dir).table(CartanType::G2).unwrap());
    let file = std::fs::read_dir(&dir).unwrap().next().unwrap().unwrap().path();
    assert!(file.file_name().unwrap().to_string_lossy().contains(".v"), "cache key carries the engine version");
    assert_eq!(text(load_table(&file).unwrap()), first);
    let second = text(cache(&dir).table(CartanType::G2).unwrap());
    assert_eq!(first, second);
    // a corrupted entry is discarded and recomputed
    let damaged = std::fs::read_to_string(&file).unwrap().replacen("irrep", "irrep x", 1);
    std::fs::write(&file, damaged).unwrap();
    assert_eq!(text(cache(&dir).table(CartanType::G2).unwrap()), first);
    assert_eq!(text(load_table(&file).unwrap()), first);
    save_table(&load_table(&file).unwrap(), &dir.join("copy.tbl")).unwrap();
    assert_eq!(text(load_table(&dir.join("copy.tbl")).unwrap()), first);
}

#[test]
fn output_is_deterministic() {
    let a = cli(&["classify", "--type", "F4", "--format", "records"]);
    let b = cli(&["classify", "--type", "F4", "--format", "records"]);
    assert_eq!(a, b);
    assert_eq!(a.1.lines().count(), 17);
}

#[test]
fn e7_classification_is_empty() {
    if !TableProvider::default().available(CartanType::E7) {
        return;
    }
    assert_eq!(cli(&["classify", "--type", "E7"]).1, "E7: none\n");
}
