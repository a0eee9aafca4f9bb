use std::path::Path;
use std::process::Command;

use grascat::tables::{paper_table, TABLE_NAMES};

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn library_tables_match_golden_files() {
    for name in TABLE_NAMES {
        assert_eq!(paper_table(name).unwrap().render(), golden(name), "{name}");
    }
}

#[test]
fn command_line_tables_match_golden_files() {
    for name in TABLE_NAMES {
        let out = Command::new(env!("CARGO_BIN_EXE_grascat"))
            .args(["paper-tables", "--which", name, "--format", "table"])
            .output()
            .unwrap();
        assert!(out.status.success(), "{name}");
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(name), "{name}");
    }
}

#[test]
fn all_tables_concatenate_the_golden_files() {
    let out = Command::new(env!("CARGO_BIN_EXE_grascat")).args(["paper-tables", "--format", "table"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in TABLE_NAMES {
        assert!(text.contains(&golden(name)), "{name}");
    }
}
