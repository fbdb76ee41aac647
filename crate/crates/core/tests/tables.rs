mod support;

use std::path::PathBuf;

use cosetlab::{catalog_sweep_list, tablefmt};
use support::ctx;
use support::oracle::{compare, oracle_table};

const GOLDEN: &[&str] = &["sym:3", "sym:4", "alt:4", "alt:5", "q8", "dihedral:4", "sl:2:3"];

fn golden_path(spec: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{}.tbl", spec.replace(':', "_")))
}

/// Golden files are written only with `COSETLAB_BLESS=1`, and only after
/// the computed table agrees with the oracle.
#[test]
fn golden_tables_match_oracle_and_computation() {
    let bless = std::env::var("COSETLAB_BLESS").is_ok_and(|v| v == "1");
    for &spec in GOLDEN {
        let c = ctx(spec);
        let oracle = oracle_table(c.group(), c.classes().reps());
        let path = golden_path(spec);
        if bless {
            compare(c.table(), &oracle).unwrap_or_else(|e| panic!("{spec}: {e}"));
            std::fs::write(&path, tablefmt::export(c.table())).unwrap();
        }
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let golden = tablefmt::ingest(&text).unwrap_or_else(|e| panic!("{spec}: {e}"));
        compare(&golden, &oracle).unwrap_or_else(|e| panic!("{spec} golden vs oracle: {e}"));
        let diffs = tablefmt::diff(&golden, c.table());
        assert!(diffs.is_empty(), "{spec}: {diffs:?}");
    }
}

#[test]
fn oracle_agrees_on_small_catalog() {
    for spec in catalog_sweep_list(200) {
        let c = ctx(&spec.to_string());
        let oracle = oracle_table(c.group(), c.classes().reps());
        compare(c.table(), &oracle).unwrap_or_else(|e| panic!("{spec}: {e}"));
    }
}

#[test]
fn oracle_agrees_on_paper_groups() {
    for spec in ["agammal1:8", "psl:2:7", "direct:(cyclic:2),(alt:4)"] {
        let c = ctx(spec);
        let oracle = oracle_table(c.group(), c.classes().reps());
        compare(c.table(), &oracle).unwrap_or_else(|e| panic!("{spec}: {e}"));
    }
}

#[test]
fn export_round_trips_for_catalog() {
    for spec in catalog_sweep_list(400) {
        let c = ctx(&spec.to_string());
        let text = tablefmt::export(c.table());
        let back = tablefmt::ingest(&text).unwrap();
        assert!(tablefmt::diff(c.table(), &back).is_empty(), "{spec}");
        assert_eq!(tablefmt::export(&back), text, "{spec}");
    }
}

#[test]
fn oracle_rejects_a_corrupted_value() {
    let c = ctx("sym:4");
    let oracle = oracle_table(c.group(), c.classes().reps());
    let text = tablefmt::export(c.table());
    let last = text.lines().last().unwrap().to_string();
    let swapped = last.replacen("[0:1]", "[0:-1]", 1);
    assert_ne!(swapped, last);
    let bad = text.replace(&last, &swapped);
    let t = tablefmt::parse(&bad).unwrap();
    assert!(compare(&t, &oracle).is_err());
}
