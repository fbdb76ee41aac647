//! Character-table ingest on arbitrary text.

#![no_main]

use cosetlab::tablefmt;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 64 * 1024 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(table) = tablefmt::parse(text) {
        let exported = tablefmt::export(&table);
        let back = tablefmt::parse(&exported).expect("exported table must parse");
        assert_eq!(tablefmt::export(&back), exported);
        // violations are reported, never panicked on
        let _ = table.violations();
    }
});
