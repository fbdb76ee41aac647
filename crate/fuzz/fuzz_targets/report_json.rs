//! Report JSON: `from_json` rejects bad input with an error, and accepted
//! reports survive a second round trip unchanged.

#![no_main]

use cosetlab::report::AnalysisReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = AnalysisReport::from_json(text) {
        let json = report.to_json();
        let back = AnalysisReport::from_json(&json).expect("re-encoded report must parse");
        assert_eq!(back.to_json(), json);
    }
});
