//! Group spec grammar: parsing never panics, and accepted specs print back
//! to text that parses to the same spec.
//!
//! ```bash
//! cd fuzz
//! cargo +nightly fuzz run group_spec corpus/group_spec
//! ```

#![no_main]

use cosetlab::GroupSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = text.parse::<GroupSpec>() {
        let again: GroupSpec = spec.to_string().parse().expect("printed spec must parse");
        assert_eq!(again, spec);
    }
});
