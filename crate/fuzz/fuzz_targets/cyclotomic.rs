#![no_main]

use cosetlab::Cyclotomic;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(c) = text.parse::<Cyclotomic>() {
        let back: Cyclotomic = c.to_string().parse().expect("printed value must parse");
        assert_eq!(back, c);
    }
});
