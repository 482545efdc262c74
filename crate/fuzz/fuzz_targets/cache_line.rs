#![no_main]

use gvverify::cache::parse_line;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else {
        return;
    };
    if let Some(entry) = parse_line(line) {
        assert_eq!(parse_line(&entry.to_line()), Some(entry));
    }
});
