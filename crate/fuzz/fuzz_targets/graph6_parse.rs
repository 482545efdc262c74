#![no_main]

use gvcrit::graph6;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = graph6::parse(text) {
        let again = graph6::parse(&graph6::emit(&g)).expect("emitted graph6 parses");
        assert_eq!(again, g);
    }
});
