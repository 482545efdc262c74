#![no_main]

use gvcrit::{graph6, parse_graph_spec, MAX_ORDER};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_graph_spec(text) {
        assert!(g.order() <= MAX_ORDER);
        assert_eq!(
            parse_graph_spec(&graph6::emit(&g)).expect("graph6 round trip"),
            g
        );
    }
});
