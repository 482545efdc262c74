#![no_main]

use gvcrit::enumeration::read_graph6_all;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let (graphs, errors) = read_graph6_all(data);
    let lines = data
        .split(|&b| b == b'\n')
        .filter(|l| !l.is_empty())
        .count();
    assert!(graphs.len() + errors.len() <= lines);
});
