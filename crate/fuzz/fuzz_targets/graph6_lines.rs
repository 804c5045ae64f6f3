#![no_main]

use libfuzzer_sys::fuzz_target;
use oddcycles::verifier::parse_graph6_lines;

fuzz_target!(|data: &[u8]| {
    if let Ok(graphs) = parse_graph6_lines(data) {
        let nonblank = data
            .split(|&b| b == b'\n')
            .filter(|l| !l.iter().all(u8::is_ascii_whitespace))
            .count();
        assert_eq!(graphs.len(), nonblank);
    }
});
