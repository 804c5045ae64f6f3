#![no_main]

use libfuzzer_sys::fuzz_target;
use oddcycles::{parse_graph6, to_graph6};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph6(data) {
        g.validate().unwrap();
        let line = to_graph6(&g).unwrap();
        assert_eq!(parse_graph6(line.as_bytes()).unwrap(), g);
    }
});
