#![no_main]

use libfuzzer_sys::fuzz_target;
use oddcycles::{named_graph, NamedGraphId};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(id) = s.parse::<NamedGraphId>() else { return };
    assert_eq!(id.to_string().parse::<NamedGraphId>().unwrap(), id);
    if let Ok(g) = named_graph(id) {
        g.validate().unwrap();
    }
});
