#![no_main]

use libfuzzer_sys::fuzz_target;
use oddcycles::verifier::CorpusSource;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(source) = s.parse::<CorpusSource>() {
        assert_eq!(source.to_string().parse::<CorpusSource>().unwrap(), source);
    }
});
