#![no_main]

use chnorm::algebra::format::{emit_algebra, parse_algebra};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(alg) = parse_algebra(text) {
        // anything accepted must survive a round trip
        let again = parse_algebra(&emit_algebra(&alg)).expect("emitted file parses");
        assert_eq!(again, alg);
        let _ = alg.validate();
    }
});
