#![no_main]

use chnorm::kernel::parse::{parse_element, parse_vectors};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&dim, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let dim = usize::from(dim % 10);
    if let Ok(v) = parse_element(text, dim) {
        assert_eq!(v.len(), dim);
    }
    let _ = parse_vectors(text, dim);
});
