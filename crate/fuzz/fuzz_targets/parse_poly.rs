#![no_main]

use chnorm::kernel::parse::parse_poly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&vars, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let vars = usize::from(vars % 10);
    if let Ok(p) = parse_poly(text, vars) {
        assert_eq!(parse_poly(&p.to_string(), vars).unwrap(), p);
    }
});
