#![no_main]

use delprox::geometry::number::{format_exact, parse_decimal, parse_exact};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_decimal(text) {
        assert_eq!(parse_exact(&format_exact(&v)), Ok(v.clone()));
    }
    if let Ok(v) = parse_exact(text) {
        assert_eq!(parse_exact(&format_exact(&v)), Ok(v));
    }
});
