#![no_main]

use delprox::io::Selector;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = text.parse::<Selector>() {
        assert_eq!(s.to_string().parse::<Selector>(), Ok(s));
    }
});
