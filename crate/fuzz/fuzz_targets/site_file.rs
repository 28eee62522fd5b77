#![no_main]

use delprox::io::{parse_site_file, write_site_file};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(sites) = parse_site_file(text) {
        // written files parse back to the same sites
        let again = parse_site_file(&write_site_file(&sites)).expect("round trip");
        assert_eq!(again, sites);
    }
});
