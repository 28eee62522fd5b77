#![no_main]

use delprox::delaunay::SiteSet;
use delprox::io::{parse_constraint_file, parse_segments};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = parse_segments(text);
    let sites = SiteSet::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]).expect("distinct");
    let _ = parse_constraint_file(text, &sites);
});
