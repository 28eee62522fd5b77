#![no_main]

use delprox::io::ResultDocument;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = ResultDocument::from_json(text) {
        let _ = doc.site_set();
        let _ = doc.mesh();
        assert_eq!(
            ResultDocument::from_json(&doc.to_compact_json()).expect("round trip"),
            doc
        );
    }
});
