#![no_main]

use contact_disk::arcdiag::QuiverPresentation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(p) = QuiverPresentation::from_text(s) else {
        return;
    };
    // Accepted presentations type-check and round-trip through emission.
    p.type_check().unwrap();
    let again = QuiverPresentation::from_text(&p.to_text()).unwrap();
    assert_eq!(again, p);
});
