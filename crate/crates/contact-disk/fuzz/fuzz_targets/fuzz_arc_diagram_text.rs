#![no_main]

use contact_disk::arcdiag::ArcDiagram;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(z) = ArcDiagram::from_text(s) else {
        return;
    };
    if z.segment_count() > 16 || z.handle_count() > 16 {
        return;
    }
    // The plain-text emission parses back to the same diagram.
    let again = ArcDiagram::from_text(&z.to_text()).unwrap();
    assert_eq!(again, z);
    // Tracing terminates and is consistent with the handle count.
    let inv = z.surface_invariants();
    assert_eq!(
        inv.euler_char,
        z.segment_count() as i64 - z.handle_count() as i64
    );
    let _ = z.validate();
});
