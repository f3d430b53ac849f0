#![no_main]

use contact_disk::disk::DividingSet;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = DividingSet::from_json_str(s) {
        // Emission is canonical: a round trip is the identity and stable.
        let emitted = d.to_json().to_string();
        let again = DividingSet::from_json_str(&emitted).unwrap();
        assert_eq!(again, d);
        assert_eq!(again.to_json().to_string(), emitted);
        if d.circles() == 0 {
            // The face tree exists and the Euler number matches its signs.
            let tree = d.faces().unwrap();
            assert_eq!(tree.edges.len() + 1, tree.face_count());
            let _ = d.euler_number().unwrap();
        }
    }
});
