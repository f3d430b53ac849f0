#![no_main]

use contact_disk::bypass::{bypass_triangle, Equator};
use contact_disk::disk::gamma_of_word;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    // Validate against a fixed host matching.
    let d = gamma_of_word(4, &[]).unwrap();
    let Ok(e) = Equator::from_json_str(s, &d) else {
        return;
    };
    // Any accepted arc supports the surgery triangle, and the triangle
    // preserves the Euler number and the basepoint sign.
    let t = bypass_triangle(&d, &e).unwrap();
    let e0 = d.euler_number().unwrap();
    for g in [&t.gamma1, &t.gamma2] {
        assert_eq!(g.euler_number().unwrap(), e0);
        assert_eq!(g.sign(), d.sign());
    }
});
