#![no_main]

use contact_disk::twisted::{gaussian_eliminate, is_contractible, TwistedComplex};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(c) = TwistedComplex::from_json_str(s) else {
        return;
    };
    if c.len() > 10 {
        return;
    }
    let emitted = c.to_json().to_string();
    assert_eq!(TwistedComplex::from_json_str(&emitted).unwrap(), c);
    // Elimination keeps the validated invariants and removes every
    // identity entry.
    let r = gaussian_eliminate(&c);
    assert!(TwistedComplex::make(r.n(), r.objects().to_vec(), &r.entries()).is_ok());
    for (i, j) in r.entries() {
        assert_ne!(r.objects()[i], r.objects()[j]);
    }
    let _ = is_contractible(&c);
});
