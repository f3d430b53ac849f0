#![no_main]

use contact_disk::cli::parse_pairs;
use contact_disk::disk::{DividingSet, Sign};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(pairs) = parse_pairs(s) else {
        return;
    };
    // Feed accepted pair lists onward like the CLI does.
    if pairs.len() <= 16 {
        let _ = DividingSet::from_pairs(pairs.len(), &pairs, Sign::Plus);
    }
});
