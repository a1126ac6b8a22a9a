#![no_main]

use flatfocal::catalog;
use libfuzzer_sys::fuzz_target;

// Names are looked up, never enumerated, so any accepted name must build a
// valid lattice quickly.
fuzz_target!(|data: &[u8]| {
    let Ok(name) = std::str::from_utf8(data) else { return };
    if let Ok(l) = catalog(name) {
        assert!(l.rank() >= 1);
        assert_eq!(l.name(), Some(name));
    }
});
