#![no_main]

use flatfocal::lattice::{parse_lattice, write_lattice};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(l) = parse_lattice(text) {
        // Whatever parses must survive the round trip unchanged.
        let again = parse_lattice(&write_lattice(&l)).expect("canonical form parses");
        assert_eq!(again.gram(), l.gram());
        assert_eq!(again.name(), l.name());
    }
});
