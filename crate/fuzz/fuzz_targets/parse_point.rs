#![no_main]

use flatfocal::quadspace::parse_point;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_point(text) {
        let printed: Vec<String> = p.0.iter().map(ToString::to_string).collect();
        assert_eq!(parse_point(&printed.join(",")), Ok(p));
    }
});
