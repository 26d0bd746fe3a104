#![no_main]

use convexseq::parse_scalar;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_scalar(text) {
        // canonical text re-parses to the same value
        assert_eq!(parse_scalar(&v.to_string()).unwrap(), v);
    }
});
