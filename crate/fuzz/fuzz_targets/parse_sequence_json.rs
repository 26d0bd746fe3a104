#![no_main]

use convexseq::{analyze_sequence, find_pivot, RealSeq};
use convexseq_cli::input::parse_sequence_json;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(values) = parse_sequence_json(text) {
        if let Ok(u) = RealSeq::new(values) {
            if analyze_sequence(&u).is_convex {
                find_pivot(&u).unwrap();
            }
        }
    }
});
