#![no_main]

use convexseq::{analyze_sequence, RealSeq};
use convexseq_cli::input::parse_sequence_csv;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(values) = parse_sequence_csv(text) {
        if let Ok(u) = RealSeq::new(values) {
            let _ = analyze_sequence(&u);
        }
    }
});
