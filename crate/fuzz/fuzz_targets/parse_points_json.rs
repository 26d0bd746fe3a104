#![no_main]

use convexseq_cli::input::{parse_points_json, points_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((points, relax)) = parse_points_json(text) {
        let again = parse_points_json(&points_to_json(&points, relax)).unwrap();
        assert_eq!(again, (points, relax));
    }
});
