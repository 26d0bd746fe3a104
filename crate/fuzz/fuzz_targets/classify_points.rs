#![no_main]

use convexseq::{classify, oracle_classify, PointSeq};
use convexseq_cli::input::parse_points_csv;
use libfuzzer_sys::fuzz_target;

// Any instance that parses and validates must get the same verdict from the
// slope classifier and the orientation oracle.
fuzz_target!(|data: &[u8]| {
    let Some((&flag, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let Ok(points) = parse_points_csv(text) else { return };
    let Ok(p) = PointSeq::new(points, flag & 1 == 1) else {
        return;
    };
    let main = classify(&p);
    let oracle = oracle_classify(&p).unwrap();
    assert_eq!((main.kind, main.strict), (oracle.kind, oracle.strict), "{p:?}");
});
