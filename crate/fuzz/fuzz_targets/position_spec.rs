//! The `--pos` / `--range` argument parser.
#![no_main]

use libfuzzer_sys::fuzz_target;
use repeatscan::PositionSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = s.parse::<PositionSpec>() {
        if let Ok(range) = spec.resolve(1000) {
            assert!(*range.start() >= 1 && *range.end() <= 1000);
        }
    }
});
