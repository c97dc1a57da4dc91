//! Arbitrary bytes through SA-IS and Kasai, checked by direct comparison.
#![no_main]

use libfuzzer_sys::{fuzz_target, Corpus};
use repeatscan::{build_raw_llr, build_suffix_structures, verify_suffix_structures, ExecPolicy, Text};

fuzz_target!(|data: &[u8]| -> Corpus {
    // The verifier is quadratic.
    if data.len() > 4096 {
        return Corpus::Reject;
    }
    let text = Text::new(data).unwrap();
    let s = build_suffix_structures(&text);
    assert!(verify_suffix_structures(&text, &s));

    let raw = build_raw_llr(&s, ExecPolicy::sequential());
    for i in 1..raw.n() {
        assert!(raw.at(i) <= raw.at(i + 1) + 1);
    }
    Corpus::Keep
});
