//! Arbitrary LLR length arrays (not necessarily produced by a text) through
//! both compaction routes. The first byte picks the worker count.
#![no_main]

use libfuzzer_sys::fuzz_target;
use repeatscan::{compact_llr_parallel, compact_llr_sequential, ExecPolicy, RawLlrArray};

fuzz_target!(|data: &[u8]| {
    let Some((&workers, lengths)) = data.split_first() else {
        return;
    };
    let raw = RawLlrArray::from_lengths(lengths.iter().map(|&b| u32::from(b % 16)).collect());
    let policy = ExecPolicy::parallel(usize::from(workers % 16) + 1).unwrap();
    let seq = compact_llr_sequential(&raw);
    assert_eq!(compact_llr_parallel(&raw, policy), seq);
    for w in seq.entries().windows(2) {
        assert!(w[0].start() < w[1].start());
    }
});
