//! Longest repeat covering every position of a text.
//!
//! For each position `k` of a byte string, find the longest substring that
//! occurs at least twice and whose interval contains `k` (the leftmost such
//! substring, or all of them). Answers are read off left-bounded longest
//! repeats, computed from the suffix, rank and LCP arrays, either from the
//! raw per-position array or from a compacted array of the LLRs that are
//! not contained in another. Both paths run sequentially or on a
//! shared-memory worker pool with identical output.
//!
//! ```
//! use repeatscan::{all_positions, build_suffix_structures, ExecPolicy, QueryMode, QueryPath, Text, Answers};
//!
//! let text = Text::new("mississippi").unwrap();
//! let s = build_suffix_structures(&text);
//! let Answers::Leftmost(lr) = all_positions(&s, QueryMode::Leftmost, QueryPath::Compact, ExecPolicy::sequential())
//! else { unreachable!() };
//! assert_eq!((lr[4].start(), lr[4].length()), (2, 4)); // "issi" covers position 5
//! assert!(!lr[0].exists()); // 'm' occurs once
//! ```

pub mod bench;
pub mod error;
pub mod llr;
pub mod oracle;
pub mod output;
pub mod parallel;
pub mod positions;
pub mod query;
pub mod stats;
pub mod suffix;
pub mod text;

pub use bench::{run_benchmark, RunReport};
pub use error::{Error, Result};
pub use llr::{
    build_raw_llr, compact_llr, compact_llr_parallel, compact_llr_sequential, compute_flags,
    prefix_sum, scatter_compact, CompactLlrArray, LlrEntry, RawLlrArray,
};
pub use parallel::{parallel_for, parallel_scan, ExecMode, ExecPolicy};
pub use positions::PositionSpec;
pub use query::{
    all_lr_compact, all_lr_raw, all_positions, find_start_index, leftmost_lr_compact,
    leftmost_lr_raw, query_range, Answers, LlrSource, LrAnswer, LrAnswerSet, QueryMode, QueryPath,
};
pub use stats::{compute_walk_stats, WalkStats};
pub use suffix::{build_suffix_structures, verify_suffix_structures, SuffixStructures};
pub use text::Text;
