//! Walk-step statistics.
//!
//! A walk's step count is the number of covering entries it examines; the
//! entry that triggers the stop is not counted. Positions without an LR are
//! left out of the aggregate.

use crate::llr::{CompactLlrArray, RawLlrArray};
use crate::query::{walk_compact, walk_raw, LlrSource, QueryPath};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkStats {
    pub path: QueryPath,
    /// Positions that have an LR.
    pub positions: usize,
    pub min_steps: usize,
    pub max_steps: usize,
    pub total_steps: u64,
}

impl WalkStats {
    fn empty(path: QueryPath) -> Self {
        Self {
            path,
            positions: 0,
            min_steps: 0,
            max_steps: 0,
            total_steps: 0,
        }
    }

    fn record(&mut self, steps: usize) {
        if steps == 0 {
            return;
        }
        if self.positions == 0 {
            self.min_steps = steps;
            self.max_steps = steps;
        } else {
            self.min_steps = self.min_steps.min(steps);
            self.max_steps = self.max_steps.max(steps);
        }
        self.positions += 1;
        self.total_steps += steps as u64;
    }

    /// Mean steps per position with an LR; 0 when there are none.
    pub fn avg_steps(&self) -> f64 {
        if self.positions == 0 {
            0.0
        } else {
            self.total_steps as f64 / self.positions as f64
        }
    }

    pub fn has_repeats(&self) -> bool {
        self.positions > 0
    }
}

pub fn compute_walk_stats(source: LlrSource<'_>) -> WalkStats {
    match source {
        LlrSource::Raw(raw) => raw_walk_stats(raw),
        LlrSource::Compact(c, n) => compact_walk_stats(c, n),
    }
}

/// Raw walks can be as long as the text on repetitive inputs, so the counts
/// come from a single sweep instead: while right ends are nondecreasing,
/// the walk from `k` covers exactly `first(k)..=k`, where `first(k)` is the
/// smallest `i` whose LLR reaches `k`, and `first` only moves forward.
/// Arrays without nondecreasing right ends fall back to walking.
pub fn raw_walk_stats(raw: &RawLlrArray) -> WalkStats {
    let len = raw.lengths();
    let n = len.len();
    // Right end of the LLR at i (i - 1 when absent).
    let end = |i: usize| i + len[i - 1] as usize - 1;
    if (2..=n).any(|i| end(i - 1) > end(i)) {
        let mut stats = WalkStats::empty(QueryPath::Raw);
        for k in 1..=n {
            stats.record(walk_raw(raw, k).steps);
        }
        return stats;
    }

    let mut stats = WalkStats::empty(QueryPath::Raw);
    let mut first = 1;
    for k in 1..=n {
        while first <= k && end(first) < k {
            first += 1;
        }
        stats.record(k + 1 - first);
    }
    stats
}

pub fn compact_walk_stats(c: &CompactLlrArray, n: usize) -> WalkStats {
    let mut stats = WalkStats::empty(QueryPath::Compact);
    for k in 1..=n {
        stats.record(walk_compact(c, k).steps);
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::llr::{build_raw_llr, compact_llr_sequential};
    use crate::parallel::ExecPolicy;
    use crate::suffix::build_suffix_structures;
    use crate::text::Text;
    use proptest::prelude::*;

    fn arrays(t: &[u8]) -> (RawLlrArray, CompactLlrArray) {
        let raw = build_raw_llr(
            &build_suffix_structures(&Text::new(t).unwrap()),
            ExecPolicy::sequential(),
        );
        let c = compact_llr_sequential(&raw);
        (raw, c)
    }

    fn walked(raw: &RawLlrArray) -> WalkStats {
        let mut s = WalkStats::empty(QueryPath::Raw);
        for k in 1..=raw.n() {
            s.record(walk_raw(raw, k).steps);
        }
        s
    }

    #[test]
    fn unary_text() {
        let (raw, c) = arrays(b"aaaa");
        let r = raw_walk_stats(&raw);
        assert_eq!((r.min_steps, r.max_steps, r.positions), (1, 3, 4));
        assert_eq!(r.avg_steps(), 2.25);
        let s = compact_walk_stats(&c, 4);
        assert_eq!((s.min_steps, s.max_steps), (1, 2));
        assert_eq!(s.avg_steps(), 1.5);
    }

    #[test]
    fn no_repeats() {
        let (raw, c) = arrays(b"abc");
        for s in [raw_walk_stats(&raw), compact_walk_stats(&c, 3)] {
            assert!(!s.has_repeats());
            assert_eq!((s.min_steps, s.max_steps, s.avg_steps()), (0, 0, 0.0));
        }
    }

    #[test]
    fn compact_never_walks_longer() {
        let (raw, c) = arrays(b"mississippi");
        let r = raw_walk_stats(&raw);
        let s = compact_walk_stats(&c, 11);
        assert!(s.max_steps <= r.max_steps);
        assert!(s.avg_steps() <= r.avg_steps());
    }

    #[test]
    fn fallback_for_arbitrary_lengths() {
        let raw = RawLlrArray::from_lengths(vec![3, 1, 0, 2, 1]);
        assert_eq!(raw_walk_stats(&raw), walked(&raw));
    }

    proptest! {
        #[test]
        fn sweep_equals_instrumented_walk(t in prop::collection::vec(prop::sample::select(b"ab".to_vec()), 0..80)) {
            let (raw, c) = arrays(&t);
            let swept = raw_walk_stats(&raw);
            prop_assert_eq!(swept, walked(&raw));
            let compact = compact_walk_stats(&c, t.len());
            prop_assert_eq!(compact.positions, swept.positions);
            prop_assert!(compact.total_steps <= swept.total_steps);
        }
    }
}
