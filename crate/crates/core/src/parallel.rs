//! Shared-memory data-parallel execution.
//!
//! Everything above this module is written as pure per-index work with
//! disjoint output slots. Work is split into contiguous chunks, one per
//! worker, and run on scoped threads. Results never depend on the worker
//! count.

use std::num::NonZeroUsize;
use std::ops::{Add, Range};
use std::thread;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExecPolicy {
    mode: ExecMode,
    workers: NonZeroUsize,
}

impl ExecPolicy {
    pub fn sequential() -> Self {
        Self {
            mode: ExecMode::Sequential,
            workers: NonZeroUsize::MIN,
        }
    }

    pub fn parallel(workers: usize) -> Result<Self> {
        let workers = NonZeroUsize::new(workers).ok_or(Error::ZeroWorkers)?;
        Ok(Self {
            mode: ExecMode::Parallel,
            workers,
        })
    }

    /// Parallel with one worker per available hardware thread.
    pub fn available() -> Self {
        let workers = thread::available_parallelism().unwrap_or(NonZeroUsize::MIN);
        Self {
            mode: ExecMode::Parallel,
            workers,
        }
    }

    pub fn mode(&self) -> ExecMode {
        self.mode
    }

    /// Configured worker count; 1 when sequential.
    pub fn workers(&self) -> usize {
        match self.mode {
            ExecMode::Sequential => 1,
            ExecMode::Parallel => self.workers.get(),
        }
    }
}

impl Default for ExecPolicy {
    fn default() -> Self {
        Self::sequential()
    }
}

/// Splits `0..len` into at most `parts` contiguous, non-empty ranges of
/// near-equal size. Returns no ranges when `len == 0`.
pub fn partition(len: usize, parts: usize) -> Vec<Range<usize>> {
    let parts = parts.clamp(1, len.max(1));
    let base = len / parts;
    let extra = len % parts;
    let mut out = Vec::with_capacity(parts);
    let mut lo = 0;
    for p in 0..parts {
        let hi = lo + base + usize::from(p < extra);
        if hi > lo {
            out.push(lo..hi);
        }
        lo = hi;
    }
    out
}

/// Runs `body(i, &mut out[i])` exactly once for every index of `out`.
///
/// The body may read shared immutable state; its only write target is the
/// slot it is handed.
pub fn parallel_for<T, F>(out: &mut [T], policy: ExecPolicy, body: F)
where
    T: Send,
    F: Fn(usize, &mut T) + Sync,
{
    let chunks = partition(out.len(), policy.workers());
    let ends: Vec<usize> = chunks.iter().map(|r| r.end).collect();
    parallel_segments(out, &ends, policy, |seg, slots| {
        let base = chunks[seg].start;
        for (offset, slot) in slots.iter_mut().enumerate() {
            body(base + offset, slot);
        }
    });
}

/// Splits `out` at the given segment end offsets and runs
/// `body(segment_index, segment)` for every segment, concurrently when the
/// policy is parallel.
///
/// `ends` must be nondecreasing and its last element must equal `out.len()`
/// (empty `ends` is allowed only for empty `out`).
pub fn parallel_segments<T, F>(out: &mut [T], ends: &[usize], policy: ExecPolicy, body: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    assert_eq!(
        ends.last().copied().unwrap_or(0),
        out.len(),
        "segments must cover the output"
    );
    let mut segments = Vec::with_capacity(ends.len());
    let mut rest = out;
    let mut lo = 0;
    for &end in ends {
        assert!(end >= lo, "segment ends must be nondecreasing");
        let (head, tail) = rest.split_at_mut(end - lo);
        segments.push(head);
        rest = tail;
        lo = end;
    }

    if policy.mode() == ExecMode::Sequential || segments.len() <= 1 {
        for (seg, slots) in segments.into_iter().enumerate() {
            body(seg, slots);
        }
        return;
    }

    let body = &body;
    thread::scope(|scope| {
        let mut segments = segments.into_iter().enumerate();
        // The calling thread takes the first segment itself.
        let first = segments.next();
        for (seg, slots) in segments {
            scope.spawn(move || body(seg, slots));
        }
        if let Some((seg, slots)) = first {
            body(seg, slots);
        }
    });
}

/// Inclusive prefix sum.
///
/// The parallel schedule is reduce-then-scan: per-chunk totals, a short
/// sequential scan over those totals, then each chunk scans locally from
/// its offset.
pub fn parallel_scan<T>(values: &[T], policy: ExecPolicy) -> Vec<T>
where
    T: Copy + Default + Add<Output = T> + Send + Sync,
{
    let mut out = vec![T::default(); values.len()];
    let chunks = partition(values.len(), policy.workers());
    if chunks.len() <= 1 || policy.mode() == ExecMode::Sequential {
        scan_into(values, T::default(), &mut out);
        return out;
    }

    let mut totals = vec![T::default(); chunks.len()];
    parallel_for(&mut totals, policy, |c, total| {
        *total = values[chunks[c].clone()]
            .iter()
            .fold(T::default(), |acc, &v| acc + v);
    });
    let mut offsets = Vec::with_capacity(chunks.len());
    let mut running = T::default();
    for &t in &totals {
        offsets.push(running);
        running = running + t;
    }

    let ends: Vec<usize> = chunks.iter().map(|r| r.end).collect();
    parallel_segments(&mut out, &ends, policy, |c, slots| {
        scan_into(&values[chunks[c].clone()], offsets[c], slots);
    });
    out
}

fn scan_into<T>(values: &[T], mut acc: T, out: &mut [T])
where
    T: Copy + Add<Output = T>,
{
    for (slot, &v) in out.iter_mut().zip(values) {
        acc = acc + v;
        *slot = acc;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq_scan(values: &[u32]) -> Vec<u32> {
        let mut acc = 0;
        values
            .iter()
            .map(|v| {
                acc += v;
                acc
            })
            .collect()
    }

    #[test]
    fn partition_covers_range_contiguously() {
        assert!(partition(0, 4).is_empty());
        assert_eq!(partition(3, 8), vec![0..1, 1..2, 2..3]);
        assert_eq!(partition(10, 3), vec![0..4, 4..7, 7..10]);
        assert_eq!(partition(5, 0), vec![0..5]);
    }

    #[test]
    fn zero_workers_rejected() {
        assert_eq!(ExecPolicy::parallel(0), Err(Error::ZeroWorkers));
        assert_eq!(ExecPolicy::sequential().workers(), 1);
        assert_eq!(ExecPolicy::parallel(7).unwrap().workers(), 7);
    }

    #[test]
    fn empty_range_is_a_noop() {
        let mut out: Vec<u32> = vec![];
        parallel_for(&mut out, ExecPolicy::parallel(4).unwrap(), |_, _| {
            panic!("no indices")
        });
        assert!(parallel_scan::<u32>(&[], ExecPolicy::parallel(4).unwrap()).is_empty());
    }

    #[test]
    fn eight_entry_flags_with_eight_workers() {
        let raw = [3u32, 2, 1, 1, 3, 2, 1, 1];
        let mut flags = vec![0u32; raw.len()];
        parallel_for(&mut flags, ExecPolicy::parallel(8).unwrap(), |i, f| {
            *f = u32::from(raw[i] > 0 && (i == 0 || raw[i] >= raw[i - 1]));
        });
        assert_eq!(flags, [1, 0, 0, 1, 1, 0, 0, 1]);
        assert_eq!(
            parallel_scan(&flags, ExecPolicy::parallel(3).unwrap()),
            [1, 1, 1, 2, 3, 3, 3, 4]
        );
    }

    #[test]
    fn every_index_runs_once() {
        let mut hits = vec![0u32; 1001];
        parallel_for(&mut hits, ExecPolicy::parallel(7).unwrap(), |i, h| {
            *h += 1 + i as u32
        });
        assert!(hits.iter().enumerate().all(|(i, &h)| h == 1 + i as u32));
    }

    proptest! {
        #[test]
        fn scan_matches_sequential(
            values in prop::collection::vec(0u32..=1, 0..1000),
            workers in prop::sample::select(vec![1usize, 2, 7]),
        ) {
            let expected = seq_scan(&values);
            prop_assert_eq!(&parallel_scan(&values, ExecPolicy::parallel(workers).unwrap()), &expected);
            prop_assert_eq!(&parallel_scan(&values, ExecPolicy::sequential()), &expected);
        }

        #[test]
        fn parallel_for_matches_sequential(len in 0usize..500, workers in 1usize..12) {
            let f = |i: usize| (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) >> 7;
            let mut par = vec![0u64; len];
            parallel_for(&mut par, ExecPolicy::parallel(workers).unwrap(), |i, s| *s = f(i));
            let seq: Vec<u64> = (0..len).map(f).collect();
            prop_assert_eq!(par, seq);
        }
    }
}
