//! Left-bounded longest repeats (LLRs).
//!
//! The LLR at position `i` is the longest repeat starting exactly at `i`.
//! Its length is the larger LCP between suffix `i` and its two neighbours
//! in suffix-array order. The raw array keeps one length per position; the
//! compact array keeps only the LLRs that are not contained in another
//! LLR, as `(start, length)` pairs.
//!
//! Compaction has two routes with identical results: a single sequential
//! pass, and the data-parallel flag / inclusive prefix sum / scatter
//! pipeline.

use std::fmt;

use crate::parallel::{parallel_for, parallel_scan, parallel_segments, partition, ExecPolicy};
use crate::suffix::SuffixStructures;

/// Per-position LLR lengths; `len(i) == 0` means no repeat starts at `i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawLlrArray {
    len: Vec<u32>,
}

impl RawLlrArray {
    /// Wraps lengths indexed from position 1.
    pub fn from_lengths(len: Vec<u32>) -> Self {
        Self { len }
    }

    pub fn lengths(&self) -> &[u32] {
        &self.len
    }

    pub fn n(&self) -> usize {
        self.len.len()
    }

    /// LLR length at 1-based position `i`. Panics outside `1..=n`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.len[i - 1] as usize
    }

    /// The LLR starting at `i`, if one exists.
    pub fn entry(&self, i: usize) -> Option<LlrEntry> {
        match self.at(i) {
            0 => None,
            length => Some(LlrEntry::new(i, length)),
        }
    }

    pub fn heap_bytes(&self) -> usize {
        self.len.len() * std::mem::size_of::<u32>()
    }
}

/// A substring `S[start ..= start + length - 1]`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LlrEntry {
    start: u32,
    length: u32,
}

impl LlrEntry {
    pub fn new(start: usize, length: usize) -> Self {
        debug_assert!(start >= 1 && length >= 1);
        Self {
            start: start as u32,
            length: length as u32,
        }
    }

    pub fn start(&self) -> usize {
        self.start as usize
    }

    pub fn length(&self) -> usize {
        self.length as usize
    }

    /// Last covered position.
    pub fn end(&self) -> usize {
        self.start() + self.length() - 1
    }

    pub fn covers(&self, k: usize) -> bool {
        self.start() <= k && k <= self.end()
    }

    pub fn contains(&self, other: &LlrEntry) -> bool {
        self.start() <= other.start() && other.end() <= self.end()
    }
}

impl fmt::Display for LlrEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.start, self.length)
    }
}

/// The useful LLRs, ordered by start. Both starts and ends strictly
/// increase when built from a raw array whose right ends never decrease.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CompactLlrArray {
    entries: Vec<LlrEntry>,
}

impl CompactLlrArray {
    pub fn entries(&self) -> &[LlrEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn heap_bytes(&self) -> usize {
        self.entries.len() * std::mem::size_of::<LlrEntry>()
    }
}

impl From<Vec<LlrEntry>> for CompactLlrArray {
    fn from(entries: Vec<LlrEntry>) -> Self {
        Self { entries }
    }
}

pub fn build_raw_llr(s: &SuffixStructures, policy: ExecPolicy) -> RawLlrArray {
    let mut len = vec![0u32; s.len()];
    parallel_for(&mut len, policy, |p, slot| *slot = s.llr_len_at(p));
    RawLlrArray { len }
}

/// Keep rule: `len(i) > 0` and `len(i) >= len(i - 1)` (no predecessor
/// for `i = 1`).
#[inline]
fn keep(len: &[u32], p: usize) -> bool {
    len[p] > 0 && (p == 0 || len[p] >= len[p - 1])
}

pub fn compact_llr_sequential(raw: &RawLlrArray) -> CompactLlrArray {
    let mut entries = Vec::new();
    let mut prev = 0;
    for (p, &l) in raw.len.iter().enumerate() {
        if l > 0 && l >= prev {
            entries.push(LlrEntry {
                start: p as u32 + 1,
                length: l,
            });
        }
        prev = l;
    }
    CompactLlrArray { entries }
}

/// One flag per position: 1 iff the LLR there is kept by compaction.
pub fn compute_flags(raw: &RawLlrArray, policy: ExecPolicy) -> Vec<u32> {
    let mut flags = vec![0u32; raw.n()];
    parallel_for(&mut flags, policy, |p, f| *f = u32::from(keep(&raw.len, p)));
    flags
}

/// Inclusive prefix sum of the flags; the last value is the compact size.
pub fn prefix_sum(flags: &[u32], policy: ExecPolicy) -> Vec<u32> {
    parallel_scan(flags, policy)
}

/// Writes every flagged `(i, len(i))` to output slot `prefix_sum(i)`.
///
/// Each input chunk owns the contiguous output range between the prefix
/// sums at its boundaries, so chunks write disjoint slices.
pub fn scatter_compact(
    raw: &RawLlrArray,
    flags: &[u32],
    prefix_sum: &[u32],
    policy: ExecPolicy,
) -> CompactLlrArray {
    assert_eq!(flags.len(), raw.n());
    assert_eq!(prefix_sum.len(), raw.n());
    let size = prefix_sum.last().copied().unwrap_or(0) as usize;
    let mut entries = vec![
        LlrEntry {
            start: 0,
            length: 0
        };
        size
    ];

    let chunks = partition(raw.n(), policy.workers());
    let ends: Vec<usize> = chunks
        .iter()
        .map(|c| prefix_sum[c.end - 1] as usize)
        .collect();
    parallel_segments(&mut entries, &ends, policy, |c, out| {
        let chunk = chunks[c].clone();
        let base = if chunk.start == 0 {
            0
        } else {
            prefix_sum[chunk.start - 1] as usize
        };
        for p in chunk {
            if flags[p] == 1 {
                out[prefix_sum[p] as usize - 1 - base] = LlrEntry {
                    start: p as u32 + 1,
                    length: raw.len[p],
                };
            }
        }
    });
    CompactLlrArray { entries }
}

/// The three-stage data-parallel compaction.
pub fn compact_llr_parallel(raw: &RawLlrArray, policy: ExecPolicy) -> CompactLlrArray {
    let flags = compute_flags(raw, policy);
    let ps = prefix_sum(&flags, policy);
    scatter_compact(raw, &flags, &ps, policy)
}

/// Sequential pass when the policy is sequential, the pipeline otherwise.
pub fn compact_llr(raw: &RawLlrArray, policy: ExecPolicy) -> CompactLlrArray {
    match policy.mode() {
        crate::parallel::ExecMode::Sequential => compact_llr_sequential(raw),
        crate::parallel::ExecMode::Parallel => compact_llr_parallel(raw, policy),
    }
}
