//! Brute-force ground truth, computed directly from the definitions of
//! repeat, LLR and LR by substring comparison. Nothing here touches suffix
//! arrays or LLR arrays.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::llr::LlrEntry;
use crate::query::{LrAnswer, LrAnswerSet};
use crate::text::Text;

fn check_interval(text: &Text, start: usize, length: usize) -> Result<()> {
    let n = text.len();
    if start == 0 || length == 0 || start + length - 1 > n {
        return Err(Error::InvalidInterval { start, length, n });
    }
    Ok(())
}

/// True iff `S[start .. start + length - 1]` occurs at two or more start
/// positions (overlapping occurrences count).
pub fn is_repeat(text: &Text, start: usize, length: usize) -> Result<bool> {
    check_interval(text, start, length)?;
    let t = text.as_bytes();
    let needle = &t[start - 1..start - 1 + length];
    Ok(t.windows(length)
        .enumerate()
        .any(|(p, w)| p != start - 1 && w == needle))
}

/// Longest repeat starting exactly at `i`.
pub fn oracle_llr(text: &Text, i: usize) -> Result<LrAnswer> {
    text.check_position(i)?;
    // Repeats are closed under taking prefixes, so scan lengths upward until
    // the first non-repeat.
    let max = text.len() - i + 1;
    let mut best = 0;
    for length in 1..=max {
        if !is_repeat(text, i, length)? {
            break;
        }
        best = length;
    }
    Ok((best > 0).then(|| LlrEntry::new(i, best)).into())
}

/// Every maximal-length repeat whose interval contains `k`, by enumerating
/// all intervals covering `k`.
pub fn oracle_all_lr(text: &Text, k: usize) -> Result<LrAnswerSet> {
    text.check_position(k)?;
    let n = text.len();
    // If a covering repeat of length L exists, dropping an endpoint other
    // than k gives one of length L - 1; so stop at the first length with none.
    let mut best = Vec::new();
    for length in 1..=n {
        let lo = k.saturating_sub(length - 1).max(1);
        let hi = k.min(n - length + 1);
        let mut hits = Vec::new();
        for start in lo..=hi {
            if is_repeat(text, start, length)? {
                hits.push(LlrEntry::new(start, length));
            }
        }
        if hits.is_empty() {
            break;
        }
        best = hits;
    }
    Ok(LrAnswerSet::new(best))
}

/// [`oracle_all_lr`] for every position, using per-length occurrence counts
/// instead of repeated substring scans so that texts of a few thousand
/// bytes stay tractable.
pub fn oracle_all_positions(text: &Text) -> Vec<LrAnswerSet> {
    let t = text.as_bytes();
    let n = t.len();
    let mut answers = vec![LrAnswerSet::default(); n];
    let mut open: Vec<usize> = (1..=n).collect();

    let mut length = 1;
    while !open.is_empty() && length <= n {
        let mut counts: HashMap<&[u8], u32> = HashMap::new();
        for w in t.windows(length) {
            *counts.entry(w).or_default() += 1;
        }
        let repeated = |start: usize| counts[&t[start - 1..start - 1 + length]] >= 2;

        let mut still_open = Vec::with_capacity(open.len());
        for &k in &open {
            let lo = k.saturating_sub(length - 1).max(1);
            let hi = k.min(n - length + 1);
            let hits: Vec<LlrEntry> = (lo..=hi)
                .filter(|&s| repeated(s))
                .map(|s| LlrEntry::new(s, length))
                .collect();
            if !hits.is_empty() {
                answers[k - 1] = LrAnswerSet::new(hits);
                still_open.push(k);
            }
        }
        open = still_open;
        length += 1;
    }
    answers
}
