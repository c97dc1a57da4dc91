//! Suffix array, rank array and padded LCP array of a text.
//!
//! Arrays are stored 0-based. The 1-based views used by the rest of the
//! crate's public surface are:
//!
//! * `sa(i)` for `1 <= i <= n` is the start of the `i`-th smallest suffix,
//! * `rank(p)` for `1 <= p <= n` is the position of suffix `p` in that order,
//! * `lcp(i)` for `1 <= i <= n + 1`, with `lcp(1) = lcp(n + 1) = 0` and
//!   `lcp(i)` the common prefix length of suffixes `sa(i - 1)` and `sa(i)`.

mod sais;

use crate::error::{Error, Result};
use crate::text::Text;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixStructures {
    sa: Vec<u32>,
    rank: Vec<u32>,
    lcp: Vec<u32>,
}

impl SuffixStructures {
    /// Builds the structures with SA-IS followed by Kasai's LCP scan.
    pub fn build(text: &Text) -> Self {
        let bytes = text.as_bytes();
        let symbols: Vec<usize> = bytes.iter().map(|&b| b as usize).collect();
        let upper = symbols.iter().copied().max().unwrap_or(0);
        let sa: Vec<u32> = sais::suffix_array(&symbols, upper)
            .into_iter()
            .map(|p| p as u32)
            .collect();
        drop(symbols);

        let mut rank = vec![0u32; sa.len()];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp = kasai(bytes, &sa, &rank);
        Self { sa, rank, lcp }
    }

    /// Wraps caller-supplied 1-based arrays. Only shapes and ranges are
    /// checked here; use [`verify_suffix_structures`] for full validation.
    pub fn from_one_based(sa: &[usize], rank: &[usize], lcp: &[usize]) -> Result<Self> {
        let n = sa.len();
        if rank.len() != n {
            return Err(Error::MalformedStructures("rank and sa lengths differ"));
        }
        if lcp.len() != n + 1 {
            return Err(Error::MalformedStructures("lcp must have n + 1 entries"));
        }
        if sa.iter().chain(rank).any(|&v| v == 0 || v > n) {
            return Err(Error::MalformedStructures("sa/rank entry outside 1..=n"));
        }
        if lcp.iter().any(|&v| v > n) {
            return Err(Error::MalformedStructures("lcp entry longer than the text"));
        }
        Ok(Self {
            sa: sa.iter().map(|&v| (v - 1) as u32).collect(),
            rank: rank.iter().map(|&v| (v - 1) as u32).collect(),
            lcp: lcp.iter().map(|&v| v as u32).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    /// 1-based suffix array, e.g. `[11, 8, 5, ...]` for "mississippi".
    pub fn sa_one_based(&self) -> Vec<usize> {
        self.sa.iter().map(|&p| p as usize + 1).collect()
    }

    pub fn rank_one_based(&self) -> Vec<usize> {
        self.rank.iter().map(|&r| r as usize + 1).collect()
    }

    /// The `n + 1` padded LCP values; index 0 here is `lcp(1)`.
    pub fn lcp_values(&self) -> Vec<usize> {
        self.lcp.iter().map(|&l| l as usize).collect()
    }

    /// Length of the longest repeat starting at 0-based position `p`:
    /// the larger LCP with either lexicographic neighbour.
    #[inline]
    pub(crate) fn llr_len_at(&self, p: usize) -> u32 {
        let r = self.rank[p] as usize;
        self.lcp[r].max(self.lcp[r + 1])
    }

    /// Approximate heap footprint of the three arrays.
    pub fn heap_bytes(&self) -> usize {
        (self.sa.len() + self.rank.len() + self.lcp.len()) * std::mem::size_of::<u32>()
    }
}

pub fn build_suffix_structures(text: &Text) -> SuffixStructures {
    SuffixStructures::build(text)
}

/// Kasai et al.: walks suffixes in text order, reusing `h - 1` from the
/// previous suffix. Output is padded with zero at both ends.
fn kasai(text: &[u8], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n + 1];
    let mut h = 0usize;
    for p in 0..n {
        let r = rank[p] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let q = sa[r - 1] as usize;
        while p + h < n && q + h < n && text[p + h] == text[q + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Checks every structural invariant by direct character comparison.
/// Quadratic in the worst case; intended for tests and self-checks.
pub fn verify_suffix_structures(text: &Text, s: &SuffixStructures) -> bool {
    let t = text.as_bytes();
    let n = t.len();
    if s.sa.len() != n || s.rank.len() != n || s.lcp.len() != n + 1 {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in &s.sa {
        let p = p as usize;
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    if s.sa
        .iter()
        .enumerate()
        .any(|(r, &p)| s.rank[p as usize] as usize != r)
    {
        return false;
    }
    if s.lcp[0] != 0 || s.lcp[n] != 0 {
        return false;
    }
    for i in 1..n {
        let a = &t[s.sa[i - 1] as usize..];
        let b = &t[s.sa[i] as usize..];
        if a >= b {
            return false;
        }
        let common = a.iter().zip(b).take_while(|(x, y)| x == y).count();
        if s.lcp[i] as usize != common {
            return false;
        }
    }
    true
}
