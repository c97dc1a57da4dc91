//! Longest repeat (LR) queries per text position.
//!
//! Every LR is an LLR, so the LR covering `k` is the longest LLR covering
//! `k`. Over the raw array that is a leftward walk from `k`; the walk stops
//! at the first LLR that ends before `k`, since right ends never decrease.
//! Over the compact array a binary search finds the first entry ending at
//! or after `k`, then a rightward walk runs until an entry starts after `k`.
//!
//! Leftmost answers break ties by smallest start. All-ties answers are
//! listed by increasing start on both paths.

use std::ops::RangeInclusive;

use crate::error::Result;
use crate::llr::{build_raw_llr, compact_llr, CompactLlrArray, LlrEntry, RawLlrArray};
use crate::parallel::{parallel_for, ExecPolicy};
use crate::suffix::SuffixStructures;
use crate::text::check_position;

/// The leftmost LR covering a position, or none when the character there
/// occurs only once in the text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LrAnswer(Option<LlrEntry>);

impl LrAnswer {
    pub const NONE: LrAnswer = LrAnswer(None);

    pub fn exists(&self) -> bool {
        self.0.is_some()
    }

    pub fn entry(&self) -> Option<LlrEntry> {
        self.0
    }

    /// Start position, `-1` when absent.
    pub fn start(&self) -> i64 {
        self.0.map_or(-1, |e| e.start() as i64)
    }

    /// Length, `0` when absent.
    pub fn length(&self) -> usize {
        self.0.map_or(0, |e| e.length())
    }
}

impl From<Option<LlrEntry>> for LrAnswer {
    fn from(e: Option<LlrEntry>) -> Self {
        Self(e)
    }
}

impl From<LlrEntry> for LrAnswer {
    fn from(e: LlrEntry) -> Self {
        Self(Some(e))
    }
}

/// Every LR covering a position: equal lengths, increasing starts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LrAnswerSet(Vec<LlrEntry>);

impl LrAnswerSet {
    pub fn new(mut entries: Vec<LlrEntry>) -> Self {
        entries.sort_unstable();
        Self(entries)
    }

    pub fn entries(&self) -> &[LlrEntry] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn leftmost(&self) -> LrAnswer {
        LrAnswer(self.0.first().copied())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QueryMode {
    Leftmost,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QueryPath {
    Raw,
    Compact,
}

/// The array a query walks over.
#[derive(Debug, Clone, Copy)]
pub enum LlrSource<'a> {
    Raw(&'a RawLlrArray),
    Compact(&'a CompactLlrArray, usize),
}

impl<'a> LlrSource<'a> {
    /// `n` must be the text length the compact array was built from.
    pub fn compact(c: &'a CompactLlrArray, n: usize) -> Self {
        Self::Compact(c, n)
    }

    pub fn n(&self) -> usize {
        match self {
            Self::Raw(r) => r.n(),
            Self::Compact(_, n) => *n,
        }
    }
}

/// Answers for a contiguous run of positions, in position order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answers {
    Leftmost(Vec<LrAnswer>),
    All(Vec<LrAnswerSet>),
}

impl Answers {
    pub fn len(&self) -> usize {
        match self {
            Self::Leftmost(a) => a.len(),
            Self::All(a) => a.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Outcome of one walk: the best entry seen and how many covering entries
/// were examined before the stop condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Walk {
    pub best: Option<LlrEntry>,
    pub steps: usize,
}

/// Leftward walk from `k`; `>=` keeps moving the answer left on ties.
pub(crate) fn walk_raw(raw: &RawLlrArray, k: usize) -> Walk {
    let len = raw.lengths();
    let mut best: Option<LlrEntry> = None;
    let mut best_len = 0;
    let mut steps = 0;
    for i in (1..=k).rev() {
        let l = len[i - 1] as usize;
        if i + l <= k {
            break;
        }
        steps += 1;
        if l >= best_len {
            best_len = l;
            best = Some(LlrEntry::new(i, l));
        }
    }
    Walk { best, steps }
}

/// Rightward walk from the binary-search hit; strict `>` keeps the first
/// (leftmost) of equally long entries.
pub(crate) fn walk_compact(c: &CompactLlrArray, k: usize) -> Walk {
    let entries = c.entries();
    let from = first_ending_at_or_after(entries, k);
    let mut best: Option<LlrEntry> = None;
    let mut steps = 0;
    for e in &entries[from..] {
        if e.start() > k {
            break;
        }
        steps += 1;
        if best.is_none_or(|b| e.length() > b.length()) {
            best = Some(*e);
        }
    }
    Walk { best, steps }
}

fn first_ending_at_or_after(entries: &[LlrEntry], k: usize) -> usize {
    entries.partition_point(|e| e.end() < k)
}

pub fn leftmost_lr_raw(raw: &RawLlrArray, k: usize) -> Result<LrAnswer> {
    check_position(k, raw.n())?;
    Ok(LrAnswer(walk_raw(raw, k).best))
}

pub fn all_lr_raw(raw: &RawLlrArray, k: usize) -> Result<LrAnswerSet> {
    check_position(k, raw.n())?;
    let len = raw.lengths();
    let covering = (1..=k).rev().take_while(|&i| i + len[i - 1] as usize > k);
    let Some(max) = covering.clone().map(|i| len[i - 1]).max() else {
        return Ok(LrAnswerSet::default());
    };
    let mut found: Vec<LlrEntry> = covering
        .filter(|&i| len[i - 1] == max)
        .map(|i| LlrEntry::new(i, max as usize))
        .collect();
    found.reverse();
    Ok(LrAnswerSet(found))
}

/// Index (0-based) of the first compact entry whose right end is `>= k`.
pub fn find_start_index(c: &CompactLlrArray, n: usize, k: usize) -> Result<Option<usize>> {
    check_position(k, n)?;
    let t = first_ending_at_or_after(c.entries(), k);
    Ok((t < c.len()).then_some(t))
}

pub fn leftmost_lr_compact(c: &CompactLlrArray, n: usize, k: usize) -> Result<LrAnswer> {
    check_position(k, n)?;
    Ok(LrAnswer(walk_compact(c, k).best))
}

pub fn all_lr_compact(c: &CompactLlrArray, n: usize, k: usize) -> Result<LrAnswerSet> {
    check_position(k, n)?;
    let entries = c.entries();
    let from = first_ending_at_or_after(entries, k);
    let covering = entries[from..].iter().take_while(|e| e.start() <= k);
    let Some(max) = covering.clone().map(|e| e.length()).max() else {
        return Ok(LrAnswerSet::default());
    };
    Ok(LrAnswerSet(
        covering.filter(|e| e.length() == max).copied().collect(),
    ))
}

/// Answers every position in `positions` (1-based, inclusive), splitting the
/// positions across workers.
pub fn query_range(
    source: LlrSource<'_>,
    positions: RangeInclusive<usize>,
    mode: QueryMode,
    policy: ExecPolicy,
) -> Result<Answers> {
    let n = source.n();
    let (first, last) = (*positions.start(), *positions.end());
    if first > last {
        return Ok(empty_answers(mode));
    }
    check_position(first, n)?;
    check_position(last, n)?;
    let count = last - first + 1;

    Ok(match mode {
        QueryMode::Leftmost => {
            let mut out = vec![LrAnswer::NONE; count];
            parallel_for(&mut out, policy, |j, slot| {
                let k = first + j;
                *slot = LrAnswer(match source {
                    LlrSource::Raw(raw) => walk_raw(raw, k).best,
                    LlrSource::Compact(c, _) => walk_compact(c, k).best,
                });
            });
            Answers::Leftmost(out)
        }
        QueryMode::All => {
            let mut out = vec![LrAnswerSet::default(); count];
            parallel_for(&mut out, policy, |j, slot| {
                let k = first + j;
                // Positions were range-checked above.
                *slot = match source {
                    LlrSource::Raw(raw) => all_lr_raw(raw, k),
                    LlrSource::Compact(c, n) => all_lr_compact(c, n, k),
                }
                .unwrap_or_default();
            });
            Answers::All(out)
        }
    })
}

fn empty_answers(mode: QueryMode) -> Answers {
    match mode {
        QueryMode::Leftmost => Answers::Leftmost(vec![]),
        QueryMode::All => Answers::All(vec![]),
    }
}

/// Builds the LLR array for `path` and answers positions `1..=n`.
pub fn all_positions(
    s: &SuffixStructures,
    mode: QueryMode,
    path: QueryPath,
    policy: ExecPolicy,
) -> Answers {
    let n = s.len();
    if n == 0 {
        return empty_answers(mode);
    }
    let raw = build_raw_llr(s, policy);
    let result = match path {
        QueryPath::Raw => query_range(LlrSource::Raw(&raw), 1..=n, mode, policy),
        QueryPath::Compact => {
            let compact = compact_llr(&raw, policy);
            query_range(LlrSource::compact(&compact, n), 1..=n, mode, policy)
        }
    };
    result.expect("full position range is valid for a non-empty text")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::llr::compact_llr_sequential;
    use crate::oracle;
    use crate::suffix::build_suffix_structures;
    use crate::text::Text;
    use proptest::prelude::*;

    struct Fixture {
        text: Text,
        raw: RawLlrArray,
        compact: CompactLlrArray,
    }

    impl Fixture {
        fn new(s: &str) -> Self {
            Self::from_bytes(s.as_bytes().to_vec())
        }

        fn from_bytes(b: Vec<u8>) -> Self {
            let text = Text::new(b).unwrap();
            let raw = build_raw_llr(&build_suffix_structures(&text), ExecPolicy::sequential());
            let compact = compact_llr_sequential(&raw);
            Self { text, raw, compact }
        }

        fn n(&self) -> usize {
            self.text.len()
        }
    }

    fn e(start: usize, length: usize) -> LlrEntry {
        LlrEntry::new(start, length)
    }

    #[test]
    fn leftmost_raw_examples() {
        let m = Fixture::new("mississippi");
        assert_eq!(leftmost_lr_raw(&m.raw, 1), Ok(LrAnswer::NONE));
        assert_eq!(leftmost_lr_raw(&m.raw, 5), Ok(e(2, 4).into()));
        assert_eq!(
            leftmost_lr_raw(&Fixture::new("aaaa").raw, 4),
            Ok(e(2, 3).into())
        );
        assert_eq!(
            leftmost_lr_raw(&m.raw, 12),
            Err(Error::PositionOutOfRange { k: 12, n: 11 })
        );
        assert_eq!(
            leftmost_lr_raw(&m.raw, 0),
            Err(Error::PositionOutOfRange { k: 0, n: 11 })
        );
    }

    #[test]
    fn all_raw_examples() {
        let m = Fixture::new("mississippi");
        assert_eq!(all_lr_raw(&m.raw, 5).unwrap().entries(), [e(2, 4), e(5, 4)]);
        assert!(all_lr_raw(&Fixture::new("abc").raw, 2).unwrap().is_empty());
        assert_eq!(
            all_lr_raw(&Fixture::new("abcabcddbca").raw, 2)
                .unwrap()
                .entries(),
            [e(1, 3), e(2, 3)]
        );
        assert!(all_lr_raw(&m.raw, 99).is_err());
    }

    #[test]
    fn find_start_index_examples() {
        let m = Fixture::new("mississippi");
        // Ends are 5, 8, 9, 10, 11.
        assert_eq!(find_start_index(&m.compact, 11, 9), Ok(Some(2)));
        assert_eq!(m.compact.entries()[2], e(9, 1));
        assert_eq!(
            find_start_index(&CompactLlrArray::default(), 5, 3),
            Ok(None)
        );
        assert_eq!(find_start_index(&m.compact, 11, 1), Ok(Some(0)));
        assert_eq!(m.compact.entries()[0].start(), 2);
        assert!(find_start_index(&m.compact, 11, 12).is_err());
    }

    #[test]
    fn leftmost_compact_examples() {
        let m = Fixture::new("mississippi");
        assert_eq!(leftmost_lr_compact(&m.compact, 11, 9), Ok(e(9, 1).into()));
        assert_eq!(leftmost_lr_compact(&m.compact, 11, 1), Ok(LrAnswer::NONE));
        let a = Fixture::new("aaaa");
        assert_eq!(a.compact.entries(), [e(1, 3), e(2, 3)]);
        assert_eq!(leftmost_lr_compact(&a.compact, 4, 4), Ok(e(2, 3).into()));
        assert!(leftmost_lr_compact(&a.compact, 4, 5).is_err());
    }

    #[test]
    fn all_compact_examples() {
        let m = Fixture::new("mississippi");
        assert_eq!(
            all_lr_compact(&m.compact, 11, 5).unwrap().entries(),
            [e(2, 4), e(5, 4)]
        );
        let s = Fixture::new("abcabcddbca");
        assert_eq!(
            all_lr_compact(&s.compact, s.n(), 2).unwrap().entries(),
            [e(1, 3), e(2, 3)]
        );
        assert!(all_lr_compact(&Fixture::new("abc").compact, 3, 1)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn all_positions_mississippi() {
        let s = build_suffix_structures(&Text::new("mississippi").unwrap());
        let expected: Vec<LrAnswer> = [
            None,
            Some((2, 4)),
            Some((2, 4)),
            Some((2, 4)),
            Some((2, 4)),
            Some((5, 4)),
            Some((5, 4)),
            Some((5, 4)),
            Some((9, 1)),
            Some((10, 1)),
            Some((11, 1)),
        ]
        .iter()
        .map(|p| LrAnswer::from(p.map(|(s, l)| e(s, l))))
        .collect();
        let text = Text::new("mississippi").unwrap();
        let brute: Vec<LrAnswer> = (1..=11)
            .map(|k| oracle::oracle_all_lr(&text, k).unwrap().leftmost())
            .collect();
        assert_eq!(brute, expected);
        for path in [QueryPath::Raw, QueryPath::Compact] {
            for policy in [ExecPolicy::sequential(), ExecPolicy::parallel(4).unwrap()] {
                assert_eq!(
                    all_positions(&s, QueryMode::Leftmost, path, policy),
                    Answers::Leftmost(expected.clone())
                );
            }
        }
    }

    #[test]
    fn all_positions_trivial_texts() {
        let s = build_suffix_structures(&Text::new("a").unwrap());
        assert_eq!(
            all_positions(
                &s,
                QueryMode::Leftmost,
                QueryPath::Compact,
                ExecPolicy::sequential()
            ),
            Answers::Leftmost(vec![LrAnswer::NONE])
        );
        let s = build_suffix_structures(&Text::new("").unwrap());
        assert!(
            all_positions(&s, QueryMode::All, QueryPath::Raw, ExecPolicy::sequential()).is_empty()
        );
    }

    #[test]
    fn query_range_subrange_and_bounds() {
        let m = Fixture::new("mississippi");
        let got = query_range(
            LlrSource::Raw(&m.raw),
            5..=6,
            QueryMode::Leftmost,
            ExecPolicy::sequential(),
        )
        .unwrap();
        assert_eq!(got, Answers::Leftmost(vec![e(2, 4).into(), e(5, 4).into()]));
        assert!(query_range(
            LlrSource::Raw(&m.raw),
            5..=12,
            QueryMode::All,
            ExecPolicy::sequential()
        )
        .is_err());
        #[allow(clippy::reversed_empty_ranges)]
        let empty = query_range(
            LlrSource::Raw(&m.raw),
            6..=5,
            QueryMode::All,
            ExecPolicy::sequential(),
        )
        .unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn steps_on_unary_text() {
        let a = Fixture::new("aaaa");
        let raw: Vec<usize> = (1..=4).map(|k| walk_raw(&a.raw, k).steps).collect();
        assert_eq!(raw, [1, 2, 3, 3]);
        let compact: Vec<usize> = (1..=4).map(|k| walk_compact(&a.compact, k).steps).collect();
        assert_eq!(compact, [1, 2, 2, 1]);
    }

    proptest! {
        #[test]
        fn paths_agree_with_oracle(t in prop::collection::vec(prop::sample::select(b"abcd".to_vec()), 1..=12)) {
            let f = Fixture::from_bytes(t);
            let n = f.n();
            for k in 1..=n {
                let truth = oracle::oracle_all_lr(&f.text, k).unwrap();
                let raw_all = all_lr_raw(&f.raw, k).unwrap();
                prop_assert_eq!(&raw_all, &truth);
                prop_assert_eq!(&all_lr_compact(&f.compact, n, k).unwrap(), &truth);
                let left = leftmost_lr_raw(&f.raw, k).unwrap();
                prop_assert_eq!(left, truth.leftmost());
                prop_assert_eq!(leftmost_lr_compact(&f.compact, n, k).unwrap(), left);

                // Every answer is the LLR at its own start.
                for a in raw_all.entries() {
                    prop_assert_eq!(f.raw.at(a.start()), a.length());
                }
                // No answer exactly when the character at k is unique.
                let c = f.text.at(k).unwrap();
                let singleton = f.text.as_bytes().iter().filter(|&&b| b == c).count() == 1;
                prop_assert_eq!(!left.exists(), singleton);
            }
        }
    }
}
