//! Stage timing for one query configuration.

use std::fmt;
use std::time::{Duration, Instant};

use crate::llr::{build_raw_llr, compact_llr};
use crate::parallel::{ExecMode, ExecPolicy};
use crate::query::{query_range, Answers, LlrSource, QueryMode, QueryPath};
use crate::suffix::SuffixStructures;
use crate::text::Text;

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub dataset: String,
    pub n: usize,
    pub sigma: usize,
    pub mode: QueryMode,
    pub path: QueryPath,
    pub exec: ExecMode,
    pub workers: usize,
    pub include_build: bool,
    /// SA, rank and LCP construction.
    pub build: Duration,
    pub raw_llr: Duration,
    /// Zero on the raw path.
    pub compaction: Duration,
    pub queries: Duration,
    /// Heap bytes of the arrays alive during the queries.
    pub array_bytes: usize,
    /// Positions with at least one LR.
    pub covered_positions: usize,
}

impl RunReport {
    /// Raw LLR + compaction + queries, plus construction when
    /// `include_build` is set.
    pub fn total(&self) -> Duration {
        let t = self.raw_llr + self.compaction + self.queries;
        if self.include_build {
            t + self.build
        } else {
            t
        }
    }
}

/// Runs one configuration end to end and records the stage times. I/O is
/// never timed.
pub fn run_benchmark(
    dataset: &str,
    text: &Text,
    mode: QueryMode,
    path: QueryPath,
    policy: ExecPolicy,
    include_build: bool,
) -> (RunReport, Answers) {
    let n = text.len();
    let t0 = Instant::now();
    let structures = SuffixStructures::build(text);
    let build = t0.elapsed();

    let t1 = Instant::now();
    let raw = build_raw_llr(&structures, policy);
    let raw_llr = t1.elapsed();

    let (compaction, queries, answers, array_bytes) = match path {
        QueryPath::Raw => {
            let t = Instant::now();
            let answers = query_range(LlrSource::Raw(&raw), 1..=n, mode, policy)
                .expect("full range is valid");
            (
                Duration::ZERO,
                t.elapsed(),
                answers,
                structures.heap_bytes() + raw.heap_bytes(),
            )
        }
        QueryPath::Compact => {
            let t = Instant::now();
            let compact = compact_llr(&raw, policy);
            let compaction = t.elapsed();
            let t = Instant::now();
            let answers = query_range(LlrSource::compact(&compact, n), 1..=n, mode, policy)
                .expect("full range is valid");
            (
                compaction,
                t.elapsed(),
                answers,
                structures.heap_bytes() + compact.heap_bytes(),
            )
        }
    };

    let covered_positions = match &answers {
        Answers::Leftmost(a) => a.iter().filter(|a| a.exists()).count(),
        Answers::All(a) => a.iter().filter(|s| !s.is_empty()).count(),
    };
    let report = RunReport {
        dataset: dataset.to_owned(),
        n,
        sigma: text.sigma(),
        mode,
        path,
        exec: policy.mode(),
        workers: policy.workers(),
        include_build,
        build,
        raw_llr,
        compaction,
        queries,
        array_bytes,
        covered_positions,
    };
    (report, answers)
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            QueryMode::Leftmost => "leftmost",
            QueryMode::All => "all",
        };
        let path = match self.path {
            QueryPath::Raw => "raw",
            QueryPath::Compact => "compact",
        };
        let exec = match self.exec {
            ExecMode::Sequential => "seq",
            ExecMode::Parallel => "par",
        };
        writeln!(f, "dataset={}", self.dataset)?;
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "sigma={}", self.sigma)?;
        writeln!(f, "mode={mode}")?;
        writeln!(f, "path={path}")?;
        writeln!(f, "exec={exec}")?;
        writeln!(f, "workers={}", self.workers)?;
        writeln!(f, "include_build={}", self.include_build)?;
        writeln!(f, "build_secs={:.6}", self.build.as_secs_f64())?;
        writeln!(f, "raw_llr_secs={:.6}", self.raw_llr.as_secs_f64())?;
        writeln!(f, "compaction_secs={:.6}", self.compaction.as_secs_f64())?;
        writeln!(f, "query_secs={:.6}", self.queries.as_secs_f64())?;
        writeln!(f, "total_secs={:.6}", self.total().as_secs_f64())?;
        writeln!(f, "array_bytes={}", self.array_bytes)?;
        writeln!(f, "covered_positions={}", self.covered_positions)
    }
}
