use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use repeatscan::output::{answers_to_bytes, write_answers, write_walk_stats};
use repeatscan::stats::{compact_walk_stats, raw_walk_stats};
use repeatscan::{
    build_raw_llr, build_suffix_structures, compact_llr, oracle, query_range, run_benchmark,
    verify_suffix_structures, Answers, ExecPolicy, LlrSource, LrAnswerSet, PositionSpec, QueryMode,
    QueryPath, SuffixStructures, Text,
};

#[derive(Parser)]
#[command(
    name = "repeatscan",
    version,
    about = "Longest repeat covering every position of a text"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the longest repeat(s) covering each position, one line per position
    Query(QueryArgs),
    /// Print minimum / maximum / average walk steps for the raw and compact arrays
    Stats(StatsArgs),
    /// Check every answer against the brute-force oracle
    Selftest(SelftestArgs),
    /// Time the pipeline stages and print a key=value report
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file, read as raw bytes
    file: PathBuf,
    /// Strip one trailing newline from the input
    #[arg(long)]
    chomp: bool,
    /// Check the suffix, rank and LCP arrays by direct comparison (quadratic)
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct ExecArgs {
    #[arg(long, value_enum, default_value_t = ExecArg::Par)]
    exec: ExecArg,
    /// Worker count for --exec par [default: available hardware threads]
    #[arg(long, env = "REPEATSCAN_THREADS")]
    threads: Option<usize>,
}

#[derive(Args)]
struct QueryArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    exec: ExecArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Leftmost)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = PathArg::Compact)]
    path: PathArg,
    /// Answer a single 1-based position
    #[arg(long, conflicts_with = "range")]
    pos: Option<usize>,
    /// Answer positions A through B (1-based, inclusive)
    #[arg(long, value_name = "A:B")]
    range: Option<PositionSpec>,
    /// Write answers to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    exec: ExecArgs,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    exec: ExecArgs,
    /// Refuse inputs longer than this; the oracle is polynomial
    #[arg(long, default_value_t = 4096)]
    max_n: usize,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    exec: ExecArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Leftmost)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = PathArg::Compact)]
    path: PathArg,
    /// Count SA / rank / LCP construction in the total
    #[arg(long)]
    include_build: bool,
    /// Dataset label for the report [default: file name]
    #[arg(long)]
    dataset: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExecArg {
    Seq,
    Par,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Leftmost,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    Raw,
    Compact,
}

impl From<ModeArg> for QueryMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Leftmost => QueryMode::Leftmost,
            ModeArg::All => QueryMode::All,
        }
    }
}

impl From<PathArg> for QueryPath {
    fn from(p: PathArg) -> Self {
        match p {
            PathArg::Raw => QueryPath::Raw,
            PathArg::Compact => QueryPath::Compact,
        }
    }
}

impl ExecArgs {
    fn policy(&self) -> Result<ExecPolicy> {
        Ok(match (self.exec, self.threads) {
            (ExecArg::Seq, _) => ExecPolicy::sequential(),
            (ExecArg::Par, None) => ExecPolicy::available(),
            (ExecArg::Par, Some(n)) => ExecPolicy::parallel(n).context("invalid --threads")?,
        })
    }
}

impl InputArgs {
    fn load(&self) -> Result<Text> {
        let bytes = std::fs::read(&self.file)
            .with_context(|| format!("cannot read input file {}", self.file.display()))?;
        let text = Text::new(bytes)?;
        Ok(if self.chomp { text.chomp() } else { text })
    }

    fn structures(&self, text: &Text) -> Result<SuffixStructures> {
        let s = build_suffix_structures(text);
        if self.verify {
            ensure!(
                verify_suffix_structures(text, &s),
                "suffix structure verification failed"
            );
            eprintln!(
                "verify: suffix, rank and LCP arrays ok (n = {})",
                text.len()
            );
        }
        Ok(s)
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            let f = File::create(p)
                .with_context(|| format!("cannot write output file {}", p.display()))?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn finish(mut out: Box<dyn Write>) -> Result<()> {
    out.flush().context("cannot write output")
}

fn query(args: &QueryArgs) -> Result<()> {
    let text = args.input.load()?;
    let policy = args.exec.policy()?;
    let spec = match (args.pos, &args.range) {
        (Some(k), _) => PositionSpec::Single(k),
        (None, Some(r)) => r.clone(),
        (None, None) => PositionSpec::All,
    };
    let positions = spec.resolve(text.len())?;
    let mut out = open_output(args.output.as_deref())?;
    if text.is_empty() {
        return finish(out);
    }

    let s = args.input.structures(&text)?;
    let raw = build_raw_llr(&s, policy);
    let mode = args.mode.into();
    let first = *positions.start();
    let answers = match QueryPath::from(args.path) {
        QueryPath::Raw => query_range(LlrSource::Raw(&raw), positions, mode, policy)?,
        QueryPath::Compact => {
            let compact = compact_llr(&raw, policy);
            query_range(
                LlrSource::compact(&compact, text.len()),
                positions,
                mode,
                policy,
            )?
        }
    };
    write_answers(&mut out, first, &answers).context("cannot write output")?;
    finish(out)
}

fn stats(args: &StatsArgs) -> Result<()> {
    let text = args.input.load()?;
    let policy = args.exec.policy()?;
    let s = args.input.structures(&text)?;
    let raw = build_raw_llr(&s, policy);
    let compact = compact_llr(&raw, policy);
    let rows = [
        raw_walk_stats(&raw),
        compact_walk_stats(&compact, text.len()),
    ];

    let mut out = open_output(args.output.as_deref())?;
    writeln!(
        out,
        "# n={} sigma={} positions_with_lr={}",
        text.len(),
        text.sigma(),
        rows[0].positions
    )?;
    write_walk_stats(&mut out, &rows)?;
    finish(out)
}

fn selftest(args: &SelftestArgs) -> Result<()> {
    let text = args.input.load()?;
    if text.len() > args.max_n {
        bail!(
            "text length {} exceeds the oracle size cap {} (raise --max-n)",
            text.len(),
            args.max_n
        );
    }
    let policy = args.exec.policy()?;
    let started = Instant::now();
    let s = build_suffix_structures(&text);
    ensure!(
        verify_suffix_structures(&text, &s),
        "suffix structure verification failed"
    );

    let truth_all = oracle::oracle_all_positions(&text);
    let truth_left = Answers::Leftmost(truth_all.iter().map(LrAnswerSet::leftmost).collect());
    let truth_all = Answers::All(truth_all);
    let expected = [
        answers_to_bytes(1, &truth_left),
        answers_to_bytes(1, &truth_all),
    ];

    let n = text.len();
    let raw = build_raw_llr(&s, policy);
    let compact = compact_llr(&raw, policy);
    let mut failures = 0;
    for (source, path) in [
        (LlrSource::Raw(&raw), "raw"),
        (LlrSource::compact(&compact, n), "compact"),
    ] {
        for (mode, name, want) in [
            (QueryMode::Leftmost, "leftmost", &expected[0]),
            (QueryMode::All, "all", &expected[1]),
        ] {
            let got = if n == 0 {
                Vec::new()
            } else {
                answers_to_bytes(1, &query_range(source, 1..=n, mode, policy)?)
            };
            let ok = &got == want;
            failures += usize::from(!ok);
            println!("{path}/{name}: {}", if ok { "ok" } else { "MISMATCH" });
        }
    }
    println!(
        "selftest: n={n} elapsed={:.3}s",
        started.elapsed().as_secs_f64()
    );
    ensure!(
        failures == 0,
        "{failures} path/mode combinations disagree with the oracle"
    );
    Ok(())
}

fn bench(args: &BenchArgs) -> Result<()> {
    let text = args.input.load()?;
    let policy = args.exec.policy()?;
    if args.input.verify {
        args.input.structures(&text)?;
    }
    let dataset = match &args.dataset {
        Some(d) => d.clone(),
        None => args
            .input
            .file
            .file_name()
            .map_or_else(|| "input".into(), |f| f.to_string_lossy().into_owned()),
    };
    let (report, _) = run_benchmark(
        &dataset,
        &text,
        args.mode.into(),
        args.path.into(),
        policy,
        args.include_build,
    );
    let mut out = open_output(args.output.as_deref())?;
    write!(out, "{report}")?;
    finish(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Query(a) => query(a),
        Command::Stats(a) => stats(a),
        Command::Selftest(a) => selftest(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
