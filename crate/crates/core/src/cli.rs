//! Command-line front end. `run` takes the argument list and output sinks so
//! it can be driven from tests; `main` wires it to the process.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::composition::{Composition, SeaweedA, SeaweedC, Series};
use crate::enumeration::{frobenius_census_with, CensusMethod, CensusOptions, CensusRow};
use crate::error::{Error, Result};
use crate::index::{reduction_chain_with, ReductionChain, ReductionOptions, Rule};
use crate::meander::ComponentReport;
use crate::oracle::{OracleConfig, RankMethod, DEFAULT_BOUND, DEFAULT_SEED};
use crate::render::{to_ascii, to_dot, to_json, GraphDocument};
use crate::verify::{cross_check_oracle, cross_check_reduction, structural_suite, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest census rank accepted unless overridden.
pub const DEFAULT_MAX_N: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "meandre", version, about = "Meander graphs and the index of seaweed subalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Index of one seaweed, with its component counts.
    Index(IndexArgs),
    /// Meander graph as ASCII art, JSON or DOT.
    Graph(GraphArgs),
    /// Reduction chain down to a parabolic.
    Reduce(ReduceArgs),
    /// Frobenius seaweeds of ranks 1..n, split by central arcs.
    Census(CensusArgs),
    /// Cross-check the index formulas against each other and the matrix oracle.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Debug, Args)]
struct SeaweedArgs {
    #[arg(long, value_enum, default_value = "C")]
    series: SeriesArg,
    /// Rank (required for B and C; for A it must equal the composition total).
    #[arg(long)]
    n: Option<usize>,
    /// Top composition, comma separated; empty for none.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    top: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    bottom: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Ascii,
}

#[derive(Debug, Args)]
struct IndexArgs {
    #[command(flatten)]
    seaweed: SeaweedArgs,
    /// Report the sl index first (type A).
    #[arg(long)]
    sl: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[command(flatten)]
    seaweed: SeaweedArgs,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    #[command(flatten)]
    seaweed: SeaweedArgs,
    /// Collapse iterated steps into closed-form steps.
    #[arg(long)]
    closed_form: bool,
    /// Remove central circles whenever both sides are deficient.
    #[arg(long)]
    strip_central: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    /// Count ordered pairs instead of classes up to exchanging sides.
    #[arg(long)]
    raw: bool,
    /// Use full graph analysis instead of the union-find test.
    #[arg(long)]
    reference: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, env = "MEANDRE_MAX_N", default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Exhaustive cross-check of the three index routes up to this rank.
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Exhaustive oracle comparison up to this rank.
    #[arg(long, default_value_t = 3)]
    oracle_max_n: usize,
    /// Random oracle comparisons at the next rank.
    #[arg(long, default_value_t = 50)]
    oracle_random: usize,
    #[arg(long, default_value_t = 5)]
    samples: usize,
    /// Use modular rank with this many primes instead of exact rank.
    #[arg(long)]
    primes: Option<usize>,
    #[arg(long, env = "MEANDRE_ORACLE_BOUND", default_value_t = DEFAULT_BOUND)]
    oracle_bound: usize,
    /// Structural checks on enumerated Frobenius sets up to this rank.
    #[arg(long, default_value_t = 7)]
    census_max_n: usize,
    #[arg(long, env = "MEANDRE_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Corrupt one σ-stability flag to show that mismatches are caught.
    #[arg(long)]
    inject_fault: bool,
    #[arg(long, env = "MEANDRE_MAX_N", default_value_t = DEFAULT_MAX_N)]
    limit: usize,
}

enum Seaweed {
    A(SeaweedA),
    C(SeaweedC),
}

fn parse_seaweed(args: &SeaweedArgs) -> Result<Seaweed> {
    let top: Composition = args.top.parse()?;
    let bottom: Composition = args.bottom.parse()?;
    let series = match args.series {
        SeriesArg::A => {
            let q = SeaweedA::new(top, bottom)?;
            if let Some(n) = args.n {
                if n != q.size() {
                    return Err(Error::TotalsDiffer {
                        top: q.size(),
                        bottom: n,
                    });
                }
            }
            return Ok(Seaweed::A(q));
        }
        SeriesArg::B => Series::SoOdd,
        SeriesArg::C => Series::Sp,
    };
    let n = args
        .n
        .ok_or_else(|| Error::Parse {
            token: "--n".into(),
            reason: "the rank is required for series B and C",
        })?;
    Ok(Seaweed::C(SeaweedC::new(n, top, bottom, series)?))
}

fn banner(q: &Seaweed) -> String {
    match q {
        Seaweed::A(q) => format!("seaweed {q} in gl({})", q.size()),
        Seaweed::C(q) => format!("seaweed {q} in {}", q.series().ambient(q.rank())),
    }
}

fn short(q: &SeaweedC) -> String {
    format!("n={} ({} | {})", q.rank(), q.top(), q.bottom())
}

#[derive(Serialize)]
struct IndexJson {
    #[serde(rename = "type")]
    series: &'static str,
    n: usize,
    top: String,
    bottom: String,
    index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    gl_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sl_index: Option<usize>,
    cycles: usize,
    segments: usize,
    sigma_stable_segments: usize,
    central_arcs_top: usize,
    central_arcs_bottom: usize,
}

fn index_command(args: &IndexArgs, out: &mut dyn Write) -> Result<i32> {
    let q = parse_seaweed(&args.seaweed)?;
    let doc = match &q {
        Seaweed::A(a) => GraphDocument::for_a(a),
        Seaweed::C(c) => GraphDocument::for_c(c),
    };
    let r: &ComponentReport = &doc.report;
    let (index, gl, sl) = match &q {
        Seaweed::A(_) => {
            let gl = doc.index;
            let sl = gl - 1;
            (if args.sl { sl } else { gl }, Some(gl), Some(sl))
        }
        Seaweed::C(_) => (doc.index, None, None),
    };
    if args.json || args.format == Format::Json {
        let (n, top, bottom) = match &q {
            Seaweed::A(a) => (a.size(), a.top().to_text(), a.bottom().to_text()),
            Seaweed::C(c) => (c.rank(), c.top().to_text(), c.bottom().to_text()),
        };
        let json = IndexJson {
            series: doc.descriptor.series_label(),
            n,
            top,
            bottom,
            index,
            gl_index: gl,
            sl_index: sl,
            cycles: r.cycles,
            segments: r.segments,
            sigma_stable_segments: r.sigma_stable_segments,
            central_arcs_top: r.central_arcs_top,
            central_arcs_bottom: r.central_arcs_bottom,
        };
        writeln!(out, "{}", serde_json::to_string(&json).expect("plain data"))?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{}", banner(&q))?;
    match (gl, sl) {
        (Some(gl), Some(sl)) => {
            writeln!(out, "index: {index} ({})", if args.sl { "sl" } else { "gl" })?;
            writeln!(out, "gl index: {gl}")?;
            writeln!(out, "sl index: {sl}")?;
            writeln!(out, "cycles: {}", r.cycles)?;
            writeln!(out, "segments: {}", r.segments)?;
        }
        _ => {
            writeln!(out, "index: {index}")?;
            writeln!(out, "cycles: {}", r.cycles)?;
            writeln!(
                out,
                "segments: {} ({} σ-stable, {} not σ-stable)",
                r.segments,
                r.sigma_stable_segments,
                r.unstable_segments()
            )?;
            writeln!(
                out,
                "central arcs: {} top, {} bottom",
                r.central_arcs_top, r.central_arcs_bottom
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn graph_command(args: &GraphArgs, out: &mut dyn Write) -> Result<i32> {
    let doc = match parse_seaweed(&args.seaweed)? {
        Seaweed::A(a) => GraphDocument::for_a(&a),
        Seaweed::C(c) => GraphDocument::for_c(&c),
    };
    match args.format {
        Format::Json => write!(out, "{}", to_json(&doc))?,
        Format::Dot => write!(out, "{}", to_dot(&doc))?,
        Format::Ascii | Format::Text => write!(out, "{}", to_ascii(&doc)?)?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SeaweedJson {
    n: usize,
    top: String,
    bottom: String,
}

impl From<&SeaweedC> for SeaweedJson {
    fn from(q: &SeaweedC) -> Self {
        Self {
            n: q.rank(),
            top: q.top().to_text(),
            bottom: q.bottom().to_text(),
        }
    }
}

#[derive(Serialize)]
struct StepJson {
    rule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<usize>,
    swapped: bool,
    before: SeaweedJson,
    after: SeaweedJson,
    index_delta: usize,
}

#[derive(Serialize)]
struct ChainJson {
    #[serde(rename = "type")]
    series: &'static str,
    start: SeaweedJson,
    steps: Vec<StepJson>,
    terminal: SeaweedJson,
    terminal_index: usize,
    index: usize,
}

fn rule_name(rule: Rule) -> (String, Option<usize>) {
    match rule {
        Rule::ClosedForm { p } => ("CLOSED-FORM".into(), Some(p)),
        other => (other.to_string(), None),
    }
}

fn chain_json(q: &SeaweedC, chain: &ReductionChain) -> ChainJson {
    ChainJson {
        series: q.series().letter(),
        start: q.into(),
        steps: chain
            .steps
            .iter()
            .map(|s| {
                let (rule, p) = rule_name(s.rule);
                StepJson {
                    rule,
                    p,
                    swapped: s.swapped,
                    before: (&s.before).into(),
                    after: (&s.after).into(),
                    index_delta: s.index_delta,
                }
            })
            .collect(),
        terminal: (&chain.terminal).into(),
        terminal_index: chain.terminal_index,
        index: chain.total_index,
    }
}

fn reduce_command(args: &ReduceArgs, out: &mut dyn Write) -> Result<i32> {
    let q = match parse_seaweed(&args.seaweed)? {
        Seaweed::C(q) => q,
        Seaweed::A(_) => {
            return Err(Error::Parse {
                token: "--series".into(),
                reason: "reduce works on series B and C",
            })
        }
    };
    let options = ReductionOptions {
        closed_form: args.closed_form,
        strip_central: args.strip_central,
    };
    let chain = reduction_chain_with(&q, options);
    if args.json || args.format == Format::Json {
        let json = chain_json(&q, &chain);
        writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("plain data"))?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{}", banner(&Seaweed::C(q.clone())))?;
    for (i, step) in chain.steps.iter().enumerate() {
        let swap = if step.swapped { " [sides exchanged]" } else { "" };
        writeln!(
            out,
            "{:>3}. {:<16} {} → {}  +{}{swap}",
            i + 1,
            step.rule.to_string(),
            short(&step.before),
            short(&step.after),
            step.index_delta
        )?;
    }
    writeln!(
        out,
        "terminal parabolic {} with index {}",
        short(&chain.terminal),
        chain.terminal_index
    )?;
    writeln!(out, "index: {} ({} steps)", chain.total_index, chain.steps.len())?;
    Ok(EXIT_OK)
}

fn write_census_text(rows: &[CensusRow], out: &mut dyn Write) -> Result<()> {
    let width = rows.iter().map(|r| r.n).max().unwrap_or(1);
    let cell = rows
        .iter()
        .map(|r| r.total.to_string().len())
        .max()
        .unwrap_or(1)
        .max(3);
    write!(out, "{:>3} |", "n")?;
    for k in 1..=width {
        write!(out, " {:>cell$}", format!("k={k}"))?;
    }
    writeln!(out, " | {:>cell$}", "F_n")?;
    for row in rows {
        write!(out, "{:>3} |", row.n)?;
        for k in 1..=width {
            if k <= row.n {
                write!(out, " {:>cell$}", row.get(k))?;
            } else {
                write!(out, " {:>cell$}", "")?;
            }
        }
        writeln!(out, " | {:>cell$}", row.total)?;
    }
    Ok(())
}

fn census_command(args: &CensusArgs, out: &mut dyn Write) -> Result<i32> {
    if args.n == 0 {
        return Err(Error::Parse {
            token: "0".into(),
            reason: "n must be ≥ 1",
        });
    }
    if args.n > args.max_n {
        return Err(Error::Limit {
            flag: "--n",
            value: args.n,
            limit: args.max_n,
        });
    }
    let options = CensusOptions {
        method: if args.reference {
            CensusMethod::Reference
        } else {
            CensusMethod::Fast
        },
        raw: args.raw,
    };
    let rows: Vec<CensusRow> = (1..=args.n).map(|n| frobenius_census_with(n, options)).collect();
    if args.json {
        writeln!(out, "{}", serde_json::to_string(&rows).expect("plain data"))?;
    } else {
        write_census_text(&rows, out)?;
    }
    Ok(EXIT_OK)
}

fn write_suite(suite: &SuiteReport, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "== {}", suite.name)?;
    for line in &suite.lines {
        writeln!(out, "   {line}")?;
    }
    if suite.passed() {
        writeln!(out, "   PASS")?;
    } else {
        writeln!(out, "   FAIL: {} counterexamples, smallest first", suite.failures.len())?;
        for failure in suite.failures.iter().take(10) {
            writeln!(out, "   counterexample {failure}")?;
        }
    }
    Ok(())
}

fn verify_command(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    for (flag, value) in [("--max-n", args.max_n), ("--census-max-n", args.census_max_n)] {
        if value > args.limit {
            return Err(Error::Limit {
                flag,
                value,
                limit: args.limit,
            });
        }
    }
    if args.oracle_max_n > args.oracle_bound {
        return Err(Error::OracleBound {
            rank: args.oracle_max_n,
            bound: args.oracle_bound,
        });
    }
    if args.samples == 0 {
        return Err(Error::ZeroSamples);
    }
    let config = OracleConfig {
        samples: args.samples,
        bound: args.oracle_bound,
        seed: args.seed,
        stream: 0,
        method: args
            .primes
            .map_or(RankMethod::Exact, |primes| RankMethod::Modular { primes }),
    };
    let suites = [
        cross_check_reduction(args.max_n, args.inject_fault),
        cross_check_oracle(args.oracle_max_n, args.oracle_random, config),
        structural_suite(args.census_max_n),
    ];
    let mut ok = true;
    for suite in &suites {
        write_suite(suite, out)?;
        ok &= suite.passed();
    }
    writeln!(out, "{}", if ok { "verify: PASS" } else { "verify: FAIL" })?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Index(a) => index_command(a, out),
        Command::Graph(a) => graph_command(a, out),
        Command::Reduce(a) => reduce_command(a, out),
        Command::Census(a) => census_command(a, out),
        Command::Verify(a) => verify_command(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
