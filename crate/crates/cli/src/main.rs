use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use apery_core::report::{self, ExtendInput, ReportOptions, SemigroupInput, SequenceInput};
use apery_core::{Error, Limits};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "apery", version, about = "Invariants of simplicial affine semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Largest n tried when certifying the reduction hypothesis.
    #[arg(long, default_value_t = 8, global = true)]
    n_max: u32,
    /// Bound for the order-obstruction search (default derived from the Apéry set).
    #[arg(long, global = true)]
    degree_bound: Option<u64>,
    /// Field characteristic; only 0 is supported.
    #[arg(long = "char", default_value_t = 0, global = true)]
    characteristic: u64,
    /// Add wall-clock timings to each report (breaks byte-stability).
    #[arg(long, global = true)]
    timing: bool,
    /// Worker threads when several input files are given.
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
    #[arg(long, global = true)]
    max_standard_monomials: Option<usize>,
    #[arg(long, global = true)]
    max_spairs: Option<usize>,
    #[arg(long, global = true)]
    max_betti_degree: Option<usize>,
    #[arg(long, global = true)]
    max_taylor_generators: Option<usize>,
    #[arg(long, global = true)]
    max_fiber_size: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every analysis on a semigroup.
    Analyze(Inputs),
    /// Apéry set with respect to the extremal rays.
    Apery(Inputs),
    /// Minimal generators of the toric ideal.
    Ideal(Inputs),
    /// Local standard basis and tangent cone.
    Stdbasis(Inputs),
    /// Cohen-Macaulayness of the tangent cone.
    Cm(Inputs),
    /// Homogeneity of the semigroup.
    Homogeneous(Inputs),
    /// Betti numbers of the ring and of its tangent cone.
    Betti(Inputs),
    /// Nice extension of a semigroup.
    Extend(Inputs),
    /// Iterated nice extensions starting from N^d.
    Sequence(Inputs),
    /// Geometric-sequence fixtures.
    Corpus(CorpusArgs),
    /// Projective closure of a numerical semigroup ring.
    Closure(Inputs),
}

#[derive(Args, Debug)]
struct Inputs {
    /// JSON input files; standard input when omitted or `-`.
    files: Vec<PathBuf>,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[arg(long, requires_all = ["b", "r"])]
    a: Option<u64>,
    #[arg(long, requires_all = ["a", "r"])]
    b: Option<u64>,
    #[arg(long, requires_all = ["a", "b"])]
    r: Option<u32>,
}

/// Failure of one input, with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn malformed(message: String) -> Self {
        Failure { code: 2, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotSimplicial(_) => 3,
            Error::ResourceBound { .. } | Error::Overflow(_) => 4,
            Error::InvariantViolation(_) => 5,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn options(g: &Global) -> ReportOptions {
    let d = Limits::default();
    ReportOptions {
        n_max: g.n_max,
        degree_bound: g.degree_bound,
        limits: Limits {
            max_standard_monomials: g.max_standard_monomials.unwrap_or(d.max_standard_monomials),
            max_spairs: g.max_spairs.unwrap_or(d.max_spairs),
            max_betti_degree: g.max_betti_degree.unwrap_or(d.max_betti_degree),
            max_taylor_generators: g.max_taylor_generators.unwrap_or(d.max_taylor_generators),
            max_fiber_size: g.max_fiber_size.unwrap_or(d.max_fiber_size),
        },
    }
}

fn read_source(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Failure::malformed(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::malformed(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::malformed(format!("malformed input: {e}")))
}

fn timed(timing: bool, f: impl FnOnce() -> Result<Value, Failure>) -> Result<Value, Failure> {
    let start = Instant::now();
    let mut value = f()?;
    if timing {
        value["timing"] = serde_json::json!({ "elapsed_ms": start.elapsed().as_secs_f64() * 1e3 });
    }
    Ok(value)
}

fn run_one(command: &Command, text: &str, opts: &ReportOptions) -> Result<Value, Failure> {
    let semigroup = || parse::<SemigroupInput>(text).and_then(|i| Ok(i.semigroup()?));
    let value = match command {
        Command::Analyze(_) => report::analyze(&semigroup()?, opts)?,
        Command::Apery(_) => report::apery(&semigroup()?, opts)?,
        Command::Ideal(_) => report::ideal(&semigroup()?, opts)?,
        Command::Stdbasis(_) => report::stdbasis(&semigroup()?, opts)?,
        Command::Cm(_) => report::cm(&semigroup()?, opts)?,
        Command::Homogeneous(_) => report::homogeneous(&semigroup()?, opts)?,
        Command::Betti(_) => report::betti(&semigroup()?, opts)?,
        Command::Closure(_) => report::closure(&semigroup()?, opts)?,
        Command::Extend(_) => report::extend(&parse::<ExtendInput>(text)?, opts)?,
        Command::Sequence(_) => report::sequence(&parse::<SequenceInput>(text)?, opts)?,
        Command::Corpus(_) => unreachable!("corpus takes no input document"),
    };
    Ok(value)
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => report::render_text(value),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    if g.characteristic != 0 {
        eprintln!("error: only characteristic 0 is supported");
        return ExitCode::from(2);
    }
    let opts = options(g);

    let results: Vec<Result<Value, Failure>> = match &cli.command {
        Command::Corpus(c) => {
            let params = c.a.zip(c.b).zip(c.r).map(|((a, b), r)| (a, b, r));
            vec![timed(g.timing, || Ok(report::corpus(params, &opts)?))]
        }
        Command::Analyze(i)
        | Command::Apery(i)
        | Command::Ideal(i)
        | Command::Stdbasis(i)
        | Command::Cm(i)
        | Command::Homogeneous(i)
        | Command::Betti(i)
        | Command::Extend(i)
        | Command::Sequence(i)
        | Command::Closure(i) => {
            let sources: Vec<Option<&PathBuf>> = if i.files.is_empty() {
                vec![None]
            } else {
                i.files.iter().map(Some).collect()
            };
            let work = |p: &Option<&PathBuf>| {
                read_source(*p).and_then(|text| timed(g.timing, || run_one(&cli.command, &text, &opts)))
            };
            if g.jobs > 1 && sources.len() > 1 {
                match rayon::ThreadPoolBuilder::new().num_threads(g.jobs).build() {
                    Ok(pool) => pool.install(|| sources.par_iter().map(work).collect()),
                    Err(e) => vec![Err(Failure::malformed(format!("thread pool: {e}")))],
                }
            } else {
                sources.iter().map(work).collect()
            }
        }
    };

    let mut code = 0;
    for r in results {
        match r {
            Ok(v) => print!("{}", render(&v, g.format)),
            Err(f) => {
                eprintln!("error: {}", f.message);
                if code == 0 {
                    code = f.code;
                }
            }
        }
    }
    ExitCode::from(code)
}
