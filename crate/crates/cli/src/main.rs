mod expr;
mod range;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use lenstc::bounds::{self, BoundFact};
use lenstc::report::{self, BoundReport, ReportOptions, DEFAULT_MAX_ROWS};
use lenstc::{Degree, Error, RingSpec, VerifyMode};

use expr::Expr;
use range::Span;

const EXIT_INCONSISTENT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

/// Bounds on the higher topological complexity TC_k of lens spaces L^{2n+1}_m.
#[derive(Debug, Parser)]
#[command(name = "lenstc", version)]
struct Cli {
    /// Cap on the dense monomial count 2^k (n+1)^k for symbolic expansion.
    #[arg(
        long,
        global = true,
        env = "LENSTC_MONOMIAL_LIMIT",
        default_value_t = lenstc::graded_ring::DEFAULT_MONOMIAL_LIMIT,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report lower and upper bounds for one lens space.
    Lens {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        verify: VerifyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Report bounds for every (n, m, k) in the given ranges.
    Table {
        /// Range `a:b` (inclusive) or a single value.
        #[arg(long)]
        n: Span<u32>,
        #[arg(long)]
        m: Span<u64>,
        #[arg(long)]
        k: Span<u32>,
        /// Maximum number of rows.
        #[arg(long, default_value_t = DEFAULT_MAX_ROWS)]
        max_rows: u64,
        #[command(flatten)]
        verify: VerifyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Expand a named element of the tensor power.
    Ring {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u32,
        /// one | x <i> | y <i> | xbar <i> | ybar <i> | zbar | certificate <l> <l'>
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate a closed-form upper bound.
    Bounds {
        #[command(subcommand)]
        bound: BoundCommand,
        #[command(flatten)]
        output: BoundsOutputArgs,
    },
}

#[derive(Debug, Subcommand)]
enum BoundCommand {
    /// k·dim + 1
    Dim {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        dim: u64,
    },
    /// TC_k(F) · cat(B^k)
    Fibration {
        #[arg(long)]
        tc_fiber: u64,
        #[arg(long)]
        cat_base: u64,
    },
    /// cat(Y) · TC_{k,E}(X)
    Subspace {
        #[arg(long)]
        cat_y: u64,
        #[arg(long)]
        tc_sub: u64,
    },
    /// cat(X^k) of the base of a covering
    Covering {
        #[arg(long)]
        cat_base: u64,
    },
    /// k·dim(X) − dim(P) + 1
    GroupAction {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        dim_x: u64,
        #[arg(long)]
        dim_p: u64,
    },
    /// k(2n+1) for L^{2n+1}_m
    Lens {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Whether an S^{l1}-fibration over S^{l2} beats the dimensional bound
    SphereBundle {
        #[arg(long)]
        l1: u32,
        #[arg(long)]
        l2: u32,
        #[arg(long)]
        k: u32,
    },
    /// Whether an S^l-fibration over B beats the dimensional bound
    GeneralBundle {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        dim_b: u64,
        #[arg(long)]
        cat_b_power: u64,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Always expand the certificate product symbolically.
    #[arg(long, conflicts_with = "no_verify")]
    verify: bool,
    /// Never expand; rely on divisibility evidence.
    #[arg(long)]
    no_verify: bool,
}

impl VerifyArgs {
    fn mode(&self) -> VerifyMode {
        match (self.verify, self.no_verify) {
            (true, _) => VerifyMode::Always,
            (_, true) => VerifyMode::Never,
            _ => VerifyMode::Auto,
        }
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BoundsOutputArgs {
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

impl BoundsOutputArgs {
    fn as_output(&self) -> OutputArgs {
        OutputArgs {
            json: self.json,
            csv: false,
            output: self.output.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Human,
    Json,
    Csv,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Human
        }
    }
}

/// Rendered `ring` result.
#[derive(Debug, Serialize, Deserialize)]
struct RingOutput {
    n: u32,
    m: u64,
    k: u32,
    expr: String,
    element: String,
    degree: Degree,
    terms: Vec<RingTerm>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RingTerm {
    monomial: String,
    coefficient: u64,
}

/// Output of the `bounds` subcommand.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum BoundsOutput {
    Fact(BoundFact),
    Predicate { predicate: String, holds: bool },
}

enum Failure {
    Usage(String),
    Inconsistent(String),
    Guard(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_guard() {
            Failure::Guard(e.to_string())
        } else if matches!(e, Error::Inconsistent(_)) {
            Failure::Inconsistent(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Usage(msg) => (EXIT_USAGE, msg),
                Failure::Inconsistent(msg) => (EXIT_INCONSISTENT, msg),
                Failure::Guard(msg) => (EXIT_GUARD, msg),
                Failure::Io(msg) => (EXIT_USAGE, msg),
            };
            eprintln!("lenstc: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Lens {
            n,
            m,
            k,
            verify,
            output,
        } => {
            let opts = ReportOptions {
                verify: verify.mode(),
                monomial_limit: cli.limit,
                ..Default::default()
            };
            let r = report::report(*n, *m, *k, &opts)?;
            let text = match output.format() {
                Format::Human => r.to_string(),
                Format::Json => json(&r)?,
                Format::Csv => report::to_csv(std::slice::from_ref(&r)),
            };
            emit(output, &text)?;
            r.ensure_consistent()?;
            Ok(())
        }
        Command::Table {
            n,
            m,
            k,
            max_rows,
            verify,
            output,
        } => {
            let opts = ReportOptions {
                verify: verify.mode(),
                monomial_limit: cli.limit,
                max_rows: *max_rows,
            };
            let rows = report::table(n.range(), m.range(), k.range(), &opts)?;
            let text = match output.format() {
                Format::Human => human_table(&rows),
                Format::Json => json(&rows)?,
                Format::Csv => report::to_csv(&rows),
            };
            emit(output, &text)?;
            let bad: Vec<String> = rows
                .iter()
                .filter(|r| !r.consistent)
                .map(|r| format!("(n={}, m={}, k={})", r.n, r.m, r.k))
                .collect();
            if bad.is_empty() {
                Ok(())
            } else {
                Err(Failure::Inconsistent(format!(
                    "inconsistent rows: {}",
                    bad.join(", ")
                )))
            }
        }
        Command::Ring {
            n,
            m,
            k,
            expr,
            output,
        } => {
            let parsed = Expr::parse(expr).map_err(Failure::Usage)?;
            let spec = RingSpec::new(*n, *m, *k)?.with_limit(cli.limit);
            let element = parsed.evaluate(&spec)?;
            let text = match output.format() {
                Format::Json => json(&RingOutput {
                    n: *n,
                    m: *m,
                    k: *k,
                    expr: expr.clone(),
                    element: element.to_string(),
                    degree: element.degree(),
                    terms: element
                        .rendered_terms()
                        .into_iter()
                        .map(|(monomial, coefficient)| RingTerm {
                            monomial,
                            coefficient,
                        })
                        .collect(),
                })?,
                _ => format!("{element}\n"),
            };
            emit(output, &text)
        }
        Command::Bounds { bound, output } => {
            let output = &output.as_output();
            let result = evaluate_bound(bound)?;
            let text = match (output.format(), &result) {
                (Format::Json, r) => json(r)?,
                (_, BoundsOutput::Fact(f)) => format!("{} ({:?})\n", f.value, f.kind),
                (_, BoundsOutput::Predicate { holds, .. }) => format!("{holds}\n"),
            };
            emit(output, &text)
        }
    }
}

fn evaluate_bound(cmd: &BoundCommand) -> Result<BoundsOutput, Failure> {
    let fact = |f: lenstc::Result<BoundFact>| f.map(BoundsOutput::Fact).map_err(Failure::from);
    let predicate = |name: &str, holds: bool| {
        Ok(BoundsOutput::Predicate {
            predicate: name.to_owned(),
            holds,
        })
    };
    match *cmd {
        BoundCommand::Dim { k, dim } => fact(Ok(BoundFact::dimensional(k, dim))),
        BoundCommand::Fibration { tc_fiber, cat_base } => {
            fact(BoundFact::fibration(tc_fiber, cat_base))
        }
        BoundCommand::Subspace { cat_y, tc_sub } => {
            fact(BoundFact::subspace_fibration(cat_y, tc_sub))
        }
        BoundCommand::Covering { cat_base } => fact(BoundFact::covering(cat_base)),
        BoundCommand::GroupAction { k, dim_x, dim_p } => {
            fact(BoundFact::group_action(k, dim_x, dim_p))
        }
        BoundCommand::Lens { n, k } => fact(BoundFact::lens_free_circle(n, k)),
        BoundCommand::SphereBundle { l1, l2, k } => predicate(
            "sphere_bundle_improves",
            bounds::sphere_bundle_improves(l1, l2, k),
        ),
        BoundCommand::GeneralBundle {
            l,
            dim_b,
            cat_b_power,
        } => predicate(
            "general_bundle_improves",
            bounds::general_bundle_improves(l, dim_b, cat_b_power),
        ),
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &output.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn human_table(rows: &[BoundReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>4} {:>6} {:>4} {:>7} {:>7} {:>7} {:>4} {:>4}  {:<9} theorems",
        "n", "m", "k", "lower", "upper", "exact", "l", "l'", "verified"
    );
    for r in rows {
        let c = &r.lower.certificate;
        let names: Vec<&str> = r.theorems_fired.iter().map(|t| t.as_str()).collect();
        let _ = writeln!(
            out,
            "{:>4} {:>6} {:>4} {:>7} {:>7} {:>7} {:>4} {:>4}  {:<9} {}{}",
            r.n,
            r.m,
            r.k,
            r.lower.value,
            r.upper.value,
            r.exact.map(|e| e.to_string()).unwrap_or_else(|| "-".into()),
            c.l,
            c.l_prime,
            c.verification.as_str(),
            names.join(","),
            if r.consistent { "" } else { "  INCONSISTENT" }
        );
    }
    out
}
