//! `lda`: generators, constructions, verification and exact search for local
//! distance antimagic labelings, over JSON on files or standard streams.

mod commands;
mod doc;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lda_core::solver::{DEFAULT_MAX_NODES, DEFAULT_MAX_VERTICES};
use lda_core::LdaError;

/// Exit code for usage errors (BSD `EX_USAGE`).
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "lda",
    version,
    about = "Local distance antimagic labelings of graphs"
)]
struct Cli {
    /// Output file; `-` is standard output.
    #[arg(long, global = true, default_value = "-", value_name = "FILE")]
    out: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph as graph JSON.
    Gen(GenArgs),
    /// Combine graphs: direct or lexicographic product, copies, corona, join.
    Product(ProductArgs),
    /// Find or check a neighborhood balanced coloring.
    Nbc(NbcArgs),
    /// Build a labeled graph from a known construction.
    Construct(ConstructArgs),
    /// Check a labeling and report its weights.
    Verify(Input),
    /// Compute χ_ld exactly by branch and bound.
    Solve(SolveArgs),
    /// Solve a family over a parameter range and compare with known values.
    Table(TableArgs),
    /// Render a graph, optionally labeled, as Graphviz DOT.
    ExportDot(Input),
}

#[derive(Args, Clone)]
struct Input {
    /// JSON input; `-` reads standard input.
    #[arg(long = "in", value_name = "FILE", conflicts_with = "path")]
    file: Option<String>,
    /// JSON input given positionally.
    #[arg(value_name = "FILE")]
    path: Option<String>,
}

impl Input {
    fn path(&self) -> &str {
        self.file.as_deref().or(self.path.as_deref()).unwrap_or("-")
    }
}

#[derive(Args, Clone, Copy)]
struct Budget {
    /// Label placements allowed per search.
    #[arg(long, env = "LDA_BUDGET", default_value_t = DEFAULT_MAX_NODES)]
    budget: u64,
    /// Worker threads; 1 is fully reproducible.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Largest graph order the search accepts.
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Multipartite,
    Star,
    Bistar,
    Friendship,
    Wheel,
    BookC4,
    Empty,
    RandomTree,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Order or size parameter of the family.
    #[arg(long)]
    n: Option<usize>,
    /// Number of pages of a book.
    #[arg(long)]
    t: Option<usize>,
    /// Part sizes (multipartite) or leaf counts `c,d` (bistar).
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Seed for random families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Direct,
    Lexicographic,
    Union,
    Corona,
    Join,
}

#[derive(Args)]
struct ProductArgs {
    #[arg(value_enum)]
    kind: ProductKind,
    #[command(flatten)]
    input: Input,
    /// Second factor for direct and lexicographic products.
    #[arg(long, value_name = "FILE")]
    with: Option<String>,
    /// Number of copies for `union`.
    #[arg(long)]
    m: Option<usize>,
    /// Pendants per vertex for `corona`.
    #[arg(long)]
    p: Option<usize>,
}

#[derive(Args)]
struct NbcArgs {
    #[command(flatten)]
    input: Input,
    /// Fail unless the coloring (given or found) is balanced.
    #[arg(long)]
    verify: bool,
    /// Balance only the non-leaf vertices of a tree.
    #[arg(long)]
    interior: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    BookC4,
    Multipartite,
    Corona,
    Copies,
    CopiesPendant,
    DirectNbc,
    DirectBipartite,
    LexiRegular,
    LexiBiregular,
    LexiJoin,
    LexiBistar,
    MagicRectangle,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: ConstructKind,
    /// Base graph `G`, optionally with `labels` and `signs`.
    #[command(flatten)]
    input: Input,
    /// Inner factor `H`, optionally with `labels` and `signs`.
    #[arg(long, value_name = "FILE")]
    with: Option<String>,
    /// Pages of a book.
    #[arg(long)]
    t: Option<usize>,
    /// Copies, or magic rectangle columns.
    #[arg(long)]
    m: Option<usize>,
    /// Corona half-size: each vertex gets `2p` pendants.
    #[arg(long)]
    p: Option<usize>,
    /// Magic rectangle rows.
    #[arg(long)]
    n: Option<usize>,
    /// Part sizes.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Leaf counts `c,d` of the bistar.
    #[arg(long, value_delimiter = ',')]
    sides: Vec<usize>,
    /// Seed for the magic rectangle search.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFamilyArg {
    Cycles,
    Paths,
    Complete,
    Friendship,
    Wheels,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: TableFamilyArg,
    /// First parameter; defaults to the smallest with a known value.
    #[arg(long)]
    from: Option<usize>,
    #[arg(long)]
    to: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: TableFormat,
    #[command(flatten)]
    budget: Budget,
}

/// Bad flag combinations detected after parsing.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// How a command that produced output ended.
pub enum Status {
    Ok,
    /// The search budget ran out; the output holds partial results.
    Partial,
    /// A domain check failed after the output was written.
    Rejected {
        kind: &'static str,
        message: String,
    },
}

fn error_json(kind: &str, message: &str) -> String {
    serde_json::json!({ "error": kind, "message": message }).to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Partial) => ExitCode::from(2),
        Ok(Status::Rejected { kind, message }) => {
            eprintln!("{}", error_json(kind, &message));
            ExitCode::from(1)
        }
        Err(e) => {
            if let Some(u) = e.downcast_ref::<UsageError>() {
                eprintln!("error: {u}\n\nFor more information, try '--help'.");
                return ExitCode::from(EXIT_USAGE);
            }
            let (kind, code) = match e.downcast_ref::<LdaError>() {
                Some(l) if l.is_budget() => (l.kind(), 2),
                Some(l) => (l.kind(), 1),
                None => ("input", 1),
            };
            eprintln!("{}", error_json(kind, &format!("{e:#}")));
            ExitCode::from(code)
        }
    }
}
