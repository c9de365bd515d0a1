use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "partlab", version, about = "Exact generalized partition counts, bounds and verification suites")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print p(n; parts, mults).
    Count(CountArgs),
    /// Tabulate p(0..=upto) with optional bound columns.
    Table(TableArgs),
    /// gcd, coprime prefix, positivity, Frobenius threshold and monotonicity criterion.
    Analyze(AnalyzeArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Zero pattern and growth summary.
    Explore(ExploreArgs),
    /// Build a sparse part set from an epsilon step-function file.
    Sparse(SparseArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SetArgs {
    /// Part set, e.g. `finite:3,5` or `dexp:2`.
    #[arg(long)]
    pub parts: String,
    /// Multiplicity set; must contain 0.
    #[arg(long, default_value = "nat")]
    pub mults: String,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Working precision of real-valued bounds, in decimal digits.
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(10..))]
    pub precision: u32,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub sets: SetArgs,
    #[arg(long)]
    pub n: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub sets: SetArgs,
    #[arg(long)]
    pub upto: u64,
    /// Comma-separated bound ids; `all` selects every bound.
    #[arg(long, value_delimiter = ',')]
    pub bounds: Vec<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub sets: SetArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, required_unless_present = "list")]
    pub suite: Option<String>,
    /// List suites with their parameters.
    #[arg(long)]
    pub list: bool,
    /// Include wall-clock times in the report.
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ExploreArgs {
    #[command(flatten)]
    pub sets: SetArgs,
    #[arg(long)]
    pub upto: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SparseArgs {
    /// Epsilon file: lines `threshold value`, ascending.
    #[arg(long)]
    pub eps: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}
