//! Command line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use negarm_core::{parse_decimal, Delimiter, MiningConfig, Rational, RuleForms};

#[derive(Debug, Parser)]
#[command(
    name = "negarm",
    version,
    about = "Mine positive and negative association rules from basket data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mine rules from a basket file and print a report
    Mine(MineArgs),
    /// Classify one itemset as positively interesting, negatively
    /// interesting, or neither
    Classify(ClassifyArgs),
    /// Generate a seeded synthetic basket file
    Gen(GenArgs),
    /// Diff two mining reports
    Report(ReportArgs),
}

fn parse_rational_arg(text: &str) -> Result<Rational, String> {
    parse_decimal(text).map_err(|e| e.to_string())
}

fn parse_forms_arg(text: &str) -> Result<RuleForms, String> {
    text.parse()
}

/// Thresholds and limits shared by `mine` and `classify`.
#[derive(Debug, Args)]
pub struct ThresholdArgs {
    /// Minimum support, a decimal in (0, 1]
    #[arg(long, default_value = "0.1", value_parser = parse_rational_arg)]
    pub minsprt: Rational,

    /// Minimum confidence, a decimal in (0, 1]
    #[arg(long, default_value = "0.5", value_parser = parse_rational_arg)]
    pub minconf: Rational,

    /// Minimum leverage for a rule to count as interesting
    #[arg(long, default_value = "0.01", value_parser = parse_rational_arg)]
    pub mininterest: Rational,

    /// Largest itemset size explored (at least 2)
    #[arg(long, default_value_t = 6)]
    pub max_len: usize,

    /// Rule forms to emit: all, pos, neg, or a comma list of
    /// pos,anb,nab,nanb
    #[arg(long, default_value = "all", value_parser = parse_forms_arg)]
    pub forms: RuleForms,

    /// Test negative-rule interest on |leverage| instead of requiring
    /// positive leverage
    #[arg(long)]
    pub abs_neg_interest: bool,
}

impl ThresholdArgs {
    pub fn to_config(&self) -> MiningConfig {
        MiningConfig {
            minsprt: self.minsprt,
            minconf: self.minconf,
            mininterest: self.mininterest,
            max_len: self.max_len,
            rule_forms: self.forms,
            use_abs_interest_for_negative: self.abs_neg_interest,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum DelimiterArg {
    /// Whitespace-separated items
    #[default]
    Ws,
    /// Comma-separated items
    Comma,
}

impl DelimiterArg {
    pub fn to_core(self) -> Delimiter {
        match self {
            DelimiterArg::Ws => Delimiter::Whitespace,
            DelimiterArg::Comma => Delimiter::Comma,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum FormatArg {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct MineArgs {
    /// Basket file to mine
    pub input: PathBuf,

    #[command(flatten)]
    pub thresholds: ThresholdArgs,

    /// Report format
    #[arg(long, value_enum, default_value_t)]
    pub format: FormatArg,

    /// Item separator in the input
    #[arg(long, value_enum, default_value_t)]
    pub delimiter: DelimiterArg,

    /// Worker threads for counting (results are identical for any count)
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Basket file to classify against
    pub input: PathBuf,

    /// Item labels forming the set to classify
    #[arg(required = true, num_args = 1..)]
    pub items: Vec<String>,

    #[command(flatten)]
    pub thresholds: ThresholdArgs,

    /// Item separator in the input
    #[arg(long, value_enum, default_value_t)]
    pub delimiter: DelimiterArg,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Destination file; stdout when omitted
    pub output: Option<PathBuf>,

    /// Seed for the generator; equal seeds give byte-identical output
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Number of distinct items
    #[arg(long, default_value_t = 10)]
    pub items: usize,

    /// Number of transactions
    #[arg(long, default_value_t = 100)]
    pub transactions: usize,

    /// Probability of each item landing in a row, strictly between 0 and 1
    #[arg(long, default_value_t = 0.3)]
    pub density: f64,

    /// Item separator in the output
    #[arg(long, value_enum, default_value_t)]
    pub delimiter: DelimiterArg,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Baseline report
    pub first: PathBuf,

    /// Report to compare against the baseline
    pub second: PathBuf,
}
