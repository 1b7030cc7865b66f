//! Subcommand implementations. Each takes parsed arguments plus a writer
//! for stdout and returns the process exit code; failures bubble up as
//! [`CliError`] and are mapped to codes by `main`.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use negarm_core::{
    classify_itemset, load_basket, run_mining, validate_config, MiningConfig,
    TransactionDatabase,
};

use crate::args::{ClassifyArgs, FormatArg, GenArgs, MineArgs, ReportArgs};
use crate::error::CliError;
use crate::generator::generate_basket;
use crate::report::{diff_reports, RuleJson, RunReport};

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
}

fn load_database(
    path: &Path,
    delimiter: negarm_core::Delimiter,
) -> Result<TransactionDatabase, CliError> {
    let text = read_file(path)?;
    Ok(load_basket(&text, delimiter)?)
}

fn checked_config(thresholds: &crate::args::ThresholdArgs) -> Result<(MiningConfig, Vec<String>), CliError> {
    let config = thresholds.to_config();
    let warnings = validate_config(&config)?;
    Ok((config, warnings))
}

pub fn cmd_mine(args: &MineArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (config, warnings) = checked_config(&args.thresholds)?;
    if args.threads == 0 {
        return Err(CliError::Config("threads must be at least 1".into()));
    }
    let db = load_database(&args.input, args.delimiter.to_core())?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.threads)
        .build()
        .map_err(|e| CliError::Config(format!("could not build thread pool: {e}")))?;
    let run = pool.install(|| run_mining(&db, &config));

    let report = RunReport::build(&db, &config, &run, warnings);
    match args.format {
        FormatArg::Json => write_out(out, &report.to_json())?,
        FormatArg::Csv => write_out(out, &report.rules_csv())?,
    }

    // stage timings are diagnostics; stderr keeps stdout reproducible
    eprintln!(
        "timing: frequent {:?}, candidates {:?}, extraction {:?}",
        run.timings.frequent, run.timings.candidates, run.timings.extraction
    );
    Ok(0)
}

/// JSON shape for `classify` output.
#[derive(Debug, Serialize)]
struct ClassifyReport {
    itemset: Vec<String>,
    verdict: String,
    witnesses: Vec<RuleJson>,
    warnings: Vec<String>,
}

pub fn cmd_classify(args: &ClassifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (config, warnings) = checked_config(&args.thresholds)?;
    let db = load_database(&args.input, args.delimiter.to_core())?;
    let itemset = db.itemset_from_labels(&args.items)?;
    let outcome = classify_itemset(&db, &itemset, &config);

    let report = ClassifyReport {
        itemset: itemset.labels(db.dictionary()),
        verdict: outcome.verdict.label().to_string(),
        witnesses: RuleJson::from_records(&outcome.witnesses, &db),
        warnings,
    };
    let mut text = serde_json::to_string_pretty(&report).expect("classify serializes");
    text.push('\n');
    write_out(out, &text)?;
    Ok(0)
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = generate_basket(
        args.seed,
        args.items,
        args.transactions,
        args.density,
        args.delimiter.to_core(),
    )?;
    match &args.output {
        Some(path) => fs::write(path, &text).map_err(|e| CliError::io(path, e))?,
        None => write_out(out, &text)?,
    }
    Ok(0)
}

pub fn cmd_report(args: &ReportArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let first = RunReport::parse(&read_file(&args.first)?, &args.first)?;
    let second = RunReport::parse(&read_file(&args.second)?, &args.second)?;
    let diff = diff_reports(&first, &args.first, &second, &args.second)?;
    write_out(out, &diff.to_json())?;
    Ok(if diff.identical_rules { 0 } else { 1 })
}
