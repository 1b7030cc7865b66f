//! Report serialization and report diffing.
//!
//! Reports are JSON with a fixed field order and exact values: every
//! measure carries both a decimal rendering (at most twelve significant
//! digits) and its exact numerator and denominator as strings. Serializing
//! the same run twice gives byte-identical output; nothing here depends on
//! map iteration order, thread count or wall time.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use negarm_core::{
    MiningConfig, MiningRun, OracleResult, Rational, RuleRecord, StageCounts,
    TransactionDatabase, to_decimal, REPORT_DIGITS,
};

use crate::error::CliError;

/// An exact fraction in a report: human-readable decimal plus the exact
/// numerator and denominator (strings, since they can exceed JSON's safe
/// integer range).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub decimal: String,
    pub numer: String,
    pub denom: String,
}

impl RationalJson {
    pub fn from_rational(value: &Rational) -> Self {
        RationalJson {
            decimal: to_decimal(value, REPORT_DIGITS),
            numer: value.numer().to_string(),
            denom: value.denom().to_string(),
        }
    }

    /// Recovers the exact value. Used when diffing reports, so corrupt
    /// fields surface as malformed-report errors, not bogus diffs.
    pub fn to_rational(&self) -> Result<Rational, String> {
        let numer: i128 = self
            .numer
            .parse()
            .map_err(|_| format!("bad numerator `{}`", self.numer))?;
        let denom: i128 = self
            .denom
            .parse()
            .map_err(|_| format!("bad denominator `{}`", self.denom))?;
        if denom == 0 {
            return Err("zero denominator".to_string());
        }
        Ok(Rational::new(numer, denom))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigJson {
    pub minsprt: RationalJson,
    pub minconf: RationalJson,
    pub mininterest: RationalJson,
    pub max_len: u64,
    pub forms: Vec<String>,
    pub abs_neg_interest: bool,
}

impl ConfigJson {
    fn from_config(config: &MiningConfig) -> Self {
        ConfigJson {
            minsprt: RationalJson::from_rational(&config.minsprt),
            minconf: RationalJson::from_rational(&config.minconf),
            mininterest: RationalJson::from_rational(&config.mininterest),
            max_len: config.max_len as u64,
            forms: config.rule_forms.iter().map(|f| f.token().to_string()).collect(),
            abs_neg_interest: config.use_abs_interest_for_negative,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsJson {
    pub transactions: u64,
    pub items: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCountsJson {
    pub frequent_itemsets: u64,
    pub candidate_pairs: u64,
    pub candidate_pairs_passing_support: u64,
    pub rules_emitted: u64,
    pub support_filter_retention: RationalJson,
    pub rule_emission_retention: RationalJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleJson {
    pub form: String,
    pub antecedent: Vec<String>,
    pub consequent: Vec<String>,
    pub support: RationalJson,
    pub confidence: RationalJson,
    pub leverage: RationalJson,
    pub interest_ratio: Option<RationalJson>,
}

impl RuleJson {
    /// Converts core rule records for serialization, resolving ids to
    /// labels through the database's dictionary.
    pub fn from_records(rules: &[RuleRecord], db: &TransactionDatabase) -> Vec<RuleJson> {
        rules.iter().map(|r| RuleJson::from_record(r, db)).collect()
    }

    fn from_record(rule: &RuleRecord, db: &TransactionDatabase) -> Self {
        RuleJson {
            form: rule.form.token().to_string(),
            antecedent: rule.antecedent.labels(db.dictionary()),
            consequent: rule.consequent.labels(db.dictionary()),
            support: RationalJson::from_rational(&rule.support),
            confidence: RationalJson::from_rational(&rule.confidence),
            leverage: RationalJson::from_rational(&rule.leverage),
            interest_ratio: rule.interest_ratio.as_ref().map(RationalJson::from_rational),
        }
    }
}

/// A full mining report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub config: ConfigJson,
    pub stats: StatsJson,
    pub stage_counts: StageCountsJson,
    pub rules: Vec<RuleJson>,
    pub warnings: Vec<String>,
}

fn retention(numer: u64, denom: u64) -> RationalJson {
    let value = if denom == 0 {
        Rational::new(1, 1)
    } else {
        Rational::new(numer as i128, denom as i128)
    };
    RationalJson::from_rational(&value)
}

fn stage_counts_json(
    counts: &StageCounts,
    support_filter_retention: RationalJson,
    rule_emission_retention: RationalJson,
) -> StageCountsJson {
    StageCountsJson {
        frequent_itemsets: counts.frequent_itemsets,
        candidate_pairs: counts.candidate_pairs,
        candidate_pairs_passing_support: counts.candidate_pairs_passing_support,
        rules_emitted: counts.rules_emitted,
        support_filter_retention,
        rule_emission_retention,
    }
}

impl RunReport {
    /// Assembles the report for a pipeline run. `warnings` should carry
    /// the config-validation advisories; degenerate-antecedent
    /// diagnostics are appended here.
    pub fn build(
        db: &TransactionDatabase,
        config: &MiningConfig,
        run: &MiningRun,
        mut warnings: Vec<String>,
    ) -> RunReport {
        for d in &run.degenerate {
            warnings.push(format!(
                "degenerate antecedent: rule form {} for ({} => {}) skipped; the antecedent occurs in every transaction so its negation is empty",
                d.form.token(),
                d.antecedent.labels(db.dictionary()).join(" "),
                d.consequent.labels(db.dictionary()).join(" "),
            ));
        }
        RunReport {
            config: ConfigJson::from_config(config),
            stats: StatsJson {
                transactions: db.transaction_count(),
                items: db.item_count() as u64,
            },
            stage_counts: stage_counts_json(
                &run.search_space.counts,
                RationalJson::from_rational(&run.search_space.support_filter_retention),
                RationalJson::from_rational(&run.search_space.rule_emission_retention),
            ),
            rules: run.rules.iter().map(|r| RuleJson::from_record(r, db)).collect(),
            warnings,
        }
    }

    /// Assembles a report from the brute-force route. Lets tests compare
    /// the two implementations at the serialized level with `report`.
    pub fn from_oracle(
        db: &TransactionDatabase,
        config: &MiningConfig,
        oracle: &OracleResult,
        warnings: Vec<String>,
    ) -> RunReport {
        let counts = &oracle.stage_counts;
        RunReport {
            config: ConfigJson::from_config(config),
            stats: StatsJson {
                transactions: db.transaction_count(),
                items: db.item_count() as u64,
            },
            stage_counts: stage_counts_json(
                counts,
                retention(counts.candidate_pairs_passing_support, counts.candidate_pairs),
                retention(counts.rules_emitted, counts.candidate_pairs_passing_support),
            ),
            rules: oracle.rules.iter().map(|r| RuleJson::from_record(r, db)).collect(),
            warnings,
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// The rule list as CSV, one rule per row, item labels joined with
    /// spaces, measures in the same decimal rendering as the JSON.
    pub fn rules_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record([
                "form",
                "antecedent",
                "consequent",
                "support",
                "confidence",
                "leverage",
                "interest_ratio",
            ])
            .expect("csv header");
        for rule in &self.rules {
            let row = [
                rule.form.clone(),
                rule.antecedent.join(" "),
                rule.consequent.join(" "),
                rule.support.decimal.clone(),
                rule.confidence.decimal.clone(),
                rule.leverage.decimal.clone(),
                rule.interest_ratio
                    .as_ref()
                    .map(|r| r.decimal.clone())
                    .unwrap_or_default(),
            ];
            writer.write_record(&row).expect("csv row");
        }
        String::from_utf8(writer.into_inner().expect("csv buffer")).expect("csv is utf8")
    }

    /// Parses a report file's content.
    pub fn parse(text: &str, path: &Path) -> Result<RunReport, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::MalformedReport {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })
    }
}

/// One rule reduced to exact values for set comparison.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct RuleKey {
    form: String,
    antecedent: Vec<String>,
    consequent: Vec<String>,
    support: Rational,
    confidence: Rational,
    leverage: Rational,
    interest_ratio: Option<Rational>,
}

impl RuleKey {
    fn of(rule: &RuleJson, path: &Path) -> Result<RuleKey, CliError> {
        let exact = |r: &RationalJson| {
            r.to_rational().map_err(|reason| CliError::MalformedReport {
                path: path.to_path_buf(),
                reason,
            })
        };
        Ok(RuleKey {
            form: rule.form.clone(),
            antecedent: rule.antecedent.clone(),
            consequent: rule.consequent.clone(),
            support: exact(&rule.support)?,
            confidence: exact(&rule.confidence)?,
            leverage: exact(&rule.leverage)?,
            interest_ratio: rule.interest_ratio.as_ref().map(&exact).transpose()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageDelta {
    pub first: u64,
    pub second: u64,
    pub delta: i64,
}

impl StageDelta {
    fn of(first: u64, second: u64) -> StageDelta {
        StageDelta { first, second, delta: second as i64 - first as i64 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageDeltas {
    pub frequent_itemsets: StageDelta,
    pub candidate_pairs: StageDelta,
    pub candidate_pairs_passing_support: StageDelta,
    pub rules_emitted: StageDelta,
}

/// Outcome of diffing two reports: the symmetric difference of their rule
/// sets (compared on every field, exactly) and per-stage count deltas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDiff {
    pub identical_rules: bool,
    pub rules_only_in_first: Vec<RuleJson>,
    pub rules_only_in_second: Vec<RuleJson>,
    pub stage_deltas: StageDeltas,
}

pub fn diff_reports(
    first: &RunReport,
    first_path: &Path,
    second: &RunReport,
    second_path: &Path,
) -> Result<ReportDiff, CliError> {
    let keyed = |report: &RunReport, path: &Path| -> Result<BTreeSet<RuleKey>, CliError> {
        report.rules.iter().map(|r| RuleKey::of(r, path)).collect()
    };
    let first_keys = keyed(first, first_path)?;
    let second_keys = keyed(second, second_path)?;

    let back_to_json = |key: &RuleKey| RuleJson {
        form: key.form.clone(),
        antecedent: key.antecedent.clone(),
        consequent: key.consequent.clone(),
        support: RationalJson::from_rational(&key.support),
        confidence: RationalJson::from_rational(&key.confidence),
        leverage: RationalJson::from_rational(&key.leverage),
        interest_ratio: key.interest_ratio.as_ref().map(RationalJson::from_rational),
    };

    let only_first: Vec<RuleJson> =
        first_keys.difference(&second_keys).map(back_to_json).collect();
    let only_second: Vec<RuleJson> =
        second_keys.difference(&first_keys).map(back_to_json).collect();

    Ok(ReportDiff {
        identical_rules: only_first.is_empty() && only_second.is_empty(),
        rules_only_in_first: only_first,
        rules_only_in_second: only_second,
        stage_deltas: StageDeltas {
            frequent_itemsets: StageDelta::of(
                first.stage_counts.frequent_itemsets,
                second.stage_counts.frequent_itemsets,
            ),
            candidate_pairs: StageDelta::of(
                first.stage_counts.candidate_pairs,
                second.stage_counts.candidate_pairs,
            ),
            candidate_pairs_passing_support: StageDelta::of(
                first.stage_counts.candidate_pairs_passing_support,
                second.stage_counts.candidate_pairs_passing_support,
            ),
            rules_emitted: StageDelta::of(
                first.stage_counts.rules_emitted,
                second.stage_counts.rules_emitted,
            ),
        },
    })
}

impl ReportDiff {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("diff serializes");
        out.push('\n');
        out
    }
}
