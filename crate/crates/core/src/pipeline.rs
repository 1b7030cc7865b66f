//! One-call orchestration of the full mining pipeline.

use std::time::{Duration, Instant};

use crate::mining::{
    generate_negative_candidates, mine_frequent, search_space_report, FrequentSet, MiningConfig,
    NegativeCandidate, SearchSpaceReport,
};
use crate::rules::{
    extract_negative_rules, extract_positive_rules, DegenerateAntecedent, RuleRecord,
};
use crate::transactions::TransactionDatabase;

/// Wall time spent in each stage. Diagnostic only; nothing downstream
/// that must be reproducible may depend on these.
#[derive(Debug, Clone, Copy, Default)]
pub struct StageTimings {
    pub frequent: Duration,
    pub candidates: Duration,
    pub extraction: Duration,
}

/// Everything one mining run produces.
#[derive(Debug, Clone)]
pub struct MiningRun {
    pub frequent: FrequentSet,
    pub candidates: Vec<NegativeCandidate>,
    /// All emitted rules, canonically sorted across forms.
    pub rules: Vec<RuleRecord>,
    pub degenerate: Vec<DegenerateAntecedent>,
    pub search_space: SearchSpaceReport,
    pub timings: StageTimings,
}

/// Runs the pipeline end to end: frequent itemsets, negative candidates,
/// rule extraction for the enabled forms, and the search-space summary.
pub fn run_mining(db: &TransactionDatabase, config: &MiningConfig) -> MiningRun {
    let start = Instant::now();
    let frequent = mine_frequent(db, config);
    let after_frequent = Instant::now();

    // Candidate pairs feed the search-space accounting even when no
    // negated form is enabled, so this stage is unconditional.
    let candidates = generate_negative_candidates(&frequent, db, config);
    let after_candidates = Instant::now();

    let mut rules = extract_positive_rules(db, &frequent, config);
    let negative = extract_negative_rules(db, &candidates, config);
    rules.extend(negative.rules);
    rules.sort();
    let after_extraction = Instant::now();

    let search_space = search_space_report(&frequent, &candidates, rules.len() as u64, config);
    MiningRun {
        frequent,
        candidates,
        rules,
        degenerate: negative.degenerate,
        search_space,
        timings: StageTimings {
            frequent: after_frequent - start,
            candidates: after_candidates - after_frequent,
            extraction: after_extraction - after_candidates,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::soy_salt_negative;
    use crate::form::{RuleForm, RuleForms};
    use crate::rational::parse_decimal;

    #[test]
    fn runs_all_stages_and_merges_rules() {
        let db = soy_salt_negative();
        let config = MiningConfig {
            minsprt: parse_decimal("0.3").unwrap(),
            minconf: parse_decimal("0.52").unwrap(),
            mininterest: parse_decimal("0.05").unwrap(),
            ..MiningConfig::default()
        };
        let run = run_mining(&db, &config);
        assert_eq!(run.search_space.counts.frequent_itemsets, 2);
        assert_eq!(run.search_space.counts.candidate_pairs, 2);
        assert_eq!(run.search_space.counts.rules_emitted, 4);
        assert_eq!(run.rules.len(), 4);
        let mut sorted = run.rules.clone();
        sorted.sort();
        assert_eq!(run.rules, sorted);
    }

    #[test]
    fn positive_only_still_accounts_for_candidate_pairs() {
        let db = soy_salt_negative();
        let config = MiningConfig {
            minsprt: parse_decimal("0.3").unwrap(),
            rule_forms: RuleForms::positive_only(),
            ..MiningConfig::default()
        };
        let run = run_mining(&db, &config);
        assert_eq!(run.search_space.counts.candidate_pairs, 2);
        assert!(run.rules.iter().all(|r| r.form == RuleForm::Positive));
        assert_eq!(run.search_space.counts.rules_emitted, 0);
    }
}
