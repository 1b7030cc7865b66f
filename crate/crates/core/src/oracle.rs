//! Brute-force reference miner.
//!
//! This module recomputes everything the optimized pipeline produces, the
//! slow way: supports by scanning every transaction per itemset, rule
//! candidates by exhaustive enumeration, thresholds by direct fraction
//! comparisons. It shares no counting, candidate generation or threshold
//! plumbing with the mining and rules modules, so agreement between the
//! two routes is meaningful evidence. Tests diff them wholesale.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::Signed;

use crate::form::{NegationForm, RuleForm};
use crate::mining::{MiningConfig, StageCounts};
use crate::rational::ratio;
use crate::rules::RuleRecord;
use crate::transactions::{Itemset, SupportTable, TransactionDatabase};

/// Exhaustive enumeration is exponential in the item count; beyond this
/// many items the oracle refuses to run.
pub const MAX_ORACLE_ITEMS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("oracle handles at most {MAX_ORACLE_ITEMS} items, database has {0}")]
    UniverseTooLarge(usize),
}

/// Counts every itemset of size 1 through `max_len` by literal
/// transaction scans.
pub fn oracle_supports(
    db: &TransactionDatabase,
    max_len: usize,
) -> Result<SupportTable, OracleError> {
    let items = db.item_count();
    if items > MAX_ORACLE_ITEMS {
        return Err(OracleError::UniverseTooLarge(items));
    }
    let mut table = SupportTable::new(db.transaction_count());
    for size in 1..=max_len.min(items) {
        for combo in (0..items as u32).combinations(size) {
            let itemset = Itemset::new(combo);
            let count = db
                .transactions()
                .iter()
                .filter(|t| itemset.is_subset_of(t))
                .count() as u64;
            table.insert(itemset, count);
        }
    }
    Ok(table)
}

/// Everything the reference route produces for one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub supports: SupportTable,
    pub rules: Vec<RuleRecord>,
    pub stage_counts: StageCounts,
}

/// Every way to deal the items of `q` onto two non-empty sides, built by
/// recursive assignment rather than bitmask sweeps.
fn ordered_splits(q: &Itemset) -> Vec<(Itemset, Itemset)> {
    fn recurse(
        rest: &[u32],
        left: &mut Vec<u32>,
        right: &mut Vec<u32>,
        out: &mut Vec<(Itemset, Itemset)>,
    ) {
        match rest.split_first() {
            None => {
                if !left.is_empty() && !right.is_empty() {
                    out.push((Itemset::new(left.clone()), Itemset::new(right.clone())));
                }
            }
            Some((&id, tail)) => {
                left.push(id);
                recurse(tail, left, right, out);
                left.pop();
                right.push(id);
                recurse(tail, left, right, out);
                right.pop();
            }
        }
    }
    let mut out = Vec::new();
    recurse(q.as_slice(), &mut Vec::new(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Mines rules exhaustively: every split of every itemset up to
/// `config.max_len` is tested against the thresholds with fraction
/// arithmetic on literally-counted supports. Returns the rules sorted and
/// deduplicated, plus stage counts matching the pipeline's accounting.
pub fn oracle_rules(
    db: &TransactionDatabase,
    config: &MiningConfig,
) -> Result<OracleResult, OracleError> {
    let supports = oracle_supports(db, config.max_len)?;
    let one = ratio(1, 1);

    let frequent_itemsets = supports
        .iter()
        .filter(|(_, count)| supports.support_of_count(*count) >= config.minsprt)
        .count() as u64;

    let mut rules: Vec<RuleRecord> = Vec::new();
    let mut candidate_pairs = 0u64;
    let mut candidate_pairs_passing_support = 0u64;

    for (q, count_q) in supports.iter() {
        if q.len() < 2 {
            continue;
        }
        let support_q = supports.support_of_count(count_q);
        for (a, b) in ordered_splits(q) {
            let support_a = supports.support(&a).expect("subset sizes are covered");
            let support_b = supports.support(&b).expect("subset sizes are covered");

            if config.rule_forms.positive
                && support_q >= config.minsprt
                && (support_q - support_a * support_b).abs() >= config.mininterest
                && support_q / support_a >= config.minconf
            {
                rules.push(RuleRecord {
                    form: RuleForm::Positive,
                    antecedent: a.clone(),
                    consequent: b.clone(),
                    support: support_q,
                    confidence: support_q / support_a,
                    leverage: support_q - support_a * support_b,
                    interest_ratio: Some(support_q / (support_a * support_b)),
                });
            }

            if support_a < config.minsprt || support_b < config.minsprt {
                continue;
            }
            candidate_pairs += 1;

            let negated = |form: NegationForm| {
                db.negated_support_direct(&a, &b, form)
                    .expect("split parts are valid and disjoint")
            };
            if NegationForm::ALL.iter().any(|&f| negated(f) >= config.minsprt) {
                candidate_pairs_passing_support += 1;
            }

            for form in config.rule_forms.negation_forms() {
                if form.negates_antecedent() && support_a == one {
                    continue;
                }
                let support_rule = negated(form);
                if support_rule < config.minsprt {
                    continue;
                }
                let (marginal_ant, marginal_cons) = match form {
                    NegationForm::ConsequentAbsent => (support_a, one - support_b),
                    NegationForm::AntecedentAbsent => (one - support_a, support_b),
                    NegationForm::BothAbsent => (one - support_a, one - support_b),
                };
                let lev = support_rule - marginal_ant * marginal_cons;
                let passes = if config.use_abs_interest_for_negative {
                    lev.abs() >= config.mininterest
                } else {
                    lev >= config.mininterest
                };
                if !passes {
                    continue;
                }
                let conf = support_rule / marginal_ant;
                if conf < config.minconf {
                    continue;
                }
                let expectation = marginal_ant * marginal_cons;
                rules.push(RuleRecord {
                    form: RuleForm::Negative(form),
                    antecedent: a.clone(),
                    consequent: b.clone(),
                    support: support_rule,
                    confidence: conf,
                    leverage: lev,
                    interest_ratio: (*expectation.numer() != 0)
                        .then(|| support_rule / expectation),
                });
            }
        }
    }

    rules.sort();
    rules.dedup();
    let stage_counts = StageCounts {
        frequent_itemsets,
        candidate_pairs,
        candidate_pairs_passing_support,
        rules_emitted: rules.len() as u64,
    };
    Ok(OracleResult { supports, rules, stage_counts })
}

/// Ordered pairs of disjoint itemsets whose supports both clear `minsprt`,
/// enumerated exhaustively. Used by tests that want the candidate universe
/// without running full rule extraction.
pub fn oracle_frequent_pairs(
    db: &TransactionDatabase,
    config: &MiningConfig,
) -> Result<Vec<(Itemset, Itemset)>, OracleError> {
    let supports = oracle_supports(db, config.max_len)?;
    let frequent: Vec<&Itemset> = supports
        .iter()
        .filter(|(_, count)| supports.support_of_count(*count) >= config.minsprt)
        .map(|(s, _)| s)
        .collect();
    let mut out = BTreeSet::new();
    for &a in &frequent {
        for &b in &frequent {
            if a.len() + b.len() <= config.max_len && a.is_disjoint(b) {
                out.insert((a.clone(), b.clone()));
            }
        }
    }
    Ok(out.into_iter().collect())
}
