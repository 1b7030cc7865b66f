//! Level-wise frequent itemset search and negative-pair candidate
//! generation.
//!
//! The miner is a classic bottom-up pass: level k+1 candidates come from
//! joining level-k sets that share a (k-1)-prefix, get pruned by downward
//! closure, and are then counted against the bit columns. Counting within a
//! level runs on rayon but collects in candidate order, so results are
//! identical for any thread count.
//!
//! Negative candidates are ordered pairs (A, B) of disjoint frequent
//! itemsets. Their unions are deliberately not required to be frequent;
//! interesting negative pairs are exactly the ones whose union tends to be
//! rare.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::form::RuleForms;
use crate::rational::{count_fraction, ratio, Rational};
use crate::transactions::{Itemset, TransactionDatabase};

/// User thresholds and limits for one mining run.
///
/// Thresholds are exact fractions; `max_len` caps the size of any frequent
/// itemset as well as `|A| + |B|` for negative pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiningConfig {
    /// Minimum support for frequent itemsets and for every emitted rule.
    pub minsprt: Rational,
    /// Minimum confidence for every emitted rule.
    pub minconf: Rational,
    /// Minimum leverage magnitude for a rule to count as interesting.
    pub mininterest: Rational,
    /// Largest itemset size explored. At least 2.
    pub max_len: usize,
    /// Which rule shapes to emit.
    pub rule_forms: RuleForms,
    /// When set, negative rules pass the interest test on |leverage| instead
    /// of requiring positive leverage.
    pub use_abs_interest_for_negative: bool,
}

impl Default for MiningConfig {
    fn default() -> Self {
        MiningConfig {
            minsprt: ratio(1, 10),
            minconf: ratio(1, 2),
            mininterest: ratio(1, 100),
            max_len: 6,
            rule_forms: RuleForms::all(),
            use_abs_interest_for_negative: false,
        }
    }
}

/// Smallest count c with c/n >= minsprt.
pub(crate) fn min_support_count(minsprt: &Rational, n: u64) -> u64 {
    let p = *minsprt.numer();
    let q = *minsprt.denom();
    let scaled = p.saturating_mul(n as i128);
    scaled.div_euclid(q).max(0) as u64 + u64::from(scaled.rem_euclid(q) != 0)
}

/// All frequent itemsets of one mining run, grouped by size.
#[derive(Debug, Clone)]
pub struct FrequentSet {
    n: u64,
    levels: Vec<Vec<(Itemset, u64)>>,
    lookup: HashMap<Itemset, u64>,
}

impl FrequentSet {
    /// Transaction count of the mined database.
    pub fn transaction_count(&self) -> u64 {
        self.n
    }

    /// Frequent itemsets of size `size`, in ascending itemset order.
    pub fn level(&self, size: usize) -> &[(Itemset, u64)] {
        match size.checked_sub(1).and_then(|i| self.levels.get(i)) {
            Some(level) => level,
            None => &[],
        }
    }

    /// Size of the largest non-empty level.
    pub fn max_size(&self) -> usize {
        self.levels.len()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.iter().all(Vec::is_empty)
    }

    pub fn contains(&self, itemset: &Itemset) -> bool {
        self.lookup.contains_key(itemset)
    }

    /// Occurrence count, if the itemset is frequent.
    pub fn count(&self, itemset: &Itemset) -> Option<u64> {
        self.lookup.get(itemset).copied()
    }

    /// Support, if the itemset is frequent.
    pub fn support(&self, itemset: &Itemset) -> Option<Rational> {
        self.count(itemset).map(|c| count_fraction(c, self.n))
    }

    /// All members, smallest sizes first, ascending within a level.
    pub fn iter(&self) -> impl Iterator<Item = (&Itemset, u64)> + '_ {
        self.levels.iter().flatten().map(|(s, c)| (s, *c))
    }
}

/// Finds every itemset with support at least `config.minsprt` and size at
/// most `config.max_len`.
pub fn mine_frequent(db: &TransactionDatabase, config: &MiningConfig) -> FrequentSet {
    let n = db.transaction_count();
    let min_count = min_support_count(&config.minsprt, n);
    let mut lookup = HashMap::new();
    let mut levels: Vec<Vec<(Itemset, u64)>> = Vec::new();

    let mut level: Vec<(Itemset, u64)> = (0..db.item_count() as u32)
        .filter_map(|id| {
            let itemset = Itemset::singleton(id);
            let count = db.support_count(&itemset).expect("ids are in range");
            (count >= min_count).then_some((itemset, count))
        })
        .collect();

    while !level.is_empty() {
        for (itemset, count) in &level {
            lookup.insert(itemset.clone(), *count);
        }
        let size = levels.len() + 1;
        levels.push(level);
        if size >= config.max_len {
            break;
        }
        let candidates = join_level(levels.last().expect("just pushed"), &lookup);
        level = candidates
            .into_par_iter()
            .map(|candidate| {
                let count = db.support_count(&candidate).expect("ids are in range");
                (candidate, count)
            })
            .filter(|(_, count)| *count >= min_count)
            .collect();
    }

    FrequentSet { n, levels, lookup }
}

/// Joins pairs sharing all but the last item, then prunes candidates with
/// any infrequent subset one size down.
fn join_level(
    level: &[(Itemset, u64)],
    frequent: &HashMap<Itemset, u64>,
) -> Vec<Itemset> {
    let mut out = Vec::new();
    for (i, (left, _)) in level.iter().enumerate() {
        let prefix = &left.as_slice()[..left.len() - 1];
        for (right, _) in &level[i + 1..] {
            if &right.as_slice()[..right.len() - 1] != prefix {
                break;
            }
            let mut items = left.as_slice().to_vec();
            items.push(*right.as_slice().last().expect("sets are non-empty"));
            let candidate = Itemset::new(items);
            if all_subsets_frequent(&candidate, frequent) {
                out.push(candidate);
            }
        }
    }
    out
}

fn all_subsets_frequent(candidate: &Itemset, frequent: &HashMap<Itemset, u64>) -> bool {
    let items = candidate.as_slice();
    (0..items.len()).all(|skip| {
        let subset: Vec<u32> = items
            .iter()
            .enumerate()
            .filter_map(|(i, &id)| (i != skip).then_some(id))
            .collect();
        frequent.contains_key(&Itemset::from_sorted(subset))
    })
}

/// An ordered pair of disjoint frequent itemsets, the raw material for
/// negative rules. `union_count` is the occurrence count of A united with
/// B, whether or not that union is frequent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NegativeCandidate {
    pub antecedent: Itemset,
    pub consequent: Itemset,
    pub union_count: u64,
}

/// Enumerates every ordered pair (A, B) of disjoint frequent itemsets with
/// `|A| + |B| <= config.max_len` and attaches the union count. Each
/// distinct union is counted once; counts reuse the frequent lookup when
/// possible. Output is sorted by (antecedent, consequent).
pub fn generate_negative_candidates(
    frequent: &FrequentSet,
    db: &TransactionDatabase,
    config: &MiningConfig,
) -> Vec<NegativeCandidate> {
    let members: Vec<&Itemset> = frequent.iter().map(|(s, _)| s).collect();
    let mut pairs: Vec<(Itemset, Itemset, Itemset)> = Vec::new();
    let mut unions: BTreeSet<Itemset> = BTreeSet::new();
    for a in &members {
        for b in &members {
            if a.len() + b.len() > config.max_len || !a.is_disjoint(b) {
                continue;
            }
            let union = a.union(b);
            unions.insert(union.clone());
            pairs.push(((*a).clone(), (*b).clone(), union));
        }
    }

    let union_counts: HashMap<Itemset, u64> = unions
        .into_iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|u| {
            let count = frequent
                .count(&u)
                .unwrap_or_else(|| db.support_count(&u).expect("ids are in range"));
            (u, count)
        })
        .collect();

    pairs.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    pairs
        .into_iter()
        .map(|(antecedent, consequent, union)| NegativeCandidate {
            antecedent,
            consequent,
            union_count: union_counts[&union],
        })
        .collect()
}

/// Raw sizes of each pipeline stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StageCounts {
    pub frequent_itemsets: u64,
    pub candidate_pairs: u64,
    /// Pairs where at least one of the three negated supports clears
    /// minsprt; the form filter is not applied here.
    pub candidate_pairs_passing_support: u64,
    pub rules_emitted: u64,
}

/// Stage counts plus how much of the search space each filter kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpaceReport {
    pub counts: StageCounts,
    /// passing / candidate pairs; 1 when there were no pairs.
    pub support_filter_retention: Rational,
    /// rules emitted / passing pairs; 1 when nothing passed.
    pub rule_emission_retention: Rational,
}

/// Summarizes how far each stage narrowed the search. `rules_emitted` is
/// supplied by the caller since rule extraction happens downstream.
pub fn search_space_report(
    frequent: &FrequentSet,
    candidates: &[NegativeCandidate],
    rules_emitted: u64,
    config: &MiningConfig,
) -> SearchSpaceReport {
    let n = frequent.transaction_count();
    let min_count = min_support_count(&config.minsprt, n);
    let passing = candidates
        .iter()
        .filter(|c| {
            let count_a = frequent
                .count(&c.antecedent)
                .expect("candidate parts are frequent");
            let count_b = frequent
                .count(&c.consequent)
                .expect("candidate parts are frequent");
            let u = c.union_count;
            count_a - u >= min_count
                || count_b - u >= min_count
                || (n + u) - count_a - count_b >= min_count
        })
        .count() as u64;
    let counts = StageCounts {
        frequent_itemsets: frequent.len() as u64,
        candidate_pairs: candidates.len() as u64,
        candidate_pairs_passing_support: passing,
        rules_emitted,
    };
    let retention = |num: u64, den: u64| {
        if den == 0 {
            ratio(1, 1)
        } else {
            count_fraction(num, den)
        }
    };
    SearchSpaceReport {
        support_filter_retention: retention(passing, counts.candidate_pairs),
        rule_emission_retention: retention(rules_emitted, passing),
        counts,
    }
}
