//! Exact mining of positive and negative association rules.
//!
//! Given a database of transactions (baskets of items), this crate finds
//! implication rules worth looking at: the familiar positive kind,
//! "baskets with X tend to contain Y", and three negated kinds, such as
//! "baskets with X tend to *lack* Y". A rule qualifies when its support,
//! its confidence and its leverage against the independence assumption
//! all clear user thresholds. All arithmetic is exact fractions, so
//! thresholds behave the same on every platform and boundary ties are
//! decided correctly instead of by floating-point luck.
//!
//! The pieces:
//!
//! * [`transactions`]: basket parsing, item interning, support counting.
//! * [`mining`]: level-wise frequent itemset search and the candidate
//!   pairs for negative rules.
//! * [`rules`]: interest measures, rule extraction, itemset
//!   classification.
//! * [`oracle`]: an independent brute-force reference implementation,
//!   used to cross-check the fast path in tests.
//! * [`pipeline`]: one-call orchestration of a whole run.
//!
//! ```
//! use negarm_core::{load_basket, run_mining, Delimiter, MiningConfig};
//!
//! let db = load_basket("soy salt\nsoy\nsalt\n", Delimiter::Whitespace)?;
//! let run = run_mining(&db, &MiningConfig::default());
//! for rule in &run.rules {
//!     println!("{} => {} ({})", rule.antecedent, rule.consequent, rule.form);
//! }
//! # Ok::<(), negarm_core::TransactionError>(())
//! ```

mod bits;
pub mod fixtures;
pub mod form;
pub mod mining;
pub mod oracle;
pub mod pipeline;
pub mod rational;
pub mod rules;
pub mod transactions;

pub use form::{NegationForm, RuleForm, RuleForms};
pub use mining::{
    generate_negative_candidates, mine_frequent, search_space_report, FrequentSet, MiningConfig,
    NegativeCandidate, SearchSpaceReport, StageCounts,
};
pub use oracle::{
    oracle_frequent_pairs, oracle_rules, oracle_supports, OracleError, OracleResult,
    MAX_ORACLE_ITEMS,
};
pub use pipeline::{run_mining, MiningRun, StageTimings};
pub use rational::{
    count_fraction, parse_decimal, ratio, to_decimal, ParseRationalError, Rational, REPORT_DIGITS,
};
pub use rules::{
    classify_itemset, confidence, enumerate_partitions, extract_negative_rules,
    extract_positive_rules, interest_ratio, leverage, mininterest_upper_bound, validate_config,
    Classification, ConfigError, DegenerateAntecedent, NegativeExtraction, RuleError, RuleRecord,
    Verdict,
};
pub use transactions::{
    load_basket, Delimiter, ItemDictionary, Itemset, SupportTable, TransactionDatabase,
    TransactionError,
};
