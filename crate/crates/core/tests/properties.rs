//! Property tests over randomized small databases.
//!
//! These pin down the algebra the measures must satisfy regardless of
//! data: the inclusion-exclusion identities between plain and negated
//! supports, the quadrant decomposition, leverage antisymmetry,
//! monotonicity of support under union, and the agreement of the two
//! negated-support routes.

use std::collections::HashSet;

use num_traits::Signed;
use proptest::prelude::*;

use negarm_core::{
    classify_itemset, enumerate_partitions, generate_negative_candidates, leverage,
    mine_frequent, mininterest_upper_bound, parse_decimal, to_decimal, Delimiter, Itemset,
    MiningConfig, NegationForm, TransactionDatabase, Verdict,
};

fn small_db() -> impl Strategy<Value = TransactionDatabase> {
    (2usize..=8).prop_flat_map(|items| {
        prop::collection::vec(
            prop::collection::vec(0..items as u32, 0..=items),
            1..=24,
        )
        .prop_map(move |rows| {
            let mut labeled: Vec<Vec<String>> = rows
                .into_iter()
                .map(|row| row.into_iter().map(|i| format!("i{i}")).collect())
                .collect();
            if labeled.iter().all(Vec::is_empty) {
                labeled.push(vec!["i0".to_string()]);
            }
            TransactionDatabase::from_transactions(labeled).unwrap()
        })
    })
}

/// A database plus two disjoint non-empty itemsets drawn from its items.
fn db_with_pair() -> impl Strategy<Value = (TransactionDatabase, Itemset, Itemset)> {
    small_db()
        .prop_flat_map(|db| {
            let items = db.item_count();
            (Just(db), prop::collection::vec(0u8..3, items))
        })
        .prop_filter_map("both sides need an item", |(db, assignment)| {
            let pick = |tag: u8| -> Vec<u32> {
                assignment
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &t)| (t == tag).then_some(i as u32))
                    .collect()
            };
            let a = pick(1);
            let b = pick(2);
            if a.is_empty() || b.is_empty() {
                return None;
            }
            Some((db, Itemset::new(a), Itemset::new(b)))
        })
}

fn thresholds() -> impl Strategy<Value = MiningConfig> {
    (
        prop::sample::select(vec!["0.1", "0.2", "0.3", "0.5"]),
        prop::sample::select(vec!["0.3", "0.5", "0.7"]),
        prop::sample::select(vec!["0.01", "0.02", "0.05"]),
        2usize..=4,
        any::<bool>(),
    )
        .prop_map(|(minsprt, minconf, mininterest, max_len, abs)| MiningConfig {
            minsprt: parse_decimal(minsprt).unwrap(),
            minconf: parse_decimal(minconf).unwrap(),
            mininterest: parse_decimal(mininterest).unwrap(),
            max_len,
            use_abs_interest_for_negative: abs,
            ..MiningConfig::default()
        })
}

proptest! {
    #[test]
    fn negated_support_routes_agree((db, a, b) in db_with_pair()) {
        for form in NegationForm::ALL {
            let derived = db.negated_support(&a, &b, form).unwrap();
            let direct = db.negated_support_direct(&a, &b, form).unwrap();
            prop_assert_eq!(derived, direct);
        }
    }

    #[test]
    fn negated_supports_follow_inclusion_exclusion((db, a, b) in db_with_pair()) {
        let sprt = |s: &Itemset| db.support(s).unwrap();
        let union = a.union(&b);
        let s_union = db.support(&union).unwrap();
        prop_assert_eq!(
            db.negated_support(&a, &b, NegationForm::ConsequentAbsent).unwrap(),
            sprt(&a) - s_union
        );
        prop_assert_eq!(
            db.negated_support(&a, &b, NegationForm::AntecedentAbsent).unwrap(),
            sprt(&b) - s_union
        );
        prop_assert_eq!(
            db.negated_support(&a, &b, NegationForm::BothAbsent).unwrap(),
            parse_decimal("1").unwrap() - sprt(&a) - sprt(&b) + s_union
        );
    }

    #[test]
    fn quadrants_sum_to_one((db, a, b) in db_with_pair()) {
        let total = db.support(&a.union(&b)).unwrap()
            + db.negated_support(&a, &b, NegationForm::ConsequentAbsent).unwrap()
            + db.negated_support(&a, &b, NegationForm::AntecedentAbsent).unwrap()
            + db.negated_support(&a, &b, NegationForm::BothAbsent).unwrap();
        prop_assert_eq!(total, parse_decimal("1").unwrap());
    }

    #[test]
    fn leverage_is_antisymmetric_between_mirrored_shapes((db, a, b) in db_with_pair()) {
        // sprt(A u notB) - sprt(A) * sprt(notB) == -(sprt(A u B) - sprt(A) * sprt(B))
        let one = parse_decimal("1").unwrap();
        let sprt_a = db.support(&a).unwrap();
        let sprt_b = db.support(&b).unwrap();
        let s_union = db.support(&a.union(&b)).unwrap();
        let s_anb = db.negated_support(&a, &b, NegationForm::ConsequentAbsent).unwrap();
        let positive_lev = leverage(&s_union, &sprt_a, &sprt_b);
        prop_assert_eq!(leverage(&s_anb, &sprt_a, &(one - sprt_b)), -positive_lev);
        // and the fully negated shape lands back at the positive sign
        let s_nanb = db.negated_support(&a, &b, NegationForm::BothAbsent).unwrap();
        prop_assert_eq!(
            leverage(&s_nanb, &(one - sprt_a), &(one - sprt_b)),
            positive_lev
        );
    }

    #[test]
    fn support_is_antitone_under_union((db, a, b) in db_with_pair()) {
        let union = a.union(&b);
        let s_union = db.support(&union).unwrap();
        prop_assert!(s_union <= db.support(&a).unwrap());
        prop_assert!(s_union <= db.support(&b).unwrap());
    }

    #[test]
    fn frequent_sets_are_downward_closed(db in small_db(), config in thresholds()) {
        let frequent = mine_frequent(&db, &config);
        for (itemset, count) in frequent.iter() {
            prop_assert!(db.support(itemset).unwrap() >= config.minsprt);
            prop_assert_eq!(db.support_count(itemset).unwrap(), count);
            if itemset.len() >= 2 {
                for (x, y) in enumerate_partitions(itemset).unwrap() {
                    prop_assert!(frequent.contains(&x), "{} missing", x);
                    prop_assert!(frequent.contains(&y), "{} missing", y);
                }
            }
        }
    }

    #[test]
    fn candidates_are_disjoint_frequent_and_unique(
        db in small_db(),
        config in thresholds(),
    ) {
        let frequent = mine_frequent(&db, &config);
        let candidates = generate_negative_candidates(&frequent, &db, &config);
        let mut seen = HashSet::new();
        for c in &candidates {
            prop_assert!(c.antecedent.is_disjoint(&c.consequent));
            prop_assert!(frequent.contains(&c.antecedent));
            prop_assert!(frequent.contains(&c.consequent));
            prop_assert!(c.antecedent.len() + c.consequent.len() <= config.max_len);
            prop_assert_eq!(
                db.support_count(&c.antecedent.union(&c.consequent)).unwrap(),
                c.union_count
            );
            prop_assert!(seen.insert((c.antecedent.clone(), c.consequent.clone())));
        }
        let mut sorted = candidates.clone();
        sorted.sort();
        prop_assert_eq!(&candidates, &sorted);
    }

    #[test]
    fn emitted_rules_always_clear_thresholds(db in small_db(), config in thresholds()) {
        let run = negarm_core::run_mining(&db, &config);
        for rule in &run.rules {
            prop_assert!(rule.support >= config.minsprt, "{:?}", rule);
            prop_assert!(rule.confidence >= config.minconf, "{:?}", rule);
            match rule.form {
                negarm_core::RuleForm::Positive => {
                    prop_assert!(rule.leverage.abs() >= config.mininterest)
                }
                negarm_core::RuleForm::Negative(_) => {
                    if config.use_abs_interest_for_negative {
                        prop_assert!(rule.leverage.abs() >= config.mininterest);
                    } else {
                        prop_assert!(rule.leverage >= config.mininterest);
                    }
                }
            }
            prop_assert!(rule.antecedent.is_disjoint(&rule.consequent));
        }
        let mut sorted = run.rules.clone();
        sorted.sort();
        prop_assert_eq!(&run.rules, &sorted);
    }

    #[test]
    fn classification_agrees_with_extraction(db in small_db(), config in thresholds()) {
        // an itemset classified positive must yield at least one positive
        // rule when it is frequent; mined positive rules imply a positive
        // classification of their union
        let run = negarm_core::run_mining(&db, &config);
        for rule in run.rules.iter().filter(|r| r.form == negarm_core::RuleForm::Positive) {
            let q = rule.antecedent.union(&rule.consequent);
            let outcome = classify_itemset(&db, &q, &config);
            prop_assert_eq!(outcome.verdict, Verdict::PositiveOfInterest);
            prop_assert!(outcome.witnesses.contains(rule));
        }
    }

    #[test]
    fn interest_bound_holds_for_all_minsprt(numer in 1i128..=999) {
        let minsprt = negarm_core::rational::ratio(numer, 1000);
        let bound = mininterest_upper_bound(&minsprt);
        prop_assert!(bound > negarm_core::rational::ratio(0, 1));
        prop_assert!(bound <= negarm_core::rational::ratio(1, 4));
    }

    #[test]
    fn decimal_rendering_roundtrips_power_of_ten_values(
        numer in 0u64..5000,
        denom_pow in 0u32..=6,
    ) {
        // values with power-of-ten denominators render exactly and reparse
        let denom = 10i128.pow(denom_pow);
        let value = negarm_core::rational::ratio(numer as i128, denom);
        let text = to_decimal(&value, 12);
        prop_assert_eq!(parse_decimal(&text).unwrap(), value);
    }

    #[test]
    fn basket_roundtrip_is_lossless(db in small_db()) {
        for delim in [Delimiter::Whitespace, Delimiter::Comma] {
            let text = db.to_basket_string(delim);
            let reloaded = negarm_core::load_basket(&text, delim).unwrap();
            prop_assert_eq!(&reloaded, &db);
        }
    }
}
