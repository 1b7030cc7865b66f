//! Small reference databases shared by the test suites.

use crate::transactions::TransactionDatabase;

/// Builds a database over the items `soy` and `salt` from the four cells
/// of their contingency table: rows with both, with soy only, with salt
/// only, and with neither. "Neither" baskets hold a filler item `pepper`,
/// since a basket with nothing in it would not be a transaction.
///
/// Panics if all four cells are zero.
pub fn two_by_two(
    both: usize,
    first_only: usize,
    second_only: usize,
    neither: usize,
) -> TransactionDatabase {
    let mut rows: Vec<Vec<&str>> = Vec::with_capacity(both + first_only + second_only + neither);
    rows.extend(std::iter::repeat_n(vec!["soy", "salt"], both));
    rows.extend(std::iter::repeat_n(vec!["soy"], first_only));
    rows.extend(std::iter::repeat_n(vec!["salt"], second_only));
    rows.extend(std::iter::repeat_n(vec!["pepper"], neither));
    TransactionDatabase::from_transactions(rows).expect("at least one cell must be nonzero")
}

/// 100 baskets in which soy sauce and salt reinforce each other:
/// conf(soy => salt) is 0.8 while the pair still sits slightly below
/// independence, so the positive rule passes on leverage magnitude.
pub fn soy_salt_positive() -> TransactionDatabase {
    two_by_two(20, 5, 70, 5)
}

/// 100 baskets in which soy sauce and salt repel each other: the pair
/// occurs together in only 5, so soy => not-salt is the strong rule.
pub fn soy_salt_negative() -> TransactionDatabase {
    two_by_two(5, 35, 55, 5)
}
