//! Basket ingestion, item interning and exact support counting.
//!
//! A [`TransactionDatabase`] is immutable once built: it owns the interned
//! item dictionary, the original rows, and one occurrence bit column per
//! item. Supports come back as exact fractions of the row count.
//!
//! Negated supports are available through two independent routes:
//! [`TransactionDatabase::negated_support`] combines three plain counts
//! arithmetically, while [`TransactionDatabase::negated_support_direct`]
//! scans every transaction and tests the literal condition. The two must
//! agree; tests lean on that redundancy.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::bits::{intersection_count, BitColumn};
use crate::form::NegationForm;
use crate::rational::{count_fraction, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransactionError {
    #[error("database contains no transactions")]
    EmptyDatabase,
    #[error("item id {0} is not part of this database")]
    UnknownItem(u32),
    #[error("item `{0}` is not part of this database")]
    UnknownLabel(String),
    #[error("itemset must not be empty")]
    EmptyItemset,
    #[error("antecedent and consequent must be disjoint")]
    OverlappingItemsets,
}

/// Token separator for the basket text format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Delimiter {
    /// Any run of whitespace separates items.
    #[default]
    Whitespace,
    /// Commas separate items; surrounding whitespace is trimmed.
    Comma,
}

/// Interned item labels. Ids are dense and assigned in first-seen order,
/// so loading the same basket text always yields the same numbering.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ItemDictionary {
    name_to_id: HashMap<String, u32>,
    id_to_name: Vec<String>,
}

impl ItemDictionary {
    pub fn intern(&mut self, label: &str) -> u32 {
        if let Some(&id) = self.name_to_id.get(label) {
            return id;
        }
        let id = self.id_to_name.len() as u32;
        self.name_to_id.insert(label.to_string(), id);
        self.id_to_name.push(label.to_string());
        id
    }

    pub fn id(&self, label: &str) -> Option<u32> {
        self.name_to_id.get(label).copied()
    }

    pub fn label(&self, id: u32) -> Option<&str> {
        self.id_to_name.get(id as usize).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.id_to_name.len()
    }

    pub fn is_empty(&self) -> bool {
        self.id_to_name.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.id_to_name
    }
}

/// A canonical itemset: strictly ascending item ids, no duplicates.
///
/// The derived lexicographic ordering doubles as the deterministic sort key
/// used everywhere rules and candidates are listed.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Itemset {
    items: Vec<u32>,
}

impl Itemset {
    pub fn empty() -> Self {
        Itemset { items: Vec::new() }
    }

    pub fn singleton(id: u32) -> Self {
        Itemset { items: vec![id] }
    }

    /// Builds a canonical itemset from arbitrary ids, sorting and deduping.
    pub fn new(mut items: Vec<u32>) -> Self {
        items.sort_unstable();
        items.dedup();
        Itemset { items }
    }

    /// Wraps a vector that is already strictly ascending.
    pub(crate) fn from_sorted(items: Vec<u32>) -> Self {
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]));
        Itemset { items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, id: u32) -> bool {
        self.items.binary_search(&id).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.items.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.items
    }

    pub fn union(&self, other: &Itemset) -> Itemset {
        let mut merged = Vec::with_capacity(self.items.len() + other.items.len());
        let (mut i, mut j) = (0, 0);
        while i < self.items.len() && j < other.items.len() {
            match self.items[i].cmp(&other.items[j]) {
                std::cmp::Ordering::Less => {
                    merged.push(self.items[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    merged.push(other.items[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    merged.push(self.items[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        merged.extend_from_slice(&self.items[i..]);
        merged.extend_from_slice(&other.items[j..]);
        Itemset { items: merged }
    }

    pub fn is_disjoint(&self, other: &Itemset) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.items.len() && j < other.items.len() {
            match self.items[i].cmp(&other.items[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn is_subset_of(&self, other: &Itemset) -> bool {
        let mut j = 0;
        for &item in &self.items {
            loop {
                if j == other.items.len() {
                    return false;
                }
                match other.items[j].cmp(&item) {
                    std::cmp::Ordering::Less => j += 1,
                    std::cmp::Ordering::Equal => {
                        j += 1;
                        break;
                    }
                    std::cmp::Ordering::Greater => return false,
                }
            }
        }
        true
    }

    /// Resolves ids to display labels. Unknown ids render as `?<id>`,
    /// which only happens if the set came from a different database.
    pub fn labels(&self, dictionary: &ItemDictionary) -> Vec<String> {
        self.items
            .iter()
            .map(|&id| {
                dictionary
                    .label(id)
                    .map(str::to_string)
                    .unwrap_or_else(|| format!("?{id}"))
            })
            .collect()
    }
}

impl FromIterator<u32> for Itemset {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        Itemset::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Itemset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, id) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable transaction database with per-item occurrence bit columns.
///
/// Construction rejects empty input, so the row count is always at least
/// one and supports are always well-defined fractions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransactionDatabase {
    transactions: Vec<Itemset>,
    dictionary: ItemDictionary,
    columns: Vec<BitColumn>,
}

impl TransactionDatabase {
    /// Builds a database from rows of item labels. Duplicate labels within
    /// a row collapse; rows with no items are dropped. Errors if nothing
    /// remains.
    pub fn from_transactions<R, S>(rows: impl IntoIterator<Item = R>) -> Result<Self, TransactionError>
    where
        R: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut dictionary = ItemDictionary::default();
        let mut transactions = Vec::new();
        for row in rows {
            let ids: Vec<u32> = row
                .into_iter()
                .map(|label| dictionary.intern(label.as_ref()))
                .collect();
            let itemset = Itemset::new(ids);
            if !itemset.is_empty() {
                transactions.push(itemset);
            }
        }
        if transactions.is_empty() {
            return Err(TransactionError::EmptyDatabase);
        }
        let n = transactions.len();
        let mut columns = vec![BitColumn::zeros(n); dictionary.len()];
        for (row, itemset) in transactions.iter().enumerate() {
            for id in itemset.iter() {
                columns[id as usize].set(row);
            }
        }
        Ok(TransactionDatabase { transactions, dictionary, columns })
    }

    /// Number of transactions. Always at least one.
    pub fn transaction_count(&self) -> u64 {
        self.transactions.len() as u64
    }

    /// Number of distinct items.
    pub fn item_count(&self) -> usize {
        self.dictionary.len()
    }

    pub fn dictionary(&self) -> &ItemDictionary {
        &self.dictionary
    }

    pub fn transactions(&self) -> &[Itemset] {
        &self.transactions
    }

    /// Resolves labels to a canonical itemset.
    pub fn itemset_from_labels<S: AsRef<str>>(
        &self,
        labels: &[S],
    ) -> Result<Itemset, TransactionError> {
        let mut ids = Vec::with_capacity(labels.len());
        for label in labels {
            let label = label.as_ref();
            let id = self
                .dictionary
                .id(label)
                .ok_or_else(|| TransactionError::UnknownLabel(label.to_string()))?;
            ids.push(id);
        }
        Ok(Itemset::new(ids))
    }

    fn validate(&self, itemset: &Itemset) -> Result<(), TransactionError> {
        match itemset.as_slice().last() {
            Some(&max) if (max as usize) >= self.item_count() => {
                Err(TransactionError::UnknownItem(max))
            }
            _ => Ok(()),
        }
    }

    /// Count of an itemset whose ids are known to be valid.
    /// The empty itemset is contained in every transaction.
    pub(crate) fn count_unchecked(&self, itemset: &Itemset) -> u64 {
        if itemset.is_empty() {
            return self.transaction_count();
        }
        let columns: Vec<&BitColumn> = itemset
            .iter()
            .map(|id| &self.columns[id as usize])
            .collect();
        intersection_count(&columns)
    }

    /// Number of transactions containing every item of `itemset`.
    pub fn support_count(&self, itemset: &Itemset) -> Result<u64, TransactionError> {
        self.validate(itemset)?;
        Ok(self.count_unchecked(itemset))
    }

    /// Fraction of transactions containing every item of `itemset`.
    pub fn support(&self, itemset: &Itemset) -> Result<Rational, TransactionError> {
        Ok(count_fraction(self.support_count(itemset)?, self.transaction_count()))
    }

    /// Negated support for the pair `(a, b)` under `form`, computed from
    /// plain counts: the count of a transaction set like "contains A but
    /// not all of B" follows from the counts of A, B and their union.
    pub fn negated_support(
        &self,
        a: &Itemset,
        b: &Itemset,
        form: NegationForm,
    ) -> Result<Rational, TransactionError> {
        self.check_pair(a, b)?;
        let n = self.transaction_count() as i128;
        let count_a = self.count_unchecked(a) as i128;
        let count_b = self.count_unchecked(b) as i128;
        let count_union = self.count_unchecked(&a.union(b)) as i128;
        let numer = match form {
            NegationForm::ConsequentAbsent => count_a - count_union,
            NegationForm::AntecedentAbsent => count_b - count_union,
            NegationForm::BothAbsent => n - count_a - count_b + count_union,
        };
        Ok(Rational::new(numer, n))
    }

    /// Same value as [`Self::negated_support`], but measured by scanning
    /// every transaction and testing the literal containment condition.
    /// Deliberately shares no arithmetic with the derived route.
    pub fn negated_support_direct(
        &self,
        a: &Itemset,
        b: &Itemset,
        form: NegationForm,
    ) -> Result<Rational, TransactionError> {
        self.check_pair(a, b)?;
        let matches = self
            .transactions
            .iter()
            .filter(|t| {
                let has_a = a.is_subset_of(t);
                let has_b = b.is_subset_of(t);
                match form {
                    NegationForm::ConsequentAbsent => has_a && !has_b,
                    NegationForm::AntecedentAbsent => !has_a && has_b,
                    NegationForm::BothAbsent => !has_a && !has_b,
                }
            })
            .count() as u64;
        Ok(count_fraction(matches, self.transaction_count()))
    }

    fn check_pair(&self, a: &Itemset, b: &Itemset) -> Result<(), TransactionError> {
        if a.is_empty() || b.is_empty() {
            return Err(TransactionError::EmptyItemset);
        }
        if !a.is_disjoint(b) {
            return Err(TransactionError::OverlappingItemsets);
        }
        self.validate(a)?;
        self.validate(b)
    }

    /// Serializes back to basket text. Loading the result reproduces this
    /// database exactly: same dictionary order, same rows, same counts.
    pub fn to_basket_string(&self, delimiter: Delimiter) -> String {
        let sep = match delimiter {
            Delimiter::Whitespace => " ",
            Delimiter::Comma => ",",
        };
        let mut out = String::new();
        for t in &self.transactions {
            let labels = t.labels(&self.dictionary);
            out.push_str(&labels.join(sep));
            out.push('\n');
        }
        out
    }
}

/// Parses basket text: one transaction per line, items separated per
/// `delimiter`. Blank lines and lines starting with `#` are skipped, as
/// are lines that end up with zero items after trimming.
pub fn load_basket(text: &str, delimiter: Delimiter) -> Result<TransactionDatabase, TransactionError> {
    let rows = text.lines().filter_map(|line| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        let tokens: Vec<&str> = match delimiter {
            Delimiter::Whitespace => line.split_whitespace().collect(),
            Delimiter::Comma => line
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .collect(),
        };
        if tokens.is_empty() {
            None
        } else {
            Some(tokens)
        }
    });
    TransactionDatabase::from_transactions(rows)
}

/// Exact occurrence counts for a family of itemsets over one database.
/// The empty itemset is implicitly present with the full row count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportTable {
    n: u64,
    entries: BTreeMap<Itemset, u64>,
}

impl SupportTable {
    pub fn new(n: u64) -> Self {
        assert!(n > 0, "support table needs a nonempty database");
        SupportTable { n, entries: BTreeMap::new() }
    }

    pub fn transaction_count(&self) -> u64 {
        self.n
    }

    pub fn insert(&mut self, itemset: Itemset, count: u64) {
        debug_assert!(count <= self.n);
        self.entries.insert(itemset, count);
    }

    pub fn count(&self, itemset: &Itemset) -> Option<u64> {
        if itemset.is_empty() {
            return Some(self.n);
        }
        self.entries.get(itemset).copied()
    }

    pub fn support(&self, itemset: &Itemset) -> Option<Rational> {
        self.count(itemset).map(|c| self.support_of_count(c))
    }

    /// Turns a raw count into a fraction of this table's row count.
    pub fn support_of_count(&self, count: u64) -> Rational {
        count_fraction(count, self.n)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in ascending itemset order.
    pub fn iter(&self) -> impl Iterator<Item = (&Itemset, u64)> + '_ {
        self.entries.iter().map(|(s, &c)| (s, c))
    }
}
