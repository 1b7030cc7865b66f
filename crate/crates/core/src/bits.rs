//! Fixed-length bit vectors used as per-item occurrence columns.
//!
//! Each item gets one column with a bit per transaction. Itemset counting is
//! then a blockwise AND plus popcount, which is what makes the level-wise
//! miner fast without changing any semantics: the count is exactly the
//! number of rows containing every listed item.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitColumn {
    blocks: Vec<u64>,
    len: usize,
}

impl BitColumn {
    pub fn zeros(len: usize) -> Self {
        BitColumn { blocks: vec![0; len.div_ceil(64)], len }
    }

    pub fn set(&mut self, idx: usize) {
        debug_assert!(idx < self.len);
        self.blocks[idx / 64] |= 1u64 << (idx % 64);
    }

    #[cfg(test)]
    pub fn get(&self, idx: usize) -> bool {
        debug_assert!(idx < self.len);
        self.blocks[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> u64 {
        self.blocks.iter().map(|b| b.count_ones() as u64).sum()
    }
}

/// Number of rows in which every listed column has its bit set.
/// Callers handle the empty-itemset case; this requires at least one column.
pub(crate) fn intersection_count(columns: &[&BitColumn]) -> u64 {
    let (first, rest) = columns
        .split_first()
        .expect("intersection_count needs at least one column");
    if rest.is_empty() {
        return first.count_ones();
    }
    first
        .blocks
        .iter()
        .enumerate()
        .map(|(i, &block)| {
            rest.iter()
                .fold(block, |acc, col| acc & col.blocks[i])
                .count_ones() as u64
        })
        .sum()
}
