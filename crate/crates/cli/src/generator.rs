//! Seeded synthetic basket generation.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use negarm_core::Delimiter;

use crate::error::CliError;

/// Produces basket text with `transactions` rows over `items` labels
/// (`i0` through `i{items-1}`). Each item lands in each row with
/// probability `density`; a row that comes up empty gets one random item
/// so the transaction count is exact. Equal parameters give byte-equal
/// output on every platform.
pub fn generate_basket(
    seed: u64,
    items: usize,
    transactions: usize,
    density: f64,
    delimiter: Delimiter,
) -> Result<String, CliError> {
    if items == 0 {
        return Err(CliError::Config("invalid parameter: items must be at least 1".into()));
    }
    if transactions == 0 {
        return Err(CliError::Config(
            "invalid parameter: transactions must be at least 1".into(),
        ));
    }
    if !(density > 0.0 && density < 1.0) {
        return Err(CliError::Config(format!(
            "invalid parameter: density must be strictly between 0 and 1, got {density}"
        )));
    }

    let sep = match delimiter {
        Delimiter::Whitespace => " ",
        Delimiter::Comma => ",",
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut unit = move || (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;

    let mut out = String::new();
    for _ in 0..transactions {
        let mut row: Vec<usize> = (0..items).filter(|_| unit() < density).collect();
        if row.is_empty() {
            row.push((unit() * items as f64) as usize % items);
        }
        let line: Vec<String> = row.into_iter().map(|i| format!("i{i}")).collect();
        out.push_str(&line.join(sep));
        out.push('\n');
    }
    Ok(out)
}
