//! Exact fraction arithmetic for supports, confidences and thresholds.
//!
//! Every measure in this crate is a ratio of transaction counts, so keeping
//! them as `i128` fractions makes boundary comparisons exact: a support of
//! 20/100 passes a threshold of 1/5 with no epsilon anywhere. Threshold
//! strings are parsed straight to fractions without a float detour.

use std::fmt::Write as _;

use num_rational::Ratio;

/// Exact fraction used for every support, confidence and threshold value.
pub type Rational = Ratio<i128>;

/// Shorthand constructor. Panics if `denom` is zero, like `Ratio::new`.
pub fn ratio(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

/// Fraction of transactions: `count` occurrences out of `n` rows.
pub fn count_fraction(count: u64, n: u64) -> Rational {
    Rational::new(count as i128, n as i128)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("`{0}` is not a plain decimal number")]
    Invalid(String),
    #[error("`{0}` has more precision than exact arithmetic supports (12 fractional digits)")]
    TooPrecise(String),
}

/// Maximum fractional digits accepted by [`parse_decimal`]. Keeps every
/// derived denominator (squares of thresholds times squared database sizes)
/// comfortably inside `i128`.
const MAX_FRACTION_DIGITS: usize = 12;

/// Parses a decimal string such as `"0.52"`, `"1"`, `".5"` or `"-0.125"`
/// into an exact fraction. Exponent notation and fraction syntax are
/// rejected; precision is capped at twelve fractional digits.
pub fn parse_decimal(text: &str) -> Result<Rational, ParseRationalError> {
    let trimmed = text.trim();
    let invalid = || ParseRationalError::Invalid(text.to_string());
    let (negative, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, trimmed.strip_prefix('+').unwrap_or(trimmed)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(invalid());
    }
    let all_digits =
        |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(invalid());
    }
    if frac_part.len() > MAX_FRACTION_DIGITS || int_part.len() > 20 {
        return Err(ParseRationalError::TooPrecise(text.to_string()));
    }
    let mut numer: i128 = format!("{int_part}{frac_part}")
        .parse()
        .map_err(|_| invalid())?;
    if negative {
        numer = -numer;
    }
    let denom = 10i128.pow(frac_part.len() as u32);
    Ok(Rational::new(numer, denom))
}

/// Renders a fraction as a decimal string with at most `sig` significant
/// digits. Terminating expansions shorter than the budget print exactly;
/// longer ones are rounded half away from zero. Trailing zeros after the
/// point are trimmed, so 7/20 prints as "0.35" and 999/1000000 as
/// "0.000999". Output depends only on the value, never on iteration order
/// or platform, so reports stay byte-identical across runs.
pub fn to_decimal(value: &Rational, sig: usize) -> String {
    assert!(sig > 0, "need at least one significant digit");
    if *value.numer() == 0 {
        return "0".to_string();
    }
    let negative = *value.numer() < 0;
    let denom = value.denom().unsigned_abs();
    let mut rem = value.numer().unsigned_abs();

    let int_value = rem / denom;
    rem %= denom;
    let mut int_digits: Vec<u8> = if int_value == 0 {
        Vec::new()
    } else {
        int_value.to_string().bytes().map(|b| b - b'0').collect()
    };

    // Integer digits always print in full; the significance budget only
    // limits how far the fractional expansion runs.
    let mut frac_digits: Vec<u8> = Vec::new();
    let mut used = int_digits.len();
    let mut leading_zero = int_digits.is_empty();
    let mut round_up = false;
    while rem != 0 {
        if used >= sig {
            round_up = rem * 10 / denom >= 5;
            break;
        }
        rem *= 10;
        let digit = (rem / denom) as u8;
        rem %= denom;
        if leading_zero && digit == 0 {
            frac_digits.push(0);
        } else {
            leading_zero = false;
            frac_digits.push(digit);
            used += 1;
        }
    }

    if round_up {
        let mut carry = true;
        for d in frac_digits.iter_mut().rev() {
            if *d == 9 {
                *d = 0;
            } else {
                *d += 1;
                carry = false;
            }
            if !carry {
                break;
            }
        }
        if carry {
            for d in int_digits.iter_mut().rev() {
                if *d == 9 {
                    *d = 0;
                } else {
                    *d += 1;
                    carry = false;
                }
                if !carry {
                    break;
                }
            }
            if carry {
                int_digits.insert(0, 1);
            }
        }
    }
    while frac_digits.last() == Some(&0) {
        frac_digits.pop();
    }

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if int_digits.is_empty() {
        out.push('0');
    } else {
        for d in &int_digits {
            let _ = write!(out, "{d}");
        }
    }
    if !frac_digits.is_empty() {
        out.push('.');
        for d in &frac_digits {
            let _ = write!(out, "{d}");
        }
    }
    out
}

/// Default significant-digit budget used by report rendering.
pub const REPORT_DIGITS: usize = 12;
