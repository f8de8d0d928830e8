//! Small helpers for exact rational arithmetic and its text form.
//!
//! Rationals cross the API boundary as strings `"p/q"` (or `"p"` when the
//! denominator is 1), always in lowest terms. These helpers centralize
//! parsing, formatting, and the fractional-part convention used for divisor
//! classes (representatives in `[0, 1)`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = |_| Error::InvalidInput {
        msg: format!("cannot parse rational {text:?}"),
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(bad)?;
            let den: BigInt = den.trim().parse().map_err(bad)?;
            if den.is_zero() {
                return Err(Error::InvalidInput {
                    msg: format!("zero denominator in {text:?}"),
                });
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = text.parse().map_err(bad)?;
            Ok(BigRational::from_integer(num))
        }
    }
}

/// Formats a rational in lowest terms, omitting a denominator of 1.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Fractional part in `[0, 1)`: `value - floor(value)`.
pub fn fractional_part(value: &BigRational) -> BigRational {
    value - value.floor()
}

/// True when the rational is an integer.
pub fn is_integer(value: &BigRational) -> bool {
    value.denom().is_one()
}

/// Smallest integer `>= value`.
pub fn ceil_to_bigint(value: &BigRational) -> BigInt {
    value.ceil().to_integer()
}

/// Exact conversion to `i128`; panics if out of range (callers guard scale).
pub fn rational_to_i128(value: &BigRational) -> i128 {
    debug_assert!(is_integer(value), "rational {value} is not an integer");
    bigint_to_i128(value.numer())
}

/// Exact conversion of a `BigInt` to `i128`; panics if out of range.
pub fn bigint_to_i128(value: &BigInt) -> i128 {
    let (sign, digits) = value.to_u64_digits();
    let mag: i128 = match digits.len() {
        0 => 0,
        1 => digits[0] as i128,
        2 => ((digits[1] as u128) << 64 | digits[0] as u128)
            .try_into()
            .expect("integer exceeds i128 range"),
        _ => panic!("integer exceeds i128 range"),
    };
    match sign {
        num_bigint::Sign::Minus => -mag,
        _ => mag,
    }
}

/// Binomial coefficient `C(n, k)` with `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Greatest common divisor of two big integers, always non-negative.
pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b).abs()
}
