//! Arbitrary-precision rational scalars and their text renderings.
//!
//! Everything downstream computes with [`Rational`]; floating point never
//! appears on a decision path. Decimal strings are produced only for display,
//! always with ten significant digits and deterministic half-away-from-zero
//! rounding.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Exact rational number used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Error produced when a string cannot be read as a rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    input: String,
    reason: &'static str,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse {:?} as a rational: {}", self.input, self.reason)
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `"n"` or `"n/d"` (optionally signed, whitespace-trimmed) into a
/// rational. The denominator must be nonzero.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason| ParseRationalError { input: s.to_string(), reason };
    let t = s.trim();
    if t.is_empty() {
        return Err(err("empty string"));
    }
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num_str).map_err(|_| err("bad numerator"))?;
    let den = BigInt::from_str(den_str).map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Height of a rational: the maximum of `|numerator|` and `denominator`
/// after reduction. Heights drive the bounded norm-equation and stabilizer
/// searches.
pub fn height(r: &Rational) -> BigUint {
    let n = r.numer().magnitude().clone();
    let d = r.denom().magnitude().clone();
    n.max(d)
}

/// Exact `n`-th root of a rational, if one exists: `r = root^n`.
/// For even `n`, negative inputs have no root; the returned root of a
/// positive input is the positive one. For odd `n` the sign carries over.
pub fn rational_nth_root(r: &Rational, n: u32) -> Option<Rational> {
    assert!(n >= 1);
    if r.is_zero() {
        return Some(Rational::zero());
    }
    if n % 2 == 0 && r.is_negative() {
        return None;
    }
    let num_mag = r.numer().magnitude();
    let den_mag = r.denom().magnitude();
    let rn = num_mag.nth_root(n);
    let rd = den_mag.nth_root(n);
    if rn.pow(n) != *num_mag || rd.pow(n) != *den_mag {
        return None;
    }
    let mut root = Rational::new(BigInt::from(rn), BigInt::from(rd));
    if r.is_negative() {
        root = -root;
    }
    Some(root)
}

/// All reduced rationals of height at most `bound`, sorted in increasing
/// numeric order. The list always contains `0` and is symmetric about it.
pub fn rationals_up_to_height(bound: u32) -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    let b = bound as i64;
    for den in 1..=b {
        for num in 1..=b {
            if num_integer::gcd(num, den) == 1 {
                out.push(rat(num, den));
                out.push(rat(-num, den));
            }
        }
    }
    out.sort();
    out
}

/// Rounds `n / d` (with `d > 0`) to the nearest integer, halves away
/// from zero.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let two = BigInt::from(2);
    if n.is_negative() {
        -((-n * &two + d) / (d * &two))
    } else {
        (n * &two + d) / (d * &two)
    }
}

/// Renders a nonzero rational with exactly ten significant decimal digits
/// (half-away-from-zero); renders zero as `"0"`. Used for report lines only —
/// exact values are always printed alongside.
pub fn decimal_string(r: &Rational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let n = r.numer().abs();
    let d = r.denom().clone();
    // Exponent of the leading digit: |r| lies in [10^e, 10^(e+1)).
    let ten = BigInt::from(10);
    let mut e: i64;
    if n >= d {
        e = (&n / &d).to_string().len() as i64 - 1;
    } else {
        e = 0;
        let mut m = n.clone();
        while m < d {
            m *= &ten;
            e -= 1;
        }
    }
    // Scale so that round(n/d * 10^(9-e)) has exactly ten digits.
    let mut scaled = if e <= 9 {
        round_div(&(&n * ten.pow((9 - e) as u32)), &d)
    } else {
        round_div(&n, &(&d * ten.pow((e - 9) as u32)))
    };
    let cap = ten.pow(10);
    if scaled == cap {
        // Rounding carried into an eleventh digit (e.g. 0.99999999995).
        e += 1;
        scaled = ten.pow(9);
    }
    let digits = scaled.to_string();
    debug_assert_eq!(digits.len(), 10);
    let body = if e >= 9 {
        format!("{}{}", digits, "0".repeat((e - 9) as usize))
    } else if e >= 0 {
        let split = (e + 1) as usize;
        format!("{}.{}", &digits[..split], &digits[split..])
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    };
    format!("{sign}{body}")
}

/// Renders a rational exactly: `"n"` when the denominator is 1, else `"n/d"`.
pub fn exact_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
