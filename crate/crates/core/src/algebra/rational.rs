use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

/// Parses `"p"`, `"p/q"` or `"-p/q"` with surrounding whitespace allowed.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(0, format!("bad numerator in `{text}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(0, format!("bad denominator in `{text}`")))?;
    if den.is_zero() {
        return Err(Error::parse(0, format!("zero denominator in `{text}`")));
    }
    Ok(Rational::new(num, den))
}

/// Parses a JSON array of rational strings (bare JSON integers are accepted
/// too). Error positions are array indices, or byte columns for malformed
/// JSON.
pub fn parse_rational_json(text: &str) -> Result<Vec<Rational>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::parse(e.column(), format!("malformed JSON: {e}")))?;
    let items = value
        .as_array()
        .ok_or_else(|| Error::parse(0, "expected a JSON array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let s = match v {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                other => return Err(Error::parse(i, format!("expected a rational string, got {other}"))),
            };
            parse_rational(&s).map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(i, message),
                other => other,
            })
        })
        .collect()
}
