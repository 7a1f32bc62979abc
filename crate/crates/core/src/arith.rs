//! Exact integer and rational helpers shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `(-1)^e` as a rational.
pub fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Binomial coefficient with the convention that it vanishes whenever
/// `n < 0`, `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Catalan number `C_m = binom(2m, m) / (m + 1)`; zero for negative `m`.
pub fn catalan(m: i64) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    binomial(2 * m, m) / BigInt::from(m + 1)
}

/// `p(n, k) = binom(n, k) - binom(n, k - 1)` (ballot difference).
pub fn ballot(n: i64, k: i64) -> BigInt {
    binomial(n, k) - binomial(n, k - 1)
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// Integer part of a rational known to be integral.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

pub(crate) fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

pub(crate) fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(num) => num
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Input(format!("expected an integer, found {num}"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| Error::Input(format!("expected an integer, found \"{s}\""))),
        other => Err(Error::Input(format!("expected an integer, found {other}"))),
    }
}

/// `[numerator, denominator]`
pub(crate) fn rational_to_json(r: &Rational) -> Value {
    Value::Array(vec![int_to_json(r.numer()), int_to_json(r.denom())])
}

pub(crate) fn rational_from_json(v: &Value) -> Result<Rational> {
    let pair = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Input(format!("expected [num, den], found {v}")))?;
    let num = int_from_json(&pair[0])?;
    let den = int_from_json(&pair[1])?;
    if den.is_zero() {
        return Err(Error::Input("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-{}/{}", r.numer().abs(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(-1, 0), BigInt::from(0));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(3, -1), BigInt::from(0));
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn catalan_numbers() {
        let first: Vec<i64> = (0..8).map(|m| catalan(m).to_i64().unwrap()).collect();
        assert_eq!(first, vec![1, 1, 2, 5, 14, 42, 132, 429]);
        assert!(catalan(-1).is_zero());
    }

    #[test]
    fn ballot_is_catalan_on_the_diagonal() {
        for m in 1..10 {
            assert_eq!(ballot(2 * m, m), catalan(m));
            assert_eq!(ballot(2 * m - 1, m - 1), catalan(m));
        }
    }

    #[test]
    fn rational_json_round_trip() {
        let r = ratio(-3, 6);
        let v = rational_to_json(&r);
        assert_eq!(v, serde_json::json!([-1, 2]));
        assert_eq!(rational_from_json(&v).unwrap(), r);
        assert!(rational_from_json(&serde_json::json!([1, 0])).is_err());
    }
}
