//! Exact rational arithmetic helpers.
//!
//! Every weight, length and coordinate that ends up in a certificate is a
//! [`Rational`]. Serialized form is a `[numerator, denominator]` pair; values
//! that do not fit an `i64` are written as decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    rat(1, 2)
}

pub fn abs(value: &Rational) -> Rational {
    value.abs()
}

pub fn in_unit_interval(value: &Rational) -> bool {
    !value.is_negative() && *value <= Rational::one()
}

fn bigint_to_json(value: &BigInt) -> Value {
    match i64::try_from(value) {
        Ok(small) => Value::from(small),
        Err(_) => Value::from(value.to_string()),
    }
}

fn bigint_from_json(value: &Value) -> Result<BigInt> {
    match value {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("expected an integer, found {n}"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("expected an integer, found {s:?}"))),
        other => Err(Error::Parse(format!("expected an integer, found {other}"))),
    }
}

/// `[num, den]`
pub fn to_json(value: &Rational) -> Value {
    Value::Array(vec![bigint_to_json(value.numer()), bigint_to_json(value.denom())])
}

pub fn from_json(value: &Value) -> Result<Rational> {
    match value {
        Value::Array(parts) if parts.len() == 2 => from_parts(&parts[0], &parts[1]),
        Value::Number(_) => Ok(Rational::from_integer(bigint_from_json(value)?)),
        other => Err(Error::Parse(format!("expected [num, den], found {other}"))),
    }
}

pub fn from_parts(numer: &Value, denom: &Value) -> Result<Rational> {
    let numer = bigint_from_json(numer)?;
    let denom = bigint_from_json(denom)?;
    if denom.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(numer, denom))
}

/// Pushes `num, den` of `value` onto `out` (used by the flat interval layout).
pub fn push_parts(out: &mut Vec<Value>, value: &Rational) {
    out.push(bigint_to_json(value.numer()));
    out.push(bigint_to_json(value.denom()));
}

/// Human-readable form used in DOT labels: `3/4`, `2`.
pub fn display(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
