//! Exact scalars: arbitrary-precision rationals and small helpers for
//! constructing, parsing and printing them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The scalar type of the exact path. Every value produced by the engine is
/// one of these; no rounding happens anywhere.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from a big integer.
pub fn rat_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `(-1)^parity` as a rational.
pub fn sign_rat(sign: i8) -> Rational {
    if sign >= 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Formats a rational as `p/q` in lowest terms with `q > 0`, or just `p`
/// when the denominator is one. This is the wire format used by all JSON
/// and CSV output.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p`, or `p/q` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let q: BigInt = q
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// Exact factorial.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Exact double factorial `(2k-1)!! = 1·3·5···(2k-1)`.
pub fn double_factorial_odd(k: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut i = 1usize;
    while i + 1 < 2 * k {
        i += 2;
        acc *= i;
    }
    acc
}

/// Lossy conversion to `f64`, for consumers that compare against sampled
/// estimates. Not used on the exact path.
pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of lossy parts for extreme magnitudes.
        let n = x.numer().to_f64().unwrap_or(if x.numer().is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        });
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}
