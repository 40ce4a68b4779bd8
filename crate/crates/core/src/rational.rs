//! Exact arbitrary-precision rational scalars.
//!
//! Every quantity in this crate (amounts, rates, times, objective values) is a
//! [`Rational`]. There is no floating point anywhere: exhaustion ties and
//! lexicographic comparisons are discontinuous in the inputs, so everything is
//! computed exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator (maintained by `num-rational`).
pub type Rational = BigRational;

/// Shorthand for a rational from an integer numerator/denominator pair.
///
/// Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer in rational literal: {0:?}")]
    BadInteger(String),
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
    #[error("rational literal has more than one '/': {0:?}")]
    ExtraSlash(String),
}

/// Parses `"p"` or `"p/q"` with an optional leading minus on `p` and decimal
/// digits only. `q` must be positive.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let mut parts = s.splitn(3, '/');
    let num_str = parts.next().unwrap_or("");
    let den_str = parts.next();
    if parts.next().is_some() {
        return Err(ParseRationalError::ExtraSlash(s.to_string()));
    }
    let num = parse_int(num_str, true)?;
    let den = match den_str {
        None => BigInt::one(),
        Some(d) => {
            let d = parse_int(d, false)?;
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator);
            }
            d
        }
    };
    Ok(Rational::new(num, den))
}

fn parse_int(s: &str, allow_sign: bool) -> Result<BigInt, ParseRationalError> {
    let body = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return Err(ParseRationalError::BadInteger(s.to_string())),
        None => s,
    };
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::BadInteger(s.to_string()));
    }
    let parsed: BigInt = body.parse().expect("digit-checked integer");
    Ok(if s.starts_with('-') { -parsed } else { parsed })
}

/// Formats in lowest terms as `"p"` when the value is an integer, `"p/q"`
/// otherwise. Inverse of [`parse_rational`].
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sum of a sequence of rationals.
pub fn sum<'a, I: IntoIterator<Item = &'a Rational>>(xs: I) -> Rational {
    xs.into_iter().fold(Rational::zero(), |acc, x| acc + x)
}

/// True iff `x > 0`.
pub fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("0").unwrap(), int(0));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert_eq!(parse_rational("1/0"), Err(ParseRationalError::ZeroDenominator));
        assert_eq!(parse_rational(""), Err(ParseRationalError::Empty));
        assert!(matches!(parse_rational("1/-2"), Err(ParseRationalError::BadInteger(_))));
        assert!(matches!(parse_rational("-"), Err(ParseRationalError::BadInteger(_))));
        assert!(matches!(parse_rational("1.5"), Err(ParseRationalError::BadInteger(_))));
        assert!(matches!(parse_rational("1/2/3"), Err(ParseRationalError::ExtraSlash(_))));
        assert!(matches!(parse_rational("+1"), Err(ParseRationalError::BadInteger(_))));
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(5)), "5");
        assert_eq!(format_rational(&ratio(0, 7)), "0");
    }

    #[test]
    fn round_trips() {
        for s in ["3/2", "-7/13", "0", "42", "-1"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
    }
}
