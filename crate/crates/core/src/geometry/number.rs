//! Exact scalars: decimal literal parsing, exact text formatting and the
//! floating-point interval filter used ahead of exact predicate evaluation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact coordinate scalar.
pub type Scalar = BigRational;

/// Upper bound on the number of significant digits in a decimal literal.
pub const MAX_LITERAL_DIGITS: usize = 400;
/// Upper bound on the magnitude of a decimal exponent.
pub const MAX_EXPONENT: i64 = 400;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseNumberError {
    #[error("empty numeric literal")]
    Empty,
    #[error("invalid numeric literal `{0}`")]
    Invalid(String),
    #[error("numeric literal `{0}` has too many digits")]
    TooLong(String),
    #[error("exponent out of range in `{0}`")]
    ExponentRange(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses a decimal literal (`-12.5`, `.25`, `3e-2`) into an exact rational.
///
/// No binary floating point is involved at any stage.
pub fn parse_decimal(text: &str) -> Result<Scalar, ParseNumberError> {
    if text.is_empty() {
        return Err(ParseNumberError::Empty);
    }
    let invalid = || ParseNumberError::Invalid(text.to_string());
    let bytes = text.as_bytes();
    let mut pos = 0;
    let negative = match bytes[0] {
        b'-' => {
            pos = 1;
            true
        }
        b'+' => {
            pos = 1;
            false
        }
        _ => false,
    };

    let mut digits = String::new();
    let mut frac_len: i64 = 0;
    let mut seen_digit = false;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        digits.push(bytes[pos] as char);
        seen_digit = true;
        pos += 1;
    }
    if pos < bytes.len() && bytes[pos] == b'.' {
        pos += 1;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            digits.push(bytes[pos] as char);
            frac_len += 1;
            seen_digit = true;
            pos += 1;
        }
    }
    if !seen_digit {
        return Err(invalid());
    }
    let mut exponent: i64 = 0;
    if pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
        pos += 1;
        let exp_start = pos;
        if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
            pos += 1;
        }
        let digit_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if digit_start == pos {
            return Err(invalid());
        }
        let exp_text = &text[exp_start..pos];
        exponent = exp_text
            .parse::<i64>()
            .ok()
            .filter(|e| e.abs() <= MAX_EXPONENT)
            .ok_or_else(|| ParseNumberError::ExponentRange(text.to_string()))?;
    }
    if pos != bytes.len() {
        return Err(invalid());
    }

    // trailing zeros only scale the value, so they do not count as digits
    let significant = digits.trim_start_matches('0');
    let trimmed = significant.trim_end_matches('0');
    let exponent = exponent + (significant.len() - trimmed.len()) as i64;
    let significant = trimmed;
    if significant.len() > MAX_LITERAL_DIGITS {
        return Err(ParseNumberError::TooLong(text.to_string()));
    }
    let mantissa = if significant.is_empty() {
        BigInt::zero()
    } else {
        significant.parse::<BigInt>().map_err(|_| invalid())?
    };
    let mantissa = if negative { -mantissa } else { mantissa };
    let scale = exponent - frac_len;
    let ten = BigInt::from(10u32);
    let value = if scale >= 0 {
        BigRational::from_integer(mantissa * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(mantissa, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Parses either a decimal literal or an exact fraction `n/d`.
pub fn parse_exact(text: &str) -> Result<Scalar, ParseNumberError> {
    match text.split_once('/') {
        None => parse_decimal(text),
        Some((num, den)) => {
            let num = parse_decimal(num)?;
            let den = parse_decimal(den)?;
            if !num.is_integer() || !den.is_integer() {
                return Err(ParseNumberError::Invalid(text.to_string()));
            }
            if den.is_zero() {
                return Err(ParseNumberError::ZeroDenominator(text.to_string()));
            }
            Ok(num / den)
        }
    }
}

/// Formats a scalar exactly: a terminating decimal when the reduced
/// denominator has only the prime factors 2 and 5, `n/d` otherwise.
pub fn format_exact(value: &Scalar) -> String {
    ExactDisplay(value).to_string()
}

/// Display adapter producing the text of [`format_exact`].
pub struct ExactDisplay<'a>(pub &'a Scalar);

impl fmt::Display for ExactDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let value = self.0;
        if value.is_integer() {
            return write!(f, "{}", value.numer());
        }
        let mut den = value.denom().clone();
        let two = BigInt::from(2u32);
        let five = BigInt::from(5u32);
        let (mut twos, mut fives) = (0usize, 0usize);
        while den.is_even() {
            den /= &two;
            twos += 1;
        }
        while (&den % &five).is_zero() {
            den /= &five;
            fives += 1;
        }
        if !den.is_one() {
            return write!(f, "{}/{}", value.numer(), value.denom());
        }
        let places = twos.max(fives);
        let scaled = value * BigRational::from_integer(num_traits::pow(BigInt::from(10u32), places));
        let digits = scaled.to_integer().abs().to_string();
        let digits = format!("{:0>width$}", digits, width = places + 1);
        let (int_part, frac_part) = digits.split_at(digits.len() - places);
        let sign = if value.is_negative() { "-" } else { "" };
        write!(f, "{sign}{int_part}.{frac_part}")
    }
}

/// Nearest-ish `f64` for display and rendering only.
pub fn approx(value: &Scalar) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Closed interval of `f64` values guaranteed to contain an exact quantity.
///
/// Every operation rounds its result outward by one ulp on each side, which
/// keeps the enclosure valid without control over the FPU rounding mode.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    const ENTIRE: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    pub(crate) fn enclose(value: &Scalar) -> Interval {
        if value.denom().is_one() && value.numer().bits() <= 53 {
            if let Some(v) = value.numer().to_i64() {
                let v = v as f64;
                return Interval { lo: v, hi: v };
            }
        }
        match value.to_f64() {
            Some(v) if v.is_finite() => Interval {
                lo: v.next_down().next_down(),
                hi: v.next_up().next_up(),
            },
            _ => Interval::ENTIRE,
        }
    }

    fn widen(lo: f64, hi: f64) -> Interval {
        if lo.is_nan() || hi.is_nan() {
            return Interval::ENTIRE;
        }
        Interval {
            lo: lo.next_down(),
            hi: hi.next_up(),
        }
    }

    /// Sign of every value in the interval, if they all agree.
    pub(crate) fn sign(self) -> Option<Ordering> {
        if !(self.lo.is_finite() && self.hi.is_finite()) {
            return None;
        }
        if self.lo > 0.0 {
            Some(Ordering::Greater)
        } else if self.hi < 0.0 {
            Some(Ordering::Less)
        } else if self.lo == 0.0 && self.hi == 0.0 {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

impl std::ops::Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        Interval::widen(self.lo + rhs.lo, self.hi + rhs.hi)
    }
}

impl std::ops::Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        Interval::widen(self.lo - rhs.hi, self.hi - rhs.lo)
    }
}

impl std::ops::Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        let products = [self.lo * rhs.lo, self.lo * rhs.hi, self.hi * rhs.lo, self.hi * rhs.hi];
        if products.iter().any(|p| p.is_nan()) {
            return Interval::ENTIRE;
        }
        let lo = products.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = products.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::widen(lo, hi)
    }
}

/// Sign of a rational as an `Ordering` against zero.
pub(crate) fn sign_of(value: &Scalar) -> Ordering {
    match value.numer().sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

/// Rescales rationals onto a common positive denominator and returns the
/// integer numerators; signs of homogeneous polynomials are preserved.
pub(crate) fn common_numerators<const N: usize>(values: [&Scalar; N]) -> [BigInt; N] {
    let mut lcm = BigInt::one();
    for v in values {
        if !v.denom().is_one() {
            lcm = lcm.lcm(v.denom());
        }
    }
    values.map(|v| {
        if v.denom().is_one() {
            v.numer() * &lcm
        } else {
            v.numer() * (&lcm / v.denom())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_plain_decimals() {
        assert_eq!(parse_decimal("12.5").unwrap(), q(25, 2));
        assert_eq!(parse_decimal("-0.125").unwrap(), q(-1, 8));
        assert_eq!(parse_decimal(".5").unwrap(), q(1, 2));
        assert_eq!(parse_decimal("7.").unwrap(), q(7, 1));
        assert_eq!(parse_decimal("+3").unwrap(), q(3, 1));
        assert_eq!(parse_decimal("1e3").unwrap(), q(1000, 1));
        assert_eq!(parse_decimal("25E-2").unwrap(), q(1, 4));
        assert_eq!(parse_decimal("0.1").unwrap(), q(1, 10));
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in [
            "", "-", ".", "1.2.3", "1e", "e5", "0x10", "1,5", "nan", "inf", " 1", "1e99999",
        ] {
            assert!(parse_decimal(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn formats_exactly() {
        assert_eq!(format_exact(&q(25, 2)), "12.5");
        assert_eq!(format_exact(&q(-1, 8)), "-0.125");
        assert_eq!(format_exact(&q(-3, 100)), "-0.03");
        assert_eq!(format_exact(&q(1, 3)), "1/3");
        assert_eq!(format_exact(&q(-7, 1)), "-7");
        assert_eq!(format_exact(&q(0, 1)), "0");
    }

    #[test]
    fn parse_exact_accepts_fractions() {
        assert_eq!(parse_exact("-2/6").unwrap(), q(-1, 3));
        assert!(matches!(parse_exact("1/0"), Err(ParseNumberError::ZeroDenominator(_))));
        assert!(parse_exact("1.5/2").is_err());
    }

    #[test]
    fn interval_contains_exact_value() {
        let tenth = Interval::enclose(&q(1, 10));
        let three = Interval::enclose(&q(3, 1));
        let product = tenth * three - Interval::enclose(&q(3, 10));
        assert_eq!(product.sign(), None);
        assert_eq!((three - tenth).sign(), Some(Ordering::Greater));
    }

    proptest::proptest! {
        #[test]
        fn exact_format_round_trips(n in -1_000_000i64..1_000_000, d in 1i64..5000) {
            let value = q(n, d);
            proptest::prop_assert_eq!(parse_exact(&format_exact(&value)).unwrap(), value);
        }
    }
}
