//! Exact rational scalars over checked 64-bit components.
//!
//! Every value is kept in canonical form: `gcd(|num|, den) == 1` and
//! `den >= 1`. Arithmetic is carried out in `i128` and narrowed back, so an
//! operation only fails when the *reduced* result does not fit in 64 bits.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: i64,
    den: i64,
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Scalar {
    pub const ZERO: Scalar = Scalar { num: 0, den: 1 };
    pub const ONE: Scalar = Scalar { num: 1, den: 1 };

    pub const fn from_int(value: i64) -> Self {
        Scalar { num: value, den: 1 }
    }

    /// Builds `num / den` and reduces it.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_wide(num as i128, den as i128)
    }

    fn from_wide(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i128;
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(num), Ok(den)) => Ok(Scalar { num, den }),
            _ => Err(Error::Overflow),
        }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn checked_add(self, rhs: Scalar) -> Result<Scalar> {
        if self.den == 1 && rhs.den == 1 {
            return self.num.checked_add(rhs.num).map(Scalar::from_int).ok_or(Error::Overflow);
        }
        let (a, b) = (self.num as i128, self.den as i128);
        let (c, d) = (rhs.num as i128, rhs.den as i128);
        Self::from_wide(a * d + c * b, b * d)
    }

    pub fn checked_sub(self, rhs: Scalar) -> Result<Scalar> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_mul(self, rhs: Scalar) -> Result<Scalar> {
        if self.den == 1 && rhs.den == 1 {
            return self.num.checked_mul(rhs.num).map(Scalar::from_int).ok_or(Error::Overflow);
        }
        Self::from_wide(self.num as i128 * rhs.num as i128, self.den as i128 * rhs.den as i128)
    }

    pub fn checked_neg(self) -> Result<Scalar> {
        // i64::MIN has no positive counterpart.
        self.num.checked_neg().map(|num| Scalar { num, den: self.den }).ok_or(Error::Overflow)
    }

    pub fn checked_div(self, rhs: Scalar) -> Result<Scalar> {
        self.checked_mul(rhs.recip()?)
    }

    pub fn recip(self) -> Result<Scalar> {
        Self::from_wide(self.den as i128, self.num as i128)
    }

    /// Exact sum of a sequence, failing on the first overflow.
    pub fn try_sum<I: IntoIterator<Item = Scalar>>(iter: I) -> Result<Scalar> {
        iter.into_iter().try_fold(Scalar::ZERO, Scalar::checked_add)
    }

    /// Exact product of a sequence, failing on the first overflow.
    pub fn try_product<I: IntoIterator<Item = Scalar>>(iter: I) -> Result<Scalar> {
        iter.into_iter().try_fold(Scalar::ONE, Scalar::checked_mul)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar::from_int(value)
    }
}

impl From<i32> for Scalar {
    fn from(value: i32) -> Self {
        Scalar::from_int(value as i64)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Why a scalar literal was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiteralError {
    Malformed,
    ZeroDenominator,
    Overflow,
}

impl fmt::Display for LiteralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiteralError::Malformed => f.write_str("malformed scalar literal"),
            LiteralError::ZeroDenominator => f.write_str("zero denominator"),
            LiteralError::Overflow => f.write_str("scalar literal out of 64-bit range"),
        }
    }
}

impl std::error::Error for LiteralError {}

fn parse_int(text: &str, allow_sign: bool) -> std::result::Result<i64, LiteralError> {
    let digits = match text.as_bytes().first() {
        Some(b'+' | b'-') if allow_sign => &text[1..],
        _ => text,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(LiteralError::Malformed);
    }
    text.parse::<i64>().map_err(|_| LiteralError::Overflow)
}

/// Literal grammar: optional sign, digits, optionally `/` and unsigned
/// positive digits. `"4"`, `"-3"`, `"+1/2"`, `"2/4"` (reduced to `1/2`).
impl FromStr for Scalar {
    type Err = LiteralError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (parse_int(n, true)?, parse_int(d, false)?),
            None => (parse_int(s, true)?, 1),
        };
        if den == 0 {
            return Err(LiteralError::ZeroDenominator);
        }
        Scalar::new(num, den).map_err(|_| LiteralError::Overflow)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::new(n, d).unwrap()
    }

    #[test]
    fn canonical_form() {
        let x = s(2, 4);
        assert_eq!((x.numerator(), x.denominator()), (1, 2));
        let y = s(3, -6);
        assert_eq!((y.numerator(), y.denominator()), (-1, 2));
        assert_eq!(s(0, -7), Scalar::ZERO);
        assert_eq!(Scalar::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(s(1, 2).checked_add(s(1, 3)).unwrap(), s(5, 6));
        assert_eq!(s(1, 2).checked_sub(s(1, 2)).unwrap(), Scalar::ZERO);
        assert_eq!(s(2, 3).checked_mul(s(3, 4)).unwrap(), s(1, 2));
        assert_eq!(s(2, 3).checked_div(s(4, 9)).unwrap(), s(3, 2));
        assert_eq!(Scalar::ZERO.recip(), Err(Error::ZeroDenominator));
    }

    #[test]
    fn overflow_is_reported() {
        let big = Scalar::from_int(i64::MAX);
        assert_eq!(big.checked_add(Scalar::ONE), Err(Error::Overflow));
        assert_eq!(big.checked_mul(Scalar::from_int(2)), Err(Error::Overflow));
        assert_eq!(Scalar::from_int(i64::MIN).checked_neg(), Err(Error::Overflow));
        // Rational path: the unreduced denominator would overflow but the
        // reduced result fits.
        let a = s(1, i64::MAX);
        assert_eq!(a.checked_mul(Scalar::from_int(i64::MAX)).unwrap(), Scalar::ONE);
    }

    #[test]
    fn literals() {
        assert_eq!("4".parse::<Scalar>().unwrap(), Scalar::from_int(4));
        assert_eq!("-3".parse::<Scalar>().unwrap(), Scalar::from_int(-3));
        assert_eq!("+1/2".parse::<Scalar>().unwrap(), s(1, 2));
        assert_eq!("2/4".parse::<Scalar>().unwrap().to_string(), "1/2");
        assert_eq!("-6/3".parse::<Scalar>().unwrap().to_string(), "-2");
        assert_eq!("1/0".parse::<Scalar>(), Err(LiteralError::ZeroDenominator));
        assert_eq!("1/-2".parse::<Scalar>(), Err(LiteralError::Malformed));
        assert_eq!("0.5".parse::<Scalar>(), Err(LiteralError::Malformed));
        assert_eq!("".parse::<Scalar>(), Err(LiteralError::Malformed));
        assert_eq!("-".parse::<Scalar>(), Err(LiteralError::Malformed));
        assert_eq!("99999999999999999999".parse::<Scalar>(), Err(LiteralError::Overflow));
    }

    #[test]
    fn ordering() {
        assert!(s(1, 3) < s(1, 2));
        assert!(s(-1, 2) < Scalar::ZERO);
    }
}
