//! Exact rational scalars.
//!
//! Every quantity that reaches a geometric predicate is a [`Scalar`]: an
//! arbitrary-precision rational kept in lowest terms with a positive
//! denominator. Decimal literals are converted exactly, never through `f64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("malformed number {0:?}: expected an integer, a decimal such as -2.5, or a fraction p/q")]
    ParseError(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// An exact rational number in canonical form.
///
/// The denominator is always positive and coprime to the numerator, so
/// structural equality coincides with numeric equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self, ScalarError> {
        Self::from_big(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self, ScalarError> {
        if denom.is_zero() {
            return Err(ScalarError::ZeroDenominator(format!("{numer}/{denom}")));
        }
        Ok(Scalar(BigRational::new(numer, denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Sign as an ordering against zero.
    pub fn signum(&self) -> Ordering {
        self.0.cmp(&BigRational::zero())
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    /// `None` when `self` is zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }

    /// `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(Scalar(&self.0 / &rhs.0))
        }
    }

    /// Lossy conversion for rendering only. Never used in predicates.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

/// Exact three-way comparison.
pub fn cmp(a: &Scalar, b: &Scalar) -> Ordering {
    a.cmp(b)
}

/// Parses an integer (`"3"`), a decimal (`"-2.5"`) or a fraction (`"4/6"`).
///
/// Decimals are converted exactly: `"0.1"` is `1/10`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarError> {
    let malformed = || ScalarError::ParseError(text.to_owned());
    if let Some((num, den)) = text.split_once('/') {
        let numer = parse_integer(num).ok_or_else(malformed)?;
        let denom = parse_integer(den).ok_or_else(malformed)?;
        if denom.is_zero() {
            return Err(ScalarError::ZeroDenominator(text.to_owned()));
        }
        return Ok(Scalar(BigRational::new(numer, denom)));
    }

    let (negative, body) = split_sign(text);
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if !is_digits(int_part) || (body.contains('.') && !is_digits(frac_part)) {
        return Err(malformed());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = digits.parse().map_err(|_| malformed())?;
    if negative {
        numer = -numer;
    }
    let denom = num_traits::pow(BigInt::from(10u32), frac_part.len());
    Ok(Scalar(BigRational::new(numer, denom)))
}

fn split_sign(text: &str) -> (bool, &str) {
    if let Some(rest) = text.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = text.strip_prefix('+') {
        (false, rest)
    } else {
        (false, text)
    }
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let (negative, digits) = split_sign(s);
    if !is_digits(digits) {
        return None;
    }
    let magnitude: BigInt = digits.parse().ok()?;
    Some(if negative { -magnitude } else { magnitude })
}

impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

/// Renders `p/q`, or just `p` when the denominator is one.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like integer division. Use `checked_div` when
// the divisor is not known to be nonzero.
forward_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> Scalar {
        parse_scalar(text).unwrap()
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(s("2.5"), Scalar::from_ratio(5, 2).unwrap());
        assert_eq!(s("0.1"), Scalar::from_ratio(1, 10).unwrap());
        assert_eq!(s("-2.5"), Scalar::from_ratio(-5, 2).unwrap());
        assert_eq!(s("+3"), Scalar::from_integer(3));
        assert_eq!(s("-0.000"), Scalar::zero());
    }

    #[test]
    fn parses_and_reduces_fractions() {
        assert_eq!(s("4/6"), Scalar::from_ratio(2, 3).unwrap());
        assert_eq!(s("4/-6").to_string(), "-2/3");
        assert_eq!(s("-4/-6").to_string(), "2/3");
        assert_eq!(s("10/5").to_string(), "2");
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in [
            "", "-", "1.", ".5", "1..2", "1/2/3", "abc", "1e5", " 1", "1/", "/2", "0x10", "--1",
        ] {
            assert!(matches!(parse_scalar(bad), Err(ScalarError::ParseError(_))), "{bad:?}");
        }
        assert!(matches!(parse_scalar("3/0"), Err(ScalarError::ZeroDenominator(_))));
        assert!(matches!(parse_scalar("3/-0"), Err(ScalarError::ZeroDenominator(_))));
    }

    #[test]
    fn exact_comparison() {
        assert_eq!(cmp(&s("1/3"), &s("2/6")), Ordering::Equal);
        assert_eq!(cmp(&s("-1/2"), &s("0")), Ordering::Less);
        // 7*7 = 49 < 50 = 5*10
        assert_eq!(cmp(&s("7/10"), &s("5/7")), Ordering::Less);
    }

    #[test]
    fn big_values_stay_exact() {
        let huge = s("123456789012345678901234567890.000000000000000000001");
        let back = &huge - s("123456789012345678901234567890");
        assert_eq!(back, s("1/1000000000000000000000"));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-10_000i64..10_000, 1i64..1_000).prop_map(|(n, d)| Scalar::from_ratio(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn render_round_trips(n in any::<i64>(), d in 1i64..i64::MAX) {
            let x = Scalar::from_ratio(n, d).unwrap();
            let rendered = x.to_string();
            let back = parse_scalar(&rendered).unwrap();
            prop_assert_eq!(back.numer(), x.numer());
            prop_assert_eq!(back.denom(), x.denom());
        }

        #[test]
        fn canonical_after_arithmetic(a in arb_scalar(), b in arb_scalar()) {
            for v in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(v.denom() > &BigInt::zero());
                prop_assert!(num_integer::Integer::gcd(v.numer(), v.denom()).is_one());
            }
        }

        #[test]
        fn add_then_subtract_is_identity(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn ordering_is_antisymmetric_and_transitive(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(cmp(&a, &b), cmp(&b, &a).reverse());
            if cmp(&a, &b) != Ordering::Greater && cmp(&b, &c) != Ordering::Greater {
                prop_assert!(cmp(&a, &c) != Ordering::Greater);
            }
        }

        #[test]
        fn decimal_text_matches_integer_ratio(int in -100_000i64..100_000, frac in 0u32..1000) {
            let text = format!("{int}.{frac:03}");
            let sign = if text.starts_with('-') { -1 } else { 1 };
            let expected = Scalar::from_ratio(int * 1000 + sign * frac as i64, 1000).unwrap();
            prop_assert_eq!(parse_scalar(&text).unwrap(), expected);
        }
    }
}
