//! Arbitrary-precision signed integers with an inline fast path.
//!
//! Values that fit in an `i64` are stored inline; everything else spills
//! into a [`BigInt`]. The representation is normalized, so two equal values
//! always share the same variant and derived equality/hashing are sound.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64),
    Large(BigInt),
}

/// An integer of unbounded magnitude.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Int(Repr);

impl Int {
    pub const ZERO: Int = Int(Repr::Small(0));
    pub const ONE: Int = Int(Repr::Small(1));

    pub fn from_bigint(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int(Repr::Small(v)),
            None => Int(Repr::Large(b)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match &self.0 {
            Repr::Small(v) => BigInt::from(*v),
            Repr::Large(b) => b.clone(),
        }
    }

    /// The inline value, if this integer fits in an `i64`.
    #[inline]
    pub fn as_i64(&self) -> Option<i64> {
        match self.0 {
            Repr::Small(v) => Some(v),
            Repr::Large(_) => None,
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    #[inline]
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(v) => v.signum() as i32,
            Repr::Large(b) => match b.sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            },
        }
    }

    #[inline]
    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    #[inline]
    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Number of bits in the magnitude; zero for zero.
    pub fn bits(&self) -> u64 {
        match &self.0 {
            Repr::Small(v) => 64 - u64::from(v.unsigned_abs().leading_zeros()),
            Repr::Large(b) => b.bits(),
        }
    }

    /// Floor division. Panics on a zero divisor.
    pub fn div_floor(&self, rhs: &Int) -> Int {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            // i64::MIN / -1 is the only overflowing case
            if let Some(q) = a.checked_div(*b) {
                let q = if (a % b != 0) && ((*a < 0) != (*b < 0)) {
                    q - 1
                } else {
                    q
                };
                return Int(Repr::Small(q));
            }
        }
        Int::from_bigint(self.to_bigint().div_floor(&rhs.to_bigint()))
    }

    /// Remainder with the sign of the divisor (pairs with [`Int::div_floor`]).
    pub fn mod_floor(&self, rhs: &Int) -> Int {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(r) = a.checked_rem(*b) {
                let r = if r != 0 && ((r < 0) != (*b < 0)) { r + b } else { r };
                return Int(Repr::Small(r));
            }
        }
        Int::from_bigint(self.to_bigint().mod_floor(&rhs.to_bigint()))
    }

    /// `⌊self / 2⌋`.
    #[inline]
    pub fn half_floor(&self) -> Int {
        match &self.0 {
            Repr::Small(v) => Int(Repr::Small(v >> 1)),
            Repr::Large(b) => Int::from_bigint(b >> 1usize),
        }
    }

    pub fn pow(&self, exp: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Parses a decimal integer with an optional leading sign and `_`
    /// separators, each between two digits.
    pub fn parse_decimal(text: &str) -> Result<Int, Error> {
        let bad = || Error::Domain(format!("malformed integer `{text}`"));
        let (negative, digits) = match text.as_bytes().first() {
            Some(b'-') => (true, &text[1..]),
            Some(b'+') => (false, &text[1..]),
            _ => (false, text),
        };
        if digits.is_empty()
            || !digits.bytes().all(|c| c.is_ascii_digit() || c == b'_')
            || digits.starts_with('_')
            || digits.ends_with('_')
            || digits.contains("__")
        {
            return Err(bad());
        }
        let cleaned: String = digits.chars().filter(|&c| c != '_').collect();
        let magnitude = BigInt::from_str(&cleaned).map_err(|_| bad())?;
        Ok(Int::from_bigint(if negative { -magnitude } else { magnitude }))
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

macro_rules! from_primitive {
    ($($t:ty),*) => {$(
        impl From<$t> for Int {
            #[inline]
            fn from(v: $t) -> Int {
                Int(Repr::Small(v as i64))
            }
        }
    )*};
}
from_primitive!(i8, i16, i32, i64, u8, u16, u32);

impl From<u64> for Int {
    fn from(v: u64) -> Int {
        match i64::try_from(v) {
            Ok(s) => Int(Repr::Small(s)),
            Err(_) => Int(Repr::Large(BigInt::from(v))),
        }
    }
}

impl From<usize> for Int {
    fn from(v: usize) -> Int {
        Int::from(v as u64)
    }
}

impl From<i128> for Int {
    fn from(v: i128) -> Int {
        match i64::try_from(v) {
            Ok(s) => Int(Repr::Small(s)),
            Err(_) => Int(Repr::Large(BigInt::from(v))),
        }
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Int {
        Int::from_bigint(b)
    }
}

impl FromStr for Int {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Int::parse_decimal(s)
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            // a normalized large value lies outside the i64 range
            (Repr::Small(_), Repr::Large(b)) => {
                if b.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Repr::Large(a), Repr::Small(_)) => {
                if a.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (Repr::Large(a), Repr::Large(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<i64> for Int {
    fn eq(&self, other: &i64) -> bool {
        self.as_i64() == Some(*other)
    }
}

impl PartialOrd<i64> for Int {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(match &self.0 {
            Repr::Small(a) => a.cmp(other),
            Repr::Large(b) if b.is_negative() => Ordering::Less,
            Repr::Large(_) => Ordering::Greater,
        })
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => fmt::Display::fmt(v, f),
            Repr::Large(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            Repr::Small(v) => serializer.serialize_i64(*v),
            Repr::Large(b) => {
                let n = serde_json::Number::from_str(&b.to_string()).map_err(serde::ser::Error::custom)?;
                n.serialize(serializer)
            }
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(deserializer)?;
        Int::parse_decimal(&n.to_string()).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// arithmetic

fn add_ref(a: &Int, b: &Int) -> Int {
    if let (Repr::Small(x), Repr::Small(y)) = (&a.0, &b.0) {
        if let Some(s) = x.checked_add(*y) {
            return Int(Repr::Small(s));
        }
    }
    Int::from_bigint(a.to_bigint() + b.to_bigint())
}

fn sub_ref(a: &Int, b: &Int) -> Int {
    if let (Repr::Small(x), Repr::Small(y)) = (&a.0, &b.0) {
        if let Some(s) = x.checked_sub(*y) {
            return Int(Repr::Small(s));
        }
    }
    Int::from_bigint(a.to_bigint() - b.to_bigint())
}

fn mul_ref(a: &Int, b: &Int) -> Int {
    if let (Repr::Small(x), Repr::Small(y)) = (&a.0, &b.0) {
        if let Some(s) = x.checked_mul(*y) {
            return Int(Repr::Small(s));
        }
        return Int::from(i128::from(*x) * i128::from(*y));
    }
    Int::from_bigint(a.to_bigint() * b.to_bigint())
}

macro_rules! binop {
    ($trait:ident, $method:ident, $f:ident) => {
        impl $trait<&Int> for &Int {
            type Output = Int;
            #[inline]
            fn $method(self, rhs: &Int) -> Int {
                $f(self, rhs)
            }
        }
        impl $trait<Int> for &Int {
            type Output = Int;
            #[inline]
            fn $method(self, rhs: Int) -> Int {
                $f(self, &rhs)
            }
        }
        impl $trait<&Int> for Int {
            type Output = Int;
            #[inline]
            fn $method(self, rhs: &Int) -> Int {
                $f(&self, rhs)
            }
        }
        impl $trait<Int> for Int {
            type Output = Int;
            #[inline]
            fn $method(self, rhs: Int) -> Int {
                $f(&self, &rhs)
            }
        }
        impl $trait<i64> for &Int {
            type Output = Int;
            #[inline]
            fn $method(self, rhs: i64) -> Int {
                $f(self, &Int::from(rhs))
            }
        }
        impl $trait<i64> for Int {
            type Output = Int;
            #[inline]
            fn $method(self, rhs: i64) -> Int {
                $f(&self, &Int::from(rhs))
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        *self = add_ref(self, rhs);
    }
}

impl AddAssign<i64> for Int {
    fn add_assign(&mut self, rhs: i64) {
        if let Repr::Small(x) = &mut self.0 {
            if let Some(s) = x.checked_add(rhs) {
                *x = s;
                return;
            }
        }
        *self = add_ref(self, &Int::from(rhs));
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        *self = sub_ref(self, rhs);
    }
}

impl SubAssign<i64> for Int {
    fn sub_assign(&mut self, rhs: i64) {
        if let Repr::Small(x) = &mut self.0 {
            if let Some(s) = x.checked_sub(rhs) {
                *x = s;
                return;
            }
        }
        *self = sub_ref(self, &Int::from(rhs));
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match &self.0 {
            Repr::Small(v) => match v.checked_neg() {
                Some(n) => Int(Repr::Small(n)),
                None => Int(Repr::Large(-BigInt::from(*v))),
            },
            Repr::Large(b) => Int::from_bigint(-b),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl std::iter::Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int::ZERO, |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Int> for Int {
    fn sum<I: Iterator<Item = &'a Int>>(iter: I) -> Int {
        iter.fold(Int::ZERO, |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(s: &str) -> Int {
        s.parse().unwrap()
    }

    #[test]
    fn promotes_on_overflow() {
        let m = Int::from(i64::MAX);
        let s = &m + 1;
        assert_eq!(s.to_string(), "9223372036854775808");
        assert_eq!(&s - 1, m);
        assert!((&s - 1).as_i64().is_some());
        assert_eq!((-Int::from(i64::MIN)).to_string(), "9223372036854775808");
    }

    #[test]
    fn ordering_across_representations() {
        let huge = big("100000000000000000000000");
        let (max, min) = (Int::from(i64::MAX), Int::from(i64::MIN));
        assert!(huge > max);
        assert!(-&huge < min);
        assert!(Int::from(-3) < Int::from(2));
    }

    #[test]
    fn floor_division_signs() {
        let cases = [
            (7, 2, 3, 1),
            (-7, 2, -4, 1),
            (7, -2, -4, -1),
            (-7, -2, 3, -1),
            (6, 3, 2, 0),
        ];
        for (a, b, q, r) in cases {
            assert_eq!(Int::from(a).div_floor(&Int::from(b)), q);
            assert_eq!(Int::from(a).mod_floor(&Int::from(b)), r);
        }
        assert_eq!(Int::from(-5).half_floor(), -3);
    }

    #[test]
    fn parses_underscores() {
        assert_eq!(big("1_000_000"), 1_000_000);
        assert_eq!(big("-42"), -42);
        assert!(Int::parse_decimal("_1").is_err());
        assert!(Int::parse_decimal("1_").is_err());
        assert!(Int::parse_decimal("").is_err());
        assert!(Int::parse_decimal("-").is_err());
        assert!(Int::parse_decimal("12a").is_err());
    }

    #[test]
    fn json_is_lossless() {
        let values = [Int::from(-7), big("-123456789012345678901234567890")];
        for v in values {
            let s = serde_json::to_string(&v).unwrap();
            assert_eq!(s, v.to_string());
            let back: Int = serde_json::from_str(&s).unwrap();
            assert_eq!(back, v);
        }
        assert!(serde_json::from_str::<Int>("1.5").is_err());
    }

    proptest! {
        #[test]
        fn arithmetic_matches_bigint(a in any::<i64>(), b in any::<i64>()) {
            let (x, y) = (Int::from(a), Int::from(b));
            let (bx, by) = (BigInt::from(a), BigInt::from(b));
            prop_assert_eq!((&x + &y).to_bigint(), &bx + &by);
            prop_assert_eq!((&x - &y).to_bigint(), &bx - &by);
            prop_assert_eq!((&x * &y).to_bigint(), &bx * &by);
            if b != 0 {
                prop_assert_eq!(x.div_floor(&y).to_bigint(), bx.div_floor(&by));
                prop_assert_eq!(x.mod_floor(&y).to_bigint(), bx.mod_floor(&by));
            }
            prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
        }
    }
}
