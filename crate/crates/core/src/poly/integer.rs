//! Arbitrary precision integers with an inline fast path.
//!
//! Almost every coefficient that shows up in determinant expansions fits in a
//! machine word, so values are kept as `i64` until an operation overflows and
//! only then promoted to a heap allocated [`BigInt`].

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An arbitrary precision integer.
///
/// Invariant: the `Big` variant never holds a value that fits in an `i64`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    /// Builds an integer from a `BigInt`, demoting it when it fits a word.
    pub fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(v) => *v < 0,
            Integer::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Integer {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-b),
        }
    }

    pub fn add(&self, other: &Integer) -> Integer {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => match a.checked_add(*b) {
                Some(s) => Integer::Small(s),
                None => Integer::Big(BigInt::from(*a) + BigInt::from(*b)),
            },
            _ => Integer::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn sub(&self, other: &Integer) -> Integer {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => match a.checked_sub(*b) {
                Some(s) => Integer::Small(s),
                None => Integer::Big(BigInt::from(*a) - BigInt::from(*b)),
            },
            _ => Integer::from_big(self.to_big() - other.to_big()),
        }
    }

    pub fn mul(&self, other: &Integer) -> Integer {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => match a.checked_mul(*b) {
                Some(p) => Integer::Small(p),
                None => Integer::Big(BigInt::from(*a) * BigInt::from(*b)),
            },
            (Integer::Small(0), _) | (_, Integer::Small(0)) => Integer::ZERO,
            _ => Integer::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn add_assign(&mut self, other: &Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (&*self, other) {
            if let Some(s) = a.checked_add(*b) {
                *self = Integer::Small(s);
                return;
            }
        }
        *self = Integer::add(self, other);
    }

    /// `self += a * b`
    pub fn add_mul_assign(&mut self, a: &Integer, b: &Integer) {
        if let (Integer::Small(s), Integer::Small(x), Integer::Small(y)) = (&*self, a, b) {
            if let Some(p) = x.checked_mul(*y) {
                if let Some(r) = s.checked_add(p) {
                    *self = Integer::Small(r);
                    return;
                }
            }
        }
        *self = Integer::add(self, &a.mul(b));
    }

    pub fn pow(&self, mut e: u32) -> Integer {
        let mut base = self.clone();
        let mut acc = Integer::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn gcd(&self, other: &Integer) -> Integer {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) if *a != i64::MIN && *b != i64::MIN => Integer::Small(a.gcd(b)),
            _ => Integer::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    /// Residue in `[0, p)` for a modulus `p < 2^63`.
    pub fn rem_euclid_u64(&self, p: u64) -> u64 {
        match self {
            Integer::Small(v) => v.rem_euclid(p as i64) as u64,
            Integer::Big(b) => {
                let r = b.mod_floor(&BigInt::from(p));
                r.to_u64().expect("mod_floor result lies in [0, p)")
            }
        }
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl From<&Integer> for BigInt {
    fn from(v: &Integer) -> Self {
        v.to_big()
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<i64>() {
            Ok(v) => Ok(Integer::Small(v)),
            Err(_) => s.parse::<BigInt>().map(Integer::from_big),
        }
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::ONE
    }
}

impl core::ops::Add for Integer {
    type Output = Integer;
    fn add(self, rhs: Integer) -> Integer {
        Integer::add(&self, &rhs)
    }
}

impl core::ops::Mul for Integer {
    type Output = Integer;
    fn mul(self, rhs: Integer) -> Integer {
        Integer::mul(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Integer::Small(i64::MAX).add(&Integer::ONE);
        assert!(matches!(big, Integer::Big(_)));
        let back = big.sub(&Integer::ONE);
        assert_eq!(back, Integer::Small(i64::MAX));
        let sq = Integer::Small(1 << 40).mul(&Integer::Small(1 << 40));
        assert_eq!(sq.to_string(), "1208925819614629174706176");
        assert_eq!(Integer::Small(i64::MIN).neg().to_string(), "9223372036854775808");
    }

    #[test]
    fn residues_are_non_negative() {
        assert_eq!(Integer::Small(-1).rem_euclid_u64(7), 6);
        let big: Integer = "-100000000000000000000000".parse().unwrap();
        assert_eq!(big.rem_euclid_u64(7), (7 - (100000000000000000000000u128 % 7) as u64) % 7);
    }

    #[test]
    fn add_mul_assign_matches_big_path() {
        let mut acc = Integer::Small(i64::MAX - 1);
        acc.add_mul_assign(&Integer::Small(3), &Integer::Small(4));
        assert_eq!(acc.to_big(), BigInt::from(i64::MAX - 1) + BigInt::from(12));
    }
}
