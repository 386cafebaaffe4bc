//! Coefficient rings: the integers, the rationals and word-size prime fields.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::integer::Integer;

/// Tag describing which coefficient ring a polynomial lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingTag {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Integers => f.write_str("ZZ"),
            RingTag::Rationals => f.write_str("QQ"),
            RingTag::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not an odd prime below 2^31")]
    BadModulus(u64),
}

/// A commutative ring whose elements are plain values.
///
/// The ring value itself carries any runtime parameters (the modulus of a
/// prime field), so that polynomials can tag themselves with it.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn tag(&self) -> RingTag;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_integer(&self, v: &Integer) -> Self::Elem;

    /// Maps a rational into the ring, if its denominator is a unit there.
    fn from_rational(&self, v: &BigRational) -> Option<Self::Elem>;

    /// The exact rational value of an element, for characteristic zero rings.
    fn to_rational(&self, a: &Self::Elem) -> Option<BigRational>;

    /// Reduction modulo a prime `p`, when that is well defined.
    fn reduce_mod(&self, a: &Self::Elem, p: u64) -> Option<u64>;

    /// True when the canonical rendering starts with a minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool;

    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        self.add_assign(acc, &p);
    }

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_integer(&Integer::Small(v))
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A ring in which every non-zero element is invertible.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Size measure used to pick pivots during exact elimination.
    fn height(&self, a: &Self::Elem) -> u64;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }
}

/// The ring of integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntegerRing;

/// The field of rational numbers, elements kept in lowest terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalField;

/// The prime field `Z/pZ` for an odd prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

pub const ZZ: IntegerRing = IntegerRing;
pub const QQ: RationalField = RationalField;

impl Ring for IntegerRing {
    type Elem = Integer;

    fn tag(&self) -> RingTag {
        RingTag::Integers
    }
    fn zero(&self) -> Integer {
        Integer::ZERO
    }
    fn one(&self) -> Integer {
        Integer::ONE
    }
    fn is_zero(&self, a: &Integer) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Integer) -> bool {
        a.is_one()
    }
    fn add(&self, a: &Integer, b: &Integer) -> Integer {
        a.add(b)
    }
    fn add_assign(&self, a: &mut Integer, b: &Integer) {
        a.add_assign(b)
    }
    fn add_mul_assign(&self, acc: &mut Integer, a: &Integer, b: &Integer) {
        acc.add_mul_assign(a, b)
    }
    fn sub(&self, a: &Integer, b: &Integer) -> Integer {
        a.sub(b)
    }
    fn neg(&self, a: &Integer) -> Integer {
        a.neg()
    }
    fn mul(&self, a: &Integer, b: &Integer) -> Integer {
        a.mul(b)
    }
    fn from_integer(&self, v: &Integer) -> Integer {
        v.clone()
    }
    fn from_rational(&self, v: &BigRational) -> Option<Integer> {
        v.is_integer().then(|| Integer::from_big(v.to_integer()))
    }
    fn to_rational(&self, a: &Integer) -> Option<BigRational> {
        Some(BigRational::from_integer(a.to_big()))
    }
    fn reduce_mod(&self, a: &Integer, p: u64) -> Option<u64> {
        Some(a.rem_euclid_u64(p))
    }
    fn is_negative(&self, a: &Integer) -> bool {
        a.is_negative()
    }
    fn fmt_elem(&self, a: &Integer, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }
}

impl Ring for RationalField {
    type Elem = BigRational;

    fn tag(&self) -> RingTag {
        RingTag::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn add_assign(&self, a: &mut BigRational, b: &BigRational) {
        *a += b;
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_integer(&self, v: &Integer) -> BigRational {
        BigRational::from_integer(v.to_big())
    }
    fn from_rational(&self, v: &BigRational) -> Option<BigRational> {
        Some(v.clone())
    }
    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
    fn reduce_mod(&self, a: &BigRational, p: u64) -> Option<u64> {
        let field = PrimeField { p };
        let num = Integer::from_big(a.numer().clone()).rem_euclid_u64(p);
        let den = Integer::from_big(a.denom().clone()).rem_euclid_u64(p);
        field.inv(&den).map(|d| field.mul(&num, &d))
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn fmt_elem(&self, a: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if a.denom().is_one() {
            write!(f, "{}", a.numer())
        } else {
            write!(f, "{}/{}", a.numer(), a.denom())
        }
    }
}

impl Field for RationalField {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn height(&self, a: &BigRational) -> u64 {
        let bits = a.numer().bits() + a.denom().bits();
        bits.max(1)
    }
}

impl PrimeField {
    /// Accepts odd primes below `2^31`, so products of residues fit in a `u64`.
    pub fn new(p: u64) -> Result<Self, RingError> {
        if !(3..1 << 31).contains(&p) || !is_prime_u64(p) {
            return Err(RingError::BadModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn mul_raw(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn add_raw(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub_raw(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn pow_raw(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, a);
            }
            a = self.mul_raw(a, a);
            e >>= 1;
        }
        acc
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn tag(&self) -> RingTag {
        RingTag::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.add_raw(*a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.sub_raw(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_raw(*a, *b)
    }
    fn add_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b) % self.p;
    }
    fn from_integer(&self, v: &Integer) -> u64 {
        v.rem_euclid_u64(self.p)
    }
    fn from_rational(&self, v: &BigRational) -> Option<u64> {
        QQ.reduce_mod(v, self.p)
    }
    fn to_rational(&self, _a: &u64) -> Option<BigRational> {
        None
    }
    fn reduce_mod(&self, a: &u64, p: u64) -> Option<u64> {
        (p == self.p).then_some(*a)
    }
    fn is_negative(&self, _a: &u64) -> bool {
        false
    }
    fn fmt_elem(&self, a: &u64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        (!(*a).is_multiple_of(self.p)).then(|| self.pow_raw(*a, self.p - 2))
    }

    fn height(&self, _a: &u64) -> u64 {
        1
    }
}

/// Deterministic Miller-Rabin, exact for every `n < 3_215_031_751`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    if n >= 3_215_031_751 {
        // Outside the certified range of the witness set below.
        return is_prime_trial(n);
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_prime_trial(n: u64) -> bool {
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    n % 2 == 1
}

/// Parses an integer or `num/den` literal into the given ring.
pub fn parse_coefficient<R: Ring>(ring: &R, text: &str) -> Option<R::Elem> {
    match text.split_once('/') {
        None => text.parse::<Integer>().ok().map(|v| ring.from_integer(&v)),
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            ring.from_rational(&BigRational::new(n, d))
        }
    }
}

/// Renders a single element with the ring's canonical spelling.
pub fn format_elem<R: Ring>(ring: &R, a: &R::Elem) -> String {
    struct Show<'a, R: Ring>(&'a R, &'a R::Elem);
    impl<R: Ring> fmt::Display for Show<'_, R> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            self.0.fmt_elem(self.1, f)
        }
    }
    alloc::format!("{}", Show(ring, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_bad_moduli() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(2147483647).is_ok());
        assert!(PrimeField::new(5).is_ok());
    }

    #[test]
    fn prime_test_agrees_with_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime_u64(n), n >= 2 && (n == 2 || is_prime_trial(n)), "{n}");
        }
        for n in [2147483647u64, 2147483629, 2147483587, 2147483579, 2147483563] {
            assert!(is_prime_u64(n));
        }
        assert!(!is_prime_u64(2147483645));
    }

    #[test]
    fn rational_reduction() {
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let r = QQ.reduce_mod(&third, 7).unwrap();
        assert_eq!(r * 3 % 7, 1);
        assert_eq!(QQ.reduce_mod(&third, 3), None);
    }

    #[test]
    fn parse_literals() {
        assert_eq!(parse_coefficient(&ZZ, "-12"), Some(Integer::Small(-12)));
        assert_eq!(parse_coefficient(&ZZ, "1/2"), None);
        assert_eq!(parse_coefficient(&QQ, "6/4"), Some(BigRational::new(BigInt::from(3), BigInt::from(2))));
        assert_eq!(parse_coefficient(&PrimeField::new(5).unwrap(), "1/2"), Some(3));
    }
}
