//! Exact scalars over ℚ or a prime field GF(p).
//!
//! Rationals are kept in lowest terms with a positive denominator. Values that
//! fit in machine words use an `i64` fast path and are promoted to big integers
//! on demand, so there is no overflow mode.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for prime fields; keeps residue products in `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

/// The ground field every structure is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// GF(p), after verifying that `p` is a prime that fits the residue path.
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Rational::from_i64(v)),
            Field::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den` in this field. Fails when `den` vanishes in the field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        Ok(&self.from_i64(num) * &d.inv()?)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// Parses the textual scalar form: optional sign, digits, optional `/digits`.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let bad = || Error::BadScalar(t.to_string());
        let (num_txt, den_txt) = match t.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (t, None),
        };
        let digits = num_txt.strip_prefix(['-', '+']).unwrap_or(num_txt);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num = BigInt::from_str(num_txt.strip_prefix('+').unwrap_or(num_txt)).map_err(|_| bad())?;
        let den = match den_txt {
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let den = BigInt::from_str(d).map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                den
            }
            None => BigInt::one(),
        };
        match self {
            Field::Rational => Ok(Scalar::Rational(Rational::from_big(BigRational::new(num, den)))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = num.mod_floor(&pb).to_u64().expect("reduced residue");
                let d = den.mod_floor(&pb).to_u64().expect("reduced residue");
                let n = Scalar::Residue { value: n, modulus: p };
                let d = Scalar::Residue { value: d, modulus: p };
                Ok(&n * &d.inv()?)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF {p}"),
        }
    }
}

/// Trial division; moduli are capped at [`MAX_MODULUS`].
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact rational in lowest terms with positive denominator.
///
/// Invariant: the `Small` variant is used exactly when numerator and
/// denominator fit in `i64` (excluding `i64::MIN`), so derived equality is
/// value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small { num: i64, den: i64 },
    Big(BigRational),
}

impl Rational {
    pub fn from_i64(v: i64) -> Self {
        if v == i64::MIN {
            return Rational::Big(BigRational::from_integer(BigInt::from(v)));
        }
        Rational::Small { num: v, den: 1 }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let fits = |v: i128| v > i64::MIN as i128 && v <= i64::MAX as i128;
        if fits(n) && fits(d) {
            Rational::Small { num: n as i64, den: d as i64 }
        } else {
            Rational::Big(BigRational::new(BigInt::from(n), BigInt::from(d)))
        }
    }

    pub fn from_big(r: BigRational) -> Self {
        let small = r.numer().to_i64().zip(r.denom().to_i64());
        match small {
            Some((n, d)) if n != i64::MIN && d != i64::MIN => Rational::Small { num: n, den: d },
            _ => Rational::Big(r),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Rational::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small { num, .. } => BigInt::from(*num),
            Rational::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small { den, .. } => BigInt::from(*den),
            Rational::Big(r) => r.denom().clone(),
        }
    }

    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
            _ => Rational::from_big(self.to_big() + other.to_big()),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * other.to_big()),
        }
    }

    fn neg(&self) -> Self {
        match self {
            Rational::Small { num, den } => Rational::Small { num: -num, den: *den },
            Rational::Big(r) => Rational::from_big(-r),
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Rational::Small { num, den } => Rational::from_i128(*den as i128, *num as i128),
            Rational::Big(r) => Rational::from_big(r.recip()),
        })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small { num, den: 1 } => write!(f, "{num}"),
            Rational::Small { num, den } => write!(f, "{num}/{den}"),
            Rational::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Rational::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// An exact element of ℚ or GF(p).
///
/// Arithmetic between scalars of different fields is a programming error and
/// panics; matrix-level operations check fields first and report
/// [`Error::FieldMismatch`] instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => matches!(r, Rational::Small { num: 1, den: 1 }),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) => Ok(Scalar::Rational(r.inv()?)),
            Scalar::Residue { value, modulus } => {
                if *value == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Residue { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus })
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.expect_field(other.field())?;
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i32) -> Result<Scalar> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field().one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn expect_field(&self, field: Field) -> Result<()> {
        if self.field() == field {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.field(), right: field })
        }
    }

    /// `self += a * b`, the inner step of every matrix product.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (
                Scalar::Residue { value, modulus },
                Scalar::Residue { value: x, modulus: ma },
                Scalar::Residue { value: y, modulus: mb },
            ) => {
                assert!(*modulus == *ma && *ma == *mb, "scalar field mismatch");
                *value = (*value + x * y % *modulus) % *modulus;
            }
            _ => {
                let prod = a * b;
                *self = &*self + &prod;
            }
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.add(b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: (a + b) % p, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.mul(b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: a * b % p, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.neg()),
            Scalar::Residue { value, modulus } => Scalar::Residue { value: (modulus - value) % modulus, modulus: *modulus },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_normalize() {
        let q = Field::Rational;
        let a = q.parse_scalar("6/-4").err();
        assert!(a.is_some(), "denominator sign is not part of the grammar");
        let b = q.parse_scalar("-6/4").unwrap();
        assert_eq!(b.to_string(), "-3/2");
        assert_eq!(q.parse_scalar("0/5").unwrap(), q.zero());
        assert_eq!(q.parse_scalar("+7").unwrap(), q.from_i64(7));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let q = Field::Rational;
        assert!(matches!(q.zero().inv(), Err(Error::DivisionByZero)));
        assert!(matches!(q.parse_scalar("1/0"), Err(Error::DivisionByZero)));
        let f7 = Field::prime(7).unwrap();
        assert!(matches!(f7.from_i64(14).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn residues_reduce() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.from_i64(-1).to_string(), "6");
        assert_eq!(f7.parse_scalar("-3").unwrap(), f7.from_i64(4));
        assert_eq!(f7.parse_scalar("1/2").unwrap(), f7.from_i64(4));
        let two = f7.from_i64(2);
        assert!((&two * &two.inv().unwrap()).is_one());
    }

    #[test]
    fn modulus_must_be_prime() {
        assert!(matches!(Field::prime(4), Err(Error::NotPrime(4))));
        assert!(matches!(Field::prime(1), Err(Error::NotPrime(1))));
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(MAX_MODULUS + 2).is_err());
    }

    #[test]
    fn small_path_promotes_without_overflow() {
        let q = Field::Rational;
        let big = q.from_i64(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Rational(Rational::Big(_))));
        let back = sq.checked_div(&big).unwrap();
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Rational(Rational::Small { .. })));
        let min = q.from_i64(i64::MIN);
        assert_eq!((&min - &min), q.zero());
    }
}
