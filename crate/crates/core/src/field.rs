//! Exact scalars: rationals (with a machine-word fast path) and prime fields.
//!
//! A [`Scalar`] carries enough information to do arithmetic on its own. A
//! rational value combined with a prime-field value is reduced into the prime
//! field first, so the constants `Scalar::zero()` and `Scalar::one()` work in
//! every field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rationals,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Prime { p } => {
                if p <= 2 || !is_prime(p) || p >= (1u64 << 62) {
                    Err(Error::InvalidParams(format!(
                        "prime field requires an odd prime below 2^62, got {p}"
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Characteristic (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime { p } => p,
        }
    }

    /// Embed an exact rational into this field.
    pub fn element(&self, q: &Scalar) -> Result<Scalar> {
        match *self {
            FieldSpec::Rationals => match q {
                Scalar::Mod { .. } => Err(Error::Parse(format!(
                    "prime-field value {q} used over the rationals"
                ))),
                _ => Ok(q.clone()),
            },
            FieldSpec::Prime { p } => q.to_mod(p).ok_or_else(|| {
                Error::Parse(format!("{q} has a denominator divisible by {p}"))
            }),
        }
    }

    /// Parse a rational literal such as `-3/2` into this field.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let q: Scalar = s.parse()?;
        self.element(&q)
    }

    pub fn label(&self) -> String {
        match *self {
            FieldSpec::Rationals => "rationals".to_string(),
            FieldSpec::Prime { p } => format!("prime:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rationals" || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("prime:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime '{rest}'")))?;
            let f = FieldSpec::Prime { p };
            f.validate()?;
            return Ok(f);
        }
        Err(Error::Parse(format!("unknown field '{s}'")))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    const BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in BASES.iter() {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// An exact field element.
///
/// Rationals are kept canonical: a value that fits in `Ratio<i64>` is always
/// stored as `Small`.
#[derive(Clone, Debug)]
pub enum Scalar {
    Small(Ratio<i64>),
    Big(BigRational),
    Mod { v: u64, p: u64 },
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    #[inline]
    pub fn zero() -> Self {
        Scalar::Small(Ratio::from_integer(0))
    }

    #[inline]
    pub fn one() -> Self {
        Scalar::Small(Ratio::from_integer(1))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Small(Ratio::from_integer(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::Small(Ratio::new(n, d))
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(r) => r.numer() == &0,
            Scalar::Big(r) => r.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_one(),
            Scalar::Big(r) => r.is_one(),
            Scalar::Mod { v, .. } => *v == 1,
        }
    }

    /// Modulus of a prime-field element.
    pub fn modulus(&self) -> Option<u64> {
        match self {
            Scalar::Mod { p, .. } => Some(*p),
            _ => None,
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(r) => BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Scalar::Big(r) => r.clone(),
            Scalar::Mod { .. } => unreachable!("prime-field value used as a rational"),
        }
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar::Small(Ratio::new_raw(n, d)),
            _ => Scalar::Big(r),
        }
    }

    /// Reduce into `F_p`; `None` if the denominator vanishes mod `p`.
    pub fn to_mod(&self, p: u64) -> Option<Scalar> {
        match self {
            Scalar::Mod { v, p: q } => {
                if *q == p {
                    Some(self.clone())
                } else {
                    let _ = v;
                    None
                }
            }
            _ => {
                let r = self.to_big();
                let pb = BigInt::from(p);
                let n = r.numer().mod_floor(&pb).to_u64().unwrap();
                let d = r.denom().mod_floor(&pb).to_u64().unwrap();
                if d == 0 {
                    None
                } else {
                    Some(Scalar::Mod { v: mul_mod(n, pow_mod(d, p - 2, p), p), p })
                }
            }
        }
    }

    fn coerce(&self, p: u64) -> u64 {
        match self.to_mod(p) {
            Some(Scalar::Mod { v, .. }) => v,
            _ => panic!("value {self} has no image in F_{p}"),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Small(r) => Scalar::Small(r.recip()),
            Scalar::Big(r) => Scalar::from_big(r.recip()),
            Scalar::Mod { v, p } => Scalar::Mod { v: pow_mod(*v, p - 2, *p), p: *p },
        }
    }

    /// Numerator and denominator of a rational value.
    pub fn as_big_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Mod { .. } => None,
            _ => Some(self.to_big()),
        }
    }

    pub fn from_big_rational(r: BigRational) -> Scalar {
        Scalar::from_big(r)
    }

    fn binop(
        &self,
        other: &Scalar,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl Fn(&BigRational, &BigRational) -> BigRational,
        modp: impl Fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (self, other) {
            (Scalar::Small(a), Scalar::Small(b)) => match small(a, b) {
                Some(r) => Scalar::Small(r),
                None => Scalar::from_big(big(&self.to_big(), &other.to_big())),
            },
            (Scalar::Mod { v, p }, o) | (o, Scalar::Mod { v, p })
                if !matches!(o, Scalar::Mod { .. }) =>
            {
                // keep operand order for non-commutative ops
                let (a, b) = if matches!(self, Scalar::Mod { .. }) {
                    (*v, o.coerce(*p))
                } else {
                    (o.coerce(*p), *v)
                };
                Scalar::Mod { v: modp(a, b, *p), p: *p }
            }
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Mod { v: modp(*a, *b, *p), p: *p }
            }
            _ => Scalar::from_big(big(&self.to_big(), &other.to_big())),
        }
    }

    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        self.binop(o, |a, b| a.checked_add(b), |a, b| a + b, |a, b, p| {
            let s = a as u128 + b as u128;
            (s % p as u128) as u64
        })
    }

    pub fn sub_ref(&self, o: &Scalar) -> Scalar {
        self.binop(o, |a, b| a.checked_sub(b), |a, b| a - b, |a, b, p| {
            ((a as u128 + p as u128 - b as u128) % p as u128) as u64
        })
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return match (self.modulus(), o.modulus()) {
                (Some(p), _) | (_, Some(p)) => Scalar::Mod { v: 0, p },
                _ => Scalar::zero(),
            };
        }
        self.binop(o, |a, b| a.checked_mul(b), |a, b| a * b, mul_mod)
    }

    pub fn div_ref(&self, o: &Scalar) -> Scalar {
        assert!(!o.is_zero(), "division by zero");
        self.binop(o, |a, b| a.checked_div(b), |a, b| a / b, |a, b, p| {
            mul_mod(a, pow_mod(b, p - 2, p), p)
        })
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Small(r) => match 0i64.checked_sub(*r.numer()) {
                Some(n) => Scalar::Small(Ratio::new_raw(n, *r.denom())),
                None => Scalar::from_big(-self.to_big()),
            },
            Scalar::Big(r) => Scalar::from_big(-r.clone()),
            Scalar::Mod { v, p } => Scalar::Mod { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }

    /// `self += a * b`
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.add_ref(&a.mul_ref(b));
    }

    /// Integer numerator/denominator when the value is a rational with
    /// machine-size parts.
    pub fn small_parts(&self) -> Option<(i64, i64)> {
        match self {
            Scalar::Small(r) => Some((*r.numer(), *r.denom())),
            _ => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_negative(),
            Scalar::Big(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Small(a), Scalar::Small(b)) => a == b,
            (Scalar::Big(a), Scalar::Big(b)) => a == b,
            (Scalar::Small(_), Scalar::Big(_)) | (Scalar::Big(_), Scalar::Small(_)) => false,
            _ => self.sub_ref(other).is_zero(),
        }
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A total order used only for canonical, deterministic output.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Small(a), Scalar::Small(b)) => a.cmp(b),
            (Scalar::Mod { v: a, .. }, Scalar::Mod { v: b, .. }) => a.cmp(b),
            (Scalar::Mod { .. }, _) => Ordering::Greater,
            (_, Scalar::Mod { .. }) => Ordering::Less,
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Big(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `n` or `n/d` with arbitrary-size integers.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad rational literal '{s}'"));
        let parse_int = |t: &str| -> Result<BigInt> {
            let t = t.trim();
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (parse_int(n)?, parse_int(d)?),
            None => (parse_int(s)?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in '{s}'")));
        }
        Ok(Scalar::from_big(BigRational::new(n, d)))
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$f(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = self.add_ref(o);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = self.sub_ref(o);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = self.mul_ref(o);
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_overflow_promotes() {
        let a = Scalar::from_int(i64::MAX);
        let b = &a + &a;
        assert!(matches!(b, Scalar::Big(_)));
        let c = &b - &a;
        assert!(matches!(c, Scalar::Small(_)));
        assert_eq!(c, a);
    }

    #[test]
    fn parse_and_print() {
        let q: Scalar = "-6/4".parse().unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
        let big: Scalar = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(big.to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn prime_field_mixing() {
        let f = FieldSpec::Prime { p: 101 };
        let half = f.parse("1/2").unwrap();
        let two = Scalar::from_int(2);
        assert!((&half * &two).is_one());
        assert_eq!(&half * &two, Scalar::one());
        assert!((Scalar::one() - &(&half + &half)).is_zero());
        assert!(f.parse("1/101").is_err());
        assert!("prime:4".parse::<FieldSpec>().is_err());
        assert!("prime:2".parse::<FieldSpec>().is_err());
        assert_eq!("prime:1000003".parse::<FieldSpec>().unwrap(), FieldSpec::Prime { p: 1000003 });
    }

    #[test]
    fn inverses() {
        let q = Scalar::from_frac(-3, 7);
        assert!((&q * &q.inv()).is_one());
        let m = Scalar::Mod { v: 5, p: 7 };
        assert!((&m * &m.inv()).is_one());
    }
}
