//! Exact scalars: arbitrary-precision rationals and prime-field elements.
//!
//! Every container in the crate (operators, product tensors, algebras) is
//! tagged with a single [`Field`] and validates on construction that all of
//! its entries live there. Internal arithmetic therefore uses the operator
//! impls on `&Scalar`, which panic on a field mismatch; the `checked_*`
//! methods are the fallible public surface.
//!
//! Fields of characteristic 2 are accepted, but several skew-symmetry
//! arguments (e.g. "antisymmetric implies alternating") silently assume
//! characteristic different from 2.

use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for prime fields.
pub const MAX_MODULUS: u64 = 1 << 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    /// Integers modulo a prime. Build through [`Field::prime`] so primality is checked.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Fp(Fp::new(n.rem_euclid(p as i64) as u64, p)),
        }
    }

    /// `num / den` in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        self.from_bigints(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_bigints(self, num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let q = Scalar::Rational(BigRational::new(num, den));
        match self {
            Field::Rational => Ok(q),
            Field::Prime(p) => q.reduce_mod(p),
        }
    }

    /// Parses `"<int>"` or `"<int>/<posint>"`. Over a prime field the value is
    /// reduced, so the denominator must be invertible.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let bad = || Error::ParseScalar(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let digits = num.strip_prefix('-').unwrap_or(num);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = match den {
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let d = BigInt::from_str(d).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                d
            }
            None => BigInt::one(),
        };
        self.from_bigints(num, den)
    }

    pub fn contains(self, s: &Scalar) -> bool {
        s.field() == self
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p),
        }
    }

    pub(crate) fn expect_same(self, other: Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self,
                right: other,
            })
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::ParseScalar(s.to_string()))?;
        Field::prime(p)
    }
}

/// Trial division; moduli are capped at [`MAX_MODULUS`].
pub fn is_prime(p: u64) -> bool {
    if !(2..MAX_MODULUS).contains(&p) {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    fn new(value: u64, modulus: u64) -> Self {
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn mul(self, other: Fp) -> Fp {
        let v = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Fp::new(v as u64, self.modulus)
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Always in lowest terms with a positive denominator.
    Rational(BigRational),
    Fp(Fp),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Fp(x) => Field::Prime(x.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Fp(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Fp(x) => x.value == 1,
        }
    }

    /// Residue of a prime-field element.
    pub fn fp_value(&self) -> Option<u64> {
        match self {
            Scalar::Fp(x) => Some(x.value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Fp(_) => None,
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.field().expect_same(other.field())?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Fp(a), Scalar::Fp(b)) => {
                let v = (a.value as u128 + b.value as u128) % a.modulus as u128;
                Scalar::Fp(Fp::new(v as u64, a.modulus))
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.field().expect_same(other.field())?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.mul(*b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.field().expect_same(other.field())?;
        self.checked_mul(&other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Fp(x) => Scalar::Fp(x.pow(x.modulus - 2)),
        })
    }

    /// Image in `F_p`. Fails when the denominator is divisible by `p` or the
    /// scalar already lives in a different prime field.
    pub fn reduce_mod(&self, p: u64) -> Result<Scalar> {
        let target = Field::prime(p)?;
        match self {
            Scalar::Fp(x) if x.modulus == p => Ok(self.clone()),
            Scalar::Fp(_) => Err(Error::FieldMismatch {
                left: self.field(),
                right: target,
            }),
            Scalar::Rational(q) => {
                let pb = BigInt::from(p);
                let residue = |n: &BigInt| n.mod_floor(&pb).to_u64().unwrap_or(0);
                let den = residue(q.denom());
                if den == 0 {
                    return Err(Error::NotReducible(self.to_string()));
                }
                let num = Fp::new(residue(q.numer()), p);
                let den_inv = Fp::new(den, p).pow(p - 2);
                Ok(Scalar::Fp(num.mul(den_inv)))
            }
        }
    }

    /// Numerator and denominator of a rational scalar, as plain integers when
    /// they fit.
    pub fn small_ratio(&self) -> Option<(i64, i64)> {
        let q = self.as_rational()?;
        Some((q.numer().to_i64()?, q.denom().to_i64()?))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp(x) => write!(f, "{}", x.value),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).unwrap_or_else(|_| mismatch(self, rhs))
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).unwrap_or_else(|_| mismatch(self, rhs))
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).unwrap_or_else(|_| mismatch(self, rhs))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Fp(x) => Scalar::Fp(Fp::new(x.modulus - x.value, x.modulus)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}
