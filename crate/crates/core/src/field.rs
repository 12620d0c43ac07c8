//! Exact scalars over the rationals or a prime field.
//!
//! Rationals keep an `i64` fast path and promote to arbitrary precision
//! on overflow. Prime-field elements are stored as their canonical
//! representative in `0..p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest prime modulus accepted; keeps products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported maximum {MAX_PRIME}")]
    PrimeTooLarge(u64),
    #[error("denominator {0} is not invertible in the field")]
    NonInvertibleDenominator(String),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// A field element. Always normalized: denominators positive, fractions
/// reduced, and `Small` whenever the value fits in `i64`.
#[derive(Clone, Debug)]
pub enum Scalar {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => a == c && b == d,
            (Scalar::Big(x), Scalar::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub const ZERO: Scalar = Scalar::Small(0, 1);
    pub const ONE: Scalar = Scalar::Small(1, 1);

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Small(1, 1))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Scalar::Big(b) => (**b).clone(),
        }
    }

    fn from_big(r: BigRational) -> Scalar {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            Scalar::Small(n, d)
        } else {
            Scalar::Big(Box::new(r))
        }
    }

    fn from_i128_ratio(n: i128, d: i128) -> Scalar {
        debug_assert!(d != 0);
        let g = n.gcd(&d);
        let (mut n, mut d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar::Small(n, d),
            _ => Scalar::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d)))),
        }
    }

    /// Residue value for prime-field elements.
    fn residue(&self) -> u64 {
        match self {
            Scalar::Small(n, 1) => *n as u64,
            _ => unreachable!("prime-field scalar is not a canonical residue"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(n, 1) => write!(f, "{n}"),
            Scalar::Small(n, d) => write!(f, "{n}/{d}"),
            Scalar::Big(b) => write!(f, "{b}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
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

impl Field {
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p > MAX_PRIME {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::ZERO
    }

    pub fn one(&self) -> Scalar {
        Scalar::ONE
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Small(v, 1),
            Field::Prime(p) => Scalar::Small(v.rem_euclid(*p as i64), 1),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::from_big(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Scalar::Small(r.to_i64().expect("residue fits"), 1)
            }
        }
    }

    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, FieldError> {
        if den.is_zero() {
            return Err(FieldError::NonInvertibleDenominator(den.to_string()));
        }
        match self {
            Field::Rationals => Ok(Scalar::from_big(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(_) => {
                let d = self.from_bigint(den);
                let inv = self
                    .inv(&d)
                    .ok_or_else(|| FieldError::NonInvertibleDenominator(den.to_string()))?;
                Ok(self.mul(&self.from_bigint(num), &inv))
            }
        }
    }

    /// Parses `"3"`, `"-2/5"` exactly.
    pub fn parse(&self, s: &str) -> Result<Scalar, FieldError> {
        let t = s.trim();
        let parse_int =
            |x: &str| x.trim().parse::<BigInt>().map_err(|_| FieldError::Parse(s.to_string()));
        match t.split_once('/') {
            Some((n, d)) => self.from_ratio(&parse_int(n)?, &parse_int(d)?),
            None => Ok(self.from_bigint(&parse_int(t)?)),
        }
    }

    /// Maps a rational into this field (identity over Q).
    pub fn embed(&self, r: &Scalar) -> Result<Scalar, FieldError> {
        match self {
            Field::Rationals => Ok(r.clone()),
            Field::Prime(_) => {
                let b = r.to_big();
                self.from_ratio(b.numer(), b.denom())
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Small(((a.residue() + b.residue()) % p) as i64, 1),
            Field::Rationals => match (a, b) {
                (Scalar::Small(0, _), _) => b.clone(),
                (_, Scalar::Small(0, _)) => a.clone(),
                (Scalar::Small(n1, d1), Scalar::Small(n2, d2)) => {
                    let (n1, d1, n2, d2) = (*n1 as i128, *d1 as i128, *n2 as i128, *d2 as i128);
                    if d1 == 1 && d2 == 1 {
                        Scalar::from_i128_ratio(n1 + n2, 1)
                    } else {
                        Scalar::from_i128_ratio(n1 * d2 + n2 * d1, d1 * d2)
                    }
                }
                _ => Scalar::from_big(a.to_big() + b.to_big()),
            },
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Small(((p - a.residue()) % p) as i64, 1),
            Field::Rationals => match a {
                Scalar::Small(n, d) => Scalar::from_i128_ratio(-(*n as i128), *d as i128),
                Scalar::Big(b) => Scalar::from_big(-(**b).clone()),
            },
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return Scalar::ZERO;
        }
        match self {
            Field::Prime(p) => Scalar::Small(((a.residue() * b.residue()) % p) as i64, 1),
            Field::Rationals => match (a, b) {
                (Scalar::Small(1, 1), _) => b.clone(),
                (_, Scalar::Small(1, 1)) => a.clone(),
                (Scalar::Small(n1, d1), Scalar::Small(n2, d2)) => Scalar::from_i128_ratio(
                    *n1 as i128 * *n2 as i128,
                    *d1 as i128 * *d2 as i128,
                ),
                _ => Scalar::from_big(a.to_big() * b.to_big()),
            },
        }
    }

    /// `a + b*c`, the inner step of elimination.
    pub fn mul_add(&self, a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
        if b.is_zero() || c.is_zero() {
            return a.clone();
        }
        self.add(a, &self.mul(b, c))
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Prime(p) => {
                let (mut t, mut new_t) = (0i64, 1i64);
                let (mut r, mut new_r) = (*p as i64, a.residue() as i64);
                while new_r != 0 {
                    let q = r / new_r;
                    (t, new_t) = (new_t, t - q * new_t);
                    (r, new_r) = (new_r, r - q * new_r);
                }
                Some(Scalar::Small(t.rem_euclid(*p as i64), 1))
            }
            Field::Rationals => match a {
                Scalar::Small(n, d) => Some(Scalar::from_i128_ratio(*d as i128, *n as i128)),
                Scalar::Big(b) => Some(Scalar::from_big(b.recip())),
            },
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Canonical integer representative for prime fields; the integer
    /// itself over Q when the scalar is integral.
    pub fn as_integer(&self, a: &Scalar) -> Option<BigInt> {
        let b = a.to_big();
        b.is_integer().then(|| b.to_integer())
    }

    /// Absolute value of numerator and denominator, for bounds.
    pub fn height(&self, a: &Scalar) -> (BigInt, BigInt) {
        let b = a.to_big();
        (b.numer().abs(), b.denom().clone())
    }
}
