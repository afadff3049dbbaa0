//! Coefficient fields: the rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::Structural(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    /// Image of an integer in the field.
    pub fn from_int(&self, n: impl Into<BigInt>) -> Scalar {
        self.normalize(Scalar(BigRational::from_integer(n.into())))
    }

    /// Image of a rational number `num / den` in the field. `den` must be a unit.
    pub fn from_ratio(&self, num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Structural("division by zero".into()));
        }
        match self {
            Field::Rationals => Ok(Scalar(BigRational::new(num, den))),
            Field::Prime(_) => {
                let d = self.from_int(den);
                if d.is_zero() {
                    return Err(Error::Structural("denominator vanishes in the field".into()));
                }
                Ok(self.mul(&self.from_int(num), &self.inv(&d)))
            }
        }
    }

    /// Brings an arbitrary rational into canonical form for this field.
    pub fn normalize(&self, a: Scalar) -> Scalar {
        match self {
            Field::Rationals => a,
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                let num = a.0.numer().mod_floor(&p);
                let den = a.0.denom().mod_floor(&p);
                let v = if den.is_one() {
                    num
                } else {
                    (num * mod_inverse(&den, &p)).mod_floor(&p)
                };
                Scalar(BigRational::from_integer(v))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => Scalar(&a.0 + &b.0),
            Field::Prime(_) => self.normalize(Scalar(&a.0 + &b.0)),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => Scalar(&a.0 - &b.0),
            Field::Prime(_) => self.normalize(Scalar(&a.0 - &b.0)),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => Scalar(&a.0 * &b.0),
            Field::Prime(_) => self.normalize(Scalar(&a.0 * &b.0)),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => Scalar(-&a.0),
            Field::Prime(_) => self.normalize(Scalar(-&a.0)),
        }
    }

    /// Multiplicative inverse. Panics on zero, which callers never pass.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Field::Rationals => Scalar(a.0.recip()),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                Scalar(BigRational::from_integer(mod_inverse(a.0.numer(), &p)))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.extended_gcd(p);
    e.x.mod_floor(p)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Prime-field elements are stored as integers in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(pub(crate) BigRational);

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Scalar {
        Scalar(self.0.abs())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}
