use alloc::format;
use core::fmt;
use core::ops::Neg;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{forward_binops, GcdDomain, RingKind, Scalar};
use crate::error::{Error, Result};

/// An arbitrary-precision element of ℤ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Integer(BigInt);

impl Integer {
    pub fn new(v: BigInt) -> Self {
        Integer(v)
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn into_bigint(self) -> BigInt {
        self.0
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Integer(&self.0 + &rhs.0)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        Integer(&self.0 - &rhs.0)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        Integer(&self.0 * &rhs.0)
    }
}

forward_binops!(Integer, add_ref, sub_ref, mul_ref);

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        Integer(-self.0)
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer(BigInt::from(v))
    }
}

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        Integer(v)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Integer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t);
        BigInt::from_str(t.trim())
            .map(Integer)
            .map_err(|_| Error::Parse(format!("`{s}` is not an integer")))
    }
}

impl Scalar for Integer {
    fn zero() -> Self {
        Integer(BigInt::zero())
    }

    fn one() -> Self {
        Integer(BigInt::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.0.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&rhs.0);
        r.is_zero().then_some(Integer(q))
    }

    fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    fn is_nonneg(&self) -> bool {
        !self.0.is_negative()
    }
}

impl GcdDomain for Integer {
    const KIND: RingKind = RingKind::Integers;

    fn from_i64(v: i64) -> Self {
        Integer::from(v)
    }

    fn gcd_nonzero(&self, other: &Self) -> Self {
        Integer(self.0.gcd(&other.0))
    }

    fn unit_inverse(&self) -> Option<Self> {
        (self.0.abs().is_one()).then(|| self.clone())
    }
}
