use core::fmt;
use core::ops::Neg;
use core::str::FromStr;

use super::{forward_binops, Field, Frac, GcdDomain, Integer, RingKind, Scalar};
use crate::error::{Error, Result};

/// An element of ℚ, viewed as a GCD-domain in its own right.
///
/// Every nonzero element is a unit, so gcds are always 1 and the fraction
/// field of ℚ is ℚ again.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(Frac<Integer>);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        Frac::new(Integer::from(num), Integer::from(den)).map(Rational)
    }

    pub fn from_frac(f: Frac<Integer>) -> Self {
        Rational(f)
    }

    pub fn as_frac(&self) -> &Frac<Integer> {
        &self.0
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Rational(self.0.clone() + rhs.0.clone())
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        Rational(self.0.clone() - rhs.0.clone())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        Rational(self.0.clone() * rhs.0.clone())
    }
}

forward_binops!(Rational, add_ref, sub_ref, mul_ref);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Frac::<Integer>::from_str(s).map(Rational)
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational(Frac::zero())
    }

    fn one() -> Self {
        Rational(Frac::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn dot<'a>(terms: impl Iterator<Item = (&'a Self, &'a Self)>) -> Self {
        Rational(Frac::dot(terms.map(|(a, b)| (&a.0, &b.0))))
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.0.exact_div(&rhs.0).map(Rational)
    }

    fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    fn is_nonneg(&self) -> bool {
        self.0.is_nonneg()
    }
}

impl GcdDomain for Rational {
    const KIND: RingKind = RingKind::Rationals;

    fn from_i64(v: i64) -> Self {
        Rational(Frac::from_ring(Integer::from(v)))
    }

    fn gcd_nonzero(&self, _other: &Self) -> Self {
        Self::one()
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.0.inv().map(Rational)
    }

    fn reduce_fraction(num: Self, den: Self) -> (Self, Self) {
        let inv = den.unit_inverse().expect("nonzero denominator");
        (num * inv, Self::one())
    }
}
