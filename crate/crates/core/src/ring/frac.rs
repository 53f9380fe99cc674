use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use super::{Field, GcdDomain, Scalar};
use crate::error::{Error, Result};

/// An element `num / den` of the fraction field `K` of `R`.
///
/// Always stored with `gcd(num, den)` a unit and `den > 0`. Equality and
/// ordering are decided by cross-multiplication, so they do not depend on
/// which associate the reduction picked.
#[derive(Clone, Debug)]
pub struct Frac<R> {
    num: R,
    den: R,
}

impl<R: GcdDomain> Frac<R> {
    pub fn new(num: R, den: R) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator"));
        }
        if den.is_one() {
            return Ok(Frac { num, den });
        }
        let (num, den) = R::reduce_fraction(num, den);
        Ok(Frac { num, den })
    }

    pub fn from_ring(r: R) -> Self {
        Frac { num: r, den: R::one() }
    }

    pub fn from_i64(v: i64) -> Self {
        Self::from_ring(R::from_i64(v))
    }

    /// `num / den` for small integers; panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(R::from_i64(num), R::from_i64(den)).expect("nonzero denominator")
    }

    pub fn numer(&self) -> &R {
        &self.num
    }

    pub fn denom(&self) -> &R {
        &self.den
    }

    /// The element as a member of `R`, if it lies there.
    pub fn to_ring(&self) -> Option<R> {
        self.num.exact_div(&self.den)
    }

    pub fn is_in_ring(&self) -> bool {
        self.to_ring().is_some()
    }

    /// Membership in `R⁺`.
    pub fn is_in_ring_nonneg(&self) -> bool {
        self.is_nonneg() && self.is_in_ring()
    }

    pub fn is_ring_unit(&self) -> bool {
        self.to_ring().is_some_and(|r| r.is_unit())
    }

    /// Membership in `R⁺ ∩ R^×`.
    pub fn is_positive_ring_unit(&self) -> bool {
        self.to_ring().is_some_and(|r| r.is_positive_unit())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num.clone() + rhs.num.clone(), self.den.clone())
                .expect("nonzero");
        }
        Self::new(
            self.num.clone() * rhs.den.clone() + rhs.num.clone() * self.den.clone(),
            self.den.clone() * rhs.den.clone(),
        )
        .expect("nonzero")
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.clone() * rhs.num.clone(), self.den.clone() * rhs.den.clone())
            .expect("nonzero")
    }
}

impl<R: GcdDomain> From<R> for Frac<R> {
    fn from(r: R) -> Self {
        Frac::from_ring(r)
    }
}

impl<R: GcdDomain> PartialEq for Frac<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.clone() * other.den.clone() == other.num.clone() * self.den.clone()
    }
}

impl<R: GcdDomain> Eq for Frac<R> {}

impl<R: GcdDomain> PartialOrd for Frac<R> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<R: GcdDomain> Ord for Frac<R> {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        (self.num.clone() * other.den.clone()).cmp(&(other.num.clone() * self.den.clone()))
    }
}

impl<R: GcdDomain> Add for Frac<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<R: GcdDomain> Sub for Frac<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.add_ref(&-rhs)
    }
}

impl<R: GcdDomain> Mul for Frac<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

/// Panics on division by zero; use [`Field::inv`] for a checked inverse.
impl<R: GcdDomain> Div for Frac<R> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero")
    }
}

impl<R: GcdDomain> Neg for Frac<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Frac { num: -self.num, den: self.den }
    }
}

impl<R: GcdDomain> Scalar for Frac<R> {
    fn zero() -> Self {
        Frac { num: R::zero(), den: R::one() }
    }

    fn one() -> Self {
        Frac { num: R::one(), den: R::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.den == self.num
    }

    /// Accumulates over a common denominator and reduces once.
    fn dot<'a>(terms: impl Iterator<Item = (&'a Self, &'a Self)>) -> Self
    where
        Self: 'a,
    {
        let terms: alloc::vec::Vec<_> = terms.collect();
        if terms.iter().all(|(a, b)| a.den.is_one() && b.den.is_one()) {
            return Self::from_ring(R::dot(terms.into_iter().map(|(a, b)| (&a.num, &b.num))));
        }
        let (mut num, mut den) = (R::zero(), R::one());
        for (a, b) in terms {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let p = a.num.clone() * b.num.clone();
            let q = a.den.clone() * b.den.clone();
            if q == den {
                num = num + p;
            } else if q.is_one() {
                num = num + p * den.clone();
            } else if den.is_one() {
                num = num * q.clone() + p;
                den = q;
            } else {
                num = num * q.clone() + p * den.clone();
                den = den * q;
            }
        }
        Self::new(num, den).expect("nonzero denominator")
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul_ref(&r))
    }

    fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    fn is_nonneg(&self) -> bool {
        self.num.is_nonneg()
    }
}

impl<R: GcdDomain> Field for Frac<R> {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::new(self.den.clone(), self.num.clone()).expect("nonzero"))
    }
}

impl<R: GcdDomain> fmt::Display for Frac<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == R::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl<R: GcdDomain> FromStr for Frac<R> {
    type Err = Error;

    /// `num` or `num/den`, each in the ring's own encoding; parentheses
    /// around either part are accepted.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        match t.split_once('/') {
            None => Ok(Frac::from_ring(t.parse()?)),
            Some((n, d)) => {
                let n: R = n.parse()?;
                let d: R = d.parse()?;
                Frac::new(n, d).map_err(|_| Error::Parse(format!("`{s}` has a zero denominator")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::ring::{Integer, Rational, ZSqrt2};

    #[test]
    fn reduced_with_positive_denominator() {
        let f = Frac::new(Integer::from(6), Integer::from(-4)).unwrap();
        assert_eq!(f.numer(), &Integer::from(-3));
        assert_eq!(f.denom(), &Integer::from(2));
        assert_eq!(f.to_string(), "-3/2");
        assert!(Frac::new(Integer::from(1), Integer::from(0)).is_err());
    }

    #[test]
    fn cross_representation_equality() {
        let a = Frac::<Integer>::ratio(2, 4);
        let b = Frac::<Integer>::ratio(-3, -6);
        assert_eq!(a, b);
        let x = Frac::new(ZSqrt2::new(2, 2), ZSqrt2::new(4, 0)).unwrap();
        let y = Frac::new(ZSqrt2::new(1, 1), ZSqrt2::new(2, 0)).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn rational_ring_fraction_field_collapses() {
        let f: Frac<Rational> = "3/4".parse().unwrap();
        assert_eq!(f.denom(), &Rational::one());
        assert!(f.is_positive_ring_unit());
    }

    #[test]
    fn quad_fraction_parse_and_ring_membership() {
        let f: Frac<ZSqrt2> = "(1+1*s2)/2".parse().unwrap();
        assert!(!f.is_in_ring());
        let g = f.clone() * Frac::from_i64(2);
        assert_eq!(g.to_ring(), Some(ZSqrt2::new(1, 1)));
        assert_eq!(f.to_string().parse::<Frac<ZSqrt2>>().unwrap(), f);
        let h: Frac<ZSqrt2> = "1/(1+1*s2)".parse().unwrap();
        assert_eq!(h.to_ring(), Some(ZSqrt2::new(-1, 1)));
    }
}
