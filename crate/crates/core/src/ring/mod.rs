//! Totally ordered GCD-domains `R ⊂ ℝ` and their fraction fields.
//!
//! Three rings are provided: [`Integer`] (ℤ, the only positive unit is 1),
//! [`Rational`] (ℚ, every positive element is a unit) and [`ZSqrt2`]
//! (ℤ[√2], infinitely many units and a nontrivial gcd). [`Frac`] is the
//! fraction field `K` of any of them.

mod frac;
mod integer;
mod rational;
mod zsqrt2;

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

pub use frac::Frac;
pub use integer::Integer;
pub use rational::Rational;
pub use zsqrt2::ZSqrt2;

use crate::error::{Error, Result};

/// Which coefficient ring a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    Rationals,
    QuadraticSqrt2,
}

impl RingKind {
    /// Short code used by the text formats (`int`, `rat`, `quad2`).
    pub const fn code(self) -> &'static str {
        match self {
            RingKind::Integers => "int",
            RingKind::Rationals => "rat",
            RingKind::QuadraticSqrt2 => "quad2",
        }
    }

    pub const fn is_field(self) -> bool {
        matches!(self, RingKind::Rationals)
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "int" | "integers" | "Z" => Ok(RingKind::Integers),
            "rat" | "rationals" | "Q" => Ok(RingKind::Rationals),
            "quad2" | "zsqrt2" | "Z[sqrt2]" => Ok(RingKind::QuadraticSqrt2),
            other => Err(Error::Parse(alloc::format!(
                "unknown ring `{other}` (expected int, rat or quad2)"
            ))),
        }
    }
}

/// Exact, totally ordered commutative ring elements usable as matrix entries.
pub trait Scalar:
    Clone
    + Eq
    + Ord
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `Σ aᵢ bᵢ`.
    fn dot<'a>(terms: impl Iterator<Item = (&'a Self, &'a Self)>) -> Self
    where
        Self: 'a,
    {
        terms.fold(Self::zero(), |acc, (a, b)| {
            if a.is_zero() || b.is_zero() {
                acc
            } else {
                acc + a.clone() * b.clone()
            }
        })
    }

    /// `self / rhs` when the quotient exists in the same set, `None` otherwise
    /// (including `rhs == 0`).
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }

    fn is_nonneg(&self) -> bool {
        *self >= Self::zero()
    }

    fn abs(&self) -> Self {
        if self.is_nonneg() {
            self.clone()
        } else {
            -self.clone()
        }
    }
}

/// A [`Scalar`] in which every nonzero element is invertible.
pub trait Field: Scalar {
    fn inv(&self) -> Option<Self>;
}

/// A totally ordered GCD-domain embedded in ℝ.
pub trait GcdDomain: Scalar + FromStr<Err = Error> {
    const KIND: RingKind;

    fn from_i64(v: i64) -> Self;

    /// A positive greatest common divisor. At least one argument is nonzero.
    fn gcd_nonzero(&self, other: &Self) -> Self;

    /// The inverse of `self` in `R`, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    /// Whether `self` lies in `R⁺ ∩ R^×`.
    fn is_positive_unit(&self) -> bool {
        self.is_positive() && self.is_unit()
    }

    /// Brings `num / den` to lowest terms with a positive denominator.
    /// `den` is nonzero.
    fn reduce_fraction(num: Self, den: Self) -> (Self, Self) {
        if num.is_zero() {
            return (Self::zero(), Self::one());
        }
        let g = num.gcd_nonzero(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        if let Some(inv) = den.unit_inverse() {
            return (num * inv, Self::one());
        }
        if den.is_positive() {
            (num, den)
        } else {
            (-num, -den)
        }
    }
}

/// Greatest common divisor, normalized positive.
pub fn gcd<R: GcdDomain>(a: &R, b: &R) -> Result<R> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Domain("gcd(0, 0) is undefined"));
    }
    Ok(a.gcd_nonzero(b))
}

/// Least common multiple of two nonzero elements, normalized positive.
pub fn lcm<R: GcdDomain>(a: &R, b: &R) -> Result<R> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("lcm of zero is undefined"));
    }
    let g = a.gcd_nonzero(b);
    let l = a.exact_div(&g).expect("gcd divides") * b.clone();
    Ok(l.abs())
}

/// `a` and `b` agree up to multiplication by a positive unit.
pub fn associated_positive<R: GcdDomain>(a: &R, b: &R) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    match a.exact_div(b) {
        Some(u) => u.is_positive_unit(),
        None => false,
    }
}

/// Implements the owned binary operators of a type in terms of a
/// by-reference method.
macro_rules! forward_binops {
    ($ty:ty, $add:ident, $sub:ident, $mul:ident) => {
        impl core::ops::Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                <$ty>::$add(&self, &rhs)
            }
        }
        impl core::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                <$ty>::$sub(&self, &rhs)
            }
        }
        impl core::ops::Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                <$ty>::$mul(&self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binops;
