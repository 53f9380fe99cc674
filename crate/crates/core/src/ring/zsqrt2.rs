use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Neg;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{forward_binops, GcdDomain, RingKind, Scalar};
use crate::error::{Error, Result};

/// An element `a + b√2` of ℤ[√2].
///
/// ℤ[√2] is Euclidean for `|N(a + b√2)| = |a² − 2b²|`, so gcds are computed
/// with nearest-lattice-point division. Its positive units are the powers of
/// `1 + √2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZSqrt2 {
    a: BigInt,
    b: BigInt,
}

impl ZSqrt2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        ZSqrt2 { a: a.into(), b: b.into() }
    }

    /// The fundamental unit `1 + √2`.
    pub fn fundamental_unit() -> Self {
        ZSqrt2::new(1, 1)
    }

    /// `(1 + √2)^k`, for any integer `k`.
    pub fn unit_power(k: i32) -> Self {
        let base = if k >= 0 { ZSqrt2::new(1, 1) } else { ZSqrt2::new(-1, 1) };
        (0..k.unsigned_abs()).fold(Self::one(), |acc, _| acc * base.clone())
    }

    pub fn rational_part(&self) -> &BigInt {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigInt {
        &self.b
    }

    /// `a² − 2b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - ((&self.b * &self.b) << 1)
    }

    /// The Galois conjugate `a − b√2`.
    pub fn conj(&self) -> Self {
        ZSqrt2 { a: self.a.clone(), b: -&self.b }
    }

    fn signum(&self) -> Ordering {
        sign_of(&self.a, &self.b)
    }

    /// Multiplies by a positive unit so that `1 ≤ |x| / |x̄| < (1 + √2)²`.
    /// Returns the balanced value and the unit used.
    fn balance(&self) -> (Self, Self) {
        let eps = ZSqrt2::new(1, 1);
        let eps_inv = ZSqrt2::new(-1, 1);
        let eps_sq = ZSqrt2::new(3, 2);
        let mut u = ZSqrt2::unit_power(self.balance_estimate());
        let mut y = self.clone() * u.clone();
        loop {
            // |y|² − |ȳ|² = 4ab√2
            if (&y.a * &y.b).is_negative() {
                y = y * eps.clone();
                u = u * eps.clone();
            } else if y.abs() >= eps_sq.clone() * y.conj().abs() {
                y = y * eps_inv.clone();
                u = u * eps_inv.clone();
            } else {
                return (y, u);
            }
        }
    }

    /// Float guess of the power `k` with `ε^k · self` balanced; the exact
    /// loop in [`ZSqrt2::balance`] corrects any error.
    fn balance_estimate(&self) -> i32 {
        let (Some(a), Some(b), Some(n)) = (self.a.to_f64(), self.b.to_f64(), self.norm().to_f64()) else {
            return 0;
        };
        let big = a.abs() + b.abs() * core::f64::consts::SQRT_2;
        if !big.is_finite() || !n.is_finite() || n == 0.0 {
            return 0;
        }
        // ln|x| − ln|x̄|, using |x|·|x̄| = |N|
        let spread = 2.0 * libm::log(big) - libm::log(n.abs());
        let log_ratio = if (a >= 0.0) == (b >= 0.0) { spread } else { -spread };
        let k = -(log_ratio / (2.0 * libm::log(1.0 + core::f64::consts::SQRT_2))).floor();
        if k.is_finite() && k.abs() < 1e6 {
            k as i32
        } else {
            0
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        ZSqrt2 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        ZSqrt2 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        ZSqrt2 {
            a: &self.a * &rhs.a + ((&self.b * &rhs.b) << 1),
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }

    /// Nearest-lattice-point quotient of `self / rhs`; `rhs` nonzero.
    fn round_div(&self, rhs: &Self) -> Self {
        let n = rhs.norm();
        let t = self.mul_ref(&rhs.conj());
        ZSqrt2 { a: round_quot(&t.a, &n), b: round_quot(&t.b, &n) }
    }
}

/// Sign of `a + b√2` in ℝ.
fn sign_of(a: &BigInt, b: &BigInt) -> Ordering {
    let zero = BigInt::zero();
    match (a.cmp(&zero), b.cmp(&zero)) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        // a > 0 > b: positive iff a² > 2b²
        (Ordering::Greater, Ordering::Less) => (a * a).cmp(&((b * b) << 1)),
        // a < 0 < b: positive iff 2b² > a²
        (Ordering::Less, Ordering::Greater) => (a * a).cmp(&((b * b) << 1)).reverse(),
    }
}

/// `x / n` rounded to the nearest integer; `n` nonzero.
fn round_quot(x: &BigInt, n: &BigInt) -> BigInt {
    let (x, n) = if n.is_negative() { (-x, -n) } else { (x.clone(), n.clone()) };
    (BigInt::from(2) * x + &n).div_floor(&(BigInt::from(2) * n))
}

forward_binops!(ZSqrt2, add_ref, sub_ref, mul_ref);

impl Neg for ZSqrt2 {
    type Output = ZSqrt2;
    fn neg(self) -> ZSqrt2 {
        ZSqrt2 { a: -self.a, b: -self.b }
    }
}

impl PartialOrd for ZSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ZSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub_ref(other).signum()
    }
}

impl fmt::Display for ZSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*s2", self.a, self.b)
    }
}

impl FromStr for ZSqrt2 {
    type Err = Error;

    /// Accepts `a+b*s2`, `a-b*s2`, `b*s2`, `s2` and plain integers.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("`{s}` is not an element a+b*s2 of Z[sqrt2]"));
        let t: alloc::string::String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(&t);
        let int = |p: &str| -> Result<BigInt> {
            let p = p.strip_prefix('+').unwrap_or(p);
            BigInt::from_str(p).map_err(|_| bad())
        };
        let Some(head) = t.strip_suffix("s2") else {
            return Ok(ZSqrt2 { a: int(t)?, b: BigInt::zero() });
        };
        let head = head.strip_suffix('*').unwrap_or(head);
        let bytes = head.as_bytes();
        // split before the last sign that follows a digit: "1+-2" -> ("1", "+-2")
        let split = (1..bytes.len())
            .rev()
            .find(|&k| matches!(bytes[k], b'+' | b'-') && bytes[k - 1].is_ascii_digit());
        let (a_txt, b_txt) = match split {
            Some(k) => (&head[..k], &head[k..]),
            None => ("0", head),
        };
        let b = match b_txt {
            "" | "+" => BigInt::one(),
            "-" | "+-" => -BigInt::one(),
            other => int(other.strip_prefix('+').unwrap_or(other))?,
        };
        Ok(ZSqrt2 { a: int(a_txt)?, b })
    }
}

impl Scalar for ZSqrt2 {
    fn zero() -> Self {
        ZSqrt2 { a: BigInt::zero(), b: BigInt::zero() }
    }

    fn one() -> Self {
        ZSqrt2 { a: BigInt::one(), b: BigInt::zero() }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let n = rhs.norm();
        let t = self.mul_ref(&rhs.conj());
        let (qa, ra) = t.a.div_rem(&n);
        let (qb, rb) = t.b.div_rem(&n);
        (ra.is_zero() && rb.is_zero()).then_some(ZSqrt2 { a: qa, b: qb })
    }

    fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    fn is_nonneg(&self) -> bool {
        self.signum() != Ordering::Less
    }
}

impl GcdDomain for ZSqrt2 {
    const KIND: RingKind = RingKind::QuadraticSqrt2;

    fn from_i64(v: i64) -> Self {
        ZSqrt2 { a: BigInt::from(v), b: BigInt::zero() }
    }

    fn gcd_nonzero(&self, other: &Self) -> Self {
        let (mut x, mut y) = (self.clone(), other.clone());
        while !y.is_zero() {
            let r = x.sub_ref(&x.round_div(&y).mul_ref(&y));
            x = y;
            y = r;
        }
        x.abs()
    }

    fn unit_inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_one() {
            Some(self.conj())
        } else if (-&n).is_one() {
            Some(-self.conj())
        } else {
            None
        }
    }

    fn reduce_fraction(num: Self, den: Self) -> (Self, Self) {
        if num.is_zero() {
            return (Self::zero(), Self::one());
        }
        if let Some(inv) = den.unit_inverse() {
            return (num * inv, Self::one());
        }
        // a common divisor's norm divides both norms, so coprime norms
        // make the gcd a unit
        let (num, den) = if num.norm().gcd(&den.norm()).is_one() {
            (num, den)
        } else {
            let g = num.gcd_nonzero(&den);
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        if let Some(inv) = den.unit_inverse() {
            return (num * inv, Self::one());
        }
        // keep coefficient sizes bounded by fixing the unit factor of den
        let (den, u) = den.balance();
        let num = num * u;
        if den.is_positive() {
            (num, den)
        } else {
            (-num, -den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::ring::{associated_positive, gcd};

    fn z(a: i64, b: i64) -> ZSqrt2 {
        ZSqrt2::new(a, b)
    }

    #[test]
    fn positivity_follows_real_embedding() {
        assert!(z(1, 0).is_positive());
        assert!(z(0, 1).is_positive());
        assert!(z(-1, 1).is_positive()); // √2 − 1
        assert!(!z(1, -1).is_positive()); // 1 − √2
        assert!(z(3, -2).is_positive()); // 3 − 2√2 ≈ 0.17
        assert!(!z(-3, 2).is_positive());
        assert!(!z(0, 0).is_positive());
        assert!(z(0, 0).is_nonneg());
        assert!(z(2, -1) > z(0, 0));
        assert!(z(1, 1) > z(2, 0));
    }

    #[test]
    fn gcd_two_root_two() {
        let g = gcd(&z(2, 0), &z(0, 1)).unwrap();
        assert!(associated_positive(&g, &z(0, 1)));
        assert!(z(2, 0).exact_div(&g).is_some());
        assert!(z(0, 1).exact_div(&g).is_some());
        let c1 = z(2, 0).exact_div(&g).unwrap();
        let c2 = z(0, 1).exact_div(&g).unwrap();
        assert!(gcd(&c1, &c2).unwrap().is_unit());
    }

    #[test]
    fn unit_detection() {
        let u = z(1, 1);
        assert!(u.is_positive_unit());
        assert_eq!(u.clone() * u.unit_inverse().unwrap(), ZSqrt2::one());
        assert_eq!(u.unit_inverse().unwrap(), z(-1, 1));
        assert!(!z(2, 0).is_unit());
        assert!(!z(1, -1).is_positive_unit()); // unit, but negative
        assert_eq!(ZSqrt2::unit_power(2), z(3, 2));
        assert_eq!(ZSqrt2::unit_power(-1), z(-1, 1));
    }

    #[test]
    fn text_encoding() {
        assert_eq!("1+1*s2".parse::<ZSqrt2>().unwrap(), z(1, 1));
        assert_eq!("3-2*s2".parse::<ZSqrt2>().unwrap(), z(3, -2));
        assert_eq!("-3+-2*s2".parse::<ZSqrt2>().unwrap(), z(-3, -2));
        assert_eq!("s2".parse::<ZSqrt2>().unwrap(), z(0, 1));
        assert_eq!("-s2".parse::<ZSqrt2>().unwrap(), z(0, -1));
        assert_eq!("-4*s2".parse::<ZSqrt2>().unwrap(), z(0, -4));
        assert_eq!("7".parse::<ZSqrt2>().unwrap(), z(7, 0));
        assert_eq!(z(1, -2).to_string(), "1+-2*s2");
        assert!("1+x*s2".parse::<ZSqrt2>().is_err());
        assert!("".parse::<ZSqrt2>().is_err());
    }

    #[test]
    fn balance_maps_units_to_one() {
        for k in -6..=6 {
            let (y, u) = ZSqrt2::unit_power(k).balance();
            assert_eq!(y, ZSqrt2::one(), "k = {k}");
            assert!(u.is_positive_unit());
        }
    }
}
