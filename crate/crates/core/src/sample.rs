//! Seeded random elements for generators and sampled axiom checks.
//!
//! All randomness flows from a ChaCha8 stream keyed by `(seed, index)`, so
//! any item can be regenerated on its own and batch work can be split
//! across workers without changing results.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::Mat;
use crate::ring::{Frac, GcdDomain, Integer, Rational, Scalar, ZSqrt2};

pub type StreamRng = ChaCha8Rng;

/// The RNG for item `index` of a run seeded with `seed`.
pub fn stream_rng(seed: u64, index: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn range(rng: &mut impl Rng, lo: i64, hi: i64) -> i64 {
    rng.gen_range(lo..=hi)
}

/// Random ring elements of bounded size.
pub trait Sample: GcdDomain {
    /// An element with components in `[-bound, bound]`.
    fn sample(rng: &mut StreamRng, bound: u32) -> Self;

    /// An element `≥ 0` with components in `[0, bound]`.
    fn sample_nonneg(rng: &mut StreamRng, bound: u32) -> Self;

    /// A positive unit of the ring.
    fn sample_positive_unit(rng: &mut StreamRng, bound: u32) -> Self;

    fn sample_positive(rng: &mut StreamRng, bound: u32) -> Self {
        loop {
            let x = Self::sample_nonneg(rng, bound.max(1));
            if !x.is_zero() {
                return x;
            }
        }
    }
}

impl Sample for Integer {
    fn sample(rng: &mut StreamRng, bound: u32) -> Self {
        let b = i64::from(bound);
        Integer::from(range(rng, -b, b))
    }

    fn sample_nonneg(rng: &mut StreamRng, bound: u32) -> Self {
        Integer::from(range(rng, 0, i64::from(bound)))
    }

    fn sample_positive_unit(_rng: &mut StreamRng, _bound: u32) -> Self {
        Integer::one()
    }
}

impl Sample for Rational {
    fn sample(rng: &mut StreamRng, bound: u32) -> Self {
        let b = i64::from(bound);
        let p = range(rng, -b, b);
        let q = range(rng, 1, b.max(1));
        Rational::new(p, q).expect("nonzero denominator")
    }

    fn sample_nonneg(rng: &mut StreamRng, bound: u32) -> Self {
        let b = i64::from(bound);
        let p = range(rng, 0, b);
        let q = range(rng, 1, b.max(1));
        Rational::new(p, q).expect("nonzero denominator")
    }

    fn sample_positive_unit(rng: &mut StreamRng, bound: u32) -> Self {
        let b = i64::from(bound.max(1));
        Rational::new(range(rng, 1, b), range(rng, 1, b)).expect("nonzero denominator")
    }
}

impl Sample for ZSqrt2 {
    fn sample(rng: &mut StreamRng, bound: u32) -> Self {
        let b = i64::from(bound);
        ZSqrt2::new(range(rng, -b, b), range(rng, -b, b))
    }

    fn sample_nonneg(rng: &mut StreamRng, bound: u32) -> Self {
        let b = i64::from(bound);
        ZSqrt2::new(range(rng, 0, b), range(rng, 0, b))
    }

    /// One of `1`, `1 + √2`, `3 + 2√2`.
    fn sample_positive_unit(rng: &mut StreamRng, _bound: u32) -> Self {
        ZSqrt2::unit_power(rng.gen_range(0..=2))
    }
}

/// A positive element of `K`: a ratio of two positive ring elements.
pub fn positive_field_elem<R: Sample>(rng: &mut StreamRng, bound: u32) -> Frac<R> {
    let num = R::sample_positive(rng, bound);
    let den = R::sample_positive(rng, bound);
    Frac::new(num, den).expect("positive denominator")
}

pub fn matrix<R: Sample>(rng: &mut StreamRng, n: usize, bound: u32) -> Mat<R> {
    Mat::from_fn(n, |_, _| R::sample(rng, bound))
}

pub fn nonneg_matrix<R: Sample>(rng: &mut StreamRng, n: usize, bound: u32) -> Mat<R> {
    Mat::from_fn(n, |_, _| R::sample_nonneg(rng, bound))
}
