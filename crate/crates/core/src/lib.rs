//! Exact lattice-ordered matrix algebras over real GCD-domains.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! - [`ring`]: ℤ, ℚ and ℤ[√2] with exact gcd, units and fraction fields;
//! - [`matrix`]: dense exact matrices, determinants, adjugates, solves;
//! - [`cone`]: lattice orders `P_A = A · M_n(R⁺)` and sampled axiom checks;
//! - [`structure`]: vl-basis structure data `(H, D, Q)` and its conditions;
//! - [`weinberg`]: the positive-unit solver and the isomorphism onto the
//!   usual order for l-algebras with `I ∈ P`;
//! - [`classify`]: the three 2 × 2 families and their target cones;
//! - [`oracle`]: independent checks and seeded input generators.

#![no_std]

extern crate alloc;

pub mod classify;
pub mod cone;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod ring;
pub mod sample;
pub mod structure;
pub mod weinberg;

pub use error::{Error, Result};
pub use matrix::Mat;
pub use ring::{Field, Frac, GcdDomain, Integer, Rational, RingKind, Scalar, ZSqrt2};
