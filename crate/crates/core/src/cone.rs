//! Lattice orders on `M_n(R)` given by positive cones `P_A = A · M_n(R⁺)`.
//!
//! `X ∈ P_A` iff `A⁻¹X ≥ 0` entrywise, so the order is the usual order
//! pulled back through left multiplication by `A⁻¹`, and lattice operations
//! are entrywise in the coordinates `A⁻¹X`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::ring::GcdDomain;
use crate::sample::{self, stream_rng, Sample};

/// The cone `P_A` together with the cached inverse `A⁻¹ ∈ M_n(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone<R> {
    a: Mat<R>,
    a_inv: Mat<R>,
}

impl<R: GcdDomain> Cone<R> {
    /// Accepts `A` iff `A ∈ M_n(R⁺)` and `det(A) ∈ R^×`.
    pub fn validate(a: Mat<R>) -> Result<Self> {
        if let Some((row, col, v)) = a.first_negative() {
            return Err(Error::NegativeEntry { row: row + 1, col: col + 1, value: v.to_string() });
        }
        Self::new_unchecked(a)
    }

    /// Builds `P_A` requiring only an invertible `A`. Entry signs are not
    /// checked; [`Cone::check_axioms`] is what catches a bad `A`.
    pub fn new_unchecked(a: Mat<R>) -> Result<Self> {
        let a_inv = a.inverse_unit()?;
        Ok(Cone { a, a_inv })
    }

    /// The usual cone `M_n(R⁺)`.
    pub fn usual(n: usize) -> Self {
        Cone { a: Mat::identity(n), a_inv: Mat::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn matrix(&self) -> &Mat<R> {
        &self.a
    }

    pub fn inverse(&self) -> &Mat<R> {
        &self.a_inv
    }

    pub fn is_usual(&self) -> bool {
        self.a == Mat::identity(self.n())
    }

    /// `A · E_ij`, the `(i, j)` element of the vl-basis of `P_A`.
    pub fn basis_element(&self, i: usize, j: usize) -> Mat<R> {
        let n = self.n();
        Mat::from_fn(n, |r, c| if c == j { self.a.get(r, i).clone() } else { R::zero() })
    }

    /// Coordinates `A⁻¹X` of `X` in the vl-basis.
    pub fn coordinates(&self, x: &Mat<R>) -> Mat<R> {
        &self.a_inv * x
    }

    /// Whether `X ∈ P_A`. Panics if the dimensions differ.
    pub fn contains(&self, x: &Mat<R>) -> bool {
        self.coordinates(x).is_nonneg()
    }

    /// `X ≤ Y` in the cone order.
    pub fn le(&self, x: &Mat<R>, y: &Mat<R>) -> bool {
        self.contains(&(y - x))
    }

    /// Least upper bound `A · max(A⁻¹X, A⁻¹Y)`.
    pub fn join(&self, x: &Mat<R>, y: &Mat<R>) -> Mat<R> {
        &self.a * &self.coordinates(x).max_entrywise(&self.coordinates(y))
    }

    /// Greatest lower bound `A · min(A⁻¹X, A⁻¹Y)`.
    pub fn meet(&self, x: &Mat<R>, y: &Mat<R>) -> Mat<R> {
        &self.a * &self.coordinates(x).min_entrywise(&self.coordinates(y))
    }
}

/// The l-algebra axioms checked by [`Cone::check_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `P + P ⊆ P`
    AdditiveClosure,
    /// `P · P ⊆ P`
    MultiplicativeClosure,
    /// `R⁺ · P ⊆ P`
    ScalarClosure,
    /// `P ∩ (−P) = {0}`
    Antisymmetry,
    /// `X ∨ (X ∧ Y) = X`
    JoinAbsorption,
    /// `X ∧ (X ∨ Y) = X`
    MeetAbsorption,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::AdditiveClosure => "P+P in P",
            Axiom::MultiplicativeClosure => "P*P in P",
            Axiom::ScalarClosure => "R+ * P in P",
            Axiom::Antisymmetry => "P meet -P = 0",
            Axiom::JoinAbsorption => "x join (x meet y) = x",
            Axiom::MeetAbsorption => "x meet (x join y) = x",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure<R> {
    pub axiom: Axiom,
    pub sample: usize,
    /// The matrices involved, e.g. `[X, Y, X·Y]` for multiplicative closure.
    pub witness: Vec<Mat<R>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport<R> {
    pub samples: usize,
    pub checks: usize,
    pub failure: Option<AxiomFailure<R>>,
}

impl<R> AxiomReport<R> {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

const SAMPLE_BOUND: u32 = 5;

impl<R: Sample> Cone<R> {
    /// Checks the l-algebra axioms on `samples` seeded random elements.
    /// Sample `k` draws from stream `(seed, k)`. Stops at the first failure.
    pub fn check_axioms(&self, seed: u64, samples: usize) -> AxiomReport<R> {
        let n = self.n();
        let mut checks = 0;
        for k in 0..samples {
            let rng = &mut stream_rng(seed, k as u64);
            let x = &self.a * &sample::nonneg_matrix(rng, n, SAMPLE_BOUND);
            let y = &self.a * &sample::nonneg_matrix(rng, n, SAMPLE_BOUND);
            let r = R::sample_nonneg(rng, SAMPLE_BOUND);
            let s: Mat<R> = sample::matrix(rng, n, SAMPLE_BOUND);
            let t: Mat<R> = sample::matrix(rng, n, SAMPLE_BOUND);
            let z = &(&self.a * &s) - &(&self.a * &t);

            let fail = |axiom, witness| {
                Some(AxiomFailure { axiom, sample: k, witness })
            };
            let sum = &x + &y;
            let prod = &x * &y;
            let scaled = x.scale(&r);
            let neg_z = -&z;
            let meet = self.meet(&s, &t);
            let join = self.join(&s, &t);
            let absorbed_join = self.join(&s, &meet);
            let absorbed_meet = self.meet(&s, &join);

            let failure = if !self.contains(&sum) {
                fail(Axiom::AdditiveClosure, vec![x, y, sum])
            } else if !self.contains(&prod) {
                fail(Axiom::MultiplicativeClosure, vec![x, y, prod])
            } else if !self.contains(&scaled) {
                fail(Axiom::ScalarClosure, vec![x, Mat::identity(n).scale(&r), scaled])
            } else if self.contains(&z) && self.contains(&neg_z) && !z.is_zero() {
                fail(Axiom::Antisymmetry, vec![z])
            } else if absorbed_join != s {
                fail(Axiom::JoinAbsorption, vec![s, t, absorbed_join])
            } else if absorbed_meet != s {
                fail(Axiom::MeetAbsorption, vec![s, t, absorbed_meet])
            } else {
                None
            };
            checks += 6;
            if failure.is_some() {
                return AxiomReport { samples, checks, failure };
            }
        }
        AxiomReport { samples, checks, failure: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integer, Rational, ZSqrt2};

    fn zm(rows: &[&[i64]]) -> Mat<Integer> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| Integer::from(v)).collect()).collect())
            .unwrap()
    }

    fn corner() -> Cone<Integer> {
        Cone::validate(zm(&[&[1, 1], &[1, 0]])).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Cone::validate(Mat::<Integer>::identity(3)).unwrap().is_usual());
        assert_eq!(corner().inverse(), &zm(&[&[0, 1], &[1, -1]]));
        assert!(matches!(Cone::validate(zm(&[&[1, 0], &[0, 2]])), Err(Error::NotAUnit { .. })));
        assert!(matches!(
            Cone::validate(zm(&[&[1, -1], &[0, 1]])),
            Err(Error::NegativeEntry { row: 1, col: 2, .. })
        ));
    }

    #[test]
    fn membership_examples() {
        let usual = Cone::<Integer>::usual(2);
        assert!(usual.contains(&zm(&[&[0, 3], &[1, 0]])));
        assert!(!usual.contains(&zm(&[&[0, 3], &[-1, 0]])));
        let e11 = zm(&[&[1, 0], &[0, 0]]);
        let e22 = zm(&[&[0, 0], &[0, 1]]);
        assert_eq!(corner().coordinates(&e11), zm(&[&[0, 0], &[1, 0]]));
        assert!(corner().contains(&e11));
        assert_eq!(corner().coordinates(&e22), zm(&[&[0, 1], &[0, -1]]));
        assert!(!corner().contains(&e22));
    }

    #[test]
    fn join_examples() {
        let usual = Cone::<Integer>::usual(2);
        let x = zm(&[&[1, -2], &[3, 0]]);
        let y = zm(&[&[0, 5], &[-1, 0]]);
        assert_eq!(usual.join(&x, &y), zm(&[&[1, 5], &[3, 0]]));
        assert_eq!(usual.meet(&x, &y), zm(&[&[0, -2], &[-1, 0]]));
        assert_eq!(corner().join(&x, &x), x);
        let e11 = zm(&[&[1, 0], &[0, 0]]);
        assert_eq!(corner().join(&e11, &(-&e11)), e11);
    }

    #[test]
    fn axioms_hold_for_valid_cones() {
        assert!(Cone::<Integer>::usual(2).check_axioms(1, 200).passed());
        assert!(corner().check_axioms(2, 200).passed());
        let q = Cone::<Rational>::usual(3);
        assert!(q.check_axioms(3, 50).passed());
        let s = Cone::validate(Mat::from_rows(alloc::vec![
            alloc::vec![ZSqrt2::new(1, 1), ZSqrt2::new(0, 0)],
            alloc::vec![ZSqrt2::new(0, 1), ZSqrt2::new(1, 0)],
        ]).unwrap())
        .unwrap();
        assert!(s.check_axioms(4, 50).passed());
    }

    #[test]
    fn smuggled_negative_entry_fails_with_witness() {
        let bad = Cone::new_unchecked(zm(&[&[1, -1], &[0, 1]])).unwrap();
        let report = bad.check_axioms(9, 200);
        let failure = report.failure.expect("negative entry must break an axiom");
        assert_eq!(failure.axiom, Axiom::MultiplicativeClosure);
        let (x, y, p) = (&failure.witness[0], &failure.witness[1], &failure.witness[2]);
        assert!(bad.contains(x) && bad.contains(y) && !bad.contains(p));
    }
}
