//! Structure data `(H, D, Q)` describing a vl-basis
//! `B_ij = q_ij · H · D · E_ij · H⁻¹` of an l-algebra on `M_n(R)`, and the
//! checks that the data is consistent.

use alloc::string::ToString;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{rank, solve_columns, Mat};
use crate::ring::{Frac, GcdDomain, Scalar};

/// A field-valued matrix `M_n(K)`.
pub type FieldMat<R> = Mat<Frac<R>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureData<R: GcdDomain> {
    h: FieldMat<R>,
    d: FieldMat<R>,
    q: FieldMat<R>,
    h_inv: FieldMat<R>,
    // cached `D⁻¹H⁻¹` and `HD`
    dh_inv: FieldMat<R>,
    hd: FieldMat<R>,
}

/// The first index tuple `(i, j, r, s)` (0-based) at which
/// `d_jr q_ij q_rs q_is⁻¹ ∉ R⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionViolation<R: GcdDomain> {
    pub indices: [usize; 4],
    pub value: Frac<R>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport<R: GcdDomain> {
    pub tuples_checked: usize,
    pub condition2: Option<ConditionViolation<R>>,
    /// `(∏ q_ij) · det(D)ⁿ`
    pub condition4_value: Frac<R>,
    pub condition4_holds: bool,
}

impl<R: GcdDomain> ConditionReport<R> {
    pub fn passed(&self) -> bool {
        self.condition2.is_none() && self.condition4_holds
    }
}

/// `B_ij · B_rs` disagreeing with `d_jr q_ij q_rs q_is⁻¹ · B_is`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductMismatch<R: GcdDomain> {
    pub indices: [usize; 4],
    pub product: FieldMat<R>,
    pub expected: FieldMat<R>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductLawReport<R: GcdDomain> {
    pub pairs_checked: usize,
    pub mismatch: Option<ProductMismatch<R>>,
}

impl<R: GcdDomain> ProductLawReport<R> {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Coefficients `k_ij` with `I = Σ k_ij B_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityExpansion<R: GcdDomain> {
    pub k: FieldMat<R>,
    /// Every `k_ij ∈ R`.
    pub in_ring: bool,
    /// Every `k_ij ∈ R⁺`, i.e. `I ∈ P`.
    pub identity_positive: bool,
}

impl<R: GcdDomain> IdentityExpansion<R> {
    /// First coefficient outside `R⁺`, 0-based.
    pub fn first_non_positive(&self) -> Option<(usize, usize, &Frac<R>)> {
        self.k.entries().find(|(_, _, v)| !v.is_in_ring_nonneg())
    }
}

impl<R: GcdDomain> StructureData<R> {
    /// Validates shapes, nonsingularity of `H` and `D`, `D ≥ 0` and
    /// `q_ij > 0`.
    pub fn new(h: FieldMat<R>, d: FieldMat<R>, q: FieldMat<R>) -> Result<Self> {
        let n = h.n();
        for m in [&d, &q] {
            if m.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: m.n() });
            }
        }
        let h_inv = h.inverse().ok_or(Error::NotInvertible("H"))?;
        if let Some((row, col, v)) = d.first_negative() {
            return Err(Error::NegativeEntry { row: row + 1, col: col + 1, value: v.to_string() });
        }
        let d_inv = d.inverse().ok_or(Error::NotInvertible("D"))?;
        if let Some((i, j, v)) = q.entries().find(|(_, _, v)| !v.is_positive()) {
            return Err(Error::PreconditionFailed(format!(
                "q({}, {}) = {v} is not positive",
                i + 1,
                j + 1
            )));
        }
        let dh_inv = &d_inv * &h_inv;
        let hd = &h * &d;
        Ok(StructureData { h, d, q, h_inv, dh_inv, hd })
    }

    /// `H = D = I` and all `q_ij = 1`: the usual order.
    pub fn usual(n: usize) -> Self {
        let one = Mat::from_fn(n, |_, _| Frac::one());
        Self::new(Mat::identity(n), Mat::identity(n), one).expect("usual data is valid")
    }

    /// Same `H` and `D` with a different `Q`.
    pub fn with_q(&self, q: FieldMat<R>) -> Result<Self> {
        Self::new(self.h.clone(), self.d.clone(), q)
    }

    /// Same `D` and `Q` with a different `H`.
    pub fn with_h(&self, h: FieldMat<R>) -> Result<Self> {
        Self::new(h, self.d.clone(), self.q.clone())
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn h(&self) -> &FieldMat<R> {
        &self.h
    }

    pub fn d(&self) -> &FieldMat<R> {
        &self.d
    }

    pub fn q(&self) -> &FieldMat<R> {
        &self.q
    }

    pub fn q_at(&self, i: usize, j: usize) -> &Frac<R> {
        self.q.get(i, j)
    }

    /// The structure constant `d_jr q_ij q_rs q_is⁻¹`.
    pub fn constant(&self, i: usize, j: usize, r: usize, s: usize) -> Frac<R> {
        let d = self.d.get(j, r);
        if d.is_zero() {
            return Frac::zero();
        }
        d.clone() * self.q_at(i, j).clone() * self.q_at(r, s).clone() / self.q_at(i, s).clone()
    }

    /// `B_ij = q_ij · H · D · E_ij · H⁻¹`.
    pub fn basis_element(&self, i: usize, j: usize) -> FieldMat<R> {
        let n = self.n();
        // D · E_ij keeps column i of D in column j
        let de = Mat::from_fn(n, |r, c| if c == j { self.d.get(r, i).clone() } else { Frac::zero() });
        (&(&self.h * &de) * &self.h_inv).scale(self.q_at(i, j))
    }

    /// All `B_ij` in row-major order of `(i, j)`.
    pub fn basis(&self) -> Vec<FieldMat<R>> {
        let n = self.n();
        (0..n * n).map(|k| self.basis_element(k / n, k % n)).collect()
    }

    /// Checks `d_jr q_ij q_rs q_is⁻¹ ∈ R⁺` for all `n⁴` tuples and
    /// `(∏ q_ij) · det(D)ⁿ ∈ R^×`.
    pub fn verify_conditions(&self) -> ConditionReport<R> {
        let n = self.n();
        let mut condition2 = None;
        let mut tuples_checked = 0;
        'outer: for i in 0..n {
            for j in 0..n {
                for r in 0..n {
                    for s in 0..n {
                        tuples_checked += 1;
                        let c = self.constant(i, j, r, s);
                        if !c.is_in_ring_nonneg() {
                            condition2 = Some(ConditionViolation { indices: [i, j, r, s], value: c });
                            break 'outer;
                        }
                    }
                }
            }
        }
        let prod = self.q.entries().fold(Frac::one(), |acc, (_, _, q)| acc * q.clone());
        let condition4_value = prod * self.d.det().pow(n as u32);
        let condition4_holds = condition4_value.is_ring_unit();
        ConditionReport { tuples_checked, condition2, condition4_value, condition4_holds }
    }

    /// Checks `B_ij B_rs = d_jr q_ij q_rs q_is⁻¹ B_is` on the basis built
    /// from this data.
    pub fn verify_product_law(&self) -> ProductLawReport<R> {
        self.check_product_law(&self.basis())
    }

    /// Checks the product law of this data's structure constants against an
    /// arbitrary list of `n²` matrices (row-major in `(i, j)`).
    pub fn check_product_law(&self, basis: &[FieldMat<R>]) -> ProductLawReport<R> {
        let n = self.n();
        assert_eq!(basis.len(), n * n, "basis must have n² elements");
        let b = |i: usize, j: usize| &basis[i * n + j];
        let mut pairs_checked = 0;
        for i in 0..n {
            for j in 0..n {
                for r in 0..n {
                    for s in 0..n {
                        pairs_checked += 1;
                        let product = b(i, j) * b(r, s);
                        let expected = b(i, s).scale(&self.constant(i, j, r, s));
                        if product != expected {
                            return ProductLawReport {
                                pairs_checked,
                                mismatch: Some(ProductMismatch { indices: [i, j, r, s], product, expected }),
                            };
                        }
                    }
                }
            }
        }
        ProductLawReport { pairs_checked, mismatch: None }
    }

    /// Whether the `B_ij` are linearly independent over `K`.
    pub fn basis_is_independent(&self) -> bool {
        let vectors = self.basis().iter().map(|b| b.entries().map(|(_, _, v)| v.clone()).collect()).collect();
        rank(vectors) == self.n() * self.n()
    }

    /// Solves `I = Σ k_ij B_ij` by exact elimination over `K`.
    pub fn expand_identity(&self) -> Result<IdentityExpansion<R>> {
        let n = self.n();
        let basis = self.basis();
        let m = n * n;
        // row (r, c) of the system, column (i, j): entry (r, c) of B_ij
        let a: Vec<Vec<Frac<R>>> = (0..m)
            .map(|row| basis.iter().map(|b| b.get(row / n, row % n).clone()).collect())
            .collect();
        let rhs: Vec<Vec<Frac<R>>> = (0..m)
            .map(|row| alloc::vec![if row / n == row % n { Frac::one() } else { Frac::zero() }])
            .collect();
        let sol = solve_columns(a, rhs).ok_or(Error::NotABasis)?;
        let k = Mat::from_fn(n, |i, j| sol[i * n + j][0].clone());
        let in_ring = k.entries().all(|(_, _, v)| v.is_in_ring());
        let identity_positive = k.entries().all(|(_, _, v)| v.is_in_ring_nonneg());
        Ok(IdentityExpansion { k, in_ring, identity_positive })
    }

    /// Coordinates `c_ij` of `X = Σ c_ij B_ij`, from
    /// `H⁻¹ X H = D · (c_ij q_ij)`.
    pub fn coordinates(&self, x: &FieldMat<R>) -> FieldMat<R> {
        let scaled = &self.dh_inv * &(x * &self.h);
        Mat::from_fn(self.n(), |i, j| scaled.get(i, j).clone() / self.q_at(i, j).clone())
    }

    /// `Σ c_ij B_ij`.
    pub fn compose(&self, c: &FieldMat<R>) -> FieldMat<R> {
        let weighted = c.hadamard(&self.q);
        &(&self.hd * &weighted) * &self.h_inv
    }

    /// Membership in the cone `P = {Σ c_ij B_ij : c_ij ∈ R⁺}`.
    pub fn contains(&self, x: &FieldMat<R>) -> bool {
        self.coordinates(x).entries().all(|(_, _, v)| v.is_in_ring_nonneg())
    }

    /// Join in the vl-basis order: coordinatewise maximum.
    pub fn join(&self, x: &FieldMat<R>, y: &FieldMat<R>) -> FieldMat<R> {
        self.compose(&self.coordinates(x).max_entrywise(&self.coordinates(y)))
    }

    pub fn meet(&self, x: &FieldMat<R>, y: &FieldMat<R>) -> FieldMat<R> {
        self.compose(&self.coordinates(x).min_entrywise(&self.coordinates(y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integer, Rational};
    use alloc::vec;

    type K = Frac<Integer>;

    fn fm(rows: &[&[i64]]) -> FieldMat<Integer> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| K::from_i64(v)).collect()).collect())
            .unwrap()
    }

    fn ones(n: usize) -> FieldMat<Integer> {
        Mat::from_fn(n, |_, _| K::one())
    }

    #[test]
    fn usual_basis_is_matrix_units() {
        let s = StructureData::<Integer>::usual(2);
        for (k, b) in s.basis().iter().enumerate() {
            assert_eq!(b, &Mat::unit(2, k / 2, k % 2).unwrap());
        }
    }

    #[test]
    fn corner_basis() {
        let s = StructureData::new(Mat::identity(2), fm(&[&[1, 1], &[1, 0]]), ones(2)).unwrap();
        let b = s.basis();
        assert_eq!(b[0], fm(&[&[1, 0], &[1, 0]]));
        assert_eq!(b[1], fm(&[&[0, 1], &[0, 1]]));
        assert_eq!(b[2], fm(&[&[1, 0], &[0, 0]]));
        assert_eq!(b[3], fm(&[&[0, 1], &[0, 0]]));
        assert_eq!(&b[0] * &b[0], b[0]);
        assert!(s.verify_product_law().passed());
    }

    #[test]
    fn conjugated_basis() {
        let s = StructureData::new(fm(&[&[1, 1], &[0, 1]]), Mat::identity(2), ones(2)).unwrap();
        assert_eq!(s.basis_element(0, 0), fm(&[&[1, -1], &[0, 0]]));
        assert!(s.basis_is_independent());
    }

    #[test]
    fn constructor_rejects_bad_data() {
        let singular = fm(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            StructureData::new(singular.clone(), Mat::identity(2), ones(2)),
            Err(Error::NotInvertible("H"))
        );
        assert_eq!(
            StructureData::new(Mat::identity(2), singular, ones(2)),
            Err(Error::NotInvertible("D"))
        );
        assert!(matches!(
            StructureData::new(Mat::identity(2), fm(&[&[1, -1], &[0, 1]]), ones(2)),
            Err(Error::NegativeEntry { .. })
        ));
        assert!(matches!(
            StructureData::new(Mat::identity(2), Mat::identity(2), fm(&[&[1, 0], &[1, 1]])),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn conditions_usual_and_integer_failure() {
        let s = StructureData::<Integer>::usual(2);
        let rep = s.verify_conditions();
        assert!(rep.passed());
        assert_eq!(rep.tuples_checked, 16);

        let q = fm(&[&[1, 2], &[1, 1]]);
        let s = StructureData::new(Mat::identity(2), Mat::identity(2), q).unwrap();
        assert_eq!(s.constant(0, 1, 1, 0), K::from_i64(2));
        let rep = s.verify_conditions();
        assert!(rep.condition2.is_none());
        assert!(!rep.condition4_holds);
        assert_eq!(rep.condition4_value, K::from_i64(2));
        assert!(!rep.passed());
    }

    #[test]
    fn conditions_pass_over_rationals() {
        let q: FieldMat<Rational> = Mat::from_rows(vec![
            vec![Frac::from_i64(1), Frac::from_i64(2)],
            vec![Frac::from_i64(1), Frac::from_i64(1)],
        ])
        .unwrap();
        let s = StructureData::new(Mat::identity(2), Mat::identity(2), q).unwrap();
        assert!(s.verify_conditions().passed());
    }

    #[test]
    fn perturbed_q_reports_first_affected_pair() {
        let s = StructureData::<Integer>::usual(2);
        let mut q = ones(2).to_rows();
        q[0][0] = K::from_i64(3);
        let perturbed = s.with_q(Mat::from_rows(q).unwrap()).unwrap();
        let rep = perturbed.check_product_law(&s.basis());
        let mismatch = rep.mismatch.expect("perturbation must be detected");
        assert_eq!(mismatch.indices, [0, 0, 0, 0]);
        assert_eq!(rep.pairs_checked, 1);
    }

    #[test]
    fn identity_expansions() {
        let s = StructureData::<Integer>::usual(2);
        let e = s.expand_identity().unwrap();
        assert_eq!(e.k, Mat::identity(2));
        assert!(e.identity_positive);

        let s = StructureData::new(Mat::identity(2), fm(&[&[1, 1], &[2, 1]]), ones(2)).unwrap();
        let e = s.expand_identity().unwrap();
        assert_eq!(e.k, fm(&[&[-1, 1], &[2, -1]]));
        assert!(e.in_ring && !e.identity_positive);

        let s = StructureData::new(Mat::identity(2), fm(&[&[1, 1], &[1, 0]]), ones(2)).unwrap();
        let e = s.expand_identity().unwrap();
        assert!(!e.identity_positive);
        let (i, j, v) = e.first_non_positive().unwrap();
        assert_eq!((i, j), (1, 1));
        assert_eq!(v, &K::from_i64(-1));
    }

    #[test]
    fn coordinates_invert_compose() {
        let s = StructureData::new(
            fm(&[&[2, 1], &[1, 1]]),
            fm(&[&[1, 1], &[2, 1]]),
            fm(&[&[1, 3], &[2, 5]]),
        )
        .unwrap();
        let c = fm(&[&[4, -1], &[0, 7]]);
        let x = s.compose(&c);
        assert_eq!(s.coordinates(&x), c);
        let sum = s.basis().iter().zip(c.entries()).fold(Mat::zero(2), |acc, (b, (_, _, ci))| {
            &acc + &b.scale(ci)
        });
        assert_eq!(sum, x);
    }
}
