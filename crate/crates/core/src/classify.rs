//! Lattice orders on `M_2(R)`: every one is isomorphic to some `P_A` with
//! `det(A) ∈ R^×`.
//!
//! Over the fraction field the order reduces to `P_D` with `D` one of
//! `I`, `[[1, 1], [1, 0]]` or `[[1, 1], [a, b]]` (`a > b > 0`). The first
//! goes through the Weinberg pipeline; the other two get explicit target
//! cones `A` and `C` with maps `B_ij ↦ x_ij A E_ij` and `B_ij ↦ p_ij C E_ij`.

use alloc::format;
use alloc::string::String;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::ring::{gcd, Frac, GcdDomain, Scalar};
use crate::structure::{FieldMat, StructureData};
use crate::weinberg::{weinberg_pipeline, IsoMap};

/// Which normal form `D` takes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseTag<R: GcdDomain> {
    /// `D = I`
    Usual,
    /// `D = [[1, 1], [1, 0]]`
    NilpotentCorner,
    /// `D = [[1, 1], [a, b]]` with `a > b > 0`
    Parametric { a: Frac<R>, b: Frac<R> },
}

impl<R: GcdDomain> CaseTag<R> {
    /// `usual`, `corner` or `parametric`.
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::Usual => "usual",
            CaseTag::NilpotentCorner => "corner",
            CaseTag::Parametric { .. } => "parametric",
        }
    }

    /// The normal-form matrix `D` of this case.
    pub fn d_matrix(&self) -> FieldMat<R> {
        match self {
            CaseTag::Usual => Mat::identity(2),
            CaseTag::NilpotentCorner => corner_matrix(),
            CaseTag::Parametric { a, b } => parametric_matrix(a, b),
        }
    }
}

pub fn corner_matrix<R: GcdDomain>() -> FieldMat<R> {
    Mat::from_fn(2, |i, j| if i == 1 && j == 1 { Frac::zero() } else { Frac::one() })
}

pub fn parametric_matrix<R: GcdDomain>(a: &Frac<R>, b: &Frac<R>) -> FieldMat<R> {
    Mat::from_fn(2, |i, j| match (i, j) {
        (0, _) => Frac::one(),
        (_, 0) => a.clone(),
        _ => b.clone(),
    })
}

/// Matches `D` against the three normal forms exactly.
pub fn detect_case<R: GcdDomain>(d: &FieldMat<R>) -> Result<CaseTag<R>> {
    if d.n() != 2 {
        return Err(Error::UnrecognizedD);
    }
    if d == &Mat::identity(2) {
        return Ok(CaseTag::Usual);
    }
    if d == &corner_matrix() {
        return Ok(CaseTag::NilpotentCorner);
    }
    let one = Frac::one();
    let (a, b) = (d.get(1, 0), d.get(1, 1));
    if d.get(0, 0) == &one && d.get(0, 1) == &one && a > b && b.is_positive() {
        return Ok(CaseTag::Parametric { a: a.clone(), b: b.clone() });
    }
    Err(Error::UnrecognizedD)
}

fn require_2x2<R: GcdDomain>(q: &FieldMat<R>) -> Result<()> {
    if q.n() != 2 {
        return Err(Error::PreconditionFailed(format!("expected a 2 x 2 matrix, got n = {}", q.n())));
    }
    Ok(())
}

fn in_ring_nonneg<R: GcdDomain>(name: &str, v: &Frac<R>) -> Result<R> {
    match v.to_ring() {
        Some(r) if r.is_nonneg() => Ok(r),
        _ => Err(Error::PreconditionFailed(format!("{name} = {v} is not in R+"))),
    }
}

fn positive_unit<R: GcdDomain>(name: &str, v: &Frac<R>) -> Result<R> {
    match v.to_ring() {
        Some(r) if r.is_positive_unit() => Ok(r),
        _ => Err(Error::PreconditionFailed(format!("{name} = {v} is not a positive unit"))),
    }
}

/// The case `D = [[1, 1], [1, 0]]` result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case2<R: GcdDomain> {
    /// `P_A` with `A = [[q_11, q_21], [q_12, 0]]`.
    pub cone: Cone<R>,
    /// `x_11 = x_12 = x_21 = 1`, `x_22 = q_11 q_22 q_12⁻¹ q_21⁻¹`.
    pub scalars: Mat<R>,
    pub iso: IsoMap<R>,
}

/// Builds the target cone and isomorphism for `D = [[1, 1], [1, 0]]`,
/// taking `H = I`.
pub fn build_case2<R: GcdDomain>(q: &FieldMat<R>) -> Result<Case2<R>> {
    require_2x2(q)?;
    let s = StructureData::new(Mat::identity(2), corner_matrix(), q.clone())?;
    build_case2_for(&s)
}

fn build_case2_for<R: GcdDomain>(s: &StructureData<R>) -> Result<Case2<R>> {
    let q = s.q();
    require_2x2(q)?;
    let qv = |i, j| q.get(i, j).clone();
    let q11 = in_ring_nonneg("q11", &qv(0, 0))?;
    let q12 = positive_unit("q12", &qv(0, 1))?;
    let q21 = positive_unit("q21", &qv(1, 0))?;
    positive_unit("q11 q22", &(qv(0, 0) * qv(1, 1)))?;

    let a = Mat::from_rows(alloc::vec![
        alloc::vec![q11, q21.clone()],
        alloc::vec![q12.clone(), R::zero()],
    ])?;
    let expected_det = -(q12 * q21);
    if a.det() != expected_det {
        return Err(Error::VerificationFailed(format!("det(A) = {} != -q12 q21", a.det())));
    }
    let cone = Cone::validate(a)?;
    let x22 = positive_unit("x22", &(qv(0, 0) * qv(1, 1) / qv(0, 1) / qv(1, 0)))?;
    let scalars = Mat::from_fn(2, |i, j| if i == 1 && j == 1 { x22.clone() } else { R::one() });
    let iso = IsoMap::new(s.clone(), cone.clone(), scalars.clone())?;
    Ok(Case2 { cone, scalars, iso })
}

/// `μ = (q_11 q_22) / (q_12 q_21)`, asserted to be a positive unit.
pub fn mu_assertion<R: GcdDomain>(q: &FieldMat<R>) -> Result<R> {
    require_2x2(q)?;
    let qv = |i, j| q.get(i, j).clone();
    let mu = qv(0, 0) * qv(1, 1) / (qv(0, 1) * qv(1, 0));
    match mu.to_ring() {
        Some(r) if r.is_positive_unit() => Ok(r),
        _ => Err(Error::AssertionFailed(format!(
            "q11 q22 = mu q12 q21 requires mu in R+ and R^x, but mu = {mu}"
        ))),
    }
}

/// The four coprimality conditions `gcd(m, q_11)`, `gcd(m, b q_22)`,
/// `gcd(m − 1, q_21)`, `gcd(m − 1, a q_12)` all units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GcdChecks {
    /// `m` or `m − 1` is outside `R`, or `R` is a field.
    Vacuous,
    Checked([bool; 4]),
}

impl GcdChecks {
    pub fn all_hold(&self) -> bool {
        match self {
            GcdChecks::Vacuous => true,
            GcdChecks::Checked(c) => c.iter().all(|&b| b),
        }
    }
}

/// Arithmetic facts of the parametric case, all checked exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case3Report<R: GcdDomain> {
    /// `m = a / (a − b)`
    pub m: Frac<R>,
    /// `ε = (q_11 q_12 q_21 q_22) det(D)²`
    pub epsilon: R,
    pub mu: R,
    /// `μ_1 = b q_11 q_22 / (m − 1)`
    pub mu1: Frac<R>,
    /// `μ_2 = a q_12 q_21 / m`
    pub mu2: Frac<R>,
    /// `t = q_12 q_21 / (p_12 p_21)`
    pub t: Frac<R>,
    /// Coefficients of `I = Σ k_ij B_ij`.
    pub k: FieldMat<R>,
    pub gcd_checks: GcdChecks,
}

/// The case `D = [[1, 1], [a, b]]` result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case3<R: GcdDomain> {
    /// `P_C` with `C = [[q_11/p_11, q_21/p_21], [a q_12/p_12, b q_22/p_22]]`.
    pub cone: Cone<R>,
    /// `p_11 = p_12 = p_21 = 1`, `p_22 = μ`.
    pub p: Mat<R>,
    pub iso: IsoMap<R>,
    pub report: Case3Report<R>,
}

/// Builds the target cone, isomorphism and report for
/// `D = [[1, 1], [a, b]]`, taking `H = I`.
pub fn build_case3<R: GcdDomain>(q: &FieldMat<R>, a: &Frac<R>, b: &Frac<R>) -> Result<Case3<R>> {
    require_2x2(q)?;
    check_parameters(a, b)?;
    let s = StructureData::new(Mat::identity(2), parametric_matrix(a, b), q.clone())?;
    build_case3_for(&s, a, b)
}

fn check_parameters<R: GcdDomain>(a: &Frac<R>, b: &Frac<R>) -> Result<()> {
    if !(a > b && b.is_positive()) {
        return Err(Error::PreconditionFailed(format!("need a > b > 0, got a = {a}, b = {b}")));
    }
    Ok(())
}

fn fail(what: String) -> Error {
    Error::VerificationFailed(what)
}

fn build_case3_for<R: GcdDomain>(s: &StructureData<R>, a: &Frac<R>, b: &Frac<R>) -> Result<Case3<R>> {
    check_parameters(a, b)?;
    let q = s.q();
    require_2x2(q)?;
    let qv = |i, j| q.get(i, j).clone();
    let (q11, q12, q21, q22) = (qv(0, 0), qv(0, 1), qv(1, 0), qv(1, 1));
    let (a, b) = (a.clone(), b.clone());

    let c11 = in_ring_nonneg("q11", &q11)?;
    let c12 = in_ring_nonneg("q21", &q21)?;
    let c21 = in_ring_nonneg("a q12", &(a.clone() * q12.clone()))?;
    in_ring_nonneg("b q22", &(b.clone() * q22.clone()))?;
    let det_d = b.clone() - a.clone();
    let q_prod = q11.clone() * q12.clone() * q21.clone() * q22.clone();
    let eps_k = q_prod.clone() * det_d.clone() * det_d.clone();
    let epsilon = match eps_k.to_ring() {
        Some(e) if e.is_unit() => e,
        _ => {
            return Err(Error::PreconditionFailed(format!(
                "(q11 q12 q21 q22) det(D)^2 = {eps_k} is not a unit"
            )))
        }
    };

    let mu = mu_assertion(q)?;
    let mu_k = Frac::from_ring(mu.clone());
    let p = Mat::from_fn(2, |i, j| if i == 1 && j == 1 { mu.clone() } else { R::one() });
    // q11 q22 / (p11 p22) = q12 q21 / (p12 p21)
    if q11.clone() * q22.clone() / mu_k.clone() != q12.clone() * q21.clone() {
        return Err(fail("p does not balance q11 q22 against q12 q21".into()));
    }
    let c22_k = b.clone() * q22.clone() / mu_k.clone();
    let c22 = match c22_k.to_ring() {
        Some(r) if r.is_nonneg() => r,
        _ => return Err(fail(format!("C(2, 2) = b q22 / p22 = {c22_k} is not in R+"))),
    };
    let c = Mat::from_rows(alloc::vec![alloc::vec![c11, c12], alloc::vec![c21, c22]])?;
    let t = q12.clone() * q21.clone();
    let det_c = Frac::from_ring(c.det());
    if det_c != det_d.clone() * t.clone() {
        return Err(fail(format!("det(C) = {det_c} != (b - a) t")));
    }
    let cone = Cone::validate(c)?;
    let iso = IsoMap::new(s.clone(), cone.clone(), p.clone())?;

    // identities for the report
    let one = Frac::<R>::one();
    let m = a.clone() / (a.clone() - b.clone());
    let m1 = m.clone() - one.clone();
    let k = s.expand_identity()?.k;
    let kv = |i, j| k.get(i, j).clone();
    let checks = [
        ("k21 q21 = m", kv(1, 0) * q21.clone(), m.clone()),
        ("a k12 q12 = m", a.clone() * kv(0, 1) * q12.clone(), m.clone()),
        ("k11 q11 = 1 - m", kv(0, 0) * q11.clone(), one.clone() - m.clone()),
        ("b k22 q22 = 1 - m", b.clone() * kv(1, 1) * q22.clone(), one.clone() - m.clone()),
        (
            "a q12 q21 b q22 q11 = (m - 1) m eps",
            a.clone() * b.clone() * q_prod.clone(),
            m1.clone() * m.clone() * eps_k.clone(),
        ),
    ];
    for (name, lhs, rhs) in checks {
        if lhs != rhs {
            return Err(fail(format!("{name}: {lhs} != {rhs}")));
        }
    }
    let mu1 = b.clone() * q11.clone() * q22.clone() / m1.clone();
    let mu2 = a.clone() * q12.clone() * q21.clone() / m.clone();
    if mu1.clone() * mu2.clone() != eps_k {
        return Err(fail(format!("mu1 mu2 = {} != eps", mu1.clone() * mu2.clone())));
    }

    let gcd_checks = match (R::KIND.is_field(), m.to_ring(), m1.to_ring()) {
        (false, Some(m_r), Some(m1_r)) => {
            let unit_gcd = |x: &R, y: Frac<R>| -> bool {
                y.to_ring().is_some_and(|y| gcd(x, &y).is_ok_and(|g| g.is_unit()))
            };
            GcdChecks::Checked([
                unit_gcd(&m_r, q11.clone()),
                unit_gcd(&m_r, b.clone() * q22.clone()),
                unit_gcd(&m1_r, q21.clone()),
                unit_gcd(&m1_r, a.clone() * q12.clone()),
            ])
        }
        _ => GcdChecks::Vacuous,
    };

    let report = Case3Report { m, epsilon, mu, mu1, mu2, t, k, gcd_checks };
    Ok(Case3 { cone, p, iso, report })
}

/// The outcome of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification<R: GcdDomain> {
    pub case: CaseTag<R>,
    pub iso: IsoMap<R>,
    pub case3_report: Option<Case3Report<R>>,
}

impl<R: GcdDomain> Classification<R> {
    /// The target cone matrix `A` (or `C`).
    pub fn target(&self) -> &Mat<R> {
        self.iso.target().matrix()
    }
}

/// Classifies a 2 × 2 l-algebra given by verified structure data and
/// returns a verified isomorphism onto a `P_A` cone.
pub fn classify<R: GcdDomain>(s: &StructureData<R>) -> Result<Classification<R>> {
    require_2x2(s.q())?;
    let conditions = s.verify_conditions();
    if !conditions.passed() {
        return Err(Error::PreconditionFailed("structure data fails its consistency conditions".into()));
    }
    if let Some(m) = s.verify_product_law().mismatch {
        return Err(Error::VerificationFailed(format!(
            "product law fails at {:?}",
            m.indices.map(|i| i + 1)
        )));
    }
    let case = detect_case(s.d())?;
    let (iso, case3_report) = match &case {
        CaseTag::Usual => (weinberg_pipeline(s)?, None),
        CaseTag::NilpotentCorner => (build_case2_for(s)?.iso, None),
        CaseTag::Parametric { a, b } => {
            let c3 = build_case3_for(s, a, b)?;
            (c3.iso, Some(c3.report))
        }
    };
    Ok(Classification { case, iso, case3_report })
}
