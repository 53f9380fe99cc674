//! Positive-unit solutions of `x_ij · x_js · x_is⁻¹ = q_ij · q_js · q_is⁻¹`
//! and the isomorphism they induce onto the usual order.

use alloc::string::ToString;
use alloc::format;
use alloc::vec::Vec;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::ring::{Frac, GcdDomain, Scalar};
use crate::sample::{self, stream_rng, Sample};
use crate::structure::{FieldMat, StructureData};

/// A solution matrix `X = (μ_ij)` of positive units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitSolution<R> {
    x: Mat<R>,
}

impl<R: GcdDomain> UnitSolution<R> {
    pub fn new(x: Mat<R>) -> Self {
        UnitSolution { x }
    }

    pub fn matrix(&self) -> &Mat<R> {
        &self.x
    }

    pub fn n(&self) -> usize {
        self.x.n()
    }

    /// Checks that every `μ_ij` is a positive unit and that all `n³`
    /// equations hold for `q`.
    pub fn verify(&self, q: &FieldMat<R>) -> Result<()> {
        let n = self.n();
        if q.n() != n {
            return Err(Error::DimensionMismatch { expected: n, found: q.n() });
        }
        if let Some((i, j, v)) = self.x.entries().find(|(_, _, v)| !v.is_positive_unit()) {
            return Err(Error::VerificationFailed(format!(
                "x({}, {}) = {v} is not a positive unit",
                i + 1,
                j + 1
            )));
        }
        let x = self.x.to_field();
        for i in 0..n {
            for j in 0..n {
                for s in 0..n {
                    let lhs = triple(&x, i, j, s);
                    let rhs = triple(q, i, j, s);
                    if lhs != rhs {
                        return Err(Error::VerificationFailed(format!(
                            "equation ({}, {}, {}): x-side {lhs} != q-side {rhs}",
                            i + 1,
                            j + 1,
                            s + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `m_ij · m_js · m_is⁻¹`.
pub fn triple<R: GcdDomain>(m: &FieldMat<R>, i: usize, j: usize, s: usize) -> Frac<R> {
    m.get(i, j).clone() * m.get(j, s).clone() / m.get(i, s).clone()
}

/// First triple `(i, j, s)` (0-based) with `q_ij q_js q_is⁻¹ ∉ R⁺ ∩ R^×`.
pub fn first_bad_triple<R: GcdDomain>(q: &FieldMat<R>) -> Option<([usize; 3], Frac<R>)> {
    let n = q.n();
    for i in 0..n {
        for j in 0..n {
            for s in 0..n {
                let t = triple(q, i, j, s);
                if !t.is_positive_ring_unit() {
                    return Some(([i, j, s], t));
                }
            }
        }
    }
    None
}

/// Solves the unit system by induction on `n`.
///
/// The `k × k` block is extended with `x_{1,k+1} = 1`,
/// `x_{i,k+1} = q_1i q_{i,k+1} q_{1,k+1}⁻¹ μ_1i⁻¹` for `2 ≤ i ≤ k`,
/// `x_{k+1,i} = x_{i,k+1}⁻¹ q_{i,k+1} q_{k+1,i}` for `1 ≤ i ≤ k` and
/// `x_{k+1,k+1} = q_{k+1,k+1}`; for `n = 2` this is
/// `x = [[q_11, 1], [q_12 q_21, q_22]]`.
pub fn solve_units<R: GcdDomain>(q: &FieldMat<R>) -> Result<UnitSolution<R>> {
    if q.entries().any(|(_, _, v)| v.is_zero()) {
        return Err(Error::PreconditionFailed("Q has a zero entry".into()));
    }
    if let Some(([i, j, s], t)) = first_bad_triple(q) {
        return Err(Error::PreconditionFailed(format!(
            "q({i1},{j1}) q({j1},{s1}) / q({i1},{s1}) = {t} is not a positive unit",
            i1 = i + 1,
            j1 = j + 1,
            s1 = s + 1
        )));
    }
    let n = q.n();
    let qv = |i: usize, j: usize| q.get(i, j).clone();
    let mut x: Vec<Vec<Frac<R>>> = (0..n).map(|_| alloc::vec![Frac::zero(); n]).collect();
    x[0][0] = qv(0, 0);
    for k in 1..n {
        x[0][k] = Frac::one();
        for i in 1..k {
            x[i][k] = qv(0, i) * qv(i, k) / qv(0, k) / x[0][i].clone();
        }
        for i in 0..k {
            x[k][i] = qv(i, k) * qv(k, i) / x[i][k].clone();
        }
        x[k][k] = qv(k, k);
    }
    let mut rows = Vec::with_capacity(n);
    for (i, row) in x.into_iter().enumerate() {
        let mut out = Vec::with_capacity(n);
        for (j, v) in row.into_iter().enumerate() {
            match v.to_ring() {
                Some(r) if r.is_positive_unit() => out.push(r),
                _ => {
                    return Err(Error::InternalCheckFailed(format!(
                        "constructed x({}, {}) = {v} is not a positive unit",
                        i + 1,
                        j + 1
                    )))
                }
            }
        }
        rows.push(out);
    }
    let sol = UnitSolution::new(Mat::from_rows(rows)?);
    sol.verify(q).map_err(|e| Error::InternalCheckFailed(e.to_string()))?;
    Ok(sol)
}

/// An l-algebra isomorphism given on the vl-basis by
/// `B_ij ↦ scalar_ij · A · E_ij`, where `A` defines the target cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoMap<R: GcdDomain> {
    scalars: Mat<R>,
    target: Cone<R>,
    source: StructureData<R>,
    // cached field images of `target` and `scalars`; `None` for `A = I`
    target_field: Option<FieldMat<R>>,
    scalars_field: FieldMat<R>,
}

impl<R: GcdDomain> IsoMap<R> {
    /// Packages the map after checking that the scalars are positive units
    /// and that it is multiplicative on all `n⁴` generator pairs.
    pub fn new(source: StructureData<R>, target: Cone<R>, scalars: Mat<R>) -> Result<Self> {
        let n = source.n();
        for m in [target.n(), scalars.n()] {
            if m != n {
                return Err(Error::DimensionMismatch { expected: n, found: m });
            }
        }
        if let Some((i, j, v)) = scalars.entries().find(|(_, _, v)| !v.is_positive_unit()) {
            return Err(Error::VerificationFailed(format!(
                "scalar ({}, {}) = {v} is not a positive unit",
                i + 1,
                j + 1
            )));
        }
        let a = target.matrix();
        let target_field = (a != &Mat::identity(n)).then(|| a.to_field());
        let scalars_field = scalars.to_field();
        let iso = IsoMap { scalars, target, source, target_field, scalars_field };
        iso.verify_generators()?;
        Ok(iso)
    }

    pub fn scalars(&self) -> &Mat<R> {
        &self.scalars
    }

    pub fn target(&self) -> &Cone<R> {
        &self.target
    }

    pub fn source(&self) -> &StructureData<R> {
        &self.source
    }

    pub fn n(&self) -> usize {
        self.source.n()
    }

    /// The image of `B_ij`.
    pub fn image_of_basis(&self, i: usize, j: usize) -> FieldMat<R> {
        self.target.basis_element(i, j).scale(self.scalars.get(i, j)).to_field()
    }

    /// `φ(X) = A · (c ∘ μ)` where `c` are the coordinates of `X` in the
    /// source basis.
    pub fn apply(&self, x: &FieldMat<R>) -> FieldMat<R> {
        self.apply_coordinates(&self.source.coordinates(x))
    }

    /// `φ` on an element given by its vl-basis coordinates.
    fn apply_coordinates(&self, c: &FieldMat<R>) -> FieldMat<R> {
        let c = c.hadamard(&self.scalars_field);
        match &self.target_field {
            Some(a) => a * &c,
            None => c,
        }
    }

    /// `φ(B_ij) φ(B_rs) = d_jr q_ij q_rs q_is⁻¹ φ(B_is)` for all pairs.
    /// Returns the number of pairs checked.
    pub fn verify_generators(&self) -> Result<usize> {
        let n = self.n();
        let images: Vec<FieldMat<R>> =
            (0..n * n).map(|k| self.image_of_basis(k / n, k % n)).collect();
        let img = |i: usize, j: usize| &images[i * n + j];
        let mut checked = 0;
        for i in 0..n {
            for j in 0..n {
                for r in 0..n {
                    for s in 0..n {
                        checked += 1;
                        let lhs = img(i, j) * img(r, s);
                        let rhs = img(i, s).scale(&self.source.constant(i, j, r, s));
                        if lhs != rhs {
                            return Err(Error::VerificationFailed(format!(
                                "phi(B{}{}) phi(B{}{}) = {lhs}, expected {rhs}",
                                i + 1,
                                j + 1,
                                r + 1,
                                s + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(checked)
    }

    /// Reads the scalars back as a solution of the unit system. Only valid
    /// when the target is the usual cone.
    pub fn solution(&self) -> Result<UnitSolution<R>> {
        if !self.target.is_usual() {
            return Err(Error::PreconditionFailed("target cone is not the usual order".into()));
        }
        let sol = UnitSolution::new(self.scalars.clone());
        sol.verify(self.source.q())?;
        Ok(sol)
    }
}

/// Multiplicativity and join-correspondence counts from
/// [`IsoMap::check_contract`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractReport {
    pub pairs: usize,
    pub products_checked: usize,
    pub joins_checked: usize,
}

impl<R: Sample> IsoMap<R> {
    /// On `pairs` random `X, Y` with coordinates in `R`, checks
    /// `φ(XY) = φ(X)φ(Y)` and `φ(X ∨ Y) = φ(X) ∨ φ(Y)` (pair `k` uses stream
    /// `(seed, k)`).
    pub fn check_contract(&self, seed: u64, pairs: usize, bound: u32) -> Result<ContractReport> {
        let n = self.n();
        let target_inv = self.target_field.as_ref().map(|_| self.target.inverse().to_field());
        let target_join = |u: &FieldMat<R>, v: &FieldMat<R>| match (&self.target_field, &target_inv) {
            (Some(a), Some(inv)) => a * &(inv * u).max_entrywise(&(inv * v)),
            _ => u.max_entrywise(v),
        };
        for k in 0..pairs {
            let rng = &mut stream_rng(seed, k as u64);
            let cx: Mat<R> = sample::matrix(rng, n, bound);
            let cy: Mat<R> = sample::matrix(rng, n, bound);
            let x = self.source.compose(&cx.to_field());
            let y = self.source.compose(&cy.to_field());
            let (kx, ky) = (self.source.coordinates(&x), self.source.coordinates(&y));
            let (px, py) = (self.apply_coordinates(&kx), self.apply_coordinates(&ky));
            let prod = self.apply(&(&x * &y));
            if prod != &px * &py {
                return Err(Error::VerificationFailed(format!(
                    "phi(XY) != phi(X) phi(Y) for pair {k}: X = {x}, Y = {y}"
                )));
            }
            let join = self.apply(&self.source.compose(&kx.max_entrywise(&ky)));
            if join != target_join(&px, &py) {
                return Err(Error::VerificationFailed(format!(
                    "phi(X join Y) != phi(X) join phi(Y) for pair {k}: X = {x}, Y = {y}"
                )));
            }
        }
        Ok(ContractReport { pairs, products_checked: pairs, joins_checked: pairs })
    }
}

/// The map `B_ij ↦ μ_ij E_ij` onto the usual order. Requires `D = I`.
pub fn build_iso_to_usual<R: GcdDomain>(s: &StructureData<R>, x: &UnitSolution<R>) -> Result<IsoMap<R>> {
    let n = s.n();
    if s.d() != &Mat::identity(n) {
        return Err(Error::PreconditionFailed("structure data must have D = I".into()));
    }
    let conditions = s.verify_conditions();
    if !conditions.passed() {
        return Err(Error::PreconditionFailed("structure data fails its consistency conditions".into()));
    }
    x.verify(s.q()).map_err(|e| Error::PreconditionFailed(format!("X does not solve the Q-system: {e}")))?;
    IsoMap::new(s.clone(), Cone::usual(n), x.matrix().clone())
}

/// Every l-algebra with `I ∈ P` is isomorphic to the usual order: expand
/// `I`, solve the unit system and build the isomorphism.
pub fn weinberg_pipeline<R: GcdDomain>(s: &StructureData<R>) -> Result<IsoMap<R>> {
    let expansion = s.expand_identity()?;
    if let Some((i, j, v)) = expansion.first_non_positive() {
        return Err(Error::IdentityNotPositive { i: i + 1, j: j + 1, value: v.to_string() });
    }
    if s.d() != &Mat::identity(s.n()) {
        return Err(Error::PreconditionFailed("I is positive but D is not given as I".into()));
    }
    let x = solve_units(s.q())?;
    build_iso_to_usual(s, &x)
}
