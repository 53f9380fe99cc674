//! Independent verification paths and seeded generators of valid inputs.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use crate::classify::{corner_matrix, parametric_matrix, CaseTag};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::ring::{Frac, Scalar};
use crate::sample::{positive_field_elem, stream_rng, Sample, StreamRng};
use crate::structure::{FieldMat, StructureData};

/// `X ∈ P_A` decided by solving `A · Y = X` with Gauss–Jordan elimination
/// over `K`, without the adjugate inverse that [`Cone::contains`] uses.
pub fn membership_oracle<R: Sample>(cone: &Cone<R>, x: &Mat<R>) -> bool {
    match cone.matrix().to_field().solve(&x.to_field()) {
        Some(y) => y.entries().all(|(_, _, v)| v.is_in_ring_nonneg()),
        None => false,
    }
}

/// Parameters of a seeded generator run. The same spec always produces the
/// same output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec<R: Sample> {
    pub n: usize,
    pub seed: u64,
    /// Magnitude bound for sampled components.
    pub bound: u32,
    /// `None` means the `D = I` family.
    pub case: Option<CaseTag<R>>,
    /// Rejection-sampling budget.
    pub max_attempts: usize,
}

impl<R: Sample> GenSpec<R> {
    pub fn new(n: usize, seed: u64, bound: u32) -> Self {
        GenSpec { n, seed, bound: bound.max(1), case: None, max_attempts: 10_000 }
    }

    pub fn with_case(mut self, case: CaseTag<R>) -> Self {
        self.case = Some(case);
        self
    }

    pub fn with_max_attempts(mut self, attempts: usize) -> Self {
        self.max_attempts = attempts;
        self
    }
}

/// `q_ij = g_i · g_j⁻¹ · u_ij`.
pub fn gauge_q<R: Sample>(gauges: &[Frac<R>], units: &Mat<R>) -> FieldMat<R> {
    Mat::from_fn(units.n(), |i, j| {
        gauges[i].clone() / gauges[j].clone() * Frac::from_ring(units.get(i, j).clone())
    })
}

fn index_below(rng: &mut StreamRng, upper: usize) -> usize {
    rng.gen_range(0..upper as u32) as usize
}

/// `(I + L)(I + U)` with `L`, `U` strictly triangular and entries drawn by
/// `entry`; determinant 1.
fn unitriangular_product<R: Sample>(
    rng: &mut StreamRng,
    n: usize,
    mut entry: impl FnMut(&mut StreamRng) -> R,
) -> Mat<R> {
    let lower = Mat::from_fn(n, |i, j| match i.cmp(&j) {
        core::cmp::Ordering::Equal => R::one(),
        core::cmp::Ordering::Greater => entry(rng),
        core::cmp::Ordering::Less => R::zero(),
    });
    let upper = Mat::from_fn(n, |i, j| match i.cmp(&j) {
        core::cmp::Ordering::Equal => R::one(),
        core::cmp::Ordering::Less => entry(rng),
        core::cmp::Ordering::Greater => R::zero(),
    });
    &lower * &upper
}

fn gen_h<R: Sample>(rng: &mut StreamRng, n: usize, bound: u32) -> FieldMat<R> {
    let b = bound.min(3);
    unitriangular_product(rng, n, |rng| R::sample(rng, b)).to_field()
}

/// `u · r` or `u / r` for a random positive unit `u` and positive `r`.
fn unit_times_power<R: Sample>(rng: &mut StreamRng, bound: u32) -> Frac<R> {
    let u = Frac::from_ring(R::sample_positive_unit(rng, bound));
    let r = Frac::from_ring(R::sample_positive(rng, bound.min(2)));
    if rng.gen_bool(0.5) {
        u * r
    } else {
        u / r
    }
}

fn gen_q<R: Sample>(rng: &mut StreamRng, spec: &GenSpec<R>) -> FieldMat<R> {
    let n = spec.n;
    match &spec.case {
        None | Some(CaseTag::Usual) => {
            let units = Mat::from_fn(n, |_, _| R::sample_positive_unit(rng, spec.bound));
            let gauges: Vec<Frac<R>> = (0..n).map(|_| positive_field_elem(rng, spec.bound)).collect();
            gauge_q(&gauges, &units)
        }
        Some(CaseTag::NilpotentCorner) => {
            let q11 = Frac::from_ring(R::sample_positive(rng, spec.bound));
            let q12 = Frac::from_ring(R::sample_positive_unit(rng, spec.bound));
            let q21 = Frac::from_ring(R::sample_positive_unit(rng, spec.bound));
            let u = Frac::from_ring(R::sample_positive_unit(rng, spec.bound));
            let q22 = u / q11.clone();
            Mat::from_rows(alloc::vec![alloc::vec![q11, q12], alloc::vec![q21, q22]])
                .expect("2 x 2")
        }
        Some(CaseTag::Parametric { .. }) => {
            if R::KIND.is_field() {
                Mat::from_fn(2, |_, _| positive_field_elem(rng, spec.bound))
            } else {
                Mat::from_fn(2, |_, _| unit_times_power(rng, spec.bound))
            }
        }
    }
}

/// Item `index` of the structure-data stream for `spec`.
///
/// `D = I` data uses the gauge construction, which satisfies both
/// consistency conditions by design; the 2 × 2 families sample `Q` and
/// reject until the conditions hold.
pub fn gen_structure_data_at<R: Sample>(spec: &GenSpec<R>, index: u64) -> Result<StructureData<R>> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::PreconditionFailed("n must be at least 1".into()));
    }
    let d = match &spec.case {
        None | Some(CaseTag::Usual) => Mat::identity(n),
        Some(case) if n != 2 => {
            return Err(Error::PreconditionFailed(format!(
                "the {} family exists only for n = 2",
                case.name()
            )))
        }
        Some(CaseTag::NilpotentCorner) => corner_matrix(),
        Some(CaseTag::Parametric { a, b }) => {
            if !(a > b && b.is_positive()) {
                return Err(Error::PreconditionFailed(format!("need a > b > 0, got a = {a}, b = {b}")));
            }
            parametric_matrix(a, b)
        }
    };
    let rng = &mut stream_rng(spec.seed, index);
    let h = gen_h(rng, n, spec.bound);
    for _ in 0..spec.max_attempts {
        let q = gen_q(rng, spec);
        let s = StructureData::new(h.clone(), d.clone(), q)?;
        if s.verify_conditions().passed() {
            return Ok(s);
        }
    }
    Err(Error::ResourceExhausted(spec.max_attempts))
}

pub fn gen_structure_data<R: Sample>(spec: &GenSpec<R>) -> Result<StructureData<R>> {
    gen_structure_data_at(spec, 0)
}

/// Item `index` of the cone stream for `spec`: `A = P · Δ · (I + L)(I + U)`
/// with `P` a permutation, `Δ` a diagonal of positive units and `L`, `U`
/// strictly triangular with entries in `R⁺`.
pub fn gen_cone_at<R: Sample>(spec: &GenSpec<R>, index: u64) -> Result<Cone<R>> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::PreconditionFailed("n must be at least 1".into()));
    }
    let rng = &mut stream_rng(spec.seed, index);
    for _ in 0..spec.max_attempts {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = index_below(rng, i + 1);
            perm.swap(i, j);
        }
        let p = Mat::from_fn(n, |i, j| if perm[i] == j { R::one() } else { R::zero() });
        let units: Vec<R> = (0..n).map(|_| R::sample_positive_unit(rng, spec.bound)).collect();
        let diag = Mat::from_fn(n, |i, j| if i == j { units[i].clone() } else { R::zero() });
        let tri = unitriangular_product(rng, n, |rng| R::sample_nonneg(rng, spec.bound));
        let a = &(&p * &diag) * &tri;
        if let Ok(cone) = Cone::validate(a) {
            return Ok(cone);
        }
    }
    Err(Error::ResourceExhausted(spec.max_attempts))
}

pub fn gen_cone<R: Sample>(spec: &GenSpec<R>) -> Result<Cone<R>> {
    gen_cone_at(spec, 0)
}
