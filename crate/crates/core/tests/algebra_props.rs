use lomat_core::classify::{build_case3, classify, corner_matrix, mu_assertion, CaseTag};
use lomat_core::cone::Cone;
use lomat_core::oracle::{gen_cone_at, gen_structure_data_at, membership_oracle, GenSpec};
use lomat_core::ring::{Frac, Integer, Rational, Scalar, ZSqrt2};
use lomat_core::sample::{self, positive_field_elem, stream_rng, Sample};
use lomat_core::structure::{FieldMat, StructureData};
use lomat_core::weinberg::{first_bad_triple, solve_units, triple, weinberg_pipeline};
use lomat_core::Mat;
use proptest::prelude::*;
use rand::Rng;

/// Signed element `A·U − A·V`, or a raw random matrix, so both members and
/// non-members of the cone turn up.
fn element<R: Sample>(cone: &Cone<R>, rng: &mut sample::StreamRng) -> Mat<R> {
    let n = cone.n();
    if rng.gen_bool(0.5) {
        let u = sample::nonneg_matrix(rng, n, 4);
        let v = sample::nonneg_matrix(rng, n, 4);
        &(cone.matrix() * &u) - &(cone.matrix() * &v)
    } else {
        sample::matrix(rng, n, 4)
    }
}

fn lub_contract<R: Sample>(seed: u64, n: usize) -> Result<(), TestCaseError> {
    let cone = gen_cone_at::<R>(&GenSpec::new(n, seed, 3), 0).unwrap();
    let rng = &mut stream_rng(seed, 1);
    let (x, y, w) = (element(&cone, rng), element(&cone, rng), element(&cone, rng));
    let s = cone.join(&x, &y);
    prop_assert!(cone.contains(&(&s - &x)) && cone.contains(&(&s - &y)));
    for _ in 0..10 {
        let z = &s + &(cone.matrix() * &sample::nonneg_matrix(rng, n, 4));
        prop_assert!(cone.contains(&(&z - &s)));
        let z = element(&cone, rng);
        if cone.contains(&(&z - &x)) && cone.contains(&(&z - &y)) {
            prop_assert!(cone.contains(&(&z - &s)));
        }
    }
    prop_assert_eq!(cone.join(&(&x + &w), &(&y + &w)), &s + &w);
    let r = R::sample_nonneg(rng, 5);
    prop_assert_eq!(cone.join(&x.scale(&r), &y.scale(&r)), s.scale(&r));
    let u = sample::nonneg_matrix(rng, n, 4);
    let v = sample::nonneg_matrix(rng, n, 4);
    prop_assert!(cone.contains(&(&(cone.matrix() * &u) * &(cone.matrix() * &v))));
    prop_assert_eq!(cone.contains(&x), membership_oracle(&cone, &x));
    prop_assert_eq!(cone.contains(&s), membership_oracle(&cone, &s));
    Ok(())
}

fn structure_contract<R: Sample>(seed: u64, n: usize) -> Result<(), TestCaseError> {
    let spec = GenSpec::<R>::new(n, seed, 3);
    let s = gen_structure_data_at(&spec, 0).unwrap();
    prop_assert!(s.verify_conditions().passed());
    prop_assert!(s.verify_product_law().passed());
    prop_assert!(s.check_product_law(&s.basis()).passed());
    prop_assert!(s.basis_is_independent());
    // With D = I, every triple product is a positive unit.
    for i in 0..n {
        for j in 0..n {
            for t in 0..n {
                prop_assert!(triple(s.q(), i, j, t).is_positive_ring_unit());
            }
        }
    }
    let e = s.expand_identity().unwrap();
    let mut sum: FieldMat<R> = Mat::zero(n);
    for (i, j, k) in e.k.entries() {
        sum = &sum + &s.basis_element(i, j).scale(k);
    }
    prop_assert_eq!(sum, Mat::identity(n));
    prop_assert!(e.identity_positive);

    // Gauge invariance.
    let rng = &mut stream_rng(seed, 7);
    let g: Vec<Frac<R>> = (0..n).map(|_| positive_field_elem(rng, 4)).collect();
    let q2 = Mat::from_fn(n, |i, j| g[i].clone() / g[j].clone() * s.q_at(i, j).clone());
    for i in 0..n {
        for j in 0..n {
            for t in 0..n {
                prop_assert_eq!(triple(s.q(), i, j, t), triple(&q2, i, j, t));
            }
        }
    }
    let x1 = solve_units(s.q()).unwrap();
    let x2 = solve_units(&q2).unwrap();
    x1.verify(s.q()).unwrap();
    x2.verify(&q2).unwrap();
    prop_assert!(x1.matrix().entries().all(|(_, _, v)| v.is_positive_unit()));

    let iso = weinberg_pipeline(&s).unwrap();
    prop_assert_eq!(iso.verify_generators().unwrap(), n.pow(4));
    iso.check_contract(seed, 5, 3).unwrap();
    Ok(())
}

fn classify_contract<R: Sample>(s: &StructureData<R>) -> Result<(), TestCaseError> {
    let c = classify(s).unwrap();
    prop_assert!(c.target().det().is_unit());
    prop_assert!(c.target().is_nonneg());
    prop_assert_eq!(c.iso.verify_generators().unwrap(), 16);
    prop_assert!(c.iso.check_contract(7, 8, 3).is_ok());
    if let Some(rep) = &c.case3_report {
        let (a, b) = match &c.case {
            CaseTag::Parametric { a, b } => (a.clone(), b.clone()),
            _ => unreachable!(),
        };
        let q = |i, j| s.q_at(i, j).clone();
        let m = rep.m.clone();
        let lhs = a.clone() * q(0, 1) * q(1, 0) * b.clone() * q(1, 1) * q(0, 0);
        let eps = Frac::from_ring(rep.epsilon.clone());
        prop_assert_eq!(lhs, (m.clone() - Frac::one()) * m.clone() * eps.clone());
        prop_assert_eq!(rep.mu1.clone() * rep.mu2.clone(), eps);
        // μ = q11 q22 / (q12 q21) is the ratio μ1 / μ2 under this orientation.
        let mu = mu_assertion(s.q()).unwrap();
        prop_assert_eq!(Frac::from_ring(mu), rep.mu1.clone() / rep.mu2.clone());
        let k = |i, j| rep.k.get(i, j).clone();
        prop_assert_eq!(k(1, 0) * q(1, 0), m.clone());
        prop_assert_eq!(a * k(0, 1) * q(0, 1), m.clone());
        prop_assert_eq!(k(0, 0) * q(0, 0), Frac::one() - m.clone());
        prop_assert_eq!(b * k(1, 1) * q(1, 1), Frac::one() - m);
    }
    Ok(())
}

fn families<R: Sample>() -> Vec<CaseTag<R>> {
    vec![
        CaseTag::Usual,
        CaseTag::NilpotentCorner,
        CaseTag::Parametric { a: Frac::from_i64(2), b: Frac::from_i64(1) },
    ]
}

fn classify_generated<R: Sample>(seed: u64) -> Result<(), TestCaseError> {
    for case in families::<R>() {
        let s = gen_structure_data_at(&GenSpec::new(2, seed, 3).with_case(case.clone()), 0).unwrap();
        prop_assert!(s.verify_product_law().passed());
        let c = classify(&s).unwrap();
        prop_assert_eq!(&c.case, &case);
        classify_contract(&s)?;
    }
    Ok(())
}

/// Random corner data: when the conditions hold, so do the memberships the
/// case-2 construction relies on.
fn corner_memberships<R: Sample>(seed: u64) -> Result<(), TestCaseError> {
    let rng = &mut stream_rng(seed, 3);
    let pick = |rng: &mut sample::StreamRng| {
        let u = Frac::from_ring(R::sample_positive_unit(rng, 3));
        let r = Frac::from_ring(R::sample_positive(rng, 2));
        if rng.gen_bool(0.5) { u * r } else { u / r }
    };
    let q = Mat::from_fn(2, |_, _| pick(rng));
    let s = StructureData::new(Mat::identity(2), corner_matrix(), q).unwrap();
    if s.verify_conditions().passed() {
        let q = |i, j| s.q_at(i, j).clone();
        prop_assert!(q(0, 0).is_in_ring_nonneg());
        prop_assert!(q(0, 1).is_in_ring_nonneg());
        prop_assert!(q(1, 0).is_in_ring_nonneg());
        prop_assert!((q(0, 0) * q(1, 1)).is_in_ring_nonneg());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lub_int(seed in any::<u64>(), n in 2usize..=4) { lub_contract::<Integer>(seed, n)?; }

    #[test]
    fn lub_rat(seed in any::<u64>(), n in 2usize..=4) { lub_contract::<Rational>(seed, n)?; }

    #[test]
    fn lub_quad(seed in any::<u64>(), n in 2usize..=4) { lub_contract::<ZSqrt2>(seed, n)?; }

    #[test]
    fn structure_int(seed in any::<u64>(), n in 1usize..=4) { structure_contract::<Integer>(seed, n)?; }

    #[test]
    fn structure_rat(seed in any::<u64>(), n in 1usize..=4) { structure_contract::<Rational>(seed, n)?; }

    #[test]
    fn structure_quad(seed in any::<u64>(), n in 1usize..=3) { structure_contract::<ZSqrt2>(seed, n)?; }

    #[test]
    fn classify_int(seed in any::<u64>()) { classify_generated::<Integer>(seed)?; }

    #[test]
    fn classify_rat(seed in any::<u64>()) { classify_generated::<Rational>(seed)?; }

    #[test]
    fn classify_quad(seed in any::<u64>()) { classify_generated::<ZSqrt2>(seed)?; }

    #[test]
    fn corner_int(seed in any::<u64>()) { corner_memberships::<Integer>(seed)?; }

    #[test]
    fn corner_quad(seed in any::<u64>()) { corner_memberships::<ZSqrt2>(seed)?; }

    /// Over the integers the only positive unit is 1.
    #[test]
    fn integer_solver_biconditional(seed in any::<u64>(), n in 2usize..=4) {
        let rng = &mut stream_rng(seed, 0);
        let choices = [Frac::from_i64(1), Frac::from_i64(2), Frac::new(Integer::from(1), Integer::from(2)).unwrap()];
        let q: FieldMat<Integer> = if rng.gen_bool(0.5) {
            let g: Vec<Frac<Integer>> = (0..n).map(|_| positive_field_elem(rng, 4)).collect();
            Mat::from_fn(n, |i, j| g[i].clone() / g[j].clone())
        } else {
            Mat::from_fn(n, |_, _| choices[rng.gen_range(0..3)].clone())
        };
        let all_one = first_bad_triple(&q).is_none()
            && (0..n).all(|i| (0..n).all(|j| (0..n).all(|t| triple(&q, i, j, t) == Frac::one())));
        prop_assert_eq!(solve_units(&q).is_ok(), all_one);
    }

    #[test]
    fn generators_are_deterministic(seed in any::<u64>(), index in 0u64..1000) {
        let spec = GenSpec::<ZSqrt2>::new(3, seed, 3);
        prop_assert_eq!(gen_cone_at(&spec, index).unwrap(), gen_cone_at(&spec, index).unwrap());
        prop_assert_eq!(gen_structure_data_at(&spec, index).unwrap(), gen_structure_data_at(&spec, index).unwrap());
    }
}

#[test]
fn case3_over_rationals_for_several_parameters() {
    let r = |p, q| Frac::<Rational>::from_ring(Rational::new(p, q).unwrap());
    for (a, b) in [(r(2, 1), r(1, 1)), (r(3, 1), r(1, 1)), (r(3, 1), r(2, 1)), (r(5, 2), r(1, 2))] {
        for index in 0..10 {
            let case = CaseTag::Parametric { a: a.clone(), b: b.clone() };
            let s = gen_structure_data_at(&GenSpec::new(2, 11, 4).with_case(case), index).unwrap();
            let c3 = build_case3(s.q(), &a, &b).unwrap();
            assert!(c3.cone.matrix().is_nonneg());
            assert_eq!(c3.iso.verify_generators().unwrap(), 16);
            classify_contract(&s).unwrap();
        }
    }
}

#[test]
fn fixed_seed_cone_draws_all_validate() {
    for index in 0..100 {
        let cone = gen_cone_at::<Integer>(&GenSpec::new(3, 2024, 3), index).unwrap();
        assert!(Cone::validate(cone.matrix().clone()).is_ok());
    }
}

