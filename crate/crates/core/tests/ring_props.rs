use lomat_core::ring::{associated_positive, gcd, lcm, Field, Frac, GcdDomain, Integer, Rational, Scalar, ZSqrt2};
use lomat_core::Error;
use proptest::prelude::*;

fn int() -> impl Strategy<Value = Integer> + Clone {
    (-1000i64..=1000).prop_map(Integer::from)
}

fn rat() -> impl Strategy<Value = Rational> + Clone {
    (-1000i64..=1000, 1i64..=50).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn quad() -> impl Strategy<Value = ZSqrt2> + Clone {
    (-200i64..=200, -200i64..=200).prop_map(|(a, b)| ZSqrt2::new(a, b))
}

fn frac_of<R: GcdDomain + core::fmt::Debug + 'static>(
    s: impl Strategy<Value = R> + Clone,
) -> impl Strategy<Value = Frac<R>> {
    (s.clone(), s).prop_filter_map("nonzero denominator", |(n, d)| Frac::new(n, d).ok())
}

fn gcd_contract<R: GcdDomain>(a: &R, b: &R) -> Result<(), TestCaseError> {
    if a.is_zero() && b.is_zero() {
        prop_assert_eq!(gcd(a, b), Err(Error::Domain("gcd(0, 0) is undefined")));
        return Ok(());
    }
    let g = gcd(a, b).unwrap();
    prop_assert!(g.is_positive());
    prop_assert!(a.exact_div(&g).is_some());
    prop_assert!(b.exact_div(&g).is_some());
    let h = gcd(b, a).unwrap();
    prop_assert!(associated_positive(&g, &h));
    Ok(())
}

/// Reals embedding of `a + b√2` for ordering cross-checks away from ties.
fn approx(z: &ZSqrt2) -> f64 {
    let a: i64 = z.rational_part().try_into().unwrap();
    let b: i64 = z.sqrt2_part().try_into().unwrap();
    a as f64 + b as f64 * std::f64::consts::SQRT_2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gcd_divides_and_is_symmetric_int(a in int(), b in int()) {
        gcd_contract(&a, &b)?;
    }

    #[test]
    fn gcd_divides_and_is_symmetric_rat(a in rat(), b in rat()) {
        gcd_contract(&a, &b)?;
    }

    #[test]
    fn gcd_divides_and_is_symmetric_quad(a in quad(), b in quad()) {
        gcd_contract(&a, &b)?;
    }

    #[test]
    fn common_divisors_divide_the_quad_gcd(c in quad(), x in quad(), y in quad()) {
        prop_assume!(!c.is_zero() && !(x.is_zero() && y.is_zero()));
        let g = gcd(&(c.clone() * x), &(c.clone() * y)).unwrap();
        prop_assert!(g.exact_div(&c).is_some());
    }

    #[test]
    fn int_gcd_matches_i64_euclid(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        prop_assume!(a != 0 || b != 0);
        let (mut x, mut y) = (a.abs(), b.abs());
        while y != 0 {
            (x, y) = (y, x % y);
        }
        prop_assert_eq!(gcd(&Integer::from(a), &Integer::from(b)).unwrap(), Integer::from(x));
    }

    #[test]
    fn positive_units_have_inverses(a in quad(), r in rat(), k in -8i32..=8) {
        for x in [a, ZSqrt2::unit_power(k)] {
            if x.is_positive_unit() {
                let t = x.unit_inverse().unwrap();
                prop_assert_eq!(x * t, ZSqrt2::one());
            }
        }
        if r.is_positive_unit() {
            prop_assert_eq!(r.clone() * r.unit_inverse().unwrap(), Rational::one());
        }
    }

    #[test]
    fn quad_positive_unit_matches_norm_rule(a in -50i64..=50, b in -50i64..=50) {
        let z = ZSqrt2::new(a, b);
        let norm = a * a - 2 * b * b;
        prop_assert_eq!(z.is_positive_unit(), z.is_positive() && norm.abs() == 1);
    }

    #[test]
    fn quad_order_matches_real_embedding(x in quad(), y in quad()) {
        let (fx, fy) = (approx(&x), approx(&y));
        if (fx - fy).abs() > 1e-6 {
            prop_assert_eq!(x < y, fx < fy);
        }
    }

    #[test]
    fn field_axioms_int(a in frac_of(int()), b in frac_of(int()), c in frac_of(int())) {
        field_axioms(a, b, c)?;
    }

    #[test]
    fn field_axioms_rat(a in frac_of(rat()), b in frac_of(rat()), c in frac_of(rat())) {
        field_axioms(a, b, c)?;
    }

    #[test]
    fn field_axioms_quad(a in frac_of(quad()), b in frac_of(quad()), c in frac_of(quad())) {
        field_axioms(a, b, c)?;
    }

    #[test]
    fn order_compatible_with_ring_ops(a in frac_of(quad()), b in frac_of(quad())) {
        if a.is_positive() && b.is_positive() {
            prop_assert!((a.clone() + b.clone()).is_positive());
            prop_assert!((a * b).is_positive());
        }
    }

    #[test]
    fn lcm_is_a_common_multiple(a in quad(), b in quad()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let l = lcm(&a, &b).unwrap();
        prop_assert!(l.exact_div(&a).is_some() && l.exact_div(&b).is_some());
        let g = gcd(&a, &b).unwrap();
        prop_assert!(associated_positive(&(g * l), &(a * b).abs()));
    }

    #[test]
    fn text_encoding_round_trips(a in frac_of(quad()), r in frac_of(rat()), i in frac_of(int())) {
        prop_assert_eq!(a.to_string().parse::<Frac<ZSqrt2>>().unwrap(), a);
        prop_assert_eq!(r.to_string().parse::<Frac<Rational>>().unwrap(), r);
        prop_assert_eq!(i.to_string().parse::<Frac<Integer>>().unwrap(), i);
    }
}

fn field_axioms<R: GcdDomain>(a: Frac<R>, b: Frac<R>, c: Frac<R>) -> Result<(), TestCaseError> {
    prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
    prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
    prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
    prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    prop_assert_eq!(a.clone() - a.clone(), Frac::zero());
    if let Some(inv) = a.inv() {
        prop_assert_eq!(a * inv, Frac::one());
    }
    Ok(())
}

#[test]
fn spec_examples() {
    assert_eq!(gcd(&Integer::from(12), &Integer::from(18)).unwrap(), Integer::from(6));
    let r = |p, q| Rational::new(p, q).unwrap();
    assert_eq!(gcd(&r(3, 4), &r(5, 6)).unwrap(), Rational::one());
    let g = gcd(&ZSqrt2::new(2, 0), &ZSqrt2::new(0, 1)).unwrap();
    assert!(associated_positive(&g, &ZSqrt2::new(0, 1)));
    assert!(Integer::from(1).is_positive_unit());
    assert!(!Integer::from(2).is_positive_unit());
    assert!(ZSqrt2::new(1, 1).is_positive_unit());
    assert_eq!(ZSqrt2::new(1, 1) * ZSqrt2::new(-1, 1), ZSqrt2::one());
    assert!(r(7, 3).is_positive_unit());
}
