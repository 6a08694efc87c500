use num_bigint::{BigInt, BigUint};
use num_traits::One;
use proptest::prelude::*;

use simplest_cubic::arith::{cube_root_exact, factor, vp, Factorization};
use simplest_cubic::conductor::{conductor, delta};
use simplest_cubic::field::{reduce_param, FieldElement};
use simplest_cubic::monogenity::{monogenic_param_cube, monogenic_param_valuation};

fn element(t: i64) -> impl Strategy<Value = FieldElement> {
    (-50i64..50, -50i64..50, -50i64..50, 1i64..12)
        .prop_map(move |(a, b, c, d)| FieldElement::from_i64s(t, a, b, c, d).unwrap())
}

fn triple() -> impl Strategy<Value = (i64, FieldElement, FieldElement, FieldElement)> {
    (-1i64..500).prop_flat_map(|t| (Just(t), element(t), element(t), element(t)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn factorization_round_trips(n in 1u64..u64::MAX) {
        let f = factor(&BigUint::from(n)).unwrap();
        let product = f.factors().iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        prop_assert_eq!(&product, f.value());
        prop_assert_eq!(f.to_string().parse::<Factorization>().unwrap(), f);
    }

    #[test]
    fn valuations_match_factorization(n in 1u64..1_000_000_000_000, k in 0u32..4) {
        let m = BigUint::from(n) * BigUint::from(3u32).pow(k);
        let f = factor(&m).unwrap();
        for (p, e) in f.factors() {
            prop_assert_eq!(vp(&BigInt::from(m.clone()), p).unwrap(), *e);
        }
        prop_assert!(f.exponent_u64(3) >= k);
    }

    #[test]
    fn cube_roots(n in 1u64..(1 << 40)) {
        let b = BigUint::from(n);
        prop_assert_eq!(cube_root_exact(&(&b * &b * &b)), Some(b.clone()));
        if n > 1 {
            prop_assert_eq!(cube_root_exact(&(&b * &b * &b + 1u32)), None);
        }
    }

    #[test]
    fn field_axioms((_t, x, y, z) in triple()) {
        let add = |a: &FieldElement, b: &FieldElement| a.try_add(b).unwrap();
        let mul = |a: &FieldElement, b: &FieldElement| a.try_mul(b).unwrap();
        prop_assert_eq!(mul(&x, &add(&y, &z)), add(&mul(&x, &y), &mul(&x, &z)));
        prop_assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
        prop_assert_eq!(mul(&x, &y), mul(&y, &x));
        if !x.is_zero() {
            prop_assert!(mul(&x, &x.inv().unwrap()) == FieldElement::one(x.param()));
        }
    }

    #[test]
    fn galois_action((_t, x, y, _z) in triple()) {
        prop_assert_eq!(x.sigma_pow(3), x.clone());
        prop_assert_eq!(x.try_mul(&y).unwrap().sigma(), x.sigma().try_mul(&y.sigma()).unwrap());
        let n = x.norm();
        prop_assert_eq!(x.sigma().norm(), n);
        prop_assert_eq!(x.sigma().trace(), x.trace());
    }

    #[test]
    fn theta_discriminant(t in -1i64..1_000_000_000) {
        let d = BigInt::from(delta(t).unwrap());
        let disc = FieldElement::theta(t).element_discriminant();
        prop_assert_eq!(disc, num_rational::BigRational::from_integer(&d * &d));
    }

    #[test]
    fn parameter_tests_agree(t in -1i64..10_000_000) {
        prop_assert_eq!(monogenic_param_valuation(t).unwrap(), monogenic_param_cube(t).unwrap());
        let data = conductor(t).unwrap();
        prop_assert!((data.delta_value() % data.conductor_value()) == BigUint::from(0u32));
    }

    #[test]
    fn reflection_normalizes(t in -1_000_000i64..1_000_000) {
        let r = reduce_param(t);
        prop_assert!(r >= -1);
        prop_assert_eq!(reduce_param(r), r);
        prop_assert_eq!(reduce_param(-(t + 3)), r);
        let d = |s: i64| s * s + 3 * s + 9;
        prop_assert_eq!(d(t), d(r));
    }
}
