use metacover_core::arith::{gcd, units};
use metacover_core::cyclotomic::{
    certified_sign, certified_sign_at_precision, is_totally_positive, CycloElement, GaloisAuto, Sign,
};
use metacover_core::Rational;
use proptest::prelude::*;

const CONDUCTORS: [u64; 8] = [3, 4, 7, 8, 12, 13, 16, 21];

fn element(n: u64) -> impl Strategy<Value = CycloElement> {
    proptest::collection::vec((-5i64..6, 0i64..(n as i64), 1i64..4), 0..5).prop_map(move |terms| {
        terms.iter().fold(CycloElement::zero(n), |acc, &(c, e, d)| {
            acc + CycloElement::zeta_pow(n, e).scale(&Rational::new(c.into(), d.into()))
        })
    })
}

fn triple() -> impl Strategy<Value = (u64, CycloElement, CycloElement, CycloElement)> {
    proptest::sample::select(&CONDUCTORS[..])
        .prop_flat_map(|n| (Just(n), element(n), element(n), element(n)))
}

/// Floating value at `zeta = exp(2 pi i t / n)`.
fn numeric(x: &CycloElement, t: u64) -> (f64, f64) {
    let n = x.conductor();
    let mut re = 0.0;
    let mut im = 0.0;
    for (j, c) in x.coeffs().iter().enumerate() {
        let c = c.numer().to_string().parse::<f64>().unwrap() / c.denom().to_string().parse::<f64>().unwrap();
        let ang = 2.0 * std::f64::consts::PI * ((t * j as u64) % n) as f64 / n as f64;
        re += c * ang.cos();
        im += c * ang.sin();
    }
    (re, im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((_n, a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses((_n, a, _b, _c) in triple()) {
        if a.is_zero() {
            prop_assert!(a.inverse().is_err());
        } else {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn galois_is_a_ring_homomorphism((n, a, b, _c) in triple(), s in 1u64..64, t in 1u64..64) {
        prop_assume!(gcd(s, n) == 1 && gcd(t, n) == 1);
        let gs = |x: &CycloElement| x.galois(s).unwrap();
        prop_assert_eq!(gs(&(&a * &b)), &gs(&a) * &gs(&b));
        prop_assert_eq!(gs(&(&a + &b)), &gs(&a) + &gs(&b));
        // sigma_s sigma_t = sigma_st
        prop_assert_eq!(gs(&a.galois(t).unwrap()), a.galois((s * t) % n).unwrap());
        let auto = GaloisAuto::new(n, s).unwrap().compose(&GaloisAuto::new(n, t).unwrap());
        prop_assert_eq!(auto.exponent(), (s * t) % n);
        prop_assert_eq!(a.galois(n - 1).unwrap(), a.conj());
    }

    #[test]
    fn matches_floating_evaluation((_n, a, b, _c) in triple()) {
        let p = &a * &b;
        let (ar, ai) = numeric(&a, 1);
        let (br, bi) = numeric(&b, 1);
        let (pr, pi) = numeric(&p, 1);
        prop_assert!((pr - (ar * br - ai * bi)).abs() < 1e-6);
        prop_assert!((pi - (ar * bi + ai * br)).abs() < 1e-6);
    }

    #[test]
    fn certified_sign_agrees_with_floats((n, a, _b, _c) in triple()) {
        let r = &a + &a.conj();
        for t in units(n) {
            let (v, _) = numeric(&r, t);
            let s = certified_sign(&r, &GaloisAuto::new(n, t).unwrap()).unwrap();
            if v.abs() > 1e-6 {
                prop_assert_eq!(s, if v > 0.0 { Sign::Positive } else { Sign::Negative });
            }
        }
    }

    #[test]
    fn sign_is_stable_under_escalation((n, a, _b, _c) in triple()) {
        let r = &a + &a.conj();
        let id = GaloisAuto::identity(n);
        let exact = certified_sign(&r, &id).unwrap();
        for bits in [96u32, 160, 256, 512] {
            if let Some(s) = certified_sign_at_precision(&r, &id, bits).unwrap() {
                prop_assert_eq!(s, exact);
            }
        }
    }
}

#[test]
fn totally_positive_examples() {
    // 2 + zeta + zeta^-1 = |1 + zeta|^2 > 0 everywhere
    let z = CycloElement::zeta_pow(7, 1);
    let x = CycloElement::from_integer(7, 2) + &z + z.conj();
    assert!(is_totally_positive(&x).unwrap());
    let y = &z + &z.conj();
    assert!(!is_totally_positive(&y).unwrap());
    assert!(is_totally_positive(&z).is_err());
}

#[test]
fn promotion_across_conductors() {
    let i = CycloElement::zeta_pow(4, 1);
    let w = CycloElement::zeta_pow(3, 1);
    let p = &i * &w;
    assert_eq!(p.conductor(), 12);
    assert_eq!(p.pow(12).unwrap(), CycloElement::one(1));
    assert_eq!(CycloElement::zeta_pow(12, 3), i);
}
