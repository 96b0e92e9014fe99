use metacover_core::arith::mod_pow;
use metacover_core::groups::*;
use proptest::prelude::*;

fn specs() -> Vec<GroupSpec> {
    let mut v: Vec<GroupSpec> = [7u64, 13, 19].iter().map(|&q| GroupSpec::gq3(q).unwrap()).collect();
    v.push(GroupSpec::gqn(11, 5, 3).unwrap());
    v.extend((3..=5).map(|m| GroupSpec::gm(m).unwrap()));
    v
}

/// `a^i b^j` acting on `Z/ord(a)` as `x -> i + r^j x`.
fn affine(spec: &GroupSpec, g: &GroupElement) -> (u64, u64) {
    (g.i % spec.ord_a(), mod_pow(spec.twist(), g.j, spec.ord_a()))
}

fn compose(n: u64, f: (u64, u64), g: (u64, u64)) -> (u64, u64) {
    // f after g: x -> f.0 + f.1 (g.0 + g.1 x)
    ((f.0 + f.1 * g.0) % n, (f.1 * g.1) % n)
}

fn spec_and_elements() -> impl Strategy<Value = (GroupSpec, GroupElement, GroupElement, GroupElement)> {
    proptest::sample::select(specs()).prop_flat_map(|s| {
        let el = proptest::sample::select(s.elements());
        (Just(s), el.clone(), el.clone(), el)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_matches_affine_model((spec, x, y, z) in spec_and_elements()) {
        let n = spec.ord_a();
        prop_assert_eq!(affine(&spec, &spec.mul(&x, &y)), compose(n, affine(&spec, &x), affine(&spec, &y)));
        prop_assert_eq!(spec.mul(&spec.mul(&x, &y), &z), spec.mul(&x, &spec.mul(&y, &z)));
        prop_assert!(spec.mul(&x, &spec.inv(&x)).is_identity());
        prop_assert!(spec.pow(&x, spec.element_order(&x) as i64).is_identity());
        prop_assert_eq!(spec.exponent() % spec.element_order(&x), 0);
    }
}

#[test]
fn presentation_relations() {
    for spec in specs() {
        let (a, b) = (spec.a(), spec.b());
        assert_eq!(spec.element_order(&a), spec.ord_a());
        assert_eq!(spec.element_order(&b), spec.ord_b());
        let bab = spec.product(&[b, a, spec.inv(&b)]);
        assert_eq!(bab, spec.pow(&a, spec.twist() as i64));
        assert_eq!(spec.elements().len() as u64, spec.order());
    }
}

#[test]
fn class_equation_and_double_coset_totals() {
    for spec in specs() {
        let classes = conjugacy_classes(&spec);
        assert!(classes[0].representative.is_identity());
        let total: usize = classes.iter().map(|c| c.size()).sum();
        assert_eq!(total as u64, spec.order());
        let subs = [
            trivial_subgroup(&spec),
            subgroup_generated(&spec, &[spec.a()]),
            subgroup_generated(&spec, &[spec.b()]),
            subgroup_generated(&spec, &[spec.mul(&spec.a(), &spec.b())]),
        ];
        for h in &subs {
            for k in &subs {
                let dc = double_cosets(&spec, h, k);
                let covered: usize = dc.classes.iter().map(|c| c.len()).sum();
                assert_eq!(covered as u64, spec.order());
                let mut all: Vec<_> = dc.classes.iter().flatten().copied().collect();
                all.sort();
                all.dedup();
                assert_eq!(all.len() as u64, spec.order());
            }
        }
    }
}

#[test]
fn quotient_genera_of_both_families() {
    for q in [7u64, 13, 19, 31, 37, 43, 61] {
        let spec = GroupSpec::gq3(q).unwrap();
        let mono = spec.canonical_monodromy();
        let hb = subgroup_generated(&spec, &[spec.b()]);
        assert_eq!(quotient_genus(&spec, 0, &mono, &trivial_subgroup(&spec)), Ok((q - 1) / 2));
        assert_eq!(quotient_genus(&spec, 0, &mono, &hb), Ok((q - 1) / 6));
    }
    for m in 3..=7u32 {
        let spec = GroupSpec::gm(m).unwrap();
        let mono = spec.canonical_monodromy();
        let hb = subgroup_generated(&spec, &[spec.b()]);
        let z = subgroup_generated(&spec, &[spec.pow(&spec.a(), 1 << (m - 1))]);
        assert_eq!(quotient_genus(&spec, 0, &mono, &trivial_subgroup(&spec)), Ok(1 << (m - 2)));
        assert_eq!(quotient_genus(&spec, 0, &mono, &hb), Ok(1 << (m - 3)));
        assert_eq!(quotient_genus(&spec, 0, &mono, &z), Ok(0));
    }
}

#[test]
fn parameter_errors() {
    assert!(GroupSpec::gq3(11).is_err());
    assert!(GroupSpec::gq3(15).is_err());
    assert!(GroupSpec::gm(2).is_err());
    assert!(GroupSpec::gqn(7, 3, 3).is_err());
}
