use metacover_core::characters::*;
use metacover_core::cyclotomic::CycloElement;
use metacover_core::groups::*;
use metacover_core::{BigInt, Rational};

fn specs() -> Vec<GroupSpec> {
    let mut v: Vec<GroupSpec> = [7u64, 13, 19, 31].iter().map(|&q| GroupSpec::gq3(q).unwrap()).collect();
    v.push(GroupSpec::gqn(11, 5, 3).unwrap());
    v.extend((3..=6).map(|m| GroupSpec::gm(m).unwrap()));
    v
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[test]
fn orthogonality_and_completeness() {
    for spec in specs() {
        let inv = irreducible_inventory(&spec).unwrap();
        assert_eq!(inv.complex.len(), inv.table.classes().len(), "{}", spec.label());
        assert_eq!(sum_of_squares(&inv) as u64, spec.order());
        for (i, x) in inv.complex.iter().enumerate() {
            assert!(x.rep.respects(&spec));
            for (j, y) in inv.complex.iter().enumerate() {
                let ip = inner_product(&x.character, &y.character).unwrap();
                assert_eq!(ip, int(i64::from(i == j)), "{} {}", x.label(), y.label());
            }
        }
        // column orthogonality: sum_chi |chi(g)|^2 = |C_G(g)|
        for class in inv.table.classes() {
            let g = class.representative;
            let s = inv.complex.iter().fold(CycloElement::zero(1), |acc, irr| {
                let v = irr.character.value(&g);
                acc + v * &v.conj()
            });
            let centralizer = spec.order() / class.size() as u64;
            assert_eq!(s, CycloElement::from_integer(1, centralizer as i64));
        }
    }
}

#[test]
fn rational_irreducibles_are_galois_orbits() {
    for spec in specs() {
        let inv = irreducible_inventory(&spec).unwrap();
        let mut seen = vec![0; inv.complex.len()];
        for w in &inv.rational {
            assert!(w.character.is_rational_valued());
            assert_eq!(w.constituents.len(), w.field_degree);
            for &c in &w.constituents {
                seen[c] += 1;
                assert_eq!(inv.complex[c].character.field_degree(), w.field_degree);
            }
        }
        assert!(seen.iter().all(|&s| s == 1));
    }
}

#[test]
fn frobenius_reciprocity() {
    for spec in specs() {
        let inv = irreducible_inventory(&spec).unwrap();
        let mut subs = vec![
            trivial_subgroup(&spec),
            subgroup_generated(&spec, &[spec.a()]),
            subgroup_generated(&spec, &[spec.b()]),
        ];
        subs.extend(spec.canonical_monodromy().iter().map(|g| subgroup_generated(&spec, &[*g])));
        for h in &subs {
            let ind = induced_trivial_character(&inv.table, h);
            assert_eq!(ind.degree() as u64, spec.order() / h.order());
            for irr in &inv.complex {
                // dim chi^H = (1/|H|) sum_{h in H} chi(h), computed here directly
                let s = h
                    .elements()
                    .iter()
                    .fold(CycloElement::zero(1), |acc, g| acc + irr.character.value(g));
                let direct = s.to_rational().unwrap() / int(h.order() as i64);
                assert_eq!(inner_product(&ind, &irr.character).unwrap(), direct);
                assert_eq!(int(fixed_dim(&irr.character, h).unwrap() as i64), direct);
            }
        }
    }
}

#[test]
fn h1_character_is_genuine_with_degree_twice_genus() {
    for spec in specs() {
        let inv = irreducible_inventory(&spec).unwrap();
        let mono = spec.canonical_monodromy();
        let chi = h1_character(&inv.table, 0, &mono).unwrap();
        let g = quotient_genus(&spec, 0, &mono, &trivial_subgroup(&spec)).unwrap();
        assert_eq!(chi.degree(), 2 * g as i64);
        assert!(is_genuine_character(&inv.decompose(&chi).unwrap()));
    }
}

#[test]
fn chi_y_is_w1_for_gm() {
    for m in 3..=7 {
        let spec = GroupSpec::gm(m).unwrap();
        let inv = irreducible_inventory(&spec).unwrap();
        let chi = h1_character(&inv.table, 0, &spec.canonical_monodromy()).unwrap();
        assert_eq!(chi.values(), inv.find_rational("W_1").unwrap().character.values(), "m = {m}");
    }
}

#[test]
fn decomposition_closed_form_for_gq3() {
    for q in [7u64, 13, 19] {
        let spec = GroupSpec::gq3(q).unwrap();
        let inv = irreducible_inventory(&spec).unwrap();
        let rep = verify_decomposition(&inv, &spec.canonical_monodromy()).unwrap();
        assert!(rep.agrees);
        assert_eq!((rep.r, rep.t, rep.orders.clone()), (2, 1, vec![3, 3]));
    }
}
