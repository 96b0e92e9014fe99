use metacover_core::characters::irreducible_inventory;
use metacover_core::cmtypes::*;
use metacover_core::cyclotomic::Sign;
use metacover_core::groups::{find_twist_exponent, GroupSpec};

const QS: [u64; 7] = [7, 13, 19, 31, 37, 43, 61];

/// `sum sin(2 pi x / q)` over the orbit of `l`, in floating point.
fn beta_float(q: u64, k: u64, l: u64) -> f64 {
    [l, (k * l) % q, (k * k % q * l) % q]
        .iter()
        .map(|&x| (2.0 * std::f64::consts::PI * x as f64 / q as f64).sin())
        .sum()
}

#[test]
fn orbit_lemma() {
    for q in QS {
        let k = find_twist_exponent(q, 3).unwrap();
        assert_eq!(1 + k + (k * k) % q, q);
        let p = orbit_partition(q, k).unwrap();
        assert_eq!(p.s() as u64, (q - 1) / 3);
        assert_eq!(p.first_half().count() as u64, (q - 1) / 6);
        assert_eq!(p.second_half().count() as u64, (q - 1) / 6);
        // the other cube root gives the same orbits
        let other = orbit_partition_any(q, q - 1 - k).unwrap();
        let mut a: Vec<_> = p.orbits.iter().map(|o| { let mut e = o.elements.clone(); e.sort(); e }).collect();
        let mut b: Vec<_> = other.orbits.iter().map(|o| { let mut e = o.elements.clone(); e.sort(); e }).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}

#[test]
fn beta_signs_follow_orbits_and_floats() {
    for q in QS {
        let k = find_twist_exponent(q, 3).unwrap();
        let p = orbit_partition(q, k).unwrap();
        for l in 1..q {
            let s = beta_sign(q, k, l).unwrap();
            let first = p.orbit_of(l).unwrap().half == Half::First;
            assert_eq!(s == Sign::Positive, first, "q = {q}, l = {l}");
            let f = beta_float(q, k, l);
            assert_eq!(f > 0.0, s == Sign::Positive);
            assert_eq!(beta(q, k, q - l), -beta(q, k, l));
            assert_eq!(beta_sign(q, k, q - l).unwrap(), s.negate());
        }
    }
}

#[test]
fn chevalley_weil_and_cm_types() {
    for q in QS {
        let spec = GroupSpec::gq3(q).unwrap();
        let inv = irreducible_inventory(&spec).unwrap();
        let h0 = h0_decomposition(&inv).unwrap();
        assert!(h0.cw.consistent());
        assert_eq!(h0.cw.total as u64, (q - 1) / 2);
        assert_eq!(h0.components.len() as u64, (q - 1) / 6);
        let jx = cm_type_jx(&inv, &h0).unwrap();
        for t in [&h0.cm_type, &jx] {
            assert!(t.satisfies_axiom());
        }
        assert_eq!(jx.embeddings().len() as u64, (q - 1) / 6);
        let coset = is_primitive_coset(&jx);
        let st = is_primitive_st(&jx, &generator_alpha(&inv, &h0)).unwrap();
        assert!(coset.primitive && st.primitive && st.phi_is_positive_imaginary, "q = {q}");
    }
    for m in 3..=7u32 {
        let spec = GroupSpec::gm(m).unwrap();
        let inv = irreducible_inventory(&spec).unwrap();
        let h0 = h0_decomposition(&inv).unwrap();
        let n_u = 1u64 << (m - 3);
        for row in &h0.cw.rows {
            let want = row.label.strip_prefix("U_").map_or(0, |i| i64::from(i.parse::<u64>().unwrap() <= n_u));
            assert_eq!(row.multiplicity, want, "m = {m}, {}", row.label);
        }
        assert_eq!(h0.cw.total, 1 << (m - 2));
        let jx = cm_type_jx(&inv, &h0).unwrap();
        assert!(jx.satisfies_axiom() && h0.cm_type.satisfies_axiom());
        assert!(gm_simplicity(m).unwrap().simple);
    }
}

#[test]
fn q13_exponents() {
    let spec = GroupSpec::gq3(13).unwrap();
    let inv = irreducible_inventory(&spec).unwrap();
    let h0 = h0_decomposition(&inv).unwrap();
    assert_eq!(h0.cm_type.embeddings(), [1, 2, 3, 5, 6, 9]);
}

#[test]
fn cm_axiom_rejects_non_types() {
    assert!(CMType::new(7, &[1], &[1, 6]).is_err());
    assert!(CMType::new(7, &[1], &[1, 2]).is_err());
    assert!(CMType::new(7, &[1], &[1, 2, 4]).is_ok());
}

#[test]
fn signature_search_is_exhaustive() {
    for (n, p) in [(3, 3), (9, 8), (15, 10)] {
        assert!(signature_search(n, p, None).is_expected_family());
    }
    assert!(signature_search(15, 10, Some(13)).is_expected_family());
}
