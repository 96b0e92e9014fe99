use metacover_core::curves::igusa::{igusa_clebsch, isomorphism_check, rescaled};
use metacover_core::curves::{gm_quotient_model, reference_quintic, reference_sextic};
use metacover_core::cyclotomic::CycloElement;
use metacover_core::poly::Poly;
use metacover_core::{BigInt, Error, Rational};
use proptest::prelude::*;

type Root = (i64, i64);

fn d(r: &[Root], i: usize, j: usize) -> BigInt {
    BigInt::from(r[i].0 * r[j].1 - r[j].0 * r[i].1)
}

fn matchings(s: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if s.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in 1..s.len() {
        let rest: Vec<usize> = s[1..].iter().copied().filter(|&t| t != s[k]).collect();
        for mut m in matchings(&rest) {
            m.insert(0, (s[0], s[k]));
            out.push(m);
        }
    }
    out
}

fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Root-difference definitions for `c * prod (b x - a z)`.
fn root_invariants(c: i64, r: &[Root]) -> [BigInt; 4] {
    let idx: Vec<usize> = (0..6).collect();
    let i2: BigInt = matchings(&idx)
        .iter()
        .map(|m| m.iter().map(|&(a, b)| d(r, a, b).pow(2)).product::<BigInt>())
        .sum();
    let tri = |t: &[usize]| d(r, t[0], t[1]) * d(r, t[1], t[2]) * d(r, t[2], t[0]);
    let mut i4 = BigInt::from(0);
    let mut i6 = BigInt::from(0);
    for a in 1..6 {
        for b in a + 1..6 {
            let t = [0, a, b];
            let u: Vec<usize> = idx.iter().copied().filter(|x| !t.contains(x)).collect();
            let base = tri(&t) * tri(&u);
            i4 += base.pow(2);
            for p in permutations(&u) {
                let cross = d(r, t[0], p[0]) * d(r, t[1], p[1]) * d(r, t[2], p[2]);
                i6 += (&base * cross).pow(2);
            }
        }
    }
    let mut i10 = BigInt::from(1);
    for i in 0..6 {
        for j in i + 1..6 {
            i10 *= d(r, i, j).pow(2);
        }
    }
    let c = BigInt::from(c);
    [i2 * c.pow(2), i4 * c.pow(4), i6 * c.pow(6), i10 * c.pow(10)]
}

fn form(c: i64, r: &[Root]) -> Poly {
    r.iter().fold(Poly::from_ints(1, &[c]), |acc, &(a, b)| &acc * &Poly::from_ints(1, &[-a, b]))
}

fn int(v: &BigInt) -> CycloElement {
    CycloElement::from_bigint(1, v.clone())
}

fn distinct_roots() -> impl Strategy<Value = (i64, Vec<Root>)> {
    (
        1i64..4,
        proptest::collection::btree_set(-6i64..7, 5),
        prop_oneof![Just((1i64, 0i64)), (-6i64..7).prop_map(|a| (a, 1)), Just((1, 2)), Just((3, 2))],
    )
        .prop_filter_map("distinct projective roots", |(c, affine, extra)| {
            let mut r: Vec<Root> = affine.into_iter().map(|a| (a, 1)).collect();
            if r.iter().any(|&(a, b)| a * extra.1 == extra.0 * b) {
                return None;
            }
            r.push(extra);
            Some((c, r))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transvectants_match_root_differences((c, roots) in distinct_roots()) {
        let inv = igusa_clebsch(&form(c, &roots)).unwrap();
        let want = root_invariants(c, &roots);
        prop_assert_eq!(&inv.i2, &int(&want[0]));
        prop_assert_eq!(&inv.i4, &int(&want[1]));
        prop_assert_eq!(&inv.i6, &int(&want[2]));
        prop_assert_eq!(&inv.i10, &int(&want[3]));
    }

    #[test]
    fn absolute_invariants_survive_rescaling(
        cn in 1i64..20, cd in 1i64..20, kn in -20i64..20, kd in 1i64..20, twist in 0i64..16,
    ) {
        prop_assume!(kn != 0);
        let c = CycloElement::from_rational(16, &Rational::new(cn.into(), cd.into()))
            * CycloElement::zeta_pow(16, twist);
        let k = CycloElement::from_rational(16, &Rational::new(kn.into(), kd.into()));
        let p = reference_sextic();
        let q = rescaled(&p, &c, &k);
        prop_assert!(isomorphism_check(&p, &q).unwrap());
    }
}

#[test]
fn reference_models_share_the_published_triple() {
    let want = [1836660096i64, 28343520, 9762768].map(|v| CycloElement::from_integer(1, v));
    let quotient = gm_quotient_model(4).unwrap().model.rhs;
    for p in [quotient.clone(), reference_sextic(), reference_quintic()] {
        let inv = igusa_clebsch(&p).unwrap();
        assert_eq!(inv.absolute(), [&want[0], &want[1], &want[2]]);
        assert!(!inv.i10.is_zero());
    }
    assert!(isomorphism_check(&quotient, &reference_sextic()).unwrap());
}

#[test]
fn non_isomorphic_and_singular_models() {
    let other = Poly::from_ints(1, &[-1, 0, 0, 0, 0, 0, 1]);
    assert!(!isomorphism_check(&reference_sextic(), &other).unwrap());
    let u6 = Poly::monomial(CycloElement::one(1), 6);
    assert_eq!(igusa_clebsch(&u6), Err(Error::SingularModel));
    let doubled = form(1, &[(1, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1)]);
    assert_eq!(igusa_clebsch(&doubled), Err(Error::SingularModel));
}

#[test]
fn quotient_invariants_are_galois_stable() {
    let p = gm_quotient_model(4).unwrap().model.rhs;
    let base = igusa_clebsch(&p).unwrap();
    for t in [3, 5, 7, 9, 11, 13, 15] {
        let conj = igusa_clebsch(&p.galois(16, t).unwrap()).unwrap();
        assert_eq!(conj.absolute(), base.absolute());
    }
}
