use metacover_core::curves::*;
use metacover_core::cyclotomic::CycloElement;

fn int(v: i64) -> CycloElement {
    CycloElement::from_integer(1, v)
}

#[test]
fn m4_quotient_matches_reference_models() {
    let q = gm_quotient_model(4).unwrap();
    let inv = igusa_clebsch(&q.model.rhs).unwrap();
    let expected = [int(1836660096), int(28343520), int(9762768)];
    assert_eq!(inv.absolute(), [&expected[0], &expected[1], &expected[2]]);
    let sextic = igusa_clebsch(&reference_sextic()).unwrap();
    assert_eq!(sextic.absolute(), inv.absolute());
    assert!(isomorphism_check(&q.model.rhs, &reference_quintic()).unwrap());
    assert!(isomorphism_check(&reference_sextic(), &reference_quintic()).unwrap());
}

#[test]
fn all_tested_parameters_verify() {
    for q in [7, 13, 19, 31, 37, 43, 61] {
        verify_gq3_automorphisms(&gq3_model(q, None).unwrap()).unwrap();
    }
    for m in 3..=7 {
        verify_gm_automorphisms(&gm_model(m).unwrap()).unwrap();
        let qd = gm_quotient_model(m).unwrap();
        assert_eq!(qd.genus, 1 << (m - 3));
    }
}
