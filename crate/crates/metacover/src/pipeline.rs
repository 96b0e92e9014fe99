//! The per-family pipelines behind the subcommands.

use std::collections::BTreeSet;

use metacover_core::characters::{
    h1_character, induced_trivial_character, inner_product, irreducible_inventory,
    isotypic_dimensions, verify_decomposition, IrreducibleInventory,
};
use metacover_core::cmtypes::{
    beta, beta_sign, cm_type_jx, generator_alpha, gm_simplicity, h0_decomposition,
    is_primitive_coset, is_primitive_st, orbit_partition, signature_search, CMType,
    H0Decomposition, Half,
};
use metacover_core::curves::{
    gm_model, gm_quotient_model, gq3_model, igusa_clebsch, isomorphism_check, reference_quintic,
    reference_sextic, verify_gm_automorphisms, verify_gq3_automorphisms, CurveModel,
    IgusaInvariants, VerificationReport,
};
use metacover_core::cyclotomic::{CycloElement, Sign};
use metacover_core::groups::{
    double_cosets, quotient_genus, subgroup_generated, trivial_subgroup, GroupSpec, Subgroup,
};
use metacover_core::poly::Poly;
use metacover_core::{arith, Error, Rational};
use serde_json::{json, Value};

use crate::certificate::{Block, Certificate, Payload, Status};
use crate::serial::{cyclo_readable, poly, rational};

/// The three absolute invariants of the genus-2 quotient at `m = 4`.
pub const EXPECTED_IGUSA: [i64; 3] = [1836660096, 28343520, 9762768];

pub const IGUSA_CONVENTION: &str = "Clebsch transvectant invariants A, B, C, D with \
(f,g)_k = (m-k)!(n-k)!/(m!n!) sum_j (-1)^j C(k,j) d^k f/dx^(k-j)dz^j d^k g/dx^j dz^(k-j); \
I2 = -120A, I4 = -720A^2 + 6750B, I6 = 8640A^3 - 108000AB + 202500C, \
I10 = -62208A^5 + 972000A^3B + 1620000A^2C - 3037500AB^2 - 6075000BC - 4556250D; \
quintics are homogenized with a root at infinity";

/// Build a block from a computation returning `(verified, data)`.
fn block(name: &str, f: impl FnOnce() -> Result<(bool, Value), Error>) -> Block {
    match f() {
        Ok((ok, data)) => Block::new(name, ok, data),
        Err(e) => Block::failed(name, e),
    }
}

fn shared<T>(r: &Result<T, Error>) -> Result<&T, Error> {
    r.as_ref().map_err(Clone::clone)
}

/// Reject parameters that do not define a `G_{q,3}` covering.
pub fn validate_gq3(q: u64, k: Option<u64>) -> Result<u64, Error> {
    if !arith::is_prime(q) {
        return Err(Error::BadParameter(format!("q = {q} is not prime")));
    }
    if q % 3 != 1 {
        return Err(Error::BadParameter(format!(
            "q = {q} is not congruent to 1 mod 3, so no twist of order 3 exists"
        )));
    }
    let canonical = metacover_core::groups::find_twist_exponent(q, 3)?;
    match k {
        Some(k) if k != canonical => Err(Error::BadParameter(format!(
            "k = {k} is not the canonical twist {canonical} for q = {q}"
        ))),
        _ => Ok(canonical),
    }
}

pub fn validate_gm(m: u32) -> Result<(), Error> {
    if !(3..=20).contains(&m) {
        return Err(Error::BadParameter(format!("m = {m} must satisfy 3 <= m <= 20")));
    }
    Ok(())
}

fn monodromy_json(spec: &GroupSpec) -> Value {
    json!(spec
        .canonical_monodromy()
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>())
}

/// `g = 1 + |G|(-2 + sum (1 - 1/e)) / 2` from the branch orders alone.
fn riemann_hurwitz(spec: &GroupSpec) -> Rational {
    let order = Rational::from_integer(spec.order().into());
    let mut s = Rational::from_integer((-2).into());
    for g in spec.canonical_monodromy() {
        let e = spec.element_order(&g);
        s += Rational::from_integer(1.into()) - Rational::new(1.into(), e.into());
    }
    Rational::from_integer(1.into()) + order * s / Rational::from_integer(2.into())
}

fn cm_json(t: &CMType) -> Value {
    json!({
        "conductor": t.conductor(),
        "fixing_group": t.fixing(),
        "field_degree": t.field_degree(),
        "embeddings": t.embeddings(),
        "axiom": t.satisfies_axiom(),
    })
}

fn cw_rows(h0: &H0Decomposition) -> Value {
    json!(h0
        .cw
        .rows
        .iter()
        .map(|r| json!({
            "label": r.label,
            "degree": r.degree,
            "N": r.multiplicity,
            "conjugate": r.conjugate,
            "N_conjugate": r.conjugate_multiplicity,
            "h1_multiplicity": r.h1_multiplicity,
        }))
        .collect::<Vec<_>>())
}

fn report_json(r: &VerificationReport) -> Value {
    json!(r
        .checks
        .iter()
        .map(|c| json!({ "check": c.name, "detail": c.detail }))
        .collect::<Vec<_>>())
}

fn model_json(m: &CurveModel) -> Value {
    json!({
        "family": m.family.tag(),
        "conductor": m.conductor,
        "equation": m.equation(),
        "rhs": poly(&m.rhs, m.base_var),
        "aux": m.aux.iter().map(|(k, v)| (k.clone(), json!(v))).collect::<serde_json::Map<_, _>>(),
        "automorphisms": m.automorphisms.iter().map(|a| json!({
            "name": a.name,
            "map": a.map.to_expr(),
        })).collect::<Vec<_>>(),
        "tower": m.tower,
    })
}

fn primitivity_block(
    inv: &Result<IrreducibleInventory, Error>,
    h0: &Result<H0Decomposition, Error>,
    jx: &Result<CMType, Error>,
) -> Block {
    block("primitivity", || {
        let (inv, h0, jx) = (shared(inv)?, shared(h0)?, shared(jx)?);
        let coset = is_primitive_coset(jx);
        let alpha = generator_alpha(inv, h0);
        let st = is_primitive_st(jx, &alpha)?;
        let agree = coset.primitive == st.primitive;
        Ok((
            coset.primitive && st.primitive && agree && st.phi_is_positive_imaginary,
            json!({
                "generator": cyclo_readable(&alpha),
                "coset_oracle": {
                    "primitive": coset.primitive,
                    "witness": coset.witness,
                    "subgroups_examined": coset.examined,
                },
                "st_oracle": {
                    "primitive": st.primitive,
                    "stabilizers_equal": st.condition_i,
                    "no_totally_positive_ratio": st.condition_ii,
                    "phi_is_positive_imaginary": st.phi_is_positive_imaginary,
                    "conjugates_checked": st.conjugates_checked,
                },
                "oracles_agree": agree,
            }),
        ))
    })
}

/// The full `G_{q,3}` pipeline. Errors only for invalid parameters.
pub fn run_gq3(q: u64, k: Option<u64>) -> Result<Certificate, Error> {
    let k_canon = validate_gq3(q, k)?;
    let command = match k {
        Some(k) => format!("gq3 --q {q} --k {k}"),
        None => format!("gq3 --q {q}"),
    };
    let spec = GroupSpec::gq3(q)?;
    let mono = spec.canonical_monodromy();
    let h_b = subgroup_generated(&spec, &[spec.b()]);
    let g_y = (q - 1) / 2;
    let g_x = (q - 1) / 6;
    let s = (q - 1) / 3;
    let mut blocks = Vec::new();

    blocks.push(block("genus", || {
        let gy = quotient_genus(&spec, 0, &mono, &trivial_subgroup(&spec))?;
        let gx = quotient_genus(&spec, 0, &mono, &h_b)?;
        let rh = riemann_hurwitz(&spec);
        let ok = gy == g_y && gx == g_x && rh == Rational::from_integer(g_y.into());
        Ok((
            ok,
            json!({
                "group_order": spec.order(),
                "monodromy": monodromy_json(&spec),
                "g_Y": gy,
                "g_X": gx,
                "X": "Y/<b>",
                "riemann_hurwitz_g_Y": rational(&rh),
                "expected": { "g_Y": g_y, "g_X": g_x },
            }),
        ))
    }));

    let inv = irreducible_inventory(&spec);
    blocks.push(block("character", || {
        let inv = shared(&inv)?;
        let chi = h1_character(&inv.table, 0, &mono)?;
        let rep = verify_decomposition(inv, &mono)?;
        let ok = rep.agrees && chi.degree() == 2 * g_y as i64;
        Ok((
            ok,
            json!({
                "degree_chi_Y": chi.degree(),
                "r": rep.r,
                "t": rep.t,
                "orders": rep.orders,
                "rows": rep.rows.iter().map(|r| json!({
                    "label": r.label,
                    "computed": rational(&r.computed),
                    "closed_form": r.closed_form,
                })).collect::<Vec<_>>(),
                "agrees": rep.agrees,
            }),
        ))
    }));

    blocks.push(block("double_cosets", || {
        let inv = shared(&inv)?;
        let chi_h = induced_trivial_character(&inv.table, &h_b);
        let dim = inner_product(&chi_h, &chi_h)?;
        let count = double_cosets(&spec, &h_b, &h_b).count() as u64;
        let expected = 1 + s;
        let ok = dim == Rational::from_integer(expected.into()) && count == expected;
        Ok((
            ok,
            json!({
                "H": "<b>",
                "hecke_dimension": rational(&dim),
                "double_coset_count": count,
                "expected": expected,
            }),
        ))
    }));

    let partition = orbit_partition(q, k_canon);
    blocks.push(block("orbits", || {
        let p = shared(&partition)?;
        let k2 = (k_canon * k_canon) % q;
        let first = p.first_half().count() as u64;
        let second = p.second_half().count() as u64;
        let ok = 1 + k_canon + k2 == q && first == g_x && second == g_x && p.s() as u64 == s;
        Ok((
            ok,
            json!({
                "k": k_canon,
                "k2_mod_q": k2,
                "one_plus_k_plus_k2": 1 + k_canon + k2,
                "boundary": (q - 1) / 2,
                "orbits": p.orbits.iter().map(|o| json!({
                    "elements": o.elements,
                    "sum": o.sum,
                    "half": if o.half == Half::First { "first" } else { "second" },
                    "small_count": o.small_count,
                    "has_boundary": o.has_boundary,
                })).collect::<Vec<_>>(),
                "first_half_count": first,
                "second_half_count": second,
            }),
        ))
    }));

    blocks.push(block("beta_signs", || {
        let p = shared(&partition)?;
        let mut signs = Vec::new();
        let mut ok = true;
        for l in 1..q {
            let sg = beta_sign(q, k_canon, l)?;
            let half = p
                .orbit_of(l)
                .ok_or_else(|| Error::Inconsistent(format!("{l} lies in no orbit")))?
                .half;
            let expect = if half == Half::First { Sign::Positive } else { Sign::Negative };
            let antisym = beta(q, k_canon, q - l) == -beta(q, k_canon, l);
            ok &= sg == expect && antisym;
            signs.push(json!({
                "l": l,
                "sign": sg.as_i8(),
                "half": if half == Half::First { "first" } else { "second" },
                "antisymmetric": antisym,
            }));
        }
        Ok((ok, json!({ "embedding": "zeta_q = exp(2 pi i/q)", "betas": signs })))
    }));

    let h0 = shared(&inv).and_then(h0_decomposition);
    blocks.push(block("chevalley_weil", || {
        let (inv, h0, p) = (shared(&inv)?, shared(&h0)?, shared(&partition)?);
        let first: BTreeSet<Vec<u64>> = p
            .first_half()
            .map(|o| {
                let mut e = o.elements.clone();
                e.sort();
                e
            })
            .collect();
        let mut ok = h0.cw.consistent() && h0.cw.total == g_y as i64;
        for (irr, row) in inv.complex.iter().zip(&h0.cw.rows) {
            let want = i64::from(first.contains(&irr.a_exponents));
            ok &= row.multiplicity == want;
        }
        Ok((
            ok,
            json!({
                "rows": cw_rows(h0),
                "sum_N_deg": h0.cw.total,
                "g_Y": h0.cw.genus,
            }),
        ))
    }));

    let jx = match (&inv, &h0) {
        (Ok(inv), Ok(h0)) => cm_type_jx(inv, h0),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    blocks.push(block("cm_type", || {
        let (h0, jx) = (shared(&h0)?, shared(&jx)?);
        let ok = h0.cm_type.satisfies_axiom()
            && jx.satisfies_axiom()
            && jx.embeddings().len() as u64 == g_x
            && h0.cm_type.embeddings().len() as u64 == g_y;
        Ok((
            ok,
            json!({
                "JY": cm_json(&h0.cm_type),
                "JX": cm_json(jx),
                "components": h0.components.iter().map(|(l, _)| l.clone()).collect::<Vec<_>>(),
            }),
        ))
    }));

    blocks.push(primitivity_block(&inv, &h0, &jx));

    blocks.push(block("isotypic", || {
        let inv = shared(&inv)?;
        let chi = h1_character(&inv.table, 0, &mono)?;
        let stabs: Vec<Subgroup> = mono.iter().map(|g| subgroup_generated(&spec, &[*g])).collect();
        let rows = isotypic_dimensions(inv, &chi, &stabs)?;
        let total: i64 = rows.iter().map(|r| r.power * r.dim_b).sum();
        let b1 = rows.iter().find(|r| r.dim_chi == 1 && r.label != "chi_0");
        let bv: Vec<_> = rows.iter().filter(|r| r.dim_b > 0).collect();
        let ok = total == g_y as i64
            && b1.is_some_and(|r| r.dim_b == 0)
            && bv.len() == 1
            && bv[0].power == 3
            && bv[0].dim_b == g_x as i64
            && rows
                .iter()
                .all(|r| Rational::from_integer(r.dim_b.into()) == r.dim_b_from_h1 || r.label == "chi_0");
        Ok((
            ok,
            json!({
                "rows": rows.iter().map(|r| json!({
                    "label": r.label,
                    "field_degree": r.field_degree,
                    "dim_chi": r.dim_chi,
                    "h1_multiplicity": r.h1_multiplicity,
                    "dim_B": r.dim_b,
                    "dim_B_from_h1": rational(&r.dim_b_from_h1),
                    "power": r.power,
                })).collect::<Vec<_>>(),
                "decomposition": "JY ~ JX^3",
                "dim_B1": b1.map(|r| r.dim_b),
                "sum_power_dim": total,
            }),
        ))
    }));

    blocks.push(block("curve", || {
        let model = gq3_model(q, k)?;
        let report = verify_gq3_automorphisms(&model)?;
        Ok((true, json!({ "model": model_json(&model), "checks": report_json(&report) })))
    }));

    let params = json!({ "q": q, "k": k_canon });
    Ok(Certificate::seal(Payload::new(command, "G_{q,3}", params, blocks)))
}

fn igusa_json(inv: &IgusaInvariants) -> Value {
    json!({
        "I2": cyclo_readable(&inv.i2),
        "I4": cyclo_readable(&inv.i4),
        "I6": cyclo_readable(&inv.i6),
        "I10": cyclo_readable(&inv.i10),
        "i1": cyclo_readable(&inv.abs1),
        "i2": cyclo_readable(&inv.abs2),
        "i3": cyclo_readable(&inv.abs3),
    })
}

fn matches_expected(inv: &IgusaInvariants) -> bool {
    inv.absolute()
        .iter()
        .zip(EXPECTED_IGUSA)
        .all(|(x, e)| **x == CycloElement::from_integer(1, e))
}

/// Invariants of every Galois conjugate of the model.
fn galois_stable(rhs: &Poly, base: &IgusaInvariants) -> Result<bool, Error> {
    let n = rhs.conductor();
    for t in arith::units(n) {
        let conj = igusa_clebsch(&rhs.galois(n, t)?)?;
        if conj.absolute() != base.absolute() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The full `G_m` pipeline; `igusa` adds the genus-2 comparison at `m = 4`.
pub fn run_gm(m: u32, igusa: bool) -> Result<Certificate, Error> {
    validate_gm(m)?;
    if igusa && m != 4 {
        return Err(Error::BadParameter(format!(
            "--igusa needs a genus-2 quotient, which only m = 4 gives (m = {m})"
        )));
    }
    let command = if igusa {
        format!("gm --m {m} --igusa")
    } else {
        format!("gm --m {m}")
    };
    let spec = GroupSpec::gm(m)?;
    let mono = spec.canonical_monodromy();
    let g_y = 1u64 << (m - 2);
    let g_x = 1u64 << (m - 3);
    let big_n = 1i64 << (m - 1);
    let h_b = subgroup_generated(&spec, &[spec.b()]);
    let center = subgroup_generated(&spec, &[spec.pow(&spec.a(), big_n)]);
    let mut blocks = Vec::new();

    blocks.push(block("genus", || {
        let gy = quotient_genus(&spec, 0, &mono, &trivial_subgroup(&spec))?;
        let gx = quotient_genus(&spec, 0, &mono, &h_b)?;
        let gz = quotient_genus(&spec, 0, &mono, &center)?;
        let rh = riemann_hurwitz(&spec);
        let ok = gy == g_y && gx == g_x && gz == 0 && rh == Rational::from_integer(g_y.into());
        Ok((
            ok,
            json!({
                "group_order": spec.order(),
                "monodromy": monodromy_json(&spec),
                "g_Y": gy,
                "g_X": gx,
                "X": "Y/<b>",
                "g_Y_mod_Z": gz,
                "Z": format!("<a^{big_n}>"),
                "riemann_hurwitz_g_Y": rational(&rh),
                "expected": { "g_Y": g_y, "g_X": g_x, "g_Y_mod_Z": 0 },
            }),
        ))
    }));

    let inv = irreducible_inventory(&spec);
    blocks.push(block("character", || {
        let inv = shared(&inv)?;
        let chi = h1_character(&inv.table, 0, &mono)?;
        let w1 = inv
            .find_rational("W_1")
            .ok_or_else(|| Error::Inconsistent("W_1 missing".to_string()))?;
        let ok = chi.values() == w1.character.values();
        let mults = inv.decompose(&chi)?;
        Ok((
            ok,
            json!({
                "degree_chi_Y": chi.degree(),
                "chi_Y_equals_W_1": ok,
                "W_1_constituents": w1.constituents.iter().map(|&i| inv.complex[i].label()).collect::<Vec<_>>(),
                "multiplicities": inv.complex.iter().zip(&mults)
                    .filter(|(_, m)| **m != Rational::from_integer(0.into()))
                    .map(|(irr, m)| json!({ "label": irr.label(), "multiplicity": rational(m) }))
                    .collect::<Vec<_>>(),
            }),
        ))
    }));

    let h0 = shared(&inv).and_then(h0_decomposition);
    blocks.push(block("chevalley_weil", || {
        let h0 = shared(&h0)?;
        let mut ok = h0.cw.consistent() && h0.cw.total == g_y as i64;
        for row in &h0.cw.rows {
            let want = match row.label.strip_prefix("U_") {
                Some(i) => i64::from(i.parse::<u64>().is_ok_and(|i| (1..=g_x).contains(&i))),
                None => 0,
            };
            ok &= row.multiplicity == want;
        }
        Ok((
            ok,
            json!({ "rows": cw_rows(h0), "sum_N_deg": h0.cw.total, "g_Y": h0.cw.genus }),
        ))
    }));

    let jx = match (&inv, &h0) {
        (Ok(inv), Ok(h0)) => cm_type_jx(inv, h0),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    blocks.push(block("cm_type", || {
        let (h0, jx) = (shared(&h0)?, shared(&jx)?);
        let ok = h0.cm_type.satisfies_axiom()
            && jx.satisfies_axiom()
            && jx.embeddings().len() as u64 == g_x
            && jx.field_degree() as u64 == g_y;
        Ok((
            ok,
            json!({
                "JY": cm_json(&h0.cm_type),
                "JX": cm_json(jx),
                "K_V_degree": jx.field_degree(),
                "components": h0.components.iter().map(|(l, _)| l.clone()).collect::<Vec<_>>(),
            }),
        ))
    }));

    blocks.push(primitivity_block(&inv, &h0, &jx));

    blocks.push(block("simplicity", || {
        let s = gm_simplicity(m)?;
        Ok((
            s.simple,
            json!({
                "field": format!("Q(zeta({0}) + zeta({0})^{1})", 1u64 << m, spec.twist()),
                "generator": "sigma: xi -> xi^5",
                "conjugation_is_unique_involution": s.conjugation_is_unique_involution,
                "lattice": s.lattice.iter().map(|e| json!({
                    "j": e.j,
                    "subgroup_order": e.subgroup_order,
                    "contains_conjugation": e.contains_conjugation,
                    "fixed_degree": e.fixed_degree,
                    "period_is_real": e.period_is_real,
                })).collect::<Vec<_>>(),
                "every_proper_subfield_real": s.simple,
            }),
        ))
    }));

    blocks.push(block("isotypic", || {
        let inv = shared(&inv)?;
        let chi = h1_character(&inv.table, 0, &mono)?;
        let stabs: Vec<Subgroup> = mono.iter().map(|g| subgroup_generated(&spec, &[*g])).collect();
        let rows = isotypic_dimensions(inv, &chi, &stabs)?;
        let total: i64 = rows.iter().map(|r| r.power * r.dim_b).sum();
        let nonzero: Vec<_> = rows.iter().filter(|r| r.dim_b > 0).collect();
        let ok = total == g_y as i64
            && nonzero.len() == 1
            && nonzero[0].label == "W_1"
            && nonzero[0].power == 2
            && nonzero[0].dim_b == g_x as i64;
        Ok((
            ok,
            json!({
                "rows": rows.iter().filter(|r| r.h1_multiplicity != 0 || r.dim_b != 0).map(|r| json!({
                    "label": r.label,
                    "field_degree": r.field_degree,
                    "dim_chi": r.dim_chi,
                    "h1_multiplicity": r.h1_multiplicity,
                    "dim_B": r.dim_b,
                    "power": r.power,
                })).collect::<Vec<_>>(),
                "decomposition": "JY ~ JX^2",
                "sum_power_dim": total,
            }),
        ))
    }));

    blocks.push(block("curve", || {
        let model = gm_model(m)?;
        let report = verify_gm_automorphisms(&model)?;
        let quotient = gm_quotient_model(m)?;
        let ok = model.hyperelliptic_genus() == Some(g_y) && quotient.genus == g_x;
        Ok((
            ok,
            json!({
                "model": model_json(&model),
                "genus": model.hyperelliptic_genus(),
                "checks": report_json(&report),
                "quotient": {
                    "model": model_json(&quotient.model),
                    "f": format!("({}) / ({})", quotient.f_num.to_expr("x"), quotient.f_den.to_expr("x")),
                    "branch_values": quotient.branch_values.iter().map(cyclo_readable).collect::<Vec<_>>(),
                    "genus": quotient.genus,
                    "checks": report_json(&quotient.report),
                },
            }),
        ))
    }));

    if igusa {
        blocks.push(block("igusa", || {
            let quotient = gm_quotient_model(m)?;
            let ours = igusa_clebsch(&quotient.model.rhs)?;
            let sextic = igusa_clebsch(&reference_sextic())?;
            let quintic = igusa_clebsch(&reference_quintic())?;
            let iso_qs = isomorphism_check(&quotient.model.rhs, &reference_sextic())?;
            let iso_qv = isomorphism_check(&quotient.model.rhs, &reference_quintic())?;
            let iso_sv = isomorphism_check(&reference_sextic(), &reference_quintic())?;
            let stable = galois_stable(&quotient.model.rhs, &ours)?;
            let ok = matches_expected(&ours)
                && matches_expected(&sextic)
                && matches_expected(&quintic)
                && iso_qs
                && iso_qv
                && iso_sv
                && stable;
            Ok((
                ok,
                json!({
                    "convention": IGUSA_CONVENTION,
                    "quotient": igusa_json(&ours),
                    "reference_sextic": {
                        "rhs": poly(&reference_sextic(), "u"),
                        "invariants": igusa_json(&sextic),
                    },
                    "vw_quintic": {
                        "rhs": poly(&reference_quintic(), "x"),
                        "invariants": igusa_json(&quintic),
                    },
                    "expected": EXPECTED_IGUSA.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "isomorphic_quotient_sextic": iso_qs,
                    "isomorphic_to_vw": iso_qv,
                    "isomorphic_sextic_vw": iso_sv,
                    "galois_invariant": stable,
                }),
            ))
        }));
    }

    let params = json!({ "m": m, "d": spec.twist(), "igusa": igusa });
    Ok(Certificate::seal(Payload::new(command, "G_m", params, blocks)))
}

/// Exhaustive signature classification.
pub fn run_search(n_max: u64, points_max: usize, q: Option<u64>) -> Certificate {
    let mut command = format!("search --n-max {n_max} --points-max {points_max}");
    if let Some(q) = q {
        command.push_str(&format!(" --q {q}"));
    }
    let res = signature_search(n_max, points_max, q);
    let ok = res.is_expected_family();
    let blk = Block::new(
        "signature_search",
        ok,
        json!({
            "equation": "sum_j n/n_j = n(r + t - 2) - 1",
            "solutions": res.solutions.iter().map(|s| json!({
                "n": s.n, "r": s.r, "t": s.t, "orders": s.orders,
            })).collect::<Vec<_>>(),
            "candidates": res.candidates,
            "expected_family_only": ok,
        }),
    );
    let params = json!({ "n_max": n_max, "points_max": points_max, "q": q });
    Certificate::seal(Payload::new(command, "search", params, vec![blk]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Instance {
    Gq3(u64),
    Gm(u32),
}

impl Instance {
    pub fn name(self) -> String {
        match self {
            Instance::Gq3(q) => format!("gq3 q={q}"),
            Instance::Gm(m) => format!("gm m={m}"),
        }
    }

    pub fn run(self) -> Result<Certificate, Error> {
        match self {
            Instance::Gq3(q) => run_gq3(q, None),
            Instance::Gm(m) => run_gm(m, false),
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Runs every instance on its own thread; the table is sorted by instance.
pub fn run_verify(qs: &[u64], ms: &[u32]) -> Certificate {
    let mut instances: Vec<Instance> = qs
        .iter()
        .map(|&q| Instance::Gq3(q))
        .chain(ms.iter().map(|&m| Instance::Gm(m)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    instances.sort();
    let results: Vec<(Instance, Result<Certificate, Error>)> = std::thread::scope(|s| {
        let handles: Vec<_> = instances
            .iter()
            .map(|&inst| (inst, s.spawn(move || inst.run())))
            .collect();
        handles
            .into_iter()
            .map(|(inst, h)| {
                let r = h
                    .join()
                    .unwrap_or_else(|_| Err(Error::Inconsistent("worker panicked".to_string())));
                (inst, r)
            })
            .collect()
    });
    let blocks = results
        .iter()
        .map(|(inst, r)| match r {
            Ok(cert) => {
                let failed: Vec<&str> = cert
                    .payload
                    .blocks
                    .iter()
                    .filter(|b| b.status != Status::Verified)
                    .map(|b| b.name.as_str())
                    .collect();
                Block::new(
                    &inst.name(),
                    cert.is_verified(),
                    json!({
                        "overall": cert.payload.overall,
                        "blocks": cert.payload.blocks.len(),
                        "failed_blocks": failed,
                        "payload_sha256": cert.payload_sha256,
                    }),
                )
            }
            Err(e) => Block::failed(&inst.name(), e),
        })
        .collect();
    let mut command = String::from("verify");
    if !qs.is_empty() {
        command.push_str(&format!(" --q-list {}", join(qs)));
    }
    if !ms.is_empty() {
        command.push_str(&format!(" --m-list {}", join(ms)));
    }
    let params = json!({ "q_list": qs, "m_list": ms });
    Certificate::seal(Payload::new(command, "batch", params, blocks))
}
