//! Orbit arithmetic, Chevalley-Weil multiplicities, CM-types and primitivity.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{closure_mod, is_prime, mod_mul, mod_pow, units};
use crate::characters::{
    frac, inner_product, h1_character, IrreducibleInventory, MonomialRep,
};
use crate::cyclotomic::{certified_sign, is_totally_positive, CycloElement, GaloisAuto, Sign};
use crate::groups::{
    quotient_genus, trivial_subgroup, Family, GroupElement, GroupSpec,
};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Half {
    /// Orbit sum `q`.
    First,
    /// Orbit sum `2q`.
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// `[l, [k l], [k^2 l]]` starting from the least element.
    pub elements: Vec<u64>,
    pub sum: u64,
    pub half: Half,
    /// How many elements are `< (q-1)/2`.
    pub small_count: usize,
    /// Whether `(q-1)/2` itself lies in the orbit.
    pub has_boundary: bool,
}

impl Orbit {
    pub fn representative(&self) -> u64 {
        self.elements[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub q: u64,
    pub k: u64,
    /// Sorted by representative.
    pub orbits: Vec<Orbit>,
}

impl OrbitPartition {
    /// `s = (q-1)/3`
    pub fn s(&self) -> usize {
        self.orbits.len()
    }

    pub fn first_half(&self) -> impl Iterator<Item = &Orbit> {
        self.orbits.iter().filter(|o| o.half == Half::First)
    }

    pub fn second_half(&self) -> impl Iterator<Item = &Orbit> {
        self.orbits.iter().filter(|o| o.half == Half::Second)
    }

    /// The orbit containing `l`.
    pub fn orbit_of(&self, l: u64) -> Option<&Orbit> {
        self.orbits.iter().find(|o| o.elements.contains(&l))
    }

    /// Whether `(q-1)/2` falls inside some orbit.
    pub fn boundary_occurs(&self) -> bool {
        self.orbits.iter().any(|o| o.has_boundary)
    }
}

/// The orbits `O_l = {l, [kl], [k^2 l]}` of `<k>` on `1..q-1`, classified by their sum.
/// Requires the canonical twist `2 <= k <= (q-1)/2`.
pub fn orbit_partition(q: u64, k: u64) -> Result<OrbitPartition> {
    if !(is_prime(q) && q > 3 && 2 <= k && 2 * k < q) {
        return Err(Error::BadTwist { q, k });
    }
    orbit_partition_any(q, k)
}

/// As [`orbit_partition`] but accepting either nontrivial cube root of unity.
pub fn orbit_partition_any(q: u64, k: u64) -> Result<OrbitPartition> {
    if !is_prime(q) || k <= 1 || k >= q || mod_pow(k, 3, q) != 1 {
        return Err(Error::BadTwist { q, k });
    }
    let mut seen = vec![false; q as usize];
    let mut orbits = Vec::new();
    let boundary = (q - 1) / 2;
    for l in 1..q {
        if seen[l as usize] {
            continue;
        }
        let elements = vec![l, mod_mul(k, l, q), mod_mul(mod_mul(k, k, q), l, q)];
        for &x in &elements {
            seen[x as usize] = true;
        }
        let sum: u64 = elements.iter().sum();
        let half = if sum == q {
            Half::First
        } else if sum == 2 * q {
            Half::Second
        } else {
            return Err(Error::Inconsistent(format!("orbit {elements:?} has sum {sum}")));
        };
        let small_count = elements.iter().filter(|&&x| x < boundary).count();
        let has_boundary = elements.contains(&boundary);
        // Away from the boundary element the count criterion must agree with the sum.
        if !has_boundary && (small_count >= 2) != (half == Half::First) {
            return Err(Error::Inconsistent(format!(
                "orbit {elements:?}: count criterion disagrees with sum {sum}"
            )));
        }
        orbits.push(Orbit {
            elements,
            sum,
            half,
            small_count,
            has_boundary,
        });
    }
    Ok(OrbitPartition { q, k, orbits })
}

/// `alpha_l = zeta_q^l + zeta_q^(kl) + zeta_q^(k^2 l)`.
pub fn alpha(q: u64, k: u64, l: u64) -> CycloElement {
    let exps = [l, mod_mul(k, l, q), mod_mul(mod_mul(k, k, q), l, q)];
    CycloElement::from_exponents(q, &exps.map(|e| (1, e as i64)))
}

/// `beta_l = sum of sin(2 pi x / q)` over `O_l`, as the exact real element
/// `-i (alpha_l - conj(alpha_l)) / 2` of `Q(zeta_4q)`.
pub fn beta(q: u64, k: u64, l: u64) -> CycloElement {
    let a = alpha(q, k, l);
    let mu = &a - &a.conj();
    let minus_i_half = CycloElement::zeta_pow(4, 3).scale(&Rational::new(1.into(), 2.into()));
    &mu * &minus_i_half
}

/// Certified sign of `beta_l` at `zeta_q = exp(2 pi i / q)`; never zero.
pub fn beta_sign(q: u64, k: u64, l: u64) -> Result<Sign> {
    if l == 0 || l >= q {
        return Err(Error::BadParameter(format!("l = {l} outside [1, q-1]")));
    }
    let b = beta(q, k, l);
    let s = certified_sign(&b, &GaloisAuto::identity(b.conductor()))?;
    if s == Sign::Zero {
        return Err(Error::Inconsistent(format!("beta_{l} vanishes")));
    }
    Ok(s)
}

/// Chevalley-Weil: multiplicity of the representation in `H^0(Y, omega_Y)`,
/// `N = dim (g0 - 1) + sum_mu sum_theta <-theta> + [trivial]`, with `theta`
/// running over the eigenvalue angles of `rep(g_mu)`.
pub fn chevalley_weil_multiplicity(
    spec: &GroupSpec,
    rep: &MonomialRep,
    g0: u64,
    monodromy: &[GroupElement],
) -> Result<i64> {
    spec.check_monodromy(monodromy)?;
    let dim = rep.dim() as i64;
    let mut total = Rational::from_integer(BigInt::from(dim * (g0 as i64 - 1)));
    for g in monodromy {
        for th in rep.image(g).eigen_angles() {
            total += frac(&-th);
        }
    }
    let id = crate::characters::MonomialMatrix::identity(rep.dim(), rep.a.conductor);
    if rep.a == id && rep.b == id {
        total += Rational::from_integer(BigInt::from(1));
    }
    if !total.is_integer() {
        return Err(Error::Inconsistent(format!("Chevalley-Weil sum {total} is not an integer")));
    }
    let n = total.to_integer().to_i64().unwrap();
    if n < 0 {
        return Err(Error::Inconsistent(format!("negative Chevalley-Weil multiplicity {n}")));
    }
    Ok(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwRow {
    pub label: String,
    pub degree: i64,
    pub multiplicity: i64,
    pub conjugate: String,
    pub conjugate_multiplicity: i64,
    /// Multiplicity in the H^1 character; must equal the sum of the two above.
    pub h1_multiplicity: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwTable {
    pub rows: Vec<CwRow>,
    /// `sum N deg`
    pub total: i64,
    /// `g(Y)` from the quotient-genus formula.
    pub genus: u64,
}

impl CwTable {
    /// `sum N deg = g(Y)` and Hodge symmetry on every row.
    pub fn consistent(&self) -> bool {
        self.total == self.genus as i64
            && self
                .rows
                .iter()
                .all(|r| r.multiplicity + r.conjugate_multiplicity == r.h1_multiplicity)
    }
}

pub fn cw_table(
    inv: &IrreducibleInventory,
    g0: u64,
    monodromy: &[GroupElement],
) -> Result<CwTable> {
    let spec = inv.spec();
    let chi_y = h1_character(&inv.table, g0, monodromy)?;
    let ns: Vec<i64> = inv
        .complex
        .iter()
        .map(|irr| chevalley_weil_multiplicity(spec, &irr.rep, g0, monodromy))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut total = 0;
    for (i, irr) in inv.complex.iter().enumerate() {
        let c = inv.conjugate_index(i);
        let h1 = inner_product(&chi_y, &irr.character)?;
        total += ns[i] * irr.degree();
        rows.push(CwRow {
            label: String::from(irr.label()),
            degree: irr.degree(),
            multiplicity: ns[i],
            conjugate: String::from(inv.complex[c].label()),
            conjugate_multiplicity: ns[c],
            h1_multiplicity: h1.to_integer().to_i64().unwrap_or(i64::MIN),
        });
    }
    let genus = quotient_genus(spec, g0, monodromy, &trivial_subgroup(spec))?;
    Ok(CwTable { rows, total, genus })
}

/// A CM-type on the subfield of `Q(zeta_n)` fixed by `fixing`, given by one
/// Galois exponent per embedding (the least element of its coset).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMType {
    conductor: u64,
    fixing: Vec<u64>,
    embeddings: Vec<u64>,
}

impl CMType {
    /// Canonicalizes the exponents and checks the CM-type axiom.
    pub fn new(conductor: u64, fixing: &[u64], exponents: &[u64]) -> Result<Self> {
        let fixing = closure_mod(fixing, conductor);
        if fixing.contains(&(conductor - 1)) {
            return Err(Error::Inconsistent(String::from(
                "complex conjugation fixes the field; it is not CM",
            )));
        }
        let canon = |t: u64| fixing.iter().map(|&s| mod_mul(t, s, conductor)).min().unwrap();
        let embeddings: Vec<u64> = exponents
            .iter()
            .map(|&t| canon(t % conductor))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let ty = CMType {
            conductor,
            fixing,
            embeddings,
        };
        if !ty.satisfies_axiom() {
            return Err(Error::Inconsistent(format!(
                "exponents {:?} do not form a CM-type",
                ty.embeddings
            )));
        }
        Ok(ty)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The subgroup of `(Z/n)^*` fixing the CM field.
    pub fn fixing(&self) -> &[u64] {
        &self.fixing
    }

    pub fn embeddings(&self) -> &[u64] {
        &self.embeddings
    }

    /// Degree of the CM field.
    pub fn field_degree(&self) -> usize {
        units(self.conductor).len() / self.fixing.len()
    }

    pub fn canonical(&self, t: u64) -> u64 {
        self.fixing
            .iter()
            .map(|&s| mod_mul(t, s, self.conductor))
            .min()
            .unwrap()
    }

    /// All coset representatives: the embeddings of the field.
    pub fn all_embeddings(&self) -> Vec<u64> {
        units(self.conductor)
            .into_iter()
            .map(|t| self.canonical(t))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// `Phi` and `conj(Phi)` partition the embeddings.
    pub fn satisfies_axiom(&self) -> bool {
        let n = self.conductor;
        let phi: BTreeSet<u64> = self.embeddings.iter().copied().collect();
        let conj: BTreeSet<u64> = phi.iter().map(|&t| self.canonical(n - t)).collect();
        let all: BTreeSet<u64> = self.all_embeddings().into_iter().collect();
        phi.is_disjoint(&conj)
            && phi.union(&conj).copied().collect::<BTreeSet<_>>() == all
            && 2 * phi.len() == all.len()
    }

    /// `Phi * g`, canonicalized and sorted.
    pub fn translate(&self, g: u64) -> Vec<u64> {
        self.embeddings
            .iter()
            .map(|&t| self.canonical(mod_mul(t, g, self.conductor)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H0Decomposition {
    /// `(label, N)` for every irreducible with `N > 0`.
    pub components: Vec<(String, i64)>,
    pub cw: CwTable,
    /// CM-type of `JY` on `Q(zeta_ord(a))`.
    pub cm_type: CMType,
    /// Indices of the irreducibles occurring in `H^0`.
    pub occurring: Vec<usize>,
}

/// `H^0(Y, omega_Y)` of the canonical covering and the CM-type it induces on
/// `Q(zeta_ord(a))`: the `a`-eigenvalue exponents of the occurring irreducibles.
pub fn h0_decomposition(inv: &IrreducibleInventory) -> Result<H0Decomposition> {
    let spec = inv.spec();
    let mono = spec.canonical_monodromy();
    let cw = cw_table(inv, 0, &mono)?;
    let mut components = Vec::new();
    let mut occurring = Vec::new();
    let mut exps = Vec::new();
    for (i, row) in cw.rows.iter().enumerate() {
        if row.multiplicity == 0 {
            continue;
        }
        let irr = &inv.complex[i];
        if row.multiplicity != 1 || irr.a_exponents.is_empty() {
            return Err(Error::Inconsistent(format!(
                "{} occurs {} times in H^0",
                row.label, row.multiplicity
            )));
        }
        components.push((row.label.clone(), row.multiplicity));
        occurring.push(i);
        exps.extend(irr.a_exponents.iter().copied());
    }
    let cm_type = CMType::new(spec.ord_a(), &[1], &exps)?;
    Ok(H0Decomposition {
        components,
        cw,
        cm_type,
        occurring,
    })
}

/// Trace of `a` in an irreducible occurring in `H^0`, as an element of `Q(zeta_ord(a))`.
pub fn generator_alpha(inv: &IrreducibleInventory, h0: &H0Decomposition) -> CycloElement {
    let irr = &inv.complex[h0.occurring[0]];
    let terms: Vec<(i64, i64)> = irr.a_exponents.iter().map(|&x| (1, x as i64)).collect();
    CycloElement::from_exponents(inv.spec().ord_a(), &terms)
}

/// CM-type of `JX`: the field is `Q(alpha)` with `alpha = tr V(a)`, fixed by
/// `S = Stab(alpha)`, and `Phi` is the set of `S`-cosets inside the `JY` type.
pub fn cm_type_jx(inv: &IrreducibleInventory, h0: &H0Decomposition) -> Result<CMType> {
    let alpha = generator_alpha(inv, h0);
    let s = alpha.stabilizer();
    let n = inv.spec().ord_a();
    let jy: BTreeSet<u64> = h0.cm_type.embeddings().iter().copied().collect();
    for &t in &jy {
        if !s.iter().all(|&x| jy.contains(&mod_mul(t, x, n))) {
            return Err(Error::Inconsistent(String::from(
                "the CM-type of JY is not a union of cosets of Stab(alpha)",
            )));
        }
    }
    let exps: Vec<u64> = jy.into_iter().collect();
    CMType::new(n, &s, &exps)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPrimitivity {
    pub primitive: bool,
    /// A subgroup (of `(Z/n)^*`, containing the fixing group) stabilizing `Phi`.
    pub witness: Option<Vec<u64>>,
    /// Number of cyclic subgroups examined.
    pub examined: usize,
}

/// `Phi` is induced from a proper CM subfield iff some nontrivial subgroup
/// of the Galois group, not containing complex conjugation, maps `Phi` to itself.
/// It suffices to scan cyclic subgroups: any such subgroup contains a cyclic one.
pub fn is_primitive_coset(phi: &CMType) -> CosetPrimitivity {
    let n = phi.conductor();
    let mut examined = 0;
    let mut done = BTreeSet::new();
    for g in units(n) {
        if phi.fixing().contains(&g) {
            continue;
        }
        let mut gens = phi.fixing().to_vec();
        gens.push(g);
        let t = closure_mod(&gens, n);
        if !done.insert(t.clone()) || t.contains(&(n - 1)) {
            continue;
        }
        examined += 1;
        if phi.translate(g) == phi.embeddings() {
            return CosetPrimitivity {
                primitive: false,
                witness: Some(t),
                examined,
            };
        }
    }
    CosetPrimitivity {
        primitive: true,
        witness: None,
        examined,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StPrimitivity {
    pub primitive: bool,
    /// `Q(mu)` equals the field generated by `alpha`.
    pub condition_i: bool,
    /// No `mu'/mu` with `mu' != mu` is totally positive.
    pub condition_ii: bool,
    /// `Phi` is exactly the set of embeddings with `Im phi(mu) > 0`.
    pub phi_is_positive_imaginary: bool,
    pub conjugates_checked: usize,
}

/// The two-condition criterion with `mu = alpha - conj(alpha)`.
pub fn is_primitive_st(phi: &CMType, alpha: &CycloElement) -> Result<StPrimitivity> {
    let n = phi.conductor();
    let alpha = alpha.promote(crate::arith::lcm(n, alpha.conductor()));
    let mu = &alpha - &alpha.conj();
    if mu.is_zero() {
        return Err(Error::DegenerateGenerator);
    }
    let mut sa = alpha.stabilizer();
    let mut sm = mu.stabilizer();
    sa.sort();
    sm.sort();
    let condition_i = sa == sm;
    let (orbit, _) = mu.orbit_and_degree();
    let mut condition_ii = true;
    let mut checked = 0;
    let mu_inv = mu.inverse()?;
    for other in &orbit {
        if *other == mu {
            continue;
        }
        checked += 1;
        let ratio = other * &mu_inv;
        if is_totally_positive(&ratio)? {
            condition_ii = false;
            break;
        }
    }
    // Im(phi_t(mu)) > 0  <=>  -i * sigma_t(mu) > 0.
    let minus_i = CycloElement::zeta_pow(4, 3);
    let mut positive = BTreeSet::new();
    for t in phi.all_embeddings() {
        let conj_t = mu.promote(n).galois(t)?;
        let im = &conj_t * &minus_i;
        if certified_sign(&im, &GaloisAuto::identity(im.conductor()))? == Sign::Positive {
            positive.insert(t);
        }
    }
    let phi_is_positive_imaginary = positive.into_iter().collect::<Vec<_>>() == phi.embeddings();
    Ok(StPrimitivity {
        primitive: condition_i && condition_ii,
        condition_i,
        condition_ii,
        phi_is_positive_imaginary,
        conjugates_checked: checked,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubfieldEntry {
    /// `j` with the subgroup `<sigma^(2^j)>`.
    pub j: u32,
    pub subgroup_order: u64,
    pub contains_conjugation: bool,
    /// Degree of the fixed field over `Q`.
    pub fixed_degree: u64,
    /// The Gaussian period of the fixed field is real.
    pub period_is_real: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GmSimplicity {
    pub simple: bool,
    /// `sigma^(2^(m-3))` acts as complex conjugation on `K_V`.
    pub conjugation_is_unique_involution: bool,
    pub lattice: Vec<SubfieldEntry>,
}

/// `K_V = Q(xi + xi^d)` has Galois group `<sigma> = Z/2^(m-2)` with
/// `sigma: xi -> xi^5`. Every nontrivial subgroup contains the unique
/// involution, which is complex conjugation, so every proper subfield is real.
pub fn gm_simplicity(m: u32) -> Result<GmSimplicity> {
    let spec = GroupSpec::gm(m)?;
    let n = spec.ord_a();
    let d = spec.twist();
    let fix = closure_mod(&[d], n);
    let order = 1u64 << (m - 2);
    // sigma has order 2^(m-2) in (Z/2^m)^* / {1, d}
    let sigma_order = (1..=order)
        .find(|&e| fix.contains(&mod_pow(5, e, n)))
        .unwrap_or(0);
    let inv_exp = mod_pow(5, 1u64 << (m - 3), n);
    let conjugation_is_unique_involution = sigma_order == order
        && (inv_exp == n - 1 || inv_exp == mod_mul(n - 1, d, n));
    let mut lattice = Vec::new();
    for j in 0..=(m - 2) {
        let g = mod_pow(5, 1u64 << j, n);
        let mut gens = fix.clone();
        gens.push(g);
        let sub = closure_mod(&gens, n);
        let subgroup_order = (sub.len() / fix.len()) as u64;
        let period = CycloElement::from_exponents(
            n,
            &sub.iter().map(|&t| (1, t as i64)).collect::<Vec<_>>(),
        );
        lattice.push(SubfieldEntry {
            j,
            subgroup_order,
            contains_conjugation: sub.contains(&(n - 1)),
            fixed_degree: order / subgroup_order,
            period_is_real: period.is_real(),
        });
    }
    let simple = conjugation_is_unique_involution
        && lattice
            .iter()
            .filter(|e| e.subgroup_order > 1)
            .all(|e| e.contains_conjugation && e.period_is_real);
    Ok(GmSimplicity {
        simple,
        conjugation_is_unique_involution,
        lattice,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoveringSignature {
    pub n: u64,
    pub r: usize,
    pub t: usize,
    /// Sorted ramification orders `n_j | n`, `n_j > 1`.
    pub orders: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureSearch {
    pub solutions: Vec<CoveringSignature>,
    pub candidates: u64,
}

impl SignatureSearch {
    /// True iff the only solution is `n = 3`, orders `(3, 3)`, `t = 1`.
    pub fn is_expected_family(&self) -> bool {
        self.solutions
            == [CoveringSignature {
                n: 3,
                r: 2,
                t: 1,
                orders: vec![3, 3],
            }]
    }
}

/// All `(n, r, t, n_j)` with odd `3 <= n <= n_max`, `r + t <= points_max`,
/// solving `sum n/n_j = n(r+t-2) - 1`. The equation does not involve `q`;
/// passing `Some(q)` restricts to `n | q-1`.
pub fn signature_search(n_max: u64, points_max: usize, q: Option<u64>) -> SignatureSearch {
    let mut solutions = Vec::new();
    let mut candidates = 0u64;
    let mut n = 3;
    while n <= n_max {
        if q.is_some_and(|q| (q - 1) % n != 0) {
            n += 2;
            continue;
        }
        let divs: Vec<u64> = crate::arith::divisors(n).into_iter().filter(|&x| x > 1).collect();
        for total in 0..=points_max {
            for r in 0..=total {
                let t = total - r;
                let rhs = n as i64 * (total as i64 - 2) - 1;
                let mut orders = Vec::new();
                enumerate_multisets(&divs, r, 0, &mut orders, &mut |ords| {
                    candidates += 1;
                    let lhs: i64 = ords.iter().map(|&x| (n / x) as i64).sum();
                    if lhs == rhs {
                        solutions.push(CoveringSignature {
                            n,
                            r,
                            t,
                            orders: ords.to_vec(),
                        });
                    }
                });
            }
        }
        n += 2;
    }
    solutions.sort();
    SignatureSearch {
        solutions,
        candidates,
    }
}

fn enumerate_multisets(
    items: &[u64],
    len: usize,
    start: usize,
    cur: &mut Vec<u64>,
    f: &mut impl FnMut(&[u64]),
) {
    if cur.len() == len {
        f(cur);
        return;
    }
    for i in start..items.len() {
        cur.push(items[i]);
        enumerate_multisets(items, len, i, cur, f);
        cur.pop();
    }
}

/// Whether the family of a spec has its canonical covering defined here.
pub fn is_supported(spec: &GroupSpec) -> bool {
    match spec.family() {
        Family::Gqn => spec.n() == 3,
        Family::Gm => true,
    }
}
