//! Character theory of `G_{q,n}` and `G_m`.
//!
//! Every complex irreducible is realized by a monomial representation: a
//! permutation matrix with root-of-unity entries. Traces give the character
//! values, cycle data gives the eigenvalues used by Chevalley-Weil.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{mod_mul, unit_generators, units, v2};
use crate::cyclotomic::CycloElement;
use crate::groups::{
    conjugacy_classes, subgroup_generated, trivial_subgroup, ConjugacyClass, Family,
    GroupElement, GroupSpec, Subgroup,
};
use crate::{Error, Rational, Result};

/// Conjugacy classes of a group with a lookup from element to class.
#[derive(Debug, PartialEq, Eq)]
pub struct ClassTable {
    spec: GroupSpec,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl ClassTable {
    pub fn new(spec: &GroupSpec) -> Arc<Self> {
        let classes = conjugacy_classes(spec);
        let mut class_of = vec![0; spec.order() as usize];
        for (c, cls) in classes.iter().enumerate() {
            for g in &cls.elements {
                class_of[spec.index(g)] = c;
            }
        }
        Arc::new(ClassTable {
            spec: spec.clone(),
            classes,
            class_of,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, g: &GroupElement) -> usize {
        self.class_of[self.spec.index(g)]
    }

    /// Conductor of the value field, the group exponent.
    pub fn conductor(&self) -> u64 {
        self.spec.exponent()
    }
}

/// A class function with values in `Q(zeta_E)`, one value per conjugacy class.
#[derive(Debug, Clone)]
pub struct Character {
    table: Arc<ClassTable>,
    values: Vec<CycloElement>,
    label: String,
}

impl PartialEq for Character {
    fn eq(&self, o: &Self) -> bool {
        self.table.spec == o.table.spec && self.values == o.values
    }
}

impl Character {
    pub fn from_values(table: &Arc<ClassTable>, values: Vec<CycloElement>, label: &str) -> Self {
        assert_eq!(values.len(), table.classes.len());
        let e = table.conductor();
        Character {
            table: table.clone(),
            values: values.into_iter().map(|v| v.promote(e)).collect(),
            label: String::from(label),
        }
    }

    /// Build from a function on class representatives.
    pub fn from_fn(
        table: &Arc<ClassTable>,
        label: &str,
        mut f: impl FnMut(&GroupElement) -> CycloElement,
    ) -> Self {
        let values = table.classes.iter().map(|c| f(&c.representative)).collect();
        Self::from_values(table, values, label)
    }

    pub fn trivial(table: &Arc<ClassTable>) -> Self {
        let e = table.conductor();
        Self::from_fn(table, "chi_0", |_| CycloElement::one(e))
    }

    pub fn table(&self) -> &Arc<ClassTable> {
        &self.table
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.table.spec
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = String::from(label);
        self
    }

    /// Values in conjugacy-class order.
    pub fn values(&self) -> &[CycloElement] {
        &self.values
    }

    pub fn value(&self, g: &GroupElement) -> &CycloElement {
        &self.values[self.table.class_of(g)]
    }

    /// The value at the identity, as an integer.
    pub fn degree(&self) -> i64 {
        self.values[0]
            .to_integer()
            .and_then(|v| v.to_i64())
            .expect("character degree is an integer")
    }

    fn check_same(&self, o: &Character) -> Result<()> {
        if self.table.spec != o.table.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &Character) -> Result<Character> {
        self.check_same(o)?;
        let values = self.values.iter().zip(&o.values).map(|(x, y)| x + y).collect();
        Ok(Character {
            table: self.table.clone(),
            values,
            label: format!("{} + {}", self.label, o.label),
        })
    }

    pub fn sub(&self, o: &Character) -> Result<Character> {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Character {
        Character {
            table: self.table.clone(),
            values: self.values.iter().map(|v| v.scale_int(k)).collect(),
            label: format!("{k}*({})", self.label),
        }
    }

    pub fn conj(&self) -> Character {
        Character {
            table: self.table.clone(),
            values: self.values.iter().map(CycloElement::conj).collect(),
            label: format!("conj({})", self.label),
        }
    }

    /// Apply `zeta_E -> zeta_E^t` to every value.
    pub fn galois(&self, t: u64) -> Result<Character> {
        Ok(Character {
            table: self.table.clone(),
            values: self
                .values
                .iter()
                .map(|v| v.galois(t))
                .collect::<Result<_>>()?,
            label: format!("{}^[{t}]", self.label),
        })
    }

    /// Units `t` mod `E` fixing every value; the character field is the fixed field.
    pub fn field_stabilizer(&self) -> Vec<u64> {
        let e = self.table.conductor();
        units(e)
            .into_iter()
            .filter(|&t| self.values.iter().all(|v| v.galois(t).as_ref() == Ok(v)))
            .collect()
    }

    /// `[K_chi : Q]`.
    pub fn field_degree(&self) -> usize {
        units(self.table.conductor()).len() / self.field_stabilizer().len()
    }

    pub fn is_rational_valued(&self) -> bool {
        self.values.iter().all(|v| v.to_rational().is_some())
    }
}

/// `(1/|G|) sum_g chi1(g) conj(chi2(g))`, asserted rational.
pub fn inner_product(chi1: &Character, chi2: &Character) -> Result<Rational> {
    chi1.check_same(chi2)?;
    let e = chi1.table.conductor();
    let mut acc = CycloElement::zero(e);
    for (c, cls) in chi1.table.classes.iter().enumerate() {
        let term = &chi1.values[c] * &chi2.values[c].conj();
        acc = &acc + &term.scale_int(cls.size() as i64);
    }
    let r = acc.to_rational().ok_or(Error::IrrationalInnerProduct)?;
    Ok(r / Rational::from_integer(BigInt::from(chi1.spec().order())))
}

fn rational_to_i64(r: &Rational, what: &str) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::Inconsistent(format!("{what} = {r} is not an integer")));
    }
    r.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Inconsistent(format!("{what} overflows")))
}

/// `dim V^H = (1/|H|) sum_{h in H} chi(h)`.
pub fn fixed_dim(chi: &Character, h: &Subgroup) -> Result<u64> {
    let e = chi.table.conductor();
    let mut acc = CycloElement::zero(e);
    for g in h.elements() {
        if !chi.spec().contains(g) {
            return Err(Error::SpecMismatch);
        }
        acc = &acc + chi.value(g);
    }
    let r = acc.to_rational().ok_or(Error::IrrationalInnerProduct)?
        / Rational::from_integer(BigInt::from(h.order()));
    let v = rational_to_i64(&r, "fixed dimension")?;
    u64::try_from(v).map_err(|_| Error::Inconsistent(format!("negative fixed dimension {v}")))
}

/// Permutation character of `G` on `G/H`:
/// `chi_H(g) = #{x in G : x g x^-1 in H} / |H|`.
pub fn induced_trivial_character(table: &Arc<ClassTable>, h: &Subgroup) -> Character {
    let spec = table.spec.clone();
    let all = spec.elements();
    let e = table.conductor();
    Character::from_fn(table, "chi_H", |g| {
        let count = all
            .iter()
            .filter(|x| h.contains(&spec.conjugate(g, x)))
            .count() as u64;
        CycloElement::from_integer(e, (count / h.order()) as i64)
    })
}

/// `chi_Y = 2 chi_0 + (2 g0 - 2 + u) chi_{1} - sum_j chi_{<g_j>}`.
pub fn h1_character(
    table: &Arc<ClassTable>,
    g0: u64,
    monodromy: &[GroupElement],
) -> Result<Character> {
    table.spec.check_monodromy(monodromy)?;
    let stabs: Vec<Subgroup> = monodromy
        .iter()
        .map(|g| subgroup_generated(&table.spec, &[*g]))
        .collect();
    h1_character_from_stabilizers(table, g0, &stabs)
}

/// The same formula fed directly with the branch stabilizers; this is all the
/// formula depends on, so monodromy orientations with equal cyclic subgroups agree.
pub fn h1_character_from_stabilizers(
    table: &Arc<ClassTable>,
    g0: u64,
    stabilizers: &[Subgroup],
) -> Result<Character> {
    let u = stabilizers.len() as i64;
    let reg = induced_trivial_character(table, &trivial_subgroup(&table.spec));
    let mut chi = Character::trivial(table)
        .scale(2)
        .add(&reg.scale(2 * g0 as i64 - 2 + u))?;
    for s in stabilizers {
        chi = chi.sub(&induced_trivial_character(table, s))?;
    }
    Ok(chi.with_label("chi_Y"))
}

/// A monomial matrix: `M e_c = zeta_E^scal[c] e_perm[c]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    pub perm: Vec<usize>,
    pub scal: Vec<u64>,
    pub conductor: u64,
}

impl MonomialMatrix {
    pub fn identity(dim: usize, conductor: u64) -> Self {
        MonomialMatrix {
            perm: (0..dim).collect(),
            scal: vec![0; dim],
            conductor,
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// `self * other`
    pub fn mul(&self, o: &MonomialMatrix) -> MonomialMatrix {
        let e = self.conductor;
        let perm = o.perm.iter().map(|&p| self.perm[p]).collect();
        let scal = (0..o.dim())
            .map(|c| (o.scal[c] + self.scal[o.perm[c]]) % e)
            .collect();
        MonomialMatrix {
            perm,
            scal,
            conductor: e,
        }
    }

    pub fn pow(&self, mut k: u64) -> MonomialMatrix {
        let mut acc = Self::identity(self.dim(), self.conductor);
        let mut b = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> CycloElement {
        let terms: Vec<(i64, i64)> = (0..self.dim())
            .filter(|&c| self.perm[c] == c)
            .map(|c| (1, self.scal[c] as i64))
            .collect();
        CycloElement::from_exponents(self.conductor, &terms)
    }

    /// Eigenvalues as angles `theta` in `[0, 1)`, eigenvalue `exp(2 pi i theta)`,
    /// sorted. A cycle of length `L` with total exponent `S` contributes
    /// `(S/E + t)/L` for `t = 0..L`.
    pub fn eigen_angles(&self) -> Vec<Rational> {
        let e = self.conductor as i64;
        let mut seen = vec![false; self.dim()];
        let mut out = Vec::new();
        for start in 0..self.dim() {
            if seen[start] {
                continue;
            }
            let mut len = 0i64;
            let mut total = 0i64;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                total += self.scal[c] as i64;
                c = self.perm[c];
                len += 1;
            }
            for t in 0..len {
                let th = Rational::new(BigInt::from(total + t * e), BigInt::from(e * len));
                out.push(frac(&th));
            }
        }
        out.sort();
        out
    }
}

/// Fractional part `r - floor(r)`.
pub fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

/// A representation given by the images of `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialRep {
    pub a: MonomialMatrix,
    pub b: MonomialMatrix,
}

impl MonomialRep {
    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// Image of `a^i b^j`.
    pub fn image(&self, g: &GroupElement) -> MonomialMatrix {
        self.a.pow(g.i).mul(&self.b.pow(g.j))
    }

    pub fn character(&self, table: &Arc<ClassTable>, label: &str) -> Character {
        Character::from_fn(table, label, |g| self.image(g).trace())
    }

    /// Check `b a b^-1 = a^r`, `a^ord_a = 1`, `b^ord_b = 1`.
    pub fn respects(&self, spec: &GroupSpec) -> bool {
        let id = MonomialMatrix::identity(self.dim(), self.a.conductor);
        let binv = self.b.pow(spec.ord_b() - 1);
        self.a.pow(spec.ord_a()) == id
            && self.b.pow(spec.ord_b()) == id
            && self.b.mul(&self.a).mul(&binv) == self.a.pow(spec.twist())
    }
}

/// A complex irreducible with its realization and naming data.
#[derive(Debug, Clone)]
pub struct Irreducible {
    pub character: Character,
    pub rep: MonomialRep,
    /// Exponents `x` such that `a` acts with eigenvalues `zeta_ord(a)^x`
    /// (sorted). Empty for one-dimensional characters.
    pub a_exponents: Vec<u64>,
}

impl Irreducible {
    pub fn label(&self) -> &str {
        self.character.label()
    }

    pub fn degree(&self) -> i64 {
        self.character.degree()
    }
}

#[derive(Debug, Clone)]
pub struct RationalIrreducible {
    pub label: String,
    /// Indices into the complex list; one Galois orbit.
    pub constituents: Vec<usize>,
    /// `[K : Q]` of the character field, equal to the orbit length.
    pub field_degree: usize,
    /// Sum of the constituent characters.
    pub character: Character,
}

#[derive(Debug, Clone)]
pub struct IrreducibleInventory {
    pub table: Arc<ClassTable>,
    pub complex: Vec<Irreducible>,
    pub rational: Vec<RationalIrreducible>,
}

impl IrreducibleInventory {
    pub fn spec(&self) -> &GroupSpec {
        &self.table.spec
    }

    pub fn find(&self, label: &str) -> Option<&Irreducible> {
        self.complex.iter().find(|c| c.label() == label)
    }

    pub fn find_rational(&self, label: &str) -> Option<&RationalIrreducible> {
        self.rational.iter().find(|c| c.label == label)
    }

    /// Multiplicity of every complex irreducible in `chi`, in inventory order.
    pub fn decompose(&self, chi: &Character) -> Result<Vec<Rational>> {
        self.complex
            .iter()
            .map(|irr| inner_product(chi, &irr.character))
            .collect()
    }

    /// Index of the complex irreducible whose character equals `chi`.
    pub fn index_of(&self, chi: &Character) -> Option<usize> {
        self.complex
            .iter()
            .position(|irr| irr.character.values == chi.values)
    }

    /// Index of the complex conjugate of irreducible `i`.
    pub fn conjugate_index(&self, i: usize) -> usize {
        self.index_of(&self.complex[i].character.conj())
            .expect("inventory closed under conjugation")
    }
}

fn scalar(e: u64, exp: u64) -> MonomialMatrix {
    MonomialMatrix {
        perm: vec![0],
        scal: vec![exp % e],
        conductor: e,
    }
}

/// The `<k>`-orbits on `(Z/q)^*` in inventory order. For `n = 3` the orbits
/// with sum `q` come first, each followed later by its negative in the same order.
pub fn v_orbits(spec: &GroupSpec) -> Result<Vec<Vec<u64>>> {
    let (q, n, k) = (spec.q(), spec.n(), spec.twist());
    if n == 3 {
        let part = crate::cmtypes::orbit_partition(q, k)
            .or_else(|_| crate::cmtypes::orbit_partition_any(q, k))?;
        let first: Vec<_> = part.first_half().cloned().collect();
        let mut out: Vec<Vec<u64>> = first.iter().map(|o| o.elements.clone()).collect();
        for o in &first {
            let neg: Vec<u64> = o.elements.iter().map(|&x| q - x).collect();
            out.push(neg);
        }
        return Ok(out);
    }
    let mut seen = vec![false; q as usize];
    let mut out = Vec::new();
    for i in 1..q {
        if seen[i as usize] {
            continue;
        }
        let orbit: Vec<u64> = (0..n)
            .scan(i, |x, _| {
                let cur = *x;
                *x = mod_mul(cur, k, q);
                Some(cur)
            })
            .collect();
        for &x in &orbit {
            seen[x as usize] = true;
        }
        out.push(orbit);
    }
    Ok(out)
}

/// Complex and rational irreducibles of the group.
pub fn irreducible_inventory(spec: &GroupSpec) -> Result<IrreducibleInventory> {
    let table = ClassTable::new(spec);
    let e = table.conductor();
    let mut complex = Vec::new();
    match spec.family() {
        Family::Gqn => {
            let (q, n) = (spec.q(), spec.n());
            for t in 0..n {
                let rep = MonomialRep {
                    a: scalar(e, 0),
                    b: scalar(e, (e / n) * t),
                };
                let character = rep.character(&table, &format!("chi_{t}"));
                complex.push(Irreducible {
                    character,
                    rep,
                    a_exponents: Vec::new(),
                });
            }
            // V(a) = diag(zeta_q^(i k^c)), V(b) e_c = e_(c-1): then b a b^-1 = a^k.
            for (idx, orbit) in v_orbits(spec)?.iter().enumerate() {
                let nn = n as usize;
                let rep = MonomialRep {
                    a: MonomialMatrix {
                        perm: (0..nn).collect(),
                        scal: orbit.iter().map(|&x| (x * (e / q)) % e).collect(),
                        conductor: e,
                    },
                    b: MonomialMatrix {
                        perm: (0..nn).map(|c| (c + nn - 1) % nn).collect(),
                        scal: vec![0; nn],
                        conductor: e,
                    },
                };
                let character = rep.character(&table, &format!("V_{}", idx + 1));
                let mut a_exponents = orbit.clone();
                a_exponents.sort();
                complex.push(Irreducible {
                    character,
                    rep,
                    a_exponents,
                });
            }
        }
        Family::Gm => {
            let half = e / 2;
            for (t, (ea, eb)) in [(0, 0), (0, half), (half, 0), (half, half)]
                .into_iter()
                .enumerate()
            {
                let rep = MonomialRep {
                    a: scalar(e, ea),
                    b: scalar(e, eb),
                };
                let character = rep.character(&table, &format!("chi_{t}"));
                complex.push(Irreducible {
                    character,
                    rep,
                    a_exponents: Vec::new(),
                });
            }
            let d = spec.twist();
            for x in 1..e {
                let xd = mod_mul(x, d, e);
                if x == half || xd < x {
                    continue;
                }
                // rho_x(a) = diag(xi^x, xi^(x d)), rho_x(b) = swap.
                let rep = MonomialRep {
                    a: MonomialMatrix {
                        perm: vec![0, 1],
                        scal: vec![x, xd],
                        conductor: e,
                    },
                    b: MonomialMatrix {
                        perm: vec![1, 0],
                        scal: vec![0, 0],
                        conductor: e,
                    },
                };
                let label = if x % 2 == 0 {
                    format!("rho_{x}")
                } else if x < half {
                    format!("U_{}", x.div_ceil(2))
                } else {
                    format!("U'_{}", (x - half).div_ceil(2))
                };
                let character = rep.character(&table, &label);
                let mut a_exponents = vec![x, xd];
                a_exponents.sort();
                complex.push(Irreducible {
                    character,
                    rep,
                    a_exponents,
                });
            }
        }
    }
    let rational = rational_irreducibles(spec, &table, &complex)?;
    Ok(IrreducibleInventory {
        table,
        complex,
        rational,
    })
}

fn rational_irreducibles(
    spec: &GroupSpec,
    table: &Arc<ClassTable>,
    complex: &[Irreducible],
) -> Result<Vec<RationalIrreducible>> {
    let e = table.conductor();
    let gens = unit_generators(e);
    let find = |chi: &Character| {
        complex
            .iter()
            .position(|c| c.character.values == chi.values)
            .ok_or_else(|| Error::Inconsistent(String::from("Galois image is not irreducible")))
    };
    let mut assigned = vec![false; complex.len()];
    let mut out = Vec::new();
    for start in 0..complex.len() {
        if assigned[start] {
            continue;
        }
        let mut orbit = vec![start];
        assigned[start] = true;
        let mut frontier = vec![start];
        while let Some(i) = frontier.pop() {
            for &t in &gens {
                let j = find(&complex[i].character.galois(t)?)?;
                if !assigned[j] {
                    assigned[j] = true;
                    orbit.push(j);
                    frontier.push(j);
                }
            }
        }
        orbit.sort();
        let label = rational_label(spec, &complex[start]);
        let mut character = complex[orbit[0]].character.clone();
        for &i in &orbit[1..] {
            character = character.add(&complex[i].character)?;
        }
        let field_degree = orbit.len();
        out.push(RationalIrreducible {
            character: character.with_label(&label),
            label,
            constituents: orbit,
            field_degree,
        });
    }
    Ok(out)
}

fn rational_label(spec: &GroupSpec, irr: &Irreducible) -> String {
    match spec.family() {
        Family::Gqn => {
            let n = spec.n();
            if irr.degree() == 1 {
                let t: u64 = irr.label()[4..].parse().unwrap_or(0);
                if t == 0 {
                    return String::from("chi_0");
                }
                let ord = n / crate::arith::gcd(t, n);
                if n == 3 {
                    String::from("W_1")
                } else {
                    format!("W_chi{ord}")
                }
            } else if n == 3 {
                String::from("W_2")
            } else {
                String::from("W_V")
            }
        }
        Family::Gm => {
            if irr.degree() == 1 {
                String::from(irr.label())
            } else {
                format!("W_{}", v2(irr.a_exponents[0]) + 1)
            }
        }
    }
}

/// One row of the comparison between the H^1 character and the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionRow {
    pub label: String,
    pub computed: Rational,
    pub closed_form: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub r: usize,
    pub t: usize,
    /// Orders `n_j` of the branch elements of order dividing `n`.
    pub orders: Vec<u64>,
    pub rows: Vec<DecompositionRow>,
    pub agrees: bool,
}

/// Compare the H^1 character of a `G_{q,n}` covering of `P^1` with the closed
/// form: `chi_i` (i > 0) has multiplicity `(r-2) - #{j : n | (n/n_j) i}`,
/// each `V_j` has `n(r+t-2) - sum n/n_j`, and `chi_0` has 0.
pub fn verify_decomposition(
    inv: &IrreducibleInventory,
    monodromy: &[GroupElement],
) -> Result<DecompositionReport> {
    let spec = inv.spec();
    if spec.family() != Family::Gqn {
        return Err(Error::UnsupportedFamily("G_m"));
    }
    let (q, n) = (spec.q(), spec.n());
    let chi_y = h1_character(&inv.table, 0, monodromy)?;
    let mut orders = Vec::new();
    let mut t = 0usize;
    for g in monodromy {
        let o = spec.element_order(g);
        if o == q {
            t += 1;
        } else if n % o == 0 {
            orders.push(o);
        } else {
            return Err(Error::InvalidMonodromy(format!(
                "{g} has order {o}, neither q nor a divisor of n"
            )));
        }
    }
    let r = orders.len();
    let v_coeff = n as i64 * (r as i64 + t as i64 - 2) - orders.iter().map(|&o| (n / o) as i64).sum::<i64>();
    let mut rows = Vec::new();
    for irr in &inv.complex {
        let computed = inner_product(&chi_y, &irr.character)?;
        let closed_form = if irr.degree() == 1 {
            let i: u64 = irr.label()[4..].parse().expect("chi_i label");
            if i == 0 {
                0
            } else {
                let killed = orders.iter().filter(|&&nj| ((n / nj) * i) % n == 0).count();
                r as i64 - 2 - killed as i64
            }
        } else {
            v_coeff
        };
        rows.push(DecompositionRow {
            label: String::from(irr.label()),
            computed,
            closed_form,
        });
    }
    let agrees = rows
        .iter()
        .all(|row| row.computed == Rational::from_integer(BigInt::from(row.closed_form)));
    Ok(DecompositionReport {
        r,
        t,
        orders,
        rows,
        agrees,
    })
}

/// Isotypic data of the Jacobian for one rational irreducible `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotypicRow {
    pub label: String,
    /// `[K_chi : Q]`
    pub field_degree: usize,
    /// Degree of one complex constituent `chi`.
    pub dim_chi: i64,
    /// Multiplicity of `chi` in the H^1 character.
    pub h1_multiplicity: i64,
    /// `dim B` from `[K:Q](dim chi (g0 - 1) + 1/2 sum_j (dim chi - dim chi^{G_j}))`.
    pub dim_b: i64,
    /// `dim B` recomputed as `[K:Q] * multiplicity / 2`.
    pub dim_b_from_h1: Rational,
    /// Power of `B` in the Jacobian (Schur index 1).
    pub power: i64,
}

/// Isotypic dimensions of `JY ~ prod B_W^(dim chi_W)` for a covering with the
/// given H^1 character and branch stabilizers.
pub fn isotypic_dimensions(
    inv: &IrreducibleInventory,
    h1: &Character,
    stabilizers: &[Subgroup],
) -> Result<Vec<IsotypicRow>> {
    let g0r = inner_product(h1, &inv.complex[0].character)? / Rational::from_integer(BigInt::from(2));
    let g0 = rational_to_i64(&g0r, "base genus")?;
    let mut rows = Vec::new();
    for w in &inv.rational {
        let chi = &inv.complex[w.constituents[0]].character;
        let dim_chi = chi.degree();
        let kq = w.field_degree as i64;
        let mult = rational_to_i64(&inner_product(h1, chi)?, "H^1 multiplicity")?;
        let dim_b = if chi.values.iter().all(CycloElement::is_one) {
            g0
        } else {
            let mut twice = 2 * dim_chi * (g0 - 1);
            for s in stabilizers {
                twice += dim_chi - fixed_dim(chi, s)? as i64;
            }
            if (kq * twice) % 2 != 0 {
                return Err(Error::Inconsistent(format!("odd isotypic sum for {}", w.label)));
            }
            kq * twice / 2
        };
        rows.push(IsotypicRow {
            label: w.label.clone(),
            field_degree: w.field_degree,
            dim_chi,
            h1_multiplicity: mult,
            dim_b,
            dim_b_from_h1: Rational::new(BigInt::from(kq * mult), BigInt::from(2)),
            power: dim_chi,
        });
    }
    Ok(rows)
}

/// Multiplicities `<chi_H, chi>` over the complex irreducibles, keyed by label.
pub fn decomposition_by_label(
    inv: &IrreducibleInventory,
    chi: &Character,
) -> Result<BTreeMap<String, Rational>> {
    let mut out = BTreeMap::new();
    for (irr, m) in inv.complex.iter().zip(inv.decompose(chi)?) {
        if !m.is_zero() {
            out.insert(String::from(irr.label()), m);
        }
    }
    Ok(out)
}

/// True iff every multiplicity is a non-negative integer.
pub fn is_genuine_character(mults: &[Rational]) -> bool {
    mults.iter().all(|m| m.is_integer() && !m.is_negative())
}

/// Sum of `deg^2` over the complex irreducibles.
pub fn sum_of_squares(inv: &IrreducibleInventory) -> i64 {
    inv.complex.iter().map(|c| c.degree() * c.degree()).sum()
}

/// `<chi, chi> == 1`
pub fn is_irreducible(chi: &Character) -> Result<bool> {
    Ok(inner_product(chi, chi)?.is_one())
}
