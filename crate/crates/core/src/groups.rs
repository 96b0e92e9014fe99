//! The metacyclic groups `G_{q,n}` and `G_m` in normal form.
//!
//! Elements are `a^i b^j` with `b a b^-1 = a^r`, where `r` is the twist (`k` for
//! `G_{q,n}`, `d = 2^(m-1) - 1` for `G_m`). Everything here is direct enumeration.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::arith::{is_prime, mod_mul, mod_pow, mult_order};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Gqn,
    Gm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    family: Family,
    /// `q` for `G_{q,n}`, `2^m` for `G_m`.
    ord_a: u64,
    /// `n` for `G_{q,n}`, 2 for `G_m`.
    ord_b: u64,
    twist: u64,
    m: u32,
    /// `twist^j mod ord_a` for `0 <= j < ord_b`.
    twist_pows: Vec<u64>,
}

/// The canonical twist: the least `k >= 2` of multiplicative order `n` mod `q`.
/// For `n = 3` this lands in `[2, (q-1)/2]`; the other cube root is `q-1-k`.
pub fn find_twist_exponent(q: u64, n: u64) -> Result<u64> {
    if !is_prime(q) || q == 2 {
        return Err(Error::NotPrime(q));
    }
    if n < 2 || (q - 1) % n != 0 {
        return Err(Error::NoSuchExponent { q, n });
    }
    (2..q)
        .find(|&k| mult_order(k, q) == Some(n))
        .ok_or(Error::NoSuchExponent { q, n })
}

impl GroupSpec {
    /// `G_{q,n}` with an explicit twist `k` of order `n` mod `q`.
    pub fn gqn(q: u64, n: u64, k: u64) -> Result<Self> {
        if !is_prime(q) || q == 2 {
            return Err(Error::NotPrime(q));
        }
        if n < 2 || (q - 1) % n != 0 {
            return Err(Error::NoSuchExponent { q, n });
        }
        if k <= 1 || k >= q || mult_order(k, q) != Some(n) {
            return Err(Error::BadTwist { q, k });
        }
        Ok(Self::build(Family::Gqn, q, n, k, 0))
    }

    /// `G_{q,3}` with the canonical twist.
    pub fn gq3(q: u64) -> Result<Self> {
        let k = find_twist_exponent(q, 3)?;
        Self::gqn(q, 3, k)
    }

    pub fn gm(m: u32) -> Result<Self> {
        if !(3..=20).contains(&m) {
            return Err(Error::BadParameter(format!(
                "G_m needs 3 <= m <= 20, got m = {m}"
            )));
        }
        let two_m = 1u64 << m;
        let d = (1u64 << (m - 1)) - 1;
        debug_assert_eq!(mod_mul(d, d, two_m), 1);
        Ok(Self::build(Family::Gm, two_m, 2, d, m))
    }

    fn build(family: Family, ord_a: u64, ord_b: u64, twist: u64, m: u32) -> Self {
        let twist_pows = (0..ord_b).map(|j| mod_pow(twist, j, ord_a)).collect();
        GroupSpec {
            family,
            ord_a,
            ord_b,
            twist,
            m,
            twist_pows,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `q` (only meaningful for `G_{q,n}`).
    pub fn q(&self) -> u64 {
        self.ord_a
    }

    /// `n` (only meaningful for `G_{q,n}`).
    pub fn n(&self) -> u64 {
        self.ord_b
    }

    /// `k` or `d`.
    pub fn twist(&self) -> u64 {
        self.twist
    }

    /// `m` (only meaningful for `G_m`).
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn ord_a(&self) -> u64 {
        self.ord_a
    }

    pub fn ord_b(&self) -> u64 {
        self.ord_b
    }

    pub fn order(&self) -> u64 {
        self.ord_a * self.ord_b
    }

    /// Exponent of the group; all character values live in `Q(zeta_E)`.
    pub fn exponent(&self) -> u64 {
        crate::arith::lcm(self.ord_a, self.ord_b)
    }

    pub fn label(&self) -> String {
        match self.family {
            Family::Gqn => format!("G_{{{},{}}}", self.ord_a, self.ord_b),
            Family::Gm => format!("G_{}", self.m),
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { i: 0, j: 0 }
    }

    pub fn a(&self) -> GroupElement {
        GroupElement { i: 1, j: 0 }
    }

    pub fn b(&self) -> GroupElement {
        GroupElement { i: 0, j: 1 }
    }

    /// `a^i b^j` with exponents reduced.
    pub fn element(&self, i: i64, j: i64) -> GroupElement {
        GroupElement {
            i: i.rem_euclid(self.ord_a as i64) as u64,
            j: j.rem_euclid(self.ord_b as i64) as u64,
        }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.i < self.ord_a && g.j < self.ord_b
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        // a^i1 b^j1 a^i2 b^j2 = a^(i1 + i2 r^j1) b^(j1 + j2)
        let i = (g.i + mod_mul(h.i, self.twist_pows[g.j as usize], self.ord_a)) % self.ord_a;
        GroupElement {
            i,
            j: (g.j + h.j) % self.ord_b,
        }
    }

    pub fn inv(&self, g: &GroupElement) -> GroupElement {
        let j = (self.ord_b - g.j) % self.ord_b;
        let i = mod_mul(g.i, self.twist_pows[j as usize], self.ord_a);
        GroupElement {
            i: (self.ord_a - i) % self.ord_a,
            j,
        }
    }

    pub fn pow(&self, g: &GroupElement, e: i64) -> GroupElement {
        let base = if e < 0 { self.inv(g) } else { *g };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: &GroupElement) -> u64 {
        let mut x = *g;
        let mut k = 1;
        while !x.is_identity() {
            x = self.mul(&x, g);
            k += 1;
        }
        k
    }

    /// `x g x^-1`
    pub fn conjugate(&self, g: &GroupElement, x: &GroupElement) -> GroupElement {
        self.mul(&self.mul(x, g), &self.inv(x))
    }

    /// All elements, sorted by `(j, i)`.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.ord_b)
            .flat_map(|j| (0..self.ord_a).map(move |i| GroupElement { i, j }))
            .collect()
    }

    /// Dense index compatible with the `(j, i)` ordering.
    pub fn index(&self, g: &GroupElement) -> usize {
        (g.j * self.ord_a + g.i) as usize
    }

    pub fn product(&self, gs: &[GroupElement]) -> GroupElement {
        gs.iter()
            .fold(self.identity(), |acc, g| self.mul(&acc, g))
    }

    /// The monodromy `(a, b, (ab)^-1)` of the canonical covering of `P^1`.
    pub fn canonical_monodromy(&self) -> Vec<GroupElement> {
        let ab = self.mul(&self.a(), &self.b());
        vec![self.a(), self.b(), self.inv(&ab)]
    }

    /// Product-one and non-identity checks on a monodromy tuple.
    pub fn check_monodromy(&self, monodromy: &[GroupElement]) -> Result<()> {
        if let Some(g) = monodromy.iter().find(|g| !self.contains(g)) {
            return Err(Error::InvalidMonodromy(format!("{g} is not in {}", self.label())));
        }
        if monodromy.iter().any(GroupElement::is_identity) {
            return Err(Error::InvalidMonodromy(String::from(
                "a branch element is the identity",
            )));
        }
        if !self.product(monodromy).is_identity() {
            return Err(Error::InvalidMonodromy(String::from(
                "the monodromy elements do not multiply to the identity",
            )));
        }
        Ok(())
    }
}

/// `a^i b^j`; ordered by `(j, i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub i: u64,
    pub j: u64,
}

impl GroupElement {
    pub fn is_identity(&self) -> bool {
        self.i == 0 && self.j == 0
    }
}

impl Ord for GroupElement {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.j, self.i).cmp(&(o.j, o.i))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.i, self.j) {
            (0, 0) => f.write_str("1"),
            (i, 0) => write!(f, "a^{i}"),
            (0, j) => write!(f, "b^{j}"),
            (i, j) => write!(f, "a^{i} b^{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<GroupElement>,
    generators: Vec<GroupElement>,
}

impl Subgroup {
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// Smallest subgroup containing `gens`, elements sorted by `(j, i)`.
pub fn subgroup_generated(spec: &GroupSpec, gens: &[GroupElement]) -> Subgroup {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(spec.identity());
    queue.push_back(spec.identity());
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = spec.mul(&x, g);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Subgroup {
        elements: seen.into_iter().collect(),
        generators: gens.to_vec(),
    }
}

/// `{1}`
pub fn trivial_subgroup(spec: &GroupSpec) -> Subgroup {
    subgroup_generated(spec, &[])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: GroupElement,
    pub elements: Vec<GroupElement>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// Conjugacy classes ordered by their least element; the identity class comes first.
pub fn conjugacy_classes(spec: &GroupSpec) -> Vec<ConjugacyClass> {
    let all = spec.elements();
    let mut seen = vec![false; all.len()];
    let mut classes = Vec::new();
    for g in &all {
        if seen[spec.index(g)] {
            continue;
        }
        let mut cls = BTreeSet::new();
        for x in &all {
            cls.insert(spec.conjugate(g, x));
        }
        for c in &cls {
            seen[spec.index(c)] = true;
        }
        classes.push(ConjugacyClass {
            representative: *g,
            elements: cls.into_iter().collect(),
        });
    }
    classes
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosets {
    pub classes: Vec<Vec<GroupElement>>,
}

impl DoubleCosets {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// The partition of `G` into double cosets `A x B`.
pub fn double_cosets(spec: &GroupSpec, a: &Subgroup, b: &Subgroup) -> DoubleCosets {
    let all = spec.elements();
    let mut seen = vec![false; all.len()];
    let mut classes = Vec::new();
    for x in &all {
        if seen[spec.index(x)] {
            continue;
        }
        let mut cls = BTreeSet::new();
        for u in a.elements() {
            let ux = spec.mul(u, x);
            for v in b.elements() {
                cls.insert(spec.mul(&ux, v));
            }
        }
        for c in &cls {
            seen[spec.index(c)] = true;
        }
        classes.push(cls.into_iter().collect());
    }
    DoubleCosets { classes }
}

/// Genus of `Y/H` for a covering `Y -> Y/G` of base genus `g0` with the given
/// monodromy:
/// `2 g = 2 [G:H](g0 - 1) + 2 + sum_j ([G:H] - |H \ G / <g_j>|)`.
pub fn quotient_genus(
    spec: &GroupSpec,
    g0: u64,
    monodromy: &[GroupElement],
    h: &Subgroup,
) -> Result<u64> {
    spec.check_monodromy(monodromy)?;
    if spec.order() % h.order() != 0 || !h.elements().iter().all(|g| spec.contains(g)) {
        return Err(Error::BadParameter(String::from(
            "H is not a subgroup of G",
        )));
    }
    let index = (spec.order() / h.order()) as i64;
    let mut twice = 2 * index * (g0 as i64 - 1) + 2;
    for g in monodromy {
        let cyc = subgroup_generated(spec, &[*g]);
        twice += index - double_cosets(spec, h, &cyc).count() as i64;
    }
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "quotient genus formula gave 2g = {twice}"
        )));
    }
    Ok((twice / 2) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_exponents() {
        assert_eq!(find_twist_exponent(7, 3), Ok(2));
        assert_eq!(find_twist_exponent(13, 3), Ok(3));
        assert_eq!(find_twist_exponent(7, 2), Ok(6));
        assert_eq!(find_twist_exponent(11, 3), Err(Error::NoSuchExponent { q: 11, n: 3 }));
        assert_eq!(find_twist_exponent(15, 3), Err(Error::NotPrime(15)));
        for q in [7u64, 13, 19, 31, 37, 43, 61] {
            let k = find_twist_exponent(q, 3).unwrap();
            assert!(2 * k <= q - 1);
            assert_eq!(mod_pow(q - 1 - k, 3, q), 1);
        }
    }

    #[test]
    fn defining_relations() {
        let g = GroupSpec::gq3(7).unwrap();
        assert_eq!(g.mul(&g.b(), &g.a()), GroupElement { i: 2, j: 1 });
        assert_eq!(g.element_order(&g.mul(&g.a(), &g.b())), 3);
        let h = GroupSpec::gm(3).unwrap();
        let bab = h.product(&[h.b(), h.a(), h.b()]);
        assert_eq!(bab, h.pow(&h.a(), 3));
        for x in h.elements() {
            assert!(h.mul(&x, &h.inv(&x)).is_identity());
        }
    }

    #[test]
    fn classes_and_cosets() {
        let g = GroupSpec::gq3(7).unwrap();
        assert_eq!(conjugacy_classes(&g).len(), 5);
        let h = subgroup_generated(&g, &[g.b()]);
        assert_eq!(h.order(), 3);
        assert_eq!(double_cosets(&g, &h, &h).count(), 3);
        let gm = GroupSpec::gm(3).unwrap();
        assert_eq!(conjugacy_classes(&gm).len(), 7);
        let z = subgroup_generated(&gm, &[gm.pow(&gm.a(), 4)]);
        assert_eq!(z.order(), 2);
    }

    #[test]
    fn genera() {
        let g = GroupSpec::gq3(13).unwrap();
        let mono = g.canonical_monodromy();
        let h = subgroup_generated(&g, &[g.b()]);
        assert_eq!(quotient_genus(&g, 0, &mono, &h), Ok(2));
        assert_eq!(quotient_genus(&g, 0, &mono, &trivial_subgroup(&g)), Ok(6));
        let bad = [g.a(), g.b(), g.b()];
        assert!(matches!(
            quotient_genus(&g, 0, &bad, &h),
            Err(Error::InvalidMonodromy(_))
        ));
    }
}
