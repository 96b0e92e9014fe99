//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! An element is stored in the power basis `1, zeta, ..., zeta^(phi(n)-1)`
//! modulo the cyclotomic polynomial `Phi_n`, with integer numerators over one
//! positive common denominator. Elements of different conductors can be mixed
//! freely: binary operations promote both sides to the lcm of the conductors.
//! Results are never shrunk back to a smaller conductor.

mod interval;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{gcd, lcm, mod_mul, units};
use crate::{Error, Rational, Result};

pub use interval::{certified_sign, certified_sign_at_precision, Sign};

/// The `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    let mut memo = BTreeMap::new();
    cyclo_poly_memo(n, &mut memo)
}

fn cyclo_poly_memo(n: u64, memo: &mut BTreeMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // x^n - 1
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclo_poly_memo(d, memo);
            p = exact_div_monic(&p, &phi_d);
        }
    }
    memo.insert(n, p.clone());
    p
}

/// Exact quotient of integer polynomials by a monic divisor.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quo = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quo[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quo
}

/// The field `Q(zeta_n)` together with its defining polynomial.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    n: u64,
    /// `Phi_n`, monic, low degree first.
    modulus: Vec<i64>,
}

impl CycloField {
    pub fn new(n: u64) -> Arc<Self> {
        assert!(n >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(n)
            .iter()
            .map(|c| c.to_i64().expect("cyclotomic coefficient fits in i64"))
            .collect();
        Arc::new(CycloField { n, modulus })
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// `phi(n)`, the degree over the rationals.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Reduce an integer polynomial (any length) modulo `Phi_n`.
    fn reduce(&self, mut p: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree();
        if let Some(small) = reduce_small(&p, &self.modulus) {
            return small;
        }
        for top in (d..p.len()).rev() {
            if p[top].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut p[top]);
            for (i, &mi) in self.modulus[..d].iter().enumerate() {
                if mi != 0 {
                    p[top - d + i] -= &c * mi;
                }
            }
        }
        p.resize(d, BigInt::zero());
        p
    }
}

fn to_small(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter()
        .map(|c| c.to_i64().map(i128::from))
        .collect::<Option<Vec<_>>>()
}

fn reduce_small(p: &[BigInt], modulus: &[i64]) -> Option<Vec<BigInt>> {
    let mut s = to_small(p)?;
    let d = modulus.len() - 1;
    for top in (d..s.len()).rev() {
        let c = s[top];
        if c == 0 {
            continue;
        }
        s[top] = 0;
        for (i, &mi) in modulus[..d].iter().enumerate() {
            if mi != 0 {
                let t = c.checked_mul(mi as i128)?;
                s[top - d + i] = s[top - d + i].checked_sub(t)?;
            }
        }
    }
    s.resize(d, 0);
    Some(s.into_iter().map(BigInt::from).collect())
}

fn mul_small(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let a = to_small(a)?;
    let b = to_small(b)?;
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(x.checked_mul(y)?)?;
        }
    }
    Some(out.into_iter().map(BigInt::from).collect())
}

fn mul_big(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// An exact element of `Q(zeta_n)`.
#[derive(Clone)]
pub struct CycloElement {
    field: Arc<CycloField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloElement {
    fn from_parts(field: Arc<CycloField>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut e = CycloElement { field, num, den };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -core::mem::take(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn zero(n: u64) -> Self {
        Self::from_integer(n, 0)
    }

    pub fn one(n: u64) -> Self {
        Self::from_integer(n, 1)
    }

    pub fn from_integer(n: u64, v: i64) -> Self {
        Self::from_rational(n, &Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(n: u64, v: BigInt) -> Self {
        Self::from_rational(n, &Rational::from_integer(v))
    }

    pub fn from_rational(n: u64, r: &Rational) -> Self {
        let field = CycloField::new(n);
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = r.numer().clone();
        Self::from_parts(field, num, r.denom().clone())
    }

    /// `zeta_n^j` for any integer `j`.
    pub fn zeta_pow(n: u64, j: i64) -> Self {
        Self::from_exponents(n, &[(1, j)])
    }

    /// `sum c * zeta_n^e` over the given `(c, e)` pairs.
    pub fn from_exponents(n: u64, terms: &[(i64, i64)]) -> Self {
        let field = CycloField::new(n);
        let mut p = vec![BigInt::zero(); n as usize];
        for &(c, e) in terms {
            p[e.rem_euclid(n as i64) as usize] += c;
        }
        let num = field.reduce(p);
        Self::from_parts(field, num, BigInt::one())
    }

    /// Element from rational coefficients of `1, zeta, zeta^2, ...`; the list may
    /// be longer than `phi(n)` and is reduced modulo `Phi_n`.
    pub fn from_coeffs(n: u64, coeffs: &[Rational]) -> Self {
        let field = CycloField::new(n);
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut p: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        if p.len() < field.degree() {
            p.resize(field.degree(), BigInt::zero());
        }
        let num = field.reduce(p);
        Self::from_parts(field, num, den)
    }

    pub fn conductor(&self) -> u64 {
        self.field.n
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// `phi(n)` of the conductor (not the degree of the element).
    pub fn field_degree(&self) -> usize {
        self.field.degree()
    }

    /// Power-basis coefficients.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// The same element viewed in `Q(zeta_m)`; `m` must be a multiple of the conductor.
    pub fn promote(&self, m: u64) -> Self {
        let n = self.conductor();
        if m == n {
            return self.clone();
        }
        assert!(m % n == 0, "cannot promote conductor {n} to {m}");
        let step = (m / n) as usize;
        let field = CycloField::new(m);
        let mut p = vec![BigInt::zero(); m as usize];
        for (i, c) in self.num.iter().enumerate() {
            p[i * step] = c.clone();
        }
        let num = field.reduce(p);
        Self::from_parts(field, num, self.den.clone())
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.conductor() == other.conductor() {
            return (self.clone(), other.clone());
        }
        let m = lcm(self.conductor(), other.conductor());
        (self.promote(m), other.promote(m))
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if self.conductor() != other.conductor() {
            let (a, b) = self.aligned(other);
            return a.add_impl(&b, negate);
        }
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(x, y)| {
                let y = y * &fb;
                if negate {
                    x * &fa - y
                } else {
                    x * &fa + y
                }
            })
            .collect();
        Self::from_parts(self.field.clone(), num, den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.conductor() != other.conductor() {
            let (a, b) = self.aligned(other);
            return a.mul_impl(&b);
        }
        if let Some(r) = self.to_rational() {
            return other.scale(&r);
        }
        if let Some(r) = other.to_rational() {
            return self.scale(&r);
        }
        let prod = mul_small(&self.num, &other.num).unwrap_or_else(|| mul_big(&self.num, &other.num));
        let num = self.field.reduce(prod);
        Self::from_parts(self.field.clone(), num, &self.den * &other.den)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::from_parts(self.field.clone(), num, &self.den * r.denom())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(k)))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.conductor());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Phi_n`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(self.conductor(), &r.recip()));
        }
        let a: Vec<Rational> = self
            .num
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let m: Vec<Rational> = self
            .field
            .modulus
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        // s * a + t * m = g, with g a nonzero constant because Phi_n is irreducible.
        let (g, s) = qpoly::ext_gcd_left(&a, &m);
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        let coeffs: Vec<Rational> = s
            .iter()
            .map(|c| c * &ginv * Rational::from_integer(self.den.clone()))
            .collect();
        Ok(Self::from_coeffs(self.conductor(), &coeffs))
    }

    /// The image under `zeta -> zeta^t`. Requires `gcd(t, n) = 1`.
    pub fn galois(&self, t: u64) -> Result<Self> {
        let n = self.conductor();
        if n > 1 && gcd(t % n, n) != 1 {
            return Err(Error::BadExponent { t, n });
        }
        Ok(self.galois_unchecked(t))
    }

    fn galois_unchecked(&self, t: u64) -> Self {
        let n = self.conductor();
        if n <= 2 || t % n == 1 {
            return self.clone();
        }
        let mut p = vec![BigInt::zero(); n as usize];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                p[mod_mul(i as u64, t, n) as usize] = c.clone();
            }
        }
        let num = self.field.reduce(p);
        Self::from_parts(self.field.clone(), num, self.den.clone())
    }

    /// Complex conjugate, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        let n = self.conductor();
        self.galois_unchecked(n - 1)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Units `t` mod the conductor with `sigma_t(x) = x`, sorted.
    pub fn stabilizer(&self) -> Vec<u64> {
        units(self.conductor())
            .into_iter()
            .filter(|&t| self.galois_unchecked(t) == *self)
            .collect()
    }

    /// Distinct Galois conjugates (the orbit under `(Z/n)^*`) and the degree of
    /// `Q(x)`, which is the orbit size.
    pub fn orbit_and_degree(&self) -> (Vec<CycloElement>, usize) {
        let mut orbit: Vec<CycloElement> = Vec::new();
        for t in units(self.conductor()) {
            let y = self.galois_unchecked(t);
            if !orbit.iter().any(|o| *o == y) {
                orbit.push(y);
            }
        }
        let d = orbit.len();
        (orbit, d)
    }

    /// Render with the `zeta(n)^j` grammar, e.g. `-1 + 2*zeta(7)^3`.
    pub fn to_expr(&self) -> String {
        let n = self.conductor();
        let mut out = String::new();
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = Rational::new(c.clone(), self.den.clone());
            let neg = r.is_negative();
            let a = r.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = if a.is_integer() {
                alloc::format!("{}", a.numer())
            } else {
                alloc::format!("{}/{}", a.numer(), a.denom())
            };
            match (i, a.is_one()) {
                (0, _) => out.push_str(&coeff),
                (_, true) => out.push_str(&alloc::format!("zeta({n})^{i}")),
                (_, false) => out.push_str(&alloc::format!("{coeff}*zeta({n})^{i}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl PartialEq for CycloElement {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor() == other.conductor() {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = self.aligned(other);
            a == b
        }
    }
}

impl Eq for CycloElement {}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_expr())
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CycloElement> for &CycloElement {
            type Output = CycloElement;
            fn $method(self, rhs: &CycloElement) -> CycloElement {
                let f: fn(&CycloElement, &CycloElement) -> CycloElement = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycloElement> for CycloElement {
            type Output = CycloElement;
            fn $method(self, rhs: CycloElement) -> CycloElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycloElement> for CycloElement {
            type Output = CycloElement;
            fn $method(self, rhs: &CycloElement) -> CycloElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        let num = self.num.iter().map(|c| -c).collect();
        CycloElement {
            field: self.field.clone(),
            num,
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        -&self
    }
}

/// An automorphism `zeta_n -> zeta_n^t` of `Q(zeta_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaloisAuto {
    n: u64,
    t: u64,
}

impl GaloisAuto {
    pub fn new(n: u64, t: u64) -> Result<Self> {
        let t = t % n;
        if n > 1 && gcd(t, n) != 1 {
            return Err(Error::BadExponent { t, n });
        }
        Ok(GaloisAuto { n, t })
    }

    pub fn identity(n: u64) -> Self {
        GaloisAuto { n, t: 1 % n }
    }

    pub fn conjugation(n: u64) -> Self {
        GaloisAuto { n, t: (n - 1) % n.max(1) }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn exponent(&self) -> u64 {
        self.t
    }

    /// `self` after `other`: exponents multiply.
    pub fn compose(&self, other: &GaloisAuto) -> GaloisAuto {
        assert_eq!(self.n, other.n);
        GaloisAuto {
            n: self.n,
            t: mod_mul(self.t, other.t, self.n),
        }
    }

    pub fn apply(&self, x: &CycloElement) -> Result<CycloElement> {
        let x = self.lift(x)?;
        x.galois(self.t)
    }

    /// `x` promoted to this automorphism's conductor.
    fn lift(&self, x: &CycloElement) -> Result<CycloElement> {
        if self.n % x.conductor() != 0 {
            return Err(Error::BadParameter(alloc::format!(
                "element of conductor {} does not live in Q(zeta_{})",
                x.conductor(),
                self.n
            )));
        }
        Ok(x.promote(self.n))
    }
}

pub fn galois_apply(g: &GaloisAuto, x: &CycloElement) -> Result<CycloElement> {
    g.apply(x)
}

/// True iff `x` is real and certified positive at every embedding of `Q(x)`.
pub fn is_totally_positive(x: &CycloElement) -> Result<bool> {
    if !x.is_real() {
        return Err(Error::NotReal);
    }
    if x.is_zero() {
        return Ok(false);
    }
    let n = x.conductor();
    let stab = x.stabilizer();
    let mut covered: Vec<u64> = Vec::new();
    for t in units(n) {
        if covered.contains(&t) {
            continue;
        }
        for &s in &stab {
            covered.push(mod_mul(t, s, n));
        }
        if certified_sign(x, &GaloisAuto::new(n, t)?)? != Sign::Positive {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimal Euclid machinery over `Q[x]` for inversion.
mod qpoly {
    use super::*;

    fn trim(p: &mut Vec<Rational>) {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = b[db].recip();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![Rational::zero(); r.len() - db];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() * &lead_inv;
            for (j, bj) in b.iter().enumerate() {
                r[shift + j] -= &c * bj;
            }
            q[shift] = c;
            r.pop();
            trim(&mut r);
        }
        (q, r)
    }

    fn sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = a.to_vec();
        let len = if q.is_empty() || b.is_empty() {
            0
        } else {
            q.len() + b.len() - 1
        };
        if out.len() < len {
            out.resize(len, Rational::zero());
        }
        for (i, qi) in q.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                out[i + j] -= qi * bj;
            }
        }
        trim(&mut out);
        out
    }

    /// Returns `(g, s)` with `s * a = g (mod m)`, `g = gcd(a, m)`.
    pub fn ext_gcd_left(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r0 = m.to_vec();
        let mut r1 = a.to_vec();
        trim(&mut r0);
        trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s = sub_mul(&s0, &q, &s1);
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
        }
        (r0, s0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, j: i64) -> CycloElement {
        CycloElement::zeta_pow(n, j)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let p = |n| -> Vec<i64> {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| c.to_i64().unwrap())
                .collect()
        };
        assert_eq!(p(1), [-1, 1]);
        assert_eq!(p(8), [1, 0, 0, 0, 1]);
        assert_eq!(p(12), [1, 0, -1, 0, 1]);
        assert_eq!(p(7), [1; 7]);
        // Phi_105 is the first with a coefficient of absolute value 2.
        assert!(p(105).contains(&-2));
    }

    #[test]
    fn root_of_unity_identities() {
        assert!((z(7, 1) * z(7, 6)).is_one());
        let s = (0..7).fold(CycloElement::zero(7), |acc, j| acc + z(7, j));
        assert!(s.is_zero());
        let t = z(8, 1) + z(8, 3);
        assert_eq!(&t * &t, CycloElement::from_integer(8, -2));
        assert_eq!(z(8, 4), CycloElement::from_integer(1, -1));
    }

    #[test]
    fn mixed_conductors_promote() {
        let w = z(3, 1);
        let x = z(7, 1);
        let p = &w * &x;
        assert_eq!(p.conductor(), 21);
        assert_eq!(p, z(21, 7 + 3));
        assert_eq!(z(4, 1) * z(4, 1), CycloElement::from_integer(5, -1));
    }

    #[test]
    fn inverse_and_division_by_zero() {
        let a = z(7, 1) + z(7, 2) + z(7, 4);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(CycloElement::zero(5).inverse(), Err(Error::DivisionByZero));
        let half = CycloElement::from_rational(9, &Rational::new(1.into(), 2.into()));
        assert_eq!(half.inverse().unwrap(), CycloElement::from_integer(9, 2));
    }

    #[test]
    fn galois_action() {
        let a = z(7, 1) + z(7, 2) + z(7, 4);
        assert_eq!(a.galois(1).unwrap(), a);
        assert_eq!(a.conj(), -CycloElement::one(7) - &a);
        assert_eq!(a.galois(2).unwrap(), a);
        assert!(matches!(a.galois(7), Err(Error::BadExponent { .. })));
        let (_, deg) = a.orbit_and_degree();
        assert_eq!(deg, 2);
        assert_eq!(a.stabilizer(), [1, 2, 4]);
        let tau = GaloisAuto::new(16, 7).unwrap();
        let g = z(16, 1) + z(16, 7);
        assert_eq!(tau.apply(&g).unwrap(), g);
        assert_eq!(g.orbit_and_degree().1, 4);
        assert_eq!(CycloElement::from_integer(11, 5).orbit_and_degree().1, 1);
    }

    #[test]
    fn expression_rendering() {
        let a = z(7, 1).scale_int(2) - CycloElement::one(7);
        assert_eq!(a.to_expr(), "-1 + 2*zeta(7)^1");
        assert_eq!(CycloElement::zero(3).to_expr(), "0");
    }

    #[test]
    fn totally_positive_examples() {
        assert!(is_totally_positive(&CycloElement::from_integer(7, 2)).unwrap());
        let c = z(7, 1) + z(7, 6);
        assert!(!is_totally_positive(&c).unwrap());
        assert_eq!(is_totally_positive(&z(7, 1)), Err(Error::NotReal));
    }
}
