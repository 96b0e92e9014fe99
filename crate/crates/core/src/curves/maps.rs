//! Coordinate maps of the two curve families and the rational functions they use.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cyclotomic::CycloElement;
use crate::poly::Poly;
use crate::Result;

/// `c * prod (z - r)^e` with distinct roots and nonzero exponents.
#[derive(Debug, Clone)]
pub struct FactoredRational {
    pub constant: CycloElement,
    pub factors: Vec<(CycloElement, i64)>,
}

impl PartialEq for FactoredRational {
    fn eq(&self, o: &Self) -> bool {
        self.constant == o.constant
            && self.factors.len() == o.factors.len()
            && self
                .factors
                .iter()
                .all(|(r, e)| o.exponent_of(r) == *e)
    }
}

impl FactoredRational {
    pub fn constant(c: CycloElement) -> Self {
        FactoredRational {
            constant: c,
            factors: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(CycloElement::one(1))
    }

    /// `(z - r)^e`
    pub fn linear(r: CycloElement, e: i64) -> Self {
        let mut f = Self::one();
        f.push(r, e);
        f
    }

    fn push(&mut self, r: CycloElement, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(pos) = self.factors.iter().position(|(s, _)| *s == r) {
            self.factors[pos].1 += e;
            if self.factors[pos].1 == 0 {
                self.factors.remove(pos);
            }
        } else {
            self.factors.push((r, e));
        }
    }

    pub fn exponent_of(&self, r: &CycloElement) -> i64 {
        self.factors
            .iter()
            .find(|(s, _)| s == r)
            .map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = FactoredRational {
            constant: &self.constant * &o.constant,
            factors: self.factors.clone(),
        };
        for (r, e) in &o.factors {
            out.push(r.clone(), *e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        Ok(FactoredRational {
            constant: self.constant.pow(k)?,
            factors: self
                .factors
                .iter()
                .filter(|_| k != 0)
                .map(|(r, e)| (r.clone(), e * k))
                .collect(),
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        self.pow(-1)
    }

    /// `R(lambda z)`: each `(lambda z - r)` becomes `lambda (z - r/lambda)`.
    pub fn substitute_scaled(&self, lambda: &CycloElement) -> Result<Self> {
        let inv = lambda.inverse()?;
        let mut out = FactoredRational::constant(self.constant.clone());
        for (r, e) in &self.factors {
            out.constant = &out.constant * &lambda.pow(*e)?;
            out.push(r * &inv, *e);
        }
        Ok(out)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty() && self.constant.is_one()
    }

    /// Dense numerator and denominator.
    pub fn to_fraction(&self) -> (Poly, Poly) {
        let mut num = Poly::constant(self.constant.clone());
        let mut den = Poly::constant(CycloElement::one(1));
        for (r, e) in &self.factors {
            let lin = Poly::linear(r).pow(e.unsigned_abs() as u32);
            if *e > 0 {
                num = &num * &lin;
            } else {
                den = &den * &lin;
            }
        }
        (num, den)
    }

    pub fn to_expr(&self, var: &str) -> String {
        let mut parts = Vec::new();
        if !self.constant.is_one() || self.factors.is_empty() {
            parts.push(format!("({})", self.constant));
        }
        for (r, e) in &self.factors {
            let base = if r.is_zero() {
                String::from(var)
            } else {
                format!("({var} - ({r}))")
            };
            parts.push(if *e == 1 { base } else { format!("{base}^{e}") });
        }
        parts.join("*")
    }

    /// A readable difference `self / other` for failure reports.
    pub fn quotient_expr(&self, o: &Self, var: &str) -> String {
        match o.inverse() {
            Ok(inv) => self.mul(&inv).to_expr(var),
            Err(_) => String::from("undefined"),
        }
    }
}

/// `(z, y) -> (lambda z, R(z) y^e)` on `y^q = F(z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZyMap {
    pub lambda: CycloElement,
    pub coeff: FactoredRational,
    pub e: u64,
}

impl ZyMap {
    pub fn identity() -> Self {
        ZyMap {
            lambda: CycloElement::one(1),
            coeff: FactoredRational::one(),
            e: 1,
        }
    }

    /// `self after other` (apply `other` first), with `y^e` reduced by `y^q = F`.
    pub fn compose(&self, other: &ZyMap, q: u64, f: &FactoredRational) -> Result<ZyMap> {
        let coeff = self
            .coeff
            .substitute_scaled(&other.lambda)?
            .mul(&other.coeff.pow(self.e as i64)?);
        let e = self.e * other.e;
        let coeff = coeff.mul(&f.pow((e / q) as i64)?);
        Ok(ZyMap {
            lambda: &self.lambda * &other.lambda,
            coeff,
            e: e % q,
        })
    }

    pub fn pow(&self, k: u64, q: u64, f: &FactoredRational) -> Result<ZyMap> {
        let mut acc = ZyMap::identity();
        for _ in 0..k {
            acc = self.compose(&acc, q, f)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.lambda.is_one() && self.coeff.is_one() && self.e == 1
    }

    pub fn to_expr(&self) -> String {
        let z = if self.lambda.is_one() {
            String::from("z")
        } else {
            format!("({})*z", self.lambda)
        };
        let y = match self.e {
            0 => String::from("1"),
            1 => String::from("y"),
            e => format!("y^{e}"),
        };
        format!("(z, y) -> ({z}, {}*{y})", self.coeff.to_expr("z"))
    }
}

/// `(x, y) -> (lambda x^s, mu x^c y)` with `s = +1` or `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMap {
    pub lambda: CycloElement,
    pub s: i64,
    pub mu: CycloElement,
    pub c: i64,
}

impl LaurentMap {
    pub fn identity() -> Self {
        LaurentMap {
            lambda: CycloElement::one(1),
            s: 1,
            mu: CycloElement::one(1),
            c: 0,
        }
    }

    /// `self after other`.
    pub fn compose(&self, o: &LaurentMap) -> Result<LaurentMap> {
        Ok(LaurentMap {
            lambda: &self.lambda * &o.lambda.pow(self.s)?,
            s: self.s * o.s,
            mu: &(&self.mu * &o.mu) * &o.lambda.pow(self.c)?,
            c: o.s * self.c + o.c,
        })
    }

    pub fn pow(&self, k: u64) -> Result<LaurentMap> {
        let mut acc = LaurentMap::identity();
        let mut b = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = b.compose(&acc)?;
            }
            k >>= 1;
            if k > 0 {
                b = b.compose(&b)?;
            }
        }
        Ok(acc)
    }

    pub fn to_expr(&self) -> String {
        let x = match self.s {
            1 => format!("({})*x", self.lambda),
            _ => format!("({})/x", self.lambda),
        };
        let y = match self.c {
            0 => format!("({})*y", self.mu),
            c if c > 0 => format!("({})*x^{c}*y", self.mu),
            c => format!("({})*y/x^{}", self.mu, -c),
        };
        format!("(x, y) -> ({x}, {y})")
    }
}

/// Laurent polynomials in `x` that are affine in `Y = y^2`, keyed by
/// `(power of x, power of Y)`.
#[derive(Debug, Clone, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, u32), CycloElement>,
}

impl PartialEq for LaurentPoly2 {
    fn eq(&self, o: &Self) -> bool {
        let keys: alloc::collections::BTreeSet<_> =
            self.terms.keys().chain(o.terms.keys()).copied().collect();
        keys.into_iter().all(|k| self.coeff(k) == o.coeff(k))
    }
}

impl LaurentPoly2 {
    pub fn add_term(&mut self, x: i64, y2: u32, c: CycloElement) {
        let entry = self.terms.entry((x, y2)).or_insert_with(|| CycloElement::zero(1));
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(x, y2));
        }
    }

    pub fn coeff(&self, k: (i64, u32)) -> CycloElement {
        self.terms.get(&k).cloned().unwrap_or_else(|| CycloElement::zero(1))
    }

    pub fn scale_shift(&self, u: &CycloElement, w: i64) -> LaurentPoly2 {
        let mut out = LaurentPoly2::default();
        for ((x, y), c) in &self.terms {
            out.add_term(x + w, *y, c * u);
        }
        out
    }

    pub fn sub(&self, o: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for ((x, y), c) in &o.terms {
            out.add_term(*x, *y, -c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_expr(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        self.terms
            .iter()
            .map(|((x, y), c)| {
                let yy = if *y == 0 { String::new() } else { format!("*y^{}", 2 * y) };
                format!("({c})*x^{x}{yy}")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
