//! Dense univariate polynomials with cyclotomic coefficients.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::cyclotomic::CycloElement;
use crate::{Error, Result};

/// Coefficients are stored low degree first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<CycloElement>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<CycloElement>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(n: u64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| CycloElement::from_integer(n, c))
                .collect(),
        )
    }

    pub fn constant(c: CycloElement) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(c: CycloElement, deg: usize) -> Self {
        let n = c.conductor();
        let mut v = vec![CycloElement::zero(n); deg];
        v.push(c);
        Self::from_coeffs(v)
    }

    /// `x - r`
    pub fn linear(r: &CycloElement) -> Self {
        Self::from_coeffs(vec![-r, CycloElement::one(r.conductor())])
    }

    /// `prod (x - r)`
    pub fn from_roots(roots: &[CycloElement]) -> Self {
        roots
            .iter()
            .fold(Poly::constant(CycloElement::one(1)), |acc, r| {
                &acc * &Poly::linear(r)
            })
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(CycloElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[CycloElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero (conductor 1) past the degree.
    pub fn coeff(&self, i: usize) -> CycloElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| CycloElement::zero(1))
    }

    pub fn leading(&self) -> Option<&CycloElement> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &CycloElement) -> Poly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(CycloElement::one(1));
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    pub fn eval(&self, x: &CycloElement) -> CycloElement {
        let mut acc = CycloElement::zero(x.conductor());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale_int(i as i64))
                .collect(),
        )
    }

    /// `p(lambda * x)`
    pub fn substitute_scaled(&self, lambda: &CycloElement) -> Poly {
        let mut pw = CycloElement::one(lambda.conductor());
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw = &pw * lambda;
        }
        Self::from_coeffs(out)
    }

    /// Apply a Galois exponent to every coefficient (coefficients are first
    /// promoted to a common conductor `n`).
    pub fn galois(&self, n: u64, t: u64) -> Result<Poly> {
        Ok(Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| c.promote(n).galois(t))
                .collect::<Result<Vec<_>>>()?,
        ))
    }

    /// Least common conductor of the coefficients.
    pub fn conductor(&self) -> u64 {
        self.coeffs
            .iter()
            .fold(1, |acc, c| crate::arith::lcm(acc, c.conductor()))
    }

    /// Render in the `zeta(n)^j` grammar with the given variable name.
    pub fn to_expr(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mon = match i {
                0 => String::new(),
                1 => String::from(var),
                _ => alloc::format!("{var}^{i}"),
            };
            let term = if i == 0 {
                alloc::format!("({c})")
            } else if c.is_one() {
                mon
            } else {
                alloc::format!("({c})*{mon}")
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let len = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs(
            (0..len)
                .map(|i| match (self.coeffs.get(i), o.coeffs.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let n = crate::arith::lcm(self.conductor(), o.conductor());
        let a: Vec<CycloElement> = self.coeffs.iter().map(|c| c.promote(n)).collect();
        let b: Vec<CycloElement> = o.coeffs.iter().map(|c| c.promote(n)).collect();
        let mut out = vec![CycloElement::zero(n); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = &out[i + j] + &(x * y);
                }
            }
        }
        Poly::from_coeffs(out)
    }
}

/// Determinant by Gaussian elimination over the coefficient field.
pub fn determinant(mut m: Vec<Vec<CycloElement>>) -> Result<CycloElement> {
    let size = m.len();
    if size == 0 {
        return Ok(CycloElement::one(1));
    }
    let mut det = CycloElement::one(1);
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !m[r][col].is_zero()) else {
            return Ok(CycloElement::zero(1));
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = &det * &p;
        let pinv = p.inverse()?;
        for r in col + 1..size {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &pinv;
            for c in col..size {
                let v = &m[r][c] - &(&f * &m[col][c]);
                m[r][c] = v;
            }
        }
    }
    Ok(det)
}

/// Sylvester resultant `Res(f, g)`.
pub fn resultant(f: &Poly, g: &Poly) -> Result<CycloElement> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Ok(CycloElement::zero(1));
    };
    let size = df + dg;
    if size == 0 {
        return Ok(CycloElement::one(1));
    }
    let mut rows = Vec::with_capacity(size);
    for (p, d, reps) in [(f, df, dg), (g, dg, df)] {
        for r in 0..reps {
            let mut row = vec![CycloElement::zero(1); size];
            for i in 0..=d {
                // descending coefficients
                row[r + i] = p.coeff(d - i);
            }
            rows.push(row);
        }
    }
    determinant(rows)
}

/// `disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &Poly) -> Result<CycloElement> {
    let d = f.degree().ok_or(Error::WrongDegree(0))?;
    if d == 0 {
        return Err(Error::WrongDegree(0));
    }
    let r = resultant(f, &f.derivative())?;
    let lc_inv = f.leading().expect("nonzero").inverse()?;
    let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
    Ok((&r * &lc_inv).scale_int(sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> CycloElement {
        CycloElement::from_integer(1, v)
    }

    #[test]
    fn arithmetic() {
        let p = Poly::from_ints(1, &[1, 1]);
        let q = p.pow(3);
        assert_eq!(q, Poly::from_ints(1, &[1, 3, 3, 1]));
        assert_eq!(q.eval(&int(2)), int(27));
        assert_eq!(q.derivative(), Poly::from_ints(1, &[3, 6, 3]));
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn discriminants() {
        // x^2 + bx + c -> b^2 - 4c
        assert_eq!(
            discriminant(&Poly::from_ints(1, &[3, 5, 1])).unwrap(),
            int(13)
        );
        // x^3 - x -> 4
        assert_eq!(
            discriminant(&Poly::from_ints(1, &[0, -1, 0, 1])).unwrap(),
            int(4)
        );
        let roots: Vec<_> = (0..4).map(|j| CycloElement::zeta_pow(8, 2 * j)).collect();
        let f = Poly::from_roots(&roots);
        assert_eq!(f, Poly::from_ints(1, &[-1, 0, 0, 0, 1]));
        assert_eq!(discriminant(&f).unwrap(), int(-256));
        assert!(discriminant(&Poly::from_ints(1, &[0, 0, 1])).unwrap().is_zero());
    }

    #[test]
    fn resultant_of_linear_factors() {
        let f = Poly::from_ints(1, &[-1, 1]);
        let g = Poly::from_ints(1, &[-3, 1]);
        // Res(x-1, x-3) = 1 - 3
        assert_eq!(resultant(&f, &g).unwrap(), int(-2));
    }
}
