//! Igusa-Clebsch invariants of binary sextics via Clebsch transvectants.
//!
//! With the Clebsch invariants `A, B, C, D` built from Überschiebungen,
//!
//! ```text
//! I2  = -120 A
//! I4  = -720 A^2 + 6750 B
//! I6  = 8640 A^3 - 108000 A B + 202500 C
//! I10 = -62208 A^5 + 972000 A^3 B + 1620000 A^2 C - 3037500 A B^2
//!       - 6075000 B C - 4556250 D
//! ```
//!
//! This normalization agrees with the root-difference definitions
//! (`I10 = a^10 prod (r_i - r_j)^2`, the discriminant of the sextic).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cyclotomic::CycloElement;
use crate::poly::{discriminant, Poly};
use crate::{Error, Rational, Result};

/// A binary form `sum a_i x^i z^(d-i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<CycloElement>,
}

impl BinaryForm {
    /// Homogenize `p` to degree `d >= deg p`; missing top degrees are roots at infinity.
    pub fn from_poly(p: &Poly, d: usize) -> Self {
        let coeffs = (0..=d).map(|i| p.coeff(i)).collect();
        BinaryForm { degree: d, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[CycloElement] {
        &self.coeffs
    }

    fn zero(d: usize) -> Self {
        BinaryForm {
            degree: d,
            coeffs: vec![CycloElement::zero(1); d + 1],
        }
    }

    fn dx(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        BinaryForm {
            degree: self.degree - 1,
            coeffs: (1..=self.degree)
                .map(|i| self.coeffs[i].scale_int(i as i64))
                .collect(),
        }
    }

    fn dz(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        BinaryForm {
            degree: self.degree - 1,
            coeffs: (0..self.degree)
                .map(|i| self.coeffs[i].scale_int((self.degree - i) as i64))
                .collect(),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.degree + o.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        out
    }

    fn add_scaled(&mut self, o: &Self, k: &Rational) {
        debug_assert_eq!(self.degree, o.degree);
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a = &*a + &b.scale(k);
        }
    }

    /// The value of a degree-0 form.
    fn scalar(&self) -> CycloElement {
        debug_assert_eq!(self.degree, 0);
        self.coeffs[0].clone()
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// The `k`-th transvectant with the `(m-k)!(n-k)!/(m! n!)` normalization.
pub fn transvectant(f: &BinaryForm, g: &BinaryForm, k: usize) -> BinaryForm {
    let (m, n) = (f.degree, g.degree);
    assert!(k <= m && k <= n);
    let mut out = BinaryForm::zero(m + n - 2 * k);
    let norm = Rational::new(
        factorial(m - k) * factorial(n - k),
        factorial(m) * factorial(n),
    );
    for j in 0..=k {
        let mut a = f.clone();
        for _ in 0..k - j {
            a = a.dx();
        }
        for _ in 0..j {
            a = a.dz();
        }
        let mut b = g.clone();
        for _ in 0..j {
            b = b.dx();
        }
        for _ in 0..k - j {
            b = b.dz();
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let coeff = &norm * Rational::from_integer(binomial(k, j) * sign);
        out.add_scaled(&a.mul(&b), &coeff);
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct IgusaInvariants {
    pub i2: CycloElement,
    pub i4: CycloElement,
    pub i6: CycloElement,
    pub i10: CycloElement,
    /// `I2^5 / I10`
    pub abs1: CycloElement,
    /// `I2^3 I4 / I10`
    pub abs2: CycloElement,
    /// `I2^2 I6 / I10`
    pub abs3: CycloElement,
}

impl IgusaInvariants {
    pub fn absolute(&self) -> [&CycloElement; 3] {
        [&self.abs1, &self.abs2, &self.abs3]
    }
}

/// Clebsch invariants `(A, B, C, D)` of a binary sextic.
pub fn clebsch_invariants(f: &BinaryForm) -> [CycloElement; 4] {
    let i = transvectant(f, f, 4);
    let delta = transvectant(&i, &i, 2);
    let a = transvectant(f, f, 6).scalar();
    let b = transvectant(&i, &i, 4).scalar();
    let c = transvectant(&i, &delta, 4).scalar();
    let y1 = transvectant(f, &i, 4);
    let y2 = transvectant(&i, &y1, 2);
    let y3 = transvectant(&i, &y2, 2);
    let d = transvectant(&y3, &y1, 2).scalar();
    [a, b, c, d]
}

/// Igusa-Clebsch invariants of `v^2 = p(u)` for `p` of degree 5 or 6.
pub fn igusa_clebsch(p: &Poly) -> Result<IgusaInvariants> {
    let deg = p.degree().unwrap_or(0);
    if !(deg == 5 || deg == 6) {
        return Err(Error::WrongDegree(deg));
    }
    if discriminant(p)?.is_zero() {
        return Err(Error::SingularModel);
    }
    let f = BinaryForm::from_poly(p, 6);
    let [a, b, c, d] = clebsch_invariants(&f);
    let lin = |terms: &[(i64, &CycloElement)]| {
        terms
            .iter()
            .fold(CycloElement::zero(1), |acc, (k, v)| &acc + &v.scale_int(*k))
    };
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let a5 = &a3 * &a2;
    let ab = &a * &b;
    let i2 = a.scale_int(-120);
    let i4 = lin(&[(-720, &a2), (6750, &b)]);
    let i6 = lin(&[(8640, &a3), (-108000, &ab), (202500, &c)]);
    let i10 = lin(&[
        (-62208, &a5),
        (972000, &(&a3 * &b)),
        (1620000, &(&a2 * &c)),
        (-3037500, &(&ab * &b)),
        (-6075000, &(&b * &c)),
        (-4556250, &d),
    ]);
    if i10.is_zero() {
        return Err(Error::SingularModel);
    }
    let inv10 = i10.inverse()?;
    let i2_2 = &i2 * &i2;
    let i2_3 = &i2_2 * &i2;
    let abs1 = &(&i2_3 * &i2_2) * &inv10;
    let abs2 = &(&i2_3 * &i4) * &inv10;
    let abs3 = &(&i2_2 * &i6) * &inv10;
    Ok(IgusaInvariants {
        i2,
        i4,
        i6,
        i10,
        abs1,
        abs2,
        abs3,
    })
}

/// Invariant-triple equality of two genus-2 models `v^2 = p(u)`.
pub fn isomorphism_check(p: &Poly, q: &Poly) -> Result<bool> {
    let a = igusa_clebsch(p)?;
    let b = igusa_clebsch(q)?;
    Ok(a.absolute() == b.absolute())
}

/// `p(c u)` scaled by `k`: a model of the same curve.
pub fn rescaled(p: &Poly, c: &CycloElement, k: &CycloElement) -> Poly {
    p.substitute_scaled(c).scale(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_quintic_invariants() {
        let p = Poly::from_ints(1, &[1, -3, -6, 2, 3, -1]);
        let inv = igusa_clebsch(&p).unwrap();
        let int = |v: i64| CycloElement::from_integer(1, v);
        assert_eq!(inv.i2, int(432));
        assert_eq!(inv.i10, int(8192));
        assert_eq!(inv.abs1, int(1836660096));
        assert_eq!(inv.abs2, int(28343520));
        assert_eq!(inv.abs3, int(9762768));
    }

    #[test]
    fn degenerate_inputs() {
        let u6 = Poly::monomial(CycloElement::one(1), 6);
        assert_eq!(igusa_clebsch(&u6), Err(Error::SingularModel));
        let cubic = Poly::from_ints(1, &[1, 0, 0, 1]);
        assert_eq!(igusa_clebsch(&cubic), Err(Error::WrongDegree(3)));
    }
}
