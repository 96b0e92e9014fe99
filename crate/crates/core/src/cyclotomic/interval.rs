//! Certified real signs of cyclotomic numbers.
//!
//! Values are enclosed in fixed-point intervals `[lo, hi] * 2^-w` with BigInt
//! endpoints. Every operation rounds outward, so the true value always lies in
//! the enclosure and a sign decided at one precision stays decided at any higher one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{CycloElement, GaloisAuto};
use crate::{Error, Result};

const START_BITS: u32 = 64;
const MAX_BITS: u32 = 1 << 16;
const GUARD_BITS: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

#[derive(Debug, Clone)]
struct Iv {
    lo: BigInt,
    hi: BigInt,
}

fn floor_shift(x: &BigInt, w: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << w))
}

fn ceil_shift(x: &BigInt, w: u32) -> BigInt {
    -floor_shift(&-x, w)
}

impl Iv {
    fn exact(v: BigInt) -> Self {
        Iv { lo: v.clone(), hi: v }
    }

    fn add(&self, o: &Iv) -> Iv {
        Iv {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn neg(&self) -> Iv {
        Iv {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    fn mul(&self, o: &Iv, w: u32) -> Iv {
        let p = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let min = p.iter().min().unwrap();
        let max = p.iter().max().unwrap();
        Iv {
            lo: floor_shift(min, w),
            hi: ceil_shift(max, w),
        }
    }

    fn mul_int(&self, k: &BigInt) -> Iv {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if k.is_negative() {
            Iv { lo: b, hi: a }
        } else {
            Iv { lo: a, hi: b }
        }
    }

    /// Division by a positive integer.
    fn div_int(&self, k: &BigInt) -> Iv {
        Iv {
            lo: self.lo.div_floor(k),
            hi: -((-&self.hi).div_floor(k)),
        }
    }

    /// Widen by `[-r, r]` for `r >= 0`.
    fn widen(&self, r: &BigInt) -> Iv {
        Iv {
            lo: &self.lo - r,
            hi: &self.hi + r,
        }
    }

    fn magnitude(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }
}

/// Enclosure of `1 / d` at scale `2^-w`.
fn recip(d: &BigInt, w: u32) -> Iv {
    let one = BigInt::one() << w;
    let lo = one.div_floor(d);
    let hi = if (&lo * d) == one { lo.clone() } else { &lo + 1 };
    Iv { lo, hi }
}

/// `atan(1/x)` by its alternating series with the first omitted term as remainder.
fn atan_recip(x: u64, w: u32) -> Iv {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut pow = x.clone();
    let mut acc = Iv::exact(BigInt::zero());
    let mut j: u64 = 0;
    loop {
        let d = &pow * BigInt::from(2 * j + 1);
        let term = recip(&d, w);
        if term.hi <= BigInt::one() {
            return acc.widen(&term.hi);
        }
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.add(&term.neg())
        };
        pow *= &x2;
        j += 1;
    }
}

fn pi(w: u32) -> Iv {
    let a = atan_recip(5, w).mul_int(&BigInt::from(16));
    let b = atan_recip(239, w).mul_int(&BigInt::from(4));
    a.add(&b.neg())
}

/// `cos(theta)` for an enclosure of `theta` inside `[0, 2]`.
fn cos_small(theta: &Iv, w: u32) -> Iv {
    let one = BigInt::one() << w;
    let t2 = theta.mul(theta, w);
    let t2 = Iv {
        lo: t2.lo.max(BigInt::zero()),
        hi: t2.hi,
    };
    let mut term = Iv::exact(one.clone());
    let mut acc = term.clone();
    let mut k: u64 = 1;
    loop {
        // term_k = term_{k-1} * theta^2 / ((2k-1)(2k)), kept non-negative.
        term = term.mul(&t2, w).div_int(&BigInt::from((2 * k - 1) * (2 * k)));
        if term.magnitude() <= BigInt::one() {
            return acc.widen(&(term.magnitude() + 1));
        }
        acc = if k % 2 == 1 {
            acc.add(&term.neg())
        } else {
            acc.add(&term)
        };
        k += 1;
    }
}

/// `cos(2 pi a / n)` for integers `0 <= a < n`.
fn cos_turn(a: u64, n: u64, pi_iv: &Iv, w: u32) -> Iv {
    let mut a = a % n;
    if 2 * a > n {
        a = n - a;
    }
    // now a / n in [0, 1/2]
    let (num, den, negate) = if 4 * a > n {
        // cos(2 pi a/n) = -cos(2 pi (n - 2a) / (2n))
        (n - 2 * a, 2 * n, true)
    } else {
        (a, n, false)
    };
    let theta = pi_iv
        .mul_int(&BigInt::from(2 * num))
        .div_int(&BigInt::from(den));
    let c = cos_small(&theta, w);
    if negate {
        c.neg()
    } else {
        c
    }
}

fn enclose(x: &CycloElement, t: u64, w: u32) -> Iv {
    let n = x.conductor();
    let pi_iv = pi(w);
    let mut acc = Iv::exact(BigInt::zero());
    for (j, c) in x.numerators().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cj = if j == 0 {
            Iv::exact(BigInt::one() << w)
        } else {
            let e = ((j as u128 * t as u128) % n as u128) as u64;
            cos_turn(e, n, &pi_iv, w)
        };
        acc = acc.add(&cj.mul_int(c));
    }
    acc
}

fn decide(iv: &Iv) -> Option<Sign> {
    if iv.lo.is_positive() {
        Some(Sign::Positive)
    } else if iv.hi.is_negative() {
        Some(Sign::Negative)
    } else {
        None
    }
}

fn check_real(x: &CycloElement, embedding: &GaloisAuto) -> Result<CycloElement> {
    let y = embedding.apply(x)?;
    if !y.is_real() {
        return Err(Error::NotReal);
    }
    Ok(y)
}

/// Sign of the real number `x` at `zeta_n -> exp(2 pi i t / n)`.
///
/// The imaginary parts cancel exactly for real `x`, so only cosines are evaluated.
/// Precision starts at 64 bits and doubles until the enclosure excludes zero.
pub fn certified_sign(x: &CycloElement, embedding: &GaloisAuto) -> Result<Sign> {
    let y = check_real(x, embedding)?;
    if y.is_zero() {
        return Ok(Sign::Zero);
    }
    let mut bits = START_BITS;
    loop {
        if let Some(s) = decide(&enclose(&y, 1, bits + GUARD_BITS)) {
            return Ok(s);
        }
        if bits >= MAX_BITS {
            return Err(Error::SignUndecided(bits));
        }
        log::debug!(
            "certified_sign: escalating precision {} -> {} bits (conductor {})",
            bits,
            bits * 2,
            y.conductor()
        );
        bits *= 2;
    }
}

/// One evaluation at a fixed working precision; `None` when the enclosure
/// straddles zero. Exposed so the escalation behaviour can be checked.
pub fn certified_sign_at_precision(
    x: &CycloElement,
    embedding: &GaloisAuto,
    bits: u32,
) -> Result<Option<Sign>> {
    let y = check_real(x, embedding)?;
    if y.is_zero() {
        return Ok(Some(Sign::Zero));
    }
    Ok(decide(&enclose(&y, 1, bits)))
}

/// Width-checked enclosure of pi, for tests.
#[cfg(test)]
pub(crate) fn pi_enclosure(bits: u32) -> (BigInt, BigInt) {
    let p = pi(bits);
    (p.lo, p.hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_is_enclosed() {
        let (lo, hi) = pi_enclosure(64);
        // 3.14159265358979323846 * 2^64
        let approx: BigInt = "57952155664616982739".parse().unwrap();
        assert!(lo <= approx && approx <= &hi + 1);
        assert!(&hi - &lo < BigInt::from(4096));
    }

    #[test]
    fn signs_of_simple_values() {
        let id = |n| GaloisAuto::identity(n);
        assert_eq!(
            certified_sign(&CycloElement::from_integer(1, 2), &id(1)).unwrap(),
            Sign::Positive
        );
        let c = CycloElement::zeta_pow(7, 1) + CycloElement::zeta_pow(7, 6);
        assert_eq!(certified_sign(&c, &id(7)).unwrap(), Sign::Positive);
        let t3 = GaloisAuto::new(7, 3).unwrap();
        assert_eq!(certified_sign(&c, &t3).unwrap(), Sign::Negative);
        assert_eq!(
            certified_sign(&CycloElement::zero(5), &id(5)).unwrap(),
            Sign::Zero
        );
        assert_eq!(
            certified_sign(&CycloElement::zeta_pow(5, 1), &id(5)),
            Err(Error::NotReal)
        );
        // zeta_12 + zeta_12^-1 - sqrt(3) with sqrt(3) = zeta_12 + zeta_12^11 exactly: zero.
        let s = CycloElement::zeta_pow(12, 1) + CycloElement::zeta_pow(12, 11);
        let three = &s * &s;
        assert_eq!(three, CycloElement::from_integer(1, 3));
    }

    #[test]
    fn tiny_values_need_escalation() {
        // 2cos(2pi/N) - 2cos(2pi*1/N) style near-cancellation: x = c - r with r a
        // truncation of c, so x is a tiny positive number.
        let n = 7;
        let c = CycloElement::zeta_pow(n, 1) + CycloElement::zeta_pow(n, 6);
        // 2cos(2pi/7) = 1.246979603717467061050009768008479...
        let approx = crate::Rational::new(
            "1246979603717467061050009768008".parse().unwrap(),
            "1000000000000000000000000000000".parse().unwrap(),
        );
        let x = &c - &CycloElement::from_rational(n, &approx);
        let id = GaloisAuto::identity(n);
        assert_eq!(certified_sign_at_precision(&x, &id, 32).unwrap(), None);
        let s = certified_sign(&x, &id).unwrap();
        assert_eq!(s, Sign::Positive);
        for bits in [128, 256, 512] {
            assert_eq!(certified_sign_at_precision(&x, &id, bits).unwrap(), Some(s));
        }
    }
}
