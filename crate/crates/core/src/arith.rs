//! Small integer number theory on machine words.

use alloc::vec::Vec;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `a` modulo `m`, or `None` when `gcd(a, m) != 1`.
pub fn mult_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut ord = 1;
    while x != 1 {
        x = mod_mul(x, a, m);
        ord += 1;
    }
    Some(ord)
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return if m == 1 { Some(0) } else { None };
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|&t| gcd(t, n) == 1).count() as u64
}

/// The units of `Z/n`, sorted. For `n = 1` this is `[0]`, the unit group of
/// the zero ring seen as `Z/1`.
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return alloc::vec![0];
    }
    (1..n).filter(|&t| gcd(t, n) == 1).collect()
}

/// A small generating set of `(Z/n)^*`, built greedily.
pub fn unit_generators(n: u64) -> Vec<u64> {
    let all = units(n);
    let mut gens = Vec::new();
    let mut span: Vec<u64> = alloc::vec![1 % n.max(1)];
    for &t in &all {
        if span.contains(&t) {
            continue;
        }
        gens.push(t);
        span = closure_mod(&gens, n);
        if span.len() == all.len() {
            break;
        }
    }
    gens
}

/// Multiplicative closure of `gens` in `(Z/n)^*`, sorted.
pub fn closure_mod(gens: &[u64], n: u64) -> Vec<u64> {
    let one = 1 % n.max(1);
    let mut seen = alloc::collections::BTreeSet::new();
    seen.insert(one);
    let mut frontier = alloc::vec![one];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = mod_mul(x, g, n);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Least non-negative residue.
pub fn residue(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

/// 2-adic valuation of a positive integer.
pub fn v2(mut x: u64) -> u32 {
    let mut v = 0;
    while x % 2 == 0 && x > 0 {
        x /= 2;
        v += 1;
    }
    v
}
