//! Arithmetic in `F_p` and in `F_{p²} = F_p(α)` with `α² = θ`, where `θ` is
//! the least primitive root mod `p`.

use serde::Serialize;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut result = 1 % p;
    let mut b = base % p;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    result
}

pub fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

/// Multiplicative order of `a` mod `p` (`a ≠ 0`).
pub fn mult_order(a: u64, p: u64) -> u64 {
    let mut x = a % p;
    let mut k = 1;
    while x != 1 {
        x = x * a % p;
        k += 1;
    }
    k
}

/// Smallest positive primitive root mod `p`.
pub fn primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| mod_pow(g, (p - 1) / q, p) != 1))
        .ok_or_else(|| Error::Internal(format!("no primitive root mod {p}")))
}

/// `t = θ^((p−1)/n)`, an element of order exactly `n` in `F_p^×`.
pub fn diag_param(p: u64, n: u64) -> Result<u64> {
    let theta = primitive_root(p)?;
    if n == 0 || !(p - 1).is_multiple_of(n) {
        return Err(Error::BadDivisor { n, modulus: p - 1 });
    }
    Ok(mod_pow(theta, (p - 1) / n, p))
}

/// `u + wα` in `F_{p²}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fp2Element {
    pub u: u64,
    pub w: u64,
}

/// `F_p(α)` with `α² = θ`; `θ` is a non-square, so this is a field.
#[derive(Clone, Copy, Debug)]
pub struct QuadraticExtension {
    pub p: u64,
    pub theta: u64,
}

impl QuadraticExtension {
    /// Requires an odd prime.
    pub fn new(p: u64) -> Result<Self> {
        let theta = primitive_root(p)?;
        if p == 2 {
            return Err(Error::SpecViolation("F_4 = F_2(α) with α² = θ needs p odd".into()));
        }
        Ok(Self { p, theta })
    }

    pub fn one(&self) -> Fp2Element {
        Fp2Element { u: 1, w: 0 }
    }

    pub fn mul(&self, a: Fp2Element, b: Fp2Element) -> Fp2Element {
        let p = self.p;
        Fp2Element {
            u: (a.u * b.u + a.w * b.w % p * self.theta) % p,
            w: (a.u * b.w + a.w * b.u) % p,
        }
    }

    pub fn pow(&self, a: Fp2Element, mut exp: u64) -> Fp2Element {
        let mut result = self.one();
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }

    /// `u² − θw²`, the product of `a` with its Frobenius conjugate `u − wα`.
    pub fn norm(&self, a: Fp2Element) -> u64 {
        let p = self.p;
        (a.u * a.u % p + p - a.w * a.w % p * self.theta % p) % p
    }

    /// Multiplicative order of a non-zero element.
    pub fn order(&self, a: Fp2Element) -> u64 {
        let group = self.p * self.p - 1;
        let mut ord = group;
        for q in prime_factors(group) {
            while ord.is_multiple_of(q) && self.pow(a, ord / q) == self.one() {
                ord /= q;
            }
        }
        ord
    }

    /// Generator of `F_{p²}^×` least in `(u, w)` order.
    pub fn generator(&self) -> Fp2Element {
        let target = self.p * self.p - 1;
        (0..self.p)
            .flat_map(|u| (0..self.p).map(move |w| Fp2Element { u, w }))
            .filter(|&a| a != Fp2Element { u: 0, w: 0 })
            .find(|&a| self.order(a) == target)
            .expect("F_{p^2}^* is cyclic")
    }
}

/// `(e, f)` with `e² − θf² = 1` and `e + fα` of order exactly `n`.
///
/// The cyclic norm-1 subgroup of order `p+1` is `⟨g^(p−1)⟩` for the
/// canonical generator `g`; its subgroup of order `n` is generated by
/// `z = g^((p−1)(p+1)/n)`. Among the generators `z^j` (`gcd(j, n) = 1`) the
/// least in `(e, f)` order is returned, which does not depend on `g`.
pub fn norm_one_element(p: u64, n: u64) -> Result<(u64, u64)> {
    let field = QuadraticExtension::new(p)?;
    if n == 0 || !(p + 1).is_multiple_of(n) {
        return Err(Error::BadDivisor { n, modulus: p + 1 });
    }
    let g = field.generator();
    let z = field.pow(field.pow(g, p - 1), (p + 1) / n);
    if field.order(z) != n || field.norm(z) != 1 {
        return Err(Error::Internal(format!("norm-one element of order {n} not found")));
    }
    let best = (1..=n)
        .filter(|&j| crate::perm::gcd(j, n) == 1)
        .map(|j| field.pow(z, j))
        .min()
        .expect("j = 1 qualifies");
    Ok((best.u, best.w))
}
