use std::fmt;

use super::poly;
use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 24;

const MAX_DEGREE: usize = 24;

/// The finite field F_p[x]/(f) with `f` monic irreducible.
///
/// Elements are `u32` codes: the little-endian base-`p` reading of the
/// coefficient vector, so `0` is zero, `1` is one and codes below `p` are
/// the prime field.
#[derive(Clone, PartialEq, Eq)]
pub struct GaloisField {
    p: u32,
    degree: usize,
    modulus: Vec<u32>,
    order: u32,
    // x^degree = -(lower part); kept as bits for p = 2
    modulus_bits: u64,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}; modulus={})",
            self.p,
            self.degree,
            self.modulus_code()
        )
    }
}

impl GaloisField {
    /// GF(p^degree) using the lexicographically smallest monic irreducible
    /// polynomial, ordered by its base-`p` integer encoding.
    pub fn smallest(p: u32, degree: usize) -> Result<Self> {
        if !crate::arith::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        check_size(p, degree)?;
        let tails = (p as u64).pow(degree as u32);
        for tail in 0..tails {
            let mut f = digits_of(tail, p, degree);
            f.push(1);
            if poly::is_irreducible(&f, p) {
                return Self::with_modulus(p, f);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// Builds the field from an explicit monic modulus, checking irreducibility.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        let degree = poly::degree(&modulus)
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::InvalidArgument("modulus must have degree >= 1".into()))?;
        check_size(p, degree)?;
        if modulus[degree] != 1 || modulus.len() != degree + 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidArgument(
                "modulus must be monic and reduced mod p".into(),
            ));
        }
        if !poly::is_irreducible(&modulus, p) {
            return Err(Error::InvalidArgument("modulus is reducible".into()));
        }
        let order = (p as u64).pow(degree as u32) as u32;
        let modulus_bits = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i))
        } else {
            0
        };
        Ok(Self {
            p,
            degree,
            modulus,
            order,
            modulus_bits,
        })
    }

    /// Rebuilds a field from the `p`, `degree` and modulus encoding used in matrix files.
    pub fn from_modulus_code(p: u32, degree: usize, code: u64) -> Result<Self> {
        let f = digits_of(code, p, degree + 1);
        if code >= (p as u64).pow(degree as u32 + 1) {
            return Err(Error::InvalidArgument("modulus code out of range".into()));
        }
        Self::with_modulus(p, f)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Base-`p` encoding of the full (monic) modulus polynomial.
    pub fn modulus_code(&self) -> u64 {
        self.modulus
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    /// The class of `x`, i.e. the generator of the power basis.
    pub fn generator(&self) -> u32 {
        if self.degree == 1 {
            // x = -f(0) when the modulus is linear
            (self.p - self.modulus[0]) % self.p
        } else {
            self.p
        }
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order
    }

    pub fn digits(&self, a: u32) -> Vec<u32> {
        digits_of(a as u64, self.p, self.degree)
    }

    pub fn from_digits(&self, d: &[u32]) -> u32 {
        d.iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.p + c % self.p)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, k: i64) -> u32 {
        crate::arith::rem_euclid(k, self.p as u64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0u32, 1u32);
        while a > 0 || b > 0 {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            a /= self.p;
            b /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let (mut a, mut out, mut place) = (a, 0u32, 1u32);
        while a > 0 {
            let d = (self.p - a % self.p) % self.p;
            out += d * place;
            a /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.p == 2 {
            return self.mul_binary(a, b);
        }
        let d = self.degree;
        let p = self.p as u64;
        let mut x = [0u64; MAX_DEGREE];
        let mut y = [0u64; MAX_DEGREE];
        let (mut ta, mut tb) = (a as u64, b as u64);
        for i in 0..d {
            x[i] = ta % p;
            y[i] = tb % p;
            ta /= p;
            tb /= p;
        }
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..d {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        for i in (d..2 * d - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..d {
                let v = c * self.modulus[j] as u64 % p;
                prod[i - d + j] = (prod[i - d + j] + p - v) % p;
            }
        }
        let mut out = 0u64;
        for i in (0..d).rev() {
            out = out * p + prod[i];
        }
        out as u32
    }

    fn mul_binary(&self, a: u32, b: u32) -> u32 {
        let d = self.degree;
        let mut prod = 0u64;
        let (a, mut b) = (a as u64, b as u64);
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                prod ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        for i in (d..2 * d - 1).rev() {
            if prod >> i & 1 == 1 {
                prod ^= self.modulus_bits << (i - d);
            }
        }
        prod as u32
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// polynomial representatives.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let inv = poly::inv_mod(&self.digits(a), &self.modulus, self.p)?;
        Some(self.from_digits(&inv))
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut ord = self.order as u64 - 1;
        for (r, _) in crate::arith::factorize(ord) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// Smallest-encoding generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        let n = self.order as u64 - 1;
        (1..self.order)
            .find(|&a| self.element_order(a) == Some(n))
            .expect("multiplicative group is cyclic")
    }

    /// Evaluates a polynomial with prime-field coefficients at `a`.
    pub fn eval_prime_poly(&self, coeffs: &[u32], a: u32) -> u32 {
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, a), c % self.p))
    }
}

fn check_size(p: u32, degree: usize) -> Result<()> {
    let too_big = degree > MAX_DEGREE
        || (p as u64)
            .checked_pow(degree as u32)
            .is_none_or(|o| o > MAX_ORDER);
    if too_big {
        Err(Error::FieldTooLarge { p, degree })
    } else {
        Ok(())
    }
}

fn digits_of(mut code: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((code % p as u64) as u32);
        code /= p as u64;
    }
    out
}
