//! Dense polynomials over the prime field F_p, little-endian coefficient vectors.
//!
//! Only what irreducibility testing and inversion need: no factorization.

pub type Poly = Vec<u32>;

fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn inv_p(a: u32, p: u32) -> u32 {
    crate::arith::inv_mod(a as u64, p as u64).expect("nonzero residue mod prime") as u32
}

pub fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Poly = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub fn div_rem(a: &[u32], b: &[u32], p: u32) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = inv_p(b[db], p) as u64;
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let mut quo = vec![0u32; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = (r[dr] as u64 * lead_inv % p as u64) as u32;
        let shift = dr - db;
        quo[shift] = c;
        for (j, &bj) in b.iter().enumerate().take(db + 1) {
            let v = (c as u64 * bj as u64) % p as u64;
            r[shift + j] = ((r[shift + j] as u64 + p as u64 - v) % p as u64) as u32;
        }
        trim(&mut r);
    }
    trim(&mut quo);
    (quo, r)
}

pub fn rem(a: &[u32], b: &[u32], p: u32) -> Poly {
    div_rem(a, b, p).1
}

pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(d) = degree(&a) {
        let li = inv_p(a[d], p) as u64;
        for c in a.iter_mut() {
            *c = (*c as u64 * li % p as u64) as u32;
        }
    }
    a
}

/// `base^e mod modulus`.
pub fn pow_mod(base: &[u32], mut e: u64, modulus: &[u32], p: u32) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = rem(base, modulus, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `modulus` by the extended Euclidean algorithm.
pub fn inv_mod(a: &[u32], modulus: &[u32], p: u32) -> Option<Poly> {
    let (mut r0, mut r1) = (modulus.to_vec(), rem(a, modulus, p));
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![1]);
    trim(&mut r0);
    while !r1.is_empty() {
        let (qt, r) = div_rem(&r0, &r1, p);
        let s = sub(&s0, &mul(&qt, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    // r0 is the gcd; a unit iff degree 0
    match degree(&r0) {
        Some(0) => {
            let li = inv_p(r0[0], p) as u64;
            let mut out: Poly = s0
                .iter()
                .map(|&c| (c as u64 * li % p as u64) as u32)
                .collect();
            trim(&mut out);
            Some(rem(&out, modulus, p))
        }
        _ => None,
    }
}

/// Rabin's test: a monic `f` of degree `d` is irreducible over F_p iff
/// `x^(p^d) = x (mod f)` and `gcd(x^(p^(d/r)) - x, f) = 1` for each prime `r | d`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    let mut frob = vec![x.clone()];
    let mut h = x.clone();
    for _ in 0..d {
        h = pow_mod(&h, p as u64, f, p);
        frob.push(h.clone());
    }
    if sub(&frob[d], &x, p) != Vec::<u32>::new() {
        return false;
    }
    crate::arith::factorize(d as u64).into_iter().all(|(r, _)| {
        let g = gcd(&sub(&frob[d / r as usize], &x, p), f, p);
        g == vec![1]
    })
}
