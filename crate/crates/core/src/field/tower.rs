use serde::Serialize;

use super::GaloisField;
use crate::arith;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Which level of the tower an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// F = GF(q^2).
    F,
    /// K, the smallest extension of F holding the m-th roots of unity.
    K,
}

/// A field element tagged with its level. `code` is the base-p encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FieldElement {
    pub level: Level,
    pub code: u32,
}

impl FieldElement {
    pub fn in_f(code: u32) -> Self {
        Self {
            level: Level::F,
            code,
        }
    }

    pub fn in_k(code: u32) -> Self {
        Self {
            level: Level::K,
            code,
        }
    }
}

/// The chain F_p < F_q < F = F_{q^2} < K where K is the smallest extension
/// of F containing the m-th roots of unity.
///
/// Both F and K are quotient rings of F_p[x] by their smallest irreducible
/// modulus. F sits inside K through `embed`, which sends the class of `x` in
/// F to the smallest-encoding root of F's modulus in K.
#[derive(Clone, Debug)]
pub struct FieldTower {
    q: u64,
    p: u32,
    t: u32,
    lambda: u32,
    m: u64,
    s: u32,
    f: GaloisField,
    k: GaloisField,
    theta_pows: Vec<u32>,
    // inverse of the F_p-basis matrix {beta^i theta^j} of K
    coord_inverse: Matrix,
    zeta: u32,
}

impl FieldTower {
    /// Builds the tower for `q` and group exponent `m`.
    pub fn build(q: u64, m: u64) -> Result<Self> {
        let (p, t) = arith::prime_power(q)?;
        if m == 0 {
            return Err(Error::InvalidArgument("exponent m must be positive".into()));
        }
        let g = arith::gcd(m, q);
        if g != 1 {
            return Err(Error::NotCoprime { n: m, q, gcd: g });
        }
        let q2 = q.checked_mul(q).ok_or(Error::FieldTooLarge {
            p: p as u32,
            degree: 2 * t as usize,
        })?;
        let s = arith::multiplicative_order(q2, m).expect("gcd(m, q) = 1") as u32;
        let p = p as u32;
        let f_deg = 2 * t as usize;
        let k_deg = f_deg * s as usize;
        let f = GaloisField::smallest(p, f_deg)?;
        let k = GaloisField::smallest(p, k_deg)?;

        let theta = smallest_root_in(&k, &f);
        let mut theta_pows = Vec::with_capacity(f_deg);
        let mut acc = 1;
        for _ in 0..f_deg {
            theta_pows.push(acc);
            acc = k.mul(acc, theta);
        }

        let prime = GaloisField::smallest(p, 1)?;
        let beta = k.generator();
        let mut basis = Matrix::zeros(k_deg, k_deg);
        let mut beta_i = 1;
        for i in 0..s as usize {
            for (j, &th) in theta_pows.iter().enumerate() {
                let b = k.mul(beta_i, th);
                for (r, d) in k.digits(b).into_iter().enumerate() {
                    basis.set(r, i * f_deg + j, d);
                }
            }
            beta_i = k.mul(beta_i, beta);
        }
        let coord_inverse = basis
            .inverse(&prime)
            .ok_or_else(|| Error::Internal("power basis of K over F is singular".into()))?;

        let zeta = smallest_primitive_root(&k, m);
        let tower = Self {
            q,
            p,
            t,
            lambda: arith::v2(t as u64),
            m,
            s,
            f,
            k,
            theta_pows,
            coord_inverse,
            zeta,
        };
        tower.check_embedding()?;
        Ok(tower)
    }

    fn check_embedding(&self) -> Result<()> {
        let ok = self.embed(1) == 1
            && self.f.elements().take(64).all(|a| {
                self.f.elements().step_by(7).take(16).all(|b| {
                    self.embed(self.f.add(a, b)) == self.k.add(self.embed(a), self.embed(b))
                        && self.embed(self.f.mul(a, b)) == self.k.mul(self.embed(a), self.embed(b))
                })
            });
        if ok {
            Ok(())
        } else {
            Err(Error::Internal(
                "embedding F -> K is not a ring homomorphism".into(),
            ))
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// `t` with `q = p^t`.
    pub fn t(&self) -> u32 {
        self.t
    }

    /// 2-adic valuation of `t`.
    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn exponent(&self) -> u64 {
        self.m
    }

    /// `[K : F] = ord_m(q^2)`.
    pub fn s(&self) -> u32 {
        self.s
    }

    /// F = GF(q^2).
    pub fn f(&self) -> &GaloisField {
        &self.f
    }

    pub fn k(&self) -> &GaloisField {
        &self.k
    }

    pub fn embed(&self, a: u32) -> u32 {
        self.f
            .digits(a)
            .iter()
            .zip(&self.theta_pows)
            .fold(0, |acc, (&d, &th)| self.k.add(acc, self.k.mul(d, th)))
    }

    pub fn embed_vec(&self, v: &[u32]) -> Vec<u32> {
        v.iter().map(|&a| self.embed(a)).collect()
    }

    /// Coordinates of a K-element over F in the power basis {1, beta, ..., beta^(s-1)},
    /// beta the class of `x` in K.
    pub fn coords_over_f(&self, a: u32) -> Vec<u32> {
        let digits = self.k.digits(a);
        let prime = self.p;
        let d = self.f.degree();
        let c: Vec<u32> = (0..self.k.degree())
            .map(|r| {
                self.coord_inverse
                    .row(r)
                    .iter()
                    .zip(&digits)
                    .fold(0u64, |acc, (&x, &y)| {
                        (acc + x as u64 * y as u64) % prime as u64
                    }) as u32
            })
            .collect();
        (0..self.s as usize)
            .map(|i| self.f.from_digits(&c[i * d..(i + 1) * d]))
            .collect()
    }

    /// The F-element a K-element equals, if it lies in F.
    pub fn restrict(&self, a: u32) -> Option<u32> {
        let coords = self.coords_over_f(a);
        coords[1..].iter().all(|&c| c == 0).then(|| coords[0])
    }

    /// Subfield test `a^(q^2) = a` inside K.
    pub fn is_in_f(&self, a: u32) -> bool {
        self.k.pow(a, self.q * self.q) == a
    }

    /// `a -> a^q` on F.
    pub fn conj(&self, a: u32) -> u32 {
        self.f.pow(a, self.q)
    }

    /// Hermitian conjugation `a -> a^q`, accepting K-elements that lie in F.
    pub fn hermitian_conjugate(&self, a: FieldElement) -> Result<FieldElement> {
        match a.level {
            Level::F if self.f.contains(a.code) => Ok(FieldElement::in_f(self.conj(a.code))),
            Level::K if self.k.contains(a.code) && self.is_in_f(a.code) => {
                Ok(FieldElement::in_k(self.k.pow(a.code, self.q)))
            }
            _ => Err(Error::NotInSubfield(a.code)),
        }
    }

    /// The canonical primitive m-th root of unity in K.
    pub fn primitive_mth_root(&self) -> FieldElement {
        FieldElement::in_k(self.zeta)
    }

    pub fn zeta(&self) -> u32 {
        self.zeta
    }

    /// `(n mod p)^{-1}` in the prime field, as an F-element.
    pub fn inv_mod_p(&self, n: u64) -> Result<u32> {
        arith::inv_mod(n % self.p as u64, self.p as u64)
            .filter(|_| !n.is_multiple_of(self.p as u64))
            .map(|x| x as u32)
            .ok_or(Error::NotInvertible { n, p: self.p })
    }

    /// All solutions of `1/n + gamma^(q+1) = 0` in F, ascending by encoding.
    pub fn gamma_solutions(&self, n: u64) -> Result<Vec<u32>> {
        if n.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!("n = {n} must be odd")));
        }
        let target = self.f.neg(self.inv_mod_p(n)?);
        Ok(self
            .f
            .elements()
            .filter(|&g| self.f.pow(g, self.q + 1) == target)
            .collect())
    }

    /// The smallest-encoding solution of `1/n + gamma^(q+1) = 0`.
    pub fn solve_gamma(&self, n: u64) -> Result<FieldElement> {
        self.gamma_solutions(n)?
            .first()
            .copied()
            .map(FieldElement::in_f)
            .ok_or_else(|| Error::Internal("norm equation has no solution".into()))
    }

    /// Whether `gamma` satisfies `1/n + gamma^(q+1) = 0`.
    pub fn is_gamma(&self, n: u64, gamma: u32) -> bool {
        self.inv_mod_p(n)
            .map(|inv| self.f.add(inv, self.f.pow(gamma, self.q + 1)) == 0)
            .unwrap_or(false)
    }
}

/// Smallest-encoding root in `big` of the modulus of `small`.
fn smallest_root_in(big: &GaloisField, small: &GaloisField) -> u32 {
    if big.degree() == small.degree() && big.modulus() == small.modulus() {
        return big.generator();
    }
    let g = big.primitive_element();
    let step = (big.order() as u64 - 1) / (small.order() as u64 - 1);
    let h = big.pow(g, step);
    let mut roots = Vec::new();
    let mut a = 1;
    for _ in 0..small.order() - 1 {
        if big.eval_prime_poly(small.modulus(), a) == 0 {
            roots.push(a);
        }
        a = big.mul(a, h);
    }
    roots.into_iter().min().expect("F embeds in K")
}

fn smallest_primitive_root(k: &GaloisField, m: u64) -> u32 {
    if m == 1 {
        return 1;
    }
    let g = k.primitive_element();
    let h = k.pow(g, (k.order() as u64 - 1) / m);
    (1..m)
        .filter(|&e| arith::gcd(e, m) == 1)
        .map(|e| k.pow(h, e))
        .min()
        .expect("m >= 2 has a primitive residue")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_q4_m9() {
        let t = FieldTower::build(4, 9).unwrap();
        assert_eq!((t.characteristic(), t.t(), t.s()), (2, 2, 3));
        assert_eq!(t.f().order(), 16);
        assert_eq!(t.k().order(), 4096);
    }

    #[test]
    fn tower_q2_m7() {
        let t = FieldTower::build(2, 7).unwrap();
        assert_eq!(t.f().order(), 4);
        assert_eq!(t.s(), 3);
        assert_eq!(t.k().order(), 64);
    }

    #[test]
    fn trivial_exponent_gives_k_equal_f() {
        for q in [2, 3, 4, 5, 9] {
            let t = FieldTower::build(q, 1).unwrap();
            assert_eq!(t.s(), 1);
            assert_eq!(t.k(), t.f());
            assert_eq!(t.primitive_mth_root().code, 1);
            for a in t.f().elements() {
                assert_eq!(t.embed(a), a);
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            FieldTower::build(6, 5),
            Err(Error::NotPrimePower(6))
        ));
        assert!(matches!(
            FieldTower::build(4, 6),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn conjugation_in_f4() {
        let t = FieldTower::build(2, 1).unwrap();
        // F4 = {0, 1, w = 2, w^2 = 3}
        assert_eq!(t.conj(2), 3);
        assert_eq!(t.conj(3), 2);
        assert_eq!(t.conj(1), 1);
        let w = FieldElement::in_f(2);
        assert_eq!(t.hermitian_conjugate(w).unwrap(), FieldElement::in_f(3));
    }

    #[test]
    fn conjugation_is_an_involution_fixing_fq() {
        let t = FieldTower::build(4, 1).unwrap();
        for a in t.f().elements() {
            assert_eq!(t.conj(t.conj(a)), a);
        }
        // F_4 inside F_16 is the fixed field of a -> a^4
        let fixed: Vec<u32> = t.f().elements().filter(|&a| t.conj(a) == a).collect();
        assert_eq!(fixed.len(), 4);
        for a in fixed {
            assert_eq!(t.f().pow(a, 4), a);
        }
    }

    #[test]
    fn conjugate_rejects_k_elements_outside_f() {
        let t = FieldTower::build(2, 7).unwrap();
        let outside = t.k().elements().find(|&a| !t.is_in_f(a)).unwrap();
        assert!(t.hermitian_conjugate(FieldElement::in_k(outside)).is_err());
        let inside = t.embed(2);
        let c = t.hermitian_conjugate(FieldElement::in_k(inside)).unwrap();
        assert_eq!(c.code, t.embed(3));
    }

    #[test]
    fn gamma_examples() {
        // q = 2, n = 7: -1/7 = 1, gamma = 1
        let t = FieldTower::build(2, 1).unwrap();
        assert_eq!(t.solve_gamma(7).unwrap().code, 1);
        // q = 4, n = 27: target 1; solutions are the fifth roots of unity
        let t = FieldTower::build(4, 1).unwrap();
        let sols = t.gamma_solutions(27).unwrap();
        assert_eq!(sols.len(), 5);
        assert_eq!(t.solve_gamma(27).unwrap().code, 1);
        for g in sols {
            assert_eq!(t.f().pow(g, 5), 1);
        }
        // q = 3, n = 7: gamma^4 = -1/7 = -1 = 2 in F_9
        let t = FieldTower::build(3, 1).unwrap();
        let g = t.solve_gamma(7).unwrap().code;
        assert_eq!(t.f().pow(g, 4), 2);
        assert_eq!(t.gamma_solutions(7).unwrap().len(), 4);
        assert!(matches!(t.solve_gamma(9), Err(Error::NotInvertible { .. })));
    }
}
