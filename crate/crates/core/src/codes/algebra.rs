use super::{ExtendedCode, GeneratorMatrix, IdealCode, ZeroSet};
use crate::arith;
use crate::error::{Error, Result};
use crate::field::FieldTower;
use crate::group::{GroupShape, OrbitPartition};
use crate::linalg::Matrix;
use crate::splitting::{q2_orbits, Splitting};

/// The group algebra K[G*] together with everything needed to realize its
/// ideals over F = GF(q^2): the field tower, a fixed character table and the
/// `<tau_(q^2)>`-orbits.
///
/// Characters are indexed by group elements through the pairing
/// `psi_y(x) = zeta^(sum_i (m / m_i) y_i x_i mod m)`, so coefficient vectors
/// and evaluation vectors both have length `n` in the lexicographic element
/// order of the group.
#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    group: GroupShape,
    q: u64,
    tower: FieldTower,
    n: usize,
    pairing: Vec<u32>,
    zeta_pows: Vec<u32>,
    zeta_coords: Vec<Vec<u32>>,
    orbits: OrbitPartition,
    inv_n: u32,
}

impl GroupAlgebra {
    pub fn new(group: &GroupShape, q: u64) -> Result<Self> {
        let orbits = q2_orbits(group, q)?;
        let m = group.exponent();
        let tower = FieldTower::build(q, m)?;
        let n = group.len();
        let weights: Vec<u64> = group.factors().iter().map(|&mi| m / mi).collect();
        let elements: Vec<Vec<u64>> = group.elements().map(|e| e.0).collect();
        let mut pairing = Vec::with_capacity(n * n);
        for y in &elements {
            for x in &elements {
                let e = y
                    .iter()
                    .zip(x)
                    .zip(&weights)
                    .fold(0u64, |acc, ((&yi, &xi), &w)| (acc + w * yi % m * xi) % m);
                pairing.push(e as u32);
            }
        }
        let k = tower.k();
        let mut zeta_pows = Vec::with_capacity(m as usize);
        let mut acc = 1;
        for _ in 0..m {
            zeta_pows.push(acc);
            acc = k.mul(acc, tower.zeta());
        }
        let zeta_coords = zeta_pows.iter().map(|&z| tower.coords_over_f(z)).collect();
        let inv_n = tower.inv_mod_p(n as u64)?;
        Ok(Self {
            group: group.clone(),
            q,
            tower,
            n,
            pairing,
            zeta_pows,
            zeta_coords,
            orbits,
            inv_n,
        })
    }

    pub fn group(&self) -> &GroupShape {
        &self.group
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The `<tau_(q^2)>`-orbits.
    pub fn orbits(&self) -> &OrbitPartition {
        &self.orbits
    }

    /// `psi_y(x)` in K.
    pub fn character(&self, y: usize, x: usize) -> u32 {
        self.zeta_pows[self.pairing[y * self.n + x] as usize]
    }

    /// The trivial character, i.e. the identity of K[G*].
    pub fn identity(&self) -> Vec<u32> {
        let mut v = vec![0; self.n];
        v[0] = 1;
        v
    }

    /// `e_x = (1/n) sum_psi psi(x)^(-1) psi`, coefficients in K.
    pub fn primitive_idempotent(&self, x: usize) -> Vec<u32> {
        let m = self.zeta_pows.len();
        let k = self.tower.k();
        (0..self.n)
            .map(|y| {
                let e = self.pairing[y * self.n + x] as usize;
                k.mul(self.inv_n, self.zeta_pows[(m - e) % m])
            })
            .collect()
    }

    /// `f(x) = sum_psi a_psi psi(x)` for K-coefficients.
    pub fn evaluate(&self, f: &[u32], x: usize) -> u32 {
        let k = self.tower.k();
        f.iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .fold(0, |acc, (y, &a)| k.add(acc, k.mul(a, self.character(y, x))))
    }

    /// Evaluation of an F-coefficient vector, in K.
    pub fn evaluate_f(&self, f: &[u32]) -> Vec<u32> {
        let fk = self.tower.embed_vec(f);
        (0..self.n).map(|x| self.evaluate(&fk, x)).collect()
    }

    /// Product in K[G*]: `psi_y psi_z = psi_(y+z)`.
    pub fn convolve(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let k = self.tower.k();
        let mut out = vec![0; self.n];
        for (y, &ay) in a.iter().enumerate().filter(|(_, &v)| v != 0) {
            for (z, &bz) in b.iter().enumerate().filter(|(_, &v)| v != 0) {
                let w = self.group.add_idx(y, z);
                out[w] = k.add(out[w], k.mul(ay, bz));
            }
        }
        out
    }

    /// `e = sum_(x not in X) e_x`, the idempotent generating `I_X`, over K.
    pub fn idempotent_generator(&self, zeros: &ZeroSet) -> Result<Vec<u32>> {
        if zeros.len() >= self.n {
            return Err(Error::InvalidArgument(
                "zero set must be a proper subset".into(),
            ));
        }
        let k = self.tower.k();
        let mut e = vec![0; self.n];
        for x in (0..self.n).filter(|&x| !zeros.contains(x)) {
            for (acc, c) in e.iter_mut().zip(self.primitive_idempotent(x)) {
                *acc = k.add(*acc, c);
            }
        }
        Ok(e)
    }

    /// The idempotent generator written over F, when every coefficient lies in F.
    pub fn idempotent_generator_over_f(&self, zeros: &ZeroSet) -> Result<Option<Vec<u32>>> {
        let e = self.idempotent_generator(zeros)?;
        Ok(e.iter().map(|&c| self.tower.restrict(c)).collect())
    }

    pub fn is_orbit_union(&self, zeros: &ZeroSet) -> bool {
        self.orbits.is_union(zeros.as_slice())
    }

    /// `I_X` over F as a generator matrix in reduced row-echelon form.
    ///
    /// Each K-valued constraint `sum_y a_y psi_y(x) = 0` is split along the
    /// power basis of K over F into `[K:F]` F-linear constraints.
    pub fn code_from_zero_set(&self, zeros: &ZeroSet) -> Result<IdealCode> {
        if !self.is_orbit_union(zeros) {
            return Err(Error::NotOrbitUnion);
        }
        let s = self.tower.s() as usize;
        let mut constraints = Matrix::zeros(0, self.n);
        let mut row = vec![0u32; self.n];
        for &x in zeros.as_slice() {
            for i in 0..s {
                for (y, slot) in row.iter_mut().enumerate() {
                    *slot = self.zeta_coords[self.pairing[y * self.n + x] as usize][i];
                }
                constraints.push_row(&row);
            }
        }
        let basis = constraints.nullspace(self.tower.f());
        if basis.rows() != self.n - zeros.len() {
            return Err(Error::Internal(format!(
                "I_X has dimension {} but n - |X| = {}",
                basis.rows(),
                self.n - zeros.len()
            )));
        }
        Ok(IdealCode::new(
            self.group.clone(),
            self.q,
            zeros.clone(),
            GeneratorMatrix::new(self.tower.f().clone(), basis),
        ))
    }

    /// Hermitian inner product `sum_psi a_psi b_psi^q` of two F-vectors.
    ///
    /// The evaluation form `(1/n) sum_x f(x) g(-q^(-1) x)^q` is computed in K
    /// alongside and must agree.
    pub fn hermitian_inner(&self, f: &[u32], g: &[u32]) -> Result<u32> {
        if f.len() != self.n || g.len() != self.n {
            return Err(Error::InvalidArgument("vectors must have length n".into()));
        }
        let field = self.tower.f();
        let coefficient_form = f.iter().zip(g).fold(0, |acc, (&a, &b)| {
            field.add(acc, field.mul(a, self.tower.conj(b)))
        });

        let k = self.tower.k();
        let m = self.group.exponent();
        let q_inv = arith::inv_mod(self.q % m, m).expect("q is a unit mod m");
        let shift = self.group.tau_table(-(q_inv as i64));
        let fx = self.evaluate_f(f);
        let gx = self.evaluate_f(g);
        let sum = (0..self.n).fold(0, |acc, x| {
            k.add(acc, k.mul(fx[x], k.pow(gx[shift[x]], self.q)))
        });
        let evaluation_form = k.mul(self.inv_n, sum);

        if self.tower.embed(coefficient_form) != evaluation_form {
            return Err(Error::Internal(
                "coefficient and evaluation forms of the Hermitian product differ".into(),
            ));
        }
        Ok(coefficient_form)
    }

    /// Zero set of the Hermitian dual: `G \ tau_(-q)(X)`.
    pub fn hermitian_dual_zero_set(&self, zeros: &ZeroSet) -> ZeroSet {
        let tau = self.group.tau_table(-(self.q as i64));
        let image = ZeroSet::new(zeros.as_slice().iter().map(|&x| tau[x]));
        image.complement(self.n)
    }

    /// `mu_s(f)(x) = f(s x)`: the coefficient of `psi_y` moves to `psi_(s y)`.
    pub fn mu_action(&self, s: i64, f: &[u32]) -> Result<Vec<u32>> {
        if !self.group.is_unit(s) {
            return Err(Error::NotAUnit {
                s,
                modulus: self.group.exponent(),
            });
        }
        let tau = self.group.tau_table(s);
        let mut out = vec![0; f.len()];
        for (y, &a) in f.iter().enumerate() {
            out[tau[y]] = a;
        }
        Ok(out)
    }

    /// Appends the coordinate `-gamma f(0)` to every generator row; `f(0)` is
    /// the sum of the row's coefficients.
    pub fn extend_code(&self, code: &IdealCode, gamma: u32) -> Result<ExtendedCode> {
        if self.n.is_multiple_of(2) {
            return Err(Error::InvalidArgument(
                "extension needs odd group order".into(),
            ));
        }
        if !self.tower.is_gamma(self.n as u64, gamma) {
            return Err(Error::BadGamma);
        }
        let f = self.tower.f();
        let base = code.generator().matrix();
        let mut m = Matrix::zeros(0, self.n + 1);
        for row in base.row_iter() {
            let f0 = row.iter().fold(0, |acc, &a| f.add(acc, a));
            let mut ext = row.to_vec();
            ext.push(f.neg(f.mul(gamma, f0)));
            m.push_row(&ext);
        }
        Ok(ExtendedCode::new(
            code.clone(),
            gamma,
            GeneratorMatrix::new(f.clone(), m),
        ))
    }

    /// The five codes attached to a splitting.
    pub fn split_codes(&self, sp: &Splitting) -> Result<SplitCodes> {
        let z = ZeroSet::new(sp.z().iter().copied());
        let x0 = ZeroSet::new(sp.x0().iter().copied());
        let x1 = ZeroSet::new(sp.x1().iter().copied());
        Ok(SplitCodes {
            c0: self.code_from_zero_set(&x0)?,
            c1: self.code_from_zero_set(&x1)?,
            c0z: self.code_from_zero_set(&z.union(&x0))?,
            c1z: self.code_from_zero_set(&z.union(&x1))?,
            cz: self.code_from_zero_set(&x0.union(&x1))?,
        })
    }
}

/// `C0 = I_X0`, `C1 = I_X1`, `C0^Z = I_(Z u X0)`, `C1^Z = I_(Z u X1)`, `C_Z = I_(X0 u X1)`.
#[derive(Clone, Debug)]
pub struct SplitCodes {
    pub c0: IdealCode,
    pub c1: IdealCode,
    pub c0z: IdealCode,
    pub c1z: IdealCode,
    pub cz: IdealCode,
}
