use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::GaloisField;
use crate::group::GroupShape;
use crate::linalg::{self, Matrix};

/// A set of group elements (by lexicographic index) on which codewords vanish.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroSet(Vec<usize>);

impl ZeroSet {
    pub fn new(elems: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = elems.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn complement(&self, n: usize) -> Self {
        Self((0..n).filter(|&x| !self.contains(x)).collect())
    }

    pub fn union(&self, other: &ZeroSet) -> Self {
        Self::new(self.0.iter().chain(&other.0).copied())
    }
}

/// A generator matrix over F; rows are kept in reduced row-echelon form when
/// produced by this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    field: GaloisField,
    matrix: Matrix,
}

impl GeneratorMatrix {
    pub fn new(field: GaloisField, matrix: Matrix) -> Self {
        Self { field, matrix }
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Number of rows `k`.
    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    /// Block length.
    pub fn length(&self) -> usize {
        self.matrix.cols()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank(&self.field)
    }

    /// `q` with `|F| = q^2`, or `None` when the field order is not a square.
    pub fn q(&self) -> Option<u64> {
        let d = self.field.degree();
        d.is_multiple_of(2)
            .then(|| (self.field.characteristic() as u64).pow(d as u32 / 2))
    }

    fn require_q(&self) -> Result<u64> {
        self.q().ok_or_else(|| {
            Error::InvalidArgument("Hermitian duality needs a field of square order".into())
        })
    }

    /// Entrywise `a -> a^q`.
    pub fn conjugate(&self) -> Result<Matrix> {
        let q = self.require_q()?;
        Ok(self.matrix.map(|a| self.field.pow(a, q)))
    }

    /// `M conj(M)^T`, the Hermitian Gram matrix of the rows.
    pub fn hermitian_gram(&self) -> Result<Matrix> {
        Ok(self.matrix.mul(&self.conjugate()?.transpose(), &self.field))
    }

    pub fn same_row_space(&self, other: &GeneratorMatrix) -> bool {
        self.field == other.field
            && linalg::same_row_space(&self.matrix, &other.matrix, &self.field)
    }

    /// Whether every row of `self` lies in the row space of `other`.
    pub fn is_subspace_of(&self, other: &GeneratorMatrix) -> bool {
        self.field == other.field
            && self.length() == other.length()
            && other.matrix.vstack(&self.matrix).rank(&self.field) == other.rank()
    }

    /// Matrix file: `GF p deg modulus-code`, then `k l`, then `k` rows of
    /// space-separated element codes.
    pub fn to_matrix_file(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "GF {} {} {}",
            self.field.characteristic(),
            self.field.degree(),
            self.field.modulus_code()
        );
        let _ = writeln!(s, "{} {}", self.rows(), self.length());
        for row in self.matrix.row_iter() {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            let _ = writeln!(s, "{}", cells.join(" "));
        }
        s
    }

    pub fn from_matrix_file(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::BadMatrixFile(msg.to_string());
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header: Vec<&str> = lines
            .next()
            .ok_or_else(|| bad("empty file"))?
            .split_whitespace()
            .collect();
        let [tag, p, deg, code] = header.as_slice() else {
            return Err(bad("header must be `GF p deg modulus`"));
        };
        if *tag != "GF" {
            return Err(bad("header must start with GF"));
        }
        let p: u32 = p.parse().map_err(|_| bad("bad characteristic"))?;
        let deg: usize = deg.parse().map_err(|_| bad("bad degree"))?;
        let code: u64 = code.parse().map_err(|_| bad("bad modulus code"))?;
        if !crate::arith::is_prime(p as u64) {
            return Err(bad("characteristic is not prime"));
        }
        let field = GaloisField::from_modulus_code(p, deg, code)?;
        let dims: Vec<usize> = lines
            .next()
            .ok_or_else(|| bad("missing dimensions"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("bad dimensions")))
            .collect::<Result<_>>()?;
        let [k, l] = dims.as_slice() else {
            return Err(bad("dimension line must be `k l`"));
        };
        let mut m = Matrix::zeros(0, *l);
        for _ in 0..*k {
            let row: Vec<u32> = lines
                .next()
                .ok_or_else(|| bad("too few rows"))?
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .ok()
                        .filter(|&v| field.contains(v))
                        .ok_or_else(|| bad("bad field element"))
                })
                .collect::<Result<_>>()?;
            if row.len() != *l {
                return Err(bad("row length mismatch"));
            }
            m.push_row(&row);
        }
        if lines.next().is_some() {
            return Err(bad("trailing data"));
        }
        Ok(Self::new(field, m))
    }
}

/// The ideal `I_X` over F with its generator matrix.
#[derive(Clone, Debug)]
pub struct IdealCode {
    group: GroupShape,
    q: u64,
    zero_set: ZeroSet,
    generator: GeneratorMatrix,
}

impl IdealCode {
    pub(crate) fn new(
        group: GroupShape,
        q: u64,
        zero_set: ZeroSet,
        generator: GeneratorMatrix,
    ) -> Self {
        Self {
            group,
            q,
            zero_set,
            generator,
        }
    }

    pub fn group(&self) -> &GroupShape {
        &self.group
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn zero_set(&self) -> &ZeroSet {
        &self.zero_set
    }

    pub fn generator(&self) -> &GeneratorMatrix {
        &self.generator
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn length(&self) -> usize {
        self.generator.length()
    }
}

/// `C~ = {(f, -gamma f(0)) : f in C}`.
#[derive(Clone, Debug)]
pub struct ExtendedCode {
    base: IdealCode,
    gamma: u32,
    generator: GeneratorMatrix,
}

impl ExtendedCode {
    pub(crate) fn new(base: IdealCode, gamma: u32, generator: GeneratorMatrix) -> Self {
        Self {
            base,
            gamma,
            generator,
        }
    }

    pub fn base(&self) -> &IdealCode {
        &self.base
    }

    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    pub fn generator(&self) -> &GeneratorMatrix {
        &self.generator
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn length(&self) -> usize {
        self.generator.length()
    }
}

/// Basis of `{f : <f, row>_H = 0 for every row}`, computed as the null space
/// of the conjugated matrix.
pub fn brute_force_dual(m: &GeneratorMatrix) -> Result<GeneratorMatrix> {
    let conj = m.conjugate()?;
    Ok(GeneratorMatrix::new(
        m.field.clone(),
        conj.nullspace(&m.field),
    ))
}

/// Whether the rows are pairwise Hermitian-orthogonal (including each with itself).
pub fn is_hermitian_self_orthogonal(m: &GeneratorMatrix) -> Result<bool> {
    Ok(m.hermitian_gram()?.is_zero())
}

/// `C = C^(perp_H)`: the Gram matrix vanishes and `2 rank = length`.
pub fn is_hermitian_self_dual(m: &GeneratorMatrix) -> Result<bool> {
    Ok(is_hermitian_self_orthogonal(m)? && 2 * m.rank() == m.length())
}

/// Most codewords [`weight_enumeration`] will enumerate.
pub const WEIGHT_ENUMERATION_LIMIT: u64 = 1 << 24;

/// Hamming weight distribution by enumerating every codeword.
pub fn weight_enumeration(m: &GeneratorMatrix) -> Result<BTreeMap<usize, u64>> {
    let f = &m.field;
    let basis = m.matrix.reduced(f);
    let k = basis.rows();
    let size = (f.order() as u64)
        .checked_pow(k as u32)
        .filter(|&s| s <= WEIGHT_ENUMERATION_LIMIT)
        .ok_or(Error::BoundExceeded {
            value: f.order() as u64,
            max: WEIGHT_ENUMERATION_LIMIT,
        })?;
    let len = basis.cols();
    let mut hist = BTreeMap::new();
    let mut word = vec![0u32; len];
    let mut digits = vec![0u32; k];
    for _ in 0..size {
        let w = word.iter().filter(|&&c| c != 0).count();
        *hist.entry(w).or_insert(0) += 1;
        // odometer over coefficient vectors, updating the word incrementally
        for (i, digit) in digits.iter_mut().enumerate() {
            let old = *digit;
            let new = if old + 1 == f.order() { 0 } else { old + 1 };
            let delta = f.sub(new, old);
            for (c, &b) in word.iter_mut().zip(basis.row(i)) {
                *c = f.add(*c, f.mul(delta, b));
            }
            *digit = new;
            if new != 0 {
                break;
            }
        }
    }
    Ok(hist)
}
