use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{orbit_partition, GroupElement, GroupShape, OrbitPartition};

/// A splitting `(Z, X0, X1)` of a group, stored as sorted element-index sets.
///
/// Built splittings always have `Z = {0}` and multiplier `-q`; the
/// multiplier is kept explicit so other splittings can be checked too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    group: GroupShape,
    q: u64,
    multiplier: i64,
    z: Vec<usize>,
    x0: Vec<usize>,
    x1: Vec<usize>,
}

/// Why a candidate splitting fails [`Splitting::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplittingDefect {
    NotAPartition,
    NotSwapped { multiplier: i64 },
    NotOrbitUnion,
    ZNotIdentity,
}

impl fmt::Display for SplittingDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotAPartition => write!(f, "Z, X0, X1 do not partition the group"),
            Self::NotSwapped { multiplier } => {
                write!(f, "tau_{multiplier} does not swap X0 and X1")
            }
            Self::NotOrbitUnion => write!(f, "a part is not a union of <tau_(q^2)>-orbits"),
            Self::ZNotIdentity => write!(f, "Z is not {{0}}"),
        }
    }
}

/// Witness that no splitting by `-q` over `{0}` exists: a nonzero
/// `<tau_(q^2)>`-orbit mapped onto itself by `tau_(-q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub group: GroupShape,
    pub q: u64,
    pub fixed_orbit: Vec<GroupElement>,
    /// Prime divisors of the order whose `ord_r(q) = 2 (mod 4)`.
    pub obstructed_primes: Vec<u64>,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orbit: Vec<String> = self.fixed_orbit.iter().map(ToString::to_string).collect();
        write!(
            f,
            "orbit {{{}}} of {} is fixed by tau_(-{})",
            orbit.join(", "),
            self.group,
            self.q
        )?;
        if !self.obstructed_primes.is_empty() {
            write!(f, "; obstructed primes {:?}", self.obstructed_primes)?;
        }
        Ok(())
    }
}

fn check_coprime(g: &GroupShape, q: u64) -> Result<()> {
    arith::prime_power(q)?;
    let n = g.order();
    let d = arith::gcd(n, q);
    if d != 1 {
        return Err(Error::NotCoprime { n, q, gcd: d });
    }
    Ok(())
}

/// `q^2` reduced modulo the exponent, as a multiplier.
pub(crate) fn q_squared(g: &GroupShape, q: u64) -> i64 {
    let m = g.exponent();
    arith::mul_mod(q % m, q % m, m) as i64
}

/// The `<tau_(q^2)>`-orbits of `g`.
pub fn q2_orbits(g: &GroupShape, q: u64) -> Result<OrbitPartition> {
    check_coprime(g, q)?;
    orbit_partition(g, q_squared(g, q))
}

/// Builds the canonical splitting of `g` over `{0}` by `-q`.
///
/// `tau_(-q)` permutes the `<tau_(q^2)>`-orbits as an involution. A fixed
/// nonzero orbit is an obstruction; otherwise each swapped pair contributes
/// the orbit with the smaller representative to `X0` and its partner to `X1`.
pub fn build_splitting(g: &GroupShape, q: u64) -> Result<Splitting> {
    let orbits = q2_orbits(g, q)?;
    let minus_q = -(q as i64);
    let mut side = vec![None; orbits.len()];
    side[orbits.orbit_of(0)] = Some(2u8);
    for id in 0..orbits.len() {
        if side[id].is_some() {
            continue;
        }
        let image = g.index_of(&g.tau(minus_q, &g.element(orbits.representative(id))));
        let partner = orbits.orbit_of(image);
        if partner == id {
            let obstructed_primes = arith::factorize(g.order())
                .into_iter()
                .filter(|&(r, _)| {
                    super::classify_prime(r, q)
                        .map(|c| c.verdict == super::Verdict::Obstructed)
                        .unwrap_or(false)
                })
                .map(|(r, _)| r)
                .collect();
            return Err(Error::Obstructed(Obstruction {
                group: g.clone(),
                q,
                fixed_orbit: orbits.orbit_elements(id, g),
                obstructed_primes,
            }));
        }
        side[id] = Some(0);
        side[partner] = Some(1);
    }
    let pick = |want: u8| orbits.union_of((0..orbits.len()).filter(|&id| side[id] == Some(want)));
    Ok(Splitting {
        group: g.clone(),
        q,
        multiplier: minus_q,
        z: vec![0],
        x0: pick(0),
        x1: pick(1),
    })
}

/// Whether `sp` satisfies every splitting invariant.
pub fn verify_splitting(sp: &Splitting) -> bool {
    sp.verify().is_ok()
}

/// Assembles a splitting of `Z_{m1} x ... x Z_{ms}` from splittings of the
/// cyclic factors, layer by layer:
///
/// `X_t = X_t^(1) x Z_{m2} x ... x Z_{ms}  u  {0} x X_t^(2) x Z_{m3} x ...  u ...  u  {0} x ... x {0} x X_t^(s)`.
pub fn product_splitting(parts: &[(GroupShape, Splitting)]) -> Result<Splitting> {
    let Some((_, first)) = parts.first() else {
        return Err(Error::InvalidArgument("no factors given".into()));
    };
    let (q, multiplier) = (first.q, first.multiplier);
    let mut factors = Vec::with_capacity(parts.len());
    for (shape, sp) in parts {
        if shape.rank() != 1 || sp.group != *shape {
            return Err(Error::InvalidArgument(format!(
                "part {shape} must be a cyclic group matching its splitting"
            )));
        }
        if sp.q != q || sp.multiplier != multiplier {
            return Err(Error::InvalidArgument(
                "parts use different multipliers".into(),
            ));
        }
        sp.verify().map_err(|d| {
            Error::InvalidArgument(format!("invalid part splitting of {shape}: {d}"))
        })?;
        factors.push(shape.factors()[0]);
    }
    let g = GroupShape::new(factors)?;
    let mut x0 = Vec::new();
    let mut x1 = Vec::new();
    for idx in 0..g.len() {
        let x = g.element(idx);
        // the layer is the first nonzero coordinate
        let Some(i) = x.0.iter().position(|&c| c != 0) else {
            continue;
        };
        let sp = &parts[i].1;
        let c = x.0[i] as usize;
        if sp.x0.binary_search(&c).is_ok() {
            x0.push(idx);
        } else if sp.x1.binary_search(&c).is_ok() {
            x1.push(idx);
        }
    }
    let out = Splitting {
        group: g,
        q,
        multiplier,
        z: vec![0],
        x0,
        x1,
    };
    out.verify()
        .map_err(|d| Error::Internal(format!("product splitting failed verification: {d}")))?;
    Ok(out)
}

impl Splitting {
    /// Assembles a candidate splitting without checking it; see [`Splitting::verify`].
    pub fn from_parts(
        group: GroupShape,
        q: u64,
        multiplier: i64,
        z: Vec<usize>,
        x0: Vec<usize>,
        x1: Vec<usize>,
    ) -> Self {
        let sorted = |mut v: Vec<usize>| {
            v.sort_unstable();
            v.dedup();
            v
        };
        Self {
            group,
            q,
            multiplier,
            z: sorted(z),
            x0: sorted(x0),
            x1: sorted(x1),
        }
    }

    pub fn group(&self) -> &GroupShape {
        &self.group
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn multiplier(&self) -> i64 {
        self.multiplier
    }

    pub fn z(&self) -> &[usize] {
        &self.z
    }

    pub fn x0(&self) -> &[usize] {
        &self.x0
    }

    pub fn x1(&self) -> &[usize] {
        &self.x1
    }

    /// The same splitting with `X0` and `X1` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            x0: self.x1.clone(),
            x1: self.x0.clone(),
            ..self.clone()
        }
    }

    pub fn orbits(&self) -> Result<OrbitPartition> {
        q2_orbits(&self.group, self.q)
    }

    /// Checks partition, swap by the multiplier, orbit-union structure and `Z = {0}`.
    pub fn verify(&self) -> std::result::Result<(), SplittingDefect> {
        let n = self.group.len();
        let mut count = vec![0u8; n];
        for &i in self.z.iter().chain(&self.x0).chain(&self.x1) {
            if i >= n {
                return Err(SplittingDefect::NotAPartition);
            }
            count[i] += 1;
        }
        if count.iter().any(|&c| c != 1) {
            return Err(SplittingDefect::NotAPartition);
        }
        if !self.group.is_unit(self.multiplier) {
            return Err(SplittingDefect::NotSwapped {
                multiplier: self.multiplier,
            });
        }
        let tau = self.group.tau_table(self.multiplier);
        let image = |set: &[usize]| {
            let mut v: Vec<usize> = set.iter().map(|&i| tau[i]).collect();
            v.sort_unstable();
            v
        };
        if image(&self.x0) != self.x1 || image(&self.x1) != self.x0 {
            return Err(SplittingDefect::NotSwapped {
                multiplier: self.multiplier,
            });
        }
        let orbits = self.orbits().map_err(|_| SplittingDefect::NotOrbitUnion)?;
        if ![&self.z, &self.x0, &self.x1]
            .iter()
            .all(|s| orbits.is_union(s))
        {
            return Err(SplittingDefect::NotOrbitUnion);
        }
        if self.z != [0] {
            return Err(SplittingDefect::ZNotIdentity);
        }
        Ok(())
    }

    /// Intersection with the canonical copy of the i-th cyclic factor, as a
    /// splitting of `Z_{m_i}`.
    pub fn restrict_to_factor(&self, i: usize) -> Splitting {
        let cyclic = GroupShape::cyclic(self.group.factors()[i]);
        let pick = |set: &[usize]| -> Vec<usize> {
            set.iter()
                .map(|&idx| self.group.element(idx))
                .filter(|x| x.0.iter().enumerate().all(|(j, &c)| j == i || c == 0))
                .map(|x| x.0[i] as usize)
                .collect()
        };
        Splitting::from_parts(
            cyclic,
            self.q,
            self.multiplier,
            pick(&self.z),
            pick(&self.x0),
            pick(&self.x1),
        )
    }

    fn orbit_reps(&self, set: &[usize], orbits: &OrbitPartition) -> Vec<GroupElement> {
        let mut ids: Vec<usize> = set.iter().map(|&i| orbits.orbit_of(i)).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.into_iter()
            .map(|id| self.group.element(orbits.representative(id)))
            .collect()
    }

    /// JSON form `{"group","q","Z","X0","X1"}`; `X0`/`X1` list orbit
    /// representatives unless `expand` asks for every element.
    pub fn to_json(&self, expand: bool) -> Result<Value> {
        let orbits = self.orbits()?;
        let elems = |set: &[usize]| -> Vec<GroupElement> {
            set.iter().map(|&i| self.group.element(i)).collect()
        };
        let side = |set: &[usize]| {
            if expand {
                elems(set)
            } else {
                self.orbit_reps(set, &orbits)
            }
        };
        Ok(json!({
            "group": self.group.to_string(),
            "q": self.q,
            "Z": elems(&self.z),
            "X0": side(&self.x0),
            "X1": side(&self.x1),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: &[u64]) -> GroupElement {
        GroupElement(v.to_vec())
    }

    #[test]
    fn z7_by_minus_2() {
        let g = GroupShape::cyclic(7);
        let sp = build_splitting(&g, 2).unwrap();
        assert_eq!(sp.z(), &[0]);
        assert_eq!(sp.x0(), &[1, 2, 4]);
        assert_eq!(sp.x1(), &[3, 5, 6]);
        assert!(verify_splitting(&sp));
    }

    #[test]
    fn z3_by_minus_2_is_obstructed() {
        let err = build_splitting(&GroupShape::cyclic(3), 2).unwrap_err();
        let Error::Obstructed(ob) = err else {
            panic!("expected obstruction")
        };
        assert_eq!(ob.fixed_orbit, vec![el(&[1])]);
        assert_eq!(ob.obstructed_primes, vec![3]);
    }

    #[test]
    fn even_order_is_obstructed() {
        let err = build_splitting(&GroupShape::cyclic(10), 3).unwrap_err();
        assert!(matches!(err, Error::Obstructed(_)));
    }

    #[test]
    fn gcd_violation() {
        assert!(matches!(
            build_splitting(&GroupShape::cyclic(9), 3),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn trivial_group_degenerate_splitting() {
        let sp = build_splitting(&GroupShape::trivial(), 5).unwrap();
        assert_eq!(
            (sp.z(), sp.x0().len(), sp.x1().len()),
            (&[0usize][..], 0, 0)
        );
        assert!(verify_splitting(&sp));
    }

    #[test]
    fn verify_detects_damage() {
        let g = GroupShape::cyclic(7);
        let sp = build_splitting(&g, 2).unwrap();
        assert!(verify_splitting(&sp.swapped()));
        let mut x0 = sp.x0().to_vec();
        let moved = x0.pop().unwrap();
        let mut x1 = sp.x1().to_vec();
        x1.push(moved);
        let broken = Splitting::from_parts(g.clone(), 2, -2, vec![0], x0, x1);
        assert!(!verify_splitting(&broken));
        let no_zero = Splitting::from_parts(g, 2, -2, vec![], sp.x0().to_vec(), sp.x1().to_vec());
        assert_eq!(no_zero.verify(), Err(SplittingDefect::NotAPartition));
    }

    #[test]
    fn json_shape() {
        let sp = build_splitting(&GroupShape::cyclic(7), 2).unwrap();
        let v = sp.to_json(false).unwrap();
        assert_eq!(
            v,
            json!({"group": "7", "q": 2, "Z": [[0]], "X0": [[1]], "X1": [[3]]})
        );
        let v = sp.to_json(true).unwrap();
        assert_eq!(v["X1"], json!([[3], [5], [6]]));
    }

    #[test]
    fn restriction_to_factors() {
        let g: GroupShape = "3x9".parse().unwrap();
        let sp = build_splitting(&g, 4).unwrap();
        for i in 0..g.rank() {
            assert!(verify_splitting(&sp.restrict_to_factor(i)));
        }
    }
}
