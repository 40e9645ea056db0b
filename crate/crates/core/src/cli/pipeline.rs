use serde_json::{json, Value};

use crate::codes::{is_hermitian_self_dual, ExtendedCode, GroupAlgebra};
use crate::error::{Error, Result};
use crate::group::GroupShape;
use crate::splitting::{build_splitting, Splitting};

/// Everything produced on the way from a group to its extended split code.
#[derive(Clone, Debug)]
pub struct SelfDualReport {
    pub splitting: Splitting,
    pub gamma: u32,
    pub extended: ExtendedCode,
    pub self_dual: bool,
}

impl SelfDualReport {
    pub fn to_json(&self) -> Result<Value> {
        let f = self.extended.generator().field();
        Ok(json!({
            "group": self.splitting.group().to_string(),
            "q": self.splitting.q(),
            "splitting": self.splitting.to_json(false)?,
            "field": { "p": f.characteristic(), "degree": f.degree(), "modulus": f.modulus_code() },
            "gamma": self.gamma,
            "length": self.extended.length(),
            "dimension": self.extended.dimension(),
            "self_dual": self.self_dual,
        }))
    }
}

/// Splitting by `-q`, the ideal `C0 = I_X0`, the canonical `gamma`, the
/// extension and the self-duality check, in that order.
pub fn pipeline_selfdual(group: &GroupShape, q: u64) -> Result<SelfDualReport> {
    pipeline_selfdual_with(group, q, None)
}

/// As [`pipeline_selfdual`], with an explicit `gamma` in place of the canonical one.
pub fn pipeline_selfdual_with(
    group: &GroupShape,
    q: u64,
    gamma: Option<u32>,
) -> Result<SelfDualReport> {
    if group.order().is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "group order {} is even; the extension needs odd order",
            group.order()
        )));
    }
    let splitting = build_splitting(group, q)?;
    let alg = GroupAlgebra::new(group, q)?;
    let c0 = alg.split_codes(&splitting)?.c0;
    let gamma = match gamma {
        Some(g) => g,
        None => alg.tower().solve_gamma(group.order())?.code,
    };
    let extended = alg.extend_code(&c0, gamma)?;
    let self_dual = is_hermitian_self_dual(extended.generator())?;
    Ok(SelfDualReport {
        splitting,
        gamma,
        extended,
        self_dual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_gives_length_two() {
        for q in [2, 3, 4, 9] {
            let r = pipeline_selfdual(&GroupShape::trivial(), q).unwrap();
            assert_eq!(
                (r.extended.length(), r.extended.dimension(), r.self_dual),
                (2, 1, true)
            );
        }
    }

    #[test]
    fn obstruction_names_the_prime() {
        let Err(Error::Obstructed(ob)) = pipeline_selfdual(&GroupShape::cyclic(3), 2) else {
            panic!("expected obstruction")
        };
        assert_eq!(ob.obstructed_primes, [3]);
        assert!(pipeline_selfdual(&GroupShape::cyclic(5), 4).is_err());
        assert!(pipeline_selfdual(&GroupShape::cyclic(4), 3).is_err());
    }

    #[test]
    fn z7_json() {
        let r = pipeline_selfdual(&GroupShape::cyclic(7), 2).unwrap();
        let j = r.to_json().unwrap();
        assert_eq!(j["length"], 8);
        assert_eq!(j["dimension"], 4);
        assert_eq!(j["self_dual"], true);
        assert_eq!(j["gamma"], 1);
    }
}
