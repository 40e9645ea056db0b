//! Randomized and exhaustive invariants spanning several modules. Random
//! inputs come from fixed seeds.

use hsd_codes::arith;
use hsd_codes::codes::GroupAlgebra;
use hsd_codes::counting::{abelian_count, hsd_direct, hsd_sieve, semigroup_member, SieveContext};
use hsd_codes::group::{enumerate_groups, orbit_partition, GroupShape};
use hsd_codes::splitting::{build_splitting, classify_prime, exists_hsd, product_splitting};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn group_strategy() -> impl Strategy<Value = GroupShape> {
    prop::collection::vec(2u64..10, 1..4).prop_map(|v| GroupShape::from_cyclic_factors(&v))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn orbits_partition_the_group(g in group_strategy(), s in 1i64..40) {
        prop_assume!(g.is_unit(s));
        let orbits = orbit_partition(&g, s).unwrap();
        let mut seen = vec![false; g.len()];
        for o in orbits.orbits() {
            for &x in o {
                prop_assert!(!seen[x]);
                seen[x] = true;
            }
        }
        prop_assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn built_splittings_verify(g in group_strategy(), q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9])) {
        prop_assume!(arith::gcd(g.order(), q) == 1);
        if let Ok(sp) = build_splitting(&g, q) {
            prop_assert!(sp.verify().is_ok());
            prop_assert_eq!(sp.x0().len(), sp.x1().len());
            prop_assert!(sp.swapped().verify().is_ok());
        }
    }

    #[test]
    fn mu_inverse_pairs_cancel(seed in any::<u64>()) {
        let g: GroupShape = "3x9".parse().unwrap();
        let alg = GroupAlgebra::new(&g, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f: Vec<u32> = (0..alg.n()).map(|_| rng.gen_range(0..16)).collect();
        for s in [2i64, 4, 5, 7, 8] {
            let inv = arith::inv_mod(s as u64, 9).unwrap() as i64;
            let there = alg.mu_action(s, &f).unwrap();
            prop_assert_eq!(alg.mu_action(inv, &there).unwrap(), f.clone());
        }
        let h: Vec<u32> = (0..alg.n()).map(|_| rng.gen_range(0..16)).collect();
        alg.hermitian_inner(&f, &h).unwrap();
    }
}

#[test]
fn abelian_count_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 10_000 {
        let m = rng.gen_range(1..100_000u64);
        let n = rng.gen_range(1..100_000u64);
        if arith::gcd(m, n) != 1 {
            continue;
        }
        assert_eq!(
            abelian_count(m * n).unwrap(),
            abelian_count(m).unwrap() * abelian_count(n).unwrap()
        );
        checked += 1;
    }
}

#[test]
fn abelian_count_matches_group_enumeration() {
    for n in 1..=10_000u64 {
        let count = enumerate_groups(n).unwrap().len();
        assert_eq!(abelian_count(n).unwrap(), BigUint::from(count), "n = {n}");
    }
}

#[test]
fn semigroup_matches_existence_for_odd_orders() {
    for q in [2u64, 3, 4, 5] {
        for n in (1..=1000u64).step_by(2).filter(|&n| arith::gcd(n, q) == 1) {
            assert_eq!(
                semigroup_member(n, q).unwrap(),
                exists_hsd(n, q).unwrap().exists,
                "n = {n}, q = {q}"
            );
        }
    }
}

#[test]
fn semigroup_prime_powers_respect_growth_hypothesis() {
    // f(p^r) = a(p^r) chi(p^r) <= 1 * (5^(1/4))^r
    let bound = 1_000_000u64;
    for q in [None, Some(2), Some(3)] {
        let ctx = SieveContext::new(bound, q).unwrap();
        for p in ctx.primes() {
            let mut pr = p;
            let mut r = 1;
            while pr <= bound {
                let f = ctx.semigroup_abelian_count(pr);
                assert!(
                    (f as f64) <= 5f64.powf(r as f64 / 4.0) + 1e-9,
                    "p = {p}, r = {r}"
                );
                pr = match pr.checked_mul(p) {
                    Some(v) => v,
                    None => break,
                };
                r += 1;
            }
        }
    }
}

#[test]
fn verdicts_stable_under_cubing_q() {
    for q in [2u64, 3, 4, 5, 7] {
        let q3 = q.pow(3);
        for r in (2..1000).filter(|&r| arith::is_prime(r)) {
            assert_eq!(
                classify_prime(r, q).unwrap().verdict,
                classify_prime(r, q3).unwrap().verdict,
                "r = {r}, q = {q}"
            );
        }
    }
}

#[test]
fn hsd_sieve_matches_direct_up_to_a_million() {
    let ctx = SieveContext::new(1_000_000, Some(2)).unwrap();
    assert_eq!(
        hsd_sieve(&ctx, 1_000_000),
        hsd_direct(1_000_000, 2).unwrap()
    );
    for q in [3u64, 4, 5, 7, 9] {
        let ctx = SieveContext::new(100_000, Some(q)).unwrap();
        for x in [1, 2, 10, 999, 100_000] {
            assert_eq!(
                hsd_sieve(&ctx, x),
                hsd_direct(x, q).unwrap(),
                "x = {x}, q = {q}"
            );
        }
    }
}

#[test]
fn product_of_cyclic_splittings_verifies() {
    for (factors, q) in [
        (vec![3u64, 9], 4u64),
        (vec![7, 7], 2),
        (vec![5, 5], 3),
        (vec![3, 3, 3], 4),
    ] {
        let g = GroupShape::new(factors.clone()).unwrap();
        let parts: Vec<(GroupShape, _)> = factors
            .iter()
            .map(|&m| {
                let c = GroupShape::cyclic(m);
                let sp = build_splitting(&c, q).unwrap();
                (c, sp)
            })
            .collect();
        let sp = product_splitting(&parts).unwrap();
        assert_eq!(sp.group(), &g);
        assert!(sp.verify().is_ok());
    }
}
