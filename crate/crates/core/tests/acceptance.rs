//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Run with `cargo test --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hsd_codes::arith;
use hsd_codes::cli::pipeline_selfdual;
use hsd_codes::codes::{
    brute_force_dual, is_hermitian_self_dual, is_hermitian_self_orthogonal, GroupAlgebra, ZeroSet,
};
use hsd_codes::counting::{
    abelian_sum, density_delta, distinct_bound, distinct_values, hsd_direct, hsd_fit, hsd_sieve,
    kratzel_limit, li, max_order_suite, pq_count, SieveContext,
};
use hsd_codes::group::{enumerate_groups, orbit_partition, GroupElement, GroupShape};
use hsd_codes::splitting::{build_splitting, exists_hsd};

mod common;
use common::{all_splittings, groups_of_odd_order, orbit_unions};

type Check = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, limit_s: u64) -> bool {
    elapsed < Duration::from_secs(limit_s)
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let g: GroupShape = "3x9".parse().unwrap();
    let report = pipeline_selfdual(&g, 4).unwrap();
    let elapsed = start.elapsed();

    let orbits = orbit_partition(&g, 16).unwrap();
    let union = |reps: &[(u64, u64)]| {
        ZeroSet::new(reps.iter().flat_map(|&(i, j)| {
            let id = orbits.orbit_of(g.index_of(&GroupElement(vec![i, j])));
            orbits.orbit(id).to_vec()
        }))
    };
    let x0 = union(&[(1, 0), (1, 1), (1, 2), (1, 3), (1, 6), (0, 1), (0, 3)]);
    let x1 = union(&[(2, 0), (2, 1), (2, 2), (2, 3), (2, 6), (0, 2), (0, 6)]);
    let sp = &report.splitting;
    let (b0, b1) = (
        ZeroSet::new(sp.x0().iter().copied()),
        ZeroSet::new(sp.x1().iter().copied()),
    );
    let same = (b0 == x0 && b1 == x1) || (b0 == x1 && b1 == x0);
    let ext = &report.extended;
    let field = ext.generator().field().order();
    let pass = sp.z() == [0]
        && same
        && ext.length() == 28
        && ext.dimension() == 14
        && field == 16
        && report.self_dual
        && within(elapsed, 60);
    outcome(
        pass,
        format!(
            "Z3xZ9, q=4: X0/X1 match listed orbits = {same}, length {}, dim {}, |F| = {field}, self-dual = {}, {:.2?}",
            ext.length(),
            ext.dimension(),
            report.self_dual,
            elapsed
        ),
    )
}

fn existence_equivalence() -> Outcome {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for q in [2u64, 3, 4, 5, 8, 9] {
        for n in (1..=45u64).step_by(2).filter(|&n| arith::gcd(n, q) == 1) {
            let predicted = exists_hsd(n, q).unwrap().exists;
            for g in enumerate_groups(n).unwrap() {
                checked += 1;
                if build_splitting(&g, q).is_ok() != predicted {
                    mismatches.push(format!("{g}/q={q}"));
                }
            }
        }
    }
    outcome(
        mismatches.is_empty(),
        format!(
            "{checked} (group, q) pairs, {} mismatches {mismatches:?}",
            mismatches.len()
        ),
    )
}

fn dual_oracle() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut mismatches) = (0, 0);
    for q in [2, 4] {
        for g in groups_of_odd_order(15) {
            let alg = GroupAlgebra::new(&g, q).unwrap();
            for x in orbit_unions(&alg) {
                let code = alg.code_from_zero_set(&x).unwrap();
                let formula = alg
                    .code_from_zero_set(&alg.hermitian_dual_zero_set(&x))
                    .unwrap();
                let oracle = brute_force_dual(code.generator()).unwrap();
                checked += 1;
                mismatches += usize::from(!oracle.same_row_space(formula.generator()));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches == 0 && within(elapsed, 300),
        format!("{checked} zero sets over groups of order <= 15, q in {{2,4}}: {mismatches} mismatches, {elapsed:.2?}"),
    )
}

fn herm_split_and_extension() -> Outcome {
    let (mut checked, mut mismatches) = (0, 0);
    for g in [3, 5, 7, 9]
        .iter()
        .flat_map(|&n| enumerate_groups(n).unwrap())
    {
        let alg = GroupAlgebra::new(&g, 2).unwrap();
        let n = alg.n();
        let gamma = alg.tower().solve_gamma(n as u64).unwrap().code;
        let splittings = all_splittings(&alg, -2);
        let covers: Vec<ZeroSet> = splittings.iter().map(|(z, x0, _)| z.union(x0)).collect();
        let halves: Vec<&ZeroSet> = splittings
            .iter()
            .filter(|(z, _, _)| *z == ZeroSet::new([0]))
            .map(|(_, x0, _)| x0)
            .collect();
        for x in orbit_unions(&alg) {
            let code = alg.code_from_zero_set(&x).unwrap();
            checked += 1;
            let orthogonal = is_hermitian_self_orthogonal(code.generator()).unwrap();
            mismatches += usize::from(orthogonal != covers.contains(&x));
            if x.len() == (n - 1) / 2 {
                let ext = alg.extend_code(&code, gamma).unwrap();
                let self_dual = is_hermitian_self_dual(ext.generator()).unwrap();
                mismatches += usize::from(self_dual != halves.contains(&&x));
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("{checked} ideal codes, n in {{3,5,7,9}}, q=2: {mismatches} mismatches"),
    )
}

fn delta_table() -> Outcome {
    let want = [
        (2, "7/24"),
        (4, "1/3"),
        (8, "7/24"),
        (16, "1/24"),
        (3, "1/3"),
        (9, "1/6"),
    ];
    let got: Vec<String> = want
        .iter()
        .map(|&(q, _)| density_delta(q).unwrap().to_string())
        .collect();
    let pass = want.iter().zip(&got).all(|(&(_, w), g)| w == g);
    let shown: Vec<String> = want
        .iter()
        .zip(&got)
        .map(|(&(q, _), g)| format!("d({q})={g}"))
        .collect();
    outcome(pass, shown.join(" "))
}

fn abelian_sum_main_term() -> Outcome {
    let start = Instant::now();
    let r = abelian_sum(1_000_000).unwrap();
    let elapsed = start.elapsed();
    let predicted = r.predicted.unwrap();
    let rel = (r.exact as f64 - predicted).abs() / r.exact as f64;
    outcome(
        rel < 1e-3 && within(elapsed, 30),
        format!(
            "sum a(n), n <= 10^6: exact {}, three-term {predicted:.1}, relative error {rel:.3e} (tolerance 1e-3), {elapsed:.2?}",
            r.exact
        ),
    )
}

fn prime_density() -> Outcome {
    let li6 = li(1e6).unwrap();
    let mut pass = true;
    let mut parts = Vec::new();
    for (q, target) in [(2u64, 17.0 / 24.0), (3, 2.0 / 3.0)] {
        let r = pq_count(1_000_000, q).unwrap();
        let ratio = r.exact as f64 / li6;
        pass &= (ratio - target).abs() <= 0.03;
        parts.push(format!("q={q}: {}/Li = {ratio:.4} vs {target:.4}", r.exact));
    }
    outcome(pass, parts.join("; "))
}

fn hsd_sieve_vs_direct() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for q in [2u64, 3, 4, 5] {
        let ctx = SieveContext::new(100_000, Some(q)).unwrap();
        let (s, d) = (hsd_sieve(&ctx, 100_000), hsd_direct(100_000, q).unwrap());
        pass &= s == d;
        parts.push(format!("q={q}: {s}/{d}"));
    }
    let ctx = SieveContext::new(30, Some(2)).unwrap();
    let h30 = hsd_sieve(&ctx, 30);
    pass &= h30 == 9;
    outcome(
        pass,
        format!(
            "HSD(10^5) sieve/direct {}; HSD(30, q=2) = {h30}",
            parts.join(", ")
        ),
    )
}

fn maximal_order_family() -> Outcome {
    let limit = kratzel_limit();
    let mut exact = true;
    let mut below = true;
    let mut increasing = true;
    let mut parts = Vec::new();
    for (label, q) in [("all primes", None), ("P_2", Some(2))] {
        let rep = max_order_suite(20, q).unwrap();
        exact &= rep
            .rows
            .iter()
            .all(|r| r.exact_match && r.count_to_a == r.r);
        let ratios: Vec<f64> = rep.rows.iter().map(|r| r.kratzel_ratio).collect();
        below &= ratios.iter().all(|&k| k < limit);
        increasing &= ratios[4..].windows(2).all(|w| w[1] > w[0]);
        parts.push(format!(
            "{label}: r=5 {:.4}, r=10 {:.4}, r=20 {:.4}",
            ratios[4], ratios[9], ratios[19]
        ));
    }
    outcome(
        exact && below && increasing,
        format!(
            "a(n_r) = 5^P(A) exact: {exact}; ratio < log5/4 = {limit:.4}: {below}; increasing after r=5: {increasing}; {}",
            parts.join("; ")
        ),
    )
}

fn distinct_value_bound() -> Outcome {
    let c = distinct_values(1_000_000, None).unwrap().exact;
    let cg = distinct_values(1_000_000, Some(2)).unwrap().exact;
    let bound = distinct_bound(1e6, 1.5);
    outcome(
        (c as f64) <= bound && (cg as f64) <= bound && cg <= c,
        format!("C(10^6) = {c}, C_G2(10^6) = {cg}, bound with slack 1.5 = {bound:.1}"),
    )
}

fn b0_stability() -> Outcome {
    let fit = hsd_fit(&[100_000, 1_000_000, 10_000_000], 2).unwrap();
    let est: Vec<String> = fit
        .samples
        .iter()
        .map(|s| format!("{:.5}", s.b0_hat))
        .collect();
    outcome(
        fit.spread < 0.15 && fit.samples.iter().all(|s| s.b0_hat > 0.0),
        format!(
            "q=2, x in 10^5..10^7: b0_hat = [{}], spread {:.4} (tolerance 0.15)",
            est.join(", "),
            fit.spread
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 11] = [
        ("1", worked_example),
        ("2", existence_equivalence),
        ("3", dual_oracle),
        ("4", herm_split_and_extension),
        ("5", delta_table),
        ("6", abelian_sum_main_term),
        ("7", prime_density),
        ("8", hsd_sieve_vs_direct),
        ("9", maximal_order_family),
        ("10", distinct_value_bound),
        ("b0", b0_stability),
    ];
    let mut failed = Vec::new();
    for (id, check) in criteria {
        let o = check();
        println!(
            "[{}] criterion {id}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
