//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Tables are cached under the cargo target tmpdir, so only the first run
//! pays for the large builds. Criteria that are known not to hold in the
//! computable range are reported as `FAIL (known)` and do not fail the run
//! unless `UNIRANK_ACCEPTANCE_STRICT=1` is set. Any other failure exits
//! nonzero.

use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigInt;

use unirank::analysis::{
    convergence_ratio, deviation_non_increasing, ks_distance, lemma42_discriminant_check,
    logconcavity_scan, moments, ConvergenceReport, RegionRule, Target,
};
use unirank::asymptotics::{
    closed_form_dm_moment, closed_form_u_moment, closed_form_v_moment, durfee_moment_input,
    fit_remainder_order, ingham_closed_form, ingham_translate, partition_input,
    pole_leading_ratio, semistrict_moment_input, unimodal_moment_input, EmCase, MomentKind,
};
use unirank::bigfloat::{big_ratio, ln_abs_big};
use unirank::enumerate::{build_table, verify_identity, BruteForce, Family, Identity, RankTable};
use unirank::series::ZetaLaurent;
use unirank::store::TableStore;
use unirank::tolerances::Tolerances;

/// Criteria whose failure in the computable range is understood.
const KNOWN_FAILURES: &[u32] = &[5, 6, 9];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

struct Tables {
    store: TableStore,
}

impl Tables {
    fn get(&self, family: Family, order: usize) -> RankTable {
        let t0 = Instant::now();
        let (t, outcome) = self.store.load_or_build(family, order).expect("table cache");
        eprintln!("  [{family} order {order}: {outcome:?} in {:.1?}]", t0.elapsed());
        t
    }
}

fn fmt_ratios(r: &ConvergenceReport) -> String {
    let rs: Vec<String> = r.rows.iter().map(|row| format!("{:.4}", row.ratio)).collect();
    format!("{} [{}]", r.label, rs.join(", "))
}

fn criterion1() -> Outcome {
    let b = BruteForce::default();
    let mut checked = 0;
    for (family, max_n) in [
        (Family::Unimodal, 15),
        (Family::Durfee, 15),
        (Family::Semistrict, 15),
        (Family::PartitionRank, 25),
        (Family::PartitionCrank, 25),
    ] {
        let t = build_table(family, max_n);
        for n in 0..=max_n {
            let brute = match family {
                Family::Unimodal => b.unimodal(n),
                Family::Durfee => b.durfee(n),
                Family::Semistrict => b.semistrict(n),
                Family::PartitionRank => b.partition_rank(n),
                Family::PartitionCrank => b.partition_crank(n),
            }
            .expect("within enumeration cap");
            if t.row(n).unwrap() != &brute {
                return Outcome::new(false, format!("{family} differs at n = {n}"));
            }
            checked += 1;
        }
    }
    Outcome::new(true, format!("{checked} rows identical"))
}

fn criterion2() -> Outcome {
    for id in [Identity::U, Identity::V, Identity::D] {
        let r = verify_identity(id, 50, None).expect("identity builds");
        if let Some(m) = r.first_mismatch {
            return Outcome::new(false, format!("{id} fails at q^{}", m.n));
        }
    }
    Outcome::new(true, "U, V, D hold to q^50")
}

fn criterion3() -> Outcome {
    let u3 = build_table(Family::Unimodal, 3).count(3);
    let dm4 = build_table(Family::Semistrict, 4).count(4);
    let crank = build_table(Family::PartitionCrank, 1);
    let row = crank.row(1).unwrap();
    let ok = u3 == BigInt::from(6) && dm4 == BigInt::from(5) && row == &ZetaLaurent::from_i64s(-1, &[1, -1, 1]);
    Outcome::new(ok, format!("u(3) = {u3}, dm(4) = {dm4}, M(·,1) = {row}"))
}

fn criterion4(tol: &Tolerances, u: &RankTable, v: &RankTable, dm: &RankTable) -> Outcome {
    let mut reports = Vec::new();
    for t in [u, v] {
        for k in [0, 2] {
            reports.push(
                convergence_ratio(t, k, MomentKind::Signed, &tol.grids.symmetric, tol.moments.symmetric_signed)
                    .unwrap(),
            );
        }
    }
    for k in [0, 1] {
        reports.push(
            convergence_ratio(dm, k, MomentKind::Signed, &tol.grids.semistrict, tol.moments.semistrict_signed)
                .unwrap(),
        );
    }
    let pass = reports.iter().all(|r| r.verdict.passed());
    let detail: Vec<String> = reports.iter().map(fmt_ratios).collect();
    Outcome::new(pass, detail.join("; "))
}

fn criterion5(tol: &Tolerances, u: &RankTable, v: &RankTable, dm: &RankTable) -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for t in [u, v] {
        let r = convergence_ratio(t, 3, MomentKind::Absolute, &tol.grids.symmetric, tol.moments.absolute_k3).unwrap();
        pass &= r.verdict.passed();
        parts.push(format!("{} {:?}", fmt_ratios(&r), r.verdict));
    }
    for k in [0, 2, 4] {
        let s = moments(dm, k, MomentKind::Signed);
        let a = moments(dm, k, MomentKind::Absolute);
        let equal = s.values == a.values;
        pass &= equal;
        parts.push(format!("dm_{k}+ = dm_{k}: {equal}"));
    }
    for k in [1, 3] {
        let s = moments(dm, k, MomentKind::Signed);
        let a = moments(dm, k, MomentKind::Absolute);
        let dev: Vec<f64> = tol
            .grids
            .semistrict
            .iter()
            .map(|&n| (big_ratio(&a.values[n], &s.values[n]) - 1.0).abs())
            .collect();
        let decreasing = dev.windows(2).all(|w| w[1] < w[0]);
        pass &= decreasing;
        let dev: Vec<String> = dev.iter().map(|d| format!("{d:.2e}")).collect();
        parts.push(format!("|dm_{k}+/dm_{k} - 1| [{}]", dev.join(", ")));
    }
    Outcome::new(pass, parts.join("; "))
}

fn criterion6(tol: &Tolerances, u: &RankTable, v: &RankTable, dm: &RankTable) -> Outcome {
    let strictly_decreasing = |xs: &[f64]| xs.windows(2).all(|w| w[1] < w[0]);
    let mut pass = true;
    let mut parts = Vec::new();
    for t in [u, v] {
        let ks: Vec<f64> = tol
            .grids
            .ks_symmetric
            .iter()
            .map(|&n| ks_distance(t, n, Target::Logistic).unwrap())
            .collect();
        let ok = strictly_decreasing(&ks) && *ks.last().unwrap() < tol.distribution.ks_logistic_max;
        pass &= ok;
        parts.push(format!("{} logistic {ks:.4?}", t.family()));
    }
    let ks: Vec<f64> = tol
        .grids
        .semistrict
        .iter()
        .map(|&n| ks_distance(dm, n, Target::PointMassAtOne).unwrap())
        .collect();
    let ok = strictly_decreasing(&ks);
    pass &= ok;
    parts.push(format!("semistrict point mass {ks:.4?}{}", if ok { "" } else { " not decreasing" }));
    Outcome::new(pass, parts.join("; "))
}

fn criterion7(tol: &Tolerances) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for case in EmCase::ALL {
        let mut slopes = Vec::new();
        for order in [2usize, 3] {
            let results: Vec<_> = tol.grids.em_w.iter().map(|&w| case.run(order, w).unwrap()).collect();
            let fit = fit_remainder_order(&results);
            pass &= fit.slope >= order as f64 - tol.euler_maclaurin.slope_slack;
            slopes.push(format!("{:.3}", fit.slope));
        }
        parts.push(format!("{case} {}", slopes.join("/")));
    }
    let ratios: Vec<f64> = tol.grids.em_w.iter().map(|&w| pole_leading_ratio(w).1).collect();
    let trend = deviation_non_increasing(&ratios);
    pass &= trend;
    parts.push(format!("pole L/(-log w/w) {ratios:.4?}"));
    Outcome::new(pass, parts.join("; "))
}

fn criterion8(tol: &Tolerances) -> Outcome {
    for k in 0..=4 {
        let pairs = [
            (ingham_closed_form(&unimodal_moment_input(k)).unwrap(), closed_form_u_moment(k), "u"),
            (ingham_closed_form(&durfee_moment_input(k)).unwrap(), closed_form_v_moment(k), "v"),
            (ingham_closed_form(&semistrict_moment_input(k)).unwrap(), closed_form_dm_moment(k), "dm"),
        ];
        for (got, want, name) in pairs {
            if got != want {
                return Outcome::new(false, format!("{name} k={k}: translated {got} vs closed form {want}"));
            }
        }
    }
    let p = build_table(Family::PartitionRank, 500).count(500);
    let est = ingham_translate(&partition_input().numeric(), 500.0).unwrap();
    let ratio = (ln_abs_big(&p) - est.ln_value).exp();
    let ok = (ratio - 1.0).abs() <= tol.tauberian.partition_relative;
    Outcome::new(ok, format!("symbolic k ≤ 4 for u, v, dm; p(500)/translated = {ratio:.5}"))
}

fn criterion9(u: &RankTable, rank: &RankTable, crank: &RankTable) -> Outcome {
    let scans = [
        logconcavity_scan(u, RegionRule::Conjecture41, 300).unwrap(),
        logconcavity_scan(rank, RegionRule::ConjectureN, 250).unwrap(),
        logconcavity_scan(crank, RegionRule::ConjectureM, 250).unwrap(),
    ];
    let pass = scans.iter().all(|s| s.certified);
    let detail: Vec<String> = scans
        .iter()
        .map(|s| {
            let mut line = format!("{} {} checks, {} violations", s.rule, s.checked, s.violations.len());
            // report how far inside the region the deepest violation sits
            if let Some(depth) = s.violations.iter().map(|v| v.n as i64 - v.m.abs()).min() {
                line.push_str(&format!(" (deepest at |m| = n-{depth})"));
            }
            line
        })
        .collect();
    Outcome::new(pass, detail.join("; "))
}

fn criterion10(tol: &Tolerances, u: &RankTable) -> Outcome {
    let g = &tol.grids.discriminant;
    let r0 = lemma42_discriminant_check(u, 0, g, tol.discriminant.final_deviation).unwrap();
    let r2 = lemma42_discriminant_check(u, 2, g, tol.discriminant.final_deviation).unwrap();
    let spread = (r0.rows.last().unwrap().ratio - r2.rows.last().unwrap().ratio).abs();
    let pass = r0.verdict.passed() && r2.verdict.passed() && spread <= tol.discriminant.m_spread;
    Outcome::new(pass, format!("{}; {}; spread {spread:.4}", fmt_ratios(&r0), fmt_ratios(&r2)))
}

fn main() {
    let strict = std::env::var("UNIRANK_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let tol = Tolerances::default();
    let cache = std::env::var_os("UNIRANK_CACHE")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-tables"));
    let tables = Tables { store: TableStore::new(cache) };

    let mut results: Vec<(u32, Outcome, f64)> = Vec::new();
    let mut run = |id: u32, f: &mut dyn FnMut() -> Outcome| {
        let t0 = Instant::now();
        let o = f();
        let secs = t0.elapsed().as_secs_f64();
        let status = match (o.pass, KNOWN_FAILURES.contains(&id)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("criterion {id:>2}: {status} [{secs:.1}s] {}", o.detail);
        results.push((id, o, secs));
    };

    run(1, &mut criterion1);
    run(2, &mut criterion2);
    run(3, &mut criterion3);

    let sym_order = *tol.grids.symmetric.last().unwrap();
    let u = tables.get(Family::Unimodal, sym_order.max(300));
    let v = tables.get(Family::Durfee, sym_order);
    let dm = tables.get(Family::Semistrict, *tol.grids.semistrict.last().unwrap());
    run(4, &mut || criterion4(&tol, &u, &v, &dm));
    run(5, &mut || criterion5(&tol, &u, &v, &dm));
    run(6, &mut || criterion6(&tol, &u, &v, &dm));
    run(7, &mut || criterion7(&tol));
    run(8, &mut || criterion8(&tol));
    let rank = tables.get(Family::PartitionRank, 250);
    let crank = tables.get(Family::PartitionCrank, 250);
    run(9, &mut || criterion9(&u, &rank, &crank));
    run(10, &mut || criterion10(&tol, &u));

    let passed = results.iter().filter(|r| r.1.pass).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    let unexpected = results
        .iter()
        .filter(|(id, o, _)| !o.pass && (strict || !KNOWN_FAILURES.contains(id)))
        .count();
    if unexpected > 0 {
        std::process::exit(1);
    }
}
