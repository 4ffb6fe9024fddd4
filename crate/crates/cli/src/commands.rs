use std::fs::File;
use std::io::BufWriter;

use serde::Serialize;

use unirank::analysis::{
    convergence_ratio, empirical_cdf, ks_distance_cdf, lemma42_discriminant_check,
    logconcavity_scan, moments, normalized_moment_limit, ConvergenceReport, Normalization,
    RegionRule, Target,
};
use unirank::asymptotics::{EmCase, EmResult, MomentKind, RemainderFit};
use unirank::enumerate::{verify_identity, BruteForce, Family, RankTable};
use unirank::series::ZetaLaurent;
use unirank::special::logistic_cdf;
use unirank::store::{write_csv, CacheOutcome, TableStore};
use unirank::tolerances::Tolerances;
use unirank::{Error, Result};

use crate::output::{note, Report};
use crate::{exit, Cli, Command, Global, MomentSelection, Quantity, RuleArg};

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::CorruptCache { .. } => exit::IO,
        _ => exit::USAGE,
    }
}

/// Runs the command; `Ok(false)` means a mathematical check failed.
pub fn run(cli: &Cli) -> Result<bool> {
    let g = &cli.global;
    match &cli.command {
        Command::Table { family, order, export_csv } => cmd_table(g, *family, *order, export_csv.as_deref()),
        Command::Verify { identity: Some(id), order, self_test_perturb, .. } => {
            cmd_verify_identity(g, *id, *order, *self_test_perturb)
        }
        Command::Verify { oracle: Some(f), max_n, self_test_perturb, .. } => {
            cmd_verify_oracle(g, *f, *max_n, *self_test_perturb)
        }
        Command::Verify { .. } => unreachable!("clap requires --identity or --oracle"),
        Command::Moments { sel } => cmd_moments(g, sel),
        Command::Asymptotics { sel, quantity, m } => cmd_asymptotics(g, sel, *quantity, *m),
        Command::Distribution { family, n, target, order, cdf } => {
            cmd_distribution(g, *family, n, *target, *order, *cdf)
        }
        Command::Conjecture { rule, max_n, family, n_min, margin } => {
            cmd_conjecture(g, *rule, *max_n, *family, *n_min, *margin)
        }
        Command::EmDemo { case, w, order } => cmd_em_demo(g, *case, *w, *order),
    }
}

fn tolerances(g: &Global) -> Result<Tolerances> {
    match &g.tolerances {
        Some(path) => Tolerances::load(path),
        None => Ok(Tolerances::default()),
    }
}

fn load_table(g: &Global, family: Family, order: usize) -> Result<RankTable> {
    let store = TableStore::new(&g.cache_dir);
    let (table, outcome) = store.load_or_build_with_progress(family, order, |s| note(s))?;
    let path = store.path_for(family);
    match outcome {
        CacheOutcome::Hit => note(format!("{family}: cache hit {}", path.display())),
        CacheOutcome::Truncated { cached_order } => {
            note(format!("{family}: using rows 0..={order} of cached order {cached_order}"))
        }
        CacheOutcome::Built | CacheOutcome::Rebuilt => {
            note(format!("{family}: built order {order}, cached at {}", path.display()))
        }
    }
    Ok(table)
}

/// Loads a table of `order` (default: the largest grid point) and checks
/// the grid against it.
fn table_for_grid(g: &Global, family: Family, grid: &[usize], order: Option<usize>) -> Result<RankTable> {
    let max = grid.iter().copied().max().unwrap_or(0);
    let order = order.unwrap_or(max);
    let table = load_table(g, family, order)?;
    table.ensure_covers(max)?;
    Ok(table)
}

fn cmd_table(g: &Global, family: Family, order: usize, export: Option<&std::path::Path>) -> Result<bool> {
    #[derive(Serialize)]
    struct Row {
        n: usize,
        count: String,
    }
    let table = load_table(g, family, order)?;
    let mut spots: Vec<usize> = (0..=order.min(10)).collect();
    if order > 10 {
        spots.push(order);
    }
    let rows: Vec<Row> = spots
        .into_iter()
        .map(|n| Row { n, count: table.count(n).to_string() })
        .collect();
    if let Some(path) = export {
        let mut w = BufWriter::new(File::create(path)?);
        write_csv(&mut w, &table)?;
        note(format!("wrote {}", path.display()));
    }
    #[derive(Serialize)]
    struct Summary {
        family: Family,
        order: usize,
        row_sums: Vec<Row>,
    }
    Report {
        header: "family,n,count",
        rows: rows.iter().map(|r| format!("{family},{},{}", r.n, r.count)).collect(),
        json: Summary { family, order, row_sums: rows },
    }
    .emit(g.format)?;
    Ok(true)
}

fn cmd_verify_identity(
    g: &Global,
    id: unirank::enumerate::Identity,
    order: usize,
    perturb: Option<usize>,
) -> Result<bool> {
    let report = verify_identity(id, order, perturb)?;
    let mm = report.first_mismatch.as_ref();
    Report {
        header: "identity,order,holds,first_mismatch_n,lhs,rhs",
        rows: vec![format!(
            "{:?},{order},{},{},\"{}\",\"{}\"",
            id,
            report.holds(),
            mm.map(|m| m.n.to_string()).unwrap_or_default(),
            mm.map(|m| m.lhs.as_str()).unwrap_or(""),
            mm.map(|m| m.rhs.as_str()).unwrap_or(""),
        )],
        json: &report,
    }
    .emit(g.format)?;
    Ok(report.holds())
}

#[derive(Serialize)]
struct OracleMismatch {
    n: usize,
    m: i64,
    table: String,
    brute_force: String,
}

#[derive(Serialize)]
struct OracleReport {
    family: Family,
    max_n: usize,
    perturbed_at: Option<usize>,
    first_mismatch: Option<OracleMismatch>,
}

fn brute_row(family: Family, n: usize) -> Result<ZetaLaurent> {
    let b = BruteForce::default();
    match family {
        Family::Unimodal => b.unimodal(n),
        Family::Durfee => b.durfee(n),
        Family::Semistrict => b.semistrict(n),
        Family::PartitionRank => b.partition_rank(n),
        Family::PartitionCrank => b.partition_crank(n),
    }
}

fn first_row_difference(a: &ZetaLaurent, b: &ZetaLaurent) -> Option<i64> {
    let lo = a.lo().min(b.lo());
    let hi = a.hi().max(b.hi());
    (lo..=hi).find(|&m| a.coeff(m) != b.coeff(m))
}

fn cmd_verify_oracle(g: &Global, family: Family, max_n: usize, perturb: Option<usize>) -> Result<bool> {
    let table = unirank::enumerate::build_table(family, max_n);
    let mut first_mismatch = None;
    for n in 0..=max_n {
        let mut row = table.row(n)?.clone();
        if perturb == Some(n) {
            row.add_shifted(&ZetaLaurent::one(), 0, false);
        }
        let brute = brute_row(family, n)?;
        if let Some(m) = first_row_difference(&row, &brute) {
            first_mismatch = Some(OracleMismatch {
                n,
                m,
                table: row.coeff(m).to_string(),
                brute_force: brute.coeff(m).to_string(),
            });
            break;
        }
    }
    let holds = first_mismatch.is_none();
    let mm = first_mismatch.as_ref();
    Report {
        header: "family,max_n,holds,first_mismatch_n,m,table,brute_force",
        rows: vec![format!(
            "{family},{max_n},{holds},{},{},{},{}",
            mm.map(|x| x.n.to_string()).unwrap_or_default(),
            mm.map(|x| x.m.to_string()).unwrap_or_default(),
            mm.map(|x| x.table.as_str()).unwrap_or(""),
            mm.map(|x| x.brute_force.as_str()).unwrap_or(""),
        )],
        json: OracleReport { family, max_n, perturbed_at: perturb, first_mismatch },
    }
    .emit(g.format)?;
    Ok(holds)
}

fn cmd_moments(g: &Global, sel: &MomentSelection) -> Result<bool> {
    #[derive(Serialize)]
    struct Row {
        n: usize,
        value: String,
    }
    let table = table_for_grid(g, sel.family, &sel.n, sel.order)?;
    let mv = moments(&table, sel.k, sel.kind);
    let rows: Vec<Row> = sel.n.iter().map(|&n| Row { n, value: mv.values[n].to_string() }).collect();
    #[derive(Serialize)]
    struct Out {
        family: Family,
        k: u32,
        kind: MomentKind,
        values: Vec<Row>,
    }
    Report {
        header: "family,k,kind,n,value",
        rows: rows
            .iter()
            .map(|r| format!("{},{},{},{},{}", sel.family, sel.k, sel.kind, r.n, r.value))
            .collect(),
        json: Out { family: sel.family, k: sel.k, kind: sel.kind, values: rows },
    }
    .emit(g.format)?;
    Ok(true)
}

fn convergence_rows(r: &ConvergenceReport) -> Vec<String> {
    r.rows
        .iter()
        .map(|row| format!("{},{},{},{},{}", r.label, row.n, row.exact, row.main_term, row.ratio))
        .collect()
}

fn cmd_asymptotics(g: &Global, sel: &MomentSelection, quantity: Quantity, m: i64) -> Result<bool> {
    if quantity != Quantity::Moment && sel.kind == MomentKind::Absolute {
        return Err(Error::Domain("--kind absolute only applies to --quantity moment".into()));
    }
    let tol = tolerances(g)?;
    let symmetric = sel.family.is_symmetric();
    let (tolerance, key) = match quantity {
        Quantity::Discriminant => (tol.discriminant.final_deviation, "discriminant.final"),
        Quantity::Moment if sel.kind == MomentKind::Absolute => {
            (tol.moments.absolute_k3, "moments.absolute_k3")
        }
        _ if symmetric => (tol.moments.symmetric_signed, "moments.symmetric_signed"),
        _ => (tol.moments.semistrict_signed, "moments.semistrict_signed"),
    };
    note(format!("tolerance {tolerance} ({key})"));
    let table = table_for_grid(g, sel.family, &sel.n, sel.order)?;
    let report = match quantity {
        Quantity::Moment => convergence_ratio(&table, sel.k, sel.kind, &sel.n, tolerance)?,
        Quantity::Normalized => normalized_moment_limit(&table, sel.k, &sel.n, tolerance)?,
        Quantity::Discriminant => lemma42_discriminant_check(&table, m, &sel.n, tolerance)?,
    };
    note(format!(
        "verdict {:?}: final deviation {}, monotone {}",
        report.verdict, report.final_deviation, report.monotone
    ));
    Report {
        header: "quantity,n,exact,main_term,ratio",
        rows: convergence_rows(&report),
        json: &report,
    }
    .emit(g.format)?;
    Ok(report.verdict.passed())
}

fn strictly_decreasing(xs: &[f64]) -> bool {
    xs.windows(2).all(|w| w[1] < w[0])
}

fn cmd_distribution(
    g: &Global,
    family: Family,
    grid: &[usize],
    target: Option<Target>,
    order: Option<usize>,
    cdf: bool,
) -> Result<bool> {
    let target = match target {
        Some(t) => t,
        None => Target::for_family(family)?,
    };
    let norm = Normalization::for_family(family)?;
    let table = table_for_grid(g, family, grid, order)?;
    let cdfs = grid
        .iter()
        .map(|&n| empirical_cdf(&table, n, norm))
        .collect::<Result<Vec<_>>>()?;

    if cdf {
        #[derive(Serialize)]
        struct Point {
            n: usize,
            x: f64,
            empirical: f64,
            target: f64,
        }
        let target_at = |x: f64| match target {
            Target::Logistic => logistic_cdf(x),
            Target::PointMassAtOne => f64::from(u8::from(x >= 1.0)),
        };
        let points: Vec<Point> = cdfs
            .iter()
            .flat_map(|c| {
                c.jumps()
                    .into_iter()
                    .map(move |(x, _, v)| Point { n: c.n, x, empirical: v, target: target_at(x) })
            })
            .collect();
        Report {
            header: "family,n,x,empirical,target",
            rows: points
                .iter()
                .map(|p| format!("{family},{},{},{},{}", p.n, p.x, p.empirical, p.target))
                .collect(),
            json: &points,
        }
        .emit(g.format)?;
        return Ok(true);
    }

    let ks: Vec<f64> = cdfs.iter().map(|c| ks_distance_cdf(c, target)).collect();
    let decreasing = strictly_decreasing(&ks);
    note(format!("KS strictly decreasing over the grid: {decreasing}"));
    #[derive(Serialize)]
    struct Row {
        n: usize,
        ks: f64,
    }
    #[derive(Serialize)]
    struct Out {
        family: Family,
        target: Target,
        normalization: Normalization,
        rows: Vec<Row>,
        strictly_decreasing: bool,
    }
    let rows: Vec<Row> = grid.iter().zip(&ks).map(|(&n, &ks)| Row { n, ks }).collect();
    Report {
        header: "family,target,n,ks",
        rows: rows.iter().map(|r| format!("{family},{target},{},{}", r.n, r.ks)).collect(),
        json: Out { family, target, normalization: norm, rows, strictly_decreasing: decreasing },
    }
    .emit(g.format)?;
    Ok(decreasing)
}

fn cmd_conjecture(
    g: &Global,
    rule: RuleArg,
    max_n: usize,
    family: Option<Family>,
    n_min: usize,
    margin: i64,
) -> Result<bool> {
    let rule = match rule {
        RuleArg::Conjecture41 => RegionRule::Conjecture41,
        RuleArg::ConjectureN => RegionRule::ConjectureN,
        RuleArg::ConjectureM => RegionRule::ConjectureM,
        RuleArg::Custom => RegionRule::Custom { n_min, margin },
    };
    let family = match (rule.family(), family) {
        (Some(f), None) => f,
        (Some(f), Some(given)) if f == given => f,
        (Some(f), Some(given)) => {
            return Err(Error::Domain(format!("rule {rule} applies to {f}, not {given}")))
        }
        (None, Some(f)) => f,
        (None, None) => return Err(Error::Domain("--rule custom needs --family".into())),
    };
    let table = load_table(g, family, max_n)?;
    let report = logconcavity_scan(&table, rule, max_n)?;
    for v in report.violations.iter().take(20) {
        note(format!("violation at n={} m={}", v.n, v.m));
    }
    Report {
        header: "rule,family,n_min,n_max,checked,violations,certified",
        rows: vec![format!(
            "{rule},{family},{},{},{},{},{}",
            report.n_min,
            report.n_max,
            report.checked,
            report.violations.len(),
            report.certified
        )],
        json: &report,
    }
    .emit(g.format)?;
    Ok(report.certified)
}

fn cmd_em_demo(g: &Global, case: EmCase, w: Option<f64>, order: usize) -> Result<bool> {
    let row = |r: &EmResult| {
        format!(
            "{case},{order},{},{},{},{},{},{}",
            r.w,
            r.sum,
            r.expansion,
            r.remainder,
            r.resolution,
            r.resolved()
        )
    };
    let header = "case,order,w,sum,expansion,remainder,resolution,resolved";
    if let Some(w) = w {
        let r = case.run(order, w)?;
        Report { header, rows: vec![row(&r)], json: &r }.emit(g.format)?;
        return Ok(true);
    }
    let slack = tolerances(g)?.euler_maclaurin.slope_slack;
    let (results, fit) = case.remainder_order(order)?;
    let ok = fit.slope >= order as f64 - slack;
    note(format!(
        "fitted remainder order {} from {} resolved points (need ≥ {})",
        fit.slope,
        fit.resolved_points,
        order as f64 - slack
    ));
    #[derive(Serialize)]
    struct Out<'a> {
        case: EmCase,
        order: usize,
        results: &'a [EmResult],
        fit: RemainderFit,
    }
    Report {
        header,
        rows: results.iter().map(row).collect(),
        json: Out { case, order, results: &results, fit },
    }
    .emit(g.format)?;
    Ok(ok)
}
