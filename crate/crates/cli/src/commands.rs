use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Value};

use likeiper::cluster::{
    bell_phi, cluster_weight, lambda_by_partitions, lambda_sequence, li_records, partition_count,
    partitions, phi_from_lambda, phi_sequence, weight_sum_check, LiRecord,
};
use likeiper::constants::{
    c_exact, c_from_binary, c_from_lambda, c_from_xi_series, trend_tiny_split, ConstantReport,
};
use likeiper::mpseries::binomial;
use likeiper::xifactory::{cache, xi_taylor, xi_taylor_with, XiTaylor};
use likeiper::{BigReal, Result};

use crate::config::RunConfig;
use crate::output::{emit_report, emit_rows, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Exact,
    Lambda,
    Binary,
    Split,
}

fn num(cfg: &RunConfig, v: &BigReal) -> String {
    v.to_sig_string(cfg.sig_digits())
}

fn load_xi(cfg: &RunConfig, order: usize, digits: u32) -> Result<XiTaylor> {
    match &cfg.cache_path {
        Some(path) => {
            let constants = cache::load_or_compute(path, order, digits)?;
            xi_taylor_with(&constants, order, digits)
        }
        None => xi_taylor(order, digits),
    }
}

/// The same records at `(digits + 10, order + 10)`, for the trust column.
fn records_pair(cfg: &RunConfig) -> Result<(XiTaylor, Vec<LiRecord>, XiTaylor, Vec<LiRecord>)> {
    let xi = load_xi(cfg, cfg.order, cfg.digits)?;
    let records = li_records(&xi, cfg.max_n)?;
    let fine = load_xi(cfg, cfg.order + 10, cfg.digits + 10)?;
    let fine_records = li_records(&fine, cfg.max_n)?;
    Ok((xi, records, fine, fine_records))
}

pub fn cmd_table(cfg: &RunConfig, curves: bool, out: &mut dyn Write) -> Result<()> {
    cfg.validate_series()?;
    let (_, records, _, fine) = records_pair(cfg)?;
    let mut columns = vec![
        "n", "phi", "lambda", "lower", "upper", "rwb_lower", "residual", "delta", "epsilon", "trust",
    ];
    if curves {
        columns.extend(["n_lambda1", "linear_curve", "xlogx_curve"]);
    }
    let mut table = Table::new(columns);
    let lambda1 = records[0].lambda.clone();
    let d = cfg.digits;
    for (r, f) in records.iter().zip(&fine) {
        let mut row = vec![
            r.n.to_string(),
            num(cfg, &r.phi),
            num(cfg, &r.lambda),
            num(cfg, &r.lower),
            num(cfg, &r.upper),
            num(cfg, &r.rwb_lower),
            num(cfg, &r.residual),
            num(cfg, &r.delta),
            num(cfg, &r.epsilon),
            r.lambda.agreeing_digits(&f.lambda).to_string(),
        ];
        if curves {
            // Both comparison curves pass through lambda_1 at n = 1.
            let x = BigReal::from_i64(r.n as i64, d);
            let linear = x.mul_i64(3).div_i64(10) + &lambda1 - BigReal::from_ratio(3, 10, d);
            let xlogx = (&x * &x.ln()?).div_i64(10) + &lambda1;
            row.extend([num(cfg, &lambda1.mul_i64(r.n as i64)), num(cfg, &linear), num(cfg, &xlogx)]);
        }
        table.push(row);
    }
    emit_rows(out, cfg, &table)?;
    Ok(())
}

pub fn cmd_xi(cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    cfg.validate()?;
    let xi = load_xi(cfg, cfg.order, cfg.digits)?;
    let mut table = Table::new(["n", "a_n"]);
    for (n, a) in xi.coeffs.iter().enumerate() {
        table.push(vec![n.to_string(), num(cfg, a)]);
    }
    emit_rows(out, cfg, &table)?;
    Ok(())
}

pub fn cmd_partitions(cfg: &RunConfig, n: u32, out: &mut dyn Write) -> Result<()> {
    let mut table = Table::new(["partition", "k", "weight", "signed_weight"]);
    for p in partitions(n)? {
        let w = cluster_weight(&p)?;
        let signed = if p.k % 2 == 0 { -w.clone() } else { w.clone() };
        table.push(vec![p.to_string(), p.k.to_string(), w.to_string(), signed.to_string()]);
    }
    emit_rows(out, cfg, &table)?;
    Ok(())
}

fn report_rows(cfg: &RunConfig, r: &ConstantReport, exact: Option<&BigReal>) -> (Table, Value) {
    let mut table = Table::new(["field", "value"]);
    let mut obj = serde_json::Map::new();
    let mut put = |k: &str, v: String| {
        table.push(vec![k.to_string(), v.clone()]);
        obj.insert(k.to_string(), Value::String(v));
    };
    put("route", r.route.to_string());
    put("value", num(cfg, &r.value));
    put("terms_used", r.terms_used.to_string());
    put("est_error", num(cfg, &r.est_error));
    if let Some(c) = exact {
        put("gap_to_exact", num(cfg, &(&r.value - c)));
    }
    (table, Value::Object(obj))
}

pub fn cmd_constant(
    cfg: &RunConfig,
    route: RouteArg,
    terms: Option<u64>,
    out: &mut dyn Write,
) -> Result<()> {
    cfg.validate()?;
    let exact = c_exact(cfg.digits)?;
    let (table, report) = match route {
        RouteArg::Exact => report_rows(cfg, &exact, None),
        RouteArg::Lambda => {
            let k = terms.unwrap_or(15) as usize;
            let order = k.max(1);
            let xi = load_xi(cfg, order, cfg.digits)?;
            let lambdas = lambda_sequence(&phi_sequence(&xi, order)?, order)?;
            report_rows(cfg, &c_from_lambda(&lambdas, k)?, Some(&exact.value))
        }
        RouteArg::Binary => {
            let cutoff = terms.unwrap_or(32);
            report_rows(cfg, &c_from_binary(cutoff, cfg.digits)?, Some(&exact.value))
        }
        RouteArg::Split => {
            let split = trend_tiny_split(cfg.digits)?;
            let (mut table, mut report) = report_rows(cfg, &split.report(), Some(&exact.value));
            let arch = num(cfg, &split.archimedean);
            let zeta = num(cfg, &split.zeta);
            table.push(vec!["archimedean_part".into(), arch.clone()]);
            table.push(vec!["zeta_part".into(), zeta.clone()]);
            report["archimedean_part"] = Value::String(arch);
            report["zeta_part"] = Value::String(zeta);
            (table, report)
        }
    };
    emit_report(out, cfg, &table, report)?;
    Ok(())
}

struct Check {
    name: String,
    passed: bool,
    measured: String,
    limit: String,
}

struct Checks<'a> {
    cfg: &'a RunConfig,
    list: Vec<Check>,
}

impl Checks<'_> {
    /// Passes when `measured < limit`.
    fn below(&mut self, name: &str, measured: &BigReal, limit: &BigReal) {
        self.list.push(Check {
            name: name.into(),
            passed: measured < limit,
            measured: num(self.cfg, measured),
            limit: format!("< {}", num(self.cfg, limit)),
        });
    }

    fn flag(&mut self, name: &str, passed: bool, measured: String, limit: &str) {
        self.list.push(Check { name: name.into(), passed, measured, limit: limit.into() });
    }
}

fn max_abs(values: impl IntoIterator<Item = BigReal>, digits: u32) -> BigReal {
    values.into_iter().map(|v| v.abs()).fold(BigReal::zero(digits), |a, b| if b > a { b } else { a })
}

/// Runs every invariant; returns whether all passed.
pub fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    cfg.validate_series()?;
    if cfg.order < 2 {
        return Err(likeiper::Error::Usage("verify needs --order >= 2".into()));
    }
    let d = cfg.digits;
    let tol = |places: u32| BigReal::pow10(-((d - places) as i32), d);
    let order = cfg.order;
    let mut checks = Checks { cfg, list: Vec::new() };

    let xi = load_xi(cfg, order, d)?;
    let fine = load_xi(cfg, order + 10, d + 10)?;
    let records = li_records(&xi, order)?;
    let phis = phi_sequence(&xi, order)?;
    let lambdas = lambda_sequence(&phis, order)?;

    let residual = max_abs(records.iter().map(|r| r.residual.clone()), d);
    checks.below(&format!("equilibrium residuals, 1 <= n <= {order}"), &residual, &tol(10));

    let positive = (1..=order).all(|n| xi.coeff(n).is_positive());
    checks.flag("xi coefficients positive", positive, format!("n <= {order}"), "a_n > 0");

    let mut worst = BigReal::zero(d);
    let centre = BigReal::from_ratio(-1, 2, d);
    let mut trust = BigReal::zero(d);
    for tenths in [1, 3, 5] {
        let delta = BigReal::from_ratio(tenths, 10, d);
        let (left, right) = (&centre - &delta, &centre + &delta);
        let gap = (xi.eval(&right) - xi.eval(&left)).abs();
        if gap > worst {
            worst = gap;
        }
        trust += (xi.eval(&left) - fine.eval(&left.with_digits(d + 10))).abs()
            + (xi.eval(&right) - fine.eval(&right.with_digits(d + 10))).abs();
    }
    checks.below("xi symmetry about s = 1/2", &worst, &(trust.mul_i64(10) + tol(5)));

    let sandwich_top = order.min(15);
    let two_exact = (&records[1].lambda - &records[1].lower).abs();
    checks.below("two-cluster truncation exact at n = 2", &two_exact, &tol(10));
    let sandwich = records[2..sandwich_top]
        .iter()
        .filter(|r| !(r.lower < r.lambda && r.lambda < r.upper))
        .map(|r| r.n.to_string())
        .collect::<Vec<_>>();
    checks.flag(
        &format!("sandwich lower < lambda < upper, 3 <= n <= {sandwich_top}"),
        sandwich.is_empty(),
        if sandwich.is_empty() { "holds".into() } else { format!("fails at {}", sandwich.join(" ")) },
        "strict",
    );
    let background = records[..sandwich_top].iter().all(|r| r.rwb_lower <= r.lambda);
    checks.flag(
        &format!("Koebe background below lambda, n <= {sandwich_top}"),
        background,
        String::new(),
        "rwb <= lambda",
    );

    let l1 = &records[0].lambda;
    let above = records[1..].iter().all(|r| r.phi > l1.mul_i64(r.n as i64));
    checks.flag(&format!("phi_n > n lambda_1, 2 <= n <= {order}"), above, String::new(), "strict");
    let increasing = records[1..].windows(2).all(|w| w[0].epsilon < w[1].epsilon);
    checks.flag(&format!("epsilon_n increasing, 2 <= n <= {order}"), increasing, String::new(), "strict");

    let mut weights_ok = true;
    for n in 1..=12u32 {
        for k in 1..=n {
            weights_ok &= weight_sum_check(n, k)? == binomial(n.into(), k.into())?;
        }
    }
    checks.flag("cluster weight sums equal C(n, k), k <= n <= 12", weights_ok, String::new(), "exact");
    let counts_ok = partition_count(5) == 7
        && partition_count(6) == 11
        && (1..=25).all(|n| partitions(n).map(|p| partition_count(n) == p.len()).unwrap_or(false));
    checks.flag("partition enumeration matches p(n), n <= 25", counts_ok, String::new(), "exact");

    let dual_top = order.min(20);
    let dual = (1..=dual_top)
        .map(|n| Ok(&lambdas[n] - &lambda_by_partitions(&phis, n)?))
        .collect::<Result<Vec<_>>>()?;
    checks.below(&format!("lambda by series log vs partitions, n <= {dual_top}"), &max_abs(dual, d), &tol(10));

    let back = phi_from_lambda(&lambdas[..=dual_top], dual_top)?;
    let round = max_abs((1..=dual_top).map(|n| &back[n] - &phis[n]), d);
    checks.below(&format!("lambda -> phi round trip, n <= {dual_top}"), &round, &tol(20));

    let bell_top = order.min(12);
    let bell = (1..=bell_top)
        .map(|n| Ok(&bell_phi(n, &lambdas)? - &phis[n]))
        .collect::<Result<Vec<_>>>()?;
    checks.below(&format!("Bell determinant phi, n <= {bell_top}"), &max_abs(bell, d), &tol(10));

    let exact = c_exact(d)?.value;
    let series_gap = (&exact - &c_from_xi_series(&xi)).abs();
    let series_trust = (c_from_xi_series(&xi) - c_from_xi_series(&fine).with_digits(d)).abs();
    checks.below("c exact vs xi'(2)/xi(2) series", &series_gap, &(series_trust.mul_i64(10) + tol(10)));
    let by_lambda = c_from_lambda(&lambdas, order)?;
    checks.below(
        &format!("c lambda route within its error bound, K = {order}"),
        &(&by_lambda.value - &exact).abs(),
        &by_lambda.est_error,
    );
    let by_binary = c_from_binary(100_000, d)?;
    let binary_gap = (&by_binary.value - &exact).abs();
    checks.below("c binary route within its error bound, N = 100000", &binary_gap, &by_binary.est_error);
    checks.below("c binary route, N = 100000", &binary_gap, &BigReal::pow10(-9, d));
    let split = trend_tiny_split(d)?;
    checks.below("factor split sums to c", &(split.sum() - &exact).abs(), &tol(5));
    let upper_gap = BigReal::pi(d) * l1 - &exact;
    checks.flag("c < pi lambda_1", upper_gap.is_positive(), num(cfg, &upper_gap), "> 0");

    let passed = checks.list.iter().all(|c| c.passed);
    let mut table = Table::new(["check", "status", "measured", "limit"]);
    let mut items = Vec::new();
    for c in &checks.list {
        let status = if c.passed { "pass" } else { "FAIL" };
        table.push(vec![c.name.clone(), status.into(), c.measured.clone(), c.limit.clone()]);
        items.push(json!({
            "check": c.name, "status": status, "measured": c.measured, "limit": c.limit,
        }));
    }
    emit_report(out, cfg, &table, json!({ "passed": passed, "checks": items }))?;
    for c in checks.list.iter().filter(|c| !c.passed) {
        eprintln!("verification failed: {}", c.name);
    }
    Ok(passed)
}
