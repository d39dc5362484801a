//! Verification suites behind `evenzeta verify`.

use clap::ValueEnum;
use evenzeta::closed_form::{
    e_row_sum, e_sum_theorem1, e_sum_theorem3, verify_bernoulli_identity, verify_gessel_viennot,
};
use evenzeta::oracle::Oracle;
use evenzeta::series::{f_expand, verify_gfun, verify_pq_recurrence};
use evenzeta::symfunc::{
    verify_basis_images, verify_infprod, verify_newton, verify_nexp, verify_sfi, verify_zt_nnk,
    Partition,
};
use evenzeta::{Check, MzvArgs, PiValue, Report, Result};

use crate::EvalOpts;

pub const EXACT_MAX_N: u32 = 40;
pub const SYMFUNC_MAX_WEIGHT: u32 = 10;
pub const GFUN_MAX_K: u32 = 12;
pub const ORACLE_MAX_N: u32 = 5;
pub const EULER_MAX_N: u32 = 4;
pub const MONOMIAL_MAX_WEIGHT: u32 = 4;

pub const ORACLE_REL_TOL: f64 = 1e-5;
pub const ZETA22_REL_TOL: f64 = 1e-6;
pub const REGROUP_ABS_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    CrossRoute,
    BernoulliIdentity,
    GesselViennot,
    Gfun,
    PqRecurrence,
    Infprod,
    Sfi,
    Nexp,
    Newton,
    ZtNnk,
    Oracle,
    EulerDouble,
    ZtMonomial,
    All,
}

const ALL_SUITES: [Suite; 13] = [
    Suite::CrossRoute,
    Suite::BernoulliIdentity,
    Suite::GesselViennot,
    Suite::Gfun,
    Suite::PqRecurrence,
    Suite::Infprod,
    Suite::Sfi,
    Suite::Nexp,
    Suite::Newton,
    Suite::ZtNnk,
    Suite::Oracle,
    Suite::EulerDouble,
    Suite::ZtMonomial,
];

/// Run one suite (or all of them, in a fixed order) at the given bound.
pub fn run_suite(suite: Suite, max: Option<u32>, opts: &EvalOpts) -> Result<Vec<Report>> {
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in ALL_SUITES {
            out.extend(run_suite(s, None, opts)?);
        }
        return Ok(out);
    }
    let cap = opts.max_weight;
    let weight = |default: u32| max.unwrap_or(default) as usize;
    let report = match suite {
        Suite::CrossRoute => cross_route(max.unwrap_or(EXACT_MAX_N))?,
        Suite::BernoulliIdentity => bernoulli_identity(max.unwrap_or(EXACT_MAX_N))?,
        Suite::GesselViennot => gessel_viennot(max.unwrap_or(EXACT_MAX_N))?,
        Suite::Gfun => gfun(max.unwrap_or(GFUN_MAX_K))?,
        Suite::PqRecurrence => verify_pq_recurrence(max.unwrap_or(GFUN_MAX_K)),
        Suite::Infprod => verify_infprod(weight(SYMFUNC_MAX_WEIGHT), cap)?,
        Suite::Sfi => verify_sfi(weight(SYMFUNC_MAX_WEIGHT), cap)?,
        Suite::Nexp => verify_nexp(weight(SYMFUNC_MAX_WEIGHT), cap)?,
        Suite::Newton => verify_newton(weight(SYMFUNC_MAX_WEIGHT), cap)?,
        Suite::ZtNnk => {
            let w = weight(SYMFUNC_MAX_WEIGHT);
            let mut r = verify_basis_images(w, cap)?;
            r.extend(verify_zt_nnk(w, cap)?);
            r.name = "zt-nnk".into();
            r
        }
        Suite::Oracle => oracle(max.unwrap_or(ORACLE_MAX_N), opts)?,
        Suite::EulerDouble => {
            let mut oracle = new_oracle(opts);
            let mut r = Report::new("euler-double");
            for n in 2..=max.unwrap_or(EULER_MAX_N) {
                r.extend(oracle.euler_double_checks(n)?);
            }
            r
        }
        Suite::ZtMonomial => zt_monomial(max.unwrap_or(MONOMIAL_MAX_WEIGHT), opts),
        Suite::All => unreachable!("handled above"),
    };
    Ok(vec![report])
}

fn new_oracle(opts: &EvalOpts) -> Oracle {
    Oracle::new(opts.limit.max(1), !opts.no_extrapolate)
}

fn cross_route(max_n: u32) -> Result<Report> {
    let mut report = Report::new("cross-route");
    let f = f_expand(max_n as usize, max_n as usize)?;
    for n in 1..=max_n {
        for k in 1..=n {
            let t1 = e_sum_theorem1(n, k)?;
            let t3 = e_sum_theorem3(n, k)?;
            let series = PiValue::monomial(f.coeff(n as usize, k as usize), n);
            let holds = t1.value() == t3.value() && t1.value() == &series;
            report.push(Check::new(
                format!("E({},{k}) theorem1/theorem3/series", 2 * n),
                holds,
                t1.value(),
                format!("{} / {series}", t3.value()),
            ));
        }
        let total: PiValue = (1..=n)
            .map(|k| e_sum_theorem1(n, k).map(|e| e.value().clone()))
            .sum::<Result<_>>()?;
        let closed = e_row_sum(n)?;
        report.push(Check::equal(format!("row-sum({})", 2 * n), &total, &closed));
    }
    Ok(report)
}

fn bernoulli_identity(max_n: u32) -> Result<Report> {
    let mut report = Report::new("bernoulli-identity");
    for n in 1..=max_n {
        for k in 1..=n {
            report.push(verify_bernoulli_identity(n, k)?);
        }
    }
    Ok(report)
}

fn gessel_viennot(max: u32) -> Result<Report> {
    let mut report = Report::new("gessel-viennot");
    for n in 1..max {
        for k in n + 1..=max {
            report.push(verify_gessel_viennot(n, k)?);
        }
    }
    Ok(report)
}

fn gfun(max_k: u32) -> Result<Report> {
    let mut report = Report::new("gfun");
    for k in 0..=max_k {
        report.push(verify_gfun(k, max_k as usize)?);
    }
    Ok(report)
}

fn relative_check(instance: String, got: f64, exact: f64, tol: f64, hint: f64) -> Check {
    let rel = ((got - exact) / exact).abs();
    Check::new(
        format!("{instance} rel_err={rel:.2e} tol={tol:.0e} error_hint={hint:.2e}"),
        rel <= tol,
        format!("{got:.15e}"),
        format!("{exact:.15e}"),
    )
}

fn oracle(max_n: u32, opts: &EvalOpts) -> Result<Report> {
    let mut oracle = new_oracle(opts);
    let mut report = Report::new("oracle");
    for n in 1..=max_n {
        for k in 1..=n {
            let exact = e_sum_theorem1(n, k)?.value().to_f64();
            let est = oracle.e_sum(n, k);
            report.push(relative_check(
                format!("E({},{k}) L={}", 2 * n, est.limit),
                est.value,
                exact,
                ORACLE_REL_TOL,
                est.error_hint,
            ));
        }
    }
    let est = oracle.mzv(&MzvArgs::new(vec![2, 2])?);
    let exact = evenzeta::zt_of_e(2).to_f64();
    report.push(relative_check(
        "zeta(2,2)".into(),
        est.value,
        exact,
        ZETA22_REL_TOL,
        est.error_hint,
    ));
    Ok(report)
}

fn zt_monomial(max_weight: u32, opts: &EvalOpts) -> Report {
    let mut oracle = new_oracle(opts);
    let mut report = Report::new("zt-monomial");
    for n in 1..=max_weight as usize {
        for k in 1..=n {
            let regrouped: f64 = Partition::with_length(n, k)
                .iter()
                .map(|l| oracle.zt_monomial(l).expect("nonempty partition").value)
                .sum();
            let direct = oracle.e_sum(n as u32, k as u32).value;
            let diff = (regrouped - direct).abs();
            report.push(Check::new(
                format!("sum of m_lambda images n={n} k={k} abs_diff={diff:.2e}"),
                diff <= REGROUP_ABS_TOL,
                format!("{regrouped:.15e}"),
                format!("{direct:.15e}"),
            ));
        }
    }
    report
}
