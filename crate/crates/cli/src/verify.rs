//! Verification sweeps behind `mhs verify`.

use anyhow::Result;
use mhs_core::congruence::{base_congruence_suite, sum_congruence_suite, CheckResult};
use mhs_core::expr::expr_equal;
use mhs_core::identities::known_identities;
use mhs_core::partitions::all_partitions;
use mhs_core::primes::primes_between;
use mhs_core::summation::{brute_force_partial_sums, sum_product};
use mhs_core::theorem::{
    cai_granville_check, corollary_report, staver_check, theorem_report, wolstenholme_check,
};
use mhs_core::Composition;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::Suite;

pub struct Params {
    pub pmin: u64,
    pub pmax: u64,
    pub amin: i64,
    pub amax: i64,
    pub nmax: u64,
}

/// One executed check. Modular checks carry the residues; exact checks only the inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct ReportEntry {
    pub suite: String,
    pub claim_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_residue: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_residue: Option<u64>,
    pub pass: bool,
}

impl ReportEntry {
    fn modular(suite: &str, r: CheckResult) -> Self {
        ReportEntry {
            suite: suite.to_string(),
            claim_id: r.claim_id,
            p: Some(r.p),
            n: None,
            modulus: Some(r.modulus),
            lhs_residue: Some(r.lhs_residue),
            rhs_residue: Some(r.rhs_residue),
            pass: r.pass,
        }
    }

    fn exact(suite: &str, claim_id: String, p: Option<u64>, n: Option<u64>, pass: bool) -> Self {
        ReportEntry {
            suite: suite.to_string(),
            claim_id,
            p,
            n,
            modulus: None,
            lhs_residue: None,
            rhs_residue: None,
            pass,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct Report {
    pub all_pass: bool,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<ReportEntry>,
}

const IDENTITY_N_MAX: u64 = 30;

fn identities() -> Result<Vec<ReportEntry>> {
    let mut out = Vec::new();
    for record in known_identities() {
        let derived = sum_product(&record.lhs)?;
        out.push(ReportEntry::exact(
            "identities",
            format!("golden:{}", record.name),
            None,
            None,
            expr_equal(&derived, &record.rhs),
        ));
    }
    let products: Vec<Vec<Composition>> = (1..=5)
        .flat_map(all_partitions)
        .map(|l| l.iter().map(|&d| Composition::ones(d as usize)).collect())
        .collect();
    let checks: Vec<Result<ReportEntry>> = products
        .par_iter()
        .map(|factors| {
            let closed = sum_product(factors)?;
            let pass = closed.eval_range(IDENTITY_N_MAX) == brute_force_partial_sums(factors, IDENTITY_N_MAX);
            let label = factors.iter().map(|f| format!("({})", f.to_csv())).collect::<String>();
            Ok(ReportEntry::exact(
                "identities",
                format!("oracle:{label}"),
                None,
                Some(IDENTITY_N_MAX),
                pass,
            ))
        })
        .collect();
    for c in checks {
        out.push(c?);
    }
    Ok(out)
}

fn per_prime<F>(primes: &[u64], f: F) -> Result<Vec<ReportEntry>>
where
    F: Fn(u64) -> Result<Vec<ReportEntry>> + Sync,
{
    let chunks: Vec<Result<Vec<ReportEntry>>> = primes.par_iter().map(|&p| f(p)).collect();
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    Ok(out)
}

pub fn run(suite: Suite, params: &Params, jobs: usize) -> Result<Report> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    pool.install(|| run_inner(suite, params))
}

fn run_inner(suite: Suite, params: &Params) -> Result<Report> {
    let primes = primes_between(params.pmin, params.pmax);
    let wants = |s: Suite| suite == Suite::All || suite == s;
    let mut checks = Vec::new();

    if wants(Suite::Identities) {
        checks.extend(identities()?);
    }
    if wants(Suite::Congruences) {
        checks.extend(per_prime(&primes, |p| {
            let mut out: Vec<ReportEntry> = base_congruence_suite(p)?
                .into_iter()
                .map(|r| ReportEntry::modular("congruences", r))
                .collect();
            out.extend(
                sum_congruence_suite(p)?
                    .into_iter()
                    .map(|r| ReportEntry::modular("congruences", r)),
            );
            Ok(out)
        })?);
    }
    if wants(Suite::Theorem) {
        checks.extend(per_prime(&primes, |p| {
            let mut out = Vec::new();
            for a in params.amin..=params.amax {
                out.extend(theorem_report(a, p)?.into_iter().map(|r| ReportEntry::modular("theorem", r)));
            }
            if p <= 31 {
                for a in params.amin.max(1)..=params.amax.min(3) {
                    out.push(ReportEntry::modular("theorem", cai_granville_check(a, p)?));
                }
            }
            Ok(out)
        })?);
    }
    if wants(Suite::Corollary) {
        checks.extend(per_prime(&primes, |p| {
            Ok(vec![ReportEntry::modular("corollary", corollary_report(p)?)])
        })?);
    }
    if wants(Suite::Staver) {
        let staver: Vec<ReportEntry> = (1..=params.nmax)
            .into_par_iter()
            .map(|n| ReportEntry::exact("staver", "staver".into(), None, Some(n), staver_check(n)))
            .collect();
        checks.extend(staver);
        for p in primes_between(params.pmin.max(5), params.pmax) {
            checks.push(ReportEntry::exact(
                "staver",
                "wolstenholme".into(),
                Some(p),
                None,
                wolstenholme_check(p)?,
            ));
        }
    }

    let failed = checks.iter().filter(|c| !c.pass).count();
    Ok(Report {
        all_pass: failed == 0,
        total: checks.len(),
        failed,
        checks,
    })
}
