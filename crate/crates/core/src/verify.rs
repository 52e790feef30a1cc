//! Named checks over an `(m, n)` grid.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::combinat::{
    column_strict_generating_function, fold, for_each_column_strict_odd,
    for_each_symmetric_plane_partition, partitions_in_box, symmetric_pp_generating_function,
    unfold,
};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, DEFAULT_MAX_ORDER};
use crate::identity::{eq4_sides, eq5_sides, eq6_sides, lemma_sides, vanishing_det, CheckResult};
use crate::schur::{
    box_det_ratio, descending_exponents, dn_checks, gordon_product, macmahon_product,
    odd_exponents, principal_specialization, schur_box_sum, schur_via_bialternant,
    schur_via_tableaux, weyl_denominator, BoxParams, SchurBackend, WeylForm,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Theorem,
    Weyl,
    Lemma,
    Eq4,
    Eq5,
    Eq6,
    Vanishing,
    Macmahon,
    Gordon,
    Bijection,
    SchurAgree,
    Dn,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::Theorem,
        CheckId::Weyl,
        CheckId::Lemma,
        CheckId::Eq4,
        CheckId::Eq5,
        CheckId::Eq6,
        CheckId::Vanishing,
        CheckId::Macmahon,
        CheckId::Gordon,
        CheckId::Bijection,
        CheckId::SchurAgree,
        CheckId::Dn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Theorem => "theorem",
            CheckId::Weyl => "weyl",
            CheckId::Lemma => "lemma",
            CheckId::Eq4 => "eq4",
            CheckId::Eq5 => "eq5",
            CheckId::Eq6 => "eq6",
            CheckId::Vanishing => "vanishing",
            CheckId::Macmahon => "macmahon",
            CheckId::Gordon => "gordon",
            CheckId::Bijection => "bijection",
            CheckId::SchurAgree => "schur-agree",
            CheckId::Dn => "dn",
        }
    }

    /// Whether the check depends on the box height `m`.
    pub fn uses_m(self) -> bool {
        !matches!(
            self,
            CheckId::Weyl | CheckId::Lemma | CheckId::Eq6 | CheckId::Vanishing | CheckId::Dn
        )
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<CheckId> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Parses a comma-separated list of check names; `all` expands to every check.
pub fn parse_checks(s: &str) -> Result<Vec<CheckId>> {
    let mut out = Vec::new();
    for name in s.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            out.extend(CheckId::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::UnknownCheck(s.to_string()));
    }
    out.dedup();
    Ok(out)
}

/// Parses `a..b` (inclusive) or a single integer.
pub fn parse_range<T>(s: &str) -> Result<RangeInclusive<T>>
where
    T: FromStr + PartialOrd + Copy,
{
    let bad = || Error::InvalidRange(format!("`{s}` is not `a..b` or an integer"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            )
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(Error::InvalidRange(format!("`{s}` is empty")));
    }
    Ok(lo..=hi)
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub checks: Vec<CheckId>,
    pub m_range: RangeInclusive<u32>,
    pub n_range: RangeInclusive<usize>,
    pub parallel: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            checks: CheckId::ALL.to_vec(),
            m_range: 1..=3,
            n_range: 1..=3,
            parallel: 1,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.checks.is_empty() {
            return Err(Error::UnknownCheck(String::new()));
        }
        if self.m_range.is_empty() || self.n_range.is_empty() {
            return Err(Error::InvalidRange("ranges must be non-empty".into()));
        }
        if *self.n_range.start() == 0 {
            return Err(Error::InvalidRange("n must be at least 1".into()));
        }
        if *self.n_range.end() > DEFAULT_MAX_ORDER {
            return Err(Error::InvalidRange(format!(
                "n above the determinant bound {DEFAULT_MAX_ORDER}"
            )));
        }
        Ok(())
    }

    /// Every `(check, m, n)` point, in output order.
    pub fn jobs(&self) -> Vec<(CheckId, Option<u32>, usize)> {
        let mut jobs = Vec::new();
        for &check in &self.checks {
            for n in self.n_range.clone() {
                if check.uses_m() {
                    jobs.extend(self.m_range.clone().map(|m| (check, Some(m), n)));
                } else {
                    jobs.push((check, None, n));
                }
            }
        }
        jobs
    }
}

/// Runs every job of `config` on a pool of `config.parallel` workers.
/// Results come back in [`RunConfig::jobs`] order regardless of scheduling.
pub fn run_verification(config: &RunConfig) -> Result<Vec<CheckResult>> {
    config.validate()?;
    let jobs = config.jobs();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallel.max(1))
        .build()
        .expect("thread pool");
    Ok(pool.install(|| {
        jobs.par_iter()
            .map(|&(c, m, n)| run_check(c, m, n))
            .collect()
    }))
}

/// Runs one check. Computation errors (e.g. a failed exact division) become a
/// failing result rather than an error.
pub fn run_check(check: CheckId, m: Option<u32>, n: usize) -> CheckResult {
    let start = Instant::now();
    let outcome = compute(check, m.unwrap_or(0), n);
    let elapsed = start.elapsed();
    match outcome {
        Ok((lhs, rhs, failures)) => {
            let mut r = CheckResult::from_sides(check.name(), m, n, lhs, rhs, elapsed);
            for f in failures {
                r.fail_with(f);
            }
            r
        }
        Err(e) => {
            let mut r = CheckResult::from_sides(
                check.name(),
                m,
                n,
                LaurentPoly::zero(),
                LaurentPoly::zero(),
                elapsed,
            );
            r.fail_with(e.to_string());
            r
        }
    }
}

type Sides = (LaurentPoly, LaurentPoly, Vec<String>);

fn compute(check: CheckId, m: u32, n: usize) -> Result<Sides> {
    let p = BoxParams::new(m, n);
    let plain = |(l, r): (LaurentPoly, LaurentPoly)| (l, r, Vec::new());
    Ok(match check {
        CheckId::Theorem => plain((schur_box_sum(p, SchurBackend::Tableaux)?, box_det_ratio(p)?)),
        CheckId::Weyl => plain((
            weyl_denominator(n, WeylForm::Determinant)?,
            weyl_denominator(n, WeylForm::Product)?,
        )),
        CheckId::Lemma => plain(lemma_sides(n)),
        CheckId::Eq4 => plain(eq4_sides(p)?),
        CheckId::Eq5 => plain(eq5_sides(p)?),
        CheckId::Eq6 => plain(eq6_sides(n)?),
        CheckId::Vanishing => plain((vanishing_det(n)?, LaurentPoly::zero())),
        CheckId::Macmahon => {
            let brute = symmetric_pp_generating_function(n, m);
            let product = macmahon_product(p)?;
            let specialized = principal_specialization(
                &schur_box_sum(p, SchurBackend::Tableaux)?,
                &odd_exponents(n),
            );
            let mut failures = Vec::new();
            if specialized != brute {
                failures.push(format!("specialized Schur sum {specialized} differs"));
            }
            (brute, product, failures)
        }
        CheckId::Gordon => plain((
            principal_specialization(
                &schur_box_sum(p, SchurBackend::Tableaux)?,
                &descending_exponents(n),
            ),
            gordon_product(p)?,
        )),
        CheckId::Bijection => bijection(n, m),
        CheckId::SchurAgree => {
            let mut lhs = LaurentPoly::zero();
            let mut rhs = LaurentPoly::zero();
            let mut failures = Vec::new();
            for lambda in partitions_in_box(m, n) {
                let a = schur_via_tableaux(&lambda, n);
                let b = schur_via_bialternant(&lambda, n)?;
                if a != b {
                    failures.push(format!("backends differ at {lambda}"));
                }
                lhs += &a;
                rhs += &b;
            }
            (lhs, rhs, failures)
        }
        CheckId::Dn => {
            let report = dn_checks(n)?;
            let failures = report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.label.clone())
                .collect();
            (report.leading, report.expected_leading, failures)
        }
    })
}

/// Generating functions of both sides of the fold bijection, plus a failure
/// for every object whose round trip or weight does not survive.
fn bijection(n: usize, m: u32) -> Sides {
    let mut failures = Vec::new();
    for_each_symmetric_plane_partition(n, m, |sp| match fold(sp, m) {
        Ok(cs) => {
            if cs.weight() != sp.weight() {
                failures.push(format!("fold changes weight of {:?}", sp.heights));
            }
            if unfold(&cs).as_ref() != Ok(sp) {
                failures.push(format!("unfold(fold) differs at {:?}", sp.heights));
            }
        }
        Err(e) => failures.push(format!("fold {:?}: {e}", sp.heights)),
    });
    for_each_column_strict_odd(n, m as usize, |cs| match unfold(cs) {
        Ok(sp) => {
            if !sp.is_symmetric() || !sp.is_bounded(m) {
                failures.push(format!("unfold leaves the class at {:?}", cs.heights));
            } else if fold(&sp, m).as_ref() != Ok(cs) {
                failures.push(format!("fold(unfold) differs at {:?}", cs.heights));
            }
        }
        Err(e) => failures.push(format!("unfold {:?}: {e}", cs.heights)),
    });
    (
        symmetric_pp_generating_function(n, m),
        column_strict_generating_function(n, m as usize),
        failures,
    )
}
