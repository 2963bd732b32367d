//! Exhaustive small-`n` cross-checks between the combinatorial rules and
//! direct computations from rank matrices.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::meanders::{codim1_criterion, intersect_among, intersection_matrix, reducibility_sufficient};
use crate::order::{closure_capped, closure_by_filter, cover_c, is_rank2_matrix, rank_matrix, RankMatrix};
use crate::patterns::{self, dim_via_q, enumerate_involutions_capped, Involution, DEFAULT_CAP};
use crate::tableaux::{enumerate_tableaux, sigma_of_tableau};

/// Largest `n` for which the space of candidate rank matrices is scanned.
pub const RANK2_SCAN_MAX: usize = 5;

#[derive(Clone, Copy)]
pub struct VerifyOptions {
    pub n_min: usize,
    pub n_max: usize,
    pub cap: usize,
    /// Crossing count used by the pattern-side dimension formula.
    pub crossings: fn(&Involution) -> usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_min: 1,
            n_max: 7,
            cap: DEFAULT_CAP,
            crossings: patterns::crossings,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        CheckResult {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn merge(&mut self, other: CheckResult) {
        self.cases += other.cases;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n_min: usize,
    pub n_max: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "ok  " } else { "FAIL" };
            write!(f, "{status} {:<24} {:>8} cases", c.name, c.cases)?;
            if c.failures > 0 {
                write!(f, ", {} failures", c.failures)?;
            }
            writeln!(f)?;
            if let Some(first) = &c.first_failure {
                writeln!(f, "     first failure: {first}")?;
            }
        }
        let verdict = if self.passed() { "all checks passed" } else { "some checks failed" };
        writeln!(f, "n = {}..={}: {verdict}", self.n_min, self.n_max)
    }
}

pub fn run(options: &VerifyOptions) -> Result<VerifyReport> {
    let mut checks = vec![
        CheckResult::new("dim-equivalence"),
        CheckResult::new("rank2-exactness"),
        CheckResult::new("closure-bfs-vs-filter"),
        CheckResult::new("cover-is-codim-1"),
        CheckResult::new("codim1-meander"),
        CheckResult::new("segment-reducibility"),
    ];
    for n in options.n_min.max(1)..=options.n_max {
        let all = enumerate_involutions_capped(n, None, options.cap)?;
        checks[0].merge(check_dims(&all, options.crossings));
        if n <= RANK2_SCAN_MAX {
            checks[1].merge(check_rank2_exactness(n, &all));
        }
        checks[2].merge(check_closures(&all, options.cap)?);
        checks[3].merge(check_covers(&all));
        let (codim1, segments) = check_tableau_pairs(n, options.cap)?;
        checks[4].merge(codim1);
        checks[5].merge(segments);
    }
    Ok(VerifyReport {
        n_min: options.n_min,
        n_max: options.n_max,
        checks,
    })
}

fn check_dims(all: &[Involution], crossings: fn(&Involution) -> usize) -> CheckResult {
    let mut check = CheckResult::new("dim-equivalence");
    for sigma in all {
        let stats = patterns::pattern_stats(sigma);
        let by_pattern =
            patterns::dim_from_counts(sigma.n(), stats.length, crossings(sigma), stats.fixed_under);
        let by_q = dim_via_q(sigma);
        check.record(by_pattern == by_q, || format!("{sigma}: {by_pattern} vs {by_q}"));
    }
    check
}

fn check_rank2_exactness(n: usize, all: &[Involution]) -> CheckResult {
    let mut check = CheckResult::new("rank2-exactness");
    let image: HashSet<RankMatrix> = all.iter().map(rank_matrix).collect();
    let cells: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let bound = (n / 2) as u32;
    let mut r = RankMatrix::zeros(n);
    let mut digits = vec![0u32; cells.len()];
    loop {
        for (&(i, j), &d) in cells.iter().zip(&digits) {
            r.set(i, j, d);
        }
        let accepted = is_rank2_matrix(&r);
        let expected = image.contains(&r);
        check.record(accepted == expected, || format!("{r:?} accepted={accepted}"));
        let Some(pos) = digits.iter().position(|&d| d < bound) else {
            break;
        };
        digits[pos] += 1;
        digits[..pos].iter_mut().for_each(|d| *d = 0);
    }
    check
}

fn check_closures(all: &[Involution], cap: usize) -> Result<CheckResult> {
    let outcomes: Vec<Result<(bool, String)>> = all
        .par_iter()
        .map(|sigma| {
            let bfs = closure_capped(sigma, cap)?;
            let filtered = closure_by_filter(sigma, cap)?;
            Ok((bfs == filtered, sigma.to_string()))
        })
        .collect();
    let mut check = CheckResult::new("closure-bfs-vs-filter");
    for outcome in outcomes {
        let (ok, name) = outcome?;
        check.record(ok, || name);
    }
    Ok(check)
}

fn check_covers(all: &[Involution]) -> CheckResult {
    let ranks: Vec<RankMatrix> = all.iter().map(rank_matrix).collect();
    let outcomes: Vec<(bool, String)> = (0..all.len())
        .into_par_iter()
        .map(|at| {
            let sigma = &all[at];
            let below: Vec<usize> = (0..all.len())
                .filter(|&o| o != at && ranks[o].le(&ranks[at]))
                .collect();
            let maximal: Vec<Involution> = below
                .iter()
                .filter(|&&o| !below.iter().any(|&p| p != o && ranks[o].le(&ranks[p])))
                .map(|&o| all[o].clone())
                .collect();
            let cover = cover_c(sigma).members();
            let d = patterns::dim(sigma);
            let ok = cover == maximal && cover.iter().all(|t| patterns::dim(t) + 1 == d);
            (ok, format!("{sigma}: cover {cover:?} vs maximal {maximal:?}"))
        })
        .collect();
    let mut check = CheckResult::new("cover-is-codim-1");
    for (ok, describe) in outcomes {
        check.record(ok, || describe);
    }
    check
}

fn check_tableau_pairs(n: usize, cap: usize) -> Result<(CheckResult, CheckResult)> {
    let mut codim1 = CheckResult::new("codim1-meander");
    let mut segments = CheckResult::new("segment-reducibility");
    for k in 0..=n / 2 {
        let tableaux = enumerate_tableaux(n, k)?;
        let stratum = enumerate_involutions_capped(n, Some(k), cap)?;
        let top_dim = k * (n - k);
        for s in &tableaux {
            for t in &tableaux {
                let (a, b) = (sigma_of_tableau(s), sigma_of_tableau(t));
                let report = intersect_among(&a, &b, &intersection_matrix(&a, &b)?, &stratum);
                let max_dim = report.components.iter().map(|c| c.dim).max();
                let is_codim1 = max_dim.is_some_and(|d| top_dim - d == 1);
                let predicted = codim1_criterion(s, t)?;
                let ok = predicted == is_codim1 && (!predicted || report.components.len() == 1);
                codim1.record(ok, || {
                    format!(
                        "S={:?} T={:?}: meander says {predicted}, components {}",
                        s.col2(),
                        t.col2(),
                        report.components.len()
                    )
                });
                if reducibility_sufficient(s, t)? {
                    segments.record(report.components.len() >= 2, || {
                        format!("S={:?} T={:?}: criterion holds but irreducible", s.col2(), t.col2())
                    });
                } else {
                    segments.cases += 1;
                }
            }
        }
    }
    Ok((codim1, segments))
}
