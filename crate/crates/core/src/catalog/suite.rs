//! Seeded batch verification.
//!
//! Item `i` of a suite draws its instance from stream `i` of the suite seed,
//! so a run is fully determined by `(name, seed, n)` regardless of how many
//! threads evaluate it. `LATFANO_THREADS` caps the worker count; `0` runs
//! serially.

use rayon::prelude::*;
use serde::Serialize;

use crate::lattice::Int;
use crate::normality::{
    check_decomposition, check_fano_minkowski, check_idp, check_pair_identity,
    check_surface_multiplication, CheckReport,
};
use crate::toric::BpfOutcome;

use super::fixtures::{builtin, REFLEXIVE_FIXTURES};
use super::generate::{
    random_divisor, random_polygon, random_polytope, random_segment, random_smooth_fan, SeededRng,
};
use super::CatalogError;

pub const SUITE_NAMES: &[&str] = &[
    "idp-polygons",
    "fano-minkowski",
    "pair-identity-k2",
    "surface-mult",
    "surface-bpf",
    "decompose-width",
];

/// Items evaluated between two flushes of the output stream.
const CHUNK: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub seed: u64,
    pub items: Vec<CheckReport>,
    pub passed: usize,
    pub failed: usize,
    /// Items that raised an error instead of producing a verdict, with their
    /// index. They are counted as failed and carry a placeholder report.
    pub errors: Vec<ItemError>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ItemError {
    pub item: usize,
    pub message: String,
}

/// The last line of a JSON-lines suite stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub seed: u64,
    pub n: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: Vec<ItemError>,
}

impl SuiteResult {
    pub fn summary(&self) -> SuiteSummary {
        SuiteSummary {
            suite: self.suite.clone(),
            seed: self.seed,
            n: self.items.len(),
            passed: self.passed,
            failed: self.failed,
            errors: self.errors.clone(),
        }
    }
}

/// Worker cap from `LATFANO_THREADS`: `Some(0)` means serial, `None` means
/// the rayon default.
pub fn thread_limit() -> Option<usize> {
    std::env::var("LATFANO_THREADS").ok()?.trim().parse().ok()
}

fn check_name(suite: &str) -> &'static str {
    match suite {
        "idp-polygons" => "idp",
        "fano-minkowski" => "fano-minkowski",
        "pair-identity-k2" => "pair-identity",
        "surface-mult" => "surface-multiplication",
        "surface-bpf" => "surface-bpf",
        _ => "decompose-width",
    }
}

/// One suite instance.
pub fn run_item(suite: &str, seed: u64, item: usize) -> Result<CheckReport, CatalogError> {
    let mut rng = SeededRng::for_item(seed, item as u64);
    let npoints = |rng: &mut SeededRng, lo: Int, hi: Int| rng.range(lo, hi) as usize;
    match suite {
        "idp-polygons" => {
            let n = npoints(&mut rng, 3, 8);
            let p = random_polytope(&mut rng, 2, 4, n)?;
            Ok(check_idp(&p)?)
        }
        "fano-minkowski" => {
            let r = builtin(REFLEXIVE_FIXTURES[item % REFLEXIVE_FIXTURES.len()])?.polytope;
            let n = npoints(&mut rng, 4, 8);
            let q = random_polytope(&mut rng, 3, 3, n)?;
            Ok(check_fano_minkowski(&r, &q)?)
        }
        "pair-identity-k2" => {
            let n = npoints(&mut rng, 4, 6);
            let r = random_polytope(&mut rng, 3, 2, n)?;
            let n = npoints(&mut rng, 4, 6);
            let q = random_polytope(&mut rng, 3, 2, n)?;
            Ok(check_pair_identity(&r, &q, 2)?)
        }
        "surface-mult" => {
            let (a, b) = if item % 4 == 3 {
                (random_segment(&mut rng, 4), random_segment(&mut rng, 4))
            } else {
                let (na, nb) = (npoints(&mut rng, 1, 6), npoints(&mut rng, 1, 6));
                (
                    random_polygon(&mut rng, 4, na),
                    random_polygon(&mut rng, 4, nb),
                )
            };
            Ok(check_surface_multiplication(&a, &b)?)
        }
        "surface-bpf" => {
            let blowups = npoints(&mut rng, 0, 5);
            let fan = random_smooth_fan(&mut rng, blowups);
            let d = random_divisor(&mut rng, &fan, 3);
            let reduced = fan.remove_fixed_part(&d)?;
            match fan.verify_surface_bpf(&reduced)? {
                BpfOutcome::Checked(r) => Ok(r),
                BpfOutcome::Skipped(why) => Err(CatalogError::InvalidArgument(format!(
                    "instance skipped: {why:?}"
                ))),
            }
        }
        "decompose-width" => {
            let n = npoints(&mut rng, 4, 8);
            let q = random_polytope(&mut rng, 3, 3, n)?;
            Ok(check_decomposition(&q)?)
        }
        _ => Err(CatalogError::UnknownSuite(suite.to_string())),
    }
}

fn placeholder(suite: &str) -> CheckReport {
    CheckReport {
        check_name: check_name(suite).to_string(),
        holds: false,
        level: None,
        gap_points: Vec::new(),
        lhs_count: 0,
        rhs_count: 0,
        elapsed_ms: 0,
    }
}

fn evaluate(
    suite: &str,
    seed: u64,
    range: std::ops::Range<usize>,
    threads: Option<usize>,
) -> Vec<Result<CheckReport, String>> {
    let one = |i: usize| run_item(suite, seed, i).map_err(|e| e.to_string());
    match threads {
        Some(0) => range.map(one).collect(),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| range.into_par_iter().map(one).collect()),
            Err(_) => range.map(one).collect(),
        },
        None => range.into_par_iter().map(one).collect(),
    }
}

/// Runs `n` items, handing each report to `sink` in item order as soon as
/// its chunk is done.
pub fn run_suite_streaming(
    name: &str,
    seed: u64,
    n: usize,
    threads: Option<usize>,
    mut sink: impl FnMut(usize, &CheckReport),
) -> Result<SuiteResult, CatalogError> {
    if !SUITE_NAMES.contains(&name) {
        return Err(CatalogError::UnknownSuite(name.to_string()));
    }
    let mut result = SuiteResult {
        suite: name.to_string(),
        seed,
        items: Vec::with_capacity(n),
        passed: 0,
        failed: 0,
        errors: Vec::new(),
    };
    let mut start = 0;
    while start < n {
        let end = (start + CHUNK).min(n);
        for (offset, outcome) in evaluate(name, seed, start..end, threads)
            .into_iter()
            .enumerate()
        {
            let item = start + offset;
            let report = outcome.unwrap_or_else(|message| {
                result.errors.push(ItemError { item, message });
                placeholder(name)
            });
            if report.holds {
                result.passed += 1;
            } else {
                result.failed += 1;
            }
            sink(item, &report);
            result.items.push(report);
        }
        start = end;
    }
    Ok(result)
}

pub fn run_suite(name: &str, seed: u64, n: usize) -> Result<SuiteResult, CatalogError> {
    run_suite_streaming(name, seed, n, thread_limit(), |_, _| {})
}
