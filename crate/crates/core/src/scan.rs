//! Range scans: construct and certify every `n` in an interval, optionally
//! in parallel. Output order is always ascending `n`, whatever the thread
//! count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generator::{alpha, GeneratorCertificate};
use crate::profile::{profile, Case};
use crate::verify::certify;

/// Builds and verifies the generator for one `n`.
pub fn certify_n(n: i64) -> Result<GeneratorCertificate> {
    let p = profile(n)?;
    Ok(certify(alpha(&p)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    pub n: i64,
    pub outcome: Result<GeneratorCertificate>,
}

impl ScanEntry {
    pub fn passed(&self) -> bool {
        self.outcome.as_ref().is_ok_and(GeneratorCertificate::all_passed)
    }
}

/// Certifies every `n` in `[from, to]` on `jobs` threads (`jobs <= 1` runs
/// serially on the calling thread).
pub fn scan_entries(from: i64, to: i64, jobs: usize) -> Result<Vec<ScanEntry>> {
    if from > to {
        return Err(Error::Inconsistent {
            n: from,
            detail: format!("empty range {from}..{to}"),
        });
    }
    crate::arith::check_parameter(from)?;
    crate::arith::check_parameter(to)?;
    let entry = |n: i64| ScanEntry {
        n,
        outcome: certify_n(n),
    };
    if jobs <= 1 {
        return Ok((from..=to).map(entry).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    // indexed parallel iterators collect in input order
    Ok(pool.install(|| (from..=to).into_par_iter().map(entry).collect()))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub from: i64,
    pub to: i64,
    pub total: usize,
    pub passed: usize,
    pub counts: BTreeMap<Case, usize>,
    /// `(a₀, a₁)` pairs seen per case, with the `n` values producing them.
    pub families: BTreeMap<Case, BTreeMap<(i128, i128), Vec<i64>>>,
    /// `n` values whose construction failed or whose checks did not all pass.
    pub failures: Vec<i64>,
}

impl ScanSummary {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn summarize(from: i64, to: i64, entries: &[ScanEntry]) -> ScanSummary {
    let mut summary = ScanSummary {
        from,
        to,
        ..Default::default()
    };
    for entry in entries {
        summary.total += 1;
        *summary.counts.entry(Case::of(entry.n)).or_default() += 1;
        match &entry.outcome {
            Ok(cert) => {
                summary
                    .families
                    .entry(cert.profile.case)
                    .or_default()
                    .entry((cert.a0, cert.a1))
                    .or_default()
                    .push(entry.n);
                if cert.all_passed() {
                    summary.passed += 1;
                } else {
                    summary.failures.push(entry.n);
                }
            }
            Err(_) => summary.failures.push(entry.n),
        }
    }
    summary
}

/// Certifies the range and summarizes it.
pub fn scan(from: i64, to: i64, jobs: usize) -> Result<ScanSummary> {
    let entries = scan_entries(from, to, jobs)?;
    Ok(summarize(from, to, &entries))
}
