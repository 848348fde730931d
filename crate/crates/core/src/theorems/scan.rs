//! Corpus scans: run a set of checks over a stream of graphs, emit one
//! report per check, and aggregate a summary.
//!
//! Graphs may be evaluated in parallel; reports are emitted in corpus
//! order and summaries aggregate order-independently, so output is
//! byte-identical for any worker count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::CorpusItem;

use super::{check_in_context, CheckOptions, CheckReport, FamilyExclusionCache, GraphContext, TheoremId};

#[derive(Debug, Clone)]
pub struct ScanOptions {
    /// Worker threads for graph evaluation.
    pub jobs: usize,
    pub check: CheckOptions,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { jobs: 1, check: CheckOptions::default() }
    }
}

/// Per-check aggregate counts plus the witness lists, sorted by the
/// graphs' canonical forms.
#[derive(Debug, Clone, Default, Serialize)]
pub struct CheckStats {
    pub applicable: usize,
    pub holds: usize,
    pub tight: usize,
    pub violations: usize,
    /// graph6 strings of graphs with at least one violated check.
    pub violating: Vec<String>,
    /// graph6 strings of graphs with at least one tight check.
    pub tight_graphs: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusErrorRecord {
    pub line: usize,
    pub error: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanSummary {
    /// Graphs successfully parsed and checked.
    pub graphs: usize,
    pub corpus_errors: Vec<CorpusErrorRecord>,
    pub checks: BTreeMap<TheoremId, CheckStats>,
}

impl ScanSummary {
    /// True when some non-conjecture check failed: an implementation bug.
    pub fn has_theorem_violation(&self) -> bool {
        self.checks
            .iter()
            .any(|(id, s)| !id.is_conjecture() && s.violations > 0)
    }

    /// True when a conjecture row failed: a counterexample was found.
    pub fn has_conjecture_counterexample(&self) -> bool {
        self.checks
            .get(&TheoremId::Conj)
            .is_some_and(|s| s.violations > 0)
    }

    /// Process exit code: 0 clean, 2 theorem violation, 3 corpus error,
    /// 4 conjecture counterexample.
    pub fn exit_code(&self) -> i32 {
        if self.has_theorem_violation() {
            2
        } else if self.has_conjecture_counterexample() {
            4
        } else if !self.corpus_errors.is_empty() {
            3
        } else {
            0
        }
    }
}

/// Runs `ids` over the corpus, feeding every report to `sink` in corpus
/// order (then check order, then conjecture-row order).
pub fn scan(
    items: Vec<CorpusItem>,
    ids: &[TheoremId],
    opts: &ScanOptions,
    mut sink: impl FnMut(&CheckReport),
) -> ScanSummary {
    // Checks run in canonical id order regardless of how ids were listed.
    let ids: Vec<TheoremId> =
        TheoremId::ALL.into_iter().filter(|id| ids.contains(id)).collect();
    let cache = FamilyExclusionCache::default();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .expect("thread pool construction");
    let results: Vec<Result<ScannedGraph, CorpusErrorRecord>> = pool.install(|| {
        items
            .par_iter()
            .map(|item| match &item.graph {
                Err(message) => {
                    Err(CorpusErrorRecord { line: item.line, error: message.clone() })
                }
                Ok(graph) => {
                    let ctx = GraphContext::new(graph.clone());
                    let reports: Vec<CheckReport> = ids
                        .iter()
                        .flat_map(|&id| check_in_context(&ctx, id, &opts.check, Some(&cache)))
                        .collect();
                    Ok(ScannedGraph { canon: ctx.canonical_form().to_vec(), reports })
                }
            })
            .collect()
    });

    let mut summary = ScanSummary {
        graphs: 0,
        corpus_errors: Vec::new(),
        checks: ids.iter().map(|&id| (id, CheckStats::default())).collect(),
    };
    // Witness lists keyed by canonical form for sorted, deduplicated output.
    let mut violating: BTreeMap<TheoremId, BTreeMap<Vec<u8>, String>> = BTreeMap::new();
    let mut tight: BTreeMap<TheoremId, BTreeMap<Vec<u8>, String>> = BTreeMap::new();

    for result in results {
        match result {
            Err(record) => summary.corpus_errors.push(record),
            Ok(scanned) => {
                summary.graphs += 1;
                for report in &scanned.reports {
                    sink(report);
                    let stats = summary.checks.get_mut(&report.theorem).unwrap();
                    if report.applicable {
                        stats.applicable += 1;
                        if report.holds == Some(true) {
                            stats.holds += 1;
                        } else {
                            stats.violations += 1;
                            violating
                                .entry(report.theorem)
                                .or_default()
                                .insert(scanned.canon.clone(), report.graph6.clone());
                        }
                        if report.tight == Some(true) {
                            stats.tight += 1;
                            tight
                                .entry(report.theorem)
                                .or_default()
                                .insert(scanned.canon.clone(), report.graph6.clone());
                        }
                    }
                }
            }
        }
    }
    for (id, list) in violating {
        summary.checks.get_mut(&id).unwrap().violating = list.into_values().collect();
    }
    for (id, list) in tight {
        summary.checks.get_mut(&id).unwrap().tight_graphs = list.into_values().collect();
    }
    summary
}

struct ScannedGraph {
    canon: Vec<u8>,
    reports: Vec<CheckReport>,
}
