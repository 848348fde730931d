//! Machine checks of the diameter-based eigenvalue distribution bounds.
//!
//! Each check gates on its applicability hypothesis, takes the eigenvalue
//! count from the exact counter (never from floats), and reports whether
//! the bound holds and whether it is tight. The checks:
//!
//! - `T1_1`: m_G(n-d+3, n] <= n-d-1 for connected G with d >= 4
//! - `T1_2`: m_G[n-d+2, n] <= n-d for 2 <= d <= n-2
//! - `T1_3`: m_G[n-d+1, n] <= n-d+1 for 1 <= d <= n-3
//! - `T1_4`: m_G[n-d, n] <= n-d+1 (d in {2,3,4}) or n-d+2 (d >= 5), for
//!   2 <= d <= n-4
//! - `T1_5`: m_G[n-2d+4, n] <= n-2 for 2 <= d <= floor((n+3)/2), sharpened
//!   to n-3 when 3 <= d <= floor((n+1)/2); the fired clause is reported
//! - `T3_3`: m_G[n-d, n] <= n-d+1 when d <= n-5 and some diametral path
//!   has three outside vertices with pairwise disjoint path neighborhoods
//! - `L2_6`: m_G[n-d+2, n] <= n-d-1 for 2 <= d <= n-2 when G is not
//!   isomorphic to any G_{n,d,t} or G_{n,d,r,a}
//! - `TRIV_A`: m_G[n-2d+3, n] <= n-1 for 2 <= d <= floor((n-1)/2)
//! - `TRIV_B`: m_G[n-2d+2, n] <= n for 2 <= d <= floor((n-2)/2)
//! - `CONJ`: m_G[n-d+2-c, n] <= n-d+c for each c = 0..=d-2 with
//!   max(2, c) <= d <= n-2-c

mod scan;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::BigRational;
use serde::Serialize;
use serde_json::json;

use crate::corpus::write_graph6;
use crate::families;
use crate::graph::{Diameter, Graph};
use crate::spectra::{ExactCounter, IntervalQuery};

pub use scan::{scan, CheckStats, ScanOptions, ScanSummary};

/// Identifiers of the checkable statements; the wire names (`T1_1`, ...,
/// `TRIV_A`, `CONJ`) are fixed interface vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T11,
    T12,
    T13,
    T14,
    T15,
    T33,
    L26,
    TrivA,
    TrivB,
    Conj,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::T11,
        TheoremId::T12,
        TheoremId::T13,
        TheoremId::T14,
        TheoremId::T15,
        TheoremId::T33,
        TheoremId::L26,
        TheoremId::TrivA,
        TheoremId::TrivB,
        TheoremId::Conj,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T11 => "T1_1",
            TheoremId::T12 => "T1_2",
            TheoremId::T13 => "T1_3",
            TheoremId::T14 => "T1_4",
            TheoremId::T15 => "T1_5",
            TheoremId::T33 => "T3_3",
            TheoremId::L26 => "L2_6",
            TheoremId::TrivA => "TRIV_A",
            TheoremId::TrivB => "TRIV_B",
            TheoremId::Conj => "CONJ",
        }
    }

    /// True for the conjecture id, whose failures are discoveries rather
    /// than implementation bugs.
    pub fn is_conjecture(self) -> bool {
        self == TheoremId::Conj
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let valid: Vec<&str> = TheoremId::ALL.iter().map(|id| id.name()).collect();
                format!("unknown check name '{s}'; valid names: {}", valid.join(", "))
            })
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Interval endpoints in report form: exact rational strings plus flags.
#[derive(Debug, Clone, Serialize)]
pub struct IntervalFields {
    pub lo: String,
    pub lo_closed: bool,
    pub hi: String,
    pub hi_closed: bool,
}

impl From<&IntervalQuery> for IntervalFields {
    fn from(q: &IntervalQuery) -> Self {
        IntervalFields {
            lo: crate::spectra::rational_to_string(q.lo()),
            lo_closed: q.lo_closed(),
            hi: crate::spectra::rational_to_string(q.hi()),
            hi_closed: q.hi_closed(),
        }
    }
}

/// Outcome of one check on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub graph6: String,
    pub n: usize,
    /// Diameter; absent when the graph is disconnected.
    pub d: Option<usize>,
    pub theorem: TheoremId,
    pub applicable: bool,
    /// Why the check did not apply; absent when applicable.
    pub reason: Option<String>,
    pub interval: Option<IntervalFields>,
    pub count: Option<usize>,
    pub bound: Option<usize>,
    pub holds: Option<bool>,
    pub tight: Option<bool>,
    pub witness: Option<serde_json::Value>,
}

impl CheckReport {
    fn not_applicable(ctx: &GraphContext, id: TheoremId, reason: String) -> CheckReport {
        CheckReport {
            graph6: ctx.graph6.clone(),
            n: ctx.graph.order(),
            d: ctx.diameter.finite(),
            theorem: id,
            applicable: false,
            reason: Some(reason),
            interval: None,
            count: None,
            bound: None,
            holds: None,
            tight: None,
            witness: None,
        }
    }

    fn verdict(
        ctx: &GraphContext,
        id: TheoremId,
        interval: IntervalQuery,
        bound: usize,
        witness: Option<serde_json::Value>,
    ) -> CheckReport {
        let count = ctx.counter().count(&interval);
        CheckReport {
            graph6: ctx.graph6.clone(),
            n: ctx.graph.order(),
            d: ctx.diameter.finite(),
            theorem: id,
            applicable: true,
            reason: None,
            interval: Some(IntervalFields::from(&interval)),
            count: Some(count),
            bound: Some(bound),
            holds: Some(count <= bound),
            tight: Some(count == bound),
            witness,
        }
    }

    /// An applicable check whose bound failed.
    pub fn is_violation(&self) -> bool {
        self.applicable && self.holds == Some(false)
    }
}

/// One conjecture row: the offset c, its interval, and the verdict.
#[derive(Debug, Clone)]
pub struct ConjectureRow {
    pub c: usize,
    pub interval: IntervalQuery,
    pub count: usize,
    pub bound: usize,
    pub holds: bool,
}

/// Tuning knobs shared by `check` and `scan`.
#[derive(Debug, Clone)]
pub struct CheckOptions {
    /// Diametral-path enumeration cap for the T3_3 hypothesis search.
    pub path_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { path_cap: 10_000 }
    }
}

/// Per-graph state shared across checks: graph6 id, diameter, and the
/// lazily built exact counter and canonical form.
pub struct GraphContext {
    graph: Graph,
    graph6: String,
    diameter: Diameter,
    counter: OnceLock<ExactCounter>,
    canon: OnceLock<Vec<u8>>,
}

impl GraphContext {
    pub fn new(graph: Graph) -> Self {
        let graph6 = write_graph6(&graph);
        let diameter = graph.diameter();
        GraphContext { graph, graph6, diameter, counter: OnceLock::new(), canon: OnceLock::new() }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph6(&self) -> &str {
        &self.graph6
    }

    fn counter(&self) -> &ExactCounter {
        self.counter.get_or_init(|| ExactCounter::new(&self.graph))
    }

    pub fn canonical_form(&self) -> &[u8] {
        self.canon.get_or_init(|| self.graph.canonical_form())
    }
}

/// Canonical forms of the excluded families, memoized per (n, d); the
/// L2_6 gate consults this on every graph of a scan.
#[derive(Default)]
pub struct FamilyExclusionCache {
    inner: Mutex<HashMap<(usize, usize), Vec<(Vec<u8>, String)>>>,
}

impl FamilyExclusionCache {
    /// Canonical form and spec string of every legal G_{n,d,t} and
    /// G_{n,d,r,a} instance at this order and diameter.
    fn instances(&self, n: usize, d: usize) -> Vec<(Vec<u8>, String)> {
        let mut cache = self.inner.lock().unwrap();
        cache
            .entry((n, d))
            .or_insert_with(|| excluded_family_instances(n, d))
            .clone()
    }
}

fn excluded_family_instances(n: usize, d: usize) -> Vec<(Vec<u8>, String)> {
    let mut out = Vec::new();
    if 2 <= d && d + 2 <= n {
        for t in 2..=d {
            let inst = families::g_ndt(n, d, t).unwrap();
            out.push((inst.graph().canonical_form(), inst.spec_string()));
        }
    }
    if 3 <= d && d + 3 <= n {
        for r in 2..=d - 1 {
            for a in 1..=n - d - 2 {
                let inst = families::g_ndra(n, d, r, a).unwrap();
                out.push((inst.graph().canonical_form(), inst.spec_string()));
            }
        }
    }
    out
}

fn int_rat(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn closed_interval(lo: i64, hi: i64) -> IntervalQuery {
    IntervalQuery::closed(int_rat(lo), int_rat(hi)).expect("checker intervals are ordered")
}

/// Runs one check. Most ids yield exactly one report; `CONJ` yields one
/// per qualifying c (or a single not-applicable report when none
/// qualifies). Inapplicability is an outcome, never an error.
pub fn check(g: &Graph, id: TheoremId) -> Vec<CheckReport> {
    let ctx = GraphContext::new(g.clone());
    check_in_context(&ctx, id, &CheckOptions::default(), None)
}

pub(crate) fn check_in_context(
    ctx: &GraphContext,
    id: TheoremId,
    opts: &CheckOptions,
    cache: Option<&FamilyExclusionCache>,
) -> Vec<CheckReport> {
    if id == TheoremId::Conj {
        return conjecture_reports(ctx);
    }
    let n = ctx.graph.order() as i64;
    let d = match ctx.diameter {
        Diameter::Finite(d) => d as i64,
        Diameter::Infinite => {
            return vec![CheckReport::not_applicable(ctx, id, "graph is disconnected".into())];
        }
    };

    let report = match id {
        TheoremId::T11 => {
            if d < 4 {
                CheckReport::not_applicable(ctx, id, format!("requires d >= 4, d = {d}"))
            } else {
                let interval =
                    IntervalQuery::open_closed(int_rat(n - d + 3), int_rat(n)).unwrap();
                CheckReport::verdict(ctx, id, interval, (n - d - 1) as usize, None)
            }
        }
        TheoremId::T12 => {
            if !(2 <= d && d <= n - 2) {
                CheckReport::not_applicable(ctx, id, format!("requires 2 <= d <= n-2, d = {d}"))
            } else {
                CheckReport::verdict(ctx, id, closed_interval(n - d + 2, n), (n - d) as usize, None)
            }
        }
        TheoremId::T13 => {
            if !(1 <= d && d <= n - 3) {
                CheckReport::not_applicable(ctx, id, format!("requires 1 <= d <= n-3, d = {d}"))
            } else {
                CheckReport::verdict(
                    ctx,
                    id,
                    closed_interval(n - d + 1, n),
                    (n - d + 1) as usize,
                    None,
                )
            }
        }
        TheoremId::T14 => {
            if !(2 <= d && d <= n - 4) {
                CheckReport::not_applicable(ctx, id, format!("requires 2 <= d <= n-4, d = {d}"))
            } else {
                let bound = if d <= 4 { n - d + 1 } else { n - d + 2 };
                CheckReport::verdict(ctx, id, closed_interval(n - d, n), bound as usize, None)
            }
        }
        TheoremId::T15 => {
            if !(2 <= d && d <= (n + 3) / 2) {
                CheckReport::not_applicable(
                    ctx,
                    id,
                    format!("requires 2 <= d <= floor((n+3)/2), d = {d}"),
                )
            } else {
                let sharpened = 3 <= d && d <= (n + 1) / 2;
                let (bound, clause) = if sharpened { (n - 3, "4.2") } else { (n - 2, "4.1") };
                CheckReport::verdict(
                    ctx,
                    id,
                    closed_interval(n - 2 * d + 4, n),
                    bound as usize,
                    Some(json!({ "clause": clause })),
                )
            }
        }
        TheoremId::T33 => check_three_outside(ctx, n, d, opts),
        TheoremId::L26 => {
            if !(2 <= d && d <= n - 2) {
                CheckReport::not_applicable(ctx, id, format!("requires 2 <= d <= n-2, d = {d}"))
            } else {
                let instances = match cache {
                    Some(cache) => cache.instances(n as usize, d as usize),
                    None => excluded_family_instances(n as usize, d as usize),
                };
                let canon = ctx.canonical_form();
                match instances.iter().find(|(form, _)| form.as_slice() == canon) {
                    Some((_, spec)) => CheckReport::not_applicable(
                        ctx,
                        id,
                        format!("isomorphic to excluded family member {spec}"),
                    ),
                    None => CheckReport::verdict(
                        ctx,
                        id,
                        closed_interval(n - d + 2, n),
                        (n - d - 1) as usize,
                        None,
                    ),
                }
            }
        }
        TheoremId::TrivA => {
            if !(2 <= d && d <= (n - 1) / 2) {
                CheckReport::not_applicable(
                    ctx,
                    id,
                    format!("requires 2 <= d <= floor((n-1)/2), d = {d}"),
                )
            } else {
                CheckReport::verdict(
                    ctx,
                    id,
                    closed_interval(n - 2 * d + 3, n),
                    (n - 1) as usize,
                    None,
                )
            }
        }
        TheoremId::TrivB => {
            if !(2 <= d && d <= (n - 2) / 2) {
                CheckReport::not_applicable(
                    ctx,
                    id,
                    format!("requires 2 <= d <= floor((n-2)/2), d = {d}"),
                )
            } else {
                CheckReport::verdict(ctx, id, closed_interval(n - 2 * d + 2, n), n as usize, None)
            }
        }
        TheoremId::Conj => unreachable!("handled above"),
    };
    vec![report]
}

/// T3_3: search the enumerated diametral paths for one with three outside
/// vertices whose path neighborhoods are pairwise disjoint.
fn check_three_outside(ctx: &GraphContext, n: i64, d: i64, opts: &CheckOptions) -> CheckReport {
    let id = TheoremId::T33;
    if d > n - 5 {
        return CheckReport::not_applicable(ctx, id, format!("requires d <= n-5, d = {d}"));
    }
    let paths = ctx.graph.find_diametral_paths(opts.path_cap).expect("connected, cap >= 1");
    for path in &paths {
        let on_path: crate::bits::BitSet = {
            let mut s = crate::bits::BitSet::new(ctx.graph.order());
            for &v in path.vertices() {
                s.insert(v);
            }
            s
        };
        let outside: Vec<usize> =
            (0..ctx.graph.order()).filter(|&v| !on_path.contains(v)).collect();
        let neighborhoods: Vec<crate::bits::BitSet> = outside
            .iter()
            .map(|&z| {
                let mut s = crate::bits::BitSet::new(ctx.graph.order());
                for &u in path.vertices() {
                    if ctx.graph.has_edge(z, u) {
                        s.insert(u);
                    }
                }
                s
            })
            .collect();
        let m = outside.len();
        for i in 0..m {
            for j in i + 1..m {
                if !neighborhoods[i].is_disjoint(&neighborhoods[j]) {
                    continue;
                }
                for k in j + 1..m {
                    if neighborhoods[i].is_disjoint(&neighborhoods[k])
                        && neighborhoods[j].is_disjoint(&neighborhoods[k])
                    {
                        let witness = json!({
                            "path": path.vertices(),
                            "outside": [outside[i], outside[j], outside[k]],
                        });
                        return CheckReport::verdict(
                            ctx,
                            id,
                            closed_interval(n - d, n),
                            (n - d + 1) as usize,
                            Some(witness),
                        );
                    }
                }
            }
        }
    }
    let reason = if paths.len() >= opts.path_cap {
        format!("hypothesis not established within the first {} diametral paths", opts.path_cap)
    } else {
        "no diametral path has three outside vertices with pairwise disjoint path neighborhoods"
            .to_string()
    };
    CheckReport::not_applicable(ctx, id, reason)
}

/// Conjecture rows: one verdict per qualifying offset c.
pub fn check_conjecture(g: &Graph) -> Vec<ConjectureRow> {
    let ctx = GraphContext::new(g.clone());
    conjecture_rows(&ctx)
}

fn conjecture_rows(ctx: &GraphContext) -> Vec<ConjectureRow> {
    let n = ctx.graph.order() as i64;
    let d = match ctx.diameter {
        Diameter::Finite(d) => d as i64,
        Diameter::Infinite => return Vec::new(),
    };
    let mut rows = Vec::new();
    if d < 2 {
        return rows;
    }
    for c in 0..=d - 2 {
        if !(c.max(2) <= d && d <= n - 2 - c) {
            continue;
        }
        let interval = closed_interval(n - d + 2 - c, n);
        let count = ctx.counter().count(&interval);
        let bound = (n - d + c) as usize;
        rows.push(ConjectureRow { c: c as usize, interval, count, bound, holds: count <= bound });
    }
    rows
}

fn conjecture_reports(ctx: &GraphContext) -> Vec<CheckReport> {
    let rows = conjecture_rows(ctx);
    if rows.is_empty() {
        let reason = match ctx.diameter {
            Diameter::Infinite => "graph is disconnected".to_string(),
            Diameter::Finite(d) => {
                format!("no offset c in 0..=d-2 satisfies max(2, c) <= d <= n-2-c (d = {d})")
            }
        };
        return vec![CheckReport::not_applicable(ctx, TheoremId::Conj, reason)];
    }
    rows.into_iter()
        .map(|row| {
            let count = row.count;
            let bound = row.bound;
            CheckReport {
                graph6: ctx.graph6.clone(),
                n: ctx.graph.order(),
                d: ctx.diameter.finite(),
                theorem: TheoremId::Conj,
                applicable: true,
                reason: None,
                interval: Some(IntervalFields::from(&row.interval)),
                count: Some(count),
                bound: Some(bound),
                holds: Some(row.holds),
                tight: Some(count == bound),
                witness: Some(json!({ "c": row.c })),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn path_graph(n: usize) -> Graph {
        families::path(n).unwrap().into_graph()
    }

    #[test]
    fn t15_on_r1_is_tight() {
        let r1 = families::r1().unwrap();
        let reports = check(r1.graph(), TheoremId::T15);
        let r = &reports[0];
        assert!(r.applicable);
        assert_eq!(r.count, Some(6));
        assert_eq!(r.bound, Some(6));
        assert_eq!((r.holds, r.tight), (Some(true), Some(true)));
        assert_eq!(r.witness.as_ref().unwrap()["clause"], "4.1");
    }

    #[test]
    fn t15_on_r2_is_tight() {
        // n = 7, d = 5 = (n+3)/2: the sharpened clause does not fire.
        let r2 = families::r2().unwrap();
        let r = &check(r2.graph(), TheoremId::T15)[0];
        assert_eq!(r.witness.as_ref().unwrap()["clause"], "4.1");
        assert_eq!(r.count, Some(5));
        assert_eq!(r.bound, Some(5));
        assert_eq!(r.tight, Some(true));
    }

    #[test]
    fn t14_on_g843_is_tight() {
        let inst = families::g_ndt(8, 4, 3).unwrap();
        let r = &check(inst.graph(), TheoremId::T14)[0];
        assert!(r.applicable);
        assert_eq!(r.count, Some(5));
        assert_eq!(r.bound, Some(5)); // n - d + 1 for d = 4
        assert_eq!(r.tight, Some(true));
    }

    #[test]
    fn t14_inapplicable_to_long_paths() {
        let r = &check(&path_graph(7), TheoremId::T14)[0];
        assert!(!r.applicable);
        assert!(r.reason.as_ref().unwrap().contains("2 <= d <= n-4"));
    }

    #[test]
    fn t12_on_g932_is_tight() {
        let inst = families::g_ndt(9, 3, 2).unwrap();
        let r = &check(inst.graph(), TheoremId::T12)[0];
        assert_eq!(r.count, Some(6));
        assert_eq!(r.bound, Some(6));
        assert_eq!(r.tight, Some(true));
    }

    #[test]
    fn disconnected_graphs_are_never_applicable() {
        let g = Graph::new(4, &[(0, 1)]).unwrap();
        for id in TheoremId::ALL {
            let reports = check(&g, id);
            assert_eq!(reports.len(), 1);
            assert!(!reports[0].applicable);
            assert!(reports[0].d.is_none());
        }
    }

    #[test]
    fn l26_excludes_the_families() {
        let inst = families::g_ndt(7, 3, 2).unwrap();
        let r = &check(inst.graph(), TheoremId::L26)[0];
        assert!(!r.applicable);
        assert!(r.reason.as_ref().unwrap().contains("g_ndt:7,3,2")
            || r.reason.as_ref().unwrap().contains("g_ndt:7,3,3"));

        // A relabeled copy is excluded too.
        let perm = [6, 2, 4, 0, 1, 3, 5];
        let relabeled = inst.graph().permuted(&perm);
        assert!(!check(&relabeled, TheoremId::L26)[0].applicable);

        // C_6 (d = 3) passes the gate and is not one of the families.
        let c6 = families::cycle(6).unwrap();
        let r = &check(c6.graph(), TheoremId::L26)[0];
        assert!(r.applicable);
        assert_eq!(r.holds, Some(true));

        // Long paths fail the d <= n-2 gate outright.
        let r = &check(&path_graph(6), TheoremId::L26)[0];
        assert!(!r.applicable);
    }

    #[test]
    fn t33_hypothesis_absent_on_gndt() {
        // Every outside vertex of G_{9,4,2} shares its path neighborhood.
        let inst = families::g_ndt(9, 4, 2).unwrap();
        let r = &check(inst.graph(), TheoremId::T33)[0];
        assert!(!r.applicable);
        assert!(r.reason.as_ref().unwrap().contains("no diametral path"));
    }

    #[test]
    fn t33_witness_found_on_spread_construction() {
        // P_7 plus three pendant vertices at distinct path vertices,
        // attached so the path stays diametral.
        let g = Graph::new(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (7, 1), (8, 3), (9, 5)],
        )
        .unwrap();
        assert_eq!(g.diameter(), Diameter::Finite(6));
        let r = &check(&g, TheoremId::T33)[0];
        assert!(!r.applicable, "d = 6 > n-5 = 5");

        // Same shape, one more path vertex to satisfy d <= n-5.
        let g = Graph::new(
            11,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (7, 1), (8, 3), (9, 5), (10, 3)],
        )
        .unwrap();
        assert_eq!(g.diameter(), Diameter::Finite(6));
        let r = &check(&g, TheoremId::T33)[0];
        assert!(r.applicable);
        assert_eq!(r.holds, Some(true));
        let witness = r.witness.as_ref().unwrap();
        assert_eq!(witness["outside"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn conjecture_rows_match_their_specializations() {
        let inst = families::g_ndt(9, 3, 2).unwrap();
        let rows = check_conjecture(inst.graph());
        // c = 0 reproduces the T1_2 verdict.
        let t12 = &check(inst.graph(), TheoremId::T12)[0];
        let c0 = rows.iter().find(|r| r.c == 0).unwrap();
        assert_eq!(Some(c0.count), t12.count);
        assert_eq!(Some(c0.bound), t12.bound);

        // c = 2 on a d >= 5 graph reproduces the T1_4 bound.
        let r1 = families::r1().unwrap();
        let rows = check_conjecture(r1.graph());
        if let Some(c2) = rows.iter().find(|r| r.c == 2) {
            let t14 = &check(r1.graph(), TheoremId::T14)[0];
            if t14.applicable {
                assert_eq!(Some(c2.count), t14.count);
                assert_eq!(Some(c2.bound), t14.bound);
            }
        }
    }

    #[test]
    fn conjecture_gate_is_empty_for_long_paths() {
        // d = 9, n = 10: c <= d-2 and d <= n-2-c force c <= -1.
        assert!(check_conjecture(&path_graph(10)).is_empty());
        let reports = check(&path_graph(10), TheoremId::Conj);
        assert_eq!(reports.len(), 1);
        assert!(!reports[0].applicable);
    }

    #[test]
    fn interval_nesting_between_t11_and_t12() {
        for n in [7, 8] {
            for seed in 0..30u64 {
                let g = crate::corpus::random_connected(n, 0.45, seed).unwrap();
                let t11 = &check(&g, TheoremId::T11)[0];
                let t12 = &check(&g, TheoremId::T12)[0];
                if t11.applicable && t12.applicable {
                    assert!(t11.count.unwrap() <= t12.count.unwrap());
                }
            }
        }
    }
}
