//! Constructors for the named graph families: paths, complete graphs,
//! cycles, K_n minus an edge, the path-plus-clique families G_{n,d,t} and
//! G_{n,d,r,a}, the H_{n,p,q} family, and the fixed graphs H_0, R_1, R_2.
//!
//! Each constructor returns the graph together with its parameters and a
//! label map naming the distinguished vertices (path vertices u1..u_{d+1},
//! the appended vertices u and v, clique members).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyId {
    Path,
    Complete,
    Cycle,
    CompleteMinusEdge,
    GNdt,
    GNdra,
    HNpq,
    H0,
    R1,
    R2,
}

impl FamilyId {
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Path => "path",
            FamilyId::Complete => "complete",
            FamilyId::Cycle => "cycle",
            FamilyId::CompleteMinusEdge => "complete_minus_edge",
            FamilyId::GNdt => "g_ndt",
            FamilyId::GNdra => "g_ndra",
            FamilyId::HNpq => "h_npq",
            FamilyId::H0 => "h0",
            FamilyId::R1 => "r1",
            FamilyId::R2 => "r2",
        }
    }

    fn param_count(self) -> usize {
        match self {
            FamilyId::Path | FamilyId::Complete | FamilyId::Cycle | FamilyId::CompleteMinusEdge => 1,
            FamilyId::GNdt | FamilyId::HNpq => 3,
            FamilyId::GNdra => 4,
            FamilyId::H0 | FamilyId::R1 | FamilyId::R2 => 0,
        }
    }

    fn from_name(name: &str) -> Option<FamilyId> {
        use FamilyId::*;
        for id in [Path, Complete, Cycle, CompleteMinusEdge, GNdt, GNdra, HNpq, H0, R1, R2] {
            if id.name() == name {
                return Some(id);
            }
        }
        None
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires {constraint}")]
    Constraint { family: FamilyId, constraint: &'static str },
    #[error("unknown family name '{0}'")]
    UnknownFamily(String),
    #[error("parameter '{0}' is not a non-negative integer")]
    BadParamToken(String),
    #[error("{family} takes {expected} parameter(s), got {got}")]
    WrongParamCount { family: FamilyId, expected: usize, got: usize },
}

/// A constructed family member: the graph plus its declared parameters
/// and named-vertex label map.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    family: FamilyId,
    params: Vec<usize>,
    graph: Graph,
    labels: BTreeMap<String, usize>,
    asserted_diameter: Option<usize>,
}

impl FamilyInstance {
    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn params(&self) -> &[usize] {
        &self.params
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn labels(&self) -> &BTreeMap<String, usize> {
        &self.labels
    }

    pub fn label(&self, name: &str) -> Option<usize> {
        self.labels.get(name).copied()
    }

    /// Diameter the construction is defined to have, when one is declared.
    pub fn asserted_diameter(&self) -> Option<usize> {
        self.asserted_diameter
    }

    /// The `name:p1,p2,...` form accepted by [`parse_family_spec`].
    pub fn spec_string(&self) -> String {
        if self.params.is_empty() {
            self.family.name().to_string()
        } else {
            let params: Vec<String> = self.params.iter().map(usize::to_string).collect();
            format!("{}:{}", self.family, params.join(","))
        }
    }
}

fn path_labels(count: usize) -> BTreeMap<String, usize> {
    (0..count).map(|i| (format!("u{}", i + 1), i)).collect()
}

/// The path P_n on vertices 0..n-1 in order.
pub fn path(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 1 {
        return Err(FamilyError::Constraint { family: FamilyId::Path, constraint: "n >= 1" });
    }
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(FamilyInstance {
        family: FamilyId::Path,
        params: vec![n],
        graph: Graph::new(n, &edges).unwrap(),
        labels: path_labels(n),
        asserted_diameter: Some(n - 1),
    })
}

/// The complete graph K_n.
pub fn complete(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 1 {
        return Err(FamilyError::Constraint { family: FamilyId::Complete, constraint: "n >= 1" });
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Ok(FamilyInstance {
        family: FamilyId::Complete,
        params: vec![n],
        graph: Graph::new(n, &edges).unwrap(),
        labels: BTreeMap::new(),
        asserted_diameter: Some(if n > 1 { 1 } else { 0 }),
    })
}

/// The cycle C_n, n >= 3.
pub fn cycle(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 3 {
        return Err(FamilyError::Constraint { family: FamilyId::Cycle, constraint: "n >= 3" });
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    Ok(FamilyInstance {
        family: FamilyId::Cycle,
        params: vec![n],
        graph: Graph::new(n, &edges).unwrap(),
        labels: BTreeMap::new(),
        asserted_diameter: Some(n / 2),
    })
}

/// K_n with the edge (0, 1) removed, n >= 2.
pub fn complete_minus_edge(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 2 {
        return Err(FamilyError::Constraint {
            family: FamilyId::CompleteMinusEdge,
            constraint: "n >= 2",
        });
    }
    let graph = complete(n)?.graph.delete_edge(0, 1).unwrap();
    Ok(FamilyInstance {
        family: FamilyId::CompleteMinusEdge,
        params: vec![n],
        graph,
        labels: BTreeMap::new(),
        // K_2 minus its edge is disconnected.
        asserted_diameter: if n >= 3 { Some(2) } else { None },
    })
}

/// Path u_1..u_{d+1} plus a clique on n-d-1 vertices, with every clique
/// vertex joined to the three consecutive path vertices u_{t-1}, u_t,
/// u_{t+1}. Path vertices come first (u_i at index i-1), then the clique.
pub fn g_ndt(n: usize, d: usize, t: usize) -> Result<FamilyInstance, FamilyError> {
    let fam = FamilyId::GNdt;
    if !(2 <= d && d + 2 <= n) {
        return Err(FamilyError::Constraint { family: fam, constraint: "2 <= d <= n-2" });
    }
    if !(2 <= t && t <= d) {
        return Err(FamilyError::Constraint { family: fam, constraint: "2 <= t <= d" });
    }
    let clique_size = n - d - 1;
    let mut edges: Vec<(usize, usize)> = (0..d).map(|i| (i, i + 1)).collect();
    for a in 0..clique_size {
        for b in a + 1..clique_size {
            edges.push((d + 1 + a, d + 1 + b));
        }
    }
    for i in [t - 1, t, t + 1] {
        for w in 0..clique_size {
            edges.push((i - 1, d + 1 + w)); // u_i sits at index i-1
        }
    }
    let mut labels = path_labels(d + 1);
    for w in 0..clique_size {
        labels.insert(format!("clique_{w}"), d + 1 + w);
    }
    Ok(FamilyInstance {
        family: fam,
        params: vec![n, d, t],
        graph: Graph::new(n, &edges).unwrap(),
        labels,
        asserted_diameter: Some(d),
    })
}

/// Like `g_ndt`, but the clique splits into V_1 (size a) joined to
/// u_{r-1}, u_r, u_{r+1} and V_2 joined to u_r, u_{r+1}, u_{r+2}.
/// Layout: path, then V_1, then V_2.
pub fn g_ndra(n: usize, d: usize, r: usize, a: usize) -> Result<FamilyInstance, FamilyError> {
    let fam = FamilyId::GNdra;
    if !(3 <= d && d + 2 <= n) {
        return Err(FamilyError::Constraint { family: fam, constraint: "3 <= d <= n-2" });
    }
    if !(2 <= r && r + 1 <= d) {
        return Err(FamilyError::Constraint { family: fam, constraint: "2 <= r <= d-1" });
    }
    if !(1 <= a && a + d + 2 <= n) {
        return Err(FamilyError::Constraint { family: fam, constraint: "1 <= a <= n-d-2" });
    }
    let clique_size = n - d - 1;
    let v1_start = d + 1;
    let v2_start = d + 1 + a;
    let mut edges: Vec<(usize, usize)> = (0..d).map(|i| (i, i + 1)).collect();
    for x in 0..clique_size {
        for y in x + 1..clique_size {
            edges.push((d + 1 + x, d + 1 + y));
        }
    }
    for i in [r - 1, r, r + 1] {
        for v in 0..a {
            edges.push((i - 1, v1_start + v));
        }
    }
    for j in [r, r + 1, r + 2] {
        for w in 0..clique_size - a {
            edges.push((j - 1, v2_start + w));
        }
    }
    let mut labels = path_labels(d + 1);
    for v in 0..a {
        labels.insert(format!("v1_{v}"), v1_start + v);
    }
    for w in 0..clique_size - a {
        labels.insert(format!("v2_{w}"), v2_start + w);
    }
    Ok(FamilyInstance {
        family: fam,
        params: vec![n, d, r, a],
        graph: Graph::new(n, &edges).unwrap(),
        labels,
        asserted_diameter: Some(d),
    })
}

/// G_{n-1,n-3,p} (diametral path u_1..u_{n-2} with one outside vertex u)
/// plus a vertex v joined to u_{q-1}, u_q, u_{q+1}, and to u as well
/// exactly when q is p or p+1. Indices: u_i at i-1, u at n-2, v at n-1.
pub fn h_npq(n: usize, p: usize, q: usize) -> Result<FamilyInstance, FamilyError> {
    let fam = FamilyId::HNpq;
    if !(2 <= p && p <= q && q + 3 <= n) {
        return Err(FamilyError::Constraint { family: fam, constraint: "2 <= p <= q <= n-3" });
    }
    let base = g_ndt(n - 1, n - 3, p).expect("legal h_npq parameters give a legal base");
    let u = n - 2;
    let v = n - 1;
    let mut edges: Vec<(usize, usize)> = base.graph.edges().collect();
    for i in [q - 1, q, q + 1] {
        edges.push((i - 1, v));
    }
    if q == p || q == p + 1 {
        edges.push((u, v));
    }
    let mut labels = path_labels(n - 2);
    labels.insert("u".to_string(), u);
    labels.insert("v".to_string(), v);
    Ok(FamilyInstance {
        family: fam,
        params: vec![n, p, q],
        graph: Graph::new(n, &edges).unwrap(),
        labels,
        asserted_diameter: Some(n - 3),
    })
}

/// The 5-vertex complement of P_5.
pub fn h0() -> Result<FamilyInstance, FamilyError> {
    let graph = path(5)?.graph.complement();
    Ok(FamilyInstance {
        family: FamilyId::H0,
        params: vec![],
        graph,
        labels: (0..5).map(|i| (format!("v{}", i + 1), i)).collect(),
        asserted_diameter: Some(2),
    })
}

/// Two 4-cycles bridged by an edge: 8 vertices, 9 edges, diameter 5.
pub fn r1() -> Result<FamilyInstance, FamilyError> {
    let edges = [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 7), (6, 7)];
    Ok(FamilyInstance {
        family: FamilyId::R1,
        params: vec![],
        graph: Graph::new(8, &edges).unwrap(),
        labels: BTreeMap::new(),
        asserted_diameter: Some(5),
    })
}

/// A triangle with a pendant path of length 4: 7 vertices, diameter 5.
pub fn r2() -> Result<FamilyInstance, FamilyError> {
    let edges = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)];
    Ok(FamilyInstance {
        family: FamilyId::R2,
        params: vec![],
        graph: Graph::new(7, &edges).unwrap(),
        labels: BTreeMap::new(),
        asserted_diameter: Some(5),
    })
}

/// Builds a family member by id and parameter list.
pub fn build(family: FamilyId, params: &[usize]) -> Result<FamilyInstance, FamilyError> {
    let expected = family.param_count();
    if params.len() != expected {
        return Err(FamilyError::WrongParamCount { family, expected, got: params.len() });
    }
    match family {
        FamilyId::Path => path(params[0]),
        FamilyId::Complete => complete(params[0]),
        FamilyId::Cycle => cycle(params[0]),
        FamilyId::CompleteMinusEdge => complete_minus_edge(params[0]),
        FamilyId::GNdt => g_ndt(params[0], params[1], params[2]),
        FamilyId::GNdra => g_ndra(params[0], params[1], params[2], params[3]),
        FamilyId::HNpq => h_npq(params[0], params[1], params[2]),
        FamilyId::H0 => h0(),
        FamilyId::R1 => r1(),
        FamilyId::R2 => r2(),
    }
}

/// Parses the `name:p1,p2,...` mini-grammar, e.g. `g_ndt:7,3,2` or `r1`.
pub fn parse_family_spec(spec: &str) -> Result<FamilyInstance, FamilyError> {
    let (name, rest) = match spec.split_once(':') {
        Some((name, rest)) => (name.trim(), Some(rest)),
        None => (spec.trim(), None),
    };
    let family =
        FamilyId::from_name(name).ok_or_else(|| FamilyError::UnknownFamily(name.to_string()))?;
    let params: Vec<usize> = match rest {
        None => Vec::new(),
        Some(rest) => rest
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>().map_err(|_| FamilyError::BadParamToken(tok.to_string()))
            })
            .collect::<Result<_, _>>()?,
    };
    build(family, &params)
}
