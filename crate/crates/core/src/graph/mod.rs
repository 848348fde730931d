//! Immutable simple undirected graphs on labeled vertices `0..n-1`.
//!
//! Adjacency is stored as one bit set per vertex. All operations return
//! fresh graphs; nothing mutates in place, so values can be shared freely
//! across threads.

mod canon;
mod connectivity;

use std::collections::VecDeque;

use thiserror::Error;

use crate::bits::BitSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} not allowed")]
    Loop(usize),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("graph is disconnected; diameter is infinite")]
    Disconnected,
    #[error("vertex {0} lies on the path")]
    VertexOnPath(usize),
    #[error("path step ({0}, {1}) is not an edge")]
    NotAPathEdge(usize, usize),
    #[error("path vertices must be distinct (vertex {0} repeats)")]
    RepeatedPathVertex(usize),
    #[error("path must contain at least one vertex")]
    EmptyPath,
    #[error("cap must be at least 1")]
    ZeroCap,
    #[error("cannot delete every vertex")]
    DeletesAllVertices,
    #[error("eigenvalue index {index} out of range 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },
}

/// Diameter of a graph: finite for connected graphs, `Infinite` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

/// A walk through distinct vertices with every consecutive pair adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathInGraph {
    vertices: Vec<usize>,
}

impl PathInGraph {
    /// Validates distinctness and consecutive adjacency against `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyPath);
        }
        let mut seen = BitSet::new(g.order());
        for &v in &vertices {
            g.check_vertex(v)?;
            if seen.contains(v) {
                return Err(GraphError::RepeatedPathVertex(v));
            }
            seen.insert(v);
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(GraphError::NotAPathEdge(w[0], w[1]));
            }
        }
        Ok(PathInGraph { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges on the path.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// Vertex degrees in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    /// The i-th largest degree, 1-indexed.
    pub fn nth(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn max(&self) -> usize {
        self.0[0]
    }

    pub fn min(&self) -> usize {
        *self.0.last().unwrap()
    }
}

/// Immutable simple graph; `adj[i]` is the neighborhood of vertex `i`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a graph on `n ≥ 1` vertices from an edge list. Duplicate edges
    /// collapse; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut adj = vec![BitSet::new(n); n];
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, order: n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, order: n });
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Graph { n, adj })
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, &[])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].contains(b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// Edges as ordered pairs (a, b) with a < b, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    /// Complement: edge ij present iff i ≠ j and ij absent here.
    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut row = BitSet::new(self.n);
            for j in 0..self.n {
                if j != i && !self.adj[i].contains(j) {
                    row.insert(j);
                }
            }
            adj.push(row);
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` are relabeled by `+self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.extend(other.edges().map(|(a, b)| (a + self.n, b + self.n)));
        Graph::new(n, &edges).expect("union of valid graphs is valid")
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for a in 0..self.n {
            for b in 0..other.n {
                g.adj[a].insert(self.n + b);
                g.adj[self.n + b].insert(a);
            }
        }
        g
    }

    /// BFS distances from `v`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, v: usize) -> Result<Vec<Option<usize>>, GraphError> {
        self.check_vertex(v)?;
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let mut seen = BitSet::new(self.n);
        let mut components = 0;
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// Maximum pairwise distance; `Infinite` when disconnected.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for v in 0..self.n {
            let dist = self.bfs_distances(v).unwrap();
            for d in &dist {
                match d {
                    Some(d) => best = best.max(*d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Enumerates shortest paths realizing the diameter, in lexicographic
    /// order of their vertex sequences, stopping after `cap` paths.
    ///
    /// Both orientations of a path are enumerated (each is a shortest path).
    pub fn find_diametral_paths(&self, cap: usize) -> Result<Vec<PathInGraph>, GraphError> {
        if cap == 0 {
            return Err(GraphError::ZeroCap);
        }
        let d = match self.diameter() {
            Diameter::Finite(d) => d,
            Diameter::Infinite => return Err(GraphError::Disconnected),
        };
        let mut out = Vec::new();
        for s in 0..self.n {
            if out.len() >= cap {
                break;
            }
            let dist = self.bfs_distances(s).unwrap();
            if !dist.iter().any(|x| *x == Some(d)) {
                continue;
            }
            // DFS through the BFS levels: a prefix v0..vk extends to a
            // diametral path iff dist[vk] = k and some vertex at level d
            // remains reachable through strictly increasing levels.
            let mut path = vec![s];
            self.diametral_dfs(&dist, d, &mut path, cap, &mut out);
        }
        Ok(out)
    }

    fn diametral_dfs(
        &self,
        dist: &[Option<usize>],
        d: usize,
        path: &mut Vec<usize>,
        cap: usize,
        out: &mut Vec<PathInGraph>,
    ) {
        if out.len() >= cap {
            return;
        }
        let k = path.len() - 1;
        if k == d {
            out.push(PathInGraph { vertices: path.clone() });
            return;
        }
        let last = *path.last().unwrap();
        for w in self.adj[last].iter() {
            if dist[w] == Some(k + 1) {
                path.push(w);
                self.diametral_dfs(dist, d, path, cap, out);
                path.pop();
                if out.len() >= cap {
                    return;
                }
            }
        }
    }

    /// Neighbors of `z` lying on `path`. `z` must be off the path.
    pub fn path_neighbors(&self, path: &PathInGraph, z: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(z)?;
        if path.contains(z) {
            return Err(GraphError::VertexOnPath(z));
        }
        Ok(path.vertices().iter().copied().filter(|&u| self.has_edge(z, u)).collect())
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn add_edge(&self, a: usize, b: usize) -> Result<Graph, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::Loop(a));
        }
        let mut g = self.clone();
        g.adj[a].insert(b);
        g.adj[b].insert(a);
        Ok(g)
    }

    pub fn delete_edge(&self, a: usize, b: usize) -> Result<Graph, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if !self.has_edge(a, b) {
            return Err(GraphError::MissingEdge(a, b));
        }
        let mut g = self.clone();
        g.adj[a].remove(b);
        g.adj[b].remove(a);
        Ok(g)
    }

    /// Deletes the listed vertices, relabeling the rest densely in order.
    pub fn delete_vertices(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut gone = BitSet::new(self.n);
        for &v in vertices {
            self.check_vertex(v)?;
            gone.insert(v);
        }
        if gone.len() == self.n {
            return Err(GraphError::DeletesAllVertices);
        }
        let mut relabel = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !gone.contains(v) {
                relabel[v] = next;
                next += 1;
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(a, b)| !gone.contains(a) && !gone.contains(b))
            .map(|(a, b)| (relabel[a], relabel[b]))
            .collect();
        Graph::new(next, &edges)
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self.edges().map(|(a, b)| (perm[a], perm[b])).collect();
        Graph::new(self.n, &edges).expect("permutation preserves validity")
    }
}

pub use canon::is_isomorphic;
pub use connectivity::vertex_connectivity;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn path_graph(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete_graph(n: usize) -> Graph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn new_graph_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.degree_sequence().0, vec![2, 1, 1]);

        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.edge_count(), 0);

        let dedup = Graph::new(4, &[(0, 1), (0, 1), (2, 3)]).unwrap();
        assert_eq!(dedup.edge_count(), 2);
    }

    #[test]
    fn new_graph_rejections() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::new(0, &[]), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn complement_examples() {
        let k4 = complete_graph(4);
        assert_eq!(k4.complement().edge_count(), 0);

        // H_0 = complement of P_5 under v_i = i - 1.
        let h0 = path_graph(5).complement();
        let mut edges: Vec<(usize, usize)> = h0.edges().collect();
        edges.sort_unstable();
        assert_eq!(edges, vec![(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)]);
    }

    #[test]
    fn union_and_join() {
        let k1 = Graph::new(1, &[]).unwrap();
        let k2 = k1.join(&k1);
        assert_eq!(k2.edge_count(), 1);

        let two_k1 = k1.disjoint_union(&k1);
        let p3 = two_k1.join(&k1);
        assert!(is_isomorphic(&p3, &path_graph(3)));
    }

    #[test]
    fn join_edge_count_formula() {
        let g1 = path_graph(4);
        let g2 = complete_graph(3);
        let j = g1.join(&g2);
        assert_eq!(j.edge_count(), g1.edge_count() + g2.edge_count() + 4 * 3);
    }

    #[test]
    fn bfs_and_diameter() {
        let p4 = path_graph(4);
        assert_eq!(
            p4.bfs_distances(0).unwrap(),
            vec![Some(0), Some(1), Some(2), Some(3)]
        );
        assert_eq!(p4.diameter(), Diameter::Finite(3));

        let two_k1 = Graph::new(2, &[]).unwrap();
        assert_eq!(two_k1.bfs_distances(0).unwrap(), vec![Some(0), None]);
        assert_eq!(two_k1.diameter(), Diameter::Infinite);
    }

    #[test]
    fn r1_eccentricity_from_apex() {
        let r1 = families::r1().unwrap();
        let dist = r1.graph().bfs_distances(0).unwrap();
        let ecc = dist.iter().map(|d| d.unwrap()).max().unwrap();
        assert_eq!(ecc, 5);
    }

    #[test]
    fn diametral_paths_are_shortest_and_sorted() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let paths = c4.find_diametral_paths(100).unwrap();
        // d = 2; every antipodal pair has two shortest paths per orientation.
        assert_eq!(paths.len(), 8);
        let seqs: Vec<&[usize]> = paths.iter().map(|p| p.vertices()).collect();
        let mut sorted = seqs.clone();
        sorted.sort_unstable();
        assert_eq!(seqs, sorted);
        for p in &paths {
            assert_eq!(p.length(), 2);
        }
        assert_eq!(seqs[0], &[0, 1, 2]);
    }

    #[test]
    fn diametral_path_cap() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(c4.find_diametral_paths(3).unwrap().len(), 3);
        assert_eq!(c4.find_diametral_paths(0), Err(GraphError::ZeroCap));
        let two = Graph::new(2, &[]).unwrap();
        assert_eq!(two.find_diametral_paths(5), Err(GraphError::Disconnected));
    }

    #[test]
    fn path_neighbors_examples() {
        let inst = families::g_ndt(7, 3, 2).unwrap();
        let g = inst.graph();
        let path = PathInGraph::new(g, vec![0, 1, 2, 3]).unwrap();
        for z in 4..7 {
            assert_eq!(g.path_neighbors(&path, z).unwrap(), vec![0, 1, 2]);
        }
        assert_eq!(g.path_neighbors(&path, 1), Err(GraphError::VertexOnPath(1)));

        // z with no neighbors on the path
        let g2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let p = PathInGraph::new(&g2, vec![0, 1]).unwrap();
        assert_eq!(g2.path_neighbors(&p, 2).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn edits() {
        let k3 = complete_graph(3);
        let p3 = k3.delete_edge(0, 1).unwrap();
        assert!(is_isomorphic(&p3, &path_graph(3)));
        assert_eq!(p3.delete_edge(0, 1), Err(GraphError::MissingEdge(0, 1)));

        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        let scattered = p2.disjoint_union(&Graph::new(3, &[]).unwrap());
        assert_eq!(scattered.component_count(), 4);

        let g = path_graph(4).delete_vertices(&[1]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 2));

        let added = path_graph(3).add_edge(0, 2).unwrap();
        assert!(is_isomorphic(&added, &complete_graph(3)));
    }

    #[test]
    fn degree_sequence_of_g732_locked_by_oracle() {
        // Brute-force count from the constructed adjacency, not the formula.
        let inst = families::g_ndt(7, 3, 2).unwrap();
        let g = inst.graph();
        let mut degs: Vec<usize> = (0..7).map(|v| g.neighbors(v).count()).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![5, 5, 5, 5, 5, 4, 1]);
        assert_eq!(g.degree_sequence().0, degs);
    }

    #[test]
    fn invariants_after_edits() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (3, 4), (0, 4)]).unwrap();
        for h in [g.complement(), g.delete_edge(0, 1).unwrap(), g.add_edge(2, 3).unwrap()] {
            for v in 0..h.order() {
                assert!(!h.has_edge(v, v));
                for w in h.neighbors(v) {
                    assert!(h.has_edge(w, v));
                }
            }
        }
        assert_eq!(
            g.edge_count() + g.complement().edge_count(),
            g.order() * (g.order() - 1) / 2
        );
    }
}
