//! Vertex connectivity via Menger's theorem: the maximum number of
//! internally vertex-disjoint s-t paths equals the minimum s-t vertex cut,
//! computed as max-flow on the vertex-split digraph.

use super::Graph;

/// Minimum number of vertices whose deletion disconnects the graph or
/// reduces it to a single vertex. Complete graphs get `n - 1`;
/// disconnected graphs get 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 {
        return 0;
    }
    let complete = g.edge_count() == n * (n - 1) / 2;
    if complete {
        return n - 1;
    }
    // Minimize local connectivity over non-adjacent pairs; every minimum
    // cut separates some such pair.
    let mut best = usize::MAX;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

/// Max number of internally vertex-disjoint s-t paths (s, t non-adjacent).
fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    // Split each vertex v into v_in (2v) and v_out (2v + 1). Arc v_in→v_out
    // has capacity 1 (infinite for s and t); each edge uv gives arcs
    // u_out→v_in and v_out→u_in of capacity 1 (vertex caps dominate).
    let n = g.order();
    let nodes = 2 * n;
    let mut graph = FlowGraph::new(nodes);
    for v in 0..n {
        let cap = if v == s || v == t { n as i64 } else { 1 };
        graph.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        graph.add_arc(2 * u + 1, 2 * v, 1);
        graph.add_arc(2 * v + 1, 2 * u, 1);
    }
    graph.max_flow(2 * s + 1, 2 * t) as usize
}

struct Arc {
    to: usize,
    cap: i64,
}

struct FlowGraph {
    arcs: Vec<Arc>,
    head: Vec<Vec<usize>>,
}

impl FlowGraph {
    fn new(nodes: usize) -> Self {
        FlowGraph { arcs: Vec::new(), head: vec![Vec::new(); nodes] }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        self.head[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.head[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Edmonds-Karp; fine at the graph orders this crate targets.
    fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut flow = 0;
        loop {
            let mut pred: Vec<Option<usize>> = vec![None; self.head.len()];
            let mut queue = std::collections::VecDeque::from([source]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &ai in &self.head[u] {
                    let arc = &self.arcs[ai];
                    if arc.cap > 0 && pred[arc.to].is_none() && arc.to != source {
                        pred[arc.to] = Some(ai);
                        if arc.to == sink {
                            break 'bfs;
                        }
                        queue.push_back(arc.to);
                    }
                }
            }
            if pred[sink].is_none() {
                return flow;
            }
            let mut push = i64::MAX;
            let mut v = sink;
            while v != source {
                let ai = pred[v].unwrap();
                push = push.min(self.arcs[ai].cap);
                v = self.arcs[ai ^ 1].to;
            }
            let mut v = sink;
            while v != source {
                let ai = pred[v].unwrap();
                self.arcs[ai].cap -= push;
                self.arcs[ai ^ 1].cap += push;
                v = self.arcs[ai ^ 1].to;
            }
            flow += push;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn known_values() {
        for n in 3..=6 {
            assert_eq!(vertex_connectivity(&path(n)), 1, "kappa(P_{n})");
        }
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&c4), 2);

        let mut edges = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                edges.push((a, b));
            }
        }
        let k5 = Graph::new(5, &edges).unwrap();
        assert_eq!(vertex_connectivity(&k5), 4);

        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(vertex_connectivity(&k1), 0);

        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&disconnected), 0);
    }

    #[test]
    fn complete_bipartite() {
        // kappa(K_{2,3}) = 2
        let k23 = Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(vertex_connectivity(&k23), 2);
    }

    #[test]
    fn cut_vertex() {
        // Two triangles sharing a vertex: kappa = 1.
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(vertex_connectivity(&g), 1);
    }
}
