//! Canonical labeling by backtracking over color-respecting relabelings.
//!
//! Vertices are first partitioned by iterated neighborhood refinement
//! (degree, then multisets of neighbor colors, to a fixpoint). The search
//! then assigns new labels cell by cell, maximizing the packed
//! upper-triangle adjacency bit string, with prefix pruning against the
//! best assignment found so far. Two graphs are isomorphic iff their
//! canonical byte strings are equal.

use super::Graph;

/// Equality of canonical forms; sizes are compared first.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    g.canonical_form() == h.canonical_form()
}

impl Graph {
    /// Canonical byte string; equal for two graphs iff they are isomorphic.
    ///
    /// Layout: order as 4 bytes big-endian, then the upper adjacency
    /// triangle of the canonical relabeling, column-major, packed 8 bits
    /// per byte most-significant first.
    pub fn canonical_form(&self) -> Vec<u8> {
        let (rows, _) = self.canonical_rows();
        let n = self.order();
        let mut out = Vec::with_capacity(4 + n * (n - 1) / 2 / 8 + 1);
        out.extend_from_slice(&(n as u32).to_be_bytes());
        let mut acc: u8 = 0;
        let mut filled = 0;
        let w = n.div_ceil(64).max(1);
        for k in 1..n {
            for i in 0..k {
                let bit = rows[k * w + i / 64] >> (63 - (i % 64)) & 1;
                acc = acc << 1 | bit as u8;
                filled += 1;
                if filled == 8 {
                    out.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(acc << (8 - filled));
        }
        out
    }

    /// The canonical relabeling of this graph.
    pub fn canonical_graph(&self) -> Graph {
        let (_, perm) = self.canonical_rows();
        // perm[position] = old vertex; invert to map old -> new.
        let mut relabel = vec![0usize; self.order()];
        for (new, &old) in perm.iter().enumerate() {
            relabel[old] = new;
        }
        self.permuted(&relabel)
    }

    /// Packed rows of the maximal adjacency bit matrix and the assignment
    /// (new label -> old vertex) achieving it.
    fn canonical_rows(&self) -> (Vec<u64>, Vec<usize>) {
        let n = self.order();
        let colors = self.refined_colors();
        // Cells of the color partition, in canonical color order.
        let cell_count = colors.iter().max().unwrap() + 1;
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); cell_count];
        for v in 0..n {
            cells[colors[v]].push(v);
        }
        let mut cell_of_position = Vec::with_capacity(n);
        for (ci, cell) in cells.iter().enumerate() {
            cell_of_position.extend(std::iter::repeat_n(ci, cell.len()));
        }

        let w = n.div_ceil(64).max(1);
        let mut search = CanonSearch {
            g: self,
            cells: &cells,
            cell_of_position: &cell_of_position,
            w,
            rows: vec![0u64; n * w],
            perm: Vec::with_capacity(n),
            used: vec![false; n],
            best_rows: vec![0u64; n * w],
            best_perm: Vec::new(),
        };
        // Seed with the first color-respecting assignment, then search.
        search.seed();
        search.dfs(0, false);
        (search.best_rows, search.best_perm)
    }

    /// Stable vertex colors from iterated neighborhood refinement. Color
    /// ids depend only on the isomorphism class: they are ranks of sorted
    /// label-independent signatures.
    fn refined_colors(&self) -> Vec<usize> {
        let n = self.order();
        let mut degrees: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut uniq = degrees.clone();
        uniq.sort_unstable();
        uniq.dedup();
        let mut colors: Vec<usize> =
            degrees.drain(..).map(|d| uniq.binary_search(&d).unwrap()).collect();
        let mut classes = uniq.len();
        loop {
            let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nc: Vec<usize> = self.neighbors(v).map(|u| colors[u]).collect();
                    nc.sort_unstable();
                    (colors[v], nc)
                })
                .collect();
            let mut uniq_sigs = sigs.clone();
            uniq_sigs.sort_unstable();
            uniq_sigs.dedup();
            if uniq_sigs.len() == classes {
                return colors;
            }
            classes = uniq_sigs.len();
            colors = sigs
                .drain(..)
                .map(|s| uniq_sigs.binary_search(&s).unwrap())
                .collect();
        }
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    cells: &'a [Vec<usize>],
    cell_of_position: &'a [usize],
    w: usize,
    rows: Vec<u64>,
    perm: Vec<usize>,
    used: Vec<bool>,
    best_rows: Vec<u64>,
    best_perm: Vec<usize>,
}

impl CanonSearch<'_> {
    fn seed(&mut self) {
        let n = self.g.order();
        let mut perm = Vec::with_capacity(n);
        for cell in self.cells {
            perm.extend_from_slice(cell);
        }
        for k in 0..n {
            let row = self.row_bits(k, perm[k], &perm);
            self.best_rows[k * self.w..(k + 1) * self.w].copy_from_slice(&row);
        }
        self.best_perm = perm;
    }

    fn row_bits(&self, k: usize, v: usize, perm: &[usize]) -> Vec<u64> {
        let mut row = vec![0u64; self.w];
        for (i, &u) in perm.iter().enumerate().take(k) {
            if self.g.has_edge(u, v) {
                row[i / 64] |= 1 << (63 - (i % 64));
            }
        }
        row
    }

    /// Returns true if the best assignment was replaced inside this subtree.
    fn dfs(&mut self, k: usize, ahead: bool) -> bool {
        let n = self.g.order();
        if k == n {
            if ahead {
                self.best_rows.copy_from_slice(&self.rows);
                self.best_perm = self.perm.clone();
                return true;
            }
            return false;
        }
        let mut ahead = ahead;
        let mut replaced = false;
        let cell = self.cell_of_position[k];
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.used[v] {
                continue;
            }
            let row = self.row_bits(k, v, &self.perm);
            let mut child_ahead = ahead;
            if !child_ahead {
                match row.as_slice().cmp(&self.best_rows[k * self.w..(k + 1) * self.w]) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Greater => child_ahead = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
            self.rows[k * self.w..(k + 1) * self.w].copy_from_slice(&row);
            self.perm.push(v);
            self.used[v] = true;
            if self.dfs(k + 1, child_ahead) {
                replaced = true;
                // The new best runs through this node's prefix, so later
                // siblings must be compared afresh.
                ahead = false;
            }
            self.used[v] = false;
            self.perm.pop();
        }
        replaced
    }
}
