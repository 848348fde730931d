//! Exhaustive small-graph enumeration, one canonical representative per
//! isomorphism class, by sweeping all edge bitmasks and deduplicating on
//! canonical forms.

use std::collections::BTreeMap;

use crate::graph::Graph;

use super::CorpusError;

/// Largest order the built-in enumerator sweeps (2^21 masks at n = 7).
/// Larger corpora come from graph6 census files.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Connected-graph class counts for n = 1..=7, from the standard census.
pub const CONNECTED_CLASS_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

/// All connected graphs on n vertices up to isomorphism, ordered by
/// canonical form. Each entry is canonically labeled.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, CorpusError> {
    enumerate_graphs(n, true)
}

/// As [`enumerate_connected`], optionally keeping disconnected classes.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, CorpusError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(CorpusError::UnsupportedOrder { n, max: MAX_ENUMERATION_ORDER });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let full: u64 = (1u64 << n) - 1;

    let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        // Cheap adjacency words for the connectivity test.
        let mut adj = [0u64; MAX_ENUMERATION_ORDER];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        if connected_only && !words_connected(&adj[..n], full) {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        classes.entry(g.canonical_form()).or_insert(g);
    }
    Ok(classes.into_values().map(|g| g.canonical_graph()).collect())
}

fn words_connected(adj: &[u64], full: u64) -> bool {
    let mut visited = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut bits = frontier;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[v];
        }
        frontier = next & !visited;
        visited |= next;
    }
    visited == full
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn tiny_census() {
        assert_eq!(enumerate_connected(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected(2).unwrap().len(), 1);

        let n3 = enumerate_connected(3).unwrap();
        assert_eq!(n3.len(), 2);
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(n3.iter().any(|g| is_isomorphic(g, &p3)));
        assert!(n3.iter().any(|g| is_isomorphic(g, &k3)));
    }

    #[test]
    fn census_counts_through_n5() {
        for n in 1..=5 {
            assert_eq!(
                enumerate_connected(n).unwrap().len(),
                CONNECTED_CLASS_COUNTS[n - 1],
                "connected classes at n = {n}"
            );
        }
        // All graphs (including disconnected): 1, 2, 4, 11, 34.
        for (n, expect) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
            assert_eq!(enumerate_graphs(n, false).unwrap().len(), expect);
        }
    }

    #[test]
    fn pairwise_distinct_and_sorted() {
        let graphs = enumerate_connected(5).unwrap();
        let forms: Vec<Vec<u8>> = graphs.iter().map(Graph::canonical_form).collect();
        let mut sorted = forms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(forms, sorted);
    }

    #[test]
    fn out_of_range_orders_rejected() {
        assert!(matches!(enumerate_connected(8), Err(CorpusError::UnsupportedOrder { .. })));
        assert!(matches!(enumerate_connected(0), Err(CorpusError::UnsupportedOrder { .. })));
    }
}
