#![allow(dead_code)]

use gintersect::{Hypergraph, VertexSet};

/// Smallest vertex set meeting every edge, by trying all subsets in order of size.
pub fn brute_force_cover(h: &Hypergraph) -> usize {
    let n = h.ground_n();
    assert!(n <= 16, "brute force cover is for tiny ground sets");
    let mut best = usize::MAX;
    for mask in 0u64..(1 << n) {
        let c = VertexSet::from_bits(mask);
        if c.len() < best && h.edges().iter().all(|e| e.intersects(c)) {
            best = c.len();
        }
    }
    best
}

/// Minimum vertex cover of a graph given as adjacency bitmasks over `<= 64` vertices.
pub fn min_vertex_cover(adj: &[u64]) -> usize {
    fn go(adj: &[u64], alive: u64) -> usize {
        // find an edge among alive vertices
        let mut alive_iter = alive;
        while alive_iter != 0 {
            let v = alive_iter.trailing_zeros() as usize;
            alive_iter &= alive_iter - 1;
            let nb = adj[v] & alive;
            if nb != 0 {
                // either v is in the cover, or all its live neighbours are
                let take_v = 1 + go(adj, alive & !(1 << v));
                let take_nb = nb.count_ones() as usize + go(adj, alive & !nb & !(1 << v));
                return take_v.min(take_nb);
            }
        }
        0
    }
    let alive = if adj.len() == 64 { u64::MAX } else { (1u64 << adj.len()) - 1 };
    go(adj, alive)
}
