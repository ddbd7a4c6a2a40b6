use std::collections::HashMap;

use crate::combinatorics::{binomial, KSubsets};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default cap on the number of k-subsets the solver will materialize.
pub const DEFAULT_VERTEX_BUDGET: usize = 100_000;

/// Word-packed row of bits over subset ids.
pub(crate) type Row = Vec<u64>;

pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

#[inline]
pub(crate) fn test_bit(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub(crate) fn set_bit(row: &mut [u64], i: usize) {
    row[i / 64] |= 1u64 << (i % 64);
}

#[inline]
pub(crate) fn clear_bit(row: &mut [u64], i: usize) {
    row[i / 64] &= !(1u64 << (i % 64));
}

#[inline]
pub(crate) fn popcount(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn popcount_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

/// Graph on the k-subsets of `{0..n-1}`: two subsets are adjacent exactly
/// when they fail to G-intersect. Independent sets are G-intersecting families.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    n: usize,
    k: usize,
    sets: Vec<VertexSet>,
    index: HashMap<VertexSet, usize>,
    adj: Vec<Row>,
}

impl ConflictGraph {
    /// Builds the conflict graph, refusing when `C(n,k)` exceeds `budget`.
    pub fn build(g: &Graph, k: usize, budget: usize) -> Result<Self> {
        let n = g.n();
        if k == 0 || k > n {
            return Err(Error::invalid(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
        }
        let count = binomial(n as u64, k as u64);
        if count > budget.into() {
            return Err(Error::Capacity {
                n,
                k,
                count: count.to_string(),
                budget,
            });
        }
        let sets: Vec<VertexSet> = KSubsets::new(n, k)?.collect();
        let len = sets.len();
        let words = words_for(len);
        let neighborhoods: Vec<VertexSet> = sets.iter().map(|&s| g.closed_neighborhood(s)).collect();
        let mut adj = vec![vec![0u64; words]; len];
        for i in 0..len {
            for j in i + 1..len {
                if !sets[j].intersects(neighborhoods[i]) {
                    set_bit(&mut adj[i], j);
                    set_bit(&mut adj[j], i);
                }
            }
        }
        let index = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(ConflictGraph {
            n,
            k,
            sets,
            index,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `C(n,k)`.
    pub fn num_sets(&self) -> usize {
        self.sets.len()
    }

    /// Subset with canonical id `i` (its position in lexicographic order).
    pub fn set(&self, i: usize) -> VertexSet {
        self.sets[i]
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn id_of(&self, s: VertexSet) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn conflicts(&self, i: usize, j: usize) -> bool {
        test_bit(&self.adj[i], j)
    }

    pub fn degree(&self, i: usize) -> usize {
        popcount(&self.adj[i])
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        ones(&self.adj[i])
    }

    pub fn edge_count(&self) -> usize {
        (0..self.num_sets()).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.adj[i]
    }

    pub(crate) fn words(&self) -> usize {
        words_for(self.sets.len())
    }

    /// Whether the ids form an independent set.
    pub fn is_independent(&self, ids: &[usize]) -> bool {
        ids.iter()
            .enumerate()
            .all(|(a, &i)| ids[a + 1..].iter().all(|&j| i != j && !self.conflicts(i, j)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_has_no_conflicts() {
        for k in 1..=4 {
            let cg = ConflictGraph::build(&Graph::complete(6).unwrap(), k, 1000).unwrap();
            assert_eq!(cg.edge_count(), 0);
        }
    }

    #[test]
    fn empty_graph_pairs() {
        let cg = ConflictGraph::build(&Graph::empty(4).unwrap(), 2, 1000).unwrap();
        assert_eq!(cg.edge_count(), 3);
        for (a, b) in [([0, 1], [2, 3]), ([0, 2], [1, 3]), ([0, 3], [1, 2])] {
            let i = cg.id_of(a.into()).unwrap();
            let j = cg.id_of(b.into()).unwrap();
            assert!(cg.conflicts(i, j) && cg.conflicts(j, i));
        }
    }

    #[test]
    fn cycle_singletons() {
        let cg = ConflictGraph::build(&Graph::cycle(6).unwrap(), 1, 1000).unwrap();
        assert_eq!(cg.neighbors(0).collect::<Vec<_>>(), vec![2, 3, 4]);
        for i in 0..6 {
            assert!(!cg.conflicts(i, i));
        }
    }

    #[test]
    fn ids_follow_lexicographic_order() {
        let cg = ConflictGraph::build(&Graph::path(5).unwrap(), 3, 1000).unwrap();
        assert_eq!(cg.num_sets(), 10);
        assert_eq!(cg.set(0), VertexSet::from([0, 1, 2]));
        assert_eq!(cg.id_of([2, 3, 4].into()), Some(9));
    }

    #[test]
    fn budget_is_enforced() {
        let err = ConflictGraph::build(&Graph::cycle(20).unwrap(), 5, 1000).unwrap_err();
        match err {
            Error::Capacity { count, budget, .. } => {
                assert_eq!(count, "15504");
                assert_eq!(budget, 1000);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(err_code(ConflictGraph::build(&Graph::cycle(6).unwrap(), 7, 1000)) == "bad_input");
    }

    fn err_code(r: Result<ConflictGraph>) -> &'static str {
        r.unwrap_err().code()
    }
}
