//! Exact `N(G,k)`: the size of a largest G-intersecting family of k-subsets.
//!
//! Two subsets that fail to G-intersect are joined in the [`ConflictGraph`];
//! a G-intersecting family is exactly an independent set there. For sparse
//! `G` almost every pair of k-sets touches, so the conflict graph is sparse
//! and maximum independent set search on it is the main engine.

mod conflict;
mod exact;
mod naive;
mod structure;
mod sweep;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::combinatorics::{binomial, KSubsets};
use crate::error::{Error, Result};
use crate::family::{find_violation, Hypergraph, SubsetIndex};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use conflict::{ConflictGraph, DEFAULT_VERTEX_BUDGET};
pub use naive::NAIVE_LIMIT;
pub use structure::{verify_extremal_structure, StructureReport};
pub use sweep::{sweep_cycle, SweepMode, SweepRow, SWEEP_CSV_HEADER};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Search threads; `1` gives a fully deterministic run.
    pub workers: usize,
    /// Largest `C(n,k)` the conflict graph may have.
    pub budget: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            workers: 1,
            budget: DEFAULT_VERTEX_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    #[serde(rename = "wall_time_ms", serialize_with = "ser_millis")]
    pub wall_time: Duration,
}

fn ser_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

/// `N(G,k)` with one optimal family.
///
/// Invariants (checked before a result is returned): the witness is
/// G-intersecting, has exactly `value` edges, and no further k-set can be
/// added to it.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub n: usize,
    pub k: usize,
    pub value: usize,
    pub witness: Hypergraph,
    pub stats: SolveStats,
}

impl SolveResult {
    /// Witness edges as sorted id lists.
    pub fn witness_lists(&self) -> Vec<Vec<usize>> {
        self.witness.edges().iter().map(|e| e.to_vec()).collect()
    }
}

impl Serialize for SolveResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SolveResult", 6)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("value", &self.value.to_string())?;
        st.serialize_field("total_ksets", &binomial(self.n as u64, self.k as u64).to_string())?;
        st.serialize_field("witness", &self.witness_lists())?;
        st.serialize_field("stats", &self.stats)?;
        st.end()
    }
}

/// Exact `N(G,k)` by branch-and-bound on the conflict graph.
pub fn solve_exact(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let cg = ConflictGraph::build(g, k, opts.budget)?;
    solve_on(g, &cg, opts.workers.max(1), start)
}

/// Same as [`solve_exact`] on an already built conflict graph.
pub fn solve_conflict_graph(g: &Graph, cg: &ConflictGraph, opts: &SolveOptions) -> Result<SolveResult> {
    solve_on(g, cg, opts.workers.max(1), Instant::now())
}

fn solve_on(g: &Graph, cg: &ConflictGraph, workers: usize, start: Instant) -> Result<SolveResult> {
    let outcome = exact::max_independent_set(cg, workers);
    let edges: Vec<VertexSet> = outcome.ids.iter().map(|&i| cg.set(i)).collect();
    let result = SolveResult {
        n: g.n(),
        k: cg.k(),
        value: edges.len(),
        witness: Hypergraph::new(g.n(), edges, Some(cg.k()))?,
        stats: SolveStats {
            nodes: outcome.nodes,
            wall_time: start.elapsed(),
        },
    };
    check_result(g, &result)?;
    Ok(result)
}

/// Exhaustive oracle for tiny instances (`C(n,k) <= NAIVE_LIMIT`).
pub fn naive_solve(g: &Graph, k: usize) -> Result<SolveResult> {
    let start = Instant::now();
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    let count = binomial(n as u64, k as u64);
    if count > NAIVE_LIMIT.into() {
        return Err(Error::invalid(format!(
            "naive oracle is limited to C(n,k) <= {NAIVE_LIMIT}, got C({n},{k}) = {count}"
        )));
    }
    let outcome = naive::naive_max_family(g, k)?;
    let result = SolveResult {
        n,
        k,
        value: outcome.family.len(),
        witness: Hypergraph::new(n, outcome.family, Some(k))?,
        stats: SolveStats {
            nodes: outcome.nodes,
            wall_time: start.elapsed(),
        },
    };
    check_result(g, &result)?;
    Ok(result)
}

/// Certificate checks on a claimed optimum: validity, size and maximality.
/// Uses the graph directly, not the conflict graph the solver searched.
pub fn check_result(g: &Graph, result: &SolveResult) -> Result<()> {
    if let Some((x, y)) = find_violation(g, &result.witness) {
        return Err(Error::Invariant(format!("witness edges {x} and {y} do not G-intersect")));
    }
    if result.witness.len() != result.value {
        return Err(Error::Invariant(format!(
            "witness has {} edges but value is {}",
            result.witness.len(),
            result.value
        )));
    }
    if let Some(extra) = extension(g, &result.witness)? {
        return Err(Error::Invariant(format!("witness is not maximal: {extra} can be added")));
    }
    Ok(())
}

/// A k-set outside the family that G-intersects every member, if any.
pub fn extension(g: &Graph, family: &Hypergraph) -> Result<Option<VertexSet>> {
    let Some(k) = family.uniform_k() else {
        return Err(Error::invalid("maximality is only defined for uniform families"));
    };
    let members = family.edge_set();
    let index = SubsetIndex::build(family.edges());
    let all = g.vertices();
    for x in KSubsets::new(g.n(), k)? {
        if !members.contains(&x) && index.subset_of(all - g.closed_neighborhood(x)).is_none() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial_u128;

    fn exact(g: &Graph, k: usize) -> usize {
        solve_exact(g, k, &SolveOptions::default()).unwrap().value
    }

    #[test]
    fn empty_graph_matches_star() {
        for n in 4..=8 {
            let g = Graph::empty(n).unwrap();
            for k in 1..=n / 2 {
                let star = binomial_u128(n as u64 - 1, k as u64 - 1).unwrap() as usize;
                assert_eq!(exact(&g, k), star, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn complete_graph_takes_everything() {
        for n in 3..=7 {
            let g = Graph::complete(n).unwrap();
            for k in 1..=n {
                assert_eq!(exact(&g, k) as u128, binomial_u128(n as u64, k as u64).unwrap());
            }
        }
    }

    #[test]
    fn naive_examples() {
        assert_eq!(naive_solve(&Graph::empty(5).unwrap(), 2).unwrap().value, 4);
        assert_eq!(naive_solve(&Graph::complete(5).unwrap(), 2).unwrap().value, 10);
        let p4 = naive_solve(&Graph::path(4).unwrap(), 2).unwrap().value;
        assert!((3..=6).contains(&p4));
        assert_eq!(p4, 6);
        assert!(naive_solve(&Graph::cycle(10).unwrap(), 4).is_err());
    }

    #[test]
    fn single_thread_is_reproducible() {
        let g = Graph::cycle(9).unwrap();
        let a = solve_exact(&g, 3, &SolveOptions::default()).unwrap();
        let b = solve_exact(&g, 3, &SolveOptions::default()).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.stats.nodes, b.stats.nodes);
    }

    #[test]
    fn parallel_value_matches() {
        let g = Graph::cycle(10).unwrap();
        let one = solve_exact(&g, 3, &SolveOptions::default()).unwrap();
        for workers in [2, 3, 8] {
            let opts = SolveOptions { workers, ..Default::default() };
            assert_eq!(solve_exact(&g, 3, &opts).unwrap().value, one.value);
        }
    }

    #[test]
    fn rejects_bad_results() {
        let g = Graph::empty(6).unwrap();
        let witness = Hypergraph::new(6, vec![[0, 1].into(), [2, 3].into()], Some(2)).unwrap();
        let bogus = SolveResult {
            n: 6,
            k: 2,
            value: 2,
            witness,
            stats: SolveStats { nodes: 0, wall_time: Duration::ZERO },
        };
        assert_eq!(check_result(&g, &bogus).unwrap_err().code(), "invariant_failure");

        let witness = Hypergraph::new(6, vec![[0, 1].into(), [0, 2].into()], Some(2)).unwrap();
        let small = SolveResult { witness, ..bogus };
        let err = check_result(&g, &small).unwrap_err();
        assert!(err.to_string().contains("not maximal"), "{err}");
    }
}
