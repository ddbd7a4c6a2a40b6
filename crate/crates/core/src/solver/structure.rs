use num_bigint::BigUint;
use serde::Serialize;

use super::SolveResult;
use crate::bounds::{lemma1_threshold, lemma2_threshold, ser_big, theorem2_bound};
use crate::combinatorics::binomial;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// How a solved family relates to the clique structure of `G`.
///
/// Reports only: whether the theorem's regime applies to a concrete `(n,k)`
/// is unknowable, so nothing here is asserted.
#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub omega: usize,
    pub delta: usize,
    #[serde(serialize_with = "ser_sets")]
    pub maximum_cliques: Vec<VertexSet>,
    /// Maximum cliques `K` whose whole family `H_K` lies inside the witness.
    #[serde(serialize_with = "ser_sets")]
    pub qualifying_cliques: Vec<VertexSet>,
    pub any_qualifies: bool,
    /// Three-term bound; absent for `k = 1` where it is not defined.
    #[serde(serialize_with = "ser_opt_big")]
    pub theorem2_bound: Option<BigUint>,
    pub within_theorem2: Option<bool>,
    pub lemma1_ok: bool,
    pub lemma2_ok: bool,
}

fn ser_sets<S: serde::Serializer>(v: &[VertexSet], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_vec()))
}

fn ser_opt_big<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_big(v, s),
        None => s.serialize_none(),
    }
}

/// Tests each maximum clique `K` of `g` for `H_K` being contained in the
/// witness, and compares the value with the three-term bound.
pub fn verify_extremal_structure(g: &Graph, k: usize, result: &SolveResult) -> StructureReport {
    let (omega, cliques) = g.clique_number();
    let delta = g.max_degree();
    let n = g.n();
    let qualifying: Vec<VertexSet> = cliques
        .iter()
        .copied()
        .filter(|&clique| {
            // witness edges are distinct k-sets, so counting suffices
            let meeting = result.witness.edges().iter().filter(|e| e.intersects(clique)).count();
            let needed = binomial(n as u64, k as u64) - binomial((n - clique.len()) as u64, k as u64);
            BigUint::from(meeting) == needed
        })
        .collect();
    let bound = theorem2_bound(n as u64, k as u64, delta as u64, omega as u64).ok();
    StructureReport {
        omega,
        delta,
        any_qualifies: !qualifying.is_empty(),
        qualifying_cliques: qualifying,
        maximum_cliques: cliques,
        within_theorem2: bound.as_ref().map(|b| BigUint::from(result.value) <= *b),
        theorem2_bound: bound,
        lemma1_ok: lemma1_threshold(n as u64, delta as u64, omega as u64, k as u64),
        lemma2_ok: lemma2_threshold(n as u64, delta as u64, k as u64).unwrap_or(false),
    }
}
