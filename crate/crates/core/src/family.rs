//! Hypergraphs, the G-intersection predicate, neighborhood hypergraphs, cover
//! numbers and the clique-based extremal constructions.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::combinatorics::KSubsets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A finite list of distinct edges over `{0..ground_n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    ground_n: usize,
    edges: Vec<VertexSet>,
    uniform_k: Option<usize>,
}

impl Hypergraph {
    /// Validates range, distinctness and (if given) uniformity. A k-uniform
    /// family with `k >= 1` cannot contain the empty edge.
    pub fn new(ground_n: usize, edges: Vec<VertexSet>, uniform_k: Option<usize>) -> Result<Self> {
        if ground_n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "ground set size {ground_n} exceeds {MAX_VERTICES}"
            )));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for &e in &edges {
            if !e.within(ground_n) {
                return Err(Error::invalid(format!(
                    "edge {e} has a vertex outside 0..{ground_n}"
                )));
            }
            if let Some(k) = uniform_k {
                if e.len() != k {
                    return Err(Error::invalid(format!(
                        "edge {e} has {} vertices in a {k}-uniform family",
                        e.len()
                    )));
                }
            }
            if !seen.insert(e) {
                return Err(Error::invalid(format!("duplicate edge {e}")));
            }
        }
        Ok(Hypergraph {
            ground_n,
            edges,
            uniform_k,
        })
    }

    /// Like [`Hypergraph::new`] but silently drops repeated edges, keeping the
    /// first occurrence.
    pub fn new_dedup(
        ground_n: usize,
        edges: impl IntoIterator<Item = VertexSet>,
        uniform_k: Option<usize>,
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        let edges = edges.into_iter().filter(|e| seen.insert(*e)).collect();
        Hypergraph::new(ground_n, edges, uniform_k)
    }

    // constructions below only ever produce valid edges
    fn from_trusted(ground_n: usize, edges: Vec<VertexSet>, uniform_k: Option<usize>) -> Self {
        debug_assert!(Hypergraph::new(ground_n, edges.clone(), uniform_k).is_ok());
        Hypergraph {
            ground_n,
            edges,
            uniform_k,
        }
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn uniform_k(&self) -> Option<usize> {
        self.uniform_k
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.contains(&e)
    }

    pub fn edge_set(&self) -> HashSet<VertexSet> {
        self.edges.iter().copied().collect()
    }

    /// Edges containing every vertex of `y`. With a singleton this is the
    /// restriction `H_v`; applied to a neighborhood hypergraph it gives `F_v`.
    pub fn containing_all(&self, y: VertexSet) -> Hypergraph {
        let edges = self.edges.iter().copied().filter(|e| y.is_subset(*e)).collect();
        Hypergraph::from_trusted(self.ground_n, edges, self.uniform_k)
    }

    pub fn containing(&self, v: usize) -> Hypergraph {
        self.containing_all(VertexSet::singleton(v))
    }

    /// Parses the hypergraph text format: header `n m k` (`k = 0` for a
    /// non-uniform family), then `m` lines of whitespace-separated vertex ids.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::invalid("hypergraph file is empty"))?;
        let header = parse_ids(header, line_no)?;
        let [n, m, k] = header[..] else {
            return Err(Error::invalid(format!(
                "line {line_no}: header must be \"n m k\""
            )));
        };
        if n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "line {line_no}: n = {n} exceeds {MAX_VERTICES}"
            )));
        }

        let mut edges = Vec::with_capacity(m);
        for (line_no, line) in lines {
            let ids = parse_ids(line, line_no)?;
            let mut edge = VertexSet::EMPTY;
            for v in ids {
                if v >= n {
                    return Err(Error::invalid(format!(
                        "line {line_no}: vertex {v} outside 0..{n}"
                    )));
                }
                if edge.contains(v) {
                    return Err(Error::invalid(format!(
                        "line {line_no}: vertex {v} repeated"
                    )));
                }
                edge.insert(v);
            }
            edges.push(edge);
        }
        if edges.len() != m {
            return Err(Error::invalid(format!(
                "header declares {m} edges but {} were given",
                edges.len()
            )));
        }
        Hypergraph::new(n, edges, (k > 0).then_some(k))
    }

    /// Renders the hypergraph text format.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {}\n",
            self.ground_n,
            self.edges.len(),
            self.uniform_k.unwrap_or(0)
        );
        for e in &self.edges {
            let ids: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", ids.join(" "));
        }
        out
    }
}

fn parse_ids(line: &str, line_no: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| {
                Error::invalid(format!("line {line_no}: expected a vertex id, got {tok:?}"))
            })
        })
        .collect()
}

/// Whether `x` and `y` meet or are joined by an edge of `g`.
pub fn g_intersects(g: &Graph, x: VertexSet, y: VertexSet) -> Result<bool> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::invalid("G-intersection is undefined for empty sets"));
    }
    Ok(g_intersects_unchecked(g, x, y))
}

// shared vertex, or an edge of g with one end in each set
#[inline]
pub(crate) fn g_intersects_unchecked(g: &Graph, x: VertexSet, y: VertexSet) -> bool {
    x.intersects(y) || x.iter().any(|v| g.neighbors(v).intersects(y))
}

/// Answers "does any stored set fit inside `d`?" by walking a trie whose
/// levels follow vertices in decreasing order of frequency.
///
/// Frequent vertices sit near the root, so a query that excludes them is cut
/// off after a few steps. That is the common case for clique-centred families.
pub(crate) struct SubsetIndex {
    // rank[v] = position of v in the frequency order
    rank: [u8; MAX_VERTICES],
    nodes: Vec<TrieNode>,
}

#[derive(Default)]
struct TrieNode {
    terminal: Option<VertexSet>,
    children: Vec<(u8, u32)>,
}

impl SubsetIndex {
    pub(crate) fn build(sets: &[VertexSet]) -> Self {
        let mut freq = [0usize; MAX_VERTICES];
        for s in sets {
            for v in s.iter() {
                freq[v] += 1;
            }
        }
        let mut order: Vec<usize> = (0..MAX_VERTICES).collect();
        order.sort_by(|&a, &b| freq[b].cmp(&freq[a]).then(a.cmp(&b)));
        let mut rank = [0u8; MAX_VERTICES];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r as u8;
        }

        let mut index = SubsetIndex {
            rank,
            nodes: vec![TrieNode::default()],
        };
        let mut key = Vec::with_capacity(MAX_VERTICES);
        for &s in sets {
            key.clear();
            key.extend(s.iter().map(|v| index.rank[v]));
            key.sort_unstable();
            let mut node = 0usize;
            for &r in &key {
                node = match index.nodes[node].children.iter().find(|(c, _)| *c == r) {
                    Some(&(_, child)) => child as usize,
                    None => {
                        let child = index.nodes.len();
                        index.nodes.push(TrieNode::default());
                        index.nodes[node].children.push((r, child as u32));
                        child
                    }
                };
            }
            index.nodes[node].terminal = Some(s);
        }
        index
    }

    /// Some stored set contained in `d`, if one exists.
    pub(crate) fn subset_of(&self, d: VertexSet) -> Option<VertexSet> {
        let mut allowed = [false; MAX_VERTICES];
        for v in d.iter() {
            allowed[self.rank[v] as usize] = true;
        }
        self.search(0, &allowed)
    }

    fn search(&self, node: usize, allowed: &[bool; MAX_VERTICES]) -> Option<VertexSet> {
        let node = &self.nodes[node];
        if node.terminal.is_some() {
            return node.terminal;
        }
        node.children
            .iter()
            .filter(|(r, _)| allowed[*r as usize])
            .find_map(|&(_, child)| self.search(child as usize, allowed))
    }
}

/// A pair of edges of `h` that fails to G-intersect, if any.
pub fn find_violation(g: &Graph, h: &Hypergraph) -> Option<(VertexSet, VertexSet)> {
    find_violation_against(g, h.edges(), h.edges())
}

// Checks every query edge against every member (members must include the
// queries for a full check of the union).
fn find_violation_against(
    g: &Graph,
    members: &[VertexSet],
    queries: &[VertexSet],
) -> Option<(VertexSet, VertexSet)> {
    let index = SubsetIndex::build(members);
    let all = g.vertices();
    queries.iter().find_map(|&q| {
        index
            .subset_of(all - g.closed_neighborhood(q))
            .map(|bad| (q, bad))
    })
}

/// Whether every pair of edges of `h` G-intersects. The empty family is
/// vacuously G-intersecting.
pub fn is_g_intersecting(g: &Graph, h: &Hypergraph) -> bool {
    find_violation(g, h).is_none()
}

/// Direct quadratic check over all unordered pairs.
pub fn is_g_intersecting_pairwise(g: &Graph, h: &Hypergraph) -> bool {
    let edges = h.edges();
    edges.iter().enumerate().all(|(i, &x)| {
        edges[i + 1..]
            .iter()
            .all(|&y| !x.is_empty() && !y.is_empty() && g_intersects_unchecked(g, x, y))
    })
}

/// `F = { N(h) : h in H }` with repeated neighborhoods collapsed.
pub fn neighborhood_hypergraph(g: &Graph, h: &Hypergraph) -> Hypergraph {
    let mut seen = HashSet::with_capacity(h.len());
    let edges = h
        .edges()
        .iter()
        .map(|&e| g.closed_neighborhood(e))
        .filter(|f| seen.insert(*f))
        .collect();
    Hypergraph::from_trusted(h.ground_n().max(g.n()), edges, None)
}

/// Whether every edge of `h` meets every edge of its neighborhood hypergraph.
///
/// This holds for every G-intersecting family; it is computed from the
/// materialized neighborhood hypergraph rather than from the graph directly.
pub fn check_cross_condition(g: &Graph, h: &Hypergraph) -> bool {
    let f = neighborhood_hypergraph(g, h);
    let index = SubsetIndex::build(h.edges());
    let all = VertexSet::full(f.ground_n());
    f.edges()
        .iter()
        .all(|&nb| index.subset_of(all - nb).is_none())
}

/// Cover number `tau(h)` and one minimum cover.
///
/// Branch-and-bound: branch on the vertices of a smallest uncovered edge,
/// prune with a greedy packing of pairwise disjoint uncovered edges.
pub fn cover_number(h: &Hypergraph) -> Result<(usize, VertexSet)> {
    if h.edges().iter().any(|e| e.is_empty()) {
        return Err(Error::invalid("hypergraph has an empty edge, so no cover exists"));
    }
    let edges = h.edges();
    let mut best = greedy_cover(edges);
    search_cover(edges, VertexSet::EMPTY, &mut best);
    Ok((best.len(), best))
}

fn greedy_cover(edges: &[VertexSet]) -> VertexSet {
    let mut cover = VertexSet::EMPTY;
    loop {
        let uncovered: Vec<VertexSet> = edges.iter().copied().filter(|e| !e.intersects(cover)).collect();
        if uncovered.is_empty() {
            return cover;
        }
        let mut freq = [0usize; MAX_VERTICES];
        for e in &uncovered {
            for v in e.iter() {
                freq[v] += 1;
            }
        }
        let v = (0..MAX_VERTICES).max_by_key(|&v| (freq[v], std::cmp::Reverse(v))).unwrap();
        cover.insert(v);
    }
}

fn search_cover(edges: &[VertexSet], chosen: VertexSet, best: &mut VertexSet) {
    let uncovered: Vec<VertexSet> = edges.iter().copied().filter(|e| !e.intersects(chosen)).collect();
    if uncovered.is_empty() {
        if chosen.len() < best.len() {
            *best = chosen;
        }
        return;
    }
    // any cover needs a distinct vertex for each of a family of disjoint edges
    let mut packed = VertexSet::EMPTY;
    let mut packing = 0;
    let mut by_size = uncovered.clone();
    by_size.sort_by_key(|e| e.len());
    for e in &by_size {
        if !e.intersects(packed) {
            packed = packed | *e;
            packing += 1;
        }
    }
    if chosen.len() + packing >= best.len() {
        return;
    }
    let branch_edge = by_size[0];
    for v in branch_edge {
        let mut next = chosen;
        next.insert(v);
        search_cover(edges, next, best);
    }
}

/// `H_K`: every k-subset of the vertex set meeting the clique `K`.
pub fn build_clique_family(g: &Graph, clique: VertexSet, k: usize) -> Result<Hypergraph> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::invalid(format!("k = {k} must satisfy 1 <= k <= n = {n}")));
    }
    if !clique.within(n) {
        return Err(Error::invalid(format!("clique {clique} is outside 0..{n}")));
    }
    if !g.is_clique(clique) {
        return Err(Error::invalid(format!("{clique} is not a clique of the graph")));
    }
    let edges = KSubsets::new(n, k)?.filter(|x| x.intersects(clique)).collect();
    Ok(Hypergraph::from_trusted(n, edges, Some(k)))
}

/// Clique used by the cycle construction.
pub const CYCLE_CLIQUE: [usize; 2] = [1, 2];
/// Pair whose supersets are added to the clique family.
pub const CYCLE_EXTRA_PAIR: [usize; 2] = [0, 3];

/// The cycle family on `C_n`: every k-set meeting `{1,2}`, plus every k-set
/// containing `{0,3}`, in lexicographic order.
pub fn build_cycle_extremal(n: usize, k: usize) -> Result<Hypergraph> {
    if n < 6 {
        return Err(Error::invalid(format!("cycle construction needs n >= 6, got {n}")));
    }
    if k < 2 || k > n {
        return Err(Error::invalid(format!("cycle construction needs 2 <= k <= n, got k = {k}")));
    }
    if n > MAX_VERTICES {
        return Err(Error::invalid(format!("n = {n} exceeds {MAX_VERTICES}")));
    }
    let clique = VertexSet::from(CYCLE_CLIQUE);
    let pair = VertexSet::from(CYCLE_EXTRA_PAIR);
    let edges = KSubsets::new(n, k)?
        .filter(|x| x.intersects(clique) || pair.is_subset(*x))
        .collect();
    Ok(Hypergraph::from_trusted(n, edges, Some(k)))
}

/// Greedy lower-bound construction around a clique `K`.
///
/// Starts from `H_K`. For each pair `{u,v}` of `N(K) \ K` in lexicographic
/// order whose closed neighborhood covers `K`, tries adding every k-set that
/// contains the pair and avoids `K`; the batch is kept only if the family
/// stays G-intersecting. The result is a valid family, not necessarily a
/// maximum one.
pub fn augment_clique_family(g: &Graph, clique: VertexSet, k: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(Error::invalid(format!("augmentation needs k >= 2, got {k}")));
    }
    let base = build_clique_family(g, clique, k)?;
    let n = g.n();
    let outer = g.closed_neighborhood(clique) - clique;
    let outer_list = outer.to_vec();

    let mut edges = base.edges;
    let mut present: HashSet<VertexSet> = edges.iter().copied().collect();
    for (i, &u) in outer_list.iter().enumerate() {
        for &v in &outer_list[i + 1..] {
            let pair = VertexSet::from([u, v]);
            if !clique.is_subset(g.closed_neighborhood(pair)) {
                continue;
            }
            let batch: Vec<VertexSet> = KSubsets::new(n, k)?
                .filter(|x| pair.is_subset(*x) && !x.intersects(clique) && !present.contains(x))
                .collect();
            if batch.is_empty() {
                continue;
            }
            let mut trial = edges.clone();
            trial.extend_from_slice(&batch);
            if find_violation_against(g, &trial, &batch).is_none() {
                present.extend(batch.iter().copied());
                edges = trial;
            }
        }
    }
    Ok(Hypergraph::from_trusted(n, edges, Some(k)))
}
