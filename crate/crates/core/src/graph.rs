//! Simple undirected graphs on `{0..n-1}` with bitset adjacency.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Simple undirected graph. Immutable once built.
///
/// Invariants: `adj` is symmetric, loop-free and contained in `{0..n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("graph needs at least one vertex"));
    }
    if n > MAX_VERTICES {
        return Err(Error::invalid(format!(
            "n = {n} exceeds the supported maximum of {MAX_VERTICES} vertices"
        )));
    }
    Ok(())
}

impl Graph {
    /// Edgeless graph `E_n`.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Cycle `C_n`: `u ~ v` iff `u - v` is `1` or `n - 1` mod `n`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        check_order(n)?;
        Graph::from_edges(n, (1..n).map(|u| (u - 1, u)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = VertexSet::full(n);
        Ok(Graph {
            n,
            adj: (0..n).map(|v| full - VertexSet::singleton(v)).collect(),
        })
    }

    /// Builds a graph from vertex pairs. Duplicate edges are ignored.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) has a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::from_edges(n, edges.iter().copied())
    }

    /// Parses the edge-list text format: a header line `n m`, then `m` lines
    /// `u v`. Lines starting with `#` and blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::invalid("graph file is empty"))?;
        let header = parse_numbers(header, line_no)?;
        let [n, m] = header[..] else {
            return Err(Error::invalid(format!(
                "line {line_no}: header must be \"n m\""
            )));
        };

        let mut edges = Vec::with_capacity(m);
        for (line_no, line) in lines {
            let nums = parse_numbers(line, line_no)?;
            let [u, v] = nums[..] else {
                return Err(Error::invalid(format!(
                    "line {line_no}: edge must be \"u v\""
                )));
            };
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::invalid(format!(
                "header declares {m} edges but {} were given",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Maximum degree; zero for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| (set - VertexSet::singleton(v)).is_subset(self.adj[v]))
    }

    /// `N(X)`: `X` together with every vertex adjacent to a member of `X`.
    pub fn closed_neighborhood(&self, x: VertexSet) -> VertexSet {
        x.iter().fold(x, |acc, v| acc | self.adj[v])
    }

    /// Clique number together with every maximum clique, each listed once in
    /// increasing order of its sorted elements.
    ///
    /// Exhaustive branch-and-bound; intended for sparse desk-scale graphs and
    /// can be slow on large dense inputs.
    pub fn clique_number(&self) -> (usize, Vec<VertexSet>) {
        let mut best = 0;
        let mut found = Vec::new();
        self.extend_clique(VertexSet::EMPTY, self.vertices(), &mut best, &mut found);
        (best, found)
    }

    fn extend_clique(
        &self,
        clique: VertexSet,
        candidates: VertexSet,
        best: &mut usize,
        found: &mut Vec<VertexSet>,
    ) {
        if clique.len() + candidates.len() < *best {
            return;
        }
        if candidates.is_empty() {
            if clique.len() > *best {
                *best = clique.len();
                found.clear();
            }
            found.push(clique);
            return;
        }
        for v in candidates {
            // only extend with larger vertices so each clique is reached once
            let later = VertexSet::from_bits(candidates.bits() & !(u64::MAX >> (63 - v)));
            let mut next = clique;
            next.insert(v);
            self.extend_clique(next, later & self.adj[v], best, found);
        }
    }
}

fn parse_numbers(line: &str, line_no: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| {
                Error::invalid(format!("line {line_no}: expected a non-negative integer, got {tok:?}"))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.neighbors(0), VertexSet::from([1, 3]));
        let e5 = Graph::empty(5).unwrap();
        assert!((0..5).all(|v| e5.neighbors(v).is_empty()));
        let p = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!((0..3).map(|v| p.degree(v)).collect::<Vec<_>>(), vec![1, 2, 1]);
        assert_eq!(p, Graph::path(3).unwrap());
        assert!(Graph::cycle(7).unwrap().edges().len() == 7);
    }

    #[test]
    fn constructor_errors() {
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(Graph::from_edge_list(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edge_list(3, &[(1, 1)]).is_err());
        let dup = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::cycle(7).unwrap().max_degree(), 2);
        assert_eq!(Graph::empty(4).unwrap().max_degree(), 0);
        assert_eq!(Graph::complete(5).unwrap().max_degree(), 4);
    }

    #[test]
    fn clique_number_examples() {
        let (w, cliques) = Graph::cycle(6).unwrap().clique_number();
        assert_eq!(w, 2);
        assert_eq!(cliques.len(), 6);
        assert!(cliques.contains(&VertexSet::from([0, 5])));

        let (w, cliques) = Graph::complete(4).unwrap().clique_number();
        assert_eq!((w, cliques), (4, vec![VertexSet::from([0, 1, 2, 3])]));

        let (w, cliques) = Graph::empty(3).unwrap().clique_number();
        assert_eq!(w, 1);
        assert_eq!(
            cliques,
            vec![VertexSet::from([0]), VertexSet::from([1]), VertexSet::from([2])]
        );
    }

    #[test]
    fn clique_number_triangle_with_tail() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.clique_number(), (3, vec![VertexSet::from([0, 1, 2])]));
    }

    #[test]
    fn closed_neighborhood_examples() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(c6.closed_neighborhood(VertexSet::from([0])), VertexSet::from([5, 0, 1]));
        assert_eq!(c6.closed_neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.closed_neighborhood(VertexSet::from([2])), VertexSet::full(4));
    }

    #[test]
    fn parse_edge_list_format() {
        let text = "# a path\n4 3\n0 1\n# middle\n1 2\n2 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::path(4).unwrap());
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn parse_edge_list_errors() {
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 3\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n2 2\n").is_err());
        assert!(Graph::parse_edge_list("3\n").is_err());
    }
}
