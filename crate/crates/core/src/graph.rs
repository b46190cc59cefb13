//! Simple undirected graphs over dense vertex ids and the basic
//! independent-set predicates.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    OutOfRangeVertex { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("header declares {declared} edges but {found} edge lines were read")]
    EdgeCountMismatch { declared: usize, found: usize },
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Wraps a vector that is already sorted and duplicate-free.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_bitset(&self, capacity: usize) -> BitSet {
        BitSet::from_iter_with_capacity(capacity, self.iter())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.iter().any(|v| other.contains(v))
    }

    /// Applies an id map, e.g. from an induced subgraph back to its parent.
    pub fn map(&self, ids: &[usize]) -> VertexSet {
        VertexSet::new(self.iter().map(|v| ids[v]))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted ascending, so `has_edge` is a binary search and
/// every traversal is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Graph::from_edges(n, edges.iter().copied())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRangeVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(Graph { adj, m: m2 / 2 })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("valid by construction")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid by construction")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid by construction")
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid by construction")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n()
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::new(self.adj[v].iter().copied().chain(std::iter::once(v)))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        match set.as_slice().last() {
            Some(&v) if v >= self.n() => Err(GraphError::OutOfRangeVertex { vertex: v, n: self.n() }),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::OutOfRangeVertex { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Induced subgraph on `keep` (any order; duplicates ignored).
    pub fn induced_subgraph(&self, keep: &VertexSet) -> InducedSubgraph {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = keep
            .iter()
            .map(|v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        InducedSubgraph {
            graph: Graph { adj, m },
            original_ids: keep.as_slice().to_vec(),
        }
    }

    /// `G - S` for an arbitrary vertex set.
    pub fn remove_vertices(&self, remove: &VertexSet) -> InducedSubgraph {
        let keep = VertexSet::from_sorted(self.vertices().filter(|&v| !remove.contains(v)).collect());
        self.induced_subgraph(&keep)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(off + other.n(), edges).expect("valid by construction")
    }

    /// Appends `count` vertices adjacent to everything, including each other.
    pub fn with_universal_vertices(&self, count: usize) -> Graph {
        let n = self.n();
        let total = n + count;
        let extra = (n..total).flat_map(|u| (0..total).filter(move |&v| v != u).map(move |v| (u, v)));
        Graph::from_edges(total, self.edges().chain(extra)).expect("valid by construction")
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("valid by construction")
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines `u v`.
    /// Lines starting with `#` and blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 0,
            message: "missing `n m` header".into(),
        })?;
        let (n, declared) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(declared);
        for (line, l) in lines {
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != declared {
            return Err(GraphError::EdgeCountMismatch {
                declared,
                found: edges.len(),
            });
        }
        Graph::new(n, &edges)
    }

    /// Serializes to the edge-list format. Output is canonical: edges are
    /// written once each with `u < v`, in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line,
            message: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line,
            message: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(GraphError::Parse {
            line,
            message: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// An induced subgraph together with the ids its vertices had in the parent.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original_ids[new] == old`.
    pub original_ids: Vec<usize>,
}

impl InducedSubgraph {
    pub fn to_original(&self, set: &VertexSet) -> VertexSet {
        set.map(&self.original_ids)
    }
}

pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::new(n, edges)
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<bool, GraphError> {
    g.check_set(s)?;
    Ok(s.iter().all(|u| g.neighbors(u).iter().all(|&w| !s.contains(w))))
}

/// Whether every vertex of `targets` lies in `s` or has a neighbor in `s`.
pub fn dominates(g: &Graph, s: &VertexSet, targets: &VertexSet) -> Result<bool, GraphError> {
    g.check_set(s)?;
    g.check_set(targets)?;
    Ok(targets
        .iter()
        .all(|t| s.contains(t) || g.neighbors(t).iter().any(|&w| s.contains(w))))
}

/// `N[S]`.
pub fn closed_neighborhood_of_set(g: &Graph, s: &VertexSet) -> VertexSet {
    VertexSet::new(s.iter().flat_map(|v| g.neighbors(v).iter().copied().chain(std::iter::once(v))))
}

/// `G - N[S]`, with the id map back into `G`.
pub fn remove_closed_neighborhood(g: &Graph, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
    g.check_set(s)?;
    Ok(g.remove_vertices(&closed_neighborhood_of_set(g, s)))
}

/// Whether `s` is an inclusion-maximal independent set of `g`.
pub fn is_maximal_independent(g: &Graph, s: &VertexSet) -> Result<bool, GraphError> {
    if !is_independent(g, s)? {
        return Ok(false);
    }
    Ok(g.vertices()
        .all(|v| s.contains(v) || g.neighbors(v).iter().any(|&w| s.contains(w))))
}
