//! Chordal graphs: Lex-BFS elimination orderings, clique trees, and linear
//! time recognition of well-covered, `W_k` and 1-extendable chordal graphs.
//!
//! Orderings are oriented so that the earlier neighbors of every vertex form
//! a clique. The Lex-BFS visit order has this property on chordal input, and
//! the last vertex of any such ordering is simplicial.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::verdict::{Certificate, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChordalError {
    /// The graph has the given chordless cycle of length at least 4.
    #[error("graph is not chordal; chordless cycle {0:?}")]
    NotChordal(Vec<usize>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectEliminationOrdering {
    pub order: Vec<usize>,
}

impl PerfectEliminationOrdering {
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Checks the defining property directly (quadratic in the degree).
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.order.len() != g.n() {
            return false;
        }
        let mut seen = vec![false; g.n()];
        if self.order.iter().any(|&v| v >= g.n() || std::mem::replace(&mut seen[v], true)) {
            return false;
        }
        let pos = self.positions();
        g.vertices().all(|v| {
            let earlier = VertexSet::new(g.neighbors(v).iter().copied().filter(|&u| pos[u] < pos[v]));
            g.is_clique(&earlier)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueTree {
    pub nodes: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexPartition {
    pub parts: Vec<VertexSet>,
    pub simplicial_counts: Vec<usize>,
}

/// Lex-BFS from vertex 0 with array-based partition refinement.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    // Blocks are contiguous ranges [start, end) of `order`.
    let mut block_of = vec![0usize; n];
    let mut blocks: Vec<(usize, usize)> = vec![(0, n)];
    let mut split_into: Vec<Option<usize>> = vec![None];
    let mut touched: Vec<usize> = Vec::new();
    for i in 0..n {
        let v = order[i];
        blocks[block_of[v]].0 += 1;
        for &w in g.neighbors(v) {
            if pos[w] <= i {
                continue;
            }
            let b = block_of[w];
            let nb = match split_into[b] {
                Some(nb) => nb,
                None => {
                    let start = blocks[b].0;
                    blocks.push((start, start));
                    split_into.push(None);
                    let nb = blocks.len() - 1;
                    split_into[b] = Some(nb);
                    touched.push(b);
                    nb
                }
            };
            // Swap `w` to the front of what remains of block `b`.
            let front = blocks[b].0;
            let u = order[front];
            order.swap(front, pos[w]);
            pos[u] = pos[w];
            pos[w] = front;
            blocks[b].0 += 1;
            blocks[nb].1 = blocks[b].0;
            block_of[w] = nb;
        }
        for b in touched.drain(..) {
            split_into[b] = None;
        }
    }
    order
}

/// Returns the first vertex `v` whose earlier neighbors are not a clique,
/// together with two non-adjacent earlier neighbors of it.
fn peo_violation(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // For each parent p: the pairs (v, x) requiring x ~ p.
    let mut need: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &v in order {
        let parent = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] < pos[v])
            .max_by_key(|&u| pos[u]);
        if let Some(p) = parent {
            for &x in g.neighbors(v) {
                if pos[x] < pos[p] {
                    need[p].push((v, x));
                }
            }
        }
    }
    let mut mark = vec![usize::MAX; n];
    let mut best: Option<(usize, usize, usize)> = None;
    for &p in order {
        for &u in g.neighbors(p) {
            mark[u] = p;
        }
        for &(v, x) in &need[p] {
            if mark[x] != p && best.is_none_or(|(bv, _, _)| pos[v] < pos[bv]) {
                best = Some((v, x, p));
            }
        }
    }
    best
}

/// Shortest `a`-`b` path avoiding `N[v]` except for `a` and `b`, closed into
/// a chordless cycle through `v`.
fn cycle_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &u in g.neighbors(v) {
        blocked[u] = u != a && u != b;
    }
    let mut prev = vec![usize::MAX; n];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            let mut path = vec![b];
            let mut y = b;
            while y != a {
                y = prev[y];
                path.push(y);
            }
            path.push(v);
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// A chordless cycle of length at least 4, if any.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let order = lex_bfs(g);
    let (v, x, p) = peo_violation(g, &order)?;
    if let Some(c) = cycle_through(g, v, x, p) {
        return Some(c);
    }
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(c) = cycle_through(g, v, a, b) {
                        return Some(c);
                    }
                }
            }
        }
    }
    unreachable!("a failed elimination ordering implies a chordless cycle")
}

/// A perfect elimination ordering, or a chordless cycle witnessing that none
/// exists.
pub fn lex_bfs_peo(g: &Graph) -> Result<PerfectEliminationOrdering, ChordalError> {
    let order = lex_bfs(g);
    match peo_violation(g, &order) {
        None => Ok(PerfectEliminationOrdering { order }),
        Some(_) => Err(ChordalError::NotChordal(
            find_chordless_cycle(g).expect("violation implies a cycle"),
        )),
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    peo_violation(g, &lex_bfs(g)).is_none()
}

fn check_peo(g: &Graph, peo: &PerfectEliminationOrdering) -> Result<(), ChordalError> {
    let valid_perm = peo.order.len() == g.n() && {
        let mut seen = vec![false; g.n()];
        peo.order.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
    };
    if !valid_perm {
        return Err(ChordalError::InvalidParameter("ordering is not a permutation".into()));
    }
    if peo_violation(g, &peo.order).is_some() {
        return Err(match find_chordless_cycle(g) {
            Some(c) => ChordalError::NotChordal(c),
            None => ChordalError::InvalidParameter("ordering is not a perfect elimination ordering".into()),
        });
    }
    Ok(())
}

/// Builds the clique tree (a forest on disconnected input) from `peo`.
pub fn clique_tree(g: &Graph, peo: &PerfectEliminationOrdering) -> Result<CliqueTree, ChordalError> {
    check_peo(g, peo)?;
    let pos = peo.positions();
    let n = g.n();
    let mut node_of = vec![usize::MAX; n];
    let mut earlier_len = vec![0usize; n];
    let mut nodes: Vec<Vec<usize>> = Vec::new();
    let mut edges = Vec::new();
    for &v in &peo.order {
        let earlier: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] < pos[v]).collect();
        earlier_len[v] = earlier.len();
        let Some(p) = earlier.iter().copied().max_by_key(|&u| pos[u]) else {
            node_of[v] = nodes.len();
            nodes.push(vec![v]);
            continue;
        };
        let np = node_of[p];
        if earlier.len() == earlier_len[p] + 1 && nodes[np].len() == earlier_len[p] + 1 {
            nodes[np].push(v);
            node_of[v] = np;
        } else {
            let mut c = earlier;
            c.push(v);
            node_of[v] = nodes.len();
            edges.push((np, nodes.len()));
            nodes.push(c);
        }
    }
    Ok(CliqueTree {
        nodes: nodes.into_iter().map(VertexSet::new).collect(),
        edges,
    })
}

/// How the simplices of a chordal graph sit relative to each other.
enum Simplices {
    Partition(SimplexPartition, Vec<VertexSet>),
    Conflict { vertex: usize, simplices: Vec<VertexSet> },
}

fn simplices(g: &Graph) -> Result<Simplices, ChordalError> {
    let peo = lex_bfs_peo(g)?;
    let tree = clique_tree(g, &peo)?;
    let n = g.n();
    let mut membership = vec![0usize; n];
    for node in &tree.nodes {
        for v in node.iter() {
            membership[v] += 1;
        }
    }
    // A vertex is simplicial iff it lies in exactly one maximal clique.
    let mut simplex_nodes: Vec<(VertexSet, VertexSet)> = tree
        .nodes
        .iter()
        .filter_map(|node| {
            let simp = VertexSet::new(node.iter().filter(|&v| membership[v] == 1));
            (!simp.is_empty()).then(|| (node.clone(), simp))
        })
        .collect();
    simplex_nodes.sort();
    let mut covered = vec![0usize; n];
    for (node, _) in &simplex_nodes {
        for v in node.iter() {
            covered[v] += 1;
        }
    }
    if let Some(vertex) = covered.iter().position(|&c| c != 1) {
        let simplices = simplex_nodes
            .iter()
            .filter(|(node, _)| node.contains(vertex))
            .map(|(node, _)| node.clone())
            .collect();
        return Ok(Simplices::Conflict { vertex, simplices });
    }
    let simplicial_counts = simplex_nodes.iter().map(|(_, s)| s.len()).collect();
    let (parts, simplicial) = simplex_nodes.into_iter().unzip();
    Ok(Simplices::Partition(SimplexPartition { parts, simplicial_counts }, simplicial))
}

/// The partition of `V(G)` into simplices, which exists exactly when the
/// chordal graph `G` is well-covered.
pub fn simplex_partition(g: &Graph) -> Result<Option<SimplexPartition>, ChordalError> {
    Ok(match simplices(g)? {
        Simplices::Partition(p, _) => Some(p),
        Simplices::Conflict { .. } => None,
    })
}

/// `W_k` for chordal `G`: a simplex partition in which every simplex has at
/// least `k` simplicial vertices.
pub fn chordal_is_wk(g: &Graph, k: usize) -> Result<Verdict, ChordalError> {
    if k == 0 {
        return Err(ChordalError::InvalidParameter("W_k needs k >= 1".into()));
    }
    Ok(match simplices(g)? {
        Simplices::Conflict { vertex, simplices } => Verdict::no(Certificate::SimplexConflict { vertex, simplices }),
        Simplices::Partition(p, simplicial) => {
            match p.simplicial_counts.iter().position(|&c| c < k) {
                Some(i) => Verdict::no(Certificate::SimplexShortfall {
                    part: p.parts[i].clone(),
                    simplicial: simplicial[i].clone(),
                    required: k,
                }),
                None => Verdict::yes_with(Certificate::SimplexPartition { parts: p.parts }),
            }
        }
    })
}

/// Well-coveredness of a chordal graph, which is `W_1`.
pub fn chordal_is_well_covered(g: &Graph) -> Result<Verdict, ChordalError> {
    chordal_is_wk(g, 1)
}

/// 1-extendability of a chordal graph.
///
/// Repeatedly takes the last remaining vertex `v` of the ordering, which is
/// simplicial in what remains, and cuts off `N[v]` as the next part. The
/// graph is 1-extendable exactly when no vertex of a part is adjacent to all
/// of a later part; then the parts are `alpha(G)` maximal cliques. Otherwise
/// the offending vertex is in no maximum independent set.
pub fn chordal_is_1_extendable(g: &Graph) -> Result<Verdict, ChordalError> {
    let peo = lex_bfs_peo(g)?;
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for &v in peo.order.iter().rev() {
        if part_of[v] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut part = vec![v];
        part_of[v] = id;
        for &u in g.neighbors(v) {
            if part_of[u] == usize::MAX {
                part_of[u] = id;
                part.push(u);
            }
        }
        parts.push(part);
    }
    let mut count = vec![0usize; parts.len()];
    let mut touched = Vec::new();
    for u in 0..n {
        for &w in g.neighbors(u) {
            let j = part_of[w];
            if j > part_of[u] {
                if count[j] == 0 {
                    touched.push(j);
                }
                count[j] += 1;
            }
        }
        let full = touched.iter().any(|&j| count[j] == parts[j].len());
        for j in touched.drain(..) {
            count[j] = 0;
        }
        if full {
            return Ok(Verdict::no(Certificate::NonExtendableSet { set: VertexSet::new([u]) }));
        }
    }
    let mut parts: Vec<VertexSet> = parts.into_iter().map(VertexSet::new).collect();
    parts.sort();
    Ok(Verdict::yes_with(Certificate::MaximalCliquePartition { parts }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{chordal_mix, random_chordal};
    use crate::mis::enumerate_maximal_independent_sets;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn complement(g: &Graph) -> Graph {
        let n = g.n();
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        Graph::new(n, &edges).unwrap()
    }

    fn is_chordless_cycle(g: &Graph, c: &[usize]) -> bool {
        let k = c.len();
        k >= 4
            && VertexSet::new(c.iter().copied()).len() == k
            && (0..k).all(|i| {
                (0..k).all(|j| {
                    let d = (i + k - j) % k;
                    g.has_edge(c[i], c[j]) == (d == 1 || d == k - 1)
                })
            })
    }

    fn check_tree(g: &Graph, t: &CliqueTree) {
        let mut cliques: Vec<VertexSet> = if g.n() == 0 {
            Vec::new()
        } else {
            enumerate_maximal_independent_sets(&complement(g)).collect()
        };
        cliques.sort();
        let mut nodes = t.nodes.clone();
        nodes.sort();
        assert_eq!(nodes, cliques);
        // Forest with one tree per component and the subtree property.
        let k = t.nodes.len();
        let mut comps = (0..k).collect::<Vec<_>>();
        fn root(c: &mut [usize], x: usize) -> usize {
            if c[x] == x { x } else { let r = root(c, c[x]); c[x] = r; r }
        }
        for &(a, b) in &t.edges {
            let (ra, rb) = (root(&mut comps, a), root(&mut comps, b));
            assert_ne!(ra, rb, "cycle in clique tree");
            comps[ra] = rb;
        }
        for v in g.vertices() {
            let holding: Vec<usize> = (0..k).filter(|&i| t.nodes[i].contains(v)).collect();
            let inner = t
                .edges
                .iter()
                .filter(|&&(a, b)| holding.contains(&a) && holding.contains(&b))
                .count();
            assert_eq!(inner + 1, holding.len(), "vertex {v} subtree is disconnected");
        }
    }

    #[test]
    fn peo_examples() {
        let p4 = Graph::path(4);
        let peo = lex_bfs_peo(&p4).unwrap();
        assert!(peo.is_valid_for(&p4));
        let c = match lex_bfs_peo(&Graph::cycle(4)) {
            Err(ChordalError::NotChordal(c)) => c,
            other => panic!("{other:?}"),
        };
        assert!(is_chordless_cycle(&Graph::cycle(4), &c));
        assert!(lex_bfs_peo(&Graph::complete(5)).unwrap().is_valid_for(&Graph::complete(5)));
    }

    #[test]
    fn tree_examples() {
        let p3 = Graph::path(3);
        let t = clique_tree(&p3, &lex_bfs_peo(&p3).unwrap()).unwrap();
        check_tree(&p3, &t);
        assert_eq!(t.edges.len(), 1);
        let k4 = Graph::complete(4);
        assert_eq!(clique_tree(&k4, &lex_bfs_peo(&k4).unwrap()).unwrap().nodes.len(), 1);
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let t = clique_tree(&two, &lex_bfs_peo(&two).unwrap()).unwrap();
        assert_eq!(t.nodes.len(), 2);
        assert!(t.edges.is_empty());
    }

    #[test]
    fn simplex_examples() {
        let p = simplex_partition(&Graph::path(4)).unwrap().unwrap();
        assert_eq!(p.parts, vec![VertexSet::new([0, 1]), VertexSet::new([2, 3])]);
        assert_eq!(simplex_partition(&Graph::path(3)).unwrap(), None);
        let k3 = simplex_partition(&Graph::complete(3)).unwrap().unwrap();
        assert_eq!(k3.parts, vec![VertexSet::new([0, 1, 2])]);
        assert!(matches!(simplex_partition(&Graph::cycle(5)), Err(ChordalError::NotChordal(_))));
    }

    #[test]
    fn wk_examples() {
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(chordal_is_wk(&two, 2).unwrap().holds);
        let p4 = Graph::path(4);
        let v = chordal_is_wk(&p4, 2).unwrap();
        assert!(!v.holds);
        v.verify(&p4).unwrap();
        for n in 1..6 {
            assert!(chordal_is_wk(&Graph::complete(n), n).unwrap().holds);
            assert!(!chordal_is_wk(&Graph::complete(n), n + 1).unwrap().holds);
        }
        assert!(chordal_is_wk(&Graph::empty(0), 3).unwrap().holds);
    }

    #[test]
    fn one_extendable_examples() {
        let p4 = Graph::path(4);
        let v = chordal_is_1_extendable(&p4).unwrap();
        assert_eq!(
            v.certificate,
            Some(Certificate::MaximalCliquePartition {
                parts: vec![VertexSet::new([0, 1]), VertexSet::new([2, 3])]
            })
        );
        let p3 = Graph::path(3);
        let v = chordal_is_1_extendable(&p3).unwrap();
        assert!(!v.holds);
        assert_eq!(v.certificate, Some(Certificate::NonExtendableSet { set: VertexSet::new([1]) }));
        assert!(chordal_is_1_extendable(&Graph::complete(6)).unwrap().holds);
    }

    #[test]
    fn random_chordal_graphs_have_valid_structures() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..300 {
            let g = chordal_mix(&mut rng, 12);
            let peo = lex_bfs_peo(&g).unwrap();
            assert!(peo.is_valid_for(&g));
            check_tree(&g, &clique_tree(&g, &peo).unwrap());
            for k in 1..=3 {
                chordal_is_wk(&g, k).unwrap().verify(&g).unwrap();
            }
            chordal_is_1_extendable(&g).unwrap().verify(&g).unwrap();
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        use crate::recognizers::{is_b_graph, is_wk_staples};
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..300 {
            let g = chordal_mix(&mut rng, 12);
            for k in 1..=3 {
                assert_eq!(chordal_is_wk(&g, k).unwrap().holds, is_wk_staples(&g, k).holds, "k={k} {g:?}");
            }
            assert_eq!(chordal_is_1_extendable(&g).unwrap().holds, is_b_graph(&g).holds, "{g:?}");
        }
    }

    #[test]
    fn cycles_are_found_in_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..300 {
            let g = crate::generate::random_graph(&mut rng, 9, 0.35);
            match lex_bfs_peo(&g) {
                Ok(peo) => assert!(peo.is_valid_for(&g)),
                Err(ChordalError::NotChordal(c)) => assert!(is_chordless_cycle(&g, &c), "{c:?}"),
                Err(e) => panic!("{e}"),
            }
        }
        let _ = random_chordal(&mut rng, 0);
    }
}
