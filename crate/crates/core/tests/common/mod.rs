#![allow(dead_code)]

use proptest::prelude::*;
use wellcov::Graph;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e).collect();
    Graph::new(n, &edges).unwrap()
}

/// Graphs on `min_n..=max_n` vertices with independent fair edge coins.
pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect()
}

pub fn is_independent_mask(adj: &[u32], s: u32) -> bool {
    (0..adj.len()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)
}

/// All independent sets as bitmasks, by exhaustive subset check.
pub fn independent_masks(g: &Graph) -> Vec<u32> {
    let adj = masks(g);
    (0u32..1 << g.n()).filter(|&s| is_independent_mask(&adj, s)).collect()
}

pub fn maximal_masks(g: &Graph) -> Vec<u32> {
    let adj = masks(g);
    independent_masks(g)
        .into_iter()
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 1 || adj[v] & s != 0))
        .collect()
}

pub fn subset_alpha(g: &Graph) -> usize {
    independent_masks(g).iter().map(|s| s.count_ones() as usize).max().unwrap_or(0)
}

pub fn mask_to_vec(s: u32) -> Vec<usize> {
    (0..32).filter(|&v| s >> v & 1 == 1).collect()
}

/// Greedily thins the vertex mask `pick` to an independent set.
pub fn thin_to_independent(g: &Graph, pick: u32) -> u32 {
    let adj = masks(g);
    (0..g.n()).fold(0u32, |s, v| if pick >> v & 1 == 1 && adj[v] & s == 0 { s | 1 << v } else { s })
}
