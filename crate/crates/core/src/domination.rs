//! Exact minimum dominating set by exhaustive search over subsets of
//! increasing size.

use crate::bitset::BitSet;
use crate::graph::{Graph, VertexSet};
use crate::recognizers::next_combination;

/// A minimum dominating set, the lexicographically first among those of
/// minimum size. Empty for the empty graph.
pub fn minimum_dominating_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let closed: Vec<BitSet> = g
        .vertices()
        .map(|v| BitSet::from_iter_with_capacity(n, g.closed_neighborhood(v).iter()))
        .collect();
    let all = BitSet::full(n);
    for k in 0..=n {
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            let mut cover = BitSet::new(n);
            for &v in &comb {
                cover.union_with(&closed[v]);
            }
            if all.is_subset(&cover) {
                return VertexSet::new(comb);
            }
            if k == 0 || !next_combination(&mut comb, n) {
                break;
            }
        }
    }
    unreachable!("the whole vertex set dominates")
}

pub fn domination_number(g: &Graph) -> usize {
    minimum_dominating_set(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::dominates;

    #[test]
    fn small_cases() {
        assert_eq!(domination_number(&Graph::empty(0)), 0);
        assert_eq!(domination_number(&Graph::path(4)), 2);
        assert_eq!(domination_number(&Graph::cycle(4)), 2);
        assert_eq!(domination_number(&Graph::star(5)), 1);
        assert_eq!(domination_number(&Graph::empty(3)), 3);
        let d = minimum_dominating_set(&Graph::cycle(6));
        assert_eq!(d.len(), 2);
        assert!(dominates(&Graph::cycle(6), &d, &VertexSet::new(0..6)).unwrap());
    }
}
