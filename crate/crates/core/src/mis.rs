//! Exact independent-set machinery: maximal independent set enumeration,
//! branch-and-bound independence number, and the masked search primitives
//! the recognizers are built from.
//!
//! Everything here is exponential in the worst case and is meant for the
//! small instances the recognizers and gadget checks run on.

use std::ops::ControlFlow;

use crate::bitset::BitSet;
use crate::graph::{Graph, VertexSet};

/// Bitset adjacency of a [`Graph`], for the exponential searches.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    n: usize,
    nbr: Vec<BitSet>,
    closed: Vec<BitSet>,
}

impl Dense {
    pub fn new(g: &Graph) -> Dense {
        let n = g.n();
        let nbr: Vec<BitSet> = g
            .vertices()
            .map(|v| BitSet::from_iter_with_capacity(n, g.neighbors(v).iter().copied()))
            .collect();
        let closed = nbr
            .iter()
            .enumerate()
            .map(|(v, s)| {
                let mut c = s.clone();
                c.insert(v);
                c
            })
            .collect();
        Dense { n, nbr, closed }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn all(&self) -> BitSet {
        BitSet::full(self.n)
    }

    pub fn empty(&self) -> BitSet {
        BitSet::new(self.n)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.nbr[v]
    }

    pub fn closed(&self, v: usize) -> &BitSet {
        &self.closed[v]
    }

    /// `N[S]` as a bitset.
    pub fn closed_of(&self, set: &[usize]) -> BitSet {
        let mut out = self.empty();
        for &v in set {
            out.union_with(&self.closed[v]);
        }
        out
    }

    /// Independence number of the subgraph induced by `mask`.
    pub fn alpha(&self, mask: &BitSet) -> usize {
        let mut search = AlphaSearch::new(self, false);
        search.run(mask.clone());
        search.best
    }

    /// A maximum independent set of the subgraph induced by `mask`.
    pub fn maximum_set(&self, mask: &BitSet) -> Vec<usize> {
        let mut search = AlphaSearch::new(self, true);
        search.run(mask.clone());
        let mut set = search.best_set;
        set.sort_unstable();
        set
    }

    /// Lexicographically first maximal independent set of `G[universe]`
    /// with fewer than `alpha` vertices, where `alpha` is the independence
    /// number of `G[universe]`.
    ///
    /// Branches whose partial set already has `alpha - 1` vertices and can
    /// still grow are cut, since every maximal completion of them is maximum.
    pub fn small_maximal_set(&self, universe: &BitSet, alpha: usize) -> Option<Vec<usize>> {
        let mut found = None;
        let mut r = Vec::new();
        let _ = self.bk(universe.clone(), self.empty(), &mut r, &mut |set, p| {
            if set.len() + 1 >= alpha && !p.is_empty() {
                return Step::Prune;
            }
            Step::Continue
        }, &mut |set| {
            if set.len() < alpha {
                found = Some(set.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        found
    }

    /// Lexicographically first independent set of `G[universe]` that dominates
    /// `targets`. Only maximal sets need to be tried: growing an independent
    /// set never loses domination.
    pub fn dominating_independent_set(&self, universe: &BitSet, targets: &BitSet) -> Option<Vec<usize>> {
        let mut found = None;
        let mut r = Vec::new();
        let _ = self.bk(universe.clone(), self.empty(), &mut r, &mut |_, _| Step::Continue, &mut |set| {
            let covered = self.closed_of(set);
            if targets.is_subset(&covered) {
                found = Some(set.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        found
    }

    /// Bron–Kerbosch on the complement without pivoting, so maximal sets come
    /// out in lexicographic order. A branch is cut as soon as some excluded
    /// vertex has no neighbor left among the candidates.
    fn bk(
        &self,
        p: BitSet,
        x: BitSet,
        r: &mut Vec<usize>,
        filter: &mut dyn FnMut(&[usize], &BitSet) -> Step,
        emit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if p.is_empty() && x.is_empty() {
            return emit(r);
        }
        if x.iter().any(|u| !self.nbr[u].intersects(&p)) {
            return ControlFlow::Continue(());
        }
        if let Step::Prune = filter(r, &p) {
            return ControlFlow::Continue(());
        }
        let mut p = p;
        let mut x = x;
        while let Some(v) = p.first() {
            r.push(v);
            let res = self.bk(p.difference(&self.closed[v]), x.difference(&self.closed[v]), r, filter, emit);
            r.pop();
            res?;
            p.remove(v);
            x.insert(v);
        }
        ControlFlow::Continue(())
    }

    /// Calls `f` on every independent set of exactly `k` vertices of
    /// `G[universe]`, in lexicographic order, until it breaks.
    pub fn for_each_independent_set_of_size<F>(&self, universe: &BitSet, k: usize, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut r = Vec::with_capacity(k);
        self.independent_dfs(universe.clone(), k, &mut r, &mut f)
    }

    fn independent_dfs(
        &self,
        candidates: BitSet,
        k: usize,
        r: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if r.len() == k {
            return f(r);
        }
        let mut candidates = candidates;
        while let Some(v) = candidates.first() {
            candidates.remove(v);
            if candidates.len() + 1 < k - r.len() {
                break;
            }
            r.push(v);
            let res = self.independent_dfs(candidates.difference(&self.nbr[v]), k, r, f);
            r.pop();
            res?;
        }
        ControlFlow::Continue(())
    }
}

enum Step {
    Continue,
    Prune,
}

/// Branch and bound for the independence number: take any vertex of degree
/// at most one, otherwise branch on the lowest-id vertex of maximum degree.
struct AlphaSearch<'a> {
    dense: &'a Dense,
    track: bool,
    best: usize,
    best_set: Vec<usize>,
    current: Vec<usize>,
}

impl<'a> AlphaSearch<'a> {
    fn new(dense: &'a Dense, track: bool) -> Self {
        AlphaSearch {
            dense,
            track,
            best: 0,
            best_set: Vec::new(),
            current: Vec::new(),
        }
    }

    fn run(&mut self, mut mask: BitSet) {
        let base = self.current.len();
        loop {
            let remaining = mask.len();
            if self.current.len() + remaining <= self.best {
                break;
            }
            if remaining == 0 {
                self.best = self.current.len();
                if self.track {
                    self.best_set = self.current.clone();
                }
                break;
            }
            let mut low = (usize::MAX, 0);
            let mut high = (0, 0);
            for v in mask.iter() {
                let d = self.dense.nbr[v].intersection_len(&mask);
                if d < low.0 {
                    low = (d, v);
                }
                if d > high.0 {
                    high = (d, v);
                }
            }
            if low.0 <= 1 {
                self.current.push(low.1);
                mask.difference_with(&self.dense.closed[low.1]);
                continue;
            }
            if self.current.len() + clique_cover_bound(self.dense, &mask) <= self.best {
                break;
            }
            let v = high.1;
            self.current.push(v);
            self.run(mask.difference(&self.dense.closed[v]));
            self.current.pop();
            mask.remove(v);
        }
        self.current.truncate(base);
    }
}

/// Number of cliques in a greedy clique cover of `G[mask]`; an upper bound on
/// its independence number.
fn clique_cover_bound(dense: &Dense, mask: &BitSet) -> usize {
    let mut left = mask.clone();
    let mut cliques = 0;
    while let Some(v) = left.first() {
        left.remove(v);
        let mut cand = left.intersection(&dense.nbr[v]);
        while let Some(u) = cand.first() {
            left.remove(u);
            cand.remove(u);
            cand.intersect_with(&dense.nbr[u]);
        }
        cliques += 1;
    }
    cliques
}

/// Streams every inclusion-maximal independent set exactly once, in
/// lexicographic order of the sorted member lists.
///
/// The iterator keeps an explicit search stack, so the consumer can stop at
/// any point without paying for the rest of the enumeration.
pub struct MaximalIndependentSets {
    dense: Dense,
    stack: Vec<Frame>,
    current: Vec<usize>,
    pending_empty: bool,
}

struct Frame {
    p: BitSet,
    x: BitSet,
}

impl MaximalIndependentSets {
    fn new(g: &Graph) -> Self {
        let dense = Dense::new(g);
        let root = Frame {
            p: dense.all(),
            x: dense.empty(),
        };
        MaximalIndependentSets {
            pending_empty: g.n() == 0,
            stack: if g.n() == 0 { Vec::new() } else { vec![root] },
            dense,
            current: Vec::new(),
        }
    }

    fn close_frame(&mut self) {
        self.stack.pop();
        if let Some(v) = self.current.pop() {
            let parent = self.stack.last_mut().expect("non-root frame has a parent");
            parent.p.remove(v);
            parent.x.insert(v);
        }
    }
}

impl Iterator for MaximalIndependentSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.pending_empty {
            self.pending_empty = false;
            return Some(VertexSet::empty());
        }
        loop {
            let top = self.stack.last_mut()?;
            let Some(v) = top.p.first() else {
                self.close_frame();
                continue;
            };
            let closed = self.dense.closed(v);
            let child = Frame {
                p: top.p.difference(closed),
                x: top.x.difference(closed),
            };
            if child.p.is_empty() && child.x.is_empty() {
                top.p.remove(v);
                top.x.insert(v);
                let mut set = self.current.clone();
                set.push(v);
                return Some(VertexSet::from_sorted(set));
            }
            let dead = child.x.iter().any(|u| !self.dense.neighbors(u).intersects(&child.p));
            if dead {
                top.p.remove(v);
                top.x.insert(v);
                continue;
            }
            self.current.push(v);
            self.stack.push(child);
        }
    }
}

pub fn enumerate_maximal_independent_sets(g: &Graph) -> MaximalIndependentSets {
    MaximalIndependentSets::new(g)
}

pub fn independence_number(g: &Graph) -> usize {
    let dense = Dense::new(g);
    dense.alpha(&dense.all())
}

pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let dense = Dense::new(g);
    VertexSet::from_sorted(dense.maximum_set(&dense.all()))
}

/// All independent sets with exactly `k` vertices, in lexicographic order.
pub fn independent_sets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    let dense = Dense::new(g);
    let mut out = Vec::new();
    let _ = dense.for_each_independent_set_of_size(&dense.all(), k, |s| {
        out.push(VertexSet::from_sorted(s.to_vec()));
        ControlFlow::Continue(())
    });
    out
}
