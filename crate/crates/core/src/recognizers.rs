//! Exact recognizers for the well-covered hierarchy, written directly from
//! the class definitions. They are exponential and serve as ground truth for
//! the oracle-based and chordal algorithms.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::{Graph, GraphError, VertexSet};
use crate::mis::Dense;
use crate::verdict::{Certificate, RemovalWitness, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognizerError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("instance too large for the definitional W_k check (n = {n}, k = {k}; limits n <= {cap}, k <= 3)")]
    InstanceTooLarge { n: usize, k: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// The class membership questions the recognizers answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", content = "param", rename_all = "snake_case")]
pub enum ClassQuery {
    WellCovered,
    Wk(usize),
    KExtendable(usize),
    Es(usize),
    BGraph,
    Shedding(usize),
}

impl ClassQuery {
    pub fn validate(&self, g: &Graph) -> Result<(), RecognizerError> {
        match *self {
            ClassQuery::Wk(0) => Err(RecognizerError::InvalidParameter("W_k needs k >= 1".into())),
            ClassQuery::KExtendable(0) => Err(RecognizerError::InvalidParameter(
                "k-extendability needs k >= 1".into(),
            )),
            ClassQuery::Es(0) => Err(RecognizerError::InvalidParameter("E_s needs s >= 1".into())),
            ClassQuery::Shedding(v) => Ok(g.check_vertex(v)?),
            _ => Ok(()),
        }
    }
}

/// Dispatches a [`ClassQuery`] to the brute-force recognizer (Staples form
/// for `W_k`).
pub fn recognize(g: &Graph, query: ClassQuery) -> Result<Verdict, RecognizerError> {
    query.validate(g)?;
    Ok(match query {
        ClassQuery::WellCovered => is_well_covered(g),
        ClassQuery::Wk(k) => is_wk_staples(g, k),
        ClassQuery::KExtendable(k) => is_k_extendable(g, k),
        ClassQuery::Es(s) => is_es(g, s),
        ClassQuery::BGraph => is_b_graph(g),
        ClassQuery::Shedding(v) => is_shedding(g, v)?,
    })
}

/// Well-coveredness of `G[universe]`; certificate ids are those of the full
/// graph.
fn well_covered_in(dense: &Dense, universe: &BitSet) -> Result<usize, (Vec<usize>, Vec<usize>)> {
    let alpha = dense.alpha(universe);
    match dense.small_maximal_set(universe, alpha) {
        None => Ok(alpha),
        Some(small) => Err((small, dense.maximum_set(universe))),
    }
}

/// Every maximal independent set is maximum.
///
/// On failure the certificate holds the lexicographically first maximal
/// independent set that is not maximum, and a maximum one.
pub fn is_well_covered(g: &Graph) -> Verdict {
    let dense = Dense::new(g);
    match well_covered_in(&dense, &dense.all()) {
        Ok(_) => Verdict::yes(),
        Err((small, large)) => Verdict::no(Certificate::TwoMaximalSets {
            smaller: VertexSet::from_sorted(small),
            larger: VertexSet::from_sorted(large),
        }),
    }
}

fn first_non_extendable(dense: &Dense, alpha: usize, k: usize) -> Option<Vec<usize>> {
    let all = dense.all();
    let mut found = None;
    let _ = dense.for_each_independent_set_of_size(&all, k, |s| {
        let rest = all.difference(&dense.closed_of(s));
        if dense.alpha(&rest) + k < alpha {
            found = Some(s.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// Every independent set of exactly `k` vertices lies in a maximum
/// independent set. Vacuously true when `k > alpha(G)`.
pub fn is_k_extendable(g: &Graph, k: usize) -> Verdict {
    let dense = Dense::new(g);
    let alpha = dense.alpha(&dense.all());
    match first_non_extendable(&dense, alpha, k) {
        None => Verdict::yes(),
        Some(s) => Verdict::no(Certificate::NonExtendableSet {
            set: VertexSet::from_sorted(s),
        }),
    }
}

/// `k`-extendable for every `k` in `1..=s`. `s = 0` is the class of all
/// graphs.
pub fn is_es(g: &Graph, s: usize) -> Verdict {
    let dense = Dense::new(g);
    let alpha = dense.alpha(&dense.all());
    for k in 1..=s.min(alpha) {
        if let Some(set) = first_non_extendable(&dense, alpha, k) {
            return Verdict::no(Certificate::NonExtendableSet {
                set: VertexSet::from_sorted(set),
            });
        }
    }
    Verdict::yes()
}

/// Every vertex lies in a maximum independent set; same as 1-extendable.
pub fn is_b_graph(g: &Graph) -> Verdict {
    is_k_extendable(g, 1)
}

/// `v` is shedding when no independent set of `V - N[v]` dominates `N(v)`.
///
/// An isolated vertex is never shedding: the empty set dominates its empty
/// neighborhood.
pub fn is_shedding(g: &Graph, v: usize) -> Result<Verdict, GraphError> {
    g.check_vertex(v)?;
    let dense = Dense::new(g);
    let universe = dense.all().difference(dense.closed(v));
    Ok(match dense.dominating_independent_set(&universe, dense.neighbors(v)) {
        None => Verdict::yes(),
        Some(s) => Verdict::no(Certificate::DominatingWitness {
            vertex: v,
            set: VertexSet::from_sorted(s),
        }),
    })
}

/// Advances `comb` to the next `k`-combination of `0..n` in lexicographic
/// order.
pub(crate) fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let Some(i) = (0..k).rev().find(|&i| comb[i] < n - k + i) else {
        return false;
    };
    comb[i] += 1;
    for j in i + 1..k {
        comb[j] = comb[j - 1] + 1;
    }
    true
}

/// `W_k` through the Staples characterization: for every set `S` of `k - 1`
/// vertices, `G - S` is well-covered and `alpha(G - S) = alpha(G)`.
///
/// Removal sets are tried in lexicographic order and the first failure is
/// reported. When `k - 1 > n` (and `n >= 1`) there are not enough vertices
/// for `k` disjoint maximum independent sets; the certificate then removes
/// every vertex.
///
/// # Panics
/// If `k == 0`.
pub fn is_wk_staples(g: &Graph, k: usize) -> Verdict {
    assert!(k >= 1, "W_k needs k >= 1");
    let n = g.n();
    let dense = Dense::new(g);
    let all = dense.all();
    let alpha = dense.alpha(&all);
    let r = k - 1;
    if r > n {
        if n == 0 {
            return Verdict::yes();
        }
        return Verdict::no(Certificate::WkRemoval {
            removed: VertexSet::new(0..n),
            witness: RemovalWitness::AlphaDrop {
                alpha,
                alpha_after: 0,
            },
        });
    }
    let mut comb: Vec<usize> = (0..r).collect();
    loop {
        let mut universe = all.clone();
        for &v in &comb {
            universe.remove(v);
        }
        let after = dense.alpha(&universe);
        let witness = if after != alpha {
            Some(RemovalWitness::AlphaDrop {
                alpha,
                alpha_after: after,
            })
        } else {
            dense.small_maximal_set(&universe, after).map(|small| RemovalWitness::NotWellCovered {
                smaller: VertexSet::from_sorted(small),
                larger: VertexSet::from_sorted(dense.maximum_set(&universe)),
            })
        };
        if let Some(witness) = witness {
            return Verdict::no(Certificate::WkRemoval {
                removed: VertexSet::from_sorted(comb),
                witness,
            });
        }
        if !next_combination(&mut comb, n) {
            return Verdict::yes();
        }
    }
}

pub const DEFAULT_DEFINITIONAL_CAP: usize = 10;

/// `W_k` straight from the definition: every `k`-tuple of pairwise disjoint
/// independent sets (empty ones included) extends to `k` pairwise disjoint
/// maximum independent sets. Cross-validation oracle for small graphs only.
pub fn is_wk_definitional(g: &Graph, k: usize) -> Result<Verdict, RecognizerError> {
    is_wk_definitional_with_cap(g, k, DEFAULT_DEFINITIONAL_CAP)
}

pub fn is_wk_definitional_with_cap(g: &Graph, k: usize, cap: usize) -> Result<Verdict, RecognizerError> {
    if k == 0 {
        return Err(RecognizerError::InvalidParameter("W_k needs k >= 1".into()));
    }
    if g.n() > cap || k > 3 {
        return Err(RecognizerError::InstanceTooLarge { n: g.n(), k, cap });
    }
    let ext = DisjointExtension::new(g);
    let mut labels = vec![0usize; g.n()];
    let mut sets = vec![ext.dense.empty(); k];
    let mut failure = None;
    let _ = ext.label_tuples(0, &mut labels, &mut sets, &mut |sets| {
        if ext.extends(sets) {
            ControlFlow::Continue(())
        } else {
            failure = Some(sets.iter().map(|s| VertexSet::new(s.iter())).collect());
            ControlFlow::Break(())
        }
    });
    Ok(match failure {
        None => Verdict::yes(),
        Some(sets) => Verdict::no(Certificate::UnextendableDisjointSets { sets }),
    })
}

/// Whether pairwise disjoint independent sets `sets` extend to pairwise
/// disjoint maximum independent sets.
pub fn disjoint_extension_exists(g: &Graph, sets: &[VertexSet]) -> bool {
    let ext = DisjointExtension::new(g);
    let masks: Vec<BitSet> = sets.iter().map(|s| s.to_bitset(g.n())).collect();
    ext.extends(&masks)
}

struct DisjointExtension {
    dense: Dense,
    maximum_sets: Vec<BitSet>,
}

impl DisjointExtension {
    fn new(g: &Graph) -> Self {
        let dense = Dense::new(g);
        let alpha = dense.alpha(&dense.all());
        let maximum_sets = crate::mis::enumerate_maximal_independent_sets(g)
            .filter(|s| s.len() == alpha)
            .map(|s| s.to_bitset(g.n()))
            .collect();
        DisjointExtension { dense, maximum_sets }
    }

    fn extends(&self, sets: &[BitSet]) -> bool {
        let mut used = self.dense.empty();
        self.assign(sets, 0, &mut used)
    }

    fn assign(&self, sets: &[BitSet], i: usize, used: &mut BitSet) -> bool {
        if i == sets.len() {
            return true;
        }
        for s in &self.maximum_sets {
            if sets[i].is_subset(s) && !s.intersects(used) {
                // Later sets must stay clear of this choice.
                if sets[i + 1..].iter().any(|t| t.intersects(s)) {
                    continue;
                }
                used.union_with(s);
                let ok = self.assign(sets, i + 1, used);
                used.difference_with(s);
                if ok {
                    return true;
                }
            }
        }
        false
    }

    /// Visits every tuple of pairwise disjoint independent sets that cannot
    /// be enlarged. Extension is monotone under shrinking the `A_i`, so these
    /// tuples decide the property for all tuples.
    fn label_tuples(
        &self,
        v: usize,
        labels: &mut [usize],
        sets: &mut [BitSet],
        f: &mut dyn FnMut(&[BitSet]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = self.dense.n();
        if v == n {
            let saturated = (0..n).all(|u| {
                labels[u] != 0 || sets.iter().all(|s| self.dense.neighbors(u).intersects(s))
            });
            return if saturated { f(sets) } else { ControlFlow::Continue(()) };
        }
        for label in 0..=sets.len() {
            if label > 0 && self.dense.neighbors(v).intersects(&sets[label - 1]) {
                continue;
            }
            labels[v] = label;
            if label > 0 {
                sets[label - 1].insert(v);
            }
            let res = self.label_tuples(v + 1, labels, sets, f);
            if label > 0 {
                sets[label - 1].remove(v);
            }
            res?;
        }
        labels[v] = 0;
        ControlFlow::Continue(())
    }
}
