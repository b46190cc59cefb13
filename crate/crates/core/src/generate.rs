//! Seeded instance generators and exhaustive catalogs for tests, suites and
//! benches.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cnf::{CnfFormula, Literal};
use crate::graph::Graph;

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}

/// `G(n, p)` redrawn until no vertex is universal. Needs `n >= 2`.
pub fn random_universal_free_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!(n >= 2, "a graph on one vertex has a universal vertex");
    loop {
        let g = random_graph(rng, n, p);
        if !g.vertices().any(|v| g.is_universal(v)) {
            return g;
        }
    }
}

fn shuffle_labels<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// A random chordal graph on `n` vertices: each new vertex is attached to a
/// random subset of a previously recorded clique, then labels are shuffled.
pub fn random_chordal<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut edges = Vec::new();
    for v in 0..n {
        let attach: Vec<usize> = match cliques.choose(rng) {
            Some(c) if rng.gen_bool(0.9) => {
                let keep = rng.gen_range(0.3..=1.0);
                c.iter().copied().filter(|_| rng.gen_bool(keep)).collect()
            }
            _ => Vec::new(),
        };
        edges.extend(attach.iter().map(|&u| (u, v)));
        let mut c = attach;
        c.push(v);
        cliques.push(c);
    }
    let g = Graph::new(n, &edges).expect("generated edges are valid");
    shuffle_labels(rng, &g)
}

/// A random chordal base graph where each base vertex receives a pendant
/// clique of random size in `0..=max_pendant`, all adjacent to it. Labels are
/// shuffled. With nonzero pendants everywhere this is a corona, which lies in
/// `W_t` for the smallest pendant size `t`.
pub fn random_chordal_corona<R: Rng>(rng: &mut R, base: usize, max_pendant: usize, always: bool) -> Graph {
    let h = random_chordal(rng, base);
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    let mut n = base;
    for v in 0..base {
        let lo = usize::from(always);
        let t = rng.gen_range(lo..=max_pendant.max(lo));
        let start = n;
        n += t;
        for a in start..n {
            edges.push((v, a));
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::new(n, &edges).expect("generated edges are valid");
    shuffle_labels(rng, &g)
}

/// A mix of chordal instances with at most `max_n` vertices, weighted so that
/// the hierarchy properties hold on a fair share of them.
pub fn chordal_mix<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    match rng.gen_range(0..4) {
        0 | 1 => {
            let n = rng.gen_range(1..=max_n);
            random_chordal(rng, n)
        }
        2 => {
            let t = rng.gen_range(1..=3);
            let base = rng.gen_range(1..=(max_n / (t + 1)).max(1));
            random_chordal_corona(rng, base, t, true)
        }
        _ => {
            let base = rng.gen_range(1..=(max_n / 3).max(1));
            let g = random_chordal_corona(rng, base, 2, false);
            if g.n() > max_n {
                random_chordal(rng, max_n)
            } else {
                g
            }
        }
    }
}

fn random_literal<R: Rng>(rng: &mut R, num_vars: usize) -> Literal {
    let v = rng.gen_range(1..=num_vars) as Literal;
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

/// A random 3-CNF with `1..=max_vars` variables and `1..=max_clauses`
/// non-tautological clauses.
pub fn random_3cnf<R: Rng>(rng: &mut R, max_vars: usize, max_clauses: usize) -> CnfFormula {
    let num_vars = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(1..=max_clauses);
    let clauses = (0..m)
        .map(|_| loop {
            let c: Vec<Literal> = (0..3).map(|_| random_literal(rng, num_vars)).collect();
            if !c.iter().any(|&l| c.contains(&-l)) {
                break c;
            }
        })
        .collect();
    CnfFormula::new(num_vars, clauses)
}

/// Every 3-CNF over 1 or 2 variables whose clauses are distinct
/// non-tautological literal sets, 1 to `max_clauses` of them. A set with
/// fewer than three literals is padded by repeating its last literal.
pub fn exhaustive_small_3cnf(max_clauses: usize) -> Vec<CnfFormula> {
    let mut out = Vec::new();
    for num_vars in 1..=2usize {
        let lits: Vec<Literal> = (1..=num_vars as Literal).flat_map(|v| [v, -v]).collect();
        let mut sets: Vec<Vec<Literal>> = lits.iter().map(|&l| vec![l]).collect();
        if num_vars == 2 {
            for a in [1, -1] {
                for b in [2, -2] {
                    sets.push(vec![a, b]);
                }
            }
        }
        let padded: Vec<Vec<Literal>> = sets
            .iter()
            .map(|s| {
                let mut c = s.clone();
                while c.len() < 3 {
                    c.push(*s.last().unwrap());
                }
                c
            })
            .collect();
        for size in 1..=max_clauses.min(padded.len()) {
            let mut comb: Vec<usize> = (0..size).collect();
            loop {
                out.push(CnfFormula::new(num_vars, comb.iter().map(|&i| padded[i].clone()).collect()));
                if !crate::recognizers::next_combination(&mut comb, padded.len()) {
                    break;
                }
            }
        }
    }
    out
}

/// Every labeled graph on `n` vertices, by edge bitmask over the pairs in
/// lexicographic order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many labeled graphs to enumerate");
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).expect("valid pairs")
    })
}

/// All labeled graphs with at most `exhaustive_up_to` vertices, then uniform
/// samples on larger orders up to `max_n`, split evenly, until the catalog
/// holds `cap` graphs.
pub fn labeled_graph_catalog<R: Rng>(rng: &mut R, exhaustive_up_to: usize, max_n: usize, cap: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = (0..=exhaustive_up_to).flat_map(all_labeled_graphs).take(cap).collect();
    let orders: Vec<usize> = (exhaustive_up_to + 1..=max_n).collect();
    let mut i = 0;
    while out.len() < cap && !orders.is_empty() {
        let n = orders[i % orders.len()];
        out.push(random_graph(rng, n, 0.5));
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exhaustive_formula_counts() {
        let all = exhaustive_small_3cnf(4);
        assert_eq!(all.iter().filter(|f| f.num_vars() == 1).count(), 3);
        assert_eq!(all.iter().filter(|f| f.num_vars() == 2).count(), 162);
        assert!(all.iter().all(|f| f.is_three_cnf() && f.first_tautological_clause().is_none()));
    }

    #[test]
    fn random_formulas_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let f = random_3cnf(&mut rng, 3, 5);
            assert!(f.is_three_cnf() && f.first_tautological_clause().is_none());
            assert!(f.num_vars() <= 3 && (1..=5).contains(&f.num_clauses()));
        }
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(all_labeled_graphs(4).count(), 64);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let cat = labeled_graph_catalog(&mut rng, 4, 6, 200);
        assert_eq!(cat.len(), 200);
        assert_eq!(cat.iter().filter(|g| g.n() <= 4).count(), 1 + 1 + 2 + 8 + 64);
    }

    #[test]
    fn universal_free() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..8 {
            let g = random_universal_free_graph(&mut rng, n, 0.7);
            assert!(g.vertices().all(|v| !g.is_universal(v)));
        }
    }
}
