mod common;

use std::time::{Duration, Instant};

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wellcov::chordal::{
    chordal_is_1_extendable, chordal_is_well_covered, chordal_is_wk, clique_tree, find_chordless_cycle,
    is_chordal, lex_bfs_peo, simplex_partition, ChordalError,
};
use wellcov::generate::{chordal_mix, random_chordal};
use wellcov::mis::independence_number;
use wellcov::recognizers::{is_k_extendable, is_well_covered, is_wk_staples};
use wellcov::{Certificate, Graph};

fn arb_chordal(max_n: usize) -> impl Strategy<Value = Graph> {
    any::<u64>().prop_map(move |seed| chordal_mix(&mut ChaCha8Rng::seed_from_u64(seed), max_n))
}

/// Chordality by brute force: no induced cycle of length >= 4, checked by
/// repeatedly deleting simplicial vertices.
fn chordal_by_elimination(g: &Graph) -> bool {
    let adj = masks(g);
    let mut alive: u32 = if g.n() == 32 { u32::MAX } else { (1 << g.n()) - 1 };
    while alive != 0 {
        let simplicial = (0..g.n()).find(|&v| {
            alive >> v & 1 == 1 && {
                let nb = adj[v] & alive;
                (0..g.n()).all(|u| nb >> u & 1 == 0 || nb & !adj[u] & !(1 << u) == 0)
            }
        });
        match simplicial {
            Some(v) => alive &= !(1 << v),
            None => return false,
        }
    }
    true
}

fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.filter(|&(u, v)| !g.has_edge(u, v))).unwrap()
}

fn components(g: &Graph) -> usize {
    let mut seen = vec![false; g.n()];
    let mut count = 0;
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in g.neighbors(v) {
                if !std::mem::replace(&mut seen[u], true) {
                    stack.push(u);
                }
            }
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn chordality_matches_elimination(g in arb_graph(0, 10)) {
        let chordal = is_chordal(&g);
        prop_assert_eq!(chordal, chordal_by_elimination(&g));
        match lex_bfs_peo(&g) {
            Ok(peo) => prop_assert!(chordal && peo.is_valid_for(&g)),
            Err(ChordalError::NotChordal(cycle)) => {
                prop_assert!(!chordal);
                prop_assert!(cycle.len() >= 4);
                let k = cycle.len();
                for i in 0..k {
                    for j in i + 1..k {
                        let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                        prop_assert_eq!(g.has_edge(cycle[i], cycle[j]), consecutive);
                    }
                }
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
        prop_assert_eq!(find_chordless_cycle(&g).is_none(), chordal);
    }

    #[test]
    fn clique_tree_covers_maximal_cliques(g in arb_chordal(12)) {
        let peo = lex_bfs_peo(&g).unwrap();
        let tree = clique_tree(&g, &peo).unwrap();
        let mut nodes: Vec<Vec<usize>> = tree.nodes.iter().map(|c| c.as_slice().to_vec()).collect();
        nodes.sort();
        let mut cliques: Vec<Vec<usize>> = maximal_masks(&complement(&g)).into_iter().map(mask_to_vec).collect();
        cliques.sort();
        prop_assert_eq!(nodes, cliques);
        for v in g.vertices() {
            let holding: Vec<usize> = (0..tree.nodes.len()).filter(|&i| tree.nodes[i].contains(v)).collect();
            let inner = tree.edges.iter().filter(|(a, b)| holding.contains(a) && holding.contains(b)).count();
            prop_assert_eq!(inner + 1, holding.len());
        }
        prop_assert_eq!(tree.edges.len() + components(&g), tree.nodes.len());
    }

    #[test]
    fn routes_agree_with_brute_force(g in arb_chordal(12), k in 1usize..4) {
        let wc = chordal_is_well_covered(&g).unwrap();
        prop_assert_eq!(wc.holds, is_well_covered(&g).holds);
        prop_assert!(wc.verify(&g).is_ok());
        let wk = chordal_is_wk(&g, k).unwrap();
        prop_assert_eq!(wk.holds, is_wk_staples(&g, k).holds);
        prop_assert!(wk.verify(&g).is_ok());
        let ext = chordal_is_1_extendable(&g).unwrap();
        prop_assert_eq!(ext.holds, is_k_extendable(&g, 1).holds);
        prop_assert!(ext.verify(&g).is_ok());
    }

    #[test]
    fn partitions_have_alpha_parts(g in arb_chordal(14)) {
        let alpha = independence_number(&g);
        if let Some(p) = simplex_partition(&g).unwrap() {
            prop_assert_eq!(p.parts.len(), alpha);
            let total: usize = p.parts.iter().map(|s| s.len()).sum();
            prop_assert_eq!(total, g.n());
            prop_assert!(p.simplicial_counts.iter().all(|&c| c >= 1));
        }
        if let Some(Certificate::MaximalCliquePartition { parts }) = chordal_is_1_extendable(&g).unwrap().certificate {
            prop_assert_eq!(parts.len(), alpha);
        }
    }
}

#[test]
fn non_chordal_inputs_are_refused() {
    let c4 = Graph::cycle(4);
    assert!(matches!(chordal_is_well_covered(&c4), Err(ChordalError::NotChordal(_))));
    assert!(matches!(chordal_is_1_extendable(&c4), Err(ChordalError::NotChordal(_))));
    assert!(matches!(chordal_is_wk(&Graph::path(3), 0), Err(ChordalError::InvalidParameter(_))));
}

fn min_time(g: &Graph) -> Duration {
    (0..7)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(chordal_is_wk(g, 2).unwrap());
            std::hint::black_box(chordal_is_1_extendable(g).unwrap());
            start.elapsed()
        })
        .min()
        .unwrap()
}

/// A corona over a band graph (`i ~ j` for `|i - j| <= 3`) with contiguous
/// labels. Well-covered and 1-extendable, so no route exits early.
fn banded_corona(base: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..base {
        let b = 3 * i;
        edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)]);
        edges.extend((1..=3).filter(|d| i + d < base).map(|d| (b, 3 * (i + d))));
    }
    Graph::from_edges(3 * base, edges).unwrap()
}

/// Coarse linearity check: doubling `n + m` at most triples the time.
#[test]
fn chordal_routes_scale_linearly() {
    let small = banded_corona(30_000);
    let large = banded_corona(60_000);
    assert!(chordal_is_wk(&large, 2).unwrap().holds);
    assert!(chordal_is_1_extendable(&large).unwrap().holds);
    let ratio = min_time(&large).as_secs_f64() / min_time(&small).as_secs_f64();
    assert!(ratio <= 3.0, "time ratio {ratio}");
}

#[test]
fn random_chordal_is_chordal() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 0..40 {
        assert!(is_chordal(&random_chordal(&mut rng, n)));
    }
}
