//! Exhaustive and seeded checks of the equivalences each gadget and fast
//! algorithm is built on, against the brute-force recognizers.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chordal::{chordal_is_1_extendable, chordal_is_wk, lex_bfs_peo};
use crate::cnf::{brute_force_satisfiable, CnfFormula, Literal};
use crate::domination::domination_number;
use crate::gadgets::{
    domset_to_chordal_es, domset_to_chordal_es_edges_only, g_plus, gadget_es_wellcovered, gadget_w2_shedding,
    gadget_wk, mis_equality_to_1ext, pi_join, GadgetOrVerdict,
};
use crate::generate::{
    chordal_mix, exhaustive_small_3cnf, labeled_graph_catalog, random_3cnf, random_graph, random_universal_free_graph,
};
use crate::graph::Graph;
use crate::mis::independence_number;
use crate::oracle::{builtin_solver, ceil_log2, is_es_via_oracle, OracleMode};
use crate::recognizers::{is_b_graph, is_es, is_k_extendable, is_shedding, is_well_covered, is_wk_staples};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    GadgetW2,
    GadgetWk,
    GadgetEs,
    PiAlpha,
    GplusLemma,
    MisEq,
    Domset,
    ChordalAgree,
    OracleAgree,
    Hierarchy,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::GadgetW2,
        Suite::GadgetWk,
        Suite::GadgetEs,
        Suite::PiAlpha,
        Suite::GplusLemma,
        Suite::MisEq,
        Suite::Domset,
        Suite::ChordalAgree,
        Suite::OracleAgree,
        Suite::Hierarchy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GadgetW2 => "gadget-w2",
            Suite::GadgetWk => "gadget-wk",
            Suite::GadgetEs => "gadget-es",
            Suite::PiAlpha => "pi-alpha",
            Suite::GplusLemma => "gplus-lemma",
            Suite::MisEq => "mis-eq",
            Suite::Domset => "domset",
            Suite::ChordalAgree => "chordal-agree",
            Suite::OracleAgree => "oracle-agree",
            Suite::Hierarchy => "hierarchy",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Variable bound for formula suites, vertex bound for graph suites.
    pub size: usize,
    pub seed: u64,
    /// Number of random instances on top of any exhaustive part.
    pub count: usize,
}

/// The first instance on which a claimed equivalence fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph2: Option<String>,
}

impl Counterexample {
    fn formula(f: &CnfFormula, detail: String) -> Counterexample {
        Counterexample { detail, formula: Some(f.to_dimacs()), graph: None, graph2: None }
    }

    fn graph(g: &Graph, detail: String) -> Counterexample {
        Counterexample { detail, formula: None, graph: Some(g.to_edge_list()), graph2: None }
    }

    fn pair(g: &Graph, h: &Graph, detail: String) -> Counterexample {
        Counterexample { detail, formula: None, graph: Some(g.to_edge_list()), graph2: Some(h.to_edge_list()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub config: SuiteConfig,
    pub instances: usize,
    /// Instances on which the central property held, to show both sides of
    /// each equivalence were exercised.
    pub positives: usize,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

type Check = Result<bool, Counterexample>;

fn ensure(cond: bool, make: impl FnOnce() -> Counterexample) -> Result<(), Counterexample> {
    if cond {
        Ok(())
    } else {
        Err(make())
    }
}

/// Exhaustive formulas over at most `min(size, 2)` variables followed by
/// `count` random ones over at most `size` variables and 5 clauses.
pub fn formula_set(size: usize, count: usize, seed: u64) -> Vec<CnfFormula> {
    let mut out: Vec<CnfFormula> = exhaustive_small_3cnf(4)
        .into_iter()
        .filter(|f| f.num_vars() <= size)
        .collect();
    if size > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        out.extend((0..count).map(|_| random_3cnf(&mut rng, size, 5)));
    }
    out
}

fn unsat(f: &CnfFormula) -> bool {
    brute_force_satisfiable(f).expect("small formula").is_none()
}

pub fn check_w2_gadget(f: &CnfFormula) -> Check {
    let g = gadget_w2_shedding(f).map_err(|e| Counterexample::formula(f, e.to_string()))?;
    let u = unsat(f);
    let wc = is_well_covered(&g.graph).holds;
    let w2 = is_wk_staples(&g.graph, 2).holds;
    let shed = is_shedding(&g.graph, g.distinguished.expect("apex")).expect("apex in range").holds;
    ensure(wc && u == w2 && w2 == shed, || {
        Counterexample::formula(f, format!("unsat={u} well_covered={wc} w2={w2} shedding={shed}"))
    })?;
    Ok(u)
}

pub fn check_wk_gadget(f: &CnfFormula, k: usize) -> Check {
    let g = gadget_wk(f, k).map_err(|e| Counterexample::formula(f, e.to_string()))?;
    let u = unsat(f);
    let lower = is_wk_staples(&g.graph, k - 1).holds;
    let wk = is_wk_staples(&g.graph, k).holds;
    ensure(lower && u == wk, || {
        Counterexample::formula(f, format!("k={k} unsat={u} w_k-1={lower} w_k={wk}"))
    })?;
    Ok(u)
}

/// Independent pre-test oracle: tries every partial assignment, written as
/// a value in `{unset, false, true}` per variable.
pub fn some_partial_assignment_satisfies(f: &CnfFormula, s: usize) -> bool {
    let n = f.num_vars();
    let total = 3usize.pow(n as u32);
    (0..total).any(|mut code| {
        let mut vals = vec![None; n + 1];
        for v in vals.iter_mut().skip(1) {
            *v = match code % 3 {
                0 => None,
                1 => Some(false),
                _ => Some(true),
            };
            code /= 3;
        }
        vals.iter().flatten().count() <= s
            && f.clauses().iter().all(|c| {
                c.iter().any(|&l: &Literal| vals[l.unsigned_abs() as usize] == Some(l > 0))
            })
    })
}

pub fn check_es_gadget(f: &CnfFormula, s: usize) -> Check {
    let out = gadget_es_wellcovered(f, s).map_err(|e| Counterexample::formula(f, e.to_string()))?;
    let fires = some_partial_assignment_satisfies(f, s);
    let u = unsat(f);
    match out {
        GadgetOrVerdict::KnownNegative { .. } => {
            ensure(fires && !u, || Counterexample::formula(f, format!("s={s} pre-test fired wrongly")))?;
            Ok(false)
        }
        GadgetOrVerdict::Built(g) => {
            let es = is_es(&g.graph, s).holds;
            let wc = is_well_covered(&g.graph).holds;
            ensure(!fires && es && u == wc, || {
                Counterexample::formula(f, format!("s={s} pre_test_should_fire={fires} es={es} unsat={u} well_covered={wc}"))
            })?;
            Ok(u)
        }
    }
}

pub fn check_pi_alpha(g: &Graph, h: &Graph) -> Check {
    let p = pi_join(g, h);
    let alpha = independence_number(&p.graph);
    let expected = (g.n() + independence_number(h)).max(h.n() + independence_number(g));
    ensure(alpha == expected && p.graph.n() == 2 * (g.n() + h.n()), || {
        Counterexample::pair(g, h, format!("alpha={alpha} expected={expected} n={}", p.graph.n()))
    })?;
    Ok(true)
}

pub fn check_gplus(g: &Graph, s: usize) -> Check {
    let plus = g_plus(g);
    let lhs = is_es(&plus.graph, s).holds;
    let rhs = s == 1 || is_es(g, s - 1).holds;
    ensure(lhs == rhs, || Counterexample::graph(g, format!("s={s} G+ in E_s={lhs} G in E_s-1={rhs}")))?;
    Ok(lhs)
}

pub fn check_mis_eq(g: &Graph, h: &Graph) -> Check {
    let gadget = mis_equality_to_1ext(g, h).map_err(|e| Counterexample::pair(g, h, e.to_string()))?;
    let eq = independence_number(g) == independence_number(h);
    let ext = is_b_graph(&gadget.graph).holds;
    ensure(eq == ext, || Counterexample::pair(g, h, format!("alpha_equal={eq} one_extendable={ext}")))?;
    Ok(eq)
}

/// Checks the closed-neighborhood gadget for `s` in `1..=max_s`. Returns
/// whether the edges-only reading disagrees on some `E_s` verdict.
pub fn check_domset(g: &Graph, max_s: usize) -> Result<(bool, bool), Counterexample> {
    let d = domset_to_chordal_es(g).map_err(|e| Counterexample::graph(g, e.to_string()))?;
    let n = g.n();
    let chordal = lex_bfs_peo(&d.graph).is_ok();
    let ext = is_b_graph(&d.graph).holds;
    let alpha = independence_number(&d.graph);
    ensure(chordal && ext && alpha == n + 1, || {
        Counterexample::graph(g, format!("chordal={chordal} one_extendable={ext} alpha={alpha}"))
    })?;
    let gamma = domination_number(g);
    let alt = domset_to_chordal_es_edges_only(g).map_err(|e| Counterexample::graph(g, e.to_string()))?;
    let mut disagree = false;
    for s in 1..=max_s {
        let es = is_es(&d.graph, s).holds;
        ensure(!es == (gamma <= s), || Counterexample::graph(g, format!("s={s} in_E_s={es} domination={gamma}")))?;
        disagree |= is_es(&alt.graph, s).holds != es;
    }
    Ok((gamma <= max_s, disagree))
}

pub fn check_chordal(g: &Graph) -> Check {
    let mut any = false;
    for k in 1..=3 {
        let fast = chordal_is_wk(g, k).map_err(|e| Counterexample::graph(g, e.to_string()))?;
        let slow = is_wk_staples(g, k).holds;
        let cert_ok = fast.verify(g).is_ok();
        ensure(fast.holds == slow && cert_ok, || {
            Counterexample::graph(g, format!("k={k} chordal={} staples={slow} certificate_ok={cert_ok}", fast.holds))
        })?;
        any |= slow;
    }
    let fast = chordal_is_1_extendable(g).map_err(|e| Counterexample::graph(g, e.to_string()))?;
    let slow = is_b_graph(g).holds;
    let cert_ok = fast.verify(g).is_ok();
    ensure(fast.holds == slow && cert_ok, || {
        Counterexample::graph(g, format!("chordal_1ext={} b_graph={slow} certificate_ok={cert_ok}", fast.holds))
    })?;
    Ok(any || slow)
}

pub fn check_oracle(g: &Graph, s: usize) -> Check {
    let expected = is_es(g, s);
    let bound = ceil_log2(g.n() + 1);
    for mode in [OracleMode::PerSet, OracleMode::Combined] {
        let (v, stats) = is_es_via_oracle(g, s, &mut builtin_solver(), mode)
            .map_err(|e| Counterexample::graph(g, e.to_string()))?;
        let cert_ok = v.verify(g).is_ok();
        let search_ok = stats.search_calls <= bound + 1;
        let total_ok = mode == OracleMode::PerSet || stats.calls <= bound + 2;
        ensure(v.holds == expected.holds && cert_ok && search_ok && total_ok, || {
            Counterexample::graph(
                g,
                format!("s={s} mode={mode:?} oracle={} brute={} stats={stats:?} certificate_ok={cert_ok}", v.holds, expected.holds),
            )
        })?;
    }
    Ok(expected.holds)
}

/// Containments among the classes on one graph, with `k, s <= 3` for the
/// `W_k` and `E_s` chains.
pub fn check_hierarchy(g: &Graph) -> Check {
    let n = g.n();
    let wc = is_well_covered(g).holds;
    let w: Vec<bool> = (1..=4).map(|k| is_wk_staples(g, k).holds).collect();
    let ext: Vec<bool> = (1..=n.max(1)).map(|k| is_k_extendable(g, k).holds).collect();
    let es: Vec<bool> = (1..=n.max(1)).map(|s| is_es(g, s).holds).collect();
    let fail = |what: &str| Counterexample::graph(g, what.to_string());
    ensure(w[0] == wc, || fail("W_1 differs from well-covered"))?;
    ensure(es[0] == ext[0], || fail("E_1 differs from 1-extendable"))?;
    for k in 0..3 {
        ensure(!w[k + 1] || w[k], || fail(&format!("W_{} not inside W_{}", k + 2, k + 1)))?;
    }
    for s in 1..es.len() {
        ensure(!es[s] || es[s - 1], || fail(&format!("E_{} not inside E_{s}", s + 1)))?;
        ensure(es[s] == (es[s - 1] && ext[s]), || fail("E_s is not E_s-1 plus s-extendable"))?;
    }
    for (k, &wk) in w.iter().enumerate() {
        for (s, &e) in es.iter().enumerate() {
            ensure(!wk || e, || fail(&format!("W_{} graph outside E_{}", k + 1, s + 1)))?;
        }
    }
    ensure(wc == ext.iter().all(|&x| x), || fail("well-covered differs from k-extendable for all k"))?;
    Ok(wc)
}

fn random_pair<R: Rng>(rng: &mut R, max_n: usize) -> (Graph, Graph) {
    let a = rng.gen_range(1..=max_n.max(1));
    let b = rng.gen_range(1..=max_n.max(1));
    let p = rng.gen_range(0.1..0.9);
    let q = rng.gen_range(0.1..0.9);
    (random_graph(rng, a, p), random_graph(rng, b, q))
}

pub fn run_suite(config: &SuiteConfig) -> SuiteOutcome {
    let mut outcome = SuiteOutcome {
        config: config.clone(),
        instances: 0,
        positives: 0,
        counterexample: None,
        notes: Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let size = config.size;
    let record = |res: Check, o: &mut SuiteOutcome| -> bool {
        o.instances += 1;
        match res {
            Ok(p) => {
                o.positives += usize::from(p);
                true
            }
            Err(c) => {
                o.counterexample = Some(c);
                false
            }
        }
    };
    match config.suite {
        Suite::GadgetW2 | Suite::GadgetWk | Suite::GadgetEs => {
            'outer: for f in formula_set(size, config.count, config.seed) {
                let params: &[usize] = if config.suite == Suite::GadgetWk { &[2, 3] } else { &[1, 2] };
                for &p in params {
                    let res = match config.suite {
                        Suite::GadgetW2 if p == 1 => check_w2_gadget(&f),
                        Suite::GadgetW2 => continue,
                        Suite::GadgetWk => check_wk_gadget(&f, p),
                        _ => check_es_gadget(&f, p),
                    };
                    if !record(res, &mut outcome) {
                        break 'outer;
                    }
                }
            }
        }
        Suite::PiAlpha | Suite::MisEq => {
            for _ in 0..config.count {
                let (g, h) = random_pair(&mut rng, size);
                let res = if config.suite == Suite::PiAlpha { check_pi_alpha(&g, &h) } else { check_mis_eq(&g, &h) };
                if !record(res, &mut outcome) {
                    break;
                }
            }
        }
        Suite::GplusLemma => {
            'outer: for _ in 0..config.count {
                let n = rng.gen_range(1..=size.max(1));
                let p = rng.gen_range(0.1..0.9);
                let g = random_graph(&mut rng, n, p);
                for s in 1..=2 {
                    if !record(check_gplus(&g, s), &mut outcome) {
                        break 'outer;
                    }
                }
            }
        }
        Suite::Domset => {
            let mut disagreements = 0;
            for _ in 0..config.count {
                let n = rng.gen_range(2..=size.max(2));
                let p = rng.gen_range(0.1..0.8);
                let g = random_universal_free_graph(&mut rng, n, p);
                let res = check_domset(&g, 3).map(|(pos, dis)| {
                    disagreements += usize::from(dis);
                    pos
                });
                if !record(res, &mut outcome) {
                    break;
                }
            }
            outcome.notes.push(format!("edges-only reading disagreed on {disagreements} instance(s)"));
        }
        Suite::ChordalAgree => {
            for _ in 0..config.count {
                let g = chordal_mix(&mut rng, size.max(1));
                if !record(check_chordal(&g), &mut outcome) {
                    break;
                }
            }
        }
        Suite::OracleAgree => {
            'outer: for _ in 0..config.count {
                let n = rng.gen_range(1..=size.max(1));
                let p = rng.gen_range(0.1..0.8);
                let g = random_graph(&mut rng, n, p);
                for s in 1..=2 {
                    if !record(check_oracle(&g, s), &mut outcome) {
                        break 'outer;
                    }
                }
            }
        }
        Suite::Hierarchy => {
            let exhaustive = size.min(5);
            let cap = config.count.max(1);
            for g in labeled_graph_catalog(&mut rng, exhaustive, size, cap) {
                if !record(check_hierarchy(&g), &mut outcome) {
                    break;
                }
            }
        }
    }
    outcome
}
