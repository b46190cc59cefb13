//! Independence-number and extendability tests over a SAT oracle.
//!
//! Every question is reduced to "does `G` have an independent set of size at
//! least `r` through a given set?", encoded by [`encode::encode_mis_query`].
//! The oracle counts its calls and checks every returned model.

pub mod dpll;
pub mod encode;
pub mod external;

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cnf::{evaluate, Assignment, CnfFormula, Evaluation};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::mis::Dense;
use crate::verdict::{Certificate, Verdict};

pub use dpll::Dpll;
pub use encode::{encode_mis_query, MisQuery};
pub use external::ExternalSolver;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("forced set {0} is not independent")]
    InfeasibleForced(VertexSet),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("external solver: {0}")]
    External(String),
    #[error("solver returned a model that does not satisfy the formula")]
    BadModel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SatResult {
    /// Total model, index `i` holds variable `i + 1`.
    Sat(Vec<bool>),
    Unsat,
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SatResult::Sat(_))
    }
}

pub trait SatBackend {
    fn solve(&mut self, formula: &CnfFormula) -> Result<SatResult, OracleError>;
    fn name(&self) -> &str;
}

/// A SAT backend plus a call counter.
pub struct SatOracle {
    backend: Box<dyn SatBackend>,
    calls: u64,
}

impl SatOracle {
    pub fn new(backend: Box<dyn SatBackend>) -> SatOracle {
        SatOracle { backend, calls: 0 }
    }

    pub fn solve(&mut self, formula: &CnfFormula) -> Result<SatResult, OracleError> {
        self.calls += 1;
        let result = self.backend.solve(formula)?;
        if let SatResult::Sat(model) = &result {
            if model.len() != formula.num_vars()
                || evaluate(formula, &Assignment::total(model)) != Evaluation::Satisfied
            {
                return Err(OracleError::BadModel);
            }
        }
        Ok(result)
    }

    pub fn calls(&self) -> u64 {
        self.calls
    }

    pub fn backend_name(&self) -> &str {
        self.backend.name()
    }
}

pub fn builtin_solver() -> SatOracle {
    SatOracle::new(Box::new(Dpll))
}

/// How the partial extendability test talks to the oracle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMode {
    /// One query per independent set, stopping at the first failure.
    #[default]
    PerSet,
    /// A single query on the variable-disjoint conjunction of all per-set
    /// formulas.
    Combined,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleStats {
    pub calls: u64,
    pub search_calls: u64,
    pub extension_calls: u64,
    pub mode: Option<OracleMode>,
}

fn mis_at_least(g: &Graph, r: usize, oracle: &mut SatOracle) -> Result<bool, OracleError> {
    let f = encode_mis_query(&MisQuery { graph: g, r, forced: VertexSet::empty() })?;
    Ok(oracle.solve(&f)?.is_sat())
}

/// `alpha(G)` by binary search over `r` in `1..=n`. Uses at most
/// `ceil(log2(n + 1))` calls, none for the empty graph.
pub fn alpha_binary_search(g: &Graph, oracle: &mut SatOracle) -> Result<(usize, OracleStats), OracleError> {
    let before = oracle.calls();
    let (mut lo, mut hi) = (g.n().min(1), g.n());
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if mis_at_least(g, mid, oracle)? {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let calls = oracle.calls() - before;
    Ok((lo, OracleStats { calls, search_calls: calls, extension_calls: 0, mode: None }))
}

/// Independent sets of size `1..=s` in size-then-lexicographic order until
/// `f` breaks. The empty set is skipped: it extends whenever any singleton
/// does.
fn for_each_small_set<F>(g: &Graph, s: usize, mut f: F) -> Result<(), OracleError>
where
    F: FnMut(&[usize]) -> Result<ControlFlow<()>, OracleError>,
{
    let dense = Dense::new(g);
    let all = dense.all();
    let mut err = None;
    for k in 1..=s.min(g.n()) {
        let mut seen = false;
        let flow = dense.for_each_independent_set_of_size(&all, k, |set| {
            seen = true;
            match f(set) {
                Ok(flow) => flow,
                Err(e) => {
                    err = Some(e);
                    ControlFlow::Break(())
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if flow.is_break() || !seen {
            break;
        }
    }
    Ok(())
}

/// Whether every independent set of size at most `s` lies in an independent
/// set of size at least `r`. On failure in [`OracleMode::PerSet`] the first
/// failing set is returned.
pub fn partial_s_extendable(
    g: &Graph,
    r: usize,
    s: usize,
    oracle: &mut SatOracle,
    mode: OracleMode,
) -> Result<(Option<VertexSet>, bool, OracleStats), OracleError> {
    let before = oracle.calls();
    let mut failing = None;
    if r > 0 {
        match mode {
            OracleMode::PerSet => {
                for_each_small_set(g, s, |set| {
                    let forced = VertexSet::new(set.iter().copied());
                    let f = encode_mis_query(&MisQuery { graph: g, r, forced: forced.clone() })?;
                    if oracle.solve(&f)?.is_sat() {
                        Ok(ControlFlow::Continue(()))
                    } else {
                        failing = Some(forced);
                        Ok(ControlFlow::Break(()))
                    }
                })?;
            }
            OracleMode::Combined => {
                let mut combined = CnfFormula::new(0, Vec::new());
                let mut any = false;
                for_each_small_set(g, s, |set| {
                    let forced = VertexSet::new(set.iter().copied());
                    combined.conjoin_disjoint(&encode_mis_query(&MisQuery { graph: g, r, forced })?);
                    any = true;
                    Ok(ControlFlow::Continue(()))
                })?;
                if any && !oracle.solve(&combined)?.is_sat() {
                    let calls = oracle.calls() - before;
                    let stats = OracleStats { calls, search_calls: 0, extension_calls: calls, mode: Some(mode) };
                    return Ok((None, false, stats));
                }
            }
        }
    }
    let calls = oracle.calls() - before;
    let stats = OracleStats { calls, search_calls: 0, extension_calls: calls, mode: Some(mode) };
    Ok((failing.clone(), failing.is_none(), stats))
}

/// `E_s` membership: binary search for `alpha`, then the partial
/// extendability test with `r = alpha`.
pub fn is_es_via_oracle(
    g: &Graph,
    s: usize,
    oracle: &mut SatOracle,
    mode: OracleMode,
) -> Result<(Verdict, OracleStats), OracleError> {
    if s == 0 {
        return Ok((Verdict::yes(), OracleStats { mode: Some(mode), ..OracleStats::default() }));
    }
    let (alpha, search) = alpha_binary_search(g, oracle)?;
    let (failing, holds, ext) = partial_s_extendable(g, alpha, s, oracle, mode)?;
    let verdict = match (holds, failing) {
        (true, _) => Verdict::yes(),
        (false, Some(set)) => Verdict::no(Certificate::NonExtendableSet { set }),
        (false, None) => Verdict::no_without_certificate(),
    };
    let stats = OracleStats {
        calls: search.calls + ext.calls,
        search_calls: search.calls,
        extension_calls: ext.calls,
        mode: Some(mode),
    };
    Ok((verdict, stats))
}

/// Smallest `b` with `2^b >= x`.
pub fn ceil_log2(x: usize) -> u64 {
    if x <= 1 {
        0
    } else {
        u64::from(usize::BITS - (x - 1).leading_zeros())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mis::independence_number;
    use crate::recognizers::is_es;

    #[test]
    fn alpha_on_small_families() {
        for n in 0..9 {
            for g in [Graph::path(n), Graph::cycle(n.max(3)), Graph::complete(n), Graph::empty(n)] {
                let mut o = builtin_solver();
                let (alpha, stats) = alpha_binary_search(&g, &mut o).unwrap();
                assert_eq!(alpha, independence_number(&g));
                assert!(stats.calls <= ceil_log2(g.n() + 1) + 1);
            }
        }
        let mut o = builtin_solver();
        assert_eq!(alpha_binary_search(&Graph::empty(0), &mut o).unwrap().1.calls, 0);
    }

    #[test]
    fn es_modes_agree_with_definition() {
        let graphs = [
            Graph::path(4),
            Graph::path(5),
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::star(3),
            Graph::complete(4),
            Graph::new(4, &[(0, 1), (2, 3)]).unwrap(),
        ];
        for g in &graphs {
            for s in 1..=3 {
                let expected = is_es(g, s);
                let (per_set, _) = is_es_via_oracle(g, s, &mut builtin_solver(), OracleMode::PerSet).unwrap();
                assert_eq!(per_set, expected);
                let (combined, stats) = is_es_via_oracle(g, s, &mut builtin_solver(), OracleMode::Combined).unwrap();
                assert_eq!(combined.holds, expected.holds);
                assert!(stats.calls <= ceil_log2(g.n() + 1) + 2);
            }
        }
    }

    #[test]
    fn r_zero_needs_no_calls() {
        let mut o = builtin_solver();
        let (_, holds, stats) = partial_s_extendable(&Graph::path(3), 0, 2, &mut o, OracleMode::PerSet).unwrap();
        assert!(holds);
        assert_eq!(stats.calls, 0);
    }

    #[test]
    fn ceil_log2_values() {
        assert_eq!([1, 2, 3, 4, 5, 8, 9].map(ceil_log2), [0, 1, 2, 2, 3, 3, 4]);
    }
}
