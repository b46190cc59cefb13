//! CNF encoding of "G has an independent set of size at least r containing
//! a given set".
//!
//! Variable `v + 1` is true when vertex `v` is chosen. The cardinality bound
//! is a sequential counter stating that at most `n - r` vertices are left
//! out; auxiliary variables follow the vertex variables.

use crate::cnf::{CnfFormula, Literal};
use crate::graph::{is_independent, Graph, VertexSet};

use super::OracleError;

/// The question "is there an independent set `I` with `forced ⊆ I` and
/// `|I| >= r`?".
#[derive(Clone, Debug)]
pub struct MisQuery<'a> {
    pub graph: &'a Graph,
    pub r: usize,
    pub forced: VertexSet,
}

pub fn vertex_var(v: usize) -> Literal {
    (v + 1) as Literal
}

pub fn encode_mis_query(q: &MisQuery<'_>) -> Result<CnfFormula, OracleError> {
    let g = q.graph;
    let n = g.n();
    if !is_independent(g, &q.forced)? {
        return Err(OracleError::InfeasibleForced(q.forced.clone()));
    }
    let mut clauses: Vec<Vec<Literal>> = g
        .edges()
        .map(|(u, v)| vec![-vertex_var(u), -vertex_var(v)])
        .collect();
    clauses.extend(q.forced.iter().map(|v| vec![vertex_var(v)]));

    let mut num_vars = n;
    if q.r > n {
        clauses.push(Vec::new());
    } else if q.r == n {
        clauses.extend((0..n).map(|v| vec![vertex_var(v)]));
    } else if q.r > 0 {
        // At most k of the literals x_i = not y_i are true, with 1 <= k < n.
        let k = n - q.r;
        let x = |i: usize| -vertex_var(i);
        let s = |i: usize, j: usize| (n + i * k + j + 1) as Literal;
        num_vars = n + (n - 1) * k;
        clauses.push(vec![-x(0), s(0, 0)]);
        for j in 1..k {
            clauses.push(vec![-s(0, j)]);
        }
        for i in 1..n - 1 {
            clauses.push(vec![-x(i), s(i, 0)]);
            clauses.push(vec![-s(i - 1, 0), s(i, 0)]);
            for j in 1..k {
                clauses.push(vec![-x(i), -s(i - 1, j - 1), s(i, j)]);
                clauses.push(vec![-s(i - 1, j), s(i, j)]);
            }
            clauses.push(vec![-x(i), -s(i - 1, k - 1)]);
        }
        clauses.push(vec![-x(n - 1), -s(n - 2, k - 1)]);
    }
    Ok(CnfFormula::new(num_vars, clauses))
}

/// Reads the chosen vertices back from a model of an encoded query.
pub fn decode_model(n: usize, model: &[bool]) -> VertexSet {
    VertexSet::new((0..n).filter(|&v| model[v]))
}
