//! A small complete DPLL solver.
//!
//! Branching is fixed: the lowest unassigned variable of the current
//! component, `true` first. Variables that occur in no clause end up `true`.
//! Before searching, the clause set is split into variable-disjoint
//! components which are solved one after the other, so an unsatisfiable
//! component never makes the search revisit the others.

use crate::cnf::{var_of, CnfFormula, Literal};

use super::{OracleError, SatBackend, SatResult};

#[derive(Clone, Debug, Default)]
pub struct Dpll;

impl SatBackend for Dpll {
    fn solve(&mut self, formula: &CnfFormula) -> Result<SatResult, OracleError> {
        Ok(solve(formula))
    }

    fn name(&self) -> &str {
        "builtin-dpll"
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Value {
    Unassigned,
    True,
    False,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn solve(formula: &CnfFormula) -> SatResult {
    let n = formula.num_vars();
    let clauses = formula.clauses();
    if clauses.iter().any(Vec::is_empty) {
        return SatResult::Unsat;
    }

    // Components over variables (index 0 unused).
    let mut parent: Vec<usize> = (0..=n).collect();
    for c in clauses {
        let first = var_of(c[0]);
        for &l in &c[1..] {
            let (a, b) = (find(&mut parent, first), find(&mut parent, var_of(l)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut comp_vars: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for v in 1..=n {
        let r = find(&mut parent, v);
        comp_vars[r].push(v);
    }
    let mut comp_clauses: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, c) in clauses.iter().enumerate() {
        let r = find(&mut parent, var_of(c[0]));
        comp_clauses[r].push(i);
    }

    let mut occurs: Vec<Vec<usize>> = vec![Vec::new(); 2 * (n + 1)];
    for (i, c) in clauses.iter().enumerate() {
        for &l in c {
            let slot = lit_slot(l);
            if occurs[slot].last() != Some(&i) {
                occurs[slot].push(i);
            }
        }
    }

    let mut search = Search {
        clauses,
        occurs,
        values: vec![Value::Unassigned; n + 1],
        trail: Vec::new(),
        head: 0,
    };
    for root in 1..=n {
        if comp_vars[root].is_empty() {
            continue;
        }
        if !search.solve_component(&comp_vars[root], &comp_clauses[root]) {
            return SatResult::Unsat;
        }
    }
    SatResult::Sat(search.values[1..].iter().map(|&v| v == Value::True).collect())
}

fn lit_slot(l: Literal) -> usize {
    2 * var_of(l) + usize::from(l < 0)
}

struct Search<'a> {
    clauses: &'a [Vec<Literal>],
    occurs: Vec<Vec<usize>>,
    values: Vec<Value>,
    trail: Vec<usize>,
    head: usize,
}

enum ClauseState {
    Satisfied,
    Open,
    Unit(Literal),
    Conflict,
}

impl Search<'_> {
    fn lit_value(&self, l: Literal) -> Value {
        match (self.values[var_of(l)], l > 0) {
            (Value::Unassigned, _) => Value::Unassigned,
            (Value::True, true) | (Value::False, false) => Value::True,
            _ => Value::False,
        }
    }

    fn clause_state(&self, c: &[Literal]) -> ClauseState {
        let mut unit = None;
        for &l in c {
            match self.lit_value(l) {
                Value::True => return ClauseState::Satisfied,
                Value::False => {}
                Value::Unassigned => match unit {
                    None => unit = Some(l),
                    Some(u) if u == l => {}
                    Some(_) => return ClauseState::Open,
                },
            }
        }
        match unit {
            Some(l) => ClauseState::Unit(l),
            None => ClauseState::Conflict,
        }
    }

    fn assign(&mut self, l: Literal) {
        let v = var_of(l);
        self.values[v] = if l > 0 { Value::True } else { Value::False };
        self.trail.push(v);
    }

    fn undo_to(&mut self, len: usize) {
        for &v in &self.trail[len..] {
            self.values[v] = Value::Unassigned;
        }
        self.trail.truncate(len);
        self.head = self.head.min(len);
    }

    /// Unit propagation from the trail head. Returns false on conflict.
    fn propagate(&mut self) -> bool {
        while self.head < self.trail.len() {
            let v = self.trail[self.head];
            self.head += 1;
            // Clauses where `v`'s literal just became false.
            let falsified: Literal = if self.values[v] == Value::True {
                -(v as Literal)
            } else {
                v as Literal
            };
            let slot = lit_slot(falsified);
            for k in 0..self.occurs[slot].len() {
                let ci = self.occurs[slot][k];
                match self.clause_state(&self.clauses[ci]) {
                    ClauseState::Conflict => return false,
                    ClauseState::Unit(l) => self.assign(l),
                    ClauseState::Satisfied | ClauseState::Open => {}
                }
            }
        }
        true
    }

    fn solve_component(&mut self, vars: &[usize], clause_ids: &[usize]) -> bool {
        let base = self.trail.len();
        for &ci in clause_ids {
            match self.clause_state(&self.clauses[ci]) {
                ClauseState::Conflict => return false,
                ClauseState::Unit(l) => self.assign(l),
                _ => {}
            }
        }
        // (trail length before the decision, decision variable, false tried)
        let mut decisions: Vec<(usize, usize, bool)> = Vec::new();
        let mut cursor = 0;
        loop {
            if !self.propagate() {
                loop {
                    let Some((len, var, tried_false)) = decisions.pop() else {
                        self.undo_to(base);
                        return false;
                    };
                    self.undo_to(len);
                    cursor = vars.partition_point(|&x| x < var);
                    if !tried_false {
                        self.assign(-(var as Literal));
                        decisions.push((len, var, true));
                        break;
                    }
                }
                continue;
            }
            while cursor < vars.len() && self.values[vars[cursor]] != Value::Unassigned {
                cursor += 1;
            }
            let Some(&var) = vars.get(cursor) else {
                return true;
            };
            decisions.push((self.trail.len(), var, false));
            self.assign(var as Literal);
        }
    }
}
