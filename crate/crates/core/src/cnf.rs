//! CNF formulas, DIMACS I/O, assignment evaluation and an exhaustive
//! satisfiability check.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("line {line}: literal {literal} is out of range for {num_vars} variables")]
    LiteralOutOfRange {
        line: usize,
        literal: i64,
        num_vars: usize,
    },
    #[error("line {line}: `{token}` is not an integer literal")]
    BadToken { line: usize, token: String },
    #[error("header declares {declared} clauses but {found} were read")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("formula has {num_vars} variables, above the exhaustive-search cap of {cap}")]
    TooManyVariables { num_vars: usize, cap: usize },
}

/// A literal in DIMACS convention: `+v` is variable `v`, `-v` its negation.
pub type Literal = i32;

pub fn var_of(lit: Literal) -> usize {
    lit.unsigned_abs() as usize
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// # Panics
    /// If a literal is zero or names a variable outside `1..=num_vars`.
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> CnfFormula {
        for c in &clauses {
            for &l in c {
                assert!(l != 0 && var_of(l) <= num_vars, "literal {l} out of range");
            }
        }
        CnfFormula { num_vars, clauses }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// Every clause has exactly three literals (repeats allowed).
    pub fn is_three_cnf(&self) -> bool {
        self.clauses.iter().all(|c| c.len() == 3)
    }

    /// Index of the first clause containing some literal and its negation.
    pub fn first_tautological_clause(&self) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| c.iter().any(|&l| c.contains(&-l)))
    }

    /// Conjunction of `self` and `other` with `other`'s variables shifted
    /// past `self`'s.
    pub fn conjoin_disjoint(&mut self, other: &CnfFormula) {
        let off = self.num_vars as Literal;
        self.clauses.extend(
            other
                .clauses
                .iter()
                .map(|c| c.iter().map(|&l| if l > 0 { l + off } else { l - off }).collect()),
        );
        self.num_vars += other.num_vars;
    }

    pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('c') {
                continue;
            }
            if l.starts_with('p') {
                if header.is_some() {
                    return Err(CnfError::MalformedHeader(format!("second header on line {line}")));
                }
                let parts: Vec<&str> = l.split_whitespace().collect();
                let parsed = match parts.as_slice() {
                    ["p", "cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                    _ => None,
                };
                header = Some(parsed.ok_or_else(|| CnfError::MalformedHeader(l.to_string()))?);
                continue;
            }
            let Some((num_vars, _)) = header else {
                return Err(CnfError::MalformedHeader(format!(
                    "clause data before the `p cnf` header on line {line}"
                )));
            };
            for tok in l.split_whitespace() {
                let lit: i64 = tok.parse().map_err(|_| CnfError::BadToken {
                    line,
                    token: tok.to_string(),
                })?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else if lit.unsigned_abs() as usize > num_vars {
                    return Err(CnfError::LiteralOutOfRange {
                        line,
                        literal: lit,
                        num_vars,
                    });
                } else {
                    current.push(lit as Literal);
                }
            }
        }
        let (num_vars, declared) =
            header.ok_or_else(|| CnfError::MalformedHeader("missing `p cnf` header".into()))?;
        if !current.is_empty() {
            // A final clause without its terminating 0.
            clauses.push(current);
        }
        if clauses.len() != declared {
            return Err(CnfError::ClauseCountMismatch {
                declared,
                found: clauses.len(),
            });
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                out.push_str(&l.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

impl fmt::Debug for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CNF[{} vars](", self.num_vars)?;
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                write!(f, " & ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, ")")
    }
}

/// A partial truth assignment over 1-indexed variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment(BTreeMap<usize, bool>);

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    /// A total assignment from a slice indexed by `var - 1`.
    pub fn total(values: &[bool]) -> Assignment {
        Assignment(values.iter().enumerate().map(|(i, &b)| (i + 1, b)).collect())
    }

    pub fn set(&mut self, var: usize, value: bool) {
        assert!(var >= 1, "variables are 1-indexed");
        self.0.insert(var, value);
    }

    pub fn get(&self, var: usize) -> Option<bool> {
        self.0.get(&var).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.0.iter().map(|(&v, &b)| (v, b))
    }

    pub fn literal_value(&self, lit: Literal) -> Option<bool> {
        self.get(var_of(lit)).map(|b| b == (lit > 0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Satisfied,
    Falsified,
    Undetermined,
}

pub fn evaluate(f: &CnfFormula, a: &Assignment) -> Evaluation {
    let mut all_satisfied = true;
    for c in f.clauses() {
        let mut sat = false;
        let mut open = false;
        for &l in c {
            match a.literal_value(l) {
                Some(true) => {
                    sat = true;
                    break;
                }
                Some(false) => {}
                None => open = true,
            }
        }
        if !sat {
            if !open {
                return Evaluation::Falsified;
            }
            all_satisfied = false;
        }
    }
    if all_satisfied {
        Evaluation::Satisfied
    } else {
        Evaluation::Undetermined
    }
}

pub const DEFAULT_BRUTE_FORCE_CAP: usize = 24;

/// Tries all `2^n` assignments and returns the first satisfying one, in the
/// order where variable 1 is the most significant bit and `false < true`.
pub fn brute_force_satisfiable(f: &CnfFormula) -> Result<Option<Assignment>, CnfError> {
    brute_force_satisfiable_with_cap(f, DEFAULT_BRUTE_FORCE_CAP)
}

pub fn brute_force_satisfiable_with_cap(f: &CnfFormula, cap: usize) -> Result<Option<Assignment>, CnfError> {
    let n = f.num_vars();
    if n > cap {
        return Err(CnfError::TooManyVariables { num_vars: n, cap });
    }
    let value = |bits: u64, var: usize| bits >> (n - var) & 1 == 1;
    for bits in 0..1u64 << n {
        let ok = f
            .clauses()
            .iter()
            .all(|c| c.iter().any(|&l| value(bits, var_of(l)) == (l > 0)));
        if ok {
            let values: Vec<bool> = (1..=n).map(|v| value(bits, v)).collect();
            return Ok(Some(Assignment::total(&values)));
        }
    }
    Ok(None)
}
