//! Backend that shells out to a DIMACS solver.
//!
//! The formula is written to a temporary file passed as the last argument.
//! The solver must print `SAT` or `UNSAT` on its first non-empty line and,
//! when satisfiable, a line of space-separated literals (an optional leading
//! `v` and trailing `0` are accepted). Unlisted variables read as false.

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use crate::cnf::CnfFormula;

use super::{OracleError, SatBackend, SatResult};

#[derive(Clone, Debug)]
pub struct ExternalSolver {
    pub program: PathBuf,
    pub args: Vec<String>,
}

impl ExternalSolver {
    pub fn new(program: impl Into<PathBuf>) -> ExternalSolver {
        ExternalSolver { program: program.into(), args: Vec::new() }
    }
}

impl SatBackend for ExternalSolver {
    fn solve(&mut self, formula: &CnfFormula) -> Result<SatResult, OracleError> {
        let mut file = tempfile::NamedTempFile::new().map_err(|e| OracleError::External(e.to_string()))?;
        file.write_all(formula.to_dimacs().as_bytes())
            .and_then(|()| file.flush())
            .map_err(|e| OracleError::External(e.to_string()))?;
        let output = Command::new(&self.program)
            .args(&self.args)
            .arg(file.path())
            .output()
            .map_err(|e| OracleError::External(format!("{}: {e}", self.program.display())))?;
        parse_output(&String::from_utf8_lossy(&output.stdout), formula.num_vars())
    }

    fn name(&self) -> &str {
        "external"
    }
}

pub fn parse_output(text: &str, num_vars: usize) -> Result<SatResult, OracleError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('c'));
    match lines.next() {
        Some("UNSAT") | Some("s UNSATISFIABLE") => Ok(SatResult::Unsat),
        Some("SAT") | Some("s SATISFIABLE") => {
            let mut model = vec![false; num_vars];
            for line in lines {
                for tok in line.split_whitespace().filter(|&t| t != "v") {
                    let lit: i64 = tok
                        .parse()
                        .map_err(|_| OracleError::External(format!("bad model token {tok:?}")))?;
                    let var = lit.unsigned_abs() as usize;
                    if var == 0 {
                        continue;
                    }
                    if var > num_vars {
                        return Err(OracleError::External(format!("model literal {lit} out of range")));
                    }
                    model[var - 1] = lit > 0;
                }
            }
            Ok(SatResult::Sat(model))
        }
        other => Err(OracleError::External(format!("unexpected solver output {other:?}"))),
    }
}
