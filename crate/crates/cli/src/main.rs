//! `wellcov`: recognize well-covered hierarchy classes, build reduction
//! gadgets and run the verification suites.

mod property;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use wellcov::chordal::{chordal_is_1_extendable, chordal_is_wk, ChordalError};
use wellcov::gadgets::{self, GadgetError, GadgetGraph, GadgetOrVerdict};
use wellcov::mis::independence_number;
use wellcov::oracle::{
    alpha_binary_search, builtin_solver, is_es_via_oracle, ExternalSolver, OracleError, OracleMode, SatOracle,
};
use wellcov::recognizers::recognize;
use wellcov::verify::{run_suite, Suite, SuiteConfig};
use wellcov::{ClassQuery, CnfFormula, Graph, Verdict};

use property::{Algo, Property};
use report::{AlphaResult, CheckResult, GadgetResult, GadgetStatus, InputDigest, OracleReport, RunReport};

const EXIT_NO: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_PARSE: i32 = 3;
const EXIT_MISMATCH: i32 = 4;
const EXIT_KNOWN_NEGATIVE: i32 = 5;

/// Largest graph the brute-force recognizers accept without `--force`.
const BRUTE_CAP: usize = 26;

#[derive(Parser, Debug)]
#[command(name = "wellcov", version, about = "Well-covered graph hierarchy toolkit")]
struct Cli {
    /// Print a JSON run report instead of human-readable lines.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a class membership property of a graph.
    Check(CheckArgs),
    /// Build a reduction gadget.
    Gadget(GadgetArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Compute the independence number.
    Alpha(AlphaArgs),
}

#[derive(Args, Debug)]
struct SolverArgs {
    /// External DIMACS solver; the formula path is passed as last argument.
    #[arg(long)]
    solver: Option<PathBuf>,
    /// Extra argument for the external solver (repeatable).
    #[arg(long = "solver-arg", allow_hyphen_values = true)]
    solver_args: Vec<String>,
}

impl SolverArgs {
    fn oracle(&self) -> SatOracle {
        match &self.solver {
            Some(program) => {
                let mut ext = ExternalSolver::new(program);
                ext.args = self.solver_args.clone();
                SatOracle::new(Box::new(ext))
            }
            None => builtin_solver(),
        }
    }
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// well-covered, wk:K, extendable:K, es:S, b-graph or shedding:V.
    #[arg(long)]
    property: String,
    #[arg(long, value_enum, default_value_t = Algo::Brute)]
    algo: Algo,
    /// Edge-list file.
    #[arg(long)]
    graph: PathBuf,
    /// Run brute force on graphs above the size cap.
    #[arg(long)]
    force: bool,
    /// Oracle query mode for `--algo sat`.
    #[arg(long, value_parser = parse_mode, default_value = "per-set")]
    mode: OracleMode,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Args, Debug)]
struct GadgetArgs {
    /// w2, wk:K, es:S, pi, gplus, mis-eq or domset.
    #[arg(long)]
    name: String,
    /// DIMACS CNF input for formula gadgets.
    #[arg(long)]
    cnf: Option<PathBuf>,
    /// Edge-list input for graph gadgets.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Second edge-list input for pi and mis-eq.
    #[arg(long)]
    graph2: Option<PathBuf>,
    /// Output edge-list path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Role sidecar path; defaults to `<out>.roles`.
    #[arg(long)]
    roles: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    /// Variable bound for formula suites, vertex bound for graph suites.
    #[arg(long, default_value_t = 4)]
    size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random instances on top of any exhaustive part.
    #[arg(long, default_value_t = 100)]
    count: usize,
}

#[derive(Args, Debug)]
struct AlphaArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Brute)]
    algo: Algo,
    #[command(flatten)]
    solver: SolverArgs,
}

fn parse_mode(s: &str) -> Result<OracleMode, String> {
    match s {
        "per-set" => Ok(OracleMode::PerSet),
        "combined" => Ok(OracleMode::Combined),
        _ => Err(format!("unknown mode {s:?}; expected per-set or combined")),
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn oracle_failure(e: OracleError) -> Failure {
    fail(EXIT_MISMATCH, format!("oracle: {e}"))
}

/// What a command produced: exit code, report sections and human lines.
struct Outcome {
    code: i32,
    lines: Vec<String>,
}

struct Run {
    report: RunReport,
    /// Text for standard output in human mode that is not a report line,
    /// such as a gadget edge list.
    raw: Option<String>,
}

impl Run {
    fn read(&mut self, role: &str, path: &Path) -> Result<Vec<u8>, Failure> {
        let bytes = fs::read(path).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
        self.report.inputs.push(InputDigest::new(role, &path.display().to_string(), &bytes));
        Ok(bytes)
    }

    fn read_graph(&mut self, role: &str, path: &Path) -> Result<Graph, Failure> {
        let bytes = self.read(role, path)?;
        Graph::parse_edge_list(&String::from_utf8_lossy(&bytes))
            .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
    }

    fn read_cnf(&mut self, path: &Path) -> Result<CnfFormula, Failure> {
        let bytes = self.read("cnf", path)?;
        CnfFormula::parse_dimacs(&String::from_utf8_lossy(&bytes))
            .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
    }
}

fn oracle_report(oracle: &SatOracle, stats: wellcov::oracle::OracleStats) -> OracleReport {
    OracleReport { backend: oracle.backend_name().to_string(), stats }
}

fn describe(v: &Verdict) -> Vec<String> {
    let mut lines = vec![format!("holds: {}", if v.holds { "yes" } else { "no" })];
    if let Some(c) = &v.certificate {
        lines.push(format!("certificate: {}", serde_json::to_string(c).expect("serializable")));
    }
    lines
}

fn oracle_lines(o: &OracleReport) -> Vec<String> {
    vec![format!(
        "oracle: {} calls ({} search, {} extension) via {}",
        o.stats.calls, o.stats.search_calls, o.stats.extension_calls, o.backend
    )]
}

fn cmd_check(run: &mut Run, args: &CheckArgs) -> Result<Outcome, Failure> {
    let property: Property = args.property.parse().map_err(|e: String| fail(EXIT_USAGE, e))?;
    if !property.supports(args.algo) {
        let legal: Vec<String> = property.algorithms().iter().map(Algo::to_string).collect();
        return Err(fail(
            EXIT_USAGE,
            format!("--algo {} does not decide {property}; use one of {}", args.algo, legal.join(", ")),
        ));
    }
    let g = run.read_graph("graph", &args.graph)?;
    let mut oracle_stats = None;
    let verdict = match args.algo {
        Algo::Brute => {
            if g.n() > BRUTE_CAP && !args.force {
                return Err(fail(
                    EXIT_USAGE,
                    format!("brute force refuses {} vertices (cap {BRUTE_CAP}); pass --force", g.n()),
                ));
            }
            recognize(&g, property.0).map_err(|e| fail(EXIT_USAGE, e.to_string()))?
        }
        Algo::Sat => {
            let s = match property.0 {
                ClassQuery::Es(s) => s,
                _ => 1,
            };
            let mut oracle = args.solver.oracle();
            let (verdict, stats) = is_es_via_oracle(&g, s, &mut oracle, args.mode).map_err(oracle_failure)?;
            oracle_stats = Some(oracle_report(&oracle, stats));
            verdict
        }
        Algo::Chordal => {
            let res = match property.0 {
                ClassQuery::WellCovered => chordal_is_wk(&g, 1),
                ClassQuery::Wk(k) => chordal_is_wk(&g, k),
                _ => chordal_is_1_extendable(&g),
            };
            res.map_err(|e| match e {
                ChordalError::NotChordal(cycle) => {
                    fail(EXIT_MISMATCH, format!("graph is not chordal; chordless cycle {cycle:?}"))
                }
                ChordalError::InvalidParameter(m) => fail(EXIT_USAGE, m),
            })?
        }
    };
    let mut lines = vec![format!("property: {property}"), format!("algorithm: {}", args.algo)];
    lines.extend(describe(&verdict));
    if let Some(o) = &oracle_stats {
        lines.extend(oracle_lines(o));
    }
    let code = if verdict.holds { 0 } else { EXIT_NO };
    run.report.check = Some(CheckResult {
        property: property.to_string(),
        algorithm: args.algo.to_string(),
        holds: verdict.holds,
        certificate: verdict.certificate,
        oracle: oracle_stats,
    });
    Ok(Outcome { code, lines })
}

fn cmd_alpha(run: &mut Run, args: &AlphaArgs) -> Result<Outcome, Failure> {
    let g = run.read_graph("graph", &args.graph)?;
    let (value, oracle) = match args.algo {
        Algo::Brute => (independence_number(&g), None),
        Algo::Sat => {
            let mut oracle = args.solver.oracle();
            let (alpha, stats) = alpha_binary_search(&g, &mut oracle).map_err(oracle_failure)?;
            (alpha, Some(oracle_report(&oracle, stats)))
        }
        Algo::Chordal => return Err(fail(EXIT_USAGE, "alpha supports --algo brute or sat")),
    };
    let mut lines = vec![format!("alpha: {value}")];
    if let Some(o) = &oracle {
        lines.extend(oracle_lines(o));
    }
    run.report.alpha = Some(AlphaResult { algorithm: args.algo.to_string(), value, oracle });
    Ok(Outcome { code: 0, lines })
}

enum GadgetName {
    W2,
    Wk(usize),
    Es(usize),
    Pi,
    Gplus,
    MisEq,
    Domset,
}

fn parse_gadget_name(s: &str) -> Result<GadgetName, String> {
    let param = |v: &str| v.parse::<usize>().map_err(|_| format!("bad gadget parameter {v:?}"));
    Ok(match s.split_once(':') {
        None if s == "w2" => GadgetName::W2,
        None if s == "pi" => GadgetName::Pi,
        None if s == "gplus" => GadgetName::Gplus,
        None if s == "mis-eq" => GadgetName::MisEq,
        None if s == "domset" => GadgetName::Domset,
        Some(("wk", k)) => GadgetName::Wk(param(k)?),
        Some(("es", k)) => GadgetName::Es(param(k)?),
        _ => return Err(format!("unknown gadget {s:?}; expected w2, wk:K, es:S, pi, gplus, mis-eq or domset")),
    })
}

fn gadget_failure(e: GadgetError) -> Failure {
    match e {
        GadgetError::InvalidParameter(m) => fail(EXIT_USAGE, m),
        other => fail(EXIT_MISMATCH, other.to_string()),
    }
}

fn require<'a>(path: &'a Option<PathBuf>, flag: &str, name: &str) -> Result<&'a Path, Failure> {
    path.as_deref().ok_or_else(|| fail(EXIT_USAGE, format!("gadget {name} needs {flag}")))
}

fn cmd_gadget(run: &mut Run, args: &GadgetArgs) -> Result<Outcome, Failure> {
    let name = parse_gadget_name(&args.name).map_err(|e| fail(EXIT_USAGE, e))?;
    let built = match name {
        GadgetName::W2 | GadgetName::Wk(_) | GadgetName::Es(_) => {
            let f = run.read_cnf(require(&args.cnf, "--cnf", &args.name)?)?;
            match name {
                GadgetName::W2 => GadgetOrVerdict::Built(gadgets::gadget_w2_shedding(&f).map_err(gadget_failure)?),
                GadgetName::Wk(k) => GadgetOrVerdict::Built(gadgets::gadget_wk(&f, k).map_err(gadget_failure)?),
                GadgetName::Es(s) => gadgets::gadget_es_wellcovered(&f, s).map_err(gadget_failure)?,
                _ => unreachable!(),
            }
        }
        GadgetName::Pi | GadgetName::MisEq => {
            let g = run.read_graph("graph", require(&args.graph, "--graph", &args.name)?)?;
            let h = run.read_graph("graph2", require(&args.graph2, "--graph2", &args.name)?)?;
            GadgetOrVerdict::Built(match name {
                GadgetName::Pi => gadgets::pi_join(&g, &h),
                _ => gadgets::mis_equality_to_1ext(&g, &h).map_err(gadget_failure)?,
            })
        }
        GadgetName::Gplus | GadgetName::Domset => {
            let g = run.read_graph("graph", require(&args.graph, "--graph", &args.name)?)?;
            GadgetOrVerdict::Built(match name {
                GadgetName::Gplus => gadgets::g_plus(&g),
                _ => gadgets::domset_to_chordal_es(&g).map_err(gadget_failure)?,
            })
        }
    };
    let mut result = GadgetResult {
        name: args.name.clone(),
        status: GadgetStatus::Built,
        reason: None,
        assignment: None,
        n: None,
        m: None,
        distinguished: None,
        output: None,
        roles_output: None,
        edge_list: None,
        roles: None,
    };
    let (code, graph) = match built {
        GadgetOrVerdict::Built(g) => (0, Some(g)),
        GadgetOrVerdict::KnownNegative { reason, assignment, dummy } => {
            eprintln!("known negative: {reason}");
            result.status = GadgetStatus::KnownNegative;
            result.reason = Some(reason);
            result.assignment = Some(assignment);
            (EXIT_KNOWN_NEGATIVE, dummy)
        }
    };
    let mut lines = vec![format!("gadget: {}", args.name)];
    if let Some(g) = graph {
        write_gadget(run, args, &g, &mut result, &mut lines)?;
    }
    if result.status == GadgetStatus::KnownNegative {
        lines.push(format!("status: known-negative ({})", result.reason.as_deref().unwrap_or_default()));
    }
    run.report.gadget = Some(result);
    Ok(Outcome { code, lines })
}

fn write_gadget(
    run: &mut Run,
    args: &GadgetArgs,
    g: &GadgetGraph,
    result: &mut GadgetResult,
    lines: &mut Vec<String>,
) -> Result<(), Failure> {
    let edge_list = g.graph.to_edge_list();
    let roles = g.roles_to_text();
    result.n = Some(g.graph.n());
    result.m = Some(g.graph.m());
    result.distinguished = g.distinguished;
    let roles_path = args
        .roles
        .clone()
        .or_else(|| args.out.as_ref().map(|p| PathBuf::from(format!("{}.roles", p.display()))));
    let write = |path: &Path, text: &str| {
        fs::write(path, text).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
    };
    if let Some(out) = &args.out {
        write(out, &edge_list)?;
        result.output = Some(out.display().to_string());
        lines.push(format!("wrote {} ({} vertices, {} edges)", out.display(), g.graph.n(), g.graph.m()));
    }
    if let Some(path) = &roles_path {
        write(path, &roles)?;
        result.roles_output = Some(path.display().to_string());
        lines.push(format!("wrote roles {}", path.display()));
    }
    if args.out.is_none() {
        run.raw = Some(edge_list.clone());
        result.edge_list = Some(edge_list);
        if roles_path.is_none() {
            result.roles = Some(roles);
        }
    }
    Ok(())
}

fn cmd_verify(run: &mut Run, args: &VerifyArgs) -> Result<Outcome, Failure> {
    let suite: Suite = args.suite.parse().map_err(|e: String| fail(EXIT_USAGE, e))?;
    let outcome = run_suite(&SuiteConfig { suite, size: args.size, seed: args.seed, count: args.count });
    let mut lines = vec![
        format!("suite: {suite}"),
        format!("instances: {}", outcome.instances),
        format!("positives: {}", outcome.positives),
    ];
    lines.extend(outcome.notes.iter().map(|n| format!("note: {n}")));
    let code = match &outcome.counterexample {
        None => {
            lines.push("result: pass".into());
            0
        }
        Some(c) => {
            lines.push(format!("result: counterexample: {}", c.detail));
            EXIT_NO
        }
    };
    run.report.suite = Some(outcome);
    Ok(Outcome { code, lines })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let start = Instant::now();
    let mut run = Run {
        report: RunReport { command: std::env::args().skip(1).collect(), ..RunReport::default() },
        raw: None,
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(&mut run, a),
        Command::Gadget(a) => cmd_gadget(&mut run, a),
        Command::Verify(a) => cmd_verify(&mut run, a),
        Command::Alpha(a) => cmd_alpha(&mut run, a),
    };
    let code = match result {
        Ok(outcome) => {
            if !cli.machine {
                if let Some(raw) = &run.raw {
                    print!("{raw}");
                } else {
                    for line in &outcome.lines {
                        println!("{line}");
                    }
                }
            }
            outcome.code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            run.report.error = Some(f.message);
            f.code
        }
    };
    run.report.exit_code = code;
    run.report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    if cli.machine {
        println!("{}", serde_json::to_string_pretty(&run.report).expect("serializable"));
    }
    ExitCode::from(code as u8)
}
