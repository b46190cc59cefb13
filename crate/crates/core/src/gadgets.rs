//! Reduction gadgets with role-labeled vertices.
//!
//! Vertex ids follow a fixed layout per gadget:
//!
//! * [`gadget_w2_shedding`]: clause clique `K` on `0..m`, apex `m`, then per
//!   variable `x^1, x^2, ~x^1, ~x^2`.
//! * [`gadget_wk`]: `K` on `0..m`, `U` on `m..m+k-1`, then per variable
//!   `x^1..x^k, ~x^1..~x^k`.
//! * [`gadget_es_wellcovered`]: `K` on `0..m`, then per variable `u, ubar, w`.
//! * [`pi_join`]: `G`, then `H`, then `Pi_G`, then `Pi_H`.
//! * [`domset_to_chordal_es`]: `C`, then `I`, then `I'`, each indexed by the
//!   vertices of the input.
//!
//! Clause, variable, copy and `U` indices in role labels start at 1; graph
//! vertex indices start at 0.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::cnf::{var_of, Assignment, CnfFormula, Literal};
use crate::graph::{Graph, VertexSet};
use crate::recognizers::{is_es, is_well_covered, next_combination};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("clause {clause} does not have exactly three literals")]
    NotThreeCnf { clause: usize },
    #[error("clause {clause} contains a literal and its negation")]
    TautologicalClause { clause: usize },
    #[error("vertex {vertex} is universal")]
    UniversalVertexPresent { vertex: usize },
    #[error("input graph has no vertices")]
    EmptyGraph,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// Clause vertex `v_j`.
    CliqueK(usize),
    Apex,
    CliqueU(usize),
    /// Copy `copy` of the literal `x_var` or its negation.
    VarBlock { var: usize, positive: bool, copy: usize },
    TriangleU(usize),
    TriangleUbar(usize),
    TriangleW(usize),
    OriginalG(usize),
    OriginalH(usize),
    PiSideG(usize),
    PiSideH(usize),
    DomCliqueC(usize),
    DomI(usize),
    DomIPrime(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::CliqueK(j) => write!(f, "K[{j}]"),
            Role::Apex => write!(f, "apex"),
            Role::CliqueU(r) => write!(f, "U[{r}]"),
            Role::VarBlock { var, positive, copy } => {
                write!(f, "{}x{var}^{copy}", if positive { "" } else { "~" })
            }
            Role::TriangleU(i) => write!(f, "u[{i}]"),
            Role::TriangleUbar(i) => write!(f, "ubar[{i}]"),
            Role::TriangleW(i) => write!(f, "w[{i}]"),
            Role::OriginalG(v) => write!(f, "G[{v}]"),
            Role::OriginalH(v) => write!(f, "H[{v}]"),
            Role::PiSideG(v) => write!(f, "piG[{v}]"),
            Role::PiSideH(v) => write!(f, "piH[{v}]"),
            Role::DomCliqueC(v) => write!(f, "C[{v}]"),
            Role::DomI(v) => write!(f, "I[{v}]"),
            Role::DomIPrime(v) => write!(f, "I'[{v}]"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown role label {0:?}")]
pub struct RoleParseError(pub String);

impl FromStr for Role {
    type Err = RoleParseError;

    fn from_str(s: &str) -> Result<Role, RoleParseError> {
        let err = || RoleParseError(s.to_string());
        if s == "apex" {
            return Ok(Role::Apex);
        }
        if let Some((head, idx)) = s.strip_suffix(']').and_then(|t| t.split_once('[')) {
            let i: usize = idx.parse().map_err(|_| err())?;
            let ctor: fn(usize) -> Role = match head {
                "K" => Role::CliqueK,
                "U" => Role::CliqueU,
                "u" => Role::TriangleU,
                "ubar" => Role::TriangleUbar,
                "w" => Role::TriangleW,
                "G" => Role::OriginalG,
                "H" => Role::OriginalH,
                "piG" => Role::PiSideG,
                "piH" => Role::PiSideH,
                "C" => Role::DomCliqueC,
                "I" => Role::DomI,
                "I'" => Role::DomIPrime,
                _ => return Err(err()),
            };
            return Ok(ctor(i));
        }
        let (positive, rest) = match s.strip_prefix('~') {
            Some(r) => (false, r),
            None => (true, s),
        };
        let (var, copy) = rest
            .strip_prefix('x')
            .and_then(|r| r.split_once('^'))
            .ok_or_else(err)?;
        Ok(Role::VarBlock {
            var: var.parse().map_err(|_| err())?,
            positive,
            copy: copy.parse().map_err(|_| err())?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub distinguished: Option<usize>,
}

impl GadgetGraph {
    pub fn vertices_with(&self, pred: impl Fn(&Role) -> bool) -> VertexSet {
        VertexSet::new((0..self.roles.len()).filter(|&v| pred(&self.roles[v])))
    }

    /// The sidecar text: an optional `# distinguished<TAB>v` line, then one
    /// `vertex<TAB>role` line per vertex.
    pub fn roles_to_text(&self) -> String {
        let mut out = String::new();
        if let Some(v) = self.distinguished {
            out.push_str(&format!("# distinguished\t{v}\n"));
        }
        for (v, r) in self.roles.iter().enumerate() {
            out.push_str(&format!("{v}\t{r}\n"));
        }
        out
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SidecarError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {0} has no role")]
    Missing(usize),
}

/// Parses a role sidecar into per-vertex roles and the distinguished vertex.
pub fn parse_roles(text: &str) -> Result<(Vec<Role>, Option<usize>), SidecarError> {
    let mut roles: Vec<Option<Role>> = Vec::new();
    let mut distinguished = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let perr = |message: String| SidecarError::Parse { line: i + 1, message };
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(v) = rest.trim().strip_prefix("distinguished") {
                distinguished = Some(v.trim().parse().map_err(|_| perr(format!("bad vertex {v:?}")))?);
            }
            continue;
        }
        let (v, role) = line.split_once('\t').ok_or_else(|| perr("expected vertex<TAB>role".into()))?;
        let v: usize = v.trim().parse().map_err(|_| perr(format!("bad vertex {v:?}")))?;
        let role: Role = role.trim().parse().map_err(|e: RoleParseError| perr(e.to_string()))?;
        if roles.len() <= v {
            roles.resize(v + 1, None);
        }
        if roles[v].replace(role).is_some() {
            return Err(perr(format!("vertex {v} listed twice")));
        }
    }
    let roles = roles
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or(SidecarError::Missing(v)))
        .collect::<Result<_, _>>()?;
    Ok((roles, distinguished))
}

fn validate_formula(f: &CnfFormula, allow_tautologies: bool) -> Result<(), GadgetError> {
    if let Some(clause) = f.clauses().iter().position(|c| c.len() != 3) {
        return Err(GadgetError::NotThreeCnf { clause });
    }
    if !allow_tautologies {
        if let Some(clause) = f.first_tautological_clause() {
            return Err(GadgetError::TautologicalClause { clause });
        }
    }
    Ok(())
}

fn clause_has(f: &CnfFormula, j: usize, var: usize, positive: bool) -> bool {
    let lit = var as Literal * if positive { 1 } else { -1 };
    f.clauses()[j - 1].contains(&lit)
}

/// What the role-implied adjacency rules refer to.
#[derive(Clone, Copy, Debug, Default)]
pub struct RoleContext<'a> {
    pub formula: Option<&'a CnfFormula>,
    pub g: Option<&'a Graph>,
    pub h: Option<&'a Graph>,
}

/// Adjacency implied by two role labels alone, as stated in the gadget
/// definitions.
pub fn roles_adjacent(a: &Role, b: &Role, ctx: &RoleContext<'_>) -> bool {
    use Role::*;
    let occurs = |j: usize, var: usize, positive: bool| {
        ctx.formula.is_some_and(|f| clause_has(f, j, var, positive))
    };
    match (*a, *b) {
        (CliqueK(x), CliqueK(y)) | (CliqueU(x), CliqueU(y)) | (DomCliqueC(x), DomCliqueC(y)) => x != y,
        (Apex, CliqueK(_)) | (CliqueK(_), Apex) => true,
        (CliqueU(_), CliqueK(_)) | (CliqueK(_), CliqueU(_)) => true,
        (VarBlock { var: x, .. }, VarBlock { var: y, .. }) => x == y && a != b,
        (VarBlock { var, positive, .. }, CliqueK(j)) | (CliqueK(j), VarBlock { var, positive, .. }) => {
            occurs(j, var, positive)
        }
        (TriangleU(x) | TriangleUbar(x) | TriangleW(x), TriangleU(y) | TriangleUbar(y) | TriangleW(y)) => {
            x == y && a != b
        }
        (TriangleU(i), CliqueK(j)) | (CliqueK(j), TriangleU(i)) => occurs(j, i, true),
        (TriangleUbar(i), CliqueK(j)) | (CliqueK(j), TriangleUbar(i)) => occurs(j, i, false),
        (OriginalG(u), OriginalG(v)) => ctx.g.is_some_and(|g| g.has_edge(u, v)),
        (OriginalH(u), OriginalH(v)) => ctx.h.is_some_and(|h| h.has_edge(u, v)),
        (OriginalG(u), PiSideG(v)) | (PiSideG(v), OriginalG(u)) => u == v,
        (OriginalH(u), PiSideH(v)) | (PiSideH(v), OriginalH(u)) => u == v,
        (PiSideG(_), PiSideH(_)) | (PiSideH(_), PiSideG(_)) => true,
        (DomI(v), DomCliqueC(w)) | (DomCliqueC(w), DomI(v)) => {
            v == w || ctx.g.is_some_and(|g| g.has_edge(v, w))
        }
        (DomI(v), DomIPrime(w)) | (DomIPrime(w), DomI(v)) => v == w,
        _ => false,
    }
}

/// Rebuilds the graph from role labels alone.
pub fn graph_from_roles(roles: &[Role], ctx: &RoleContext<'_>) -> Graph {
    let n = roles.len();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| roles_adjacent(&roles[u], &roles[v], ctx));
    Graph::from_edges(n, edges).expect("valid by construction")
}

fn clause_occurrence_edges(f: &CnfFormula, mut literal_vertices: impl FnMut(Literal) -> Vec<usize>) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (j, c) in f.clauses().iter().enumerate() {
        for &l in c {
            edges.extend(literal_vertices(l).into_iter().map(|x| (j, x)));
        }
    }
    edges
}

fn clique(vs: impl IntoIterator<Item = usize>) -> Vec<(usize, usize)> {
    let vs: Vec<usize> = vs.into_iter().collect();
    let mut edges = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            edges.push((a, b));
        }
    }
    edges
}

fn literal_block(
    f: &CnfFormula,
    start: usize,
    copies: usize,
) -> (Vec<(usize, usize)>, Vec<Role>) {
    let width = 2 * copies;
    let mut edges = Vec::new();
    let mut roles = Vec::new();
    for i in 0..f.num_vars() {
        let base = start + width * i;
        edges.extend(clique(base..base + width));
        for positive in [true, false] {
            for copy in 1..=copies {
                roles.push(Role::VarBlock { var: i + 1, positive, copy });
            }
        }
    }
    let at = |l: Literal| {
        let base = start + width * (var_of(l) - 1) + if l > 0 { 0 } else { copies };
        (base..base + copies).collect()
    };
    edges.extend(clause_occurrence_edges(f, at));
    (edges, roles)
}

/// Clause clique `K`, apex `v` joined to `K`, a `K_4` per variable on two
/// copies of each literal, and occurrence edges from literal copies to
/// clause vertices. Distinguished vertex: the apex.
pub fn gadget_w2_shedding(f: &CnfFormula) -> Result<GadgetGraph, GadgetError> {
    validate_formula(f, false)?;
    let m = f.num_clauses();
    let apex = m;
    let mut edges = clique(0..m);
    edges.extend((0..m).map(|j| (j, apex)));
    let (block_edges, block_roles) = literal_block(f, m + 1, 2);
    edges.extend(block_edges);
    let mut roles: Vec<Role> = (1..=m).map(Role::CliqueK).collect();
    roles.push(Role::Apex);
    roles.extend(block_roles);
    let graph = Graph::from_edges(roles.len(), edges).expect("valid by construction");
    Ok(GadgetGraph { graph, roles, distinguished: Some(apex) })
}

/// Clause clique `K`, a clique `U` of size `k - 1` joined to `K`, a
/// `K_{2k}` per variable on `k` copies of each literal, and occurrence edges.
pub fn gadget_wk(f: &CnfFormula, k: usize) -> Result<GadgetGraph, GadgetError> {
    if k < 2 {
        return Err(GadgetError::InvalidParameter("the W_k gadget needs k >= 2".into()));
    }
    validate_formula(f, false)?;
    let m = f.num_clauses();
    let u = m..m + k - 1;
    let mut edges = clique(0..m + k - 1);
    let (block_edges, block_roles) = literal_block(f, m + k - 1, k);
    edges.extend(block_edges);
    let mut roles: Vec<Role> = (1..=m).map(Role::CliqueK).collect();
    roles.extend(u.map(|r| Role::CliqueU(r - m + 1)));
    roles.extend(block_roles);
    let graph = Graph::from_edges(roles.len(), edges).expect("valid by construction");
    Ok(GadgetGraph { graph, roles, distinguished: None })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetOrVerdict {
    Built(GadgetGraph),
    KnownNegative {
        reason: String,
        /// A partial assignment of at most `s` variables satisfying every
        /// clause.
        assignment: Assignment,
        /// A fixed `E_s` graph that is not well-covered; absent when it
        /// would be too large.
        dummy: Option<GadgetGraph>,
    },
}

/// The first partial assignment of at most `s` variables that satisfies
/// every clause: variable subsets by size, then lexicographically, values
/// counting up from all-false.
pub fn satisfying_partial_assignment(f: &CnfFormula, s: usize) -> Option<Assignment> {
    let n = f.num_vars();
    for size in 0..=s.min(n) {
        let mut vars: Vec<usize> = (1..=size).collect();
        loop {
            for bits in 0u64..1 << size {
                let mut a = Assignment::new();
                for (i, &v) in vars.iter().enumerate() {
                    a.set(v, bits >> (size - 1 - i) & 1 == 1);
                }
                let all = f
                    .clauses()
                    .iter()
                    .all(|c| c.iter().any(|&l| a.literal_value(l) == Some(true)));
                if all {
                    return Some(a);
                }
            }
            let mut zero_based: Vec<usize> = vars.iter().map(|v| v - 1).collect();
            if size == 0 || !next_combination(&mut zero_based, n) {
                break;
            }
            vars = zero_based.iter().map(|v| v + 1).collect();
        }
    }
    None
}

/// Largest `s` for which the dummy negative instance is materialized; it
/// has `3 * 4^s` vertices.
pub const MAX_DUMMY_S: usize = 6;

/// The `s`-fold iterate of [`g_plus`] starting from `P_3`, which is `E_s`
/// and not well-covered. Verified by brute force for `s <= 2` on first use.
pub fn es_dummy(s: usize) -> Option<GadgetGraph> {
    static VERIFIED: [OnceLock<GadgetGraph>; 2] = [OnceLock::new(), OnceLock::new()];
    let build = |s: usize| {
        let mut g = g_plus(&Graph::path(3));
        for _ in 1..s {
            g = g_plus(&g.graph);
        }
        g
    };
    match s {
        0 => None,
        1 | 2 => Some(
            VERIFIED[s - 1]
                .get_or_init(|| {
                    let g = build(s);
                    assert!(is_es(&g.graph, s).holds && !is_well_covered(&g.graph).holds);
                    g
                })
                .clone(),
        ),
        s if s <= MAX_DUMMY_S => Some(build(s)),
        _ => None,
    }
}

/// Clause clique `K` plus a triangle `u_i, ubar_i, w_i` per variable, with
/// `u_i v_j` when `x_i` occurs in clause `j` and `ubar_i v_j` when its
/// negation does. First runs the pre-test: if at most `s` variables can be
/// set to satisfy every clause, returns [`GadgetOrVerdict::KnownNegative`].
pub fn gadget_es_wellcovered(f: &CnfFormula, s: usize) -> Result<GadgetOrVerdict, GadgetError> {
    if s == 0 {
        return Err(GadgetError::InvalidParameter("the E_s gadget needs s >= 1".into()));
    }
    validate_formula(f, true)?;
    if let Some(assignment) = satisfying_partial_assignment(f, s) {
        return Ok(GadgetOrVerdict::KnownNegative {
            reason: format!("a partial assignment of {} variable(s) satisfies every clause", assignment.len()),
            assignment,
            dummy: es_dummy(s),
        });
    }
    let m = f.num_clauses();
    let mut edges = clique(0..m);
    let mut roles: Vec<Role> = (1..=m).map(Role::CliqueK).collect();
    for i in 0..f.num_vars() {
        let base = m + 3 * i;
        edges.extend(clique(base..base + 3));
        roles.extend([Role::TriangleU(i + 1), Role::TriangleUbar(i + 1), Role::TriangleW(i + 1)]);
    }
    edges.extend(clause_occurrence_edges(f, |l| {
        vec![m + 3 * (var_of(l) - 1) + usize::from(l < 0)]
    }));
    let graph = Graph::from_edges(roles.len(), edges).expect("valid by construction");
    Ok(GadgetOrVerdict::Built(GadgetGraph { graph, roles, distinguished: None }))
}

/// `pi(G, H)`: disjoint `G` and `H`, a pendant `pi_u` on every vertex `u`,
/// and all edges between `Pi_G` and `Pi_H`.
pub fn pi_join(g: &Graph, h: &Graph) -> GadgetGraph {
    let (a, b) = (g.n(), h.n());
    let pg = a + b;
    let ph = 2 * a + b;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(h.edges().map(|(u, v)| (a + u, a + v)));
    edges.extend((0..a).map(|u| (u, pg + u)));
    edges.extend((0..b).map(|u| (a + u, ph + u)));
    for x in 0..a {
        for y in 0..b {
            edges.push((pg + x, ph + y));
        }
    }
    let mut roles: Vec<Role> = (0..a).map(Role::OriginalG).collect();
    roles.extend((0..b).map(Role::OriginalH));
    roles.extend((0..a).map(Role::PiSideG));
    roles.extend((0..b).map(Role::PiSideH));
    let graph = Graph::from_edges(roles.len(), edges).expect("valid by construction");
    GadgetGraph { graph, roles, distinguished: None }
}

/// `G^+ = pi(G, G)`.
pub fn g_plus(g: &Graph) -> GadgetGraph {
    pi_join(g, g)
}

/// Pads the smaller input with universal vertices (highest ids) to equal
/// order, then applies [`pi_join`]. The result is 1-extendable exactly when
/// `alpha(G) = alpha(H)`.
pub fn mis_equality_to_1ext(g: &Graph, h: &Graph) -> Result<GadgetGraph, GadgetError> {
    if g.n() == 0 || h.n() == 0 {
        return Err(GadgetError::EmptyGraph);
    }
    let n = g.n().max(h.n());
    Ok(pi_join(&g.with_universal_vertices(n - g.n()), &h.with_universal_vertices(n - h.n())))
}

/// The padded inputs that [`mis_equality_to_1ext`] joins, for rebuilding
/// from roles.
pub fn mis_equality_padded(g: &Graph, h: &Graph) -> (Graph, Graph) {
    let n = g.n().max(h.n());
    (g.with_universal_vertices(n - g.n()), h.with_universal_vertices(n - h.n()))
}

/// Order, the edges of the clique `C`, and the roles.
type Shell = (usize, Vec<(usize, usize)>, Vec<Role>);

fn domset_shell(g: &Graph) -> Result<Shell, GadgetError> {
    if g.n() == 0 {
        return Err(GadgetError::EmptyGraph);
    }
    if let Some(vertex) = g.vertices().find(|&v| g.is_universal(v)) {
        return Err(GadgetError::UniversalVertexPresent { vertex });
    }
    let n = g.n();
    let mut roles: Vec<Role> = (0..n).map(Role::DomCliqueC).collect();
    roles.extend((0..n).map(Role::DomI));
    roles.extend((0..n).map(Role::DomIPrime));
    Ok((n, clique(0..n), roles))
}

/// Clique `C`, independent sets `I` and `I'`, with `i_v` adjacent to `c_w`
/// for every `w` in `N[v]` and to `i'_v`. Chordal, with `alpha = n + 1`.
/// Not `E_s` exactly when `G` has a dominating set of size at most `s`.
pub fn domset_to_chordal_es(g: &Graph) -> Result<GadgetGraph, GadgetError> {
    let (n, mut edges, roles) = domset_shell(g)?;
    for v in 0..n {
        edges.push((n + v, 2 * n + v));
        edges.extend(g.closed_neighborhood(v).iter().map(|w| (w, n + v)));
    }
    let graph = Graph::from_edges(3 * n, edges).expect("valid by construction");
    Ok(GadgetGraph { graph, roles, distinguished: None })
}

/// The same vertex set with edges added only per edge `uv` of `G`:
/// `i_v c_v`, `i_v c_u`, `i_v i'_v` and symmetrically. Differs from
/// [`domset_to_chordal_es`] exactly at isolated vertices of `G`.
pub fn domset_to_chordal_es_edges_only(g: &Graph) -> Result<GadgetGraph, GadgetError> {
    let (n, mut edges, roles) = domset_shell(g)?;
    for (u, v) in g.edges() {
        for (x, y) in [(u, v), (v, u)] {
            edges.extend([(n + x, x), (n + x, y), (n + x, 2 * n + x)]);
        }
    }
    let graph = Graph::from_edges(3 * n, edges).expect("valid by construction");
    Ok(GadgetGraph { graph, roles, distinguished: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::lex_bfs_peo;
    use crate::cnf::brute_force_satisfiable;
    use crate::mis::independence_number;
    use crate::recognizers::{is_b_graph, is_shedding, is_wk_staples};

    fn x1() -> CnfFormula {
        CnfFormula::new(1, vec![vec![1, 1, 1]])
    }

    fn x1_and_not() -> CnfFormula {
        CnfFormula::new(1, vec![vec![1, 1, 1], vec![-1, -1, -1]])
    }

    fn eight_clause() -> CnfFormula {
        let mut clauses = Vec::new();
        for a in [1, -1] {
            for b in [2, -2] {
                clauses.push(vec![a, b, a]);
                clauses.push(vec![b, a, b]);
            }
        }
        CnfFormula::new(2, clauses)
    }

    #[test]
    fn w2_examples() {
        let g = gadget_w2_shedding(&x1()).unwrap();
        assert_eq!(g.graph.n(), 6);
        assert_eq!(independence_number(&g.graph), 2);
        assert!(is_well_covered(&g.graph).holds);
        assert!(!is_wk_staples(&g.graph, 2).holds);
        assert!(!is_shedding(&g.graph, g.distinguished.unwrap()).unwrap().holds);

        let g = gadget_w2_shedding(&x1_and_not()).unwrap();
        assert!(is_wk_staples(&g.graph, 2).holds);
        assert!(is_shedding(&g.graph, g.distinguished.unwrap()).unwrap().holds);

        let taut = CnfFormula::new(2, vec![vec![1, -1, 2]]);
        assert_eq!(gadget_w2_shedding(&taut), Err(GadgetError::TautologicalClause { clause: 0 }));
        let short = CnfFormula::new(2, vec![vec![1, 2]]);
        assert_eq!(gadget_w2_shedding(&short), Err(GadgetError::NotThreeCnf { clause: 0 }));
    }

    #[test]
    fn wk_examples() {
        let g = gadget_wk(&x1_and_not(), 2).unwrap();
        assert!(is_well_covered(&g.graph).holds);
        assert!(is_wk_staples(&g.graph, 2).holds);
        let g = gadget_wk(&x1(), 3).unwrap();
        assert_eq!(g.graph.n(), 1 + 2 + 6);
        assert!(is_wk_staples(&g.graph, 2).holds);
        assert!(!is_wk_staples(&g.graph, 3).holds);
    }

    #[test]
    fn es_examples() {
        match gadget_es_wellcovered(&x1(), 1).unwrap() {
            GadgetOrVerdict::KnownNegative { assignment, dummy, .. } => {
                assert_eq!(assignment.get(1), Some(true));
                let d = dummy.unwrap();
                assert!(is_es(&d.graph, 1).holds && !is_well_covered(&d.graph).holds);
            }
            other => panic!("{other:?}"),
        }
        let f = eight_clause();
        assert!(brute_force_satisfiable(&f).unwrap().is_none());
        match gadget_es_wellcovered(&f, 1).unwrap() {
            GadgetOrVerdict::Built(g) => {
                assert!(is_es(&g.graph, 1).holds);
                assert!(is_well_covered(&g.graph).holds);
                assert_eq!(independence_number(&g.graph), 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pi_examples() {
        let k2 = Graph::complete(2);
        let g = pi_join(&k2, &k2);
        assert_eq!(g.graph.n(), 8);
        assert_eq!(independence_number(&g.graph), 3);
        let g = pi_join(&Graph::complete(1), &Graph::complete(1));
        assert_eq!(g.graph.n(), 4);
        assert_eq!(g.graph.m(), 3);
        assert_eq!(independence_number(&g.graph), 2);
        let p = g_plus(&Graph::complete(1));
        assert!(is_es(&p.graph, 1).holds);
        assert_eq!(independence_number(&g_plus(&Graph::cycle(5)).graph), 7);
    }

    #[test]
    fn mis_equality_examples() {
        let k2 = Graph::complete(2);
        assert!(is_b_graph(&mis_equality_to_1ext(&k2, &k2).unwrap().graph).holds);
        let g = mis_equality_to_1ext(&Graph::complete(3), &Graph::empty(3)).unwrap();
        assert!(!is_b_graph(&g.graph).holds);
        assert_eq!(mis_equality_to_1ext(&Graph::empty(0), &k2), Err(GadgetError::EmptyGraph));
    }

    #[test]
    fn domset_examples() {
        let g = domset_to_chordal_es(&Graph::path(4)).unwrap();
        assert_eq!(g.graph.n(), 12);
        assert!(is_es(&g.graph, 1).holds);
        assert!(!is_es(&g.graph, 2).holds);
        assert_eq!(independence_number(&g.graph), 5);
        assert!(lex_bfs_peo(&g.graph).is_ok());
        let c4 = domset_to_chordal_es(&Graph::cycle(4)).unwrap();
        assert!(!is_es(&c4.graph, 2).holds);
        assert_eq!(
            domset_to_chordal_es(&Graph::star(2)),
            Err(GadgetError::UniversalVertexPresent { vertex: 0 })
        );
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            domset_to_chordal_es(&two_edges).unwrap().graph,
            domset_to_chordal_es_edges_only(&two_edges).unwrap().graph
        );
    }

    #[test]
    fn roles_round_trip_and_rebuild() {
        let f = eight_clause();
        let gadgets = [
            (gadget_w2_shedding(&f).unwrap(), RoleContext { formula: Some(&f), ..Default::default() }),
            (gadget_wk(&f, 3).unwrap(), RoleContext { formula: Some(&f), ..Default::default() }),
        ];
        for (g, ctx) in &gadgets {
            assert_eq!(graph_from_roles(&g.roles, ctx), g.graph);
            let (roles, d) = parse_roles(&g.roles_to_text()).unwrap();
            assert_eq!(roles, g.roles);
            assert_eq!(d, g.distinguished);
        }
        let c5 = Graph::cycle(5);
        let p = g_plus(&c5);
        assert_eq!(graph_from_roles(&p.roles, &RoleContext { g: Some(&c5), h: Some(&c5), ..Default::default() }), p.graph);
        let d = domset_to_chordal_es(&Graph::path(4)).unwrap();
        let p4 = Graph::path(4);
        assert_eq!(graph_from_roles(&d.roles, &RoleContext { g: Some(&p4), ..Default::default() }), d.graph);
        assert!("x3^".parse::<Role>().is_err());
        assert!("Q[1]".parse::<Role>().is_err());
        assert_eq!("~x3^2".parse::<Role>().unwrap(), Role::VarBlock { var: 3, positive: false, copy: 2 });
    }
}
