//! Decisions with re-checkable witnesses.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{is_independent, is_maximal_independent, Graph, VertexSet};
use crate::mis::{independence_number, Dense};
use crate::recognizers::disjoint_extension_exists;

/// A yes/no answer, optionally backed by a certificate that can be
/// re-verified against the graph from first principles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl Verdict {
    pub fn yes() -> Verdict {
        Verdict {
            holds: true,
            certificate: None,
        }
    }

    pub fn yes_with(certificate: Certificate) -> Verdict {
        Verdict {
            holds: true,
            certificate: Some(certificate),
        }
    }

    pub fn no(certificate: Certificate) -> Verdict {
        Verdict {
            holds: false,
            certificate: Some(certificate),
        }
    }

    pub fn no_without_certificate() -> Verdict {
        Verdict {
            holds: false,
            certificate: None,
        }
    }

    /// Checks the attached certificate, if any, and that it argues for the
    /// stated answer.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        match &self.certificate {
            None => Ok(()),
            Some(c) => {
                if c.proves_membership() != self.holds {
                    return Err(CertificateError::WrongPolarity);
                }
                c.check(g)
            }
        }
    }
}

/// Why a removal of `k - 1` vertices breaks the `W_k` condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RemovalWitness {
    AlphaDrop { alpha: usize, alpha_after: usize },
    NotWellCovered { smaller: VertexSet, larger: VertexSet },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Two maximal independent sets of different sizes.
    TwoMaximalSets { smaller: VertexSet, larger: VertexSet },
    /// An independent set contained in no maximum independent set.
    NonExtendableSet { set: VertexSet },
    /// An independent set of `V - N[vertex]` dominating `N(vertex)`.
    DominatingWitness { vertex: usize, set: VertexSet },
    /// A set of `k - 1` vertices whose removal is not well-covered or lowers
    /// the independence number. All ids are in the input graph.
    WkRemoval {
        removed: VertexSet,
        witness: RemovalWitness,
    },
    /// Pairwise disjoint independent sets with no pairwise disjoint maximum
    /// independent supersets.
    UnextendableDisjointSets { sets: Vec<VertexSet> },
    /// A partition of the vertex set into simplices.
    SimplexPartition { parts: Vec<VertexSet> },
    /// A partition of the vertex set into `alpha` maximal cliques.
    MaximalCliquePartition { parts: Vec<VertexSet> },
    /// A simplex with fewer than `required` simplicial vertices.
    SimplexShortfall {
        part: VertexSet,
        simplicial: VertexSet,
        required: usize,
    },
    /// A vertex lying in zero or several distinct simplices; `simplices`
    /// lists all of them.
    SimplexConflict { vertex: usize, simplices: Vec<VertexSet> },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("certificate refers to a vertex outside the graph")]
    OutOfRange,
    #[error("set {0} is not independent")]
    NotIndependent(VertexSet),
    #[error("set {0} is not a maximal independent set")]
    NotMaximal(VertexSet),
    #[error("{0}")]
    Invalid(String),
    #[error("certificate argues for the opposite answer")]
    WrongPolarity,
}

fn fail<T>(msg: impl Into<String>) -> Result<T, CertificateError> {
    Err(CertificateError::Invalid(msg.into()))
}

fn independent(g: &Graph, s: &VertexSet) -> Result<(), CertificateError> {
    match is_independent(g, s) {
        Err(_) => Err(CertificateError::OutOfRange),
        Ok(false) => Err(CertificateError::NotIndependent(s.clone())),
        Ok(true) => Ok(()),
    }
}

fn maximal(g: &Graph, s: &VertexSet) -> Result<(), CertificateError> {
    match is_maximal_independent(g, s) {
        Err(_) => Err(CertificateError::OutOfRange),
        Ok(false) => Err(CertificateError::NotMaximal(s.clone())),
        Ok(true) => Ok(()),
    }
}

fn in_range(g: &Graph, s: &VertexSet) -> Result<(), CertificateError> {
    g.check_set(s).map_err(|_| CertificateError::OutOfRange)
}

fn is_partition(g: &Graph, parts: &[VertexSet]) -> Result<(), CertificateError> {
    let mut seen = vec![false; g.n()];
    for p in parts {
        in_range(g, p)?;
        if p.is_empty() {
            return fail("empty part");
        }
        for v in p.iter() {
            if std::mem::replace(&mut seen[v], true) {
                return fail(format!("vertex {v} is in two parts"));
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return fail(format!("vertex {v} is in no part"));
    }
    Ok(())
}

/// Whether `N(v)` induces a clique.
pub(crate) fn is_simplicial(g: &Graph, v: usize) -> bool {
    let nb = g.neighbors(v);
    nb.iter()
        .enumerate()
        .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// Whether `part` equals `N[u]` for some simplicial `u` in it.
fn is_simplex(g: &Graph, part: &VertexSet) -> bool {
    part.iter()
        .any(|u| g.closed_neighborhood(u) == *part && is_simplicial(g, u))
}

/// All distinct simplices of `g` containing `v`, sorted.
pub(crate) fn simplices_containing(g: &Graph, v: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = g
        .closed_neighborhood(v)
        .iter()
        .filter(|&u| is_simplicial(g, u))
        .map(|u| g.closed_neighborhood(u))
        .collect();
    out.sort();
    out.dedup();
    out
}

impl Certificate {
    /// Whether this kind of certificate witnesses membership (a partition)
    /// rather than non-membership.
    pub fn proves_membership(&self) -> bool {
        matches!(
            self,
            Certificate::SimplexPartition { .. } | Certificate::MaximalCliquePartition { .. }
        )
    }

    /// Re-verifies the certificate against `g` by checking definitions
    /// directly. Exponential for the kinds that need the independence number.
    pub fn check(&self, g: &Graph) -> Result<(), CertificateError> {
        match self {
            Certificate::TwoMaximalSets { smaller, larger } => {
                maximal(g, smaller)?;
                maximal(g, larger)?;
                if smaller.len() >= larger.len() {
                    return fail("sets do not differ in size as claimed");
                }
                Ok(())
            }
            Certificate::NonExtendableSet { set } => {
                independent(g, set)?;
                let dense = Dense::new(g);
                let rest = dense.all().difference(&dense.closed_of(set.as_slice()));
                if dense.alpha(&rest) + set.len() >= dense.alpha(&dense.all()) {
                    return fail(format!("{set} extends to a maximum independent set"));
                }
                Ok(())
            }
            Certificate::DominatingWitness { vertex, set } => {
                if *vertex >= g.n() {
                    return Err(CertificateError::OutOfRange);
                }
                independent(g, set)?;
                let closed = g.closed_neighborhood(*vertex);
                if !set.is_disjoint(&closed) {
                    return fail("witness meets the closed neighborhood");
                }
                let dominated = g
                    .neighbors(*vertex)
                    .iter()
                    .all(|&t| g.neighbors(t).iter().any(|&w| set.contains(w)));
                if !dominated {
                    return fail("witness does not dominate the neighborhood");
                }
                Ok(())
            }
            Certificate::WkRemoval { removed, witness } => {
                in_range(g, removed)?;
                let sub = g.remove_vertices(removed);
                match witness {
                    RemovalWitness::AlphaDrop { alpha, alpha_after } => {
                        let a = independence_number(g);
                        let b = independence_number(&sub.graph);
                        if a != *alpha || b != *alpha_after || a == b {
                            return fail("independence numbers do not match the claim");
                        }
                        Ok(())
                    }
                    RemovalWitness::NotWellCovered { smaller, larger } => {
                        let back = |s: &VertexSet| -> Result<VertexSet, CertificateError> {
                            let pos: Option<Vec<usize>> = s
                                .iter()
                                .map(|v| sub.original_ids.binary_search(&v).ok())
                                .collect();
                            pos.map(VertexSet::new).ok_or_else(|| {
                                CertificateError::Invalid("witness uses a removed vertex".into())
                            })
                        };
                        Certificate::TwoMaximalSets {
                            smaller: back(smaller)?,
                            larger: back(larger)?,
                        }
                        .check(&sub.graph)
                    }
                }
            }
            Certificate::UnextendableDisjointSets { sets } => {
                for (i, a) in sets.iter().enumerate() {
                    independent(g, a)?;
                    if sets[i + 1..].iter().any(|b| !a.is_disjoint(b)) {
                        return fail("sets are not pairwise disjoint");
                    }
                }
                if disjoint_extension_exists(g, sets) {
                    return fail("the sets do extend to disjoint maximum independent sets");
                }
                Ok(())
            }
            Certificate::SimplexPartition { parts } => {
                is_partition(g, parts)?;
                match parts.iter().find(|p| !is_simplex(g, p)) {
                    Some(p) => fail(format!("{p} is not a simplex")),
                    None => Ok(()),
                }
            }
            Certificate::MaximalCliquePartition { parts } => {
                is_partition(g, parts)?;
                for p in parts {
                    if !g.is_clique(p) {
                        return fail(format!("{p} is not a clique"));
                    }
                    let extendable = g
                        .vertices()
                        .any(|v| !p.contains(v) && p.iter().all(|u| g.has_edge(u, v)));
                    if extendable {
                        return fail(format!("{p} is not a maximal clique"));
                    }
                }
                if parts.len() != independence_number(g) {
                    return fail("part count differs from the independence number");
                }
                Ok(())
            }
            Certificate::SimplexShortfall {
                part,
                simplicial,
                required,
            } => {
                in_range(g, part)?;
                if !is_simplex(g, part) {
                    return fail(format!("{part} is not a simplex"));
                }
                let actual: VertexSet = part
                    .iter()
                    .filter(|&u| g.closed_neighborhood(u) == *part && is_simplicial(g, u))
                    .collect();
                if actual != *simplicial || simplicial.len() >= *required {
                    return fail("simplicial vertex count does not match the claim");
                }
                Ok(())
            }
            Certificate::SimplexConflict { vertex, simplices } => {
                if *vertex >= g.n() {
                    return Err(CertificateError::OutOfRange);
                }
                if simplices_containing(g, *vertex) != *simplices || simplices.len() == 1 {
                    return fail("vertex is covered by exactly one simplex");
                }
                Ok(())
            }
        }
    }
}
