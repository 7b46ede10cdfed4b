//! Even-vertex ζ-graceful labelings.
//!
//! For a vertex labeling `f` on a graph with `m` edges, every edge `uv` gets
//! `ζ = f(u) + f(v) + m` and the induced label `ζ / 2` when `ζ` is even or
//! `(ζ + 1) / 2` when it is odd. A labeling is graceful when its vertex labels
//! are even and pairwise distinct and its induced edge labels are pairwise
//! distinct. The induced function is the only source of edge labels here;
//! closed-form edge labels from the theorems are claims checked by [`audit`].

pub mod audit;
pub mod theorems;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, RoughGraph};

pub use theorems::{label_theorem, Claim, TheoremLabeling};

/// Labels keyed by vertex id. Evenness and injectivity are checked by
/// [`verify`], not on construction, so invalid labelings can still be
/// represented and reported.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexLabeling {
    assignment: IndexMap<String, u64>,
}

impl VertexLabeling {
    pub fn from_pairs<I, S>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, u64)>,
        S: Into<String>,
    {
        let mut assignment = IndexMap::new();
        for (id, label) in pairs {
            let id = id.into();
            if assignment.contains_key(&id) {
                return Err(Error::domain(format!("vertex `{id}` labeled twice")));
            }
            assignment.insert(id, label);
        }
        Ok(Self { assignment })
    }

    /// Pairs `labels[i]` with the i-th vertex of `g`.
    pub fn for_graph(g: &RoughGraph, labels: &[u64]) -> Result<Self> {
        if labels.len() != g.vertex_count() {
            return Err(Error::domain(format!(
                "{} labels for {} vertices",
                labels.len(),
                g.vertex_count()
            )));
        }
        Self::from_pairs(g.vertices().iter().map(|v| v.id.clone()).zip(labels.iter().copied()))
    }

    pub fn get(&self, id: &str) -> Option<u64> {
        self.assignment.get(id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.assignment.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Labels in the vertex order of `g`, failing on the first unlabeled vertex.
    pub fn aligned(&self, g: &RoughGraph) -> Result<Vec<u64>> {
        g.vertices()
            .iter()
            .map(|v| {
                self.get(&v.id)
                    .ok_or_else(|| Error::domain(format!("vertex `{}` has no label", v.id)))
            })
            .collect()
    }
}

/// `f_u + f_v + m`.
pub fn zeta(f_u: u64, f_v: u64, m: usize) -> Result<u64> {
    f_u.checked_add(f_v)
        .and_then(|s| s.checked_add(m as u64))
        .ok_or(Error::Overflow("zeta"))
}

/// `ζ / 2` for even `ζ`, `(ζ + 1) / 2` for odd `ζ`.
pub fn induced_edge_label(f_u: u64, f_v: u64, m: usize) -> Result<u64> {
    Ok(label_from_zeta(zeta(f_u, f_v, m)?))
}

pub(crate) fn label_from_zeta(zeta: u64) -> u64 {
    if zeta.is_multiple_of(2) {
        zeta / 2
    } else {
        zeta / 2 + 1
    }
}

/// Which half of the piecewise edge rule an edge went through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    EvenZeta,
    OddZeta,
}

impl Branch {
    pub fn of(zeta: u64) -> Self {
        if zeta.is_multiple_of(2) {
            Branch::EvenZeta
        } else {
            Branch::OddZeta
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InducedEdge {
    pub edge: Edge,
    pub zeta: u64,
    pub label: u64,
}

/// Edge labels induced from a vertex labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    pub source: VertexLabeling,
    pub m: usize,
    /// In the canonical edge order of the graph.
    pub edges: Vec<InducedEdge>,
    pub graceful: bool,
}

impl EdgeLabeling {
    pub fn label(&self, edge: Edge) -> Option<u64> {
        self.edges.iter().find(|e| e.edge == edge).map(|e| e.label)
    }

    pub fn labels(&self) -> Vec<u64> {
        self.edges.iter().map(|e| e.label).collect()
    }

    /// The branch shared by every edge, or `None` if edges disagree (or there
    /// are no edges).
    pub fn common_branch(&self) -> Option<Branch> {
        let first = Branch::of(self.edges.first()?.zeta);
        self.edges.iter().all(|e| Branch::of(e.zeta) == first).then_some(first)
    }
}

/// Labels every edge of `g` from `f` with `m = |E(g)|`.
pub fn induce(g: &RoughGraph, f: &VertexLabeling) -> Result<EdgeLabeling> {
    let labels = f.aligned(g)?;
    let m = g.edge_count();
    let edges = g
        .edges()
        .iter()
        .map(|&edge| {
            let (a, b) = edge.endpoints();
            let zeta = zeta(labels[a], labels[b], m)?;
            Ok(InducedEdge {
                edge,
                zeta,
                label: label_from_zeta(zeta),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut seen = std::collections::HashSet::with_capacity(edges.len());
    let graceful = edges.iter().all(|e| seen.insert(e.label));
    Ok(EdgeLabeling {
        source: f.clone(),
        m,
        edges,
        graceful,
    })
}

/// An edge as its endpoint ids.
pub type EdgeIds = (String, String);

/// Outcome of checking a vertex labeling against the graceful conditions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    /// Vertices of the graph without a label.
    pub unlabeled: Vec<String>,
    /// Labeled ids that are not vertices of the graph.
    pub unknown: Vec<String>,
    /// Check (a): vertices whose label is odd.
    pub odd_labels: Vec<(String, u64)>,
    /// Check (b): pairs of vertices sharing a label.
    pub repeated_vertex_labels: Vec<(String, String, u64)>,
    /// Check (c): pairs of edges sharing an induced label.
    pub repeated_edge_labels: Vec<(EdgeIds, EdgeIds, u64)>,
    /// Edges whose ζ does not fit in 64 bits.
    pub overflow: Vec<EdgeIds>,
}

impl VerificationReport {
    pub fn labels_even(&self) -> bool {
        self.odd_labels.is_empty()
    }

    pub fn labels_injective(&self) -> bool {
        self.repeated_vertex_labels.is_empty()
    }

    pub fn edge_labels_distinct(&self) -> bool {
        self.repeated_edge_labels.is_empty() && self.overflow.is_empty()
    }

    pub fn complete(&self) -> bool {
        self.unlabeled.is_empty() && self.unknown.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.complete() && self.labels_even() && self.labels_injective() && self.edge_labels_distinct()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(f, "complete labeling       {}", mark(self.complete()))?;
        for id in &self.unlabeled {
            writeln!(f, "  unlabeled vertex {id}")?;
        }
        for id in &self.unknown {
            writeln!(f, "  label for unknown vertex {id}")?;
        }
        writeln!(f, "(a) even vertex labels  {}", mark(self.labels_even()))?;
        for (id, l) in &self.odd_labels {
            writeln!(f, "  {id} = {l}")?;
        }
        writeln!(f, "(b) injective           {}", mark(self.labels_injective()))?;
        for (u, v, l) in &self.repeated_vertex_labels {
            writeln!(f, "  {u}, {v} both {l}")?;
        }
        writeln!(f, "(c) distinct edge labels {}", mark(self.edge_labels_distinct()))?;
        for ((a, b), (c, d), l) in &self.repeated_edge_labels {
            writeln!(f, "  {a}-{b}, {c}-{d} both {l}")?;
        }
        for (a, b) in &self.overflow {
            writeln!(f, "  {a}-{b} overflows")?;
        }
        write!(
            f,
            "verdict: {}",
            if self.passed() { "graceful" } else { "not graceful" }
        )
    }
}

/// Checks evenness, injectivity and distinctness of induced edge labels.
/// Never fails; every violation is listed in the report.
pub fn verify(g: &RoughGraph, f: &VertexLabeling) -> VerificationReport {
    let mut report = VerificationReport::default();
    let labels: Vec<Option<u64>> = g.vertices().iter().map(|v| f.get(&v.id)).collect();

    for (v, l) in g.vertices().iter().zip(&labels) {
        match l {
            None => report.unlabeled.push(v.id.clone()),
            Some(l) if l % 2 != 0 => report.odd_labels.push((v.id.clone(), *l)),
            Some(_) => {}
        }
    }
    report.unknown = f
        .iter()
        .filter(|(id, _)| g.position(id).is_none())
        .map(|(id, _)| id.to_string())
        .collect();

    let mut first_with: HashMap<u64, usize> = HashMap::new();
    for (v, l) in labels.iter().enumerate() {
        if let Some(l) = *l {
            if let Some(&u) = first_with.get(&l) {
                report
                    .repeated_vertex_labels
                    .push((g.id(u).to_string(), g.id(v).to_string(), l));
            } else {
                first_with.insert(l, v);
            }
        }
    }

    let m = g.edge_count();
    let mut first_edge: HashMap<u64, Edge> = HashMap::new();
    for &e in g.edges() {
        let (a, b) = e.endpoints();
        let (Some(la), Some(lb)) = (labels[a], labels[b]) else {
            continue;
        };
        let ids = |e: Edge| {
            let (x, y) = g.edge_ids(e);
            (x.to_string(), y.to_string())
        };
        match induced_edge_label(la, lb, m) {
            Ok(label) => {
                if let Some(&prev) = first_edge.get(&label) {
                    report.repeated_edge_labels.push((ids(prev), ids(e), label));
                } else {
                    first_edge.insert(label, e);
                }
            }
            Err(_) => report.overflow.push(ids(e)),
        }
    }
    report
}

/// How the even cases of the comb and ladder theorems label pendant vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// `2i + 2n - 1` as printed (odd labels).
    Literal,
    /// `2i + 2n`, restoring even labels.
    #[default]
    Corrected,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Literal => "literal",
            Mode::Corrected => "corrected",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "literal" => Ok(Mode::Literal),
            "corrected" => Ok(Mode::Corrected),
            _ => Err(Error::parameter(format!(
                "unknown mode `{s}` (expected literal or corrected)"
            ))),
        }
    }
}
