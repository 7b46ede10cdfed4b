//! JSON graph and labeling files.
//!
//! Rationals are written as `"p/q"` strings. Vertices, edges and labels are
//! written in the graph's canonical order, so equal values serialize to
//! identical bytes.

use std::path::Path;

use indexmap::IndexMap;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, RoughGraph, Vertex, Weight};
use crate::labeling::{induce, EdgeLabeling, TheoremLabeling, VertexLabeling};

pub fn format_weight(w: Weight) -> String {
    format!("{}/{}", w.numer(), w.denom())
}

/// Accepts `p/q` or a bare integer.
pub fn parse_weight(s: &str) -> Result<Weight> {
    let s = s.trim();
    let bad = || Error::Format(format!("invalid weight `{s}`, expected p/q"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<u64>().map_err(|_| bad())?,
            q.trim().parse::<u64>().map_err(|_| bad())?,
        ),
        None => (s.parse::<u64>().map_err(|_| bad())?, 1),
    };
    if q == 0 {
        return Err(bad());
    }
    let w = Ratio::new(p, q);
    if w > Ratio::from_integer(1) {
        return Err(Error::Format(format!("weight `{s}` exceeds 1")));
    }
    Ok(w)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: String,
    pub weight: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<[String; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &RoughGraph) -> Self {
        GraphFile {
            vertices: g
                .vertices()
                .iter()
                .map(|v| VertexEntry {
                    id: v.id.clone(),
                    weight: format_weight(v.weight),
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|&e| {
                    let (a, b) = g.edge_ids(e);
                    [a.to_string(), b.to_string()]
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<RoughGraph> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                Ok(Vertex {
                    id: v.id.clone(),
                    weight: parse_weight(&v.weight)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let edges: Vec<(&str, &str)> = self.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        RoughGraph::new(vertices, &edges)
    }
}

pub fn graph_to_json(g: &RoughGraph) -> String {
    to_pretty(&GraphFile::from_graph(g))
}

pub fn graph_from_json(s: &str) -> Result<RoughGraph> {
    serde_json::from_str::<GraphFile>(s)?.to_graph()
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<RoughGraph> {
    graph_from_json(&std::fs::read_to_string(path.as_ref()).map_err(Error::file(path))?)
}

pub(crate) fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// The graph inside a labeling file: inline, or a path to a graph file
/// resolved against the labeling file's directory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSource {
    Inline(GraphFile),
    Path(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLabelEntry {
    pub edge: [String; 2],
    pub induced: u64,
    pub claimed: Option<u64>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingFile {
    pub graph: GraphSource,
    pub vertex_labels: IndexMap<String, u64>,
    pub edge_labels: Vec<EdgeLabelEntry>,
    pub m: usize,
    pub graceful: bool,
}

/// A graph with a vertex labeling, its induced edge labels and, optionally,
/// claimed edge labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: RoughGraph,
    pub labels: VertexLabeling,
    pub induced: EdgeLabeling,
    pub claims: Vec<(Edge, u64)>,
}

impl LabeledGraph {
    pub fn new(graph: RoughGraph, labels: VertexLabeling) -> Result<Self> {
        let induced = induce(&graph, &labels)?;
        Ok(LabeledGraph {
            graph,
            labels,
            induced,
            claims: Vec::new(),
        })
    }

    pub fn from_theorem(t: &TheoremLabeling) -> Result<Self> {
        let mut lg = Self::new(t.instance.graph.clone(), t.labels.clone())?;
        lg.claims = t.claims.iter().map(|c| (c.edge, c.label)).collect();
        lg.claims.sort_unstable();
        Ok(lg)
    }

    fn claim(&self, e: Edge) -> Option<u64> {
        self.claims.iter().find(|(c, _)| *c == e).map(|&(_, l)| l)
    }

    pub fn to_file(&self) -> LabelingFile {
        let g = &self.graph;
        LabelingFile {
            graph: GraphSource::Inline(GraphFile::from_graph(g)),
            vertex_labels: g
                .vertices()
                .iter()
                .filter_map(|v| self.labels.get(&v.id).map(|l| (v.id.clone(), l)))
                .collect(),
            edge_labels: self
                .induced
                .edges
                .iter()
                .map(|ie| {
                    let (a, b) = g.edge_ids(ie.edge);
                    let claimed = self.claim(ie.edge);
                    EdgeLabelEntry {
                        edge: [a.to_string(), b.to_string()],
                        induced: ie.label,
                        claimed,
                        matches: claimed.map(|c| c == ie.label),
                    }
                })
                .collect(),
            m: self.induced.m,
            graceful: self.induced.graceful,
        }
    }

    pub fn to_json(&self) -> String {
        to_pretty(&self.to_file())
    }
}

impl LabelingFile {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<(Self, RoughGraph)> {
        let path = path.as_ref();
        let file = Self::parse(&std::fs::read_to_string(path).map_err(Error::file(path))?)?;
        let graph = file.graph(path.parent())?;
        Ok((file, graph))
    }

    /// Resolves the embedded or referenced graph.
    pub fn graph(&self, base: Option<&Path>) -> Result<RoughGraph> {
        match &self.graph {
            GraphSource::Inline(g) => g.to_graph(),
            GraphSource::Path(p) => {
                let p = Path::new(p);
                let full = match base {
                    Some(dir) if p.is_relative() => dir.join(p),
                    _ => p.to_path_buf(),
                };
                load_graph(full)
            }
        }
    }

    pub fn vertex_labeling(&self) -> VertexLabeling {
        VertexLabeling::from_pairs(self.vertex_labels.iter().map(|(k, &v)| (k.clone(), v)))
            .expect("map keys are unique")
    }

    /// Rebuilds the labeled graph, recomputing induced labels.
    pub fn to_labeled(&self, graph: RoughGraph) -> Result<LabeledGraph> {
        let mut lg = LabeledGraph::new(graph, self.vertex_labeling())?;
        for entry in &self.edge_labels {
            if let Some(c) = entry.claimed {
                let e = lg.graph.edge_between(&entry.edge[0], &entry.edge[1]).ok_or_else(|| {
                    Error::domain(format!(
                        "claimed edge {}-{} is not in the graph",
                        entry.edge[0], entry.edge[1]
                    ))
                })?;
                lg.claims.push((e, c));
            }
        }
        lg.claims.sort_unstable();
        Ok(lg)
    }

    /// Stored values that disagree with a recomputation from `labeled`.
    pub fn stale_fields(&self, labeled: &LabeledGraph) -> Vec<String> {
        let fresh = labeled.to_file();
        let mut out = Vec::new();
        if self.m != fresh.m {
            out.push(format!("m: stored {}, actual {}", self.m, fresh.m));
        }
        if self.graceful != fresh.graceful {
            out.push(format!("graceful: stored {}, actual {}", self.graceful, fresh.graceful));
        }
        for entry in &self.edge_labels {
            let actual = fresh
                .edge_labels
                .iter()
                .find(|f| same_edge(&f.edge, &entry.edge))
                .map(|f| f.induced);
            match actual {
                Some(a) if a == entry.induced => {}
                Some(a) => out.push(format!(
                    "edge {}-{}: stored induced {}, actual {a}",
                    entry.edge[0], entry.edge[1], entry.induced
                )),
                None => out.push(format!("edge {}-{} is not in the graph", entry.edge[0], entry.edge[1])),
            }
        }
        out
    }
}

fn same_edge(a: &[String; 2], b: &[String; 2]) -> bool {
    (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0])
}
