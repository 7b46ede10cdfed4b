//! Rough graph representation and the max-membership construction rule.

use std::collections::{HashMap, VecDeque};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::rough::MembershipAssignment;

/// Vertex weight, an exact rational in `[0, 1]`.
pub type Weight = Ratio<u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub weight: Weight,
}

/// Undirected edge between two vertex positions, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    /// Canonicalizes the endpoint order. Panics on a self-loop.
    pub fn new(u: usize, v: usize) -> Self {
        assert_ne!(u, v, "self-loop");
        Edge {
            lo: u.min(v),
            hi: u.max(v),
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn other(self, v: usize) -> usize {
        if v == self.lo {
            self.hi
        } else {
            self.lo
        }
    }
}

/// A simple undirected graph whose vertices carry membership weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoughGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Degrees in vertex order.
    pub degrees: Vec<(String, usize)>,
}

impl RoughGraph {
    /// Builds a graph from vertices and id pairs. Rejects unknown endpoints,
    /// self-loops, duplicate edges, duplicate vertex ids and weights above 1.
    pub fn new<S: AsRef<str>>(vertices: Vec<Vertex>, edges: &[(S, S)]) -> Result<Self> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if v.weight > Ratio::from_integer(1) {
                return Err(Error::domain(format!(
                    "weight of `{}` is {}, outside [0, 1]",
                    v.id, v.weight
                )));
            }
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::domain(format!("duplicate vertex id `{}`", v.id)));
            }
        }
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::domain(format!("edge endpoint `{id}` is not a vertex")))
        };
        let mut canon = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let (a, b) = (lookup(u)?, lookup(v)?);
            if a == b {
                return Err(Error::domain(format!("self-loop on `{u}`")));
            }
            canon.push(Edge::new(a, b));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            let (a, b) = w[0].endpoints();
            return Err(Error::domain(format!(
                "duplicate edge {{{}, {}}}",
                vertices[a].id, vertices[b].id
            )));
        }
        Ok(Self {
            vertices,
            edges: canon,
            index,
        })
    }

    /// Builds a graph whose vertices all have weight 1.
    pub fn unit<S: AsRef<str>>(ids: &[S], edges: &[(S, S)]) -> Result<Self> {
        let vertices = ids
            .iter()
            .map(|id| Vertex {
                id: id.as_ref().to_string(),
                weight: Ratio::from_integer(1),
            })
            .collect();
        Self::new(vertices, edges)
    }

    /// Connects `{u, v}` exactly when `max(ω(u), ω(v)) > 0`.
    pub fn from_memberships(memberships: &MembershipAssignment) -> Result<Self> {
        if memberships.objects().is_empty() {
            return Err(Error::domain("membership assignment has no objects"));
        }
        let vertices: Vec<Vertex> = memberships
            .iter()
            .map(|(id, w)| Vertex {
                id: id.to_string(),
                weight: w,
            })
            .collect();
        let zero = Ratio::from_integer(0);
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i].weight.max(vertices[j].weight) > zero {
                    edges.push((vertices[i].id.as_str(), vertices[j].id.as_str()));
                }
            }
        }
        Self::new(vertices.clone(), &edges)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn id(&self, v: usize) -> &str {
        &self.vertices[v].id
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn edge_ids(&self, e: Edge) -> (&str, &str) {
        let (a, b) = e.endpoints();
        (self.id(a), self.id(b))
    }

    /// Looks up the edge between two ids, if present.
    pub fn edge_between(&self, u: &str, v: &str) -> Option<Edge> {
        let (a, b) = (self.position(u)?, self.position(v)?);
        if a == b {
            return None;
        }
        let e = Edge::new(a, b);
        self.edges.binary_search(&e).ok().map(|_| e)
    }

    /// Weight attached to an edge for export: the larger endpoint weight.
    pub fn edge_weight(&self, e: Edge) -> Weight {
        let (a, b) = e.endpoints();
        self.vertices[a].weight.max(self.vertices[b].weight)
    }

    /// Replaces vertex weights from `(id, weight)` pairs; unknown ids are an error.
    pub fn set_weights(&mut self, weights: &[(String, Weight)]) -> Result<()> {
        for (id, w) in weights {
            if *w > Ratio::from_integer(1) {
                return Err(Error::domain(format!("weight of `{id}` is {w}, outside [0, 1]")));
            }
            let pos = self
                .position(id)
                .ok_or_else(|| Error::domain(format!("unknown vertex `{id}`")))?;
            self.vertices[pos].weight = *w;
        }
        Ok(())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            let (a, b) = e.endpoints();
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            let (a, b) = e.endpoints();
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
            degrees: self.vertices.iter().map(|v| v.id.clone()).zip(self.degrees()).collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rough::MembershipAssignment;

    fn assignment(ws: &[(u64, u64)]) -> MembershipAssignment {
        MembershipAssignment::from_values(
            ws.iter()
                .enumerate()
                .map(|(i, &(p, q))| ((i + 1).to_string(), Ratio::new(p, q)))
                .collect(),
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn worked_example_has_eighteen_edges() {
        let g = RoughGraph::from_memberships(&assignment(&[(1, 1), (0, 1), (0, 1), (1, 1), (1, 1), (0, 1), (1, 1)]))
            .unwrap();
        assert_eq!(g.edge_count(), 18);
        for (u, v) in [("2", "3"), ("2", "6"), ("3", "6")] {
            assert!(g.edge_between(u, v).is_none());
        }
        assert!(g.edge_between("2", "1").is_some());
        let stats = g.stats();
        assert_eq!((stats.vertex_count, stats.edge_count), (7, 18));
        assert_eq!(stats.degrees.iter().map(|d| d.1).sum::<usize>(), 36);
    }

    #[test]
    fn all_zero_and_all_one() {
        let g = RoughGraph::from_memberships(&assignment(&[(0, 1); 5])).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.vertex_count(), 5);
        let g = RoughGraph::from_memberships(&assignment(&[(1, 1); 6])).unwrap();
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn fractional_weight_fires_rule() {
        let g = RoughGraph::from_memberships(&assignment(&[(1, 3), (0, 1)])).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edge_weight(g.edges()[0]), Ratio::new(1, 3));
    }

    #[test]
    fn path_stats() {
        let g = RoughGraph::unit(&["a", "b", "c", "d"], &[("a", "b"), ("c", "b"), ("c", "d")]).unwrap();
        let s = g.stats();
        assert_eq!((s.vertex_count, s.edge_count), (4, 3));
        assert_eq!(s.degrees.iter().map(|d| d.1).collect::<Vec<_>>(), [1, 2, 2, 1]);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_invalid_edges() {
        let ids = ["a", "b"];
        assert!(RoughGraph::unit(&ids, &[("a", "a")]).is_err());
        assert!(RoughGraph::unit(&ids, &[("a", "b"), ("b", "a")]).is_err());
        assert!(RoughGraph::unit(&ids, &[("a", "z")]).is_err());
        assert!(RoughGraph::unit(&["a", "a"], &[]).is_err());
    }

    #[test]
    fn edges_are_canonical() {
        let g1 = RoughGraph::unit(&["a", "b", "c"], &[("c", "a"), ("b", "a")]).unwrap();
        let g2 = RoughGraph::unit(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        assert_eq!(g1, g2);
        assert_eq!(g1.edges()[0].endpoints(), (0, 1));
    }

    #[test]
    fn disconnected_detected() {
        let g = RoughGraph::unit(&["a", "b", "c"], &[("a", "b")]).unwrap();
        assert!(!g.is_connected());
    }
}
