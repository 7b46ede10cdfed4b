//! Exhaustive depth-first search for even-vertex ζ-graceful labelings.
//!
//! Labels come from the pool `{0, 2, .., 2·cap}` (or `{2, .., 2·cap}`).
//! Vertices are assigned in descending degree order, ties broken by id, and
//! labels are tried in ascending order, so the first solution is the
//! lexicographically smallest assignment in that vertex order. A branch is
//! cut as soon as a vertex label repeats or an edge whose endpoints are both
//! labeled repeats an induced edge label.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::RoughGraph;
use crate::labeling::{label_from_zeta, VertexLabeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Stop at the first valid labeling.
    #[default]
    FirstSolution,
    /// Visit the whole tree and count valid labelings.
    CountAll,
    /// Visit the whole tree; a `NoneWithinPool` verdict is then a proof that
    /// the pool admits no labeling.
    ExhaustiveProofOfNone,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub cap: u64,
    pub mode: SearchMode,
    pub include_zero: bool,
    /// Worker threads; 1 searches on the calling thread.
    pub threads: usize,
}

impl SearchConfig {
    pub fn new(cap: u64) -> Self {
        SearchConfig {
            cap,
            mode: SearchMode::FirstSolution,
            include_zero: true,
            threads: 1,
        }
    }

    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn without_zero(mut self) -> Self {
        self.include_zero = false;
        self
    }

    /// The label pool in ascending order.
    pub fn pool(&self) -> Result<Vec<u64>> {
        let first = if self.include_zero { 0 } else { 1 };
        (first..=self.cap)
            .map(|k| k.checked_mul(2).ok_or(Error::Overflow("label pool")))
            .collect()
    }

    fn validate(&self, g: &RoughGraph) -> Result<Vec<u64>> {
        if self.cap == 0 {
            return Err(Error::parameter("cap must be positive"));
        }
        if self.threads == 0 {
            return Err(Error::parameter("thread count must be positive"));
        }
        if g.vertex_count() == 0 {
            return Err(Error::parameter("graph has no vertices"));
        }
        let pool_len = self.cap + u64::from(self.include_zero);
        if pool_len < g.vertex_count() as u64 {
            return Err(Error::parameter(format!(
                "pool of {pool_len} labels cannot label {} vertices injectively (cap {} too small)",
                g.vertex_count(),
                self.cap
            )));
        }
        self.pool()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(VertexLabeling),
    /// No labeling uses only pool labels. Says nothing about larger pools.
    NoneWithinPool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    /// Valid labelings counted; `None` unless the whole tree was visited.
    pub count: Option<u64>,
    /// Search-tree nodes (partial assignments) visited.
    pub nodes: u64,
}

struct Problem<'g> {
    graph: &'g RoughGraph,
    pool: Vec<u64>,
    /// Vertex positions in assignment order.
    order: Vec<usize>,
    /// For each step, the positions (in `order`) of earlier neighbours.
    back: Vec<Vec<usize>>,
    m: usize,
    max_edge_label: usize,
}

impl<'g> Problem<'g> {
    fn new(graph: &'g RoughGraph, pool: Vec<u64>) -> Result<Self> {
        let degrees = graph.degrees();
        let mut order: Vec<usize> = (0..graph.vertex_count()).collect();
        order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then_with(|| graph.id(a).cmp(graph.id(b))));
        let mut step_of = vec![0; order.len()];
        for (step, &v) in order.iter().enumerate() {
            step_of[v] = step;
        }
        let adj = graph.adjacency();
        let back = order
            .iter()
            .enumerate()
            .map(|(step, &v)| {
                let mut earlier: Vec<usize> = adj[v].iter().map(|&w| step_of[w]).filter(|&s| s < step).collect();
                earlier.sort_unstable();
                earlier
            })
            .collect();
        let m = graph.edge_count();
        let top = pool.last().copied().unwrap_or(0);
        let max_zeta = top
            .checked_mul(2)
            .and_then(|x| x.checked_add(m as u64))
            .ok_or(Error::Overflow("search edge label bound"))?;
        Ok(Problem {
            graph,
            pool,
            order,
            back,
            m,
            max_edge_label: usize::try_from(label_from_zeta(max_zeta))
                .map_err(|_| Error::Overflow("search edge label bound"))?,
        })
    }

    fn state(&self) -> State {
        State {
            labels: Vec::with_capacity(self.order.len()),
            vertex_used: vec![false; self.pool.len()],
            edge_used: vec![false; self.max_edge_label + 1],
            nodes: 0,
        }
    }

    fn edge_label(&self, a: u64, b: u64) -> usize {
        // Bounded by max_edge_label, computed with checked arithmetic above.
        label_from_zeta(a + b + self.m as u64) as usize
    }

    /// Tries pool index `slot` for the next vertex; on success the caller
    /// must `pop` afterwards.
    fn push(&self, st: &mut State, slot: usize) -> bool {
        if st.vertex_used[slot] {
            return false;
        }
        let step = st.labels.len();
        let label = self.pool[slot];
        let new_edges: Vec<usize> = self.back[step]
            .iter()
            .map(|&s| self.edge_label(label, self.pool[st.labels[s]]))
            .collect();
        for (i, &e) in new_edges.iter().enumerate() {
            if st.edge_used[e] || new_edges[..i].contains(&e) {
                return false;
            }
        }
        for &e in &new_edges {
            st.edge_used[e] = true;
        }
        st.vertex_used[slot] = true;
        st.labels.push(slot);
        st.nodes += 1;
        true
    }

    fn pop(&self, st: &mut State) {
        let slot = st.labels.pop().expect("pop after push");
        st.vertex_used[slot] = false;
        let step = st.labels.len();
        let label = self.pool[slot];
        for &s in &self.back[step] {
            let e = self.edge_label(label, self.pool[st.labels[s]]);
            st.edge_used[e] = false;
        }
    }

    fn explore<F>(&self, st: &mut State, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if st.labels.len() == self.order.len() {
            return visit(&st.labels);
        }
        for slot in 0..self.pool.len() {
            if self.push(st, slot) {
                let flow = self.explore(st, visit);
                self.pop(st);
                flow?;
            }
        }
        ControlFlow::Continue(())
    }

    fn to_labeling(&self, slots: &[usize]) -> VertexLabeling {
        let mut labels = vec![0; self.order.len()];
        for (step, &slot) in slots.iter().enumerate() {
            labels[self.order[step]] = self.pool[slot];
        }
        VertexLabeling::for_graph(self.graph, &labels).expect("one label per vertex")
    }

    /// Searches the subtree where the first vertex takes pool index `root`.
    fn subtree(&self, root: usize, stop_at_first: bool) -> Partial {
        let mut st = self.state();
        let mut first = None;
        let mut count = 0u64;
        if self.push(&mut st, root) {
            let _ = self.explore(&mut st, &mut |slots| {
                count += 1;
                if first.is_none() {
                    first = Some(slots.to_vec());
                }
                if stop_at_first {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            self.pop(&mut st);
        }
        Partial {
            first,
            count,
            nodes: st.nodes,
        }
    }
}

struct State {
    /// Pool indices, one per assigned step.
    labels: Vec<usize>,
    vertex_used: Vec<bool>,
    edge_used: Vec<bool>,
    nodes: u64,
}

struct Partial {
    first: Option<Vec<usize>>,
    count: u64,
    nodes: u64,
}

/// Runs the search as configured. With several threads the tree is split by
/// the first vertex's label; results are merged in label order so the output
/// does not depend on scheduling.
pub fn run_search(g: &RoughGraph, cfg: &SearchConfig) -> Result<SearchReport> {
    let pool = cfg.validate(g)?;
    let problem = Problem::new(g, pool)?;
    let stop_at_first = cfg.mode == SearchMode::FirstSolution;
    let roots: Vec<usize> = (0..problem.pool.len()).collect();

    let partials: Vec<Partial> = if cfg.threads == 1 {
        let mut out = Vec::new();
        for &root in &roots {
            let p = problem.subtree(root, stop_at_first);
            let done = stop_at_first && p.first.is_some();
            out.push(p);
            if done {
                break;
            }
        }
        out
    } else {
        let workers = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .map_err(|e| Error::parameter(format!("cannot start {} threads: {e}", cfg.threads)))?;
        workers.install(|| {
            roots
                .par_iter()
                .map(|&root| problem.subtree(root, stop_at_first))
                .collect()
        })
    };

    let nodes = partials.iter().map(|p| p.nodes).sum();
    let first = partials.iter().find_map(|p| p.first.as_deref());
    let outcome = match first {
        Some(slots) => SearchOutcome::Found(problem.to_labeling(slots)),
        None => SearchOutcome::NoneWithinPool,
    };
    let count = (!stop_at_first).then(|| partials.iter().map(|p| p.count).sum());
    Ok(SearchReport { outcome, count, nodes })
}

/// First labeling within the pool, or a certified `NoneWithinPool`.
pub fn search_labeling(g: &RoughGraph, cfg: &SearchConfig) -> Result<SearchOutcome> {
    Ok(run_search(g, cfg)?.outcome)
}

/// Number of valid labelings within the pool, regardless of `cfg.mode`.
pub fn count_labelings(g: &RoughGraph, cfg: &SearchConfig) -> Result<u64> {
    let cfg = cfg.clone().mode(SearchMode::CountAll);
    Ok(run_search(g, &cfg)?.count.expect("count-all visits the whole tree"))
}

/// Calls `visit` with every valid labeling, in search order, until it breaks.
pub fn enumerate_labelings<F>(g: &RoughGraph, cfg: &SearchConfig, mut visit: F) -> Result<()>
where
    F: FnMut(&VertexLabeling) -> ControlFlow<()>,
{
    let pool = cfg.validate(g)?;
    let problem = Problem::new(g, pool)?;
    let mut st = problem.state();
    let _ = problem.explore(&mut st, &mut |slots| visit(&problem.to_labeling(slots)));
    Ok(())
}
