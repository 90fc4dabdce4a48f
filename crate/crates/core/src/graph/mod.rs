//! Simple undirected graphs with dense vertex and edge ids, standard
//! generators, graph6 I/O, hop distances, and brute-force automorphisms.

use std::collections::HashSet;
use thiserror::Error;

mod automorphism;
mod distance;
mod graph6;

pub use automorphism::{automorphisms, AutomorphismGroup, DEFAULT_EXHAUSTIVE_LIMIT};
pub use distance::{distance_matrix, DistanceMatrix};
pub use graph6::{graph_from_graph6, graph_to_graph6};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid generator argument: {0}")]
    InvalidArgument(String),
}

/// Simple undirected graph. Vertices are `0..n`; edges carry dense ids
/// `0..m` that stay stable for the life of the value.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs are normalized to `u < v`;
    /// loops, duplicates, and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::InvalidGraph(format!(
                    "edge ({a},{b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(GraphError::InvalidGraph(format!("loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::InvalidGraph(format!(
                    "duplicate edge ({},{})",
                    e.0, e.1
                )));
            }
            normalized.push(e);
        }
        let mut adj_pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (idx, &(u, v)) in normalized.iter().enumerate() {
            adj_pairs[u].push((v, idx));
            adj_pairs[v].push((u, idx));
        }
        let mut adj = Vec::with_capacity(n);
        let mut incident = Vec::with_capacity(n);
        for mut pairs in adj_pairs {
            pairs.sort_unstable();
            adj.push(pairs.iter().map(|&(w, _)| w).collect());
            incident.push(pairs.iter().map(|&(_, e)| e).collect());
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
            incident,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The endpoints of edge `e`, with `u < v`.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Ids of the edges incident to `v`, aligned with `neighbors(v)`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let k = self.adj[u].binary_search(&v).ok()?;
        Some(self.incident[u][k])
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Display name, falling back to an `n,m` sketch.
    pub fn display_name(&self) -> String {
        match &self.name {
            Some(s) => s.clone(),
            None => format!("graph(n={},m={})", self.n, self.m()),
        }
    }
}

/// Graph families with a canonical vertex numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
}

impl GraphFamily {
    pub fn parse(s: &str) -> Option<GraphFamily> {
        match s {
            "path" => Some(GraphFamily::Path),
            "cycle" => Some(GraphFamily::Cycle),
            "star" => Some(GraphFamily::Star),
            "complete" => Some(GraphFamily::Complete),
            "complete_bipartite" | "complete-bipartite" => Some(GraphFamily::CompleteBipartite),
            _ => None,
        }
    }
}

/// Path on `n` vertices, numbered 0..n-1 along the path.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    positive(n, "path order")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::new(n, &edges)?.with_name(format!("P_{n}")))
}

/// Cycle on `n >= 3` vertices, numbered cyclically.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidArgument(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Ok(Graph::new(n, &edges)?.with_name(format!("C_{n}")))
}

/// Star on `n` vertices: center 0, leaves 1..n-1.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    positive(n, "star order")?;
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(Graph::new(n, &edges)?.with_name(format!("K_{{1,{}}}", n - 1)))
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    positive(n, "complete graph order")?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::new(n, &edges)?.with_name(format!("K_{n}")))
}

/// Complete bipartite graph; side A is 0..p-1, side B is p..p+q-1.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, GraphError> {
    positive(p, "bipartite side size")?;
    positive(q, "bipartite side size")?;
    let mut edges = Vec::new();
    for a in 0..p {
        for b in 0..q {
            edges.push((a, p + b));
        }
    }
    Ok(Graph::new(p + q, &edges)?.with_name(format!("K_{{{p},{q}}}")))
}

/// Same graph plus `k` isolated vertices appended after the existing ones.
pub fn with_isolated(g: &Graph, k: usize) -> Graph {
    if k == 0 {
        return g.clone();
    }
    let name = format!("{}+{}iso", g.display_name(), k);
    Graph::new(g.n + k, &g.edges)
        .expect("adding isolated vertices keeps the graph valid")
        .with_name(name)
}

/// Generator entry point: `params` is one integer for most families and
/// `(p, q)` for complete bipartite; `isolated` extra vertices go last.
pub fn generate(
    family: GraphFamily,
    params: &[usize],
    isolated: usize,
) -> Result<Graph, GraphError> {
    let base = match (family, params) {
        (GraphFamily::Path, [n]) => path(*n)?,
        (GraphFamily::Cycle, [n]) => cycle(*n)?,
        (GraphFamily::Star, [n]) => star(*n)?,
        (GraphFamily::Complete, [n]) => complete(*n)?,
        (GraphFamily::CompleteBipartite, [p, q]) => complete_bipartite(*p, *q)?,
        _ => {
            return Err(GraphError::InvalidArgument(format!(
                "family {family:?} takes {} parameter(s), got {}",
                if family == GraphFamily::CompleteBipartite {
                    2
                } else {
                    1
                },
                params.len()
            )))
        }
    };
    Ok(with_isolated(&base, isolated))
}

fn positive(n: usize, what: &str) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::InvalidArgument(format!(
            "{what} must be positive"
        )))
    } else {
        Ok(())
    }
}
