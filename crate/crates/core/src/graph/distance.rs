//! All-pairs hop distances by breadth-first search from every vertex.

use std::collections::VecDeque;

use super::Graph;

/// Hop distances for one graph. Disconnected pairs are `None`, never a
/// large stand-in value; `diameter` is the largest finite entry.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    dist: Vec<Vec<Option<u32>>>,
    diameter: Option<u32>,
}

impl DistanceMatrix {
    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u][v]
    }

    /// Largest finite distance; `None` only for the empty graph.
    pub fn diameter(&self) -> Option<u32> {
        self.diameter
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().flatten().all(|d| d.is_some())
    }

    pub fn n(&self) -> usize {
        self.dist.len()
    }
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut dist = vec![vec![None; n]; n];
    let mut queue = VecDeque::new();
    for (src, row) in dist.iter_mut().enumerate() {
        row[src] = Some(0);
        queue.clear();
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let d = row[v].expect("queued vertices have a distance");
            for &w in g.neighbors(v) {
                if row[w].is_none() {
                    row[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    let diameter = dist.iter().flatten().filter_map(|d| *d).max();
    DistanceMatrix { dist, diameter }
}
