//! Exhaustive automorphism search for desk-scale graphs: filter all n!
//! vertex permutations for adjacency preservation. Above the threshold
//! the trivial group is returned and consumers must stay correct with it.

use super::Graph;

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 9;

/// The vertex permutations preserving adjacency. `exhaustive` is false
/// when the order threshold forced the trivial fallback.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    perms: Vec<Vec<usize>>,
    exhaustive: bool,
    limit: usize,
}

impl AutomorphismGroup {
    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the identity is always present
    }

    /// True when the stored list is the full group, not the fallback.
    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    pub fn limit(&self) -> usize {
        self.limit
    }
}

/// Finds the full automorphism group when `n <= max_n`, otherwise the
/// trivial group marked as a fallback. The identity comes first.
pub fn automorphisms(g: &Graph, max_n: usize) -> AutomorphismGroup {
    let n = g.n();
    let identity: Vec<usize> = (0..n).collect();
    if n > max_n {
        return AutomorphismGroup {
            perms: vec![identity],
            exhaustive: false,
            limit: max_n,
        };
    }

    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }

    let mut perms = Vec::new();
    let mut perm = identity;
    // Lexicographic enumeration keeps the identity first and the output
    // order deterministic.
    loop {
        if preserves_adjacency(g, &adj, &perm) {
            perms.push(perm.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    AutomorphismGroup {
        perms,
        exhaustive: true,
        limit: max_n,
    }
}

fn preserves_adjacency(g: &Graph, adj: &[bool], perm: &[usize]) -> bool {
    let n = g.n();
    g.edges().iter().all(|&(u, v)| adj[perm[u] * n + perm[v]])
}

fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
