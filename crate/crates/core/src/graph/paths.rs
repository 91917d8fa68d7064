use std::collections::BTreeSet;

use super::{normalize, Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathKind {
    /// Closed: starts and ends at the same branch vertex.
    TypeI,
    /// Open: joins two distinct branch vertices.
    TypeII,
}

/// A maximal walk `v_0 ... v_k` with `d(v_0), d(v_k) > 2` and every interior
/// vertex of degree 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InternalPath {
    pub vertices: Vec<usize>,
    pub kind: PathKind,
}

impl InternalPath {
    /// Number of edges `k`.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| normalize(w[0], w[1]))
    }
}

/// All internal paths of `g`. Each path is reported once, oriented so that
/// its vertex list is lexicographically no larger than its reverse; the list
/// is sorted.
pub fn internal_paths(g: &Graph) -> Vec<InternalPath> {
    let adj = g.adjacency();
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut found = BTreeSet::new();

    for start in (0..g.n_vertices()).filter(|&v| deg[v] > 2) {
        for &first in &adj[start] {
            let mut walk = vec![start, first];
            let mut prev = start;
            let mut cur = first;
            while deg[cur] == 2 {
                let next = if adj[cur][0] == prev {
                    adj[cur][1]
                } else {
                    adj[cur][0]
                };
                prev = cur;
                cur = next;
                walk.push(cur);
            }
            if deg[cur] <= 2 {
                // ran into a leaf
                continue;
            }
            let mut rev = walk.clone();
            rev.reverse();
            let vertices = walk.min(rev);
            let kind = if vertices[0] == vertices[vertices.len() - 1] {
                PathKind::TypeI
            } else {
                PathKind::TypeII
            };
            found.insert(InternalPath { vertices, kind });
        }
    }
    found.into_iter().collect()
}

/// Edges lying on some internal path.
pub fn edges_on_internal_paths(g: &Graph) -> BTreeSet<Edge> {
    internal_paths(g)
        .iter()
        .flat_map(|p| p.edges().collect::<Vec<_>>())
        .collect()
}
