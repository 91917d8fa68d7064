//! Simple undirected graphs and the families used by the limit-point
//! constructions.
//!
//! A [`Graph`] is a vertex count plus a set of unordered edges. Vertices are
//! `0..n_vertices`. Graphs are immutable values: every transformation
//! ([`Graph::subdivide_edge`], [`attach_pendant_path`], ...) returns a new
//! graph.
//!
//! The one-line text format used for interchange is
//!
//! ```text
//! <n_vertices>; <u>-<v>,<u>-<v>,...
//! ```
//!
//! for example `4; 0-1,0-2,0-3` for the star `K_{1,3}`.

mod families;
mod paths;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use families::{
    attach_pendant_path, cycle, double_snake, join_by_path, lollipop, p2_two_paths, path, star,
    wheel5,
};
pub use paths::{edges_on_internal_paths, internal_paths, InternalPath, PathKind};

/// Unordered edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

fn normalize(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n_vertices: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    /// Edgeless graph on `n_vertices` vertices.
    pub fn empty(n_vertices: usize) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::InvalidOrder {
                family: "graph",
                min: 1,
                got: 0,
            });
        }
        Ok(Graph {
            n_vertices,
            edges: BTreeSet::new(),
        })
    }

    pub fn from_edges<I>(n_vertices: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::empty(n_vertices)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an edge in place. Used by the constructors in this module.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.edges.insert(normalize(u, v)) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        Ok(())
    }

    pub(crate) fn add_vertices(&mut self, count: usize) -> usize {
        let first = self.n_vertices;
        self.n_vertices += count;
        first
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n_vertices {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n_vertices: self.n_vertices,
            })
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&normalize(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Adjacency lists, neighbours in increasing order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n_vertices];
        let mut out = Vec::new();
        for start in 0..self.n_vertices {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.n_edges() + self.components().len() == self.n_vertices
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.n_edges() + 1 == self.n_vertices
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.iter().all(|&x| x == d[0])
    }

    /// Connected 2-regular graph.
    pub fn is_cycle(&self) -> bool {
        self.n_vertices >= 3 && self.is_connected() && self.degrees().iter().all(|&d| d == 2)
    }

    /// A tree consisting of a path whose two end vertices each carry two
    /// extra leaves (the double snake `DS_n`, `n >= 6`).
    pub fn is_double_snake(&self) -> bool {
        if self.n_vertices < 6 || !self.is_tree() {
            return false;
        }
        let deg = self.degrees();
        let branch: Vec<usize> = (0..self.n_vertices).filter(|&v| deg[v] > 2).collect();
        if branch.len() != 2 || branch.iter().any(|&v| deg[v] != 3) {
            return false;
        }
        let adj = self.adjacency();
        branch
            .iter()
            .all(|&b| adj[b].iter().filter(|&&w| deg[w] == 1).count() == 2)
    }

    /// 2-colourability by breadth-first colouring.
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut colour: Vec<Option<bool>> = vec![None; self.n_vertices];
        for start in 0..self.n_vertices {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = colour[v].unwrap_or(false);
                for &w in &adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Replaces the edge `e` by a path of length two through one new vertex,
    /// which receives index `n_vertices`.
    pub fn subdivide_edge(&self, e: Edge) -> Result<Graph> {
        let (u, v) = normalize(e.0, e.1);
        if !self.edges.contains(&(u, v)) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.edges.remove(&(u, v));
        let w = g.add_vertices(1);
        g.insert_edge(u, w)?;
        g.insert_edge(w, v)?;
        Ok(g)
    }

    pub fn remove_edge(&self, e: Edge) -> Result<Graph> {
        let (u, v) = normalize(e.0, e.1);
        if !self.edges.contains(&(u, v)) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.edges.remove(&(u, v));
        Ok(g)
    }

    /// Deletes vertex `v`; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)));
        Graph::from_edges(self.n_vertices - 1, edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n_vertices)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            let sep = if i == 0 { " " } else { "," };
            write!(f, "{sep}{u}-{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// Parses `n; u-v,u-v,...`. Whitespace around tokens is ignored and the
    /// edge list may be empty.
    fn from_str(s: &str) -> Result<Graph> {
        let parse_err = |position: usize, message: &str| Error::Parse {
            position,
            message: message.to_string(),
        };
        let semi = s
            .find(';')
            .ok_or_else(|| parse_err(s.len(), "expected ';' after the vertex count"))?;
        let head = &s[..semi];
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| parse_err(head.len() - head.trim_start().len(), "invalid vertex count"))?;
        let mut g = Graph::empty(n).map_err(|e| parse_err(0, &e.to_string()))?;

        let body = &s[semi + 1..];
        if body.trim().is_empty() {
            return Ok(g);
        }
        let mut offset = semi + 1;
        for token in body.split(',') {
            let lead = token.len() - token.trim_start().len();
            let pos = offset + lead;
            let t = token.trim();
            let (a, b) = t
                .split_once('-')
                .ok_or_else(|| parse_err(pos, "expected an edge of the form u-v"))?;
            let u: usize = a
                .trim()
                .parse()
                .map_err(|_| parse_err(pos, "invalid vertex index"))?;
            let v: usize = b
                .trim()
                .parse()
                .map_err(|_| parse_err(pos + a.len() + 1, "invalid vertex index"))?;
            g.insert_edge(u, v)
                .map_err(|e| parse_err(pos, &e.to_string()))?;
            offset += token.len() + 1;
        }
        Ok(g)
    }
}
