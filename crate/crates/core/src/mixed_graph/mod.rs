//! Mixed graphs: a vertex set with undirected edges and directed arcs.

mod io;
mod metrics;

pub use io::{parse_mg1, to_dot, write_mg1};
pub use metrics::{Distance, MooreReport};

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::FieldElem;

/// A vertex label. Lines `[m,b]` and points `(x,y)` come from the biaffine
/// plane; `Node` is an opaque id for every other graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Line(FieldElem, FieldElem),
    Point(FieldElem, FieldElem),
    Node(u32),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Line(m, b) => write!(f, "[{m},{b}]"),
            Vertex::Point(x, y) => write!(f, "({x},{y})"),
            Vertex::Node(id) => write!(f, "{id}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeTriple {
    pub r: usize,
    pub z_out: usize,
    pub z_in: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Adjacency {
    edges: Vec<usize>,
    out: Vec<usize>,
    inn: Vec<usize>,
}

/// An immutable mixed graph.
///
/// Edges are stored as `(i, j)` with `i < j`, arcs as `(tail, head)`; both
/// lists are sorted and free of duplicates, and no vertex pair carries both
/// an edge and an arc. Two opposite arcs (a digon) are allowed.
#[derive(Clone, Debug)]
pub struct MixedGraph {
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
    adj: Vec<Adjacency>,
}

impl PartialEq for MixedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges && self.arcs == other.arcs
    }
}

impl Eq for MixedGraph {}

/// Collects vertices, edges and arcs; [`GraphBuilder::build`] validates.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    vertices: Vec<Vertex>,
    edges: BTreeSet<(usize, usize)>,
    arcs: BTreeSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(vertices: Vec<Vertex>) -> Self {
        GraphBuilder { vertices, ..Self::default() }
    }

    pub fn add_vertex(&mut self, v: Vertex) -> usize {
        self.vertices.push(v);
        self.vertices.len() - 1
    }

    /// Adds the undirected edge `{u, v}`; repeated edges collapse.
    pub fn add_edge(&mut self, u: usize, v: usize) -> &mut Self {
        self.edges.insert((u.min(v), u.max(v)));
        self
    }

    pub fn add_arc(&mut self, tail: usize, head: usize) -> &mut Self {
        self.arcs.insert((tail, head));
        self
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn build(self) -> Result<MixedGraph> {
        let n = self.vertices.len();
        let mut index = HashMap::with_capacity(n);
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(*v, i).is_some() {
                return Err(Error::DuplicateVertex(v.to_string()));
            }
        }
        let check = |i: usize| {
            if i < n {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange { index: i, order: n })
            }
        };
        let mut adj = vec![Adjacency::default(); n];
        for &(u, v) in &self.edges {
            check(u)?;
            check(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].edges.push(v);
            adj[v].edges.push(u);
        }
        for &(u, v) in &self.arcs {
            check(u)?;
            check(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if self.edges.contains(&(u.min(v), u.max(v))) {
                return Err(Error::EdgeArcConflict(u, v));
            }
            adj[u].out.push(v);
            adj[v].inn.push(u);
        }
        for a in &mut adj {
            a.edges.sort_unstable();
            a.out.sort_unstable();
            a.inn.sort_unstable();
        }
        Ok(MixedGraph {
            vertices: self.vertices,
            index,
            edges: self.edges.into_iter().collect(),
            arcs: self.arcs.into_iter().collect(),
            adj,
        })
    }
}

impl MixedGraph {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        self.vertices[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn index_of(&self, v: &Vertex) -> Result<usize> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| Error::VertexNotFound(v.to_string()))
    }

    pub fn edge_neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i].edges
    }

    pub fn out_neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i].out
    }

    pub fn in_neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i].inn
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].edges.binary_search(&v).is_ok()
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.adj[tail].out.binary_search(&head).is_ok()
    }

    pub fn degrees_at(&self, i: usize) -> DegreeTriple {
        let a = &self.adj[i];
        DegreeTriple { r: a.edges.len(), z_out: a.out.len(), z_in: a.inn.len() }
    }

    pub fn degrees(&self, v: &Vertex) -> Result<DegreeTriple> {
        Ok(self.degrees_at(self.index_of(v)?))
    }

    /// `Some((z, r))` when every vertex has `r` edges, `z` out-arcs and `z`
    /// in-arcs. The empty graph is not regular.
    pub fn is_mixed_regular(&self) -> Option<(usize, usize)> {
        if self.order() == 0 {
            return None;
        }
        let first = self.degrees_at(0);
        if first.z_out != first.z_in {
            return None;
        }
        (0..self.order())
            .all(|i| self.degrees_at(i) == first)
            .then_some((first.z_out, first.r))
    }

    /// Rebuilds the adjacency from the edge and arc lists and compares, and
    /// re-checks self-loops and edge/arc disjointness.
    pub fn check_consistency(&self) -> Result<()> {
        let mut b = GraphBuilder::with_vertices(self.vertices.clone());
        for &(u, v) in &self.edges {
            b.add_edge(u, v);
        }
        for &(u, v) in &self.arcs {
            b.add_arc(u, v);
        }
        let rebuilt = b.build()?;
        if rebuilt.adj != self.adj || rebuilt.edges != self.edges || rebuilt.arcs != self.arcs {
            return Err(Error::Inconsistent("adjacency out of sync with edge/arc lists".into()));
        }
        Ok(())
    }

    /// Same graph with vertex `i` moved to position `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<MixedGraph> {
        let n = self.order();
        let mut verts = vec![Vertex::Node(0); n];
        for (i, &p) in perm.iter().enumerate() {
            verts[p] = self.vertices[i];
        }
        let mut b = GraphBuilder::with_vertices(verts);
        for &(u, v) in &self.edges {
            b.add_edge(perm[u], perm[v]);
        }
        for &(u, v) in &self.arcs {
            b.add_arc(perm[u], perm[v]);
        }
        b.build()
    }
}
