//! Distances, diameter, girth and the Moore predicate.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use super::{MixedGraph, Vertex};
use crate::error::Result;
use crate::moore::mixed_moore_bound;

/// A path length, or `Infinite` when no path exists. `Finite` sorts below
/// `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

const UNSEEN: u32 = u32::MAX;

/// Outcome of [`MixedGraph::is_mixed_moore`] with the three sub-results.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MooreReport {
    /// `(z, r)` if the graph is mixed-regular.
    pub regular: Option<(usize, usize)>,
    pub diameter: Distance,
    pub order: usize,
    /// `(r+z)^2 + z + 1` for the regular parameters.
    pub bound: Option<u64>,
    pub is_moore: bool,
}

impl MixedGraph {
    /// BFS distances from `src`: an edge is crossed either way, an arc only
    /// from tail to head.
    pub fn bfs_from(&self, src: usize) -> Vec<Distance> {
        self.bfs_raw(src)
            .into_iter()
            .map(|d| if d == UNSEEN { Distance::Infinite } else { Distance::Finite(d) })
            .collect()
    }

    fn bfs_raw(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNSEEN; self.order()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in self.edge_neighbors(u).iter().chain(self.out_neighbors(u)) {
                if dist[w] == UNSEEN {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: &Vertex, v: &Vertex) -> Result<Distance> {
        let (s, t) = (self.index_of(u)?, self.index_of(v)?);
        Ok(self.bfs_from(s)[t])
    }

    /// Largest distance over all ordered pairs, one BFS per source. Sources
    /// run on the rayon pool; the result does not depend on scheduling.
    pub fn diameter(&self) -> Distance {
        (0..self.order())
            .into_par_iter()
            .map(|s| {
                let d = self.bfs_raw(s);
                match d.iter().max() {
                    Some(&UNSEEN) => Distance::Infinite,
                    Some(&m) => Distance::Finite(m),
                    None => Distance::Finite(0),
                }
            })
            .max()
            .unwrap_or(Distance::Finite(0))
    }

    /// Length of a shortest cycle in the edge-only subgraph.
    pub fn undirected_girth(&self) -> Distance {
        (0..self.order())
            .into_par_iter()
            .filter_map(|root| self.shortest_cycle_through_bfs(root))
            .min()
            .map_or(Distance::Infinite, Distance::Finite)
    }

    /// Shortest cycle closed by a non-tree edge of the BFS tree at `root`.
    /// The minimum over all roots is the girth.
    fn shortest_cycle_through_bfs(&self, root: usize) -> Option<u32> {
        let n = self.order();
        let mut dist = vec![UNSEEN; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        let mut best: Option<u32> = None;
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] >= b {
                    break;
                }
            }
            for &w in self.edge_neighbors(u) {
                if dist[w] == UNSEEN {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        best
    }

    /// Mixed-regular, diameter at most 2, and order `(r+z)^2 + z + 1`.
    pub fn is_mixed_moore(&self) -> MooreReport {
        let regular = self.is_mixed_regular();
        let diameter = self.diameter();
        let order = self.order();
        let bound = regular.map(|(z, r)| mixed_moore_bound(z as u64, r as u64));
        let is_moore = bound == Some(order as u64) && diameter <= Distance::Finite(2);
        MooreReport { regular, diameter, order, bound, is_moore }
    }
}
