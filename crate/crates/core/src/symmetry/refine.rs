//! Color refinement and individualization-refinement search.
//!
//! Colors are canonical: after each round a vertex's new color is the rank
//! of its signature among all distinct signatures, so two graphs refined as
//! one disjoint union receive comparable colors.

use std::collections::{HashMap, HashSet};

use super::{check_isomorphism, VertexMap};
use crate::mixed_graph::MixedGraph;

const EDGE: u8 = 0;
const OUT: u8 = 1;
const IN: u8 = 2;

/// Adjacency of one graph or of a disjoint union of two.
struct Structure {
    nbrs: Vec<Vec<(usize, u8)>>,
}

impl Structure {
    fn new(graphs: &[&MixedGraph]) -> Self {
        let mut nbrs = Vec::new();
        let mut offset = 0;
        for g in graphs {
            for i in 0..g.order() {
                let mut list: Vec<(usize, u8)> = Vec::new();
                list.extend(g.edge_neighbors(i).iter().map(|&w| (w + offset, EDGE)));
                list.extend(g.out_neighbors(i).iter().map(|&w| (w + offset, OUT)));
                list.extend(g.in_neighbors(i).iter().map(|&w| (w + offset, IN)));
                nbrs.push(list);
            }
            offset += g.order();
        }
        Structure { nbrs }
    }

    fn relabel_by_rank<K: Ord + Clone>(keys: &[K]) -> (Vec<usize>, usize) {
        let mut distinct: Vec<K> = keys.to_vec();
        distinct.sort();
        distinct.dedup();
        let colors = keys
            .iter()
            .map(|k| distinct.binary_search(k).expect("key present"))
            .collect();
        (colors, distinct.len())
    }

    /// Refines `colors` until the number of classes stops growing.
    fn refine(&self, colors: &[usize]) -> Vec<usize> {
        let (mut colors, mut count) = Self::relabel_by_rank(colors);
        loop {
            let sigs: Vec<(usize, Vec<(usize, u8)>)> = self
                .nbrs
                .iter()
                .enumerate()
                .map(|(v, list)| {
                    let mut sig: Vec<(usize, u8)> = list.iter().map(|&(w, rel)| (colors[w], rel)).collect();
                    sig.sort_unstable();
                    (colors[v], sig)
                })
                .collect();
            let (next, next_count) = Self::relabel_by_rank(&sigs);
            colors = next;
            if next_count == count {
                return colors;
            }
            count = next_count;
        }
    }
}

/// A partition of the vertex set into color classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub colors: Vec<usize>,
    pub cells: Vec<Vec<usize>>,
}

impl Partition {
    fn from_colors(colors: Vec<usize>) -> Self {
        let count = colors.iter().max().map_or(0, |&c| c + 1);
        let mut cells = vec![Vec::new(); count];
        for (v, &c) in colors.iter().enumerate() {
            cells[c].push(v);
        }
        Partition { colors, cells }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Stable coloring from the uniform one, using edge, out-arc and in-arc
/// neighbor colors.
pub fn refine(g: &MixedGraph) -> Partition {
    refine_from(g, &vec![0; g.order()])
}

pub fn refine_from(g: &MixedGraph, initial: &[usize]) -> Partition {
    Partition::from_colors(Structure::new(&[g]).refine(initial))
}

/// Individualization-refinement over the disjoint union `g ⊔ h` (`h`
/// offset by `n`). Returns a verified isomorphism respecting `colors`.
fn search(s: &Structure, g: &MixedGraph, h: &MixedGraph, colors: &[usize]) -> Option<VertexMap> {
    let n = g.order();
    let colors = s.refine(colors);
    let classes = colors.iter().max().map_or(0, |&c| c + 1);
    let mut left = vec![0usize; classes];
    let mut right = vec![0usize; classes];
    for (v, &c) in colors.iter().enumerate() {
        if v < n {
            left[c] += 1;
        } else {
            right[c] += 1;
        }
    }
    if left != right {
        return None;
    }
    // First smallest non-singleton cell.
    let target = (0..classes).filter(|&c| left[c] > 1).min_by_key(|&c| (left[c], c));
    let Some(cell) = target else {
        let mut by_color = vec![usize::MAX; classes];
        for v in n..2 * n {
            by_color[colors[v]] = v - n;
        }
        let map = VertexMap::explicit((0..n).map(|v| by_color[colors[v]]).collect());
        return check_isomorphism(g, h, &map).is_ok().then_some(map);
    };
    let v = (0..n).find(|&v| colors[v] == cell)?;
    let fresh = classes;
    for w in (n..2 * n).filter(|&w| colors[w] == cell) {
        let mut next = colors.clone();
        next[v] = fresh;
        next[w] = fresh;
        if let Some(map) = search(s, g, h, &next) {
            return Some(map);
        }
    }
    None
}

/// Exhaustive isomorphism test; on success the witness maps `g` onto `h`
/// and has been re-verified edge by edge and arc by arc.
pub fn is_isomorphic(g: &MixedGraph, h: &MixedGraph) -> Option<VertexMap> {
    if g.order() != h.order() || g.edges().len() != h.edges().len() || g.arcs().len() != h.arcs().len() {
        return None;
    }
    let s = Structure::new(&[g, h]);
    search(&s, g, h, &vec![0; 2 * g.order()])
}

/// An automorphism of `g` sending `u` to `v`, if one exists.
pub fn automorphism_sending(g: &MixedGraph, u: usize, v: usize) -> Option<VertexMap> {
    let n = g.order();
    let s = Structure::new(&[g, g]);
    let mut colors = vec![0; 2 * n];
    colors[u] = 1;
    colors[n + v] = 1;
    search(&s, g, g, &colors)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Exact orbits of the automorphism group. Each refinement cell is split
/// by trying one automorphism search per pair of provisional orbits; found
/// automorphisms merge every orbit they touch. Exponential in the worst
/// case, intended for graphs of a few hundred vertices.
pub fn automorphism_orbits(g: &MixedGraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let part = refine(g);
    let mut parent: Vec<usize> = (0..n).collect();
    for cell in &part.cells {
        // Pairs of orbit representatives already shown to be inequivalent.
        let mut apart: HashSet<(usize, usize)> = HashSet::new();
        for i in 0..cell.len() {
            for j in i + 1..cell.len() {
                let (a, b) = (find(&mut parent, cell[i]), find(&mut parent, cell[j]));
                if a == b || apart.contains(&(a.min(b), a.max(b))) {
                    continue;
                }
                match automorphism_sending(g, a, b) {
                    Some(map) => {
                        for x in 0..n {
                            let (rx, ry) = (find(&mut parent, x), find(&mut parent, map.apply(x)));
                            if rx != ry {
                                parent[rx.max(ry)] = rx.min(ry);
                            }
                        }
                    }
                    None => {
                        apart.insert((a.min(b), a.max(b)));
                    }
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(x);
    }
    let mut orbits: Vec<Vec<usize>> = groups.into_values().collect();
    orbits.sort();
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixed_graph::{GraphBuilder, Vertex};

    fn path3() -> MixedGraph {
        let mut b = GraphBuilder::with_vertices((0..3).map(Vertex::Node).collect());
        b.add_edge(0, 1).add_edge(1, 2);
        b.build().unwrap()
    }

    #[test]
    fn path_has_two_cells() {
        let p = refine(&path3());
        assert_eq!(p.len(), 2);
        assert_eq!(p.colors[0], p.colors[2]);
        assert_ne!(p.colors[0], p.colors[1]);
        assert_eq!(automorphism_orbits(&path3()), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn arc_direction_matters() {
        // 0 -> 1 -> 2: no two vertices are alike.
        let mut b = GraphBuilder::with_vertices((0..3).map(Vertex::Node).collect());
        b.add_arc(0, 1).add_arc(1, 2);
        let g = b.build().unwrap();
        assert_eq!(refine(&g).len(), 3);

        let mut b = GraphBuilder::with_vertices((0..3).map(Vertex::Node).collect());
        b.add_arc(1, 0).add_arc(1, 2);
        let h = b.build().unwrap();
        assert!(is_isomorphic(&g, &h).is_none());
    }

    #[test]
    fn cycle_isomorphic_to_shuffled_copy() {
        let mut b = GraphBuilder::with_vertices((0..6).map(Vertex::Node).collect());
        for i in 0..6 {
            b.add_arc(i, (i + 1) % 6);
        }
        b.add_edge(0, 3);
        let g = b.build().unwrap();
        let h = g.relabel(&[4, 2, 0, 5, 1, 3]).unwrap();
        let map = is_isomorphic(&g, &h).unwrap();
        assert!(check_isomorphism(&g, &h, &map).is_ok());
    }
}
