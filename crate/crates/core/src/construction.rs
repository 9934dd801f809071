//! Graph families: the biaffine incidence graph `B_q`, the mixed graphs
//! `G_{q,t}`, and Kautz digraphs `K(d,2)` with digons read as edges.
//!
//! Vertex layout for `B_q` and `G_{q,t}`: line `[m,b]` sits at index
//! `e(m)·q + e(b)`, point `(x,y)` at `q² + e(x)·q + e(y)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gf::{shift_sets, FieldElem, FieldSpec, ShiftSets};
use crate::mixed_graph::{GraphBuilder, MixedGraph, Vertex};

pub fn line_index(q: u32, m: FieldElem, b: FieldElem) -> usize {
    m.encoding() as usize * q as usize + b.encoding() as usize
}

pub fn point_index(q: u32, x: FieldElem, y: FieldElem) -> usize {
    let q = q as usize;
    q * q + x.encoding() as usize * q + y.encoding() as usize
}

/// Inverse of [`line_index`] / [`point_index`].
pub fn vertex_at(q: u32, idx: usize) -> Vertex {
    let q = q as usize;
    let (part, rest) = (idx / (q * q), idx % (q * q));
    let a = FieldElem::from_encoding((rest / q) as u32);
    let b = FieldElem::from_encoding((rest % q) as u32);
    if part == 0 {
        Vertex::Line(a, b)
    } else {
        Vertex::Point(a, b)
    }
}

fn plane_vertices(f: &FieldSpec) -> Vec<Vertex> {
    let q = f.q() as usize;
    (0..2 * q * q).map(|i| vertex_at(f.q(), i)).collect()
}

fn biaffine_builder(f: &FieldSpec) -> GraphBuilder {
    let q = f.q();
    let mut b = GraphBuilder::with_vertices(plane_vertices(f));
    for m in f.elements() {
        for c in f.elements() {
            let line = line_index(q, m, c);
            for x in f.elements() {
                let y = f.add(f.mul(m, x), c);
                b.add_edge(line, point_index(q, x, y));
            }
        }
    }
    b
}

/// Incidence graph of the biaffine plane: line `[m,b]` is joined to every
/// point `(x, mx+b)`.
pub fn biaffine(f: &FieldSpec) -> MixedGraph {
    biaffine_builder(f).build().expect("biaffine incidence graph is simple")
}

/// Validated inputs of the `G_{q,t}` construction.
#[derive(Clone, Debug)]
pub struct ConstructionParams {
    pub field: FieldSpec,
    pub t: u32,
    pub shifts: ShiftSets,
}

impl ConstructionParams {
    /// Canonical shift sets for `(q, t)`.
    pub fn new(field: FieldSpec, t: u32) -> Result<Self> {
        let shifts = shift_sets(&field, t)?;
        Ok(ConstructionParams { field, t, shifts })
    }

    /// Any valid shift sets, e.g. from [`ShiftSets::random`].
    pub fn with_shifts(field: FieldSpec, shifts: ShiftSets) -> Result<Self> {
        if field.q() < 3 || !field.is_odd() {
            return Err(Error::EvenQ(field.q()));
        }
        shifts.validate(&field)?;
        Ok(ConstructionParams { t: shifts.t, field, shifts })
    }

    /// Expected `(z, r)`: `((q-1)/2 - 2t, q + 2t)`.
    pub fn expected_degrees(&self) -> (usize, usize) {
        let (q, t) = (self.field.q() as usize, self.t as usize);
        ((q - 1) / 2 - 2 * t, q + 2 * t)
    }

    pub fn build(&self) -> MixedGraph {
        let f = &self.field;
        let q = f.q();
        let sh = &self.shifts;
        let mut b = biaffine_builder(f);
        for u in f.elements() {
            for v in f.elements() {
                let line = line_index(q, u, v);
                let point = point_index(q, u, v);
                for &i in &sh.t1 {
                    b.add_edge(line, line_index(q, u, f.add(v, i)));
                }
                for &j in &sh.t2 {
                    b.add_edge(point, point_index(q, u, f.add(v, j)));
                }
                for &i in &sh.s {
                    b.add_arc(line, line_index(q, u, f.add(v, i)));
                }
                for &j in &sh.neg_s {
                    b.add_arc(point, point_index(q, u, f.add(v, j)));
                }
            }
        }
        b.build().expect("S is disjoint from T1 ∪ T2, so no edge coincides with an arc")
    }
}

/// `G_{q,t}` with canonical shift sets.
pub fn g_qt(f: &FieldSpec, t: u32) -> Result<MixedGraph> {
    Ok(ConstructionParams::new(f.clone(), t)?.build())
}

/// Replaces every digon `u -> v -> u` with one undirected edge.
pub fn collapse_digons(vertices: Vec<Vertex>, arcs: &BTreeSet<(usize, usize)>) -> Result<MixedGraph> {
    let mut b = GraphBuilder::with_vertices(vertices);
    for &(u, v) in arcs {
        if arcs.contains(&(v, u)) {
            b.add_edge(u, v);
        } else {
            b.add_arc(u, v);
        }
    }
    b.build()
}

/// Kautz digraph `K(d,2)` with digons read as edges. Vertices are the words
/// `ab` over symbols `0..=d` with `a != b`, in lexicographic order, labelled
/// `Node(position)`; `ab -> bc` for every `c != b`.
pub fn kautz_mixed(d: u32) -> Result<MixedGraph> {
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    let words: Vec<(u32, u32)> = (0..=d)
        .flat_map(|a| (0..=d).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let pos = |a: u32, b: u32| (a * d + if b > a { b - 1 } else { b }) as usize;
    let mut arcs = BTreeSet::new();
    for (i, &(a, b)) in words.iter().enumerate() {
        debug_assert_eq!(pos(a, b), i);
        for c in (0..=d).filter(|&c| c != b) {
            arcs.insert((i, pos(b, c)));
        }
    }
    let vertices = (0..words.len() as u32).map(Vertex::Node).collect();
    collapse_digons(vertices, &arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_new;
    use crate::mixed_graph::Distance;

    #[test]
    fn layout_roundtrip() {
        let q = 5;
        for i in 0..50 {
            let idx = match vertex_at(q, i) {
                Vertex::Line(m, b) => line_index(q, m, b),
                Vertex::Point(x, y) => point_index(q, x, y),
                Vertex::Node(_) => unreachable!(),
            };
            assert_eq!(idx, i);
        }
    }

    #[test]
    fn b3_basics() {
        let g = biaffine(&field_new(3).unwrap());
        assert_eq!(g.order(), 18);
        assert_eq!(g.edges().len(), 27);
        assert_eq!(g.is_mixed_regular(), Some((0, 3)));
        assert_eq!(g.diameter(), Distance::Finite(4));
        assert_eq!(g.undirected_girth(), Distance::Finite(6));
    }

    #[test]
    fn b2_girth_8() {
        let g = biaffine(&field_new(2).unwrap());
        assert_eq!(g.order(), 8);
        assert_eq!(g.undirected_girth(), Distance::Finite(8));
    }

    #[test]
    fn b5_bipartite_halves() {
        let g = biaffine(&field_new(5).unwrap());
        let lines = g.vertices().iter().filter(|v| matches!(v, Vertex::Line(..))).count();
        assert_eq!((lines, g.order() - lines), (25, 25));
        for &(u, v) in g.edges() {
            assert!(matches!(
                (g.vertex(u), g.vertex(v)),
                (Vertex::Line(..), Vertex::Point(..))
            ));
        }
    }

    #[test]
    fn g30_is_moore() {
        let g = g_qt(&field_new(3).unwrap(), 0).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(g.is_mixed_regular(), Some((1, 3)));
        assert!(g.is_mixed_moore().is_moore);
    }

    #[test]
    fn g51_has_no_arcs() {
        let g = g_qt(&field_new(5).unwrap(), 1).unwrap();
        assert!(g.arcs().is_empty());
        assert_eq!(g.is_mixed_regular(), Some((0, 7)));
        assert_eq!(g.diameter(), Distance::Finite(2));
    }

    #[test]
    fn g70_parameters() {
        let g = g_qt(&field_new(7).unwrap(), 0).unwrap();
        assert_eq!(g.order(), 98);
        assert_eq!(g.is_mixed_regular(), Some((3, 7)));
        assert_eq!(g.diameter(), Distance::Finite(2));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(g_qt(&field_new(4).unwrap(), 0), Err(Error::EvenQ(4))));
        assert!(matches!(g_qt(&field_new(7).unwrap(), 2), Err(Error::TOutOfRange { .. })));
    }

    #[test]
    fn kautz_small() {
        assert!(matches!(kautz_mixed(1), Err(Error::DegreeTooSmall(1))));
        let g = kautz_mixed(2).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.is_mixed_regular(), Some((1, 1)));
        let g = kautz_mixed(3).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.is_mixed_regular(), Some((2, 1)));
        assert!(g.is_mixed_moore().is_moore);
    }

    #[test]
    fn collapse_keeps_one_way_arcs() {
        let arcs: BTreeSet<(usize, usize)> = [(0, 1), (1, 0), (1, 2)].into();
        let g = collapse_digons((0..3).map(Vertex::Node).collect(), &arcs).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.arcs(), &[(1, 2)]);
    }
}
