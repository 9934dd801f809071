//! Explicit automorphisms of `G_q = G_{q,0}` and their verification.
//!
//! `theta` swaps lines and points: `[m,b] ↦ (-m,-b)`, `(x,y) ↦ [-x,-y]`.
//! `psi(a, s)` fixes both parts: `[m,b] ↦ [-m, b+am+s]`, `(x,y) ↦ (-x+a, y+s)`.
//! The translation parameter is called `s` here; it is unrelated to the `t`
//! that sizes the shift sets of the construction.

mod refine;

pub use refine::{automorphism_orbits, automorphism_sending, is_isomorphic, refine, refine_from, Partition};

use std::fmt;

use rayon::prelude::*;

use crate::construction::{g_qt, line_index, point_index, vertex_at};
use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::mixed_graph::{MixedGraph, Vertex};

/// How a [`VertexMap`] was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapTag {
    Identity,
    Theta,
    Psi { a: FieldElem, s: FieldElem },
    /// `outer ∘ inner`.
    Compose(Box<MapTag>, Box<MapTag>),
    Explicit,
}

impl fmt::Display for MapTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapTag::Identity => f.write_str("id"),
            MapTag::Theta => f.write_str("theta"),
            MapTag::Psi { a, s } => write!(f, "psi({a},{s})"),
            MapTag::Compose(outer, inner) => write!(f, "{outer}*{inner}"),
            MapTag::Explicit => f.write_str("explicit"),
        }
    }
}

/// A map between vertex index sets: vertex `i` goes to `images[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    pub images: Vec<usize>,
    pub tag: MapTag,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap { images: (0..n).collect(), tag: MapTag::Identity }
    }

    pub fn explicit(images: Vec<usize>) -> Self {
        VertexMap { images, tag: MapTag::Explicit }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &VertexMap) -> VertexMap {
        VertexMap {
            images: inner.images.iter().map(|&i| self.images[i]).collect(),
            tag: MapTag::Compose(Box::new(self.tag.clone()), Box::new(inner.tag.clone())),
        }
    }

    /// Inverse of a bijection; `None` if the map is not one.
    pub fn inverse(&self) -> Option<VertexMap> {
        let n = self.images.len();
        let mut inv = vec![usize::MAX; n];
        for (i, &j) in self.images.iter().enumerate() {
            if j >= n || inv[j] != usize::MAX {
                return None;
            }
            inv[j] = i;
        }
        Some(VertexMap::explicit(inv))
    }
}

pub fn theta_vertex(f: &FieldSpec, v: Vertex) -> Vertex {
    match v {
        Vertex::Line(m, b) => Vertex::Point(f.neg(m), f.neg(b)),
        Vertex::Point(x, y) => Vertex::Line(f.neg(x), f.neg(y)),
        other => other,
    }
}

pub fn psi_vertex(f: &FieldSpec, a: FieldElem, s: FieldElem, v: Vertex) -> Vertex {
    match v {
        Vertex::Line(m, b) => Vertex::Line(f.neg(m), f.add(f.add(b, f.mul(a, m)), s)),
        Vertex::Point(x, y) => Vertex::Point(f.add(f.neg(x), a), f.add(y, s)),
        other => other,
    }
}

fn plane_map(f: &FieldSpec, tag: MapTag, op: impl Fn(Vertex) -> Vertex) -> VertexMap {
    let q = f.q();
    let n = 2 * (q as usize) * (q as usize);
    let images = (0..n)
        .map(|i| match op(vertex_at(q, i)) {
            Vertex::Line(m, b) => line_index(q, m, b),
            Vertex::Point(x, y) => point_index(q, x, y),
            Vertex::Node(_) => unreachable!("plane maps never produce Node"),
        })
        .collect();
    VertexMap { images, tag }
}

pub fn theta(f: &FieldSpec) -> VertexMap {
    plane_map(f, MapTag::Theta, |v| theta_vertex(f, v))
}

pub fn psi(f: &FieldSpec, a: FieldElem, s: FieldElem) -> VertexMap {
    plane_map(f, MapTag::Psi { a, s }, |v| psi_vertex(f, a, s, v))
}

/// First reason a map fails to be an isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OrderMismatch { domain: usize, codomain: usize },
    NotInjective { u: usize, v: usize, image: usize },
    EdgeCountMismatch,
    ArcCountMismatch,
    EdgeNotPreserved { u: usize, v: usize },
    ArcNotPreserved { tail: usize, head: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OrderMismatch { domain, codomain } => {
                write!(f, "map has {domain} entries, target has {codomain} vertices")
            }
            Violation::NotInjective { u, v, image } => write!(f, "{u} and {v} both map to {image}"),
            Violation::EdgeCountMismatch => f.write_str("edge counts differ"),
            Violation::ArcCountMismatch => f.write_str("arc counts differ"),
            Violation::EdgeNotPreserved { u, v } => write!(f, "edge {{{u},{v}}} not preserved"),
            Violation::ArcNotPreserved { tail, head } => write!(f, "arc ({tail},{head}) not preserved"),
        }
    }
}

/// Checks that `f` is an isomorphism from `g` onto `h`: a bijection sending
/// edges to edges and arcs to arcs with orientation. With equal edge and arc
/// counts, the forward direction implies the converse.
pub fn check_isomorphism(g: &MixedGraph, h: &MixedGraph, f: &VertexMap) -> std::result::Result<(), Violation> {
    let n = h.order();
    if f.images.len() != g.order() || g.order() != n {
        return Err(Violation::OrderMismatch { domain: f.images.len(), codomain: n });
    }
    let mut preimage = vec![usize::MAX; n];
    for (u, &img) in f.images.iter().enumerate() {
        if img >= n {
            return Err(Violation::OrderMismatch { domain: g.order(), codomain: n });
        }
        if preimage[img] != usize::MAX {
            return Err(Violation::NotInjective { u: preimage[img], v: u, image: img });
        }
        preimage[img] = u;
    }
    if g.edges().len() != h.edges().len() {
        return Err(Violation::EdgeCountMismatch);
    }
    if g.arcs().len() != h.arcs().len() {
        return Err(Violation::ArcCountMismatch);
    }
    for &(u, v) in g.edges() {
        if !h.has_edge(f.apply(u), f.apply(v)) {
            return Err(Violation::EdgeNotPreserved { u, v });
        }
    }
    for &(u, v) in g.arcs() {
        if !h.has_arc(f.apply(u), f.apply(v)) {
            return Err(Violation::ArcNotPreserved { tail: u, head: v });
        }
    }
    Ok(())
}

pub fn is_automorphism(g: &MixedGraph, f: &VertexMap) -> std::result::Result<(), Violation> {
    check_isomorphism(g, g, f)
}

#[derive(Clone, Debug)]
pub struct CertificateEntry {
    pub target: usize,
    pub map: VertexMap,
}

/// One verified automorphism of `G_q` per vertex, each sending `[0,0]` to
/// that vertex.
#[derive(Clone, Debug)]
pub struct TransitivityCertificate {
    pub q: u32,
    pub base: usize,
    pub entries: Vec<CertificateEntry>,
}

impl TransitivityCertificate {
    pub fn certified(&self) -> usize {
        self.entries.len()
    }

    pub fn order(&self) -> usize {
        2 * (self.q as usize) * (self.q as usize)
    }

    /// `<target-index> <formula-tag>` per line, then a summary line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            s.push_str(&format!("{} {}\n", e.target, e.map.tag));
        }
        s.push_str(&format!("{}/{} targets certified\n", self.certified(), self.order()));
        s
    }
}

/// Transporter from `[0,0]` to `target`:
/// points `(x,y)` use `psi(x, y) ∘ theta`; lines `[m,b]` use
/// `theta ∘ psi(-m,-b) ∘ psi(0,0) ∘ theta`, i.e. the inverse of the
/// line-to-point map for `[m,b]` after the one for `[0,0]`.
fn transporter(f: &FieldSpec, th: &VertexMap, target: Vertex) -> VertexMap {
    let zero = f.zero();
    match target {
        Vertex::Line(m, b) if m.is_zero() && b.is_zero() => VertexMap::identity(th.images.len()),
        Vertex::Point(x, y) => psi(f, x, y).compose(th),
        Vertex::Line(m, b) => {
            let to_origin = psi(f, zero, zero).compose(th);
            let back = th.compose(&psi(f, f.neg(m), f.neg(b)));
            back.compose(&to_origin)
        }
        Vertex::Node(_) => unreachable!(),
    }
}

pub fn transitivity_certificate(f: &FieldSpec) -> Result<TransitivityCertificate> {
    let g = g_qt(f, 0)?;
    let q = f.q();
    let base = line_index(q, f.zero(), f.zero());
    let th = theta(f);
    let entries = (0..g.order())
        .into_par_iter()
        .map(|target| {
            let map = transporter(f, &th, g.vertex(target));
            if map.apply(base) != target {
                return Err(Error::CertificateFailure {
                    target,
                    reason: format!("{} sends base to {}", map.tag, map.apply(base)),
                });
            }
            is_automorphism(&g, &map)
                .map_err(|v| Error::CertificateFailure { target, reason: v.to_string() })?;
            Ok(CertificateEntry { target, map })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TransitivityCertificate { q, base, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_new;

    #[test]
    fn theta_examples() {
        let f = field_new(7).unwrap();
        let e = |v| f.elem(v).unwrap();
        assert_eq!(theta_vertex(&f, Vertex::Line(e(1), e(2))), Vertex::Point(e(6), e(5)));
        let f3 = field_new(3).unwrap();
        assert_eq!(
            theta_vertex(&f3, Vertex::Point(f3.zero(), f3.zero())),
            Vertex::Line(f3.zero(), f3.zero())
        );
    }

    #[test]
    fn psi_examples() {
        let f = field_new(5).unwrap();
        let e = |v| f.elem(v).unwrap();
        assert_eq!(psi_vertex(&f, e(0), e(0), Vertex::Line(e(2), e(3))), Vertex::Line(e(3), e(3)));
        assert_eq!(psi_vertex(&f, e(1), e(2), Vertex::Point(e(4), e(0))), Vertex::Point(e(2), e(2)));
    }

    #[test]
    fn theta_is_involution() {
        for q in [3u64, 5, 7, 9, 11, 13] {
            let f = field_new(q).unwrap();
            let th = theta(&f);
            assert_eq!(th.compose(&th).images, VertexMap::identity(th.images.len()).images);
        }
    }

    #[test]
    fn certificate_q3() {
        let cert = transitivity_certificate(&field_new(3).unwrap()).unwrap();
        assert_eq!(cert.certified(), 18);
        assert_eq!(cert.entries[0].map.tag, MapTag::Identity);
        assert!(cert.to_text().ends_with("18/18 targets certified\n"));
    }

    #[test]
    fn violations_reported() {
        let f = field_new(3).unwrap();
        let g = g_qt(&f, 0).unwrap();
        let mut images: Vec<usize> = (0..18).collect();
        images[1] = 0;
        assert!(matches!(
            is_automorphism(&g, &VertexMap::explicit(images)),
            Err(Violation::NotInjective { .. })
        ));
        // Swapping two lines of one parallel class moves their point neighbours.
        let mut images: Vec<usize> = (0..18).collect();
        images.swap(0, 1);
        assert!(is_automorphism(&g, &VertexMap::explicit(images)).is_err());
        assert!(matches!(
            is_automorphism(&g, &VertexMap::identity(5)),
            Err(Violation::OrderMismatch { .. })
        ));
    }
}
