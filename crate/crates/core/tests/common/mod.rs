#![allow(dead_code)]

use mixed_moore::construction::{biaffine, g_qt, kautz_mixed};
use mixed_moore::gf::field_new;
use mixed_moore::mixed_graph::{GraphBuilder, MixedGraph, Vertex};

pub const INF: u32 = u32::MAX;

/// All-pairs distances by Floyd–Warshall on the adjacency matrix; shares
/// nothing with the BFS code under test.
pub fn floyd_warshall(g: &MixedGraph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for &(u, v) in g.arcs() {
        d[u][v] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn nodes(n: u32) -> GraphBuilder {
    GraphBuilder::with_vertices((0..n).map(Vertex::Node).collect())
}

pub fn cycle(n: u32) -> MixedGraph {
    let mut b = nodes(n);
    for i in 0..n as usize {
        b.add_edge(i, (i + 1) % n as usize);
    }
    b.build().unwrap()
}

pub fn directed_cycle(n: u32) -> MixedGraph {
    let mut b = nodes(n);
    for i in 0..n as usize {
        b.add_arc(i, (i + 1) % n as usize);
    }
    b.build().unwrap()
}

pub fn petersen() -> MixedGraph {
    let mut b = nodes(10);
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    b.build().unwrap()
}

/// Named graphs of order at most 60 used across the oracle tests.
pub fn small_corpus() -> Vec<(String, MixedGraph)> {
    let mut out = vec![
        ("C5".to_string(), cycle(5)),
        ("C8".to_string(), cycle(8)),
        ("dC3".to_string(), directed_cycle(3)),
        ("dC7".to_string(), directed_cycle(7)),
        ("petersen".to_string(), petersen()),
    ];
    let mut b = nodes(4);
    b.add_arc(0, 1).add_arc(1, 2).add_edge(2, 3);
    out.push(("mixed-path".to_string(), b.build().unwrap()));
    for q in [2u64, 3, 4, 5] {
        out.push((format!("B{q}"), biaffine(&field_new(q).unwrap())));
    }
    out.push(("G3,0".into(), g_qt(&field_new(3).unwrap(), 0).unwrap()));
    out.push(("G5,0".into(), g_qt(&field_new(5).unwrap(), 0).unwrap()));
    out.push(("G5,1".into(), g_qt(&field_new(5).unwrap(), 1).unwrap()));
    for d in 2..=7 {
        out.push((format!("Ka({d},2)"), kautz_mixed(d).unwrap()));
    }
    out
}

pub const ODD_PRIME_POWERS_TO_27: [u64; 11] = [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27];

pub fn odd_prime_powers_up_to(limit: u64) -> Vec<u64> {
    (3..=limit)
        .step_by(2)
        .filter(|&q| {
            let p = (2..=q).find(|d| q % d == 0).unwrap();
            let mut r = q;
            while r % p == 0 {
                r /= p;
            }
            r == 1
        })
        .collect()
}
