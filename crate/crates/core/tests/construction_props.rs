mod common;

use mixed_moore::construction::{biaffine, g_qt, kautz_mixed, ConstructionParams};
use mixed_moore::gf::{field_new, ShiftSets};
use mixed_moore::mixed_graph::{Distance, Vertex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn g_qt_parameters_small_q() {
    for q in [3u64, 5, 7, 9, 11, 13] {
        let f = field_new(q).unwrap();
        for t in 0..=((q - 1) / 4) as u32 {
            let g = g_qt(&f, t).unwrap();
            let (qq, tt) = (q as usize, t as usize);
            assert_eq!(g.order(), 2 * qq * qq);
            assert_eq!(g.is_mixed_regular(), Some(((qq - 1) / 2 - 2 * tt, qq + 2 * tt)), "q={q} t={t}");
            assert_eq!(g.diameter(), Distance::Finite(2), "q={q} t={t}");
            g.check_consistency().unwrap();
        }
    }
}

#[test]
fn random_shift_choices_keep_diameter_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for q in [3u64, 5, 7, 9, 11, 13] {
        let f = field_new(q).unwrap();
        for t in 0..=((q - 1) / 4) as u32 {
            for draw in 0..20 {
                let shifts = ShiftSets::random(&f, t, &mut rng).unwrap();
                let params = ConstructionParams::with_shifts(f.clone(), shifts).unwrap();
                let g = params.build();
                assert_eq!(g.is_mixed_regular(), Some(params.expected_degrees()), "q={q} t={t} draw={draw}");
                assert_eq!(g.diameter(), Distance::Finite(2), "q={q} t={t} draw={draw}");
            }
        }
    }
}

#[test]
fn two_points_share_at_most_one_line() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let g = biaffine(&field_new(q).unwrap());
        let points: Vec<usize> = (0..g.order()).filter(|&i| matches!(g.vertex(i), Vertex::Point(..))).collect();
        for (k, &u) in points.iter().enumerate() {
            for &v in &points[k + 1..] {
                let common = g
                    .edge_neighbors(u)
                    .iter()
                    .filter(|w| g.edge_neighbors(v).binary_search(w).is_ok())
                    .count();
                assert!(common <= 1, "q={q}");
            }
        }
    }
}

/// Distance 4 occurs exactly between distinct lines of one slope class or
/// distinct points of one vertical class.
#[test]
fn distance_four_pairs_are_parallel_classes() {
    for q in [3u64, 5, 7] {
        let g = biaffine(&field_new(q).unwrap());
        for u in 0..g.order() {
            let d = g.bfs_from(u);
            for v in 0..g.order() {
                let same_class = u != v
                    && match (g.vertex(u), g.vertex(v)) {
                        (Vertex::Line(m1, _), Vertex::Line(m2, _)) => m1 == m2,
                        (Vertex::Point(x1, _), Vertex::Point(x2, _)) => x1 == x2,
                        _ => false,
                    };
                assert_eq!(d[v] == Distance::Finite(4), same_class, "q={q} {u} {v}");
            }
        }
    }
}

#[test]
fn b3_parallel_lines_at_distance_four() {
    let f = field_new(3).unwrap();
    let g = biaffine(&f);
    let e = |v| f.elem(v).unwrap();
    let d = g.distance(&Vertex::Line(e(1), e(0)), &Vertex::Line(e(1), e(2))).unwrap();
    assert_eq!(d, Distance::Finite(4));
}

#[test]
fn kautz_family_is_moore() {
    for d in 2..=13u32 {
        let g = kautz_mixed(d).unwrap();
        let n = (d * d + d) as usize;
        assert_eq!(g.order(), n);
        assert_eq!(g.is_mixed_regular(), Some((d as usize - 1, 1)));
        assert!(g.is_mixed_moore().is_moore, "d={d}");
    }
}

#[test]
fn line_shift_edges_deduplicated() {
    // G_{5,1}: each line gains |T1| = 2 line neighbours, i.e. q^2 edges among
    // lines, and likewise among points, on top of q^3 incidences.
    let g = g_qt(&field_new(5).unwrap(), 1).unwrap();
    assert_eq!(g.edges().len(), 125 + 25 + 25);
}
