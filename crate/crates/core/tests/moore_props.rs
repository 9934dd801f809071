mod common;

use mixed_moore::construction::g_qt;
use mixed_moore::gf::field_new;
use mixed_moore::moore::*;

#[test]
fn both_forms_of_the_moore_bound_agree() {
    for z in 0..=100u64 {
        for r in 0..=100u64 {
            if z + r == 0 {
                continue;
            }
            let expanded = 1 + r + z + r * (r + z - 1) + z * (r + z);
            assert_eq!(mixed_moore_bound(z, r), expanded, "z={z} r={r}");
        }
    }
}

#[test]
fn mixed_bound_specializes() {
    for d in 1..=100u64 {
        assert_eq!(mixed_moore_bound(0, d), undirected_moore_bound(d, 2));
        assert_eq!(mixed_moore_bound(d, 0), directed_moore_bound(d, 2));
    }
}

#[test]
fn closed_form_for_t0_family() {
    for q in (3..=201u64).step_by(2) {
        assert_eq!(4 * mixed_moore_bound((q - 1) / 2, q), 9 * q * q - 4 * q + 3);
    }
}

/// Oracle: enumerate every odd c up to the product and test both conditions.
fn bosak_oracle(z: u64, r: u64) -> Option<u64> {
    let product = (4 * z - 3) * (4 * z + 5);
    (1..=product).step_by(2).find(|&c| product % c == 0 && 4 * r == c * c + 3)
}

#[test]
fn bosak_matches_enumeration() {
    for z in 1..=40u64 {
        for r in 1..=60u64 {
            let expected = bosak_oracle(z, r).map_or(Bosak::Infeasible, |c| Bosak::Feasible { c });
            assert_eq!(bosak_feasible(z, r), expected, "z={z} r={r}");
        }
    }
}

#[test]
fn kautz_rows_always_feasible() {
    for z in 1..=500u64 {
        assert_eq!(bosak_feasible(z, 1), Bosak::Feasible { c: 1 });
    }
}

#[test]
fn bound_chain_is_monotone() {
    for z in 1..=30u64 {
        for r in 1..=30u64 {
            let rep = best_upper_bound(z, r);
            assert!(rep.after_parity <= rep.after_bosak && rep.after_bosak <= rep.moore);
            assert!(!parity_excludes(r, rep.after_parity));
        }
    }
}

#[test]
fn bounds_never_below_constructed_orders() {
    for q in [3u64, 5, 7, 9, 11, 13] {
        let f = field_new(q).unwrap();
        for t in 0..=((q - 1) / 4) as u32 {
            let g = g_qt(&f, t).unwrap();
            let (z, r) = g.is_mixed_regular().unwrap();
            let order = g.order() as u64;
            let bound = if z == 0 {
                mixed_moore_bound(0, r as u64)
            } else {
                best_upper_bound(z as u64, r as u64).upper_bound()
            };
            assert!(bound >= order, "q={q} t={t}: bound {bound} < {order}");
        }
    }
}

#[test]
fn proper_rows_satisfy_order_identity() {
    for row in feasibility_table(1000) {
        assert_eq!(row.n, row.d * row.d + row.z + 1);
        assert_eq!(row.d, row.z + row.r);
    }
}
