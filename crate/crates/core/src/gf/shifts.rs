//! The shift sets that decide which intra-class pairs `[m,b] ~ [m,b+i]` and
//! `(x,y) ~ (x,y+j)` become edges or arcs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{FieldElem, FieldSpec};
use crate::error::{Error, Result};

/// Shift sets for a given `t`.
///
/// * `m`: one representative of every pair `{a, -a}`, `a != 0`.
/// * `t_set`: `2t` elements of `m`.
/// * `t1`, `t2`: split of `T ∪ -T` into two negation-closed halves of size `2t`.
///   `t1` shifts join lines, `t2` shifts join points.
/// * `s = m \ t_set` (line arcs), `neg_s = -s` (point arcs).
///
/// All sets are sorted by encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftSets {
    pub t: u32,
    pub m: Vec<FieldElem>,
    pub t_set: Vec<FieldElem>,
    pub t1: Vec<FieldElem>,
    pub t2: Vec<FieldElem>,
    pub s: Vec<FieldElem>,
    pub neg_s: Vec<FieldElem>,
}

/// Largest admissible `t`: `(q-1)/4` for `q ≡ 1 (mod 4)`, `(q-3)/4` for
/// `q ≡ 3 (mod 4)`. Both equal `floor((q-1)/4)`.
pub fn max_t(q: u32) -> u32 {
    (q - 1) / 4
}

fn check_params(f: &FieldSpec, t: u32) -> Result<()> {
    if !f.is_odd() {
        return Err(Error::EvenQ(f.q()));
    }
    let max = max_t(f.q());
    if t > max {
        return Err(Error::TOutOfRange { q: f.q(), t, max });
    }
    Ok(())
}

/// Canonical shift sets: `M` takes the encoding-smaller element of each
/// `{a, -a}`, `T` is the first `2t` elements of `M`, and `T1` is built from
/// the first `t` elements of `T`.
pub fn shift_sets(f: &FieldSpec, t: u32) -> Result<ShiftSets> {
    check_params(f, t)?;
    let m: Vec<FieldElem> = f
        .elements()
        .skip(1)
        .filter(|&a| a < f.neg(a))
        .collect();
    let t_set = m[..2 * t as usize].to_vec();
    let t1_reps = t_set[..t as usize].to_vec();
    ShiftSets::from_parts(f, t, m, t_set, t1_reps)
}

impl ShiftSets {
    /// Assembles shift sets from an explicit choice of `M`, `T` and the
    /// representatives in `T` whose pairs form `T1`, then checks every
    /// invariant.
    pub fn from_parts(
        f: &FieldSpec,
        t: u32,
        mut m: Vec<FieldElem>,
        mut t_set: Vec<FieldElem>,
        t1_reps: Vec<FieldElem>,
    ) -> Result<ShiftSets> {
        check_params(f, t)?;
        m.sort_unstable();
        t_set.sort_unstable();
        let t1_reps: BTreeSet<FieldElem> = t1_reps.into_iter().collect();
        if !t1_reps.iter().all(|a| t_set.binary_search(a).is_ok()) {
            return Err(Error::InvalidShiftSets("T1 representatives must lie in T".into()));
        }
        let with_neg = |it: &mut dyn Iterator<Item = FieldElem>| -> Vec<FieldElem> {
            let mut v: Vec<FieldElem> = it.flat_map(|a| [a, f.neg(a)]).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let t1 = with_neg(&mut t1_reps.iter().copied());
        let t2 = with_neg(&mut t_set.iter().copied().filter(|a| !t1_reps.contains(a)));
        let s: Vec<FieldElem> = m
            .iter()
            .copied()
            .filter(|a| t_set.binary_search(a).is_err())
            .collect();
        let mut neg_s: Vec<FieldElem> = s.iter().map(|&a| f.neg(a)).collect();
        neg_s.sort_unstable();
        let sets = ShiftSets { t, m, t_set, t1, t2, s, neg_s };
        sets.validate(f)?;
        Ok(sets)
    }

    /// A uniformly random valid choice of `M`, `T` and the `T1`/`T2` split.
    pub fn random<R: Rng + ?Sized>(f: &FieldSpec, t: u32, rng: &mut R) -> Result<ShiftSets> {
        check_params(f, t)?;
        let mut m: Vec<FieldElem> = f
            .elements()
            .skip(1)
            .filter(|&a| a < f.neg(a))
            .map(|a| if rng.gen_bool(0.5) { a } else { f.neg(a) })
            .collect();
        m.shuffle(rng);
        let t_set = m[..2 * t as usize].to_vec();
        let t1_reps = t_set[..t as usize].to_vec();
        ShiftSets::from_parts(f, t, m, t_set, t1_reps)
    }

    /// Checks every structural invariant; the first failure is reported.
    pub fn validate(&self, f: &FieldSpec) -> Result<()> {
        let q = f.q() as usize;
        let t2 = 2 * self.t as usize;
        let bad = |msg: String| Err(Error::InvalidShiftSets(msg));
        if self.m.len() != (q - 1) / 2 {
            return bad(format!("|M| = {} != (q-1)/2", self.m.len()));
        }
        for &u in &self.m {
            if !f.contains(u) || u.is_zero() {
                return bad(format!("M contains {u}"));
            }
            for &v in &self.m {
                if f.add(u, v).is_zero() {
                    return bad(format!("{u} + {v} = 0 inside M"));
                }
            }
        }
        let m: BTreeSet<FieldElem> = self.m.iter().copied().collect();
        let neg_m: BTreeSet<FieldElem> = self.m.iter().map(|&a| f.neg(a)).collect();
        if m.len() != self.m.len() || !m.is_disjoint(&neg_m) {
            return bad("M and -M overlap".into());
        }
        if m.len() + neg_m.len() != q - 1 {
            return bad("M ∪ -M does not cover the nonzero elements".into());
        }
        if self.t_set.len() != t2 || !self.t_set.iter().all(|a| m.contains(a)) {
            return bad(format!("T must be a {t2}-subset of M"));
        }
        let t1: BTreeSet<FieldElem> = self.t1.iter().copied().collect();
        let t2s: BTreeSet<FieldElem> = self.t2.iter().copied().collect();
        if t1.len() != t2 || t2s.len() != t2 || !t1.is_disjoint(&t2s) {
            return bad("T1 and T2 must be disjoint of size 2t".into());
        }
        let closed = |set: &BTreeSet<FieldElem>| set.iter().all(|&a| set.contains(&f.neg(a)));
        if !closed(&t1) || !closed(&t2s) {
            return bad("T1 and T2 must be closed under negation".into());
        }
        let t_pm: BTreeSet<FieldElem> = self.t_set.iter().flat_map(|&a| [a, f.neg(a)]).collect();
        let union: BTreeSet<FieldElem> = t1.union(&t2s).copied().collect();
        if union != t_pm {
            return bad("T1 ∪ T2 != T ∪ -T".into());
        }
        let s: BTreeSet<FieldElem> = self.s.iter().copied().collect();
        let expect_s: BTreeSet<FieldElem> = m.difference(&self.t_set.iter().copied().collect()).copied().collect();
        if s != expect_s || self.s.len() != (q - 1) / 2 - t2 || !s.is_disjoint(&union) {
            return bad("S must equal M \\ T".into());
        }
        let neg_s: BTreeSet<FieldElem> = self.neg_s.iter().copied().collect();
        let expect_neg: BTreeSet<FieldElem> = s.iter().map(|&a| f.neg(a)).collect();
        if neg_s != expect_neg {
            return bad("negS must equal -S".into());
        }
        Ok(())
    }
}
