//! Order bounds for diameter-2 mixed graphs: Moore bounds, Bosák's
//! divisibility condition, the parity argument and the feasibility table.

use std::fmt;

use crate::error::{Error, Result};

/// `(r+z)^2 + z + 1`, the largest possible order of a diameter-2 mixed graph
/// with undirected degree `r` and directed degree `z`.
pub fn mixed_moore_bound(z: u64, r: u64) -> u64 {
    (r + z) * (r + z) + z + 1
}

/// `1 + d + d(d-1) + ... + d(d-1)^(k-1)`.
pub fn undirected_moore_bound(d: u64, k: u32) -> u64 {
    1 + (0..k).map(|i| d * (d - 1).pow(i)).sum::<u64>()
}

/// `1 + d + d^2 + ... + d^k`.
pub fn directed_moore_bound(d: u64, k: u32) -> u64 {
    (0..=k).map(|i| d.pow(i)).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bosak {
    /// Witness: an odd `c` dividing `(4z-3)(4z+5)` with `r = (c^2+3)/4`.
    Feasible { c: u64 },
    Infeasible,
}

impl Bosak {
    pub fn is_feasible(self) -> bool {
        matches!(self, Bosak::Feasible { .. })
    }
}

/// Bosák's condition for a proper `(z, r; 2)` mixed Moore graph (`z, r >= 1`).
/// Scans the positive divisors of `(4z-3)(4z+5)` (all odd) for one with
/// `c^2 = 4r - 3`.
pub fn bosak_feasible(z: u64, r: u64) -> Bosak {
    debug_assert!(z >= 1 && r >= 1);
    let product = (4 * z - 3) * (4 * z + 5);
    let target = 4 * r - 3;
    let mut c = 1;
    while c * c <= product {
        if product % c == 0 {
            for d in [c, product / c] {
                if d * d == target {
                    return Bosak::Feasible { c: d };
                }
            }
        }
        c += 2;
    }
    Bosak::Infeasible
}

/// A graph with odd undirected degree `r` and odd order `n` cannot exist:
/// forgetting arc directions leaves a regular graph of odd degree `r + 2z`
/// on an odd number of vertices.
pub fn parity_excludes(r: u64, n: u64) -> bool {
    r % 2 == 1 && n % 2 == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundStep {
    /// The Moore order is ruled out by Bosák's condition.
    Bosak { from: u64, to: u64 },
    /// An odd order is ruled out by the parity argument.
    Parity { from: u64, to: u64 },
}

impl fmt::Display for BoundStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundStep::Bosak { from, to } => {
                write!(f, "{from} violates Bosák's condition, bound drops to {to}")
            }
            BoundStep::Parity { from, to } => {
                write!(f, "{from} is odd with odd r, bound drops to {to}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub z: u64,
    pub r: u64,
    pub moore: u64,
    pub bosak: Bosak,
    pub after_bosak: u64,
    pub after_parity: u64,
    pub steps: Vec<BoundStep>,
}

impl BoundReport {
    pub fn upper_bound(&self) -> u64 {
        self.after_parity
    }

    /// Compact chain such as `52 → 51 (Bosák) → 50 (parity)`.
    pub fn chain(&self) -> String {
        let mut s = self.moore.to_string();
        for step in &self.steps {
            match step {
                BoundStep::Bosak { to, .. } => s.push_str(&format!(" → {to} (Bosák)")),
                BoundStep::Parity { to, .. } => s.push_str(&format!(" → {to} (parity)")),
            }
        }
        s
    }
}

/// Moore bound, minus one if Bosák's condition fails there, then lowered
/// past any order the parity argument excludes.
pub fn best_upper_bound(z: u64, r: u64) -> BoundReport {
    let moore = mixed_moore_bound(z, r);
    let mut steps = Vec::new();
    let bosak = if z >= 1 && r >= 1 { bosak_feasible(z, r) } else { Bosak::Feasible { c: 0 } };
    let mut bound = moore;
    if !bosak.is_feasible() {
        bound -= 1;
        steps.push(BoundStep::Bosak { from: moore, to: bound });
    }
    let after_bosak = bound;
    while bound > 0 && parity_excludes(r, bound) {
        steps.push(BoundStep::Parity { from: bound, to: bound - 1 });
        bound -= 1;
    }
    BoundReport { z, r, moore, bosak, after_bosak, after_parity: bound, steps }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowStatus {
    /// A graph is known; `unique` mirrors the uniqueness column.
    Exists { witness: String, unique: bool },
    Unknown,
    Infeasible,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowStatus::Exists { witness, .. } => f.write_str(witness),
            RowStatus::Unknown => f.write_str("unknown"),
            RowStatus::Infeasible => f.write_str("infeasible"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityRow {
    pub n: u64,
    pub d: u64,
    pub z: u64,
    pub r: u64,
    pub status: RowStatus,
}

impl FeasibilityRow {
    pub fn uniqueness(&self) -> &'static str {
        match &self.status {
            RowStatus::Exists { unique: true, .. } => "YES",
            RowStatus::Exists { unique: false, .. } => "NO",
            _ => "unknown",
        }
    }
}

fn exists(witness: impl Into<String>, unique: bool) -> RowStatus {
    RowStatus::Exists { witness: witness.into(), unique }
}

/// Classification of a proper `(z, r)` pair at its Moore order.
pub fn classify(z: u64, r: u64) -> FeasibilityRow {
    let d = z + r;
    let status = match (z, r) {
        _ if !bosak_feasible(z, r).is_feasible() => RowStatus::Infeasible,
        (_, 1) => exists(format!("Ka({d},2)"), true),
        (1, 3) => exists("Bosák graph", true),
        (7, 3) => exists("Jorgensen graph", false),
        _ => RowStatus::Unknown,
    };
    FeasibilityRow { n: mixed_moore_bound(z, r), d, z, r, status }
}

/// Every feasible parameter set with Moore order at most `n_max`: proper
/// pairs passing Bosák's condition plus the four non-proper known cases,
/// sorted by order.
pub fn feasibility_table(n_max: u64) -> Vec<FeasibilityRow> {
    let mut rows: Vec<FeasibilityRow> = [
        (1, 0, "Z_3"),
        (0, 2, "C_5"),
        (0, 3, "Petersen graph"),
        (0, 7, "Hoffman-Singleton graph"),
    ]
    .into_iter()
    .map(|(z, r, name)| FeasibilityRow {
        n: mixed_moore_bound(z, r),
        d: z + r,
        z,
        r,
        status: exists(name, true),
    })
    .collect();
    let mut z = 1;
    while mixed_moore_bound(z, 1) <= n_max {
        let mut r = 1;
        while mixed_moore_bound(z, r) <= n_max {
            if bosak_feasible(z, r).is_feasible() {
                rows.push(classify(z, r));
            }
            r += 1;
        }
        z += 1;
    }
    rows.retain(|row| row.n <= n_max);
    rows.sort_by_key(|row| (row.n, row.z));
    rows
}

/// `n,d,z,r,status` with a header line.
pub fn table_csv(rows: &[FeasibilityRow]) -> String {
    let mut s = String::from("n,d,z,r,status\n");
    for row in rows {
        s.push_str(&format!("{},{},{},{},{}\n", row.n, row.d, row.z, row.r, row.status));
    }
    s
}

pub fn table_text(rows: &[FeasibilityRow]) -> String {
    let mut s = format!(
        "{:>5} {:>4} {:>4} {:>4}  {:<24} {}\n",
        "n", "d", "z", "r", "existence", "uniqueness"
    );
    for row in rows {
        s.push_str(&format!(
            "{:>5} {:>4} {:>4} {:>4}  {:<24} {}\n",
            row.n,
            row.d,
            row.z,
            row.r,
            row.status.to_string(),
            row.uniqueness()
        ));
    }
    s
}

/// Moore bound minus `2q^2` for the `t = 0` family with `(z, r) = ((q-1)/2, q)`,
/// i.e. `(q^2 - 4q + 3) / 4`.
pub fn defect_t0(q: u64) -> Result<u64> {
    if q % 2 == 0 {
        return Err(Error::EvenQ(q as u32));
    }
    if q < 3 {
        return Err(Error::InvalidParameter(format!("q = {q} must be at least 3")));
    }
    let bound = mixed_moore_bound((q - 1) / 2, q);
    debug_assert_eq!(4 * bound, 9 * q * q - 4 * q + 3);
    Ok(bound - 2 * q * q)
}
