//! Arithmetic in GF(q), q = p^n.
//!
//! Elements are stored by their canonical integer encoding
//! `e(a) = Σ coeffs[i]·p^i`, where `coeffs` is the coefficient vector of `a`
//! as a polynomial in the residue class ring `Z_p[x] / (modulus)`. Every file
//! format and CLI output in this crate prints elements as that integer.

mod shifts;

pub use shifts::{shift_sets, ShiftSets};

use std::fmt;

use crate::error::{Error, Result};

/// Largest extension degree representable: 2^32 > p^n forces n <= 31.
const MAX_DEGREE: usize = 32;

/// An element of a finite field, stored as its canonical encoding.
///
/// An element carries no reference to its field; validity against a given
/// [`FieldSpec`] is checked with [`FieldSpec::elem`] or [`FieldSpec::contains`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);

    /// Wraps a raw encoding without checking it against any field.
    pub const fn from_encoding(e: u32) -> Self {
        FieldElem(e)
    }

    pub const fn encoding(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field GF(p^n) together with the modulus used to realize it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    n: u32,
    q: u32,
    /// Non-leading coefficients of the monic modulus, constant term first.
    modulus: Vec<u32>,
    /// `pows[i] = p^i` for `i <= n`.
    pows: Vec<u64>,
}

/// Returns `Some((p, n))` when `q = p^n` with `p` prime and `n >= 1`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut n = 0;
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p as u32, n))
}

fn smallest_prime_factor(q: u64) -> u64 {
    if q % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= q {
        if q % d == 0 {
            return d;
        }
        d += 2;
    }
    q
}

/// Builds GF(q). The modulus is the monic irreducible polynomial of degree `n`
/// whose non-leading coefficient vector has the smallest integer encoding.
/// For prime `q` the modulus is the placeholder `x` and arithmetic is plain
/// arithmetic mod `p`.
pub fn field_new(q: u64) -> Result<FieldSpec> {
    let (p, n) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let q = u32::try_from(q).map_err(|_| Error::NotPrimePower(q))?;
    let pows: Vec<u64> = (0..=n).map(|i| (p as u64).pow(i)).collect();
    let modulus = if n == 1 {
        vec![0]
    } else {
        smallest_irreducible(p, n as usize)
    };
    Ok(FieldSpec { p, n, q, modulus, pows })
}

fn digits(mut e: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((e % p as u64) as u32);
        e /= p as u64;
    }
    out
}

/// Remainder of `num` modulo the monic polynomial `den` (coefficients
/// constant-first, leading 1 included) over Z_p.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = r.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let shift = r.len() - dd;
        for (i, &c) in den[..dd].iter().enumerate() {
            r[shift + i] = (r[shift + i] + lead * (p - c as u64)) % p;
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Monic irreducibility by trial division against every monic polynomial of
/// degree 1..=deg/2.
pub(crate) fn is_irreducible(poly_monic: &[u32], p: u32) -> bool {
    let deg = poly_monic.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for enc in 0..count {
            let mut div = digits(enc, p, d);
            div.push(1);
            if poly_rem(poly_monic, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, n: usize) -> Vec<u32> {
    let count = (p as u64).pow(n as u32);
    (0..count)
        .map(|enc| digits(enc, p, n))
        .find(|low| {
            let mut full = low.clone();
            full.push(1);
            is_irreducible(&full, p)
        })
        .expect("an irreducible polynomial of every degree exists over Z_p")
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Non-leading modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_odd(&self) -> bool {
        self.p != 2
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    pub fn contains(&self, a: FieldElem) -> bool {
        a.0 < self.q
    }

    /// Element with encoding `e`, checked against the field order.
    pub fn elem(&self, e: u32) -> Result<FieldElem> {
        if e < self.q {
            Ok(FieldElem(e))
        } else {
            Err(Error::InvalidElement { value: e as u64, q: self.q })
        }
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + Clone {
        (0..self.q).map(FieldElem)
    }

    pub fn coeffs(&self, a: FieldElem) -> Vec<u32> {
        digits(a.0 as u64, self.p, self.n as usize)
    }

    /// `None` unless `coeffs` has exactly `n` entries, each below `p`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Option<FieldElem> {
        if coeffs.len() != self.n as usize || coeffs.iter().any(|&c| c >= self.p) {
            return None;
        }
        Some(FieldElem(self.encode(coeffs.iter().map(|&c| c as u64))))
    }

    fn encode(&self, coeffs: impl Iterator<Item = u64>) -> u32 {
        coeffs
            .zip(&self.pows)
            .map(|(c, &pw)| c * pw)
            .sum::<u64>() as u32
    }

    fn digit(&self, a: FieldElem, i: usize) -> u64 {
        (a.0 as u64 / self.pows[i]) % self.p as u64
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.p as u64;
        if self.n == 1 {
            return FieldElem(((a.0 as u64 + b.0 as u64) % p) as u32);
        }
        let n = self.n as usize;
        FieldElem(self.encode((0..n).map(|i| (self.digit(a, i) + self.digit(b, i)) % p)))
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let p = self.p as u64;
        if self.n == 1 {
            return FieldElem(((p - a.0 as u64) % p) as u32);
        }
        let n = self.n as usize;
        FieldElem(self.encode((0..n).map(|i| (p - self.digit(a, i)) % p)))
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.p as u64;
        if self.n == 1 {
            return FieldElem(((a.0 as u64 * b.0 as u64) % p) as u32);
        }
        let n = self.n as usize;
        let mut x = [0u64; MAX_DEGREE];
        let mut y = [0u64; MAX_DEGREE];
        for i in 0..n {
            x[i] = self.digit(a, i);
            y[i] = self.digit(b, i);
        }
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        // x^n = -(modulus[0] + modulus[1] x + ... + modulus[n-1] x^(n-1))
        for k in (n..2 * n - 1).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &c) in self.modulus.iter().enumerate() {
                prod[k - n + i] = (prod[k - n + i] + lead * (p - c as u64)) % p;
            }
        }
        FieldElem(self.encode(prod[..n].iter().copied()))
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }
}
