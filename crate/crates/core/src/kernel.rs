//! The Beatty function `f(x) = ⌊φx⌋` for `φ = (1+√5)/2`, its companion
//! `f̄(x) = x + f(x)`, partial inverses, and exact comparison of fractional
//! parts `[φx]`.
//!
//! Nothing here touches floating point. The difference of two fractional
//! parts is `[φx] − [φy] = ((x−y) − 2(f(x)−f(y)) + (x−y)√5) / 2`, so every
//! order question reduces to the sign of a [`Surd`].

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{domain, Result};
use crate::int::Int;

/// `⌊√n⌋` for `n ≥ 0`.
pub fn isqrt(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(domain(format!("isqrt of negative value {n}")));
    }
    Ok(match n.as_i64() {
        Some(v) => Int::from(isqrt_u64(v as u64)),
        None => Int::from_bigint(isqrt_big(&n.to_bigint())),
    })
}

// Newton iteration from 2^⌈bits/2⌉ ≥ √n. The iterates decrease strictly
// until they reach ⌊√n⌋, after which the next iterate does not decrease.
pub(crate) fn isqrt_u64(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let bits = 64 - n.leading_zeros();
    let mut x = 1u64 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

pub(crate) fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

fn isqrt_big(n: &BigInt) -> BigInt {
    if n < &BigInt::from(2) {
        return n.clone();
    }
    let mut x = BigInt::one() << n.bits().div_ceil(2);
    loop {
        let y: BigInt = (&x + n / &x) >> 1usize;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// The real number `p + q√5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub p: Int,
    pub q: Int,
}

impl Surd {
    pub fn new(p: Int, q: Int) -> Surd {
        Surd { p, q }
    }

    /// Exact sign: `-1`, `0` or `1`. Zero only for `p = q = 0`.
    pub fn sign(&self) -> i32 {
        surd_sign(&self.p, &self.q)
    }
}

/// Sign of `p + q√5`.
pub fn surd_sign(p: &Int, q: &Int) -> i32 {
    let (sp, sq) = (p.signum(), q.signum());
    if sq == 0 {
        return sp;
    }
    if sp == 0 || sp == sq {
        return sq;
    }
    // opposite signs: the term with the larger square wins; p² = 5q² is
    // impossible for q ≠ 0
    let p2 = p * p;
    let q2 = q * q * 5;
    if p2 > q2 {
        sp
    } else {
        sq
    }
}

// Below this bound 5x² fits in a u64.
const U64_SAFE: i64 = 1_920_000_000;
// Below this bound 5x² fits in a u128.
const U128_SAFE: i64 = 1 << 61;

/// `f(x) = ⌊φx⌋`.
///
/// Non-negative arguments use `(x + ⌊√(5x²)⌋) div 2`; negative ones use the
/// reflection `f(−x) = −f(x) − 1`, exact because `φx` is never an integer
/// for `x ≠ 0`.
pub fn beatty_f(x: &Int) -> Int {
    if x.is_negative() {
        return -beatty_f(&-x) - 1;
    }
    if let Some(v) = x.as_i64() {
        if v < U64_SAFE {
            let v = v as u64;
            return Int::from((v + isqrt_u64(5 * v * v)) >> 1);
        }
        if v < U128_SAFE {
            let v = v as u128;
            return Int::from(((v + isqrt_u128(5 * v * v)) >> 1) as u64);
        }
    }
    let root = isqrt(&(x * x * 5)).expect("5x² is non-negative");
    (x + root).half_floor()
}

/// `f̄(x) = x + f(x) = ⌊φ²x⌋`.
pub fn fbar(x: &Int) -> Int {
    x + beatty_f(x)
}

/// The unique `x` with `f(x) = y`, if there is one.
pub fn f_inverse(y: &Int) -> Option<Int> {
    // ⌊y/φ⌋ = ⌊yφ⌋ − y; the preimage, when it exists, is ⌈y/φ⌉
    let base = beatty_f(y) - y;
    (0..3).map(|k| &base + k).find(|x| &beatty_f(x) == y)
}

/// The unique `x` with `f̄(x) = y`, if there is one.
pub fn fbar_inverse(y: &Int) -> Option<Int> {
    // ⌊y/φ²⌋ = 2y − ⌈yφ⌉
    let base = y * 2 - beatty_f(y) - 1;
    (0..3).map(|k| &base + k).find(|x| &fbar(x) == y)
}

/// Compares `[φx]` with `[φy]`. Equal only when `x = y`.
pub fn frac_compare(x: &Int, y: &Int) -> Ordering {
    if x == y {
        return Ordering::Equal;
    }
    let d = x - y;
    let p = &d - (beatty_f(x) - beatty_f(y)) * 2;
    match surd_sign(&p, &d) {
        s if s < 0 => Ordering::Less,
        0 => Ordering::Equal,
        _ => Ordering::Greater,
    }
}

/// The decimal order `x <* y`, evaluated by its defining formula
/// `x ≠ y ∧ f(y − x) = f(y) − f(x)`.
pub fn star_less(x: &Int, y: &Int) -> bool {
    x != y && beatty_f(&(y - x)) == beatty_f(y) - beatty_f(x)
}

/// A point whose fractional part lies strictly between `[φx]` and `[φy]`:
/// `f(y − x) + y`. Requires `[φx] < [φy]`.
pub fn kronecker_witness(x: &Int, y: &Int) -> Result<Int> {
    if frac_compare(x, y) != Ordering::Less {
        return Err(domain(format!("kronecker witness needs [φ·{x}] < [φ·{y}]")));
    }
    Ok(beatty_f(&(y - x)) + y)
}

/// Iterates the witness `k` times towards `[φx]`: `w₁ = witness(x, y)`,
/// `wᵢ₊₁ = witness(x, wᵢ)`.
pub fn refine(x: &Int, y: &Int, k: usize) -> Result<Vec<Int>> {
    if k == 0 {
        return Err(domain("refine needs at least one step"));
    }
    let mut out = Vec::with_capacity(k);
    let mut upper = y.clone();
    for _ in 0..k {
        let w = kronecker_witness(x, &upper)?;
        upper = w.clone();
        out.push(w);
    }
    Ok(out)
}
