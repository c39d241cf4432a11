//! Reference computations that share no code path with the fast routines.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use rand::Rng;

use crate::int::Int;
use crate::kernel::frac_compare;

fn fib_pairs() -> &'static Vec<Int> {
    static FIBS: OnceLock<Vec<Int>> = OnceLock::new();
    FIBS.get_or_init(|| {
        let mut v = vec![Int::ONE, Int::ONE];
        while v.len() < 4096 {
            let n = v.len();
            v.push(&v[n - 2] + &v[n - 1]);
        }
        v
    })
}

/// `⌊φx⌋` from the convergent bounds `F_{n+1}/F_n < φ < F_{n+2}/F_{n+1}`
/// (`n` even), widening `n` until both bounds give the same floor.
pub fn floor_phi_convergent(x: &Int) -> Int {
    let fibs = fib_pairs();
    let mut n = (x.bits() as usize * 3 / 4) & !1;
    loop {
        assert!(n + 2 < fibs.len(), "argument too large for the convergent oracle");
        let (a, b, c) = (&fibs[n], &fibs[n + 1], &fibs[n + 2]);
        let lo = (x * b).div_floor(a);
        let hi = (x * c).div_floor(b);
        if lo == hi {
            return lo;
        }
        n += 2;
    }
}

/// `⌊φx⌋` straight from `isqrt(5x²)` for either sign of `x`.
pub fn floor_phi_sqrt(x: &Int) -> Int {
    let square: BigInt = x.to_bigint() * x.to_bigint() * 5;
    let root = Int::from_bigint(square.sqrt());
    if x.is_negative() {
        (x - root - 1).div_floor(&Int::from(2))
    } else {
        (x + root).div_floor(&Int::from(2))
    }
}

/// A signed integer of uniformly chosen bit length in `1..=max_bits`.
pub fn random_int(rng: &mut impl Rng, max_bits: u64) -> Int {
    let bits = rng.gen_range(1..=max_bits);
    let words = bits.div_ceil(32) as usize;
    let mut digits: Vec<u32> = (0..words).map(|_| rng.gen()).collect();
    let top = (bits - 1) % 32;
    let last = digits.last_mut().expect("at least one word");
    *last &= u32::MAX >> (31 - top);
    *last |= 1 << top;
    let sign = if rng.gen() { Sign::Minus } else { Sign::Plus };
    Int::from_bigint(BigInt::from_slice(sign, &digits))
}

/// Extremum of `[φt]` over `lo < t < hi` restricted to `[φ above] < [φt]`
/// and `[φt] < [φ below]`, by direct scan.
pub fn filtered_extremum(lo: i64, hi: i64, want: Ordering, above: Option<i64>, below: Option<i64>) -> Option<i64> {
    let mut best: Option<i64> = None;
    for t in lo + 1..hi {
        let ti = Int::from(t);
        if above.is_some_and(|c| frac_compare(&ti, &Int::from(c)) != Ordering::Greater) {
            continue;
        }
        if below.is_some_and(|d| frac_compare(&ti, &Int::from(d)) != Ordering::Less) {
            continue;
        }
        if best.is_none_or(|b| frac_compare(&ti, &Int::from(b)) == want) {
            best = Some(t);
        }
    }
    best
}
