//! Fibonacci numbers indexed as `F_0 = F_1 = 1`, `F_{n+2} = F_n + F_{n+1}`,
//! and the functions built on them.
//!
//! Even-index Fibonacci numbers (1, 2, 5, 13, 34, …) are exactly the points
//! where `[φw]` reaches a new minimum over `0 < w ≤ x`; odd-index ones
//! (1, 3, 8, 21, …) are where it reaches a new maximum. Hence:
//!
//! - [`fibfloor`] `F(x)`: largest even-index Fibonacci `≤ x`, the argmin;
//! - [`g_func`] `G(x)`: largest odd-index Fibonacci `≤ x`, the argmax.

use std::sync::{OnceLock, RwLock};

use crate::error::{domain, Result};
use crate::int::Int;
use crate::kernel::{beatty_f, f_inverse, fbar};

// Entries beyond this index are computed on demand without being cached.
const CACHE_LIMIT: usize = 1 << 14;

/// Append-only table of Fibonacci numbers, shared between threads.
///
/// Published entries never change; growth happens under the write lock, so
/// readers always see a consistent prefix.
#[derive(Debug)]
pub struct FibTable {
    entries: RwLock<Vec<Int>>,
}

impl Default for FibTable {
    fn default() -> Self {
        FibTable::new()
    }
}

impl FibTable {
    pub fn new() -> FibTable {
        FibTable {
            entries: RwLock::new(vec![Int::ONE, Int::ONE]),
        }
    }

    /// The process-wide table used by the free functions of this module.
    pub fn global() -> &'static FibTable {
        static TABLE: OnceLock<FibTable> = OnceLock::new();
        TABLE.get_or_init(FibTable::new)
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn extend_while(&self, mut keep_going: impl FnMut(usize, &Int) -> bool) {
        let mut entries = self.entries.write().unwrap();
        while keep_going(entries.len(), entries.last().unwrap()) {
            let n = entries.len();
            let next = &entries[n - 2] + &entries[n - 1];
            entries.push(next);
        }
    }

    /// `F_n`.
    pub fn value(&self, n: usize) -> Int {
        {
            let entries = self.entries.read().unwrap();
            if let Some(v) = entries.get(n) {
                return v.clone();
            }
        }
        if n < CACHE_LIMIT {
            self.extend_while(|len, _| len <= n);
            return self.entries.read().unwrap()[n].clone();
        }
        self.extend_while(|len, _| len < CACHE_LIMIT);
        let entries = self.entries.read().unwrap();
        let (mut a, mut b) = (entries[CACHE_LIMIT - 2].clone(), entries[CACHE_LIMIT - 1].clone());
        drop(entries);
        for _ in CACHE_LIMIT..=n {
            let c = &a + &b;
            a = b;
            b = c;
        }
        b
    }

    /// Largest index `m ≥ 1` with `F_m ≤ x`. Requires `x ≥ 1`.
    pub fn last_index_at_most(&self, x: &Int) -> usize {
        debug_assert!(x >= &Int::ONE);
        {
            let entries = self.entries.read().unwrap();
            if entries.last().unwrap() > x {
                return entries.partition_point(|v| v <= x) - 1;
            }
        }
        self.extend_while(|_, last| last <= x);
        let entries = self.entries.read().unwrap();
        entries.partition_point(|v| v <= x) - 1
    }
}

fn require_positive(x: &Int, what: &str) -> Result<()> {
    if x < &Int::ONE {
        return Err(domain(format!("{what} is defined for arguments ≥ 1, got {x}")));
    }
    Ok(())
}

/// The `n`-th Fibonacci number, `F_0 = F_1 = 1`.
pub fn fib(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(domain(format!("negative Fibonacci index {n}")));
    }
    let idx = n
        .as_i64()
        .and_then(|v| usize::try_from(v).ok())
        .ok_or_else(|| domain(format!("Fibonacci index {n} is too large")))?;
    Ok(FibTable::global().value(idx))
}

/// Index of the largest even-index Fibonacci number `≤ x`.
pub fn fibfloor_index(x: &Int) -> Result<usize> {
    require_positive(x, "the Fibonacci floor")?;
    let m = FibTable::global().last_index_at_most(x);
    Ok(if m.is_multiple_of(2) { m } else { m - 1 })
}

/// Index of the largest odd-index Fibonacci number `≤ x`.
pub fn g_index(x: &Int) -> Result<usize> {
    require_positive(x, "G")?;
    let m = FibTable::global().last_index_at_most(x);
    Ok(if m % 2 == 1 { m } else { m - 1 })
}

/// The Fibonacci floor `F(x)`: largest even-index Fibonacci number `≤ x`.
pub fn fibfloor(x: &Int) -> Result<Int> {
    Ok(FibTable::global().value(fibfloor_index(x)?))
}

/// `G(x)`: largest odd-index Fibonacci number `≤ x`.
pub fn g_func(x: &Int) -> Result<Int> {
    Ok(FibTable::global().value(g_index(x)?))
}

/// Smallest even-index Fibonacci number `> x`, computed as `f̄(F(x))`.
pub fn next_even_fib(x: &Int) -> Result<Int> {
    let next = fbar(&fibfloor(x)?);
    debug_assert_eq!(next, FibTable::global().value(fibfloor_index(x)? + 2));
    Ok(next)
}

/// Smallest odd-index Fibonacci number `> x`: `f(F(x))` when `G(x) < F(x)`,
/// otherwise `f(f̄(F(x)))`.
pub fn next_odd_fib(x: &Int) -> Result<Int> {
    let ff = fibfloor(x)?;
    let next = if g_func(x)? < ff {
        beatty_f(&ff)
    } else {
        beatty_f(&fbar(&ff))
    };
    debug_assert_eq!(next, FibTable::global().value(g_index(x)? + 2));
    Ok(next)
}

/// Greedy Zeckendorf decomposition: strictly decreasing, pairwise
/// non-consecutive indices `≥ 1` whose Fibonacci values sum to `x`.
pub fn zeckendorf(x: &Int) -> Result<Vec<usize>> {
    require_positive(x, "the Zeckendorf decomposition")?;
    let table = FibTable::global();
    let mut rest = x.clone();
    let mut out = Vec::new();
    while rest.is_positive() {
        let m = table.last_index_at_most(&rest);
        rest -= &table.value(m);
        out.push(m);
    }
    Ok(out)
}

/// Sum of `F_i` over the given indices.
pub fn zeckendorf_value(indices: &[usize]) -> Int {
    let table = FibTable::global();
    indices.iter().map(|&i| table.value(i)).sum()
}

/// Which form of the `F(m+n)` case law to evaluate.
///
/// All three share the same shape: with `M` the larger of `F(m)`, `F(n)`,
/// the result is either `M` or the next even-index Fibonacci `f(M) + M`,
/// decided by comparing a slack term against `f⁻¹(M − 1)`, the odd-index
/// Fibonacci just below `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FAddRule {
    /// Slack `m + n − 2M`. Agrees with `F(m + n)` everywhere.
    Exact,
    /// Slack `m + n − (F(m) + F(n))` when `F(m) ≥ F(n)` and
    /// `m + n − (F(m) − F(n))` otherwise, as the law is usually stated.
    Stated,
    /// The stated law with the second slack replaced by
    /// `m + n − (F(m) + F(n))`, making the two branches symmetric.
    StatedMirrored,
}

/// Value of the case law together with the branch (1–4) that produced it.
/// Branches 1–2 have `F(m) ≥ F(n)`, 3–4 have `F(n) > F(m)`; odd branches
/// step up to the next even-index Fibonacci.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FAddOutcome {
    pub value: Int,
    pub case: u8,
}

pub fn f_add_with(m: &Int, n: &Int, rule: FAddRule) -> Result<FAddOutcome> {
    let fm = fibfloor(m)?;
    let fn_ = fibfloor(n)?;
    let sum = m + n;
    let (big, first_case) = if fm >= fn_ { (&fm, 1) } else { (&fn_, 3) };
    let slack = match (rule, first_case) {
        (FAddRule::Exact, _) => &sum - big * 2,
        (FAddRule::Stated, 3) => &sum - (&fm - &fn_),
        (_, _) => &sum - (&fm + &fn_),
    };
    let below = f_inverse(&(big - 1)).ok_or_else(|| domain(format!("no preimage of {} under f", big - 1)))?;
    Ok(if slack >= below {
        FAddOutcome {
            value: beatty_f(big) + big,
            case: first_case,
        }
    } else {
        FAddOutcome {
            value: big.clone(),
            case: first_case + 1,
        }
    })
}

/// `F(m + n)` through the case law on `F(m)` and `F(n)`.
pub fn f_add(m: &Int, n: &Int) -> Result<Int> {
    f_add_with(m, n, FAddRule::Exact).map(|o| o.value)
}
