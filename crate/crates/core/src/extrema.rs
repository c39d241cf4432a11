//! Argmin and argmax of fractional parts `[φt]` over open integer intervals.
//!
//! For positive intervals the minimum is found by peeling Fibonacci floors
//! off both ends: while `F(b) ≤ a` both ends share the same Fibonacci floor,
//! which is removed and remembered; once `F(b) > a` the answer is `F(b)`
//! plus everything removed so far. The maximum works the same way with `G`.
//! Negative intervals reduce to positive ones through `[φ(−t)] = 1 − [φt]`.
//!
//! Constrained variants (least fractional part above `[φc]`, greatest below
//! `[φd]`) translate the interval by `c` (resp. `d`): for `[φt] > [φc]` we
//! have `[φ(t−c)] = [φt] − [φc]`, and every other point wraps around above.

use std::cmp::Ordering;

use crate::error::{domain, Result};
use crate::fib::{fibfloor, g_func};
use crate::int::Int;
use crate::kernel::frac_compare;

/// The open interval `(lo, hi)` of integers. Always has a nonempty interior.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Int,
    hi: Int,
}

impl Interval {
    pub fn new(lo: Int, hi: Int) -> Result<Interval> {
        if &hi - &lo < Int::from(2) {
            return Err(domain(format!("interval ({lo}, {hi}) has no integer interior")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> &Int {
        &self.lo
    }

    pub fn hi(&self) -> &Int {
        &self.hi
    }

    /// Number of interior points.
    pub fn width(&self) -> Int {
        &self.hi - &self.lo - 1
    }

    pub fn contains(&self, t: &Int) -> bool {
        &self.lo < t && t < &self.hi
    }

    /// Interior points in increasing order.
    pub fn points(&self) -> impl Iterator<Item = Int> + '_ {
        let mut next = &self.lo + 1;
        std::iter::from_fn(move || {
            if next < self.hi {
                let out = next.clone();
                next += 1;
                Some(out)
            } else {
                None
            }
        })
    }

    fn shifted(&self, by: &Int) -> Interval {
        Interval {
            lo: &self.lo - by,
            hi: &self.hi - by,
        }
    }

    fn reflected(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtremumKind {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Fast,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremumResult {
    pub point: Int,
    pub kind: ExtremumKind,
    pub method: Method,
}

fn better(kind: ExtremumKind, candidate: &Int, best: &Int) -> bool {
    let want = match kind {
        ExtremumKind::Min => Ordering::Less,
        ExtremumKind::Max => Ordering::Greater,
    };
    frac_compare(candidate, best) == want
}

/// Direct scan of every interior point.
pub fn brute_extremum(iv: &Interval, kind: ExtremumKind) -> Int {
    let mut points = iv.points();
    let mut best = points.next().expect("interval interior is nonempty");
    for t in points {
        if better(kind, &t, &best) {
            best = t;
        }
    }
    best
}

pub fn brute_arg_min(iv: &Interval) -> Int {
    brute_extremum(iv, ExtremumKind::Min)
}

pub fn brute_arg_max(iv: &Interval) -> Int {
    brute_extremum(iv, ExtremumKind::Max)
}

// The peeling loop on (a, b) with 0 ≤ a and b − a ≥ 2, run against the
// inclusive upper bound b − 1. `floor` is F for the minimum and G for the
// maximum.
fn peel(a: &Int, b: &Int, floor: fn(&Int) -> Result<Int>) -> Int {
    let mut lo = a.clone();
    let mut hi = b - 1;
    let mut offset = Int::ZERO;
    loop {
        let top = floor(&hi).expect("upper end stays positive");
        if top > lo {
            return top + offset;
        }
        // top ≤ lo < hi forces floor(lo) = top
        lo -= &top;
        hi -= &top;
        offset += &top;
    }
}

/// Argmin of `[φt]` over `(a, b)` for `0 < a`, `b − a ≥ 2`, by Fibonacci
/// peeling.
pub fn fast_argmin_positive(a: &Int, b: &Int) -> Result<Int> {
    check_positive(a, b)?;
    Ok(peel(a, b, fibfloor))
}

/// Argmax of `[φt]` over `(a, b)` for `0 < a`, `b − a ≥ 2`; the same peeling
/// with `G` in place of `F`.
pub fn fast_argmax_positive(a: &Int, b: &Int) -> Result<Int> {
    check_positive(a, b)?;
    Ok(peel(a, b, g_func))
}

fn check_positive(a: &Int, b: &Int) -> Result<()> {
    if !a.is_positive() || b - a < Int::from(2) {
        return Err(domain(format!(
            "fast extremum needs 0 < a and b − a ≥ 2, got ({a}, {b})"
        )));
    }
    Ok(())
}

/// Extremum finder. Intervals narrower than `brute_threshold` interior
/// points are scanned directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extrema {
    pub brute_threshold: u64,
}

impl Default for Extrema {
    fn default() -> Self {
        Extrema { brute_threshold: 64 }
    }
}

impl Extrema {
    pub fn with_threshold(brute_threshold: u64) -> Extrema {
        Extrema { brute_threshold }
    }

    fn use_brute(&self, iv: &Interval) -> bool {
        iv.width() < Int::from(self.brute_threshold)
    }

    pub fn arg_min(&self, iv: &Interval) -> ExtremumResult {
        self.extremum(iv, ExtremumKind::Min)
    }

    pub fn arg_max(&self, iv: &Interval) -> ExtremumResult {
        self.extremum(iv, ExtremumKind::Max)
    }

    pub fn extremum(&self, iv: &Interval, kind: ExtremumKind) -> ExtremumResult {
        if self.use_brute(iv) {
            return ExtremumResult {
                point: brute_extremum(iv, kind),
                kind,
                method: Method::Brute,
            };
        }
        let point = match kind {
            ExtremumKind::Min => self.fast_min(iv),
            ExtremumKind::Max => self.fast_max(iv),
        };
        ExtremumResult {
            point,
            kind,
            method: Method::Fast,
        }
    }

    fn fast_min(&self, iv: &Interval) -> Int {
        if !iv.lo.is_negative() {
            return peel(&iv.lo, &iv.hi, fibfloor);
        }
        if iv.hi.is_positive() {
            // [φ0] = 0 is the global minimum
            return Int::ZERO;
        }
        -self.arg_max(&iv.reflected()).point
    }

    fn fast_max(&self, iv: &Interval) -> Int {
        if !iv.lo.is_negative() {
            return peel(&iv.lo, &iv.hi, g_func);
        }
        if !iv.hi.is_positive() {
            return -self.arg_min(&iv.reflected()).point;
        }
        // 0 sits inside and never wins unless it is alone
        self.extremum_nonzero(iv, ExtremumKind::Max).unwrap_or(Int::ZERO)
    }

    /// Extremum over the interior with `0` excluded; `None` when `0` is the
    /// only interior point.
    pub fn extremum_nonzero(&self, iv: &Interval, kind: ExtremumKind) -> Option<Int> {
        if !iv.contains(&Int::ZERO) {
            return Some(self.extremum(iv, kind).point);
        }
        let left = Interval::new(iv.lo.clone(), Int::ZERO).ok();
        let right = Interval::new(Int::ZERO, iv.hi.clone()).ok();
        let l = left.map(|p| self.extremum(&p, kind).point);
        let r = right.map(|p| self.extremum(&p, kind).point);
        match (l, r) {
            (Some(l), Some(r)) => Some(if better(kind, &r, &l) { r } else { l }),
            (l, r) => l.or(r),
        }
    }

    /// Least fractional part among points with `[φt] > [φc]`.
    pub fn constrained_min(&self, iv: &Interval, c: &Int) -> Option<Int> {
        if frac_compare(&self.arg_max(iv).point, c) != Ordering::Greater {
            return None;
        }
        // t = c itself maps to 0 and must not compete
        self.extremum_nonzero(&iv.shifted(c), ExtremumKind::Min).map(|s| s + c)
    }

    /// Greatest fractional part among points with `[φt] < [φd]`.
    pub fn constrained_max(&self, iv: &Interval, d: &Int) -> Option<Int> {
        if frac_compare(&self.arg_min(iv).point, d) != Ordering::Less {
            return None;
        }
        self.extremum_nonzero(&iv.shifted(d), ExtremumKind::Max).map(|s| s + d)
    }

    /// Whether some `t` in the interval has `[φc] < [φt] < [φd]`.
    pub fn exists_in_box(&self, iv: &Interval, c: &Int, d: &Int) -> bool {
        self.constrained_min(iv, c)
            .is_some_and(|x| frac_compare(&x, d) == Ordering::Less)
    }

    /// Extremum over the points with `[φ above] < [φt] < [φ below]`, each
    /// bound optional.
    pub fn filtered(&self, iv: &Interval, kind: ExtremumKind, above: Option<&Int>, below: Option<&Int>) -> Option<Int> {
        match kind {
            ExtremumKind::Min => {
                let base = match above {
                    Some(c) => self.constrained_min(iv, c)?,
                    None => self.arg_min(iv).point,
                };
                match below {
                    Some(d) if frac_compare(&base, d) != Ordering::Less => None,
                    _ => Some(base),
                }
            }
            ExtremumKind::Max => {
                let base = match below {
                    Some(d) => self.constrained_max(iv, d)?,
                    None => self.arg_max(iv).point,
                };
                match above {
                    Some(c) if frac_compare(&base, c) != Ordering::Greater => None,
                    _ => Some(base),
                }
            }
        }
    }
}

/// Argmin of `[φt]` over the interior of `iv`.
pub fn arg_min_frac(iv: &Interval) -> Int {
    Extrema::default().arg_min(iv).point
}

/// Argmax of `[φt]` over the interior of `iv`.
pub fn arg_max_frac(iv: &Interval) -> Int {
    Extrema::default().arg_max(iv).point
}

pub fn constrained_min(iv: &Interval, c: &Int) -> Option<Int> {
    Extrema::default().constrained_min(iv, c)
}

pub fn constrained_max(iv: &Interval, d: &Int) -> Option<Int> {
    Extrema::default().constrained_max(iv, d)
}

pub fn exists_in_box(iv: &Interval, c: &Int, d: &Int) -> bool {
    Extrema::default().exists_in_box(iv, c, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn i(v: i64) -> Int {
        Int::from(v)
    }

    fn iv(lo: i64, hi: i64) -> Interval {
        Interval::new(i(lo), i(hi)).unwrap()
    }

    const FAST: Extrema = Extrema { brute_threshold: 0 };

    // filtered brute force, independent of the translation argument
    fn filtered_brute(lo: i64, hi: i64, kind: ExtremumKind, above: Option<i64>, below: Option<i64>) -> Option<Int> {
        let mut best: Option<Int> = None;
        for t in lo + 1..hi {
            let t = i(t);
            if above.is_some_and(|c| frac_compare(&t, &i(c)) != Ordering::Greater) {
                continue;
            }
            if below.is_some_and(|d| frac_compare(&t, &i(d)) != Ordering::Less) {
                continue;
            }
            if best.as_ref().is_none_or(|b| better(kind, &t, b)) {
                best = Some(t);
            }
        }
        best
    }

    #[test]
    fn interval_rejects_empty_interior() {
        assert!(Interval::new(i(3), i(4)).is_err());
        assert!(Interval::new(i(3), i(3)).is_err());
        assert!(Interval::new(i(5), i(2)).is_err());
        assert_eq!(iv(3, 5).width(), 1);
    }

    #[test]
    fn arg_min_examples() {
        for e in [Extrema::default(), FAST] {
            assert_eq!(e.arg_min(&iv(4, 12)).point, 5);
            assert_eq!(e.arg_min(&iv(-3, 3)).point, 0);
            assert_eq!(e.arg_min(&iv(6, 12)).point, 10);
        }
        assert_eq!(FAST.arg_min(&iv(4, 12)).method, Method::Fast);
        assert_eq!(Extrema::default().arg_min(&iv(4, 12)).method, Method::Brute);
    }

    #[test]
    fn arg_max_examples() {
        for e in [Extrema::default(), FAST] {
            assert_eq!(e.arg_max(&iv(4, 12)).point, 8);
            assert_eq!(e.arg_max(&iv(0, 4)).point, 3);
            // fp(−5) ≈ .910 beats fp(−8) ≈ .056
            assert_eq!(e.arg_max(&iv(-13, -4)).point, -5);
            assert_eq!(e.arg_max(&iv(-1, 1)).point, 0);
        }
        assert_eq!(brute_arg_max(&iv(-13, -4)), -5);
    }

    #[test]
    fn fast_positive_examples() {
        assert_eq!(fast_argmin_positive(&i(4), &i(12)).unwrap(), 5);
        assert_eq!(fast_argmin_positive(&i(6), &i(12)).unwrap(), 10);
        assert_eq!(fast_argmin_positive(&i(4), &i(14)).unwrap(), 13);
        assert_eq!(brute_arg_min(&iv(4, 14)), 13);
        // the upper end itself is never returned
        assert_eq!(fast_argmin_positive(&i(4), &i(13)).unwrap(), 5);
        assert!(fast_argmin_positive(&i(0), &i(5)).is_err());
        assert!(fast_argmin_positive(&i(4), &i(5)).is_err());
        assert!(fast_argmax_positive(&i(-1), &i(5)).is_err());
    }

    #[test]
    fn constrained_examples() {
        for e in [Extrema::default(), FAST] {
            assert_eq!(e.constrained_min(&iv(4, 12), &i(2)), Some(i(7)));
            assert_eq!(e.constrained_min(&iv(4, 12), &i(8)), None);
            assert_eq!(
                e.constrained_min(&iv(-3, 3), &i(0)),
                filtered_brute(-3, 3, ExtremumKind::Min, Some(0), None)
            );
            assert_eq!(e.constrained_min(&iv(-3, 3), &i(0)), Some(i(2)));
            assert_eq!(e.constrained_max(&iv(4, 12), &i(3)), Some(i(11)));
            // nothing in 5..11 lies below fp(5) ≈ .090
            assert_eq!(e.constrained_max(&iv(4, 12), &i(5)), None);
            assert_eq!(filtered_brute(4, 12, ExtremumKind::Max, None, Some(5)), None);
            assert_eq!(e.constrained_max(&iv(0, 4), &i(1)), Some(i(2)));
            assert!(e.exists_in_box(&iv(4, 12), &i(2), &i(1)));
            assert!(!e.exists_in_box(&iv(4, 12), &i(8), &i(1)));
            assert!(!e.exists_in_box(&iv(4, 12), &i(6), &i(6)));
        }
    }

    #[test]
    fn fast_matches_brute_exhaustively() {
        for lo in -120i64..120 {
            for hi in lo + 2..=120 {
                let v = iv(lo, hi);
                assert_eq!(FAST.arg_min(&v).point, brute_arg_min(&v), "min {v:?}");
                assert_eq!(FAST.arg_max(&v).point, brute_arg_max(&v), "max {v:?}");
            }
        }
    }

    #[test]
    fn constrained_matches_filtered_brute() {
        for lo in -40i64..40 {
            for hi in lo + 2..=40 {
                for c in -12i64..=12 {
                    let v = iv(lo, hi);
                    assert_eq!(
                        FAST.constrained_min(&v, &i(c)),
                        filtered_brute(lo, hi, ExtremumKind::Min, Some(c), None)
                    );
                    assert_eq!(
                        FAST.constrained_max(&v, &i(c)),
                        filtered_brute(lo, hi, ExtremumKind::Max, None, Some(c))
                    );
                }
            }
        }
    }

    #[test]
    fn filtered_matches_brute() {
        for (lo, hi) in [(-20, 30), (4, 12), (-9, -2), (100, 190)] {
            for c in [-7, -1, 0, 2, 5, 8, 13] {
                for d in [-6, 1, 3, 8, 21] {
                    let v = iv(lo, hi);
                    for kind in [ExtremumKind::Min, ExtremumKind::Max] {
                        assert_eq!(
                            FAST.filtered(&v, kind, Some(&i(c)), Some(&i(d))),
                            filtered_brute(lo, hi, kind, Some(c), Some(d)),
                            "{kind:?} ({lo},{hi}) c={c} d={d}"
                        );
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn fast_matches_brute_on_far_windows(lo in -1_000_000_000_000i64..1_000_000_000_000, width in 2i64..600) {
            let v = iv(lo, lo + width);
            prop_assert_eq!(FAST.arg_min(&v).point, brute_arg_min(&v));
            prop_assert_eq!(FAST.arg_max(&v).point, brute_arg_max(&v));
        }

        #[test]
        fn translation_law(lo in -500i64..500, width in 2i64..80, c in -500i64..500) {
            // frac(t − c) = frac(t) − frac(c) exactly when frac(t) > frac(c):
            // then t − c keeps the order of t relative to every other such point
            let v = iv(lo, lo + width);
            let c = i(c);
            let above: Vec<Int> = v.points().filter(|t| frac_compare(t, &c) == Ordering::Greater).collect();
            for pair in above.windows(2) {
                let (a, b) = (&pair[0], &pair[1]);
                prop_assert_eq!(frac_compare(a, b), frac_compare(&(a - &c), &(b - &c)));
            }
            for t in v.points().filter(|t| frac_compare(t, &c) == Ordering::Less) {
                for a in &above {
                    prop_assert_eq!(frac_compare(&(a - &c), &(&t - &c)), Ordering::Less);
                }
            }
        }
    }
}
