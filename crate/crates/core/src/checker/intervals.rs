//! Interval extrema: fast algorithms against direct scans, constrained
//! extrema against filtered scans, and the translation law behind them.

use std::cmp::Ordering;

use rand::Rng;

use crate::extrema::{brute_arg_max, brute_arg_min, fast_argmin_positive, Extrema, Interval};
use crate::fib::fibfloor;
use crate::int::Int;
use crate::kernel::{beatty_f, frac_compare};

use super::{ints, sweep, CheckReport, CheckSpec};

/// Extrema with every interval taking the fast path.
pub const FAST: Extrema = Extrema { brute_threshold: 0 };

/// Largest `|c|`, `|d|` used by the constrained sweep of the suite.
pub const CONSTRAINT_SPAN: i64 = 50;

// Running argmin/argmax of [φt] as t increases.
struct Running {
    min: Option<Int>,
    max: Option<Int>,
}

impl Running {
    fn new() -> Running {
        Running { min: None, max: None }
    }

    fn push(&mut self, t: &Int) {
        if self.min.as_ref().is_none_or(|m| frac_compare(t, m) == Ordering::Less) {
            self.min = Some(t.clone());
        }
        if self
            .max
            .as_ref()
            .is_none_or(|m| frac_compare(t, m) == Ordering::Greater)
        {
            self.max = Some(t.clone());
        }
    }
}

/// `fast_argmin_positive(a, b)` equals the scanned argmin for all
/// `0 < a < b ≤ bound` with `b − a ≥ 2`.
pub fn fast_argmin_exhaustive(bound: i64) -> CheckReport {
    sweep(1..=bound, |a, t| {
        let ai = Int::from(a);
        let mut run = Running::new();
        for b in a + 2..=bound {
            run.push(&Int::from(b - 1));
            let fast = fast_argmin_positive(&ai, &Int::from(b)).ok();
            t.check(fast == run.min, || ints(&[a, b]));
        }
    })
    .report("Fibonacci peeling argmin on positive intervals")
}

/// `fast_argmin_positive` on `trials` random intervals with
/// `1 ≤ lo ≤ max_lo` and `2 ≤ width ≤ max_width`, each window scanned.
pub fn fast_argmin_random(trials: u64, max_lo: i64, max_width: i64, spec: &CheckSpec) -> CheckReport {
    let mut rng = spec.rng("wide-positive");
    let windows: Vec<(i64, i64)> = (0..trials)
        .map(|_| {
            let lo = rng.gen_range(1..=max_lo);
            (lo, lo + rng.gen_range(2..=max_width))
        })
        .collect();
    sweep(windows, |(lo, hi), t| {
        let iv = Interval::new(Int::from(lo), Int::from(hi)).expect("width ≥ 2");
        let fast = fast_argmin_positive(iv.lo(), iv.hi()).ok();
        t.check(fast == Some(brute_arg_min(&iv)), || ints(&[lo, hi]));
    })
    .report("Fibonacci peeling argmin on random wide positive intervals")
}

/// Fast argmin and argmax equal scans for all `−bound ≤ lo < hi ≤ bound`.
pub fn extrema_exhaustive(bound: i64) -> CheckReport {
    sweep(-bound..=bound, |lo, t| {
        let loi = Int::from(lo);
        let mut run = Running::new();
        for hi in lo + 2..=bound {
            run.push(&Int::from(hi - 1));
            let iv = Interval::new(loi.clone(), Int::from(hi)).expect("width ≥ 2");
            let ok = Some(FAST.arg_min(&iv).point) == run.min && Some(FAST.arg_max(&iv).point) == run.max;
            t.check(ok, || ints(&[lo, hi]));
        }
    })
    .report("argmin/argmax of fractional parts on signed intervals")
}

/// Fast extrema on `trials` random signed windows of width at most
/// `max_width`, centred anywhere in `±max_lo`.
pub fn extrema_random(trials: u64, max_lo: i64, max_width: i64, spec: &CheckSpec) -> CheckReport {
    let mut rng = spec.rng("wide-signed");
    let windows: Vec<(i64, i64)> = (0..trials)
        .map(|k| {
            // every fourth window straddles zero
            let lo = if k % 4 == 0 {
                -rng.gen_range(1..max_width)
            } else {
                rng.gen_range(-max_lo..=max_lo)
            };
            (lo, lo + rng.gen_range(2..=max_width))
        })
        .collect();
    sweep(windows, |(lo, hi), t| {
        let iv = Interval::new(Int::from(lo), Int::from(hi)).expect("width ≥ 2");
        let ok = FAST.arg_min(&iv).point == brute_arg_min(&iv) && FAST.arg_max(&iv).point == brute_arg_max(&iv);
        t.check(ok, || ints(&[lo, hi]));
    })
    .report("argmin/argmax on random wide signed intervals")
}

/// `constrained_min(iv, c)` and `constrained_max(iv, c)` equal filtered
/// scans, emptiness included, for all `−bound ≤ lo < hi ≤ bound` and
/// `|c| ≤ span`.
pub fn constrained_exhaustive(bound: i64, span: i64) -> CheckReport {
    let starts: Vec<(i64, i64)> = (-bound..=bound)
        .flat_map(|lo| (-span..=span).map(move |c| (lo, c)))
        .collect();
    sweep(starts, |(lo, c), t| {
        let (loi, ci) = (Int::from(lo), Int::from(c));
        let mut above = Running::new();
        let mut below = Running::new();
        for hi in lo + 2..=bound {
            let p = Int::from(hi - 1);
            match frac_compare(&p, &ci) {
                Ordering::Greater => above.push(&p),
                Ordering::Less => below.push(&p),
                Ordering::Equal => {}
            }
            let iv = Interval::new(loi.clone(), Int::from(hi)).expect("width ≥ 2");
            let ok = FAST.constrained_min(&iv, &ci) == above.min && FAST.constrained_max(&iv, &ci) == below.max;
            t.check(ok, || ints(&[lo, hi, c]));
        }
    })
    .report("constrained extrema against filtered scans")
}

/// `exists_in_box(iv, c, d)` on random boxes against a scan.
pub fn box_random(trials: u64, bound: i64, spec: &CheckSpec) -> CheckReport {
    let mut rng = spec.rng("boxes");
    let boxes: Vec<[i64; 4]> = (0..trials)
        .map(|_| {
            let lo = rng.gen_range(-bound..bound - 1);
            let hi = rng.gen_range(lo + 2..=bound);
            [lo, hi, rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)]
        })
        .collect();
    sweep(boxes, |[lo, hi, c, d], t| {
        let iv = Interval::new(Int::from(lo), Int::from(hi)).expect("width ≥ 2");
        let (ci, di) = (Int::from(c), Int::from(d));
        let scan = iv
            .points()
            .any(|x| frac_compare(&ci, &x) == Ordering::Less && frac_compare(&x, &di) == Ordering::Less);
        t.check(FAST.exists_in_box(&iv, &ci, &di) == scan, || ints(&[lo, hi, c, d]));
    })
    .report("box existence against scans")
}

/// `[φc] < [φt]` implies `f(t − c) = f(t) − f(c)`, i.e. `[φ(t−c)] = [φt] − [φc]`,
/// on random pairs; and the converse.
pub fn translation_law(trials: u64, spec: &CheckSpec) -> CheckReport {
    let mut rng = spec.rng("translation");
    let pairs: Vec<(i64, i64)> = (0..trials)
        .map(|_| {
            (
                rng.gen_range(-1_000_000_000..=1_000_000_000),
                rng.gen_range(-1_000_000_000..=1_000_000_000),
            )
        })
        .collect();
    sweep(pairs, |(t_, c), t| {
        let (ti, ci) = (Int::from(t_), Int::from(c));
        let above = frac_compare(&ci, &ti) == Ordering::Less;
        let exact = beatty_f(&(&ti - &ci)) == beatty_f(&ti) - beatty_f(&ci);
        t.check(above == exact, || ints(&[t_, c]));
    })
    .report("translation law [φ(t−c)] = [φt] − [φc] exactly when [φc] < [φt]")
}

/// The peeling loop with the literal update `a_{n+1} = a − F(a_n)` and/or
/// the upper bound `b` itself in place of `b − 1`.
pub fn printed_peeling(a: i64, b: i64, subscript_typo: bool, closed_top: bool) -> Option<i64> {
    let f = |x: i64| fibfloor(&Int::from(x)).ok()?.as_i64();
    let (mut an, mut bn) = (a, if closed_top { b } else { b - 1 });
    let mut sum = 0;
    loop {
        let top = f(bn)?;
        if top > an {
            return Some(top + sum);
        }
        let fa = f(an)?;
        sum += fa;
        an = if subscript_typo { a - fa } else { an - fa };
        bn -= top;
    }
}

fn printed_mismatches(bound: i64, subscript_typo: bool, closed_top: bool) -> (u64, Option<(i64, i64)>) {
    let mut count = 0;
    let mut first = None;
    for a in 1..=bound {
        for b in a + 2..=bound {
            let iv = Interval::new(Int::from(a), Int::from(b)).expect("width ≥ 2");
            let got = printed_peeling(a, b, subscript_typo, closed_top);
            if got.map(Int::from) != Some(brute_arg_min(&iv)) {
                count += 1;
                first.get_or_insert((a, b));
            }
        }
    }
    (count, first)
}

pub fn check_extrema(spec: &CheckSpec) -> CheckReport {
    let b = spec.bound();
    let trials = spec.random_trials;
    let span = CONSTRAINT_SPAN.min(b);
    let mut r = CheckReport::combine(
        &spec.name,
        vec![
            fast_argmin_exhaustive(b),
            fast_argmin_random(trials, 1_000_000_000_000, 10_000, spec),
            extrema_exhaustive(b),
            extrema_random(trials, 1_000_000_000_000, 2_000, spec),
            constrained_exhaustive(b, span),
            box_random(trials, b.max(2), spec),
            translation_law(trials, spec),
        ],
    );
    r.notes
        .push("peeling runs against the inclusive upper end b − 1 with a_{n+1} = a_n − F(a_n)".into());
    if spec.literal {
        let lb = b.min(300);
        for (typo, closed, what) in [
            (true, false, "a_{n+1} = a − F(a_n)"),
            (false, true, "upper end b instead of b − 1"),
        ] {
            let (count, first) = printed_mismatches(lb, typo, closed);
            let first = first.map_or("none".to_owned(), |(a, b)| format!("({a}, {b})"));
            r.notes.push(format!(
                "literal: peeling with {what} mismatches the scanned argmin on {count} intervals with 0 < a < b ≤ {lb}; first at {first}"
            ));
        }
    }
    r
}
