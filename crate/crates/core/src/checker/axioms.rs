//! The Beatty function against an independent floor, and its basic laws.

use crate::int::Int;
use crate::kernel::{self, surd_sign};

use super::oracle::{floor_phi_convergent, random_int};
use super::{ints, sweep, CheckReport, CheckSpec};

/// Bit length of random samples.
pub const RANDOM_BITS: u64 = 256;

/// A candidate interpretation of `f`. The laws are checked against a
/// model so that faults can be injected into the checker's own tests.
pub trait Model: Sync {
    fn f(&self, x: &Int) -> Int;

    fn f_inverse(&self, y: &Int) -> Option<Int> {
        let base = kernel::beatty_f(y) - y;
        (-1..=2).map(|k| &base + k).find(|x| &self.f(x) == y)
    }

    fn fbar_inverse(&self, y: &Int) -> Option<Int> {
        let base = y * 2 - kernel::beatty_f(y) - 1;
        (-1..=2).map(|k| &base + k).find(|x| &(self.f(x) + x) == y)
    }
}

/// The library's own `f`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Kernel;

impl Model for Kernel {
    fn f(&self, x: &Int) -> Int {
        kernel::beatty_f(x)
    }

    fn f_inverse(&self, y: &Int) -> Option<Int> {
        kernel::f_inverse(y)
    }

    fn fbar_inverse(&self, y: &Int) -> Option<Int> {
        kernel::fbar_inverse(y)
    }
}

/// `beatty_f(x)` equals the convergent-bound floor for `|x| ≤ bound` and
/// for `trials` random values.
pub fn beatty_oracle(bound: i64, trials: u64, spec: &CheckSpec) -> CheckReport {
    let mut t = sweep(-bound..=bound, |x, t| {
        let x = Int::from(x);
        t.check(kernel::beatty_f(&x) == floor_phi_convergent(&x), || vec![x.clone()]);
    });
    let mut rng = spec.rng("beatty-oracle");
    let samples: Vec<Int> = (0..trials).map(|_| random_int(&mut rng, RANDOM_BITS)).collect();
    t = t.merge(sweep(samples, |x, t| {
        t.check(kernel::beatty_f(&x) == floor_phi_convergent(&x), || vec![x.clone()]);
    }));
    t.report("f(x) = ⌊φx⌋ against convergent bounds")
}

pub fn check_beatty_oracle(spec: &CheckSpec) -> CheckReport {
    let mut parts = vec![beatty_oracle(spec.bound(), spec.random_trials, spec)];
    let mut notes = vec![];
    // 4φ = 2 + 2√5 and 4φ² = 6 + 2√5
    let (phi, phi_sq) = ((2, 2), (6, 2));
    let golden = surd_sign(&Int::from(phi_sq.0 - phi.0 - 4), &Int::from(phi_sq.1 - phi.1));
    let printed = surd_sign(&Int::from(phi_sq.0 + phi.0 + 4), &Int::from(phi_sq.1 + phi.1));
    notes.push(format!(
        "φ = (1+√5)/2 is a root of x² − x − 1 (value sign {golden}); x² + x + 1 has discriminant −3 and no real root"
    ));
    if spec.literal {
        notes.push(format!(
            "literal: x² + x + 1 at φ has sign {printed}, so φ is not its root"
        ));
        parts.push(literal_polynomial(golden, printed));
    }
    let mut r = CheckReport::combine(&spec.name, parts);
    r.notes.extend(notes);
    r
}

fn literal_polynomial(golden: i32, printed: i32) -> CheckReport {
    let mut t = super::Tally::default();
    t.check(golden == 0 && printed > 0, || ints(&[golden as i64, printed as i64]));
    t.report("golden ratio polynomial")
}

/// `f(x + y) − f(x) − f(y) ∈ {0, 1}` for all `|x|, |y| ≤ bound`.
pub fn additivity(model: &impl Model, bound: i64) -> CheckReport {
    let table: Vec<Int> = (-2 * bound..=2 * bound).map(|x| model.f(&Int::from(x))).collect();
    let at = |x: i64| &table[(x + 2 * bound) as usize];
    sweep(-bound..=bound, |x, t| {
        let fx = at(x);
        for y in -bound..=bound {
            let gap = at(x + y) - fx - at(y);
            t.check(gap == 0 || gap == 1, || ints(&[x, y]));
        }
    })
    .report("additivity f(x+y) − f(x) − f(y) ∈ {0, 1}")
}

/// `f(−x) = −f(x) − 1` for `x ≠ 0`; at `0` the value is `f(0) = 0`.
pub fn reflection(model: &impl Model, xs: &[Int]) -> CheckReport {
    let mut r = sweep(xs, |x, t| {
        let ok = if x.is_zero() {
            model.f(x).is_zero()
        } else {
            model.f(&-x) == -model.f(x) - 1
        };
        t.check(ok, || vec![x.clone()]);
    })
    .report("reflection f(−x) = −f(x) − 1");
    if xs.iter().any(Int::is_zero) {
        r.notes
            .push("reflection: x = 0 is exempt, f(−0) = f(0) = 0 rather than −1".into());
    }
    r
}

/// `f(f(x)) = f(x) + x − 1` for `x ≠ 0` and `f(f(x) + x) = 2f(x) + x`.
pub fn iteration(model: &impl Model, xs: &[Int]) -> CheckReport {
    let mut r = sweep(xs, |x, t| {
        let fx = model.f(x);
        let first = if x.is_zero() {
            model.f(&fx).is_zero()
        } else {
            model.f(&fx) == &fx + x - 1
        };
        let second = model.f(&(&fx + x)) == &fx * 2 + x;
        t.check(first && second, || vec![x.clone()]);
    })
    .report("iteration f(f(x)) = f(x) + x − 1, f(f(x) + x) = 2f(x) + x");
    if xs.iter().any(Int::is_zero) {
        r.notes
            .push("iteration: x = 0 is exempt from the first identity, f(f(0)) = 0 rather than −1".into());
    }
    r
}

/// Each `x ∉ {0, −1}` lies in exactly one of the ranges of `f` and `f̄`;
/// `0` lies in both and `−1` in neither.
pub fn partition(model: &impl Model, xs: &[Int]) -> CheckReport {
    let mut r = sweep(xs, |x, t| {
        let in_f = model.f_inverse(x).is_some_and(|y| &model.f(&y) == x);
        let in_fbar = model.fbar_inverse(x).is_some_and(|y| &(model.f(&y) + &y) == x);
        let ok = if x.is_zero() {
            in_f && in_fbar
        } else if *x == -1 {
            !in_f && !in_fbar
        } else {
            in_f != in_fbar
        };
        t.check(ok, || vec![x.clone()]);
    })
    .report("partition of the integers by the ranges of f and f̄");
    if xs.iter().any(Int::is_zero) {
        r.notes
            .push("partition: x = 0 is exempt, it is both f(0) and f̄(0)".into());
    }
    if xs.iter().any(|x| *x == -1) {
        r.notes.push(
            "partition: x = −1 is exempt, it is in neither range since f(0) = 0 breaks the reflection f(−y) = −f(y) − 1".into(),
        );
    }
    r
}

/// The basic laws of `f` for a given model.
pub fn basic_axioms_for(model: &impl Model, spec: &CheckSpec) -> CheckReport {
    let bound = spec.bound();
    let mut xs: Vec<Int> = (-bound..=bound).map(Int::from).collect();
    let mut rng = spec.rng("singles");
    xs.extend((0..spec.random_trials).map(|_| random_int(&mut rng, RANDOM_BITS)));

    let mut add = additivity(model, bound);
    let mut rng = spec.rng("pairs");
    let pairs: Vec<(Int, Int)> = (0..spec.random_trials)
        .map(|_| (random_int(&mut rng, RANDOM_BITS), random_int(&mut rng, RANDOM_BITS)))
        .collect();
    let random = sweep(pairs, |(x, y), t| {
        let gap = model.f(&(&x + &y)) - model.f(&x) - model.f(&y);
        t.check(gap == 0 || gap == 1, || vec![x.clone(), y.clone()]);
    })
    .report("additivity on random pairs");
    add = CheckReport::combine("additivity", vec![add, random]);

    CheckReport::combine(
        &spec.name,
        vec![
            add,
            reflection(model, &xs),
            iteration(model, &xs),
            partition(model, &xs),
        ],
    )
}

pub fn check_basic_axioms(spec: &CheckSpec) -> CheckReport {
    let mut r = basic_axioms_for(&Kernel, spec);
    if spec.literal {
        r.notes.extend(printed_failures(&Kernel, spec.bound()));
    }
    r
}

/// Points of `|x| ≤ bound` where the unexempted forms fail.
pub fn printed_failures(model: &impl Model, bound: i64) -> Vec<String> {
    let mut reflection = Vec::new();
    let mut iteration = Vec::new();
    let mut partition = Vec::new();
    for x in -bound..=bound {
        let xi = Int::from(x);
        let fx = model.f(&xi);
        if model.f(&-&xi) != -&fx - 1 {
            reflection.push(x);
        }
        if model.f(&fx) != &fx + &xi - 1 {
            iteration.push(x);
        }
        let in_f = model.f_inverse(&xi).is_some();
        let in_fbar = model.fbar_inverse(&xi).is_some();
        if in_f == in_fbar {
            partition.push(x);
        }
    }
    [
        ("f(−x) = −f(x) − 1", reflection),
        ("f(f(x)) = f(x) + x − 1", iteration),
        ("exactly one of x = f(y), x = f̄(y)", partition),
    ]
    .into_iter()
    .map(|(law, at)| format!("literal: {law} without exemptions fails for |x| ≤ {bound} at x ∈ {at:?}"))
    .collect()
}
