//! Exhaustive and randomized verification of the laws the library relies on.
//!
//! Every property runs over an exhaustive range plus seeded random samples
//! and yields a [`CheckReport`]. Suites combine property reports. Ranges are
//! sharded with rayon; tallies merge by summing counts and keeping the
//! canonically smallest counterexamples, so reports do not depend on
//! scheduling.
//!
//! Literal mode additionally evaluates printed variants of a few laws that
//! are known to be wrong as stated. Their mismatches are reported as notes,
//! never as counterexamples.

pub mod axioms;
pub mod decision;
pub mod fibs;
pub mod intervals;
pub mod oracle;
pub mod order;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::int::Int;

/// Counterexamples kept per report; the total is recorded in a note.
pub const KEEP: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSpec {
    pub name: String,
    pub exhaustive_bound: u64,
    pub random_trials: u64,
    pub seed: u64,
    /// Also evaluate the printed forms of the amended laws.
    pub literal: bool,
}

impl CheckSpec {
    pub fn new(name: &str, exhaustive_bound: u64, random_trials: u64, seed: u64) -> CheckSpec {
        CheckSpec {
            name: name.to_owned(),
            exhaustive_bound,
            random_trials,
            seed,
            literal: false,
        }
    }

    pub fn literal(mut self, on: bool) -> CheckSpec {
        self.literal = on;
        self
    }

    pub fn named(&self, name: &str) -> CheckSpec {
        CheckSpec {
            name: name.to_owned(),
            ..self.clone()
        }
    }

    /// Bound as a signed machine integer.
    pub fn bound(&self) -> i64 {
        i64::try_from(self.exhaustive_bound).unwrap_or(i64::MAX)
    }

    /// Generator for one named stream of this spec.
    pub fn rng(&self, stream: &str) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ fnv1a(&self.name) ^ fnv1a(stream).rotate_left(32))
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ReportWire", try_from = "ReportWire")]
pub struct CheckReport {
    pub name: String,
    pub instances: u64,
    /// Failing inputs in lexicographic order, at most [`KEEP`].
    pub counterexamples: Vec<Vec<Int>>,
    pub notes: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ReportWire {
    name: String,
    instances: u64,
    counterexamples: Vec<Vec<Int>>,
    notes: Vec<String>,
    pass: bool,
}

impl From<CheckReport> for ReportWire {
    fn from(r: CheckReport) -> ReportWire {
        ReportWire {
            pass: r.pass(),
            name: r.name,
            instances: r.instances,
            counterexamples: r.counterexamples,
            notes: r.notes,
        }
    }
}

impl TryFrom<ReportWire> for CheckReport {
    type Error = String;

    fn try_from(w: ReportWire) -> Result<CheckReport, String> {
        if w.pass != w.counterexamples.is_empty() {
            return Err("`pass` must hold exactly when `counterexamples` is empty".into());
        }
        Ok(CheckReport {
            name: w.name,
            instances: w.instances,
            counterexamples: w.counterexamples,
            notes: w.notes,
        })
    }
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// One report for a suite made of several property reports. Each part
    /// contributes a coverage note.
    pub fn combine(name: &str, parts: Vec<CheckReport>) -> CheckReport {
        let mut kept = BTreeSet::new();
        let mut notes = Vec::new();
        let mut instances = 0;
        for p in parts {
            instances += p.instances;
            let status = if p.pass() { "ok" } else { "FAILED" };
            notes.push(format!("{}: {} instances, {status}", p.name, p.instances));
            notes.extend(p.notes);
            kept.extend(p.counterexamples);
        }
        CheckReport {
            name: name.to_owned(),
            instances,
            counterexamples: kept.into_iter().take(KEEP).collect(),
            notes,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    pub fn from_json(s: &str) -> Result<CheckReport, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Running outcome of one property.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    instances: u64,
    failed: u64,
    kept: BTreeSet<Vec<Int>>,
}

impl Tally {
    pub(crate) fn check(&mut self, ok: bool, input: impl FnOnce() -> Vec<Int>) {
        self.instances += 1;
        if !ok {
            self.fail(input());
        }
    }

    fn fail(&mut self, input: Vec<Int>) {
        self.failed += 1;
        self.kept.insert(input);
        if self.kept.len() > KEEP {
            self.kept.pop_last();
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.failed += other.failed;
        for k in other.kept {
            self.kept.insert(k);
            if self.kept.len() > KEEP {
                self.kept.pop_last();
            }
        }
        self
    }

    pub(crate) fn report(self, name: &str) -> CheckReport {
        let mut notes = Vec::new();
        if self.failed as usize > self.kept.len() {
            notes.push(format!(
                "{name}: {} counterexamples in total, the first {} kept",
                self.failed,
                self.kept.len()
            ));
        }
        CheckReport {
            name: name.to_owned(),
            instances: self.instances,
            counterexamples: self.kept.into_iter().collect(),
            notes,
        }
    }
}

/// Runs `body` over `items` in parallel, one tally per worker.
pub(crate) fn sweep<I, F>(items: I, body: F) -> Tally
where
    I: IntoParallelIterator,
    F: Fn(I::Item, &mut Tally) + Sync + Send,
{
    items
        .into_par_iter()
        .fold(Tally::default, |mut t, x| {
            body(x, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

pub(crate) fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub type Suite = fn(&CheckSpec) -> CheckReport;

/// Every suite, in reporting order.
pub const SUITES: [(&str, Suite); 6] = [
    ("beatty-oracle", axioms::check_beatty_oracle),
    ("basic-axioms", axioms::check_basic_axioms),
    ("order-and-density", order::check_order_and_density),
    ("fibonacci-lemmas", fibs::check_fib_lemmas),
    ("extrema", intervals::check_extrema),
    ("decision-engine", decision::check_decision_engine),
];

pub fn check_all(spec: &CheckSpec) -> Vec<CheckReport> {
    SUITES.iter().map(|(name, suite)| suite(&spec.named(name))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_round_trip() {
        let r = CheckReport {
            name: "x".into(),
            instances: 3,
            counterexamples: vec![vec![Int::from(1), "123456789012345678901234567890".parse().unwrap()]],
            notes: vec!["n".into()],
        };
        let text = r.to_json();
        assert!(text.contains("\"pass\":false"));
        assert!(text.contains("123456789012345678901234567890]"));
        assert_eq!(CheckReport::from_json(&text).unwrap(), r);
        let bad = text.replace("\"pass\":false", "\"pass\":true");
        assert!(CheckReport::from_json(&bad).is_err());
    }

    #[test]
    fn tally_keeps_smallest() {
        let t = sweep(0..1000i64, |x, t: &mut Tally| t.check(x % 3 != 0, || ints(&[999 - x])));
        let r = t.report("p");
        assert_eq!(r.instances, 1000);
        assert_eq!(r.counterexamples.len(), KEEP);
        assert_eq!(r.counterexamples[0], ints(&[0]));
        assert_eq!(r.counterexamples[1], ints(&[3]));
        assert!(r.notes[0].contains("334 counterexamples"));
    }

    #[test]
    fn streams_differ_and_repeat() {
        use rand::Rng;
        let s = CheckSpec::new("a", 1, 1, 42);
        let x: u64 = s.rng("one").gen();
        assert_eq!(x, s.rng("one").gen::<u64>());
        assert_ne!(x, s.rng("two").gen::<u64>());
        assert_ne!(x, s.named("b").rng("one").gen::<u64>());
    }

    #[test]
    fn check_all_small_bound_passes() {
        let reports = check_all(&CheckSpec::new("all", 40, 30, 42).literal(true));
        assert_eq!(reports.len(), SUITES.len());
        for r in &reports {
            assert!(r.pass(), "{}: {:?}", r.name, r.counterexamples);
            assert!(r.instances > 0);
        }
        let again = check_all(&CheckSpec::new("all", 40, 30, 42).literal(true));
        assert_eq!(reports, again);
    }
}
